#ifndef KW4_SCALAR_HPP
#define KW4_SCALAR_HPP

#include <cmath>
#include <complex>
#include <sstream>
#include <string>

#include "kw4/gaussian.hpp"
#include "kw4/parampoly.hpp"
#include "kw4/rational.hpp"

namespace kw4 {

/// Floating backend for irrational parameters (e.g. sqrt(x/2) targets).
using FloatComplex = std::complex<double>;

/// Uniform interface over the coefficient rings the tensor code runs on:
/// Rational, GaussianRational, ParamPoly, double, FloatComplex.
template <typename S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static Rational from_gaussian(const GaussianRational& c) {
    if (c.im != 0) throw std::domain_error("reality violation: complex coefficient");
    return c.re;
  }
  static Rational from_double(double) { throw std::domain_error("exact backend cannot hold floats"); }
  static double to_double(const Rational& a) { return static_cast<double>(a); }
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_rational(const Rational& q) { return q; }
  static bool is_zero(const Rational& a) { return a == 0; }
  static Rational conj(const Rational& a) { return a; }
  static double approx_abs(const Rational& a) { return std::abs(static_cast<double>(a)); }
  static std::string str(const Rational& a) { return rational_to_string(a); }
};

template <>
struct scalar_traits<GaussianRational> {
  static constexpr bool exact = true;
  static GaussianRational from_gaussian(const GaussianRational& c) { return c; }
  static GaussianRational from_double(double) {
    throw std::domain_error("exact backend cannot hold floats");
  }
  static double to_double(const GaussianRational& a) {
    if (a.im != 0) throw std::domain_error("not a real scalar");
    return static_cast<double>(a.re);
  }
  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return GaussianRational(1); }
  static GaussianRational from_rational(const Rational& q) { return GaussianRational(q); }
  static bool is_zero(const GaussianRational& a) { return a.is_zero(); }
  static GaussianRational conj(const GaussianRational& a) { return a.conj(); }
  static double approx_abs(const GaussianRational& a) {
    return std::sqrt(static_cast<double>(a.norm_sq()));
  }
  static std::string str(const GaussianRational& a) { return a.str(); }
};

template <>
struct scalar_traits<ParamPoly> {
  static constexpr bool exact = true;
  static ParamPoly from_gaussian(const GaussianRational& c) { return ParamPoly::constant(c); }
  static ParamPoly from_double(double) {
    throw std::domain_error("exact backend cannot hold floats");
  }
  static double to_double(const ParamPoly& a) {
    return scalar_traits<GaussianRational>::to_double(a.constant_value());
  }
  static ParamPoly zero() { return {}; }
  static ParamPoly one() { return ParamPoly::constant(GaussianRational(1)); }
  static ParamPoly from_rational(const Rational& q) {
    return ParamPoly::constant(GaussianRational(q));
  }
  static bool is_zero(const ParamPoly& a) { return a.is_zero(); }
  static ParamPoly conj(const ParamPoly& a) { return a.conj(); }
  static double approx_abs(const ParamPoly& a) {
    double s = 0;
    for (const auto& [e, c] : a.terms())
      s += std::sqrt(static_cast<double>(c.norm_sq()));
    return s;
  }
  static std::string str(const ParamPoly& a) { return a.str(); }
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static double from_gaussian(const GaussianRational& c) {
    if (c.im != 0) throw std::domain_error("reality violation: complex coefficient");
    return static_cast<double>(c.re);
  }
  static double from_double(double x) { return x; }
  static double to_double(double a) { return a; }
  static double zero() { return 0.0; }
  static double one() { return 1.0; }
  static double from_rational(const Rational& q) { return static_cast<double>(q); }
  static bool is_zero(double a) { return a == 0.0; }
  static double conj(double a) { return a; }
  static double approx_abs(double a) { return std::abs(a); }
  static std::string str(double a) {
    std::ostringstream os;
    os.precision(17);
    os << a;
    return os.str();
  }
};

template <>
struct scalar_traits<FloatComplex> {
  static constexpr bool exact = false;
  static FloatComplex from_gaussian(const GaussianRational& c) {
    return {static_cast<double>(c.re), static_cast<double>(c.im)};
  }
  static FloatComplex from_double(double x) { return {x, 0.0}; }
  static double to_double(const FloatComplex& a) { return a.real(); }
  static FloatComplex zero() { return {0.0, 0.0}; }
  static FloatComplex one() { return {1.0, 0.0}; }
  static FloatComplex from_rational(const Rational& q) {
    return {static_cast<double>(q), 0.0};
  }
  static bool is_zero(const FloatComplex& a) { return a == FloatComplex{}; }
  static FloatComplex conj(const FloatComplex& a) { return std::conj(a); }
  static double approx_abs(const FloatComplex& a) { return std::abs(a); }
  static std::string str(const FloatComplex& a) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << a.real() << (a.imag() < 0 ? "" : "+") << a.imag() << "i)";
    return os.str();
  }
};

template <typename S>
S conjugate(const S& a) {
  return scalar_traits<S>::conj(a);
}
template <typename S>
bool is_zero(const S& a) {
  return scalar_traits<S>::is_zero(a);
}
template <typename S>
double approx_abs(const S& a) {
  return scalar_traits<S>::approx_abs(a);
}
template <typename S>
std::string scalar_str(const S& a) {
  return scalar_traits<S>::str(a);
}
template <typename S>
S scalar_of(long long n) {
  return scalar_traits<S>::from_rational(Rational(n));
}
template <typename S>
S scalar_of(const Rational& q) {
  return scalar_traits<S>::from_rational(q);
}
template <typename S>
S scalar_of(const GaussianRational& c) {
  return scalar_traits<S>::from_gaussian(c);
}

}  // namespace kw4

#endif
