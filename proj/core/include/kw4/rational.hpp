#ifndef KW4_RATIONAL_HPP
#define KW4_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <stdexcept>
#include <string>

namespace kw4 {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational scalar. Always stored normalized: gcd(|num|,den)=1, den>0.
/// Expression templates are off so arithmetic composes with generic code.
using Rational = boost::multiprecision::number<
    boost::multiprecision::backends::rational_adaptor<
        boost::multiprecision::backends::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

inline std::string rational_to_string(const Rational& q) {
  const BigInt num = numerator(q);
  const BigInt den = denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

inline double rational_to_double(const Rational& q) { return q.convert_to<double>(); }

/// Parses "p", "p/q", or "-p/q". Throws std::invalid_argument on malformed input.
inline Rational rational_from_string(const std::string& s) {
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(s));
    const BigInt num(s.substr(0, slash));
    const BigInt den(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("malformed rational '" + s + "': " + e.what());
  }
}

/// Exact square root: returns r with r*r == q, or nullopt when q is not a
/// square in the rationals. Throws on q < 0.
inline std::optional<Rational> exact_sqrt(const Rational& q) {
  if (q < 0) throw std::domain_error("negative radicand");
  if (q == 0) return Rational(0);
  const BigInt num = numerator(q);
  const BigInt den = denominator(q);
  const BigInt rn = boost::multiprecision::sqrt(num);
  const BigInt rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) return std::nullopt;
  return Rational(rn, rd);
}

}  // namespace kw4

#endif
