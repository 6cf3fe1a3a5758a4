#ifndef KW4_TESTS_HELPERS_HPP
#define KW4_TESTS_HELPERS_HPP

#include <memory>
#include <random>

#include "kw4/realize.hpp"

namespace kw4::testing {

struct SymbolicFamily {
  std::shared_ptr<SymbolTable> table;
  ParamPoly e1, e1t, a2, a2t, a3, a3t;
  LieAlgebra4<ParamPoly> algebra;
};

/// The six-parameter bracket family with independent real symbols (para form).
inline SymbolicFamily para_symbolic_family() {
  SymbolicFamily f;
  f.table = std::make_shared<SymbolTable>();
  for (const char* n : {"e1", "e1t", "a2", "a2t", "a3", "a3t"}) f.table->add_real(n);
  auto v = [&](const char* n) { return ParamPoly::variable(f.table, n); };
  f.e1 = v("e1");
  f.e1t = v("e1t");
  f.a2 = v("a2");
  f.a2t = v("a2t");
  f.a3 = v("a3");
  f.a3t = v("a3t");
  f.algebra = family_algebra(
      FamilyParams<ParamPoly>::para(f.e1, f.e1t, f.a2, f.a2t, f.a3, f.a3t),
      ModelKind::Para);
  return f;
}

/// The same family over conjugate-paired symbols (the Hermitian reality
/// condition: each tilde parameter is the conjugate of its partner).
inline SymbolicFamily hermitian_symbolic_family() {
  SymbolicFamily f;
  f.table = std::make_shared<SymbolTable>();
  f.table->add_pair("e1", "e1b");
  f.table->add_pair("a2", "a2b");
  f.table->add_pair("a3", "a3b");
  auto v = [&](const char* n) { return ParamPoly::variable(f.table, n); };
  f.e1 = v("e1");
  f.e1t = v("e1b");
  f.a2 = v("a2");
  f.a2t = v("a2b");
  f.a3 = v("a3");
  f.a3t = v("a3b");
  f.algebra = family_algebra(
      FamilyParams<ParamPoly>::para(f.e1, f.e1t, f.a2, f.a2t, f.a3, f.a3t),
      ModelKind::Hermitian);
  return f;
}

class RationalRng {
 public:
  explicit RationalRng(unsigned seed) : rng_(seed), num_(-9, 9), den_(1, 9) {}
  Rational operator()() { return Rational(num_(rng_), den_(rng_)); }
  GaussianRational gaussian() { return GaussianRational((*this)(), (*this)()); }
  double real() { return std::uniform_real_distribution<double>(-3, 3)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  std::mt19937& raw() { return rng_; }

 private:
  std::mt19937 rng_;
  std::uniform_int_distribution<int> num_;
  std::uniform_int_distribution<int> den_;
};

}  // namespace kw4::testing

#endif
