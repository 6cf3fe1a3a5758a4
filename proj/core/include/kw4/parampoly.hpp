#ifndef KW4_PARAMPOLY_HPP
#define KW4_PARAMPOLY_HPP

#include <complex>
#include <map>
#include <memory>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kw4/gaussian.hpp"

namespace kw4 {

/// Ordered indeterminates with a conjugation involution: each symbol is either
/// self-conjugate (real) or paired with its conjugate partner.
class SymbolTable {
 public:
  std::size_t add_real(const std::string& name) {
    names_.push_back(name);
    conj_.push_back(names_.size() - 1);
    return names_.size() - 1;
  }
  /// Adds the pair (name, conjugate name); returns the index of the first.
  std::size_t add_pair(const std::string& name, const std::string& bar_name) {
    names_.push_back(name);
    names_.push_back(bar_name);
    conj_.push_back(names_.size() - 1);
    conj_.push_back(names_.size() - 2);
    return names_.size() - 2;
  }

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  std::size_t conj_index(std::size_t i) const { return conj_[i]; }
  bool is_real(std::size_t i) const { return conj_[i] == i; }

  std::size_t index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
      if (names_[i] == name) return i;
    throw std::invalid_argument("unbound indeterminate '" + name + "'");
  }

 private:
  std::vector<std::string> names_;
  std::vector<std::size_t> conj_;
};

namespace detail {

template <typename T>
T cast_coeff(const GaussianRational& c);
template <>
inline GaussianRational cast_coeff<GaussianRational>(const GaussianRational& c) {
  return c;
}
template <>
inline std::complex<double> cast_coeff<std::complex<double>>(const GaussianRational& c) {
  return {static_cast<double>(c.re), static_cast<double>(c.im)};
}
template <>
inline Rational cast_coeff<Rational>(const GaussianRational& c) {
  if (c.im != 0) throw std::domain_error("reality violation: complex coefficient");
  return c.re;
}
template <>
inline double cast_coeff<double>(const GaussianRational& c) {
  if (c.im != 0) throw std::domain_error("reality violation: complex coefficient");
  return static_cast<double>(c.re);
}

inline GaussianRational eval_conj(const GaussianRational& v) { return v.conj(); }
inline std::complex<double> eval_conj(const std::complex<double>& v) { return std::conj(v); }
inline Rational eval_conj(const Rational& v) { return v; }
inline double eval_conj(double v) { return v; }

struct GradedLex {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
    const int da = std::accumulate(a.begin(), a.end(), 0);
    const int db = std::accumulate(b.begin(), b.end(), 0);
    if (da != db) return da < db;
    return a < b;
  }
};
}  // namespace detail

/// Multivariate polynomial over Gaussian rationals with structural conjugation:
/// conj swaps paired indeterminates and conjugates coefficients. Terms are kept
/// in graded-lex order with no zero coefficients stored, so equality is map
/// equality.
class ParamPoly {
 public:
  using Table = std::shared_ptr<const SymbolTable>;
  using Terms = std::map<std::vector<int>, GaussianRational, detail::GradedLex>;

  ParamPoly() = default;
  explicit ParamPoly(Table table) : table_(std::move(table)) {}

  /// A table-less constant; it adopts a symbol table on first combination.
  static ParamPoly constant(GaussianRational c) { return constant(nullptr, std::move(c)); }
  static ParamPoly constant(Table table, GaussianRational c) {
    ParamPoly p(std::move(table));
    if (!c.is_zero())
      p.terms_[std::vector<int>(p.table_ ? p.table_->size() : 0, 0)] = std::move(c);
    return p;
  }
  static ParamPoly variable(Table table, const std::string& name) {
    ParamPoly p(table);
    std::vector<int> e(table->size(), 0);
    e[table->index_of(name)] = 1;
    p.terms_[std::move(e)] = GaussianRational(1);
    return p;
  }

  const Table& table() const { return table_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::accumulate(e.begin(), e.end(), 0) == 0;
  }
  GaussianRational constant_value() const {
    if (terms_.empty()) return GaussianRational(0);
    if (!is_constant()) throw std::domain_error("non-constant polynomial");
    return terms_.begin()->second;
  }

  ParamPoly conj() const {
    ParamPoly out(table_);
    for (const auto& [e, c] : terms_) {
      std::vector<int> f(e.size(), 0);
      for (std::size_t i = 0; i < e.size(); ++i) f[table_->conj_index(i)] = e[i];
      out.terms_[std::move(f)] = c.conj();
    }
    return out;
  }

  friend ParamPoly operator+(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly out = a.retabled(b);
    for (const auto& [e, c] : b.terms_) out.add_term(out.fit(e), c);
    return out;
  }
  friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly out = a.retabled(b);
    for (const auto& [e, c] : b.terms_) out.add_term(out.fit(e), -c);
    return out;
  }
  friend ParamPoly operator-(const ParamPoly& a) {
    ParamPoly out(a.table_);
    for (const auto& [e, c] : a.terms_) out.terms_[e] = -c;
    return out;
  }
  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly out(a.table_ ? a.table_ : b.table_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        std::vector<int> e = out.fit(ea);
        const std::vector<int> f = out.fit(eb);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] += f[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }
  /// Division is defined only by units, i.e. nonzero constants.
  friend ParamPoly operator/(const ParamPoly& a, const ParamPoly& b) {
    if (!b.is_constant() || b.is_zero()) throw std::domain_error("non-invertible scalar");
    const GaussianRational inv = GaussianRational(1) / b.constant_value();
    ParamPoly out(a.table_);
    for (const auto& [e, c] : a.terms_) out.terms_[e] = c * inv;
    return out;
  }
  ParamPoly& operator+=(const ParamPoly& b) { return *this = *this + b; }
  ParamPoly& operator-=(const ParamPoly& b) { return *this = *this - b; }
  ParamPoly& operator*=(const ParamPoly& b) { return *this = *this * b; }

  friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return (a - b).is_zero(); }
  friend bool operator!=(const ParamPoly& a, const ParamPoly& b) { return !(a == b); }

  /// Ring-homomorphic substitution. The assignment must bind every symbol that
  /// occurs, and paired symbols must receive conjugate values.
  template <typename T>
  T evaluate(const std::map<std::string, T>& assignment) const {
    std::vector<const T*> vals(table_ ? table_->size() : 0, nullptr);
    if (table_) {
      for (std::size_t i = 0; i < table_->size(); ++i) {
        auto it = assignment.find(table_->name(i));
        if (it != assignment.end()) vals[i] = &it->second;
      }
      for (std::size_t i = 0; i < table_->size(); ++i) {
        const std::size_t j = table_->conj_index(i);
        if (j > i && vals[i] && vals[j] && detail::eval_conj(*vals[i]) != *vals[j])
          throw std::domain_error("reality violation: " + table_->name(i) + ", " +
                                  table_->name(j));
      }
    }
    T acc = detail::cast_coeff<T>(GaussianRational(0));
    for (const auto& [e, c] : terms_) {
      T term = detail::cast_coeff<T>(c);
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (!vals[i]) throw std::domain_error("unbound indeterminate '" + table_->name(i) + "'");
        for (int k = 0; k < e[i]; ++k) term = term * *vals[i];
      }
      acc = acc + term;
    }
    return acc;
  }

  std::string str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [e, c] : terms_) {
      if (!s.empty()) s += " + ";
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i)
        for (int k = 0; k < e[i]; ++k) mono += (mono.empty() ? "" : "*") + table_->name(i);
      if (mono.empty())
        s += c.str();
      else if (c == GaussianRational(1))
        s += mono;
      else
        s += c.str() + "*" + mono;
    }
    return s;
  }

 private:
  std::vector<int> fit(const std::vector<int>& e) const {
    const std::size_t n = table_ ? table_->size() : e.size();
    std::vector<int> f = e;
    f.resize(n, 0);
    return f;
  }
  // Copy of `a` whose table (and key widths) account for `other`.
  ParamPoly retabled(const ParamPoly& other) const {
    ParamPoly out(table_ ? table_ : other.table_);
    for (const auto& [e, c] : terms_) out.terms_[out.fit(e)] = c;
    return out;
  }
  void add_term(const std::vector<int>& e, const GaussianRational& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Table table_;
  Terms terms_;
};

}  // namespace kw4

#endif
