#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "affeq/rational.hpp"

namespace affeq {

/// Monomial in variables u_1..u_n, stored sparsely as (index, exponent)
/// pairs sorted by index. No zero exponents are kept; indices are 1-based.
class Mono {
 public:
  Mono() = default;

  static Mono var(int index, int exp = 1) {
    Mono m;
    if (exp < 0) throw std::invalid_argument("negative exponent");
    if (exp > 0) m.exps_.push_back({index, exp});
    return m;
  }

  static Mono from_pairs(std::vector<std::pair<int, int>> pairs);

  bool is_one() const { return exps_.empty(); }
  int degree() const {
    int d = 0;
    for (auto& [v, e] : exps_) d += e;
    return d;
  }
  int exp(int var) const {
    for (auto& [v, e] : exps_)
      if (v == var) return e;
    return 0;
  }
  int max_var() const { return exps_.empty() ? 0 : exps_.back().first; }
  const std::vector<std::pair<int, int>>& exps() const { return exps_; }

  Mono times(const Mono& o) const;
  /// this / var^1; requires exp(var) >= 1.
  Mono divide_var(int var) const;
  /// Full monomial quotient, or nullopt when not divisible.
  std::optional<Mono> divide(const Mono& o) const;
  bool depends_on(int var) const { return exp(var) > 0; }

  /// Canonical term order: graded, ties broken by comparing exponent
  /// vectors entry by entry from u_1 upward (smaller exponent first).
  /// Total and multiplication-compatible, so it also drives exact division.
  friend bool operator<(const Mono& a, const Mono& b);
  friend bool operator==(const Mono& a, const Mono& b) { return a.exps_ == b.exps_; }

  std::string str() const;

 private:
  std::vector<std::pair<int, int>> exps_;
};

/// Sparse multivariate polynomial over Rat in u_1..u_nvars.
/// Terms are kept in the canonical order; no zero coefficients stored.
class Poly {
 public:
  Poly() : nvars_(0) {}
  explicit Poly(int nvars) : nvars_(nvars) {}

  static Poly zero(int nvars) { return Poly(nvars); }
  static Poly constant(int nvars, const Rat& c);
  static Poly var(int nvars, int index, const Rat& coef = Rat(1));
  static Poly term(int nvars, const Mono& m, const Rat& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  int n_terms() const { return (int)terms_.size(); }
  int degree() const;
  const std::map<Mono, Rat>& terms() const { return terms_; }

  Rat coeff(const Mono& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  Poly& add_term(const Mono& m, const Rat& c);

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Rat& c, const Poly& p);
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  friend bool operator==(const Poly& a, const Poly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Rat eval(const std::vector<Rat>& point) const;
  double eval_double(const std::vector<double>& point) const;

  /// Substitutes 0 for every variable not in `keep`.
  Poly restrict_to(const std::set<int>& keep) const;

  /// True when no term involves a variable with index > bound.
  bool independent_of_vars_above(int bound) const;
  bool depends_on(int var) const;

  /// Exact quotient this/d, or nullopt if d does not divide exactly.
  std::optional<Poly> divide_exact(const Poly& d) const;

  std::string str() const;

 private:
  void check_same(const Poly& o) const {
    if (nvars_ != o.nvars_)
      throw std::invalid_argument("polynomial variable-count mismatch");
  }
  int nvars_;
  std::map<Mono, Rat> terms_;
};

/// Derivation of the polynomial ring determined by the images of the
/// variables, extended by the Leibniz rule; constants map to 0.
class Derivation {
 public:
  explicit Derivation(std::vector<Poly> images) : images_(std::move(images)) {}
  const Poly& image(int var) const { return images_.at(var - 1); }
  Poly operator()(const Poly& p) const;

 private:
  std::vector<Poly> images_;
};

}  // namespace affeq
