#include "affeq/poly.hpp"

#include <algorithm>
#include <sstream>

namespace affeq {

Mono Mono::from_pairs(std::vector<std::pair<int, int>> pairs) {
  std::sort(pairs.begin(), pairs.end());
  Mono m;
  for (auto& [v, e] : pairs) {
    if (v < 1) throw std::invalid_argument("variable index must be >= 1");
    if (e < 0) throw std::invalid_argument("negative exponent");
    if (e == 0) continue;
    if (!m.exps_.empty() && m.exps_.back().first == v)
      m.exps_.back().second += e;
    else
      m.exps_.push_back({v, e});
  }
  return m;
}

Mono Mono::times(const Mono& o) const {
  Mono r;
  size_t i = 0, j = 0;
  while (i < exps_.size() || j < o.exps_.size()) {
    if (j == o.exps_.size() || (i < exps_.size() && exps_[i].first < o.exps_[j].first))
      r.exps_.push_back(exps_[i++]);
    else if (i == exps_.size() || o.exps_[j].first < exps_[i].first)
      r.exps_.push_back(o.exps_[j++]);
    else {
      r.exps_.push_back({exps_[i].first, exps_[i].second + o.exps_[j].second});
      ++i, ++j;
    }
  }
  return r;
}

Mono Mono::divide_var(int var) const {
  Mono r;
  bool found = false;
  for (auto& [v, e] : exps_) {
    if (v == var) {
      found = true;
      if (e > 1) r.exps_.push_back({v, e - 1});
    } else {
      r.exps_.push_back({v, e});
    }
  }
  if (!found) throw std::invalid_argument("monomial does not contain variable");
  return r;
}

std::optional<Mono> Mono::divide(const Mono& o) const {
  Mono r;
  size_t i = 0;
  for (auto& [v, e] : o.exps_) {
    while (i < exps_.size() && exps_[i].first < v) r.exps_.push_back(exps_[i++]);
    if (i == exps_.size() || exps_[i].first != v || exps_[i].second < e)
      return std::nullopt;
    if (exps_[i].second > e) r.exps_.push_back({v, exps_[i].second - e});
    ++i;
  }
  while (i < exps_.size()) r.exps_.push_back(exps_[i++]);
  return r;
}

bool operator<(const Mono& a, const Mono& b) {
  int da = a.degree(), db = b.degree();
  if (da != db) return da < db;
  size_t i = 0, j = 0;
  while (i < a.exps_.size() && j < b.exps_.size()) {
    // entry with the smaller variable index has exponent 0 on the other side
    if (a.exps_[i].first < b.exps_[j].first) return false;  // a has positive exp, b has 0
    if (b.exps_[j].first < a.exps_[i].first) return true;
    if (a.exps_[i].second != b.exps_[j].second)
      return a.exps_[i].second < b.exps_[j].second;
    ++i, ++j;
  }
  if (i < a.exps_.size()) return false;
  if (j < b.exps_.size()) return true;
  return false;
}

std::string Mono::str() const {
  if (exps_.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (auto& [v, e] : exps_) {
    if (!first) os << "*";
    first = false;
    os << "u" << v;
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

Poly Poly::constant(int nvars, const Rat& c) {
  Poly p(nvars);
  if (!is_zero(c)) p.terms_[Mono()] = c;
  return p;
}

Poly Poly::var(int nvars, int index, const Rat& coef) {
  if (index < 1 || index > nvars) throw std::invalid_argument("variable index out of range");
  Poly p(nvars);
  if (!is_zero(coef)) p.terms_[Mono::var(index)] = coef;
  return p;
}

Poly Poly::term(int nvars, const Mono& m, const Rat& c) {
  if (m.max_var() > nvars) throw std::invalid_argument("monomial variable out of range");
  Poly p(nvars);
  if (!is_zero(c)) p.terms_[m] = c;
  return p;
}

int Poly::degree() const {
  int d = 0;
  for (auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

Poly& Poly::add_term(const Mono& m, const Rat& c) {
  if (m.max_var() > nvars_) throw std::invalid_argument("monomial variable out of range");
  if (is_zero(c)) return *this;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_[m] = c;
  } else {
    it->second += c;
    if (is_zero(it->second)) terms_.erase(it);
  }
  return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  a.check_same(b);
  Poly r = a;
  for (auto& [m, c] : b.terms_) r.add_term(m, c);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  a.check_same(b);
  Poly r = a;
  for (auto& [m, c] : b.terms_) r.add_term(m, -c);
  return r;
}

Poly operator-(const Poly& a) {
  Poly r(a.nvars_);
  for (auto& [m, c] : a.terms_) r.terms_[m] = -c;
  return r;
}

Poly operator*(const Rat& c, const Poly& p) {
  Poly r(p.nvars_);
  if (is_zero(c)) return r;
  for (auto& [m, k] : p.terms_) r.terms_[m] = c * k;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_same(b);
  Poly r(a.nvars_);
  for (auto& [ma, ca] : a.terms_)
    for (auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
  return r;
}

Rat Poly::eval(const std::vector<Rat>& point) const {
  if ((int)point.size() != nvars_) throw std::invalid_argument("evaluation point length mismatch");
  Rat acc(0);
  for (auto& [m, c] : terms_) {
    Rat t = c;
    for (auto& [v, e] : m.exps()) {
      for (int i = 0; i < e; ++i) t *= point[v - 1];
    }
    acc += t;
  }
  return acc;
}

double Poly::eval_double(const std::vector<double>& point) const {
  if ((int)point.size() != nvars_) throw std::invalid_argument("evaluation point length mismatch");
  double acc = 0;
  for (auto& [m, c] : terms_) {
    double t = rat_double(c);
    for (auto& [v, e] : m.exps()) {
      for (int i = 0; i < e; ++i) t *= point[v - 1];
    }
    acc += t;
  }
  return acc;
}

Poly Poly::restrict_to(const std::set<int>& keep) const {
  Poly r(nvars_);
  for (auto& [m, c] : terms_) {
    bool ok = true;
    for (auto& [v, e] : m.exps())
      if (!keep.count(v)) {
        ok = false;
        break;
      }
    if (ok) r.terms_[m] = c;
  }
  return r;
}

bool Poly::independent_of_vars_above(int bound) const {
  for (auto& [m, c] : terms_)
    if (m.max_var() > bound) return false;
  return true;
}

bool Poly::depends_on(int var) const {
  for (auto& [m, c] : terms_)
    if (m.depends_on(var)) return true;
  return false;
}

std::optional<Poly> Poly::divide_exact(const Poly& d) const {
  check_same(d);
  if (d.is_zero()) throw std::invalid_argument("division by zero polynomial");
  Poly rem = *this;
  Poly quo(nvars_);
  const auto& dlead = *d.terms_.rbegin();
  while (!rem.is_zero()) {
    const auto& rlead = *rem.terms_.rbegin();
    auto mq = rlead.first.divide(dlead.first);
    if (!mq) return std::nullopt;
    Rat cq = rlead.second / dlead.second;
    Poly t = Poly::term(nvars_, *mq, cq);
    quo += t;
    rem -= t * d;
  }
  return quo;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    if (m.is_one()) {
      os << rat_str(c);
    } else if (c == Rat(1)) {
      os << m.str();
    } else if (c == Rat(-1)) {
      os << "-" << m.str();
    } else {
      os << rat_str(c) << "*" << m.str();
    }
  }
  return os.str();
}

Poly Derivation::operator()(const Poly& p) const {
  Poly r(p.nvars());
  for (auto& [m, c] : p.terms()) {
    for (auto& [v, e] : m.exps()) {
      Poly t = Poly::term(p.nvars(), m.divide_var(v), c * Rat(e));
      r += t * images_.at(v - 1);
    }
  }
  return r;
}

}  // namespace affeq
