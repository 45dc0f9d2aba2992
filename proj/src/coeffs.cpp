// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "supercech/coeffs.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace supercech {

Rational make_rational(long num, long den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

VarList make_vars(std::vector<std::string> names) {
  if (names.size() > kMaxVariables) throw std::invalid_argument("at most 3 coordinate variables");
  for (std::size_t i = 0; i < names.size(); ++i)
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j]) throw std::invalid_argument("duplicate variable " + names[i]);
  return std::make_shared<const std::vector<std::string>>(std::move(names));
}

bool same_vars(const VarList& a, const VarList& b) { return a == b || *a == *b; }

std::size_t var_index(const VarList& vars, const std::string& name) {
  auto it = std::find(vars->begin(), vars->end(), name);
  if (it == vars->end()) throw std::invalid_argument("unknown variable " + name);
  return static_cast<std::size_t>(it - vars->begin());
}

int total_degree(const Exponents& e) { return std::accumulate(e.begin(), e.end(), 0); }

bool grlex_less(const Exponents& a, const Exponents& b) {
  const int da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;
}

namespace {

// Common ring of two operands. A constant over the empty ring is promoted.
VarList unify(const Polynomial& a, const Polynomial& b) {
  if (same_vars(a.vars(), b.vars())) return a.vars();
  if (a.vars()->empty() && a.is_constant()) return b.vars();
  if (b.vars()->empty() && b.is_constant()) return a.vars();
  throw std::invalid_argument("variable list mismatch");
}

Exponents add_exp(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < kMaxVariables; ++i) r[i] = a[i] + b[i];
  return r;
}

}  // namespace

VarList Polynomial::empty_vars() {
  static const VarList kEmpty = std::make_shared<const std::vector<std::string>>();
  return kEmpty;
}

Polynomial::Polynomial(VarList vars, const Rational& c) : vars_(std::move(vars)) {
  if (c != 0) terms_.emplace_back(Exponents{}, c);
}

Polynomial Polynomial::variable(VarList vars, std::size_t index) {
  if (index >= vars->size()) throw std::invalid_argument("variable index out of range");
  Exponents e{};
  e[index] = 1;
  return monomial(std::move(vars), e, Rational(1));
}

Polynomial Polynomial::monomial(VarList vars, const Exponents& e, const Rational& c) {
  Polynomial p(std::move(vars));
  for (int x : e)
    if (x < 0) throw std::invalid_argument("negative exponent in polynomial");
  if (c != 0) p.terms_.emplace_back(e, c);
  return p;
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && supercech::total_degree(terms_[0].first) == 0);
}

Rational Polynomial::constant_value() const {
  if (terms_.empty()) return Rational(0);
  if (!is_constant()) throw std::logic_error("polynomial is not constant");
  return terms_[0].second;
}

int Polynomial::total_degree() const {
  return terms_.empty() ? 0 : supercech::total_degree(terms_.back().first);
}

int Polynomial::degree_in(std::size_t var) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
  return d;
}

int Polynomial::min_degree_in(std::size_t var) const {
  if (terms_.empty()) return 0;
  int d = terms_.front().first[var];
  for (const auto& [e, c] : terms_) d = std::min(d, e[var]);
  return d;
}

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  vars_ = unify(*this, o);
  if (o.terms_.empty()) return *this;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto i = terms_.begin();
  auto j = o.terms_.begin();
  while (i != terms_.end() || j != o.terms_.end()) {
    if (j == o.terms_.end() || (i != terms_.end() && grlex_less(i->first, j->first))) {
      out.push_back(std::move(*i++));
    } else if (i == terms_.end() || grlex_less(j->first, i->first)) {
      out.push_back(*j++);
    } else {
      Rational s = i->second + j->second;
      if (s != 0) out.emplace_back(i->first, std::move(s));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) { return *this += -o; }

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.second *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  const VarList vars = unify(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(vars);
  if (b.terms_.size() == 1 && total_degree(b.terms_[0].first) == 0) {
    Polynomial r = a;
    r.vars_ = vars;
    return r *= b.terms_[0].second;
  }
  if (a.terms_.size() == 1 && total_degree(a.terms_[0].first) == 0) {
    Polynomial r = b;
    r.vars_ = vars;
    return r *= a.terms_[0].second;
  }
  PolynomialBuilder builder(vars);
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) builder.add(add_exp(ea, eb), ca * cb);
  return std::move(builder).build();
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (a.terms_ != b.terms_) return false;
  // Constants compare equal across rings; anything else must share variables.
  return a.is_constant() || same_vars(a.vars_, b.vars_);
}

Polynomial Polynomial::pow(unsigned k) const {
  Polynomial result(vars_, Rational(1));
  Polynomial base = *this;
  while (k) {
    if (k & 1u) result = result * base;
    k >>= 1u;
    if (k) base = base * base;
  }
  return result;
}

Polynomial Polynomial::diff(std::size_t var) const {
  if (var >= vars_->size()) throw std::invalid_argument("unknown variable");
  Polynomial r(vars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponents f = e;
    f[var] -= 1;
    r.terms_.emplace_back(f, c * e[var]);
  }
  // Lowering one coordinate by one preserves relative grlex order.
  return r;
}

Polynomial Polynomial::shift(const Exponents& s) const {
  Polynomial r(vars_);
  r.terms_.reserve(terms_.size());
  for (const auto& [e, c] : terms_) {
    Exponents f = add_exp(e, s);
    for (int x : f)
      if (x < 0) throw std::invalid_argument("shift produces a negative exponent");
    r.terms_.emplace_back(f, c);
  }
  return r;
}

Polynomial Polynomial::with_vars(VarList vars) const {
  if (vars->size() < vars_->size() && !is_constant())
    throw std::invalid_argument("cannot drop variables");
  Polynomial r = *this;
  r.vars_ = std::move(vars);
  return r;
}

namespace {

std::string monomial_string(const Exponents& e, const std::vector<std::string>& names) {
  std::string s;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (e[i] == 0) continue;
    if (!s.empty()) s += '*';
    s += names[i];
    if (e[i] != 1) s += '^' + std::to_string(e[i]);
  }
  return s;
}

}  // namespace

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    const std::string mono = monomial_string(e, *vars_);
    Rational mag = abs(c);
    std::string body;
    if (mono.empty()) {
      body = mag.get_str();
    } else if (mag == 1) {
      body = mono;
    } else {
      body = mag.get_str() + "*" + mono;
    }
    if (first) {
      out = (c < 0 ? "-" : "") + body;
      first = false;
    } else {
      out += (c < 0 ? " - " : " + ") + body;
    }
  }
  return out;
}

void PolynomialBuilder::add(const Exponents& e, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = acc_.try_emplace(e, c);
  if (!inserted) it->second += c;
}

Polynomial PolynomialBuilder::build() && {
  Polynomial p(vars_);
  p.terms_.reserve(acc_.size());
  for (auto& [e, c] : acc_)
    if (c != 0) p.terms_.emplace_back(e, std::move(c));
  return p;
}

// ---------------------------------------------------------------------------
// Division and gcd.

namespace {

// Lexicographic order on exponents (variable 0 most significant); used for
// exact division so that leading terms are well defined in every variable.
bool lex_less(const Exponents& a, const Exponents& b) { return a < b; }

const Polynomial::Term& lex_leading(const Polynomial& p) {
  const auto& ts = p.terms();
  return *std::max_element(ts.begin(), ts.end(),
                           [](const auto& x, const auto& y) { return lex_less(x.first, y.first); });
}

bool divides_mono(const Exponents& d, const Exponents& e) {
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (d[i] > e[i]) return false;
  return true;
}

Exponents sub_exp(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < kMaxVariables; ++i) r[i] = a[i] - b[i];
  return r;
}

// Coefficients of p viewed as a polynomial in variable v.
std::map<int, Polynomial> coeffs_in(const Polynomial& p, std::size_t v) {
  std::map<int, PolynomialBuilder> acc;
  for (const auto& [e, c] : p.terms()) {
    Exponents f = e;
    f[v] = 0;
    acc.try_emplace(e[v], p.vars()).first->second.add(f, c);
  }
  std::map<int, Polynomial> out;
  for (auto& [d, b] : acc) out.emplace(d, std::move(b).build());
  return out;
}

Polynomial var_power(const VarList& vars, std::size_t v, int k) {
  Exponents e{};
  e[v] = k;
  return Polynomial::monomial(vars, e, Rational(1));
}

Polynomial make_monic(const Polynomial& p) {
  if (p.is_zero()) return p;
  Rational lc = p.leading().second;
  return p * Rational(1 / lc);
}

bool mentions(const Polynomial& p, std::size_t v) { return p.degree_in(v) > 0; }

Polynomial content_in(const Polynomial& p, std::size_t v) {
  Polynomial g(p.vars());
  for (const auto& [d, c] : coeffs_in(p, v)) {
    g = gcd(g, c);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

// Pseudo-remainder of a by b with respect to variable v.
Polynomial pseudo_rem(Polynomial a, const Polynomial& b, std::size_t v) {
  const int db = b.degree_in(v);
  const auto bc = coeffs_in(b, v);
  const Polynomial lb = bc.rbegin()->second;
  while (!a.is_zero() && a.degree_in(v) >= db) {
    const int da = a.degree_in(v);
    const Polynomial la = coeffs_in(a, v).rbegin()->second;
    a = a * lb - la * var_power(a.vars(), v, da - db) * b;
  }
  return a;
}

}  // namespace

Polynomial divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("zero denominator");
  const VarList vars = unify(a, b);
  if (b.is_constant()) return (a * Rational(1 / b.constant_value())).with_vars(vars);
  PolynomialBuilder q(vars);
  Polynomial r = a.with_vars(vars);
  const auto& [lbe, lbc] = lex_leading(b);
  while (!r.is_zero()) {
    const auto [lre, lrc] = lex_leading(r);
    if (!divides_mono(lbe, lre)) throw std::domain_error("inexact polynomial division");
    const Exponents qe = sub_exp(lre, lbe);
    const Rational qc = lrc / lbc;
    q.add(qe, qc);
    r -= Polynomial::monomial(vars, qe, qc) * b;
  }
  return std::move(q).build();
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  const VarList vars = unify(a, b);
  if (a.is_zero()) return make_monic(b.with_vars(vars));
  if (b.is_zero()) return make_monic(a.with_vars(vars));
  if (a.is_constant() || b.is_constant()) return Polynomial(vars, Rational(1));
  // Monomial fast path: gcd is the componentwise minimum exponent.
  if (a.is_monomial() || b.is_monomial()) {
    const Polynomial& m = a.is_monomial() ? a : b;
    const Polynomial& p = a.is_monomial() ? b : a;
    Exponents e = m.terms()[0].first;
    for (std::size_t i = 0; i < vars->size(); ++i) e[i] = std::min(e[i], p.min_degree_in(i));
    return Polynomial::monomial(vars, e, Rational(1));
  }
  std::size_t v = vars->size();
  for (std::size_t i = vars->size(); i-- > 0;) {
    if (mentions(a, i) || mentions(b, i)) {
      v = i;
      break;
    }
  }
  if (!mentions(a, v)) return gcd(a, content_in(b, v));
  if (!mentions(b, v)) return gcd(content_in(a, v), b);

  const Polynomial ca = content_in(a, v);
  const Polynomial cb = content_in(b, v);
  const Polynomial c = gcd(ca, cb);
  Polynomial p = divide_exact(a, ca);
  Polynomial q = divide_exact(b, cb);
  if (p.degree_in(v) < q.degree_in(v)) std::swap(p, q);
  while (true) {
    Polynomial r = pseudo_rem(p, q, v);
    if (r.is_zero()) break;
    if (!mentions(r, v)) {
      q = Polynomial(vars, Rational(1));
      break;
    }
    p = std::move(q);
    q = divide_exact(r, content_in(r, v));
  }
  return make_monic(c * q);
}

// ---------------------------------------------------------------------------
// Rational functions.

RationalFunction::RationalFunction(VarList vars) : num_(vars), den_(vars, Rational(1)) {}

RationalFunction::RationalFunction(VarList vars, const Rational& c)
    : num_(vars, c), den_(vars, Rational(1)) {}

RationalFunction::RationalFunction(Polynomial num)
    : num_(std::move(num)), den_(num_.vars(), Rational(1)) {}

RationalFunction::RationalFunction(Polynomial num, Polynomial den)
    : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("zero denominator");
  const VarList vars = unify(num_, den_);
  num_ = num_.with_vars(vars);
  den_ = den_.with_vars(vars);
  normalize();
}

RationalFunction RationalFunction::variable(VarList vars, std::size_t index) {
  return RationalFunction(Polynomial::variable(std::move(vars), index));
}

RationalFunction RationalFunction::variable(VarList vars, const std::string& name) {
  const std::size_t i = var_index(vars, name);
  return variable(std::move(vars), i);
}

RationalFunction RationalFunction::laurent_monomial(VarList vars, const Exponents& e,
                                                    const Rational& c) {
  Exponents pos{}, neg{};
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (e[i] != 0 && i >= vars->size()) throw std::invalid_argument("exponent for missing variable");
    (e[i] >= 0 ? pos[i] : neg[i]) = std::abs(e[i]);
  }
  RationalFunction r(vars);
  r.num_ = Polynomial::monomial(vars, pos, c);
  r.den_ = Polynomial::monomial(vars, neg, Rational(1));
  if (r.num_.is_zero()) r.den_ = Polynomial(vars, Rational(1));
  return r;
}

bool RationalFunction::is_one() const {
  return den_.is_constant() && num_.is_constant() && num_.constant_value() == 1;
}

void RationalFunction::normalize() {
  if (num_.is_zero()) {
    den_ = Polynomial(num_.vars(), Rational(1));
    return;
  }
  if (!den_.is_constant()) {
    const Polynomial g = gcd(num_, den_);
    if (!g.is_constant()) {
      if (g.is_monomial()) {
        Exponents neg = g.terms()[0].first;
        for (int& x : neg) x = -x;
        num_ = num_.shift(neg);
        den_ = den_.shift(neg);
      } else {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
      }
    }
  }
  const Rational lc = den_.leading().second;
  if (lc != 1) {
    const Rational inv = 1 / lc;
    num_ *= inv;
    den_ *= inv;
  }
}

RationalFunction RationalFunction::operator-() const {
  RationalFunction r = *this;
  r.num_ = -r.num_;
  return r;
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) {
    const VarList vars = unify(num_, o.num_);
    *this = o;
    num_ = num_.with_vars(vars);
    den_ = den_.with_vars(vars);
    return *this;
  }
  if (den_ == o.den_) {
    num_ += o.num_;
    den_ = den_.with_vars(num_.vars());
    if (!den_.is_constant()) normalize();
    else if (num_.is_zero()) normalize();
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
  if (is_zero()) {
    num_ = num_.with_vars(unify(num_, o.num_));
    den_ = den_.with_vars(num_.vars());
    return *this;
  }
  if (o.is_zero()) {
    *this = RationalFunction(unify(num_, o.num_));
    return *this;
  }
  if (den_.is_constant() && o.den_.is_constant()) {
    num_ = num_ * o.num_;
    den_ = den_.with_vars(num_.vars());
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

RationalFunction& RationalFunction::operator*=(const Rational& c) {
  num_ *= c;
  if (num_.is_zero()) normalize();
  return *this;
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  return a * b.inverse();
}

RationalFunction RationalFunction::inverse() const {
  if (is_zero()) throw std::domain_error("zero denominator");
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int k) const {
  if (k < 0) return inverse().pow(-k);
  RationalFunction r;
  r.num_ = num_.pow(static_cast<unsigned>(k));
  r.den_ = den_.pow(static_cast<unsigned>(k));
  return r;
}

int RationalFunction::degree_bound() const { return std::max(num_.total_degree(), den_.total_degree()); }

std::string RationalFunction::to_string() const {
  if (den_.is_constant()) return num_.to_string();
  // Laurent monomial denominators render as negative powers.
  if (den_.is_monomial()) {
    const Exponents& d = den_.terms()[0].first;
    Exponents neg{};
    for (std::size_t i = 0; i < kMaxVariables; ++i) neg[i] = -d[i];
    std::string out;
    bool first = true;
    for (auto it = num_.terms().rbegin(); it != num_.terms().rend(); ++it) {
      Exponents e = it->first;
      for (std::size_t i = 0; i < kMaxVariables; ++i) e[i] += neg[i];
      const Rational& c = it->second;
      std::string mono;
      for (std::size_t i = 0; i < num_.num_vars(); ++i) {
        if (e[i] == 0) continue;
        if (!mono.empty()) mono += '*';
        mono += (*num_.vars())[i];
        if (e[i] != 1) mono += '^' + std::to_string(e[i]);
      }
      const Rational mag = abs(c);
      std::string body = mono.empty() ? mag.get_str() : (mag == 1 ? mono : mag.get_str() + "*" + mono);
      if (first) {
        out = (c < 0 ? "-" : "") + body;
        first = false;
      } else {
        out += (c < 0 ? " - " : " + ") + body;
      }
    }
    return out;
  }
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

RationalFunction field_op(const RationalFunction& a, const RationalFunction& b, FieldOp op) {
  switch (op) {
    case FieldOp::kAdd:
      return a + b;
    case FieldOp::kSub:
      return a - b;
    case FieldOp::kMul:
      return a * b;
    case FieldOp::kDiv:
      if (b.is_zero()) throw std::domain_error("zero denominator");
      return a / b;
  }
  throw std::logic_error("bad field op");
}

RationalFunction rf_diff(const RationalFunction& f, std::size_t var) {
  if (var >= f.vars()->size()) throw std::invalid_argument("unknown variable");
  if (f.is_polynomial()) return RationalFunction(f.num().diff(var) * Rational(1 / f.den().constant_value()));
  const Polynomial& n = f.num();
  const Polynomial& d = f.den();
  return RationalFunction(n.diff(var) * d - n * d.diff(var), d * d);
}

RationalFunction rf_diff(const RationalFunction& f, const std::string& var) {
  return rf_diff(f, var_index(f.vars(), var));
}

namespace {

RationalFunction eval_poly(const Polynomial& p, const std::vector<RationalFunction>& values,
                           const VarList& target) {
  RationalFunction acc(target);
  for (const auto& [e, c] : p.terms()) {
    RationalFunction t(target, c);
    for (std::size_t i = 0; i < p.num_vars(); ++i)
      if (e[i] != 0) t *= values[i].pow(e[i]);
    acc += t;
  }
  return acc;
}

}  // namespace

RationalFunction rf_subst(const RationalFunction& f,
                          const std::map<std::string, RationalFunction>& assignment) {
  const auto& names = *f.vars();
  std::vector<RationalFunction> values;
  VarList target = Polynomial::empty_vars();
  for (const auto& name : names) {
    auto it = assignment.find(name);
    if (it == assignment.end()) throw std::invalid_argument("substitution misses variable " + name);
    values.push_back(it->second);
    if (target->empty()) {
      target = it->second.vars();
    } else if (!same_vars(target, it->second.vars()) && !it->second.vars()->empty()) {
      throw std::invalid_argument("substituted values live in different rings");
    }
  }
  RationalFunction num = eval_poly(f.num(), values, target);
  RationalFunction den = eval_poly(f.den(), values, target);
  if (den.is_zero()) throw std::domain_error("substitution makes the denominator vanish");
  return num / den;
}

LaurentSplit laurent_split(const RationalFunction& f, const std::string& var) {
  const std::size_t v = var_index(f.vars(), var);
  const Polynomial& den = f.den();
  if (!den.is_monomial()) throw std::invalid_argument("not a Laurent polynomial in " + var);
  const Exponents& de = den.terms()[0].first;
  for (std::size_t i = 0; i < kMaxVariables; ++i)
    if (i != v && de[i] != 0) throw std::invalid_argument("not a Laurent polynomial in " + var);
  const int k = de[v];
  const Rational scale = 1 / den.terms()[0].second;
  PolynomialBuilder pos(f.vars());
  PolynomialBuilder neg(f.vars());
  for (const auto& [e, c] : f.num().terms()) {
    if (e[v] >= k) {
      Exponents s = e;
      s[v] -= k;
      pos.add(s, c * scale);
    } else {
      neg.add(e, c * scale);
    }
  }
  Exponents dk{};
  dk[v] = k;
  return {RationalFunction(std::move(pos).build()),
          RationalFunction(std::move(neg).build(), Polynomial::monomial(f.vars(), dk, Rational(1)))};
}

}  // namespace supercech
