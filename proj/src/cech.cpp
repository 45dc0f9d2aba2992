// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "supercech/cech.hpp"

#include <algorithm>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "supercech/linsolve.hpp"

namespace supercech {

namespace {

RationalFunction power_of(const VarList& vars, int e, const Rational& c = Rational(1)) {
  return RationalFunction::laurent_monomial(vars, Exponents{e, 0, 0}, c);
}

int set_degree(const std::vector<int>& degrees, GeneratorSet s) {
  int total = 0;
  for (int a : set_indices(s)) total += degrees[a - 1];
  return total;
}

void require_overlap_regular(const Cover& cover, const SuperOperator& d) {
  if (!cover.regular_on_overlap(d)) throw std::domain_error("value not regular on the chart intersection");
}

template <std::size_t N>
void enumerate_increasing(int charts, std::array<int, N>& cur, std::size_t pos, int start,
                          std::vector<std::array<int, N>>& out) {
  if (pos == N) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < charts; ++i) {
    cur[pos] = i;
    enumerate_increasing(charts, cur, pos + 1, i + 1, out);
  }
}

std::string simplex_string(const int* s, std::size_t n) {
  std::string r = "[";
  for (std::size_t i = 0; i < n; ++i) {
    if (i) r += ",";
    r += std::to_string(s[i] + 1);
  }
  return r + "]";
}

}  // namespace

// ---------------------------------------------------------------- Cover

std::shared_ptr<const Cover> Cover::formal(int charts, Signature sig) {
  if (charts < 2) throw std::invalid_argument("formal cover needs at least 2 charts");
  if (!sig) throw std::invalid_argument("missing signature");
  auto c = std::shared_ptr<Cover>(new Cover());
  c->mode_ = CoverMode::kFormal;
  c->sigs_.assign(static_cast<std::size_t>(charts), sig);
  return c;
}

std::shared_ptr<const Cover> Cover::p1(std::vector<int> degrees) {
  if (degrees.empty() || static_cast<int>(degrees.size()) > kMaxRank)
    throw std::invalid_argument("bundle rank must be between 1 and 7");
  std::sort(degrees.begin(), degrees.end());
  static std::mutex mu;
  static std::map<std::vector<int>, std::shared_ptr<const Cover>> interned;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = interned.find(degrees); it != interned.end()) return it->second;
  const int n = static_cast<int>(degrees.size());
  auto c = std::shared_ptr<Cover>(new Cover());
  c->mode_ = CoverMode::kP1;
  c->degrees_ = std::move(degrees);
  c->sigs_ = {make_signature(std::vector<std::string>{"z"}, n), make_signature(std::vector<std::string>{"w"}, n)};
  interned.emplace(c->degrees_, c);
  return c;
}

const Signature& Cover::chart_signature(int chart) const {
  if (chart < 0 || chart >= charts()) throw std::out_of_range("chart index out of range");
  return sigs_[static_cast<std::size_t>(chart)];
}

FormSection Cover::transport(const FormSection& a, int from, int to) const {
  require_same_signature(a.signature(), chart_signature(from));
  if (mode_ == CoverMode::kFormal || from == to) return a;
  const Signature& target = chart_signature(to);
  const VarList& tv = target->variables;
  const std::string& source_name = chart_signature(from)->variables->front();
  const std::map<std::string, RationalFunction> inversion{{source_name, power_of(tv, -1)}};
  FormSection r(target);
  for (const auto& [s, f] : a.terms()) {
    RationalFunction g = f.is_constant() ? RationalFunction(tv, f.num().constant_value() / f.den().constant_value())
                                         : rf_subst(f, inversion);
    r.add_term(s, g * power_of(tv, set_degree(degrees_, s)));
  }
  return r;
}

SuperOperator Cover::transport(const SuperOperator& d, int from, int to) const {
  require_same_signature(d.signature(), chart_signature(from));
  if (mode_ == CoverMode::kFormal || from == to) return d;
  const Signature& target = chart_signature(to);
  const VarList& tv = target->variables;
  // d/ds = -t^2 d/dt + t sum_a l_a e_a d/de_a
  SuperOperator ds = SuperOperator::term(FormSection(target, power_of(tv, 2, Rational(-1))),
                                         OperatorKey{Exponents{1, 0, 0}, 0});
  for (int a = 1; a <= rank(); ++a) {
    if (degrees_[a - 1] == 0) continue;
    ds += SuperOperator::term(FormSection(target, generator_bit(a), power_of(tv, 1, Rational(degrees_[a - 1]))),
                              OperatorKey{Exponents{}, generator_bit(a)});
  }
  std::vector<SuperOperator> ds_powers{SuperOperator::identity(target)};
  SuperOperator r(target);
  for (const auto& [key, c] : d.terms()) {
    const int k = key.alpha[0];
    while (static_cast<int>(ds_powers.size()) <= k) ds_powers.push_back(compose(ds_powers.back(), ds));
    const SuperOperator contractions =
        SuperOperator::term(FormSection(target, power_of(tv, -set_degree(degrees_, key.contractions))),
                            OperatorKey{Exponents{}, key.contractions});
    r += compose(SuperOperator::multiplication(transport(c, from, to)),
                 compose(ds_powers[static_cast<std::size_t>(k)], contractions));
  }
  return r;
}

bool Cover::regular_on_overlap(const SuperOperator& d) const {
  if (mode_ == CoverMode::kFormal) return true;
  for (const auto& [key, c] : d.terms())
    for (const auto& [s, f] : c.terms())
      if (!f.is_laurent()) return false;
  return true;
}

bool Cover::regular_on_chart(const SuperOperator& d) const {
  for (const auto& [key, c] : d.terms())
    for (const auto& [s, f] : c.terms())
      if (!f.is_polynomial()) return false;
  return true;
}

std::string Cover::to_string() const {
  std::ostringstream os;
  if (mode_ == CoverMode::kP1) {
    os << "p1(";
    for (std::size_t i = 0; i < degrees_.size(); ++i) os << (i ? "," : "") << degrees_[i];
    os << ")";
  } else {
    os << "formal(" << charts() << " charts; rank " << rank() << "; ";
    const auto& vars = *sigs_.front()->variables;
    for (std::size_t i = 0; i < vars.size(); ++i) os << (i ? "," : "") << vars[i];
    os << ")";
  }
  return os.str();
}

// ---------------------------------------------------------------- Cochain

template <std::size_t P>
void Cochain<P>::check_simplex(const Simplex& s) const {
  for (std::size_t i = 0; i <= P; ++i) {
    if (s[i] < 0 || s[i] >= cover_->charts()) throw std::out_of_range("chart index out of range");
    if (i > 0 && s[i - 1] >= s[i]) throw std::invalid_argument("cochain tuples must be strictly increasing");
  }
}

template <std::size_t P>
SuperOperator Cochain<P>::at(const Simplex& s) const {
  check_simplex(s);
  auto it = values_.find(s);
  return it == values_.end() ? SuperOperator(cover_->chart_signature(s[0])) : it->second;
}

template <std::size_t P>
void Cochain<P>::set(const Simplex& s, const SuperOperator& d) {
  check_simplex(s);
  require_same_signature(d.signature(), cover_->chart_signature(s[0]));
  if (d.is_zero()) {
    values_.erase(s);
  } else {
    values_.insert_or_assign(s, d);
  }
}

template <std::size_t P>
void Cochain<P>::add(const Simplex& s, const SuperOperator& d) {
  set(s, at(s) + d);
}

template <std::size_t P>
std::vector<typename Cochain<P>::Simplex> Cochain<P>::simplices() const {
  std::vector<Simplex> out;
  Simplex cur{};
  enumerate_increasing(cover_->charts(), cur, 0, 0, out);
  return out;
}

template <std::size_t P>
Cochain<P> Cochain<P>::operator-() const {
  return map([](const SuperOperator& d) { return -d; });
}

template <std::size_t P>
Cochain<P>& Cochain<P>::operator+=(const Cochain& o) {
  if (cover_ != o.cover_) throw std::invalid_argument("cochains live on different covers");
  for (const auto& [s, d] : o.values_) add(s, d);
  return *this;
}

template <std::size_t P>
Cochain<P>& Cochain<P>::operator-=(const Cochain& o) {
  if (cover_ != o.cover_) throw std::invalid_argument("cochains live on different covers");
  for (const auto& [s, d] : o.values_) add(s, -d);
  return *this;
}

template <std::size_t P>
std::string Cochain<P>::to_string() const {
  std::string r;
  for (const auto& [s, d] : values_) r += simplex_string(s.data(), P + 1) + " = " + d.to_string() + "\n";
  return r.empty() ? "0\n" : r;
}

template <std::size_t P>
int coefficient_degree(const Cochain<P>& c) {
  int deg = 0;
  for (const auto& [s, d] : c.values())
    for (const auto& [key, a] : d.terms())
      for (const auto& [i, f] : a.terms()) deg = std::max(deg, f.degree_bound());
  return deg;
}

template class Cochain<0>;
template class Cochain<1>;
template class Cochain<2>;
template class Cochain<3>;
template int coefficient_degree(const Cochain<0>&);
template int coefficient_degree(const Cochain<1>&);
template int coefficient_degree(const Cochain<2>&);

template <std::size_t P>
Automorphism GroupCochain<P>::at(const Simplex& s) const {
  auto it = values_.find(s);
  return it == values_.end() ? Automorphism::identity(cover_->chart_signature(s[0])) : it->second;
}

template <std::size_t P>
void GroupCochain<P>::set(const Simplex& s, const Automorphism& phi) {
  require_same_signature(phi.signature(), cover_->chart_signature(s[0]));
  if (phi.is_identity()) {
    values_.erase(s);
  } else {
    values_.insert_or_assign(s, phi);
  }
}

template <std::size_t P>
bool GroupCochain<P>::is_identity() const {
  return values_.empty();
}

template class GroupCochain<1>;
template class GroupCochain<2>;

// ---------------------------------------------------------------- coboundaries

Cochain1 d0(const Cochain0& v) {
  const Cover& cover = *v.cover();
  for (const auto& [s, d] : v.values()) require_overlap_regular(cover, d);
  Cochain1 r(v.cover());
  for (const auto& s : r.simplices()) {
    const int i = s[0], j = s[1];
    r.set(s, v.at({i}) - cover.transport(v.at({j}), j, i));
  }
  return r;
}

Cochain2 d1(const Cochain1& u) {
  const Cover& cover = *u.cover();
  for (const auto& [s, d] : u.values()) require_overlap_regular(cover, d);
  Cochain2 r(u.cover());
  for (const auto& s : r.simplices()) {
    const int i = s[0], j = s[1], k = s[2];
    r.set(s, u.at({i, j}) + cover.transport(u.at({j, k}), j, i) - u.at({i, k}));
  }
  return r;
}

Cochain3 d2(const Cochain2& c) {
  const Cover& cover = *c.cover();
  Cochain3 r(c.cover());
  for (const auto& s : r.simplices()) {
    const int i = s[0], j = s[1], k = s[2], l = s[3];
    r.set(s, cover.transport(c.at({j, k, l}), j, i) - c.at({i, k, l}) + c.at({i, j, l}) - c.at({i, j, k}));
  }
  return r;
}

// ---------------------------------------------------------------- non-abelian

AutCochain1 cochain_exp(const Cochain1& u) {
  AutCochain1 r(u.cover());
  for (const auto& [s, d] : u.values()) r.set(s, op_exp(d));
  return r;
}

AutCochain2 nab_d(const AutCochain1& phi) {
  const Cover& cover = *phi.cover();
  for (const auto& [s, a] : phi.values()) require_overlap_regular(cover, a.op());
  AutCochain2 r(phi.cover());
  Cochain2 shape(phi.cover());
  for (const auto& s : shape.simplices()) {
    const int i = s[0], j = s[1], k = s[2];
    const Automorphism jk(cover.transport(phi.at({j, k}).op(), j, i));
    r.set(s, phi.at({i, j}) * jk * phi.at({i, k}).inverse());
  }
  return r;
}

bool is_nonabelian_cocycle(const AutCochain1& phi) { return nab_d(phi).is_identity(); }

Cochain2 cochain_log(const AutCochain2& phi) {
  Cochain2 r(phi.cover());
  for (const auto& [s, a] : phi.values()) r.set(s, op_log(a));
  return r;
}

AutCochain1 twisted_product(const Cochain0& v, const Cochain1& u) {
  const Cover& cover = *u.cover();
  if (v.cover() != u.cover()) throw std::invalid_argument("cochains live on different covers");
  for (const auto& [s, d] : v.values()) require_overlap_regular(cover, d);
  for (const auto& [s, d] : u.values()) require_overlap_regular(cover, d);
  AutCochain1 r(u.cover());
  for (const auto& s : Cochain1(u.cover()).simplices()) {
    const int i = s[0], j = s[1];
    r.set(s, op_exp(v.at({i})) * op_exp(u.at(s)) * op_exp(-cover.transport(v.at({j}), j, i)));
  }
  return r;
}

Cochain1 twisted_action(const Cochain0& v, const Cochain1& u) {
  Cochain1 r(u.cover());
  const AutCochain1 g = twisted_product(v, u);
  for (const auto& [s, a] : g.values()) r.set(s, op_log(a));
  return r;
}

Cochain1 F2q(const Cochain0& v, const Cochain1& u, int q) {
  if (q < 2) throw std::invalid_argument("F2q needs q >= 2");
  Cochain1 r(u.cover());
  const AutCochain1 g = twisted_product(cochain_truncate(v, q - 1), cochain_truncate(u, q - 1));
  for (const auto& [s, a] : g.values()) r.set(s, truncate(a.op(), q));
  return r;
}

Cochain2 nab_d_truncated(const Cochain1& f, int q) {
  AutCochain1 phi(f.cover());
  for (const auto& [s, d] : f.values()) phi.set(s, Automorphism(SuperOperator::identity(d.signature()) + d));
  Cochain2 r(f.cover());
  const AutCochain2 n = nab_d(phi);
  for (const auto& [s, a] : n.values()) r.set(s, truncate(a.op(), q));
  return r;
}

// ---------------------------------------------------------------- P1 weight complex

bool operator<(const P1Basis& a, const P1Basis& b) {
  if (!(a.key == b.key)) return a.key < b.key;
  return subset_less(a.coeff, b.coeff);
}

std::vector<P1Basis> p1_operator_basis(int rank, int shift, int min_order, int max_order) {
  std::vector<P1Basis> out;
  const int full = 1 << rank;
  for (int s = 0; s < full; ++s) {
    const int m = set_size(static_cast<GeneratorSet>(s));
    for (int k = std::max(0, min_order - m); k + m <= max_order; ++k) {
      for (int i = 0; i < full; ++i) {
        if (set_size(static_cast<GeneratorSet>(i)) - m != shift) continue;
        out.push_back(P1Basis{static_cast<GeneratorSet>(i),
                              OperatorKey{Exponents{k, 0, 0}, static_cast<GeneratorSet>(s)}});
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<P1Basis> p1_derivation_basis(int rank, int k) { return p1_operator_basis(rank, 2 * k, 1, 1); }

struct P1WeightComplex::System {
  std::vector<SparseRow> rows;
  std::vector<std::size_t> chart0;  // basis index per column
  std::vector<std::size_t> chart1;
};

namespace {

// Visits c * z^p * e_I o K for every monomial piece of a chart-0 operator.
template <class F>
void for_each_monomial(const SuperOperator& d, F&& f) {
  for (const auto& [key, a] : d.terms()) {
    for (const auto& [s, g] : a.terms()) {
      if (!g.is_laurent()) throw std::domain_error("value not regular on the chart intersection");
      const auto& den = g.den().terms().front();
      const int shift = g.den().num_vars() ? den.first[0] : 0;
      for (const auto& [e, c] : g.num().terms()) {
        const int p = (g.num().num_vars() ? e[0] : 0) - shift;
        f(P1Basis{s, key}, p, Rational(c / den.second));
      }
    }
  }
}

}  // namespace

P1WeightComplex::P1WeightComplex(CoverPtr cover, std::vector<P1Basis> basis)
    : cover_(std::move(cover)), basis_(std::move(basis)) {
  if (cover_->mode() != CoverMode::kP1) throw std::invalid_argument("weight complex needs a p1 cover");
  std::sort(basis_.begin(), basis_.end());
  basis_.erase(std::unique(basis_.begin(), basis_.end()), basis_.end());
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    index_.emplace(basis_[b], b);
    dz_order_.push_back(basis_[b].key.alpha[0]);
  }
  const Signature& sig1 = cover_->chart_signature(1);
  transport_.resize(basis_.size());
  chart1_weight_.resize(basis_.size());
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    const SuperOperator t = cover_->transport(
        SuperOperator::term(FormSection::generator(sig1, basis_[b].coeff), basis_[b].key), 1, 0);
    bool first = true;
    for_each_monomial(t, [&](const P1Basis& row, int p, const Rational& c) {
      auto it = index_.find(row);
      if (it == index_.end()) throw std::logic_error("operator basis not closed under transport");
      const int weight = p - dz_order_[it->second];
      if (first) {
        chart1_weight_[b] = weight;
        first = false;
      } else if (weight != chart1_weight_[b]) {
        throw std::logic_error("transport is not weight homogeneous");
      }
      transport_[b][it->second] += c;
    });
  }
  if (basis_.empty()) return;
  min_weight_ = max_weight_ = -dz_order_[0];
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    min_weight_ = std::min({min_weight_, -dz_order_[b], chart1_weight_[b]});
    max_weight_ = std::max({max_weight_, -dz_order_[b], chart1_weight_[b]});
  }
}

P1WeightComplex::System P1WeightComplex::system(int weight) const {
  System sys;
  sys.rows.resize(basis_.size());
  for (std::size_t b = 0; b < basis_.size(); ++b)
    if (weight + dz_order_[b] >= 0) sys.chart0.push_back(b);
  for (std::size_t b = 0; b < basis_.size(); ++b)
    if (chart1_weight_[b] - weight >= 0) sys.chart1.push_back(b);
  std::size_t col = 0;
  for (std::size_t b : sys.chart0) sys.rows[b][col++] = Rational(1);
  for (std::size_t b : sys.chart1) {
    for (const auto& [row, c] : transport_[b]) sys.rows[row][col] -= c;
    ++col;
  }
  return sys;
}

P1WeightComplex::Dims P1WeightComplex::dims(int weight) const {
  const System sys = system(weight);
  const std::size_t cols = sys.chart0.size() + sys.chart1.size();
  const LinearSolution sol = solve_exact(sys.rows, std::vector<Rational>(sys.rows.size(), Rational(0)), cols);
  return Dims{static_cast<long>(cols - sol.rank), static_cast<long>(sys.rows.size() - sol.rank)};
}

P1WeightComplex::Dims P1WeightComplex::total() const {
  Dims t;
  if (basis_.empty()) return t;
  for (int weight = min_weight_; weight <= max_weight_; ++weight) {
    const Dims d = dims(weight);
    t.h0 += d.h0;
    t.h1 += d.h1;
  }
  return t;
}

std::optional<Cochain0> P1WeightComplex::solve(const SuperOperator& c) const {
  require_same_signature(c.signature(), cover_->chart_signature(0));
  std::map<int, std::vector<Rational>> rhs;
  for_each_monomial(c, [&](const P1Basis& row, int p, const Rational& coef) {
    auto it = index_.find(row);
    if (it == index_.end()) throw std::invalid_argument("operator outside the solver basis");
    auto& vec = rhs[p - dz_order_[it->second]];
    if (vec.empty()) vec.assign(basis_.size(), Rational(0));
    vec[it->second] += coef;
  });
  const Signature& sig0 = cover_->chart_signature(0);
  const Signature& sig1 = cover_->chart_signature(1);
  SuperOperator v0(sig0), v1(sig1);
  for (const auto& [weight, b] : rhs) {
    const System sys = system(weight);
    const LinearSolution sol = solve_exact(sys.rows, b, sys.chart0.size() + sys.chart1.size());
    if (!sol.consistent) return std::nullopt;
    std::size_t col = 0;
    for (std::size_t idx : sys.chart0) {
      const Rational& x = sol.x[col++];
      if (x == 0) continue;
      v0 += SuperOperator::term(
          FormSection(sig0, basis_[idx].coeff, power_of(sig0->variables, weight + dz_order_[idx], x)),
          basis_[idx].key);
    }
    for (std::size_t idx : sys.chart1) {
      const Rational& x = sol.x[col++];
      if (x == 0) continue;
      v1 += SuperOperator::term(
          FormSection(sig1, basis_[idx].coeff, power_of(sig1->variables, chart1_weight_[idx] - weight, x)),
          basis_[idx].key);
    }
  }
  Cochain0 v(cover_);
  v.set({0}, v0);
  v.set({1}, v1);
  return v;
}

// ---------------------------------------------------------------- solvers

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::kSolved:
      return "solved";
    case SolveStatus::kNoSolution:
      return "no solution";
    case SolveStatus::kUndecided:
      return "undecided within bound";
  }
  return "?";
}

namespace {

const P1WeightComplex& cached_complex(const CoverPtr& cover, int shift, int min_order, int max_order) {
  using Key = std::tuple<std::vector<int>, int, int, int>;
  static std::mutex mu;
  static std::map<Key, std::unique_ptr<P1WeightComplex>> cache;
  std::lock_guard<std::mutex> lock(mu);
  Key key{cover->degrees(), shift, min_order, max_order};
  auto it = cache.find(key);
  if (it == cache.end()) {
    auto complex = std::make_unique<P1WeightComplex>(
        cover, p1_operator_basis(cover->rank(), shift, min_order, max_order));
    it = cache.emplace(std::move(key), std::move(complex)).first;
  }
  return *it->second;
}

}  // namespace

SolveResult<Cochain0> solve_d0(const Cochain1& c, int bound) {
  if (!d1(c).is_zero()) throw std::invalid_argument("cochain is not a cocycle");
  const CoverPtr& cover = c.cover();
  SolveResult<Cochain0> out;
  Cochain0 v(cover);
  if (cover->mode() == CoverMode::kFormal) {
    for (int i = 1; i < cover->charts(); ++i) v.set({i}, -c.at({0, i}));
    if (coefficient_degree(v) > bound) {
      out.status = SolveStatus::kUndecided;
      out.detail = "solution needs coefficient degree " + std::to_string(coefficient_degree(v));
      return out;
    }
  } else {
    const SuperOperator c01 = c.at({0, 1});
    std::map<int, SuperOperator> parts;
    for (const auto& [key, a] : c01.terms())
      for (const auto& [s, f] : a.terms()) {
        const int shift = set_size(s) - set_size(key.contractions);
        auto it = parts.try_emplace(shift, c01.signature()).first;
        it->second.add_term(key, FormSection(c01.signature(), s, f));
      }
    for (const auto& [shift, part] : parts) {
      int min_order = 1;
      for (const auto& [key, a] : part.terms())
        if (key.order() == 0) min_order = 0;
      const auto sol = cached_complex(cover, shift, min_order, part.order()).solve(part);
      if (!sol) {
        out.status = SolveStatus::kNoSolution;
        out.detail = "shift " + std::to_string(shift) + " component has a nonzero class";
        return out;
      }
      v += *sol;
    }
  }
  if (d0(v) != c) throw std::logic_error("solve_d0 produced a wrong primitive");
  out.status = SolveStatus::kSolved;
  out.solution = std::move(v);
  return out;
}

SolveResult<Cochain1> solve_d1(const Cochain2& c, int bound) {
  if (!d2(c).is_zero()) throw std::invalid_argument("cochain is not a cocycle");
  const CoverPtr& cover = c.cover();
  SolveResult<Cochain1> out;
  Cochain1 u(cover);
  for (int i = 1; i < cover->charts(); ++i)
    for (int j = i + 1; j < cover->charts(); ++j) u.set({i, j}, -c.at({0, i, j}));
  if (coefficient_degree(u) > bound) {
    out.status = SolveStatus::kUndecided;
    out.detail = "solution needs coefficient degree " + std::to_string(coefficient_degree(u));
    return out;
  }
  if (d1(u) != -c) throw std::logic_error("solve_d1 produced a wrong primitive");
  out.status = SolveStatus::kSolved;
  out.solution = std::move(u);
  return out;
}

}  // namespace supercech
