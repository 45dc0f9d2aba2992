// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "supercech/operators.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <vector>

namespace supercech {

bool operator<(const OperatorKey& a, const OperatorKey& b) {
  const int oa = a.order(), ob = b.order();
  if (oa != ob) return oa < ob;
  if (a.alpha != b.alpha) return a.alpha > b.alpha;  // d_x before d_y, higher powers first
  return subset_less(a.contractions, b.contractions);
}

SuperOperator SuperOperator::identity(Signature sig) {
  FormSection one = FormSection::one(sig);
  SuperOperator d(std::move(sig));
  d.terms_.emplace(OperatorKey{}, std::move(one));
  return d;
}

SuperOperator SuperOperator::multiplication(const FormSection& c) { return term(c, OperatorKey{}); }

SuperOperator SuperOperator::derivative(Signature sig, std::size_t var) {
  if (var >= sig->variables->size()) throw std::invalid_argument("unknown variable");
  OperatorKey key;
  key.alpha[var] = 1;
  return term(FormSection::one(std::move(sig)), key);
}

SuperOperator SuperOperator::contraction(Signature sig, int a) {
  if (a < 1 || a > sig->rank) throw std::invalid_argument("generator index exceeds rank");
  OperatorKey key;
  key.contractions = generator_bit(a);
  return term(FormSection::one(std::move(sig)), key);
}

SuperOperator SuperOperator::term(const FormSection& c, const OperatorKey& key) {
  SuperOperator d(c.signature());
  d.add_term(key, c);
  return d;
}

int SuperOperator::order() const {
  int o = -1;
  for (const auto& [k, c] : terms_) o = std::max(o, k.order());
  return o;
}

void SuperOperator::add_term(const OperatorKey& key, const FormSection& c) {
  require_same_signature(sig_, c.signature());
  if (key.contractions >> sig_->rank) throw std::invalid_argument("generator index exceeds rank");
  for (std::size_t i = sig_->variables->size(); i < kMaxVariables; ++i)
    if (key.alpha[i] != 0) throw std::invalid_argument("unknown variable");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SuperOperator SuperOperator::operator-() const {
  SuperOperator r(sig_);
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
  return r;
}

SuperOperator& SuperOperator::operator+=(const SuperOperator& o) {
  require_same_signature(sig_, o.sig_);
  for (const auto& [k, c] : o.terms_) add_term(k, c);
  return *this;
}

SuperOperator& SuperOperator::operator-=(const SuperOperator& o) {
  require_same_signature(sig_, o.sig_);
  for (const auto& [k, c] : o.terms_) add_term(k, -c);
  return *this;
}

SuperOperator& SuperOperator::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, f] : terms_) f *= c;
  return *this;
}

SuperOperator& SuperOperator::operator*=(const RationalFunction& f) {
  if (f.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [k, c] : terms_) c *= f;
  return *this;
}

bool operator==(const SuperOperator& a, const SuperOperator& b) {
  return a.terms_ == b.terms_ && (a.terms_.empty() || same_signature(a.sig_, b.sig_));
}

std::vector<int> SuperOperator::shifts() const {
  std::set<int> s;
  for (const auto& [k, c] : terms_)
    for (const auto& [i, f] : c.terms()) s.insert(set_size(i) - set_size(k.contractions));
  return {s.begin(), s.end()};
}

bool SuperOperator::is_even() const {
  for (int s : shifts())
    if (s % 2 != 0) return false;
  return true;
}

int SuperOperator::min_shift() const {
  const auto s = shifts();
  if (s.empty()) throw std::logic_error("zero operator has no shift");
  return s.front();
}

int SuperOperator::max_shift() const {
  const auto s = shifts();
  if (s.empty()) throw std::logic_error("zero operator has no shift");
  return s.back();
}

namespace {

std::string key_string(const OperatorKey& k, const AlgebraSignature& sig) {
  std::string out;
  auto append = [&out](const std::string& f) {
    if (!out.empty()) out += '*';
    out += f;
  };
  for (std::size_t i = 0; i < sig.variables->size(); ++i) {
    if (k.alpha[i] == 0) continue;
    std::string f = "d" + (*sig.variables)[i];
    if (k.alpha[i] != 1) f += "^" + std::to_string(k.alpha[i]);
    append(f);
  }
  for (int a : set_indices(k.contractions)) append("de[" + std::to_string(a) + "]");
  return out;
}

}  // namespace

std::string SuperOperator::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const std::string ks = key_string(k, *sig_);
    std::vector<GeneratorSet> order;
    for (const auto& [s, f] : c.terms()) order.push_back(s);
    std::sort(order.begin(), order.end(), subset_less);
    for (GeneratorSet s : order) {
      const RationalFunction& f = c.terms().at(s);
      bool neg = false;
      std::string coef;
      if (f.num().terms().size() == 1) {
        RationalFunction g = f;
        if (f.num().terms()[0].second < 0) {
          neg = true;
          g = -f;
        }
        coef = g.to_string();
      } else {
        coef = "(" + f.to_string() + ")";
      }
      std::vector<std::string> factors;
      if (coef != "1" || (s == 0 && ks.empty())) factors.push_back(coef);
      if (s != 0) factors.push_back(set_to_string(s));
      if (!ks.empty()) factors.push_back(ks);
      std::string body;
      for (std::size_t i = 0; i < factors.size(); ++i) body += (i ? "*" : "") + factors[i];
      if (first) {
        out = (neg ? "-" : "") + body;
        first = false;
      } else {
        out += (neg ? " - " : " + ") + body;
      }
    }
  }
  return out;
}

FormSection apply(const SuperOperator& d, const FormSection& a) {
  require_same_signature(d.signature(), a.signature());
  FormSection out(d.signature());
  for (const auto& [k, c] : d.terms()) {
    FormSection b = a;
    const auto contr = set_indices(k.contractions);
    for (auto it = contr.rbegin(); it != contr.rend() && !b.is_zero(); ++it) b = b.contract(*it);
    for (std::size_t i = 0; i < kMaxVariables; ++i)
      for (int n = 0; n < k.alpha[i] && !b.is_zero(); ++n) b = b.diff(i);
    if (!b.is_zero()) out += wedge(c, b);
  }
  return out;
}

namespace {

// Moves the word d_x^alpha o d/de_S past left multiplication by c:
//   (d^alpha d_S) o c = sum_j c'_j o W_j,
// with each W_j a subword of d^alpha d_S (hence still normal ordered).
std::map<OperatorKey, FormSection> push_through(const OperatorKey& word, const FormSection& c) {
  std::map<OperatorKey, FormSection> pieces;
  pieces.emplace(OperatorKey{}, c);
  // Rightmost primitive first: contractions in descending order.
  const auto contr = set_indices(word.contractions);
  for (auto it = contr.rbegin(); it != contr.rend(); ++it) {
    const int a = *it;
    std::map<OperatorKey, FormSection> next;
    for (const auto& [w, f] : pieces) {
      FormSection hit = f.contract(a);
      if (!hit.is_zero()) {
        auto [pos, ins] = next.try_emplace(w, hit);
        if (!ins) pos->second += hit;
      }
      OperatorKey passed = w;
      passed.contractions = static_cast<GeneratorSet>(passed.contractions | generator_bit(a));
      FormSection tw = f.parity_twist();
      auto [pos, ins] = next.try_emplace(passed, tw);
      if (!ins) pos->second += tw;
    }
    pieces.clear();
    for (auto& [w, f] : next)
      if (!f.is_zero()) pieces.emplace(w, std::move(f));
  }
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    for (int n = 0; n < word.alpha[i]; ++n) {
      std::map<OperatorKey, FormSection> next;
      for (const auto& [w, f] : pieces) {
        FormSection hit = f.diff(i);
        if (!hit.is_zero()) {
          auto [pos, ins] = next.try_emplace(w, hit);
          if (!ins) pos->second += hit;
        }
        OperatorKey passed = w;
        passed.alpha[i] += 1;
        auto [pos, ins] = next.try_emplace(passed, f);
        if (!ins) pos->second += f;
      }
      pieces.clear();
      for (auto& [w, f] : next)
        if (!f.is_zero()) pieces.emplace(w, std::move(f));
    }
  }
  return pieces;
}

}  // namespace

SuperOperator compose(const SuperOperator& d1, const SuperOperator& d2) {
  require_same_signature(d1.signature(), d2.signature());
  SuperOperator out(d1.signature());
  for (const auto& [k1, c1] : d1.terms()) {
    for (const auto& [k2, c2] : d2.terms()) {
      const auto pieces = k1.order() == 0 ? std::map<OperatorKey, FormSection>{{OperatorKey{}, c2}}
                                          : push_through(k1, c2);
      for (const auto& [w, f] : pieces) {
        if (w.contractions & k2.contractions) continue;
        FormSection coef = wedge(c1, f);
        if (coef.is_zero()) continue;
        OperatorKey key;
        for (std::size_t i = 0; i < kMaxVariables; ++i) key.alpha[i] = w.alpha[i] + k2.alpha[i];
        key.contractions = static_cast<GeneratorSet>(w.contractions | k2.contractions);
        if (wedge_sign(w.contractions, k2.contractions) < 0) coef = -coef;
        out.add_term(key, coef);
      }
    }
  }
  return out;
}

SuperOperator commutator(const SuperOperator& d1, const SuperOperator& d2) {
  return compose(d1, d2) - compose(d2, d1);
}

SuperOperator power(const SuperOperator& d, int k) {
  if (k < 0) throw std::invalid_argument("negative operator power");
  SuperOperator r = SuperOperator::identity(d.signature());
  for (int i = 0; i < k; ++i) r = compose(d, r);
  return r;
}

bool is_derivation(const SuperOperator& d) {
  for (const auto& [k, c] : d.terms())
    if (k.order() != 1) return false;
  return true;
}

SuperOperator components_between(const SuperOperator& d, int lo, int hi) {
  SuperOperator r(d.signature());
  for (const auto& [k, c] : d.terms()) {
    const int m = set_size(k.contractions);
    FormSection part(d.signature());
    for (const auto& [s, f] : c.terms()) {
      const int shift = set_size(s) - m;
      if (shift >= lo && shift <= hi) part.add_term(s, f);
    }
    r.add_term(k, part);
  }
  return r;
}

SuperOperator component(const SuperOperator& d, int shift) { return components_between(d, shift, shift); }

void require_even(const SuperOperator& d) {
  for (int s : d.shifts())
    if (s % 2 != 0) throw std::domain_error("odd component (shift " + std::to_string(s) + ")");
}

std::map<int, SuperOperator> degree_components(const SuperOperator& d) {
  require_even(d);
  std::map<int, SuperOperator> out;
  for (int s : d.shifts()) out.emplace(s, component(d, s));
  return out;
}

}  // namespace supercech
