// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "supercech/exterior.hpp"

#include <algorithm>
#include <stdexcept>

namespace supercech {

Signature make_signature(VarList variables, int rank) {
  if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("rank must lie in 1..7");
  if (variables->empty()) throw std::invalid_argument("at least one coordinate variable required");
  for (const auto& v : *variables) {
    if (v.empty() || v == "e" || v[0] == 'd')
      throw std::invalid_argument("reserved coordinate name '" + v + "'");
  }
  return std::make_shared<const AlgebraSignature>(AlgebraSignature{std::move(variables), rank});
}

Signature make_signature(std::vector<std::string> variables, int rank) {
  return make_signature(make_vars(std::move(variables)), rank);
}

bool same_signature(const Signature& a, const Signature& b) { return a == b || *a == *b; }

void require_same_signature(const Signature& a, const Signature& b) {
  if (!same_signature(a, b)) throw std::invalid_argument("signature mismatch");
}

GeneratorSet make_set(const std::vector<int>& indices) {
  unsigned s = 0;
  for (int a : indices) {
    if (a < 1 || a > kMaxRank) throw std::invalid_argument("generator index out of range");
    s |= 1u << (a - 1);
  }
  return static_cast<GeneratorSet>(s);
}

std::vector<int> set_indices(GeneratorSet s) {
  std::vector<int> out;
  for (int a = 1; a <= kMaxRank; ++a)
    if (s & generator_bit(a)) out.push_back(a);
  return out;
}

int wedge_sign(GeneratorSet i, GeneratorSet j) {
  int inversions = 0;
  for (int b = 1; b <= kMaxRank; ++b) {
    if (!(j & generator_bit(b))) continue;
    // elements of I strictly greater than b
    inversions += set_size(static_cast<GeneratorSet>(i & ~((1u << b) - 1u)));
  }
  return (inversions & 1) ? -1 : 1;
}

int contraction_sign(GeneratorSet i, int a) {
  const unsigned below = i & ((1u << (a - 1)) - 1u);
  return (std::popcount(below) & 1) ? -1 : 1;
}

bool subset_less(GeneratorSet a, GeneratorSet b) {
  const int sa = set_size(a), sb = set_size(b);
  if (sa != sb) return sa < sb;
  return set_indices(a) < set_indices(b);
}

FormSection::FormSection(Signature sig, const RationalFunction& f) : FormSection(std::move(sig), 0, f) {}

FormSection::FormSection(Signature sig, GeneratorSet s, const RationalFunction& f) : sig_(std::move(sig)) {
  add_term(s, f);
}

FormSection FormSection::one(Signature sig) {
  VarList vars = sig->variables;
  return FormSection(std::move(sig), RationalFunction(vars, Rational(1)));
}

FormSection FormSection::generator(Signature sig, GeneratorSet s) {
  VarList vars = sig->variables;
  return FormSection(std::move(sig), s, RationalFunction(vars, Rational(1)));
}

RationalFunction FormSection::coefficient(GeneratorSet s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? RationalFunction(sig_->variables) : it->second;
}

void FormSection::add_term(GeneratorSet s, const RationalFunction& f) {
  if (s >> sig_->rank) throw std::invalid_argument("generator index exceeds rank");
  if (f.is_zero()) return;
  if (!f.is_constant() && !same_vars(f.vars(), sig_->variables))
    throw std::invalid_argument("coefficient ring mismatch");
  auto [it, inserted] = terms_.try_emplace(s, f);
  if (!inserted) {
    it->second += f;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

FormSection FormSection::operator-() const {
  FormSection r(sig_);
  for (const auto& [s, f] : terms_) r.terms_.emplace(s, -f);
  return r;
}

FormSection& FormSection::operator+=(const FormSection& o) {
  require_same_signature(sig_, o.sig_);
  for (const auto& [s, f] : o.terms_) add_term(s, f);
  return *this;
}

FormSection& FormSection::operator-=(const FormSection& o) {
  require_same_signature(sig_, o.sig_);
  for (const auto& [s, f] : o.terms_) add_term(s, -f);
  return *this;
}

FormSection& FormSection::operator*=(const RationalFunction& f) {
  if (f.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, g] : terms_) g *= f;
  return *this;
}

FormSection& FormSection::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [s, g] : terms_) g *= c;
  return *this;
}

bool operator==(const FormSection& a, const FormSection& b) {
  return a.terms_ == b.terms_ && (a.terms_.empty() || same_signature(a.sig_, b.sig_));
}

FormSection FormSection::parity_twist() const {
  FormSection r = *this;
  for (auto& [s, f] : r.terms_)
    if (set_size(s) & 1) f = -f;
  return r;
}

FormSection FormSection::diff(std::size_t var) const {
  FormSection r(sig_);
  for (const auto& [s, f] : terms_) r.add_term(s, rf_diff(f, var));
  return r;
}

FormSection FormSection::contract(int a) const {
  const GeneratorSet bit = generator_bit(a);
  FormSection r(sig_);
  for (const auto& [s, f] : terms_) {
    if (!(s & bit)) continue;
    const GeneratorSet rest = static_cast<GeneratorSet>(s & ~bit);
    r.add_term(rest, contraction_sign(s, a) < 0 ? -f : f);
  }
  return r;
}

int FormSection::max_degree() const {
  int d = -1;
  for (const auto& [s, f] : terms_) d = std::max(d, set_size(s));
  return d;
}

int FormSection::min_degree() const {
  int d = kMaxRank + 1;
  for (const auto& [s, f] : terms_) d = std::min(d, set_size(s));
  return terms_.empty() ? -1 : d;
}

bool FormSection::is_homogeneous() const { return terms_.empty() || min_degree() == max_degree(); }

std::string set_to_string(GeneratorSet s) {
  std::string out = "e[";
  bool first = true;
  for (int a : set_indices(s)) {
    if (!first) out += ',';
    out += std::to_string(a);
    first = false;
  }
  return out + "]";
}

namespace {

// A coefficient as a product factor: parenthesized when it is a sum.
std::string factor_string(const RationalFunction& f, bool& negative) {
  negative = false;
  const bool single = f.num().terms().size() == 1;
  if (single) {
    RationalFunction g = f;
    if (f.num().terms()[0].second < 0) {
      negative = true;
      g = -f;
    }
    return g.to_string();
  }
  return "(" + f.to_string() + ")";
}

}  // namespace

std::string FormSection::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<GeneratorSet> order;
  for (const auto& [s, f] : terms_) order.push_back(s);
  std::sort(order.begin(), order.end(), subset_less);
  std::string out;
  bool first = true;
  for (GeneratorSet s : order) {
    const RationalFunction& f = terms_.at(s);
    bool neg = false;
    std::string coef = factor_string(f, neg);
    std::string body;
    if (s == 0) {
      body = coef;
    } else if (coef == "1") {
      body = set_to_string(s);
    } else {
      body = coef + "*" + set_to_string(s);
    }
    if (first) {
      out = (neg ? "-" : "") + body;
      first = false;
    } else {
      out += (neg ? " - " : " + ") + body;
    }
  }
  return out;
}

FormSection wedge(const FormSection& a, const FormSection& b) {
  require_same_signature(a.signature(), b.signature());
  FormSection r(a.signature());
  for (const auto& [s, f] : a.terms()) {
    for (const auto& [t, g] : b.terms()) {
      if (s & t) continue;
      RationalFunction h = f * g;
      if (wedge_sign(s, t) < 0) h = -h;
      r.add_term(static_cast<GeneratorSet>(s | t), h);
    }
  }
  return r;
}

FormSection degree_project(const FormSection& a, int j) {
  FormSection r(a.signature());
  for (const auto& [s, f] : a.terms())
    if (set_size(s) == j) r.add_term(s, f);
  return r;
}

}  // namespace supercech
