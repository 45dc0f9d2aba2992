// Copyright (c) 2026 The supercech Authors. All rights reserved.
// Released under Apache 2.0 license as described in the file LICENSE.
#include "supercech/problem.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace supercech {

ParseError::ParseError(std::string code, int line, int column, const std::string& message,
                       std::vector<std::string> expected)
    : std::runtime_error([&] {
        std::string m = "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message;
        if (!expected.empty()) {
          m += " (expected ";
          for (std::size_t i = 0; i < expected.size(); ++i) m += (i ? ", " : "") + expected[i];
          m += ")";
        }
        return m;
      }()),
      code_(std::move(code)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

const Cochain1* ProblemFile::cochain1(const std::string& name) const {
  auto it = cochains1.find(name);
  return it == cochains1.end() ? nullptr : &it->second;
}

const Cochain0* ProblemFile::cochain0(const std::string& name) const {
  auto it = cochains0.find(name);
  return it == cochains0.end() ? nullptr : &it->second;
}

namespace {

// ---------------------------------------------------------------- expressions

enum class Tok { kNumber, kIdent, kLBracket, kRBracket, kComma, kPlus, kMinus, kStar, kSlash, kCaret, kLParen, kRParen, kEnd };

struct Token {
  Tok kind;
  std::string text;
  int column;
};

std::vector<Token> lex(std::string_view s, int line, int column) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    const int col = column + static_cast<int>(i);
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Tok::kNumber, std::string(s.substr(i, j - i)), col});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) ++j;
      out.push_back({Tok::kIdent, std::string(s.substr(i, j - i)), col});
      i = j;
      continue;
    }
    Tok k;
    switch (c) {
      case '[': k = Tok::kLBracket; break;
      case ']': k = Tok::kRBracket; break;
      case ',': k = Tok::kComma; break;
      case '+': k = Tok::kPlus; break;
      case '-': k = Tok::kMinus; break;
      case '*': k = Tok::kStar; break;
      case '/': k = Tok::kSlash; break;
      case '^': k = Tok::kCaret; break;
      case '(': k = Tok::kLParen; break;
      case ')': k = Tok::kRParen; break;
      default:
        throw ParseError("lexical", line, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({k, std::string(1, c), col});
    ++i;
  }
  out.push_back({Tok::kEnd, "", column + static_cast<int>(s.size())});
  return out;
}

std::string describe(const Token& t) { return t.kind == Tok::kEnd ? "end of input" : "'" + t.text + "'"; }

const std::vector<std::string> kFactorStart = {"number", "variable", "e[", "de[", "d<variable>", "(", "-"};

class ExprParser {
 public:
  ExprParser(std::vector<Token> toks, Signature sig, int line) : toks_(std::move(toks)), sig_(std::move(sig)), line_(line) {}

  SuperOperator parse() {
    SuperOperator r = expr();
    if (peek().kind != Tok::kEnd)
      throw ParseError("syntax", line_, peek().column, "unexpected " + describe(peek()), {"+", "-", "*", "/", "end of input"});
    return r;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++pos_;
    return true;
  }
  const Token& expect(Tok k, const std::string& what) {
    if (peek().kind != k) throw ParseError("syntax", line_, peek().column, "unexpected " + describe(peek()), {what});
    return take();
  }

  SuperOperator constant(const Rational& c) const {
    return SuperOperator::multiplication(FormSection(sig_, RationalFunction(sig_->variables, c)));
  }

  static std::optional<RationalFunction> as_function(const SuperOperator& d) {
    if (d.is_zero()) return RationalFunction(d.signature()->variables);
    if (d.size() != 1) return std::nullopt;
    const auto& [key, c] = *d.terms().begin();
    if (!(key == OperatorKey{})) return std::nullopt;
    if (c.terms().size() != 1 || c.terms().begin()->first != 0) return std::nullopt;
    return c.terms().begin()->second;
  }

  SuperOperator expr() {
    SuperOperator r = term();
    while (true) {
      if (accept(Tok::kPlus)) {
        r += term();
      } else if (accept(Tok::kMinus)) {
        r -= term();
      } else {
        return r;
      }
    }
  }

  SuperOperator term() {
    SuperOperator r = unary();
    while (true) {
      if (accept(Tok::kStar)) {
        r = compose(r, unary());
      } else if (peek().kind == Tok::kSlash) {
        const int col = take().column;
        const SuperOperator d = unary();
        const auto f = as_function(d);
        if (!f) throw ParseError("value", line_, col, "divisor must be a function of the coordinates");
        if (f->is_zero()) throw ParseError("value", line_, col, "zero denominator");
        r = compose(r, SuperOperator::multiplication(FormSection(sig_, f->inverse())));
      } else {
        return r;
      }
    }
  }

  SuperOperator unary() {
    if (accept(Tok::kMinus)) return -unary();
    return factor();
  }

  SuperOperator factor() {
    SuperOperator base = primary();
    if (peek().kind != Tok::kCaret) return base;
    const int col = take().column;
    const bool negative = accept(Tok::kMinus);
    const Token& n = expect(Tok::kNumber, "integer exponent");
    if (n.text.size() > 3) throw ParseError("value", line_, n.column, "exponent too large");
    const int k = (negative ? -1 : 1) * std::stoi(n.text);
    if (auto f = as_function(base)) {
      if (k < 0 && f->is_zero()) throw ParseError("value", line_, col, "zero denominator");
      return SuperOperator::multiplication(FormSection(sig_, f->pow(k)));
    }
    if (k < 0) throw ParseError("value", line_, col, "negative power of an operator");
    return power(base, k);
  }

  int index(const Token& t) {
    if (t.text.size() > 2) throw ParseError("generator-index", line_, t.column, "generator index " + t.text + " exceeds rank " + std::to_string(sig_->rank));
    const int a = std::stoi(t.text);
    if (a < 1 || a > sig_->rank)
      throw ParseError("generator-index", line_, t.column,
                       "generator index " + t.text + " exceeds rank " + std::to_string(sig_->rank));
    return a;
  }

  SuperOperator primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::kNumber:
        take();
        return constant(Rational(mpz_class(t.text)));
      case Tok::kLParen: {
        take();
        SuperOperator r = expr();
        expect(Tok::kRParen, ")");
        return r;
      }
      case Tok::kIdent:
        break;
      default:
        throw ParseError("syntax", line_, t.column, "unexpected " + describe(t), kFactorStart);
    }
    take();
    const auto& vars = *sig_->variables;
    if (t.text == "e") {
      expect(Tok::kLBracket, "[");
      FormSection f = FormSection::one(sig_);
      do {
        const int a = index(expect(Tok::kNumber, "generator index"));
        f = wedge(f, FormSection::generator(sig_, generator_bit(a)));
      } while (accept(Tok::kComma));
      expect(Tok::kRBracket, "]");
      return SuperOperator::multiplication(f);
    }
    if (t.text == "de") {
      expect(Tok::kLBracket, "[");
      const int a = index(expect(Tok::kNumber, "generator index"));
      expect(Tok::kRBracket, "]");
      return SuperOperator::contraction(sig_, a);
    }
    if (auto it = std::find(vars.begin(), vars.end(), t.text); it != vars.end())
      return SuperOperator::multiplication(
          FormSection(sig_, RationalFunction::variable(sig_->variables, static_cast<std::size_t>(it - vars.begin()))));
    if (t.text.size() > 1 && t.text[0] == 'd') {
      if (auto it = std::find(vars.begin(), vars.end(), t.text.substr(1)); it != vars.end())
        return SuperOperator::derivative(sig_, static_cast<std::size_t>(it - vars.begin()));
    }
    std::vector<std::string> expected;
    for (const auto& v : vars) expected.push_back(v);
    for (const auto& v : vars) expected.push_back("d" + v);
    expected.push_back("e[");
    expected.push_back("de[");
    throw ParseError("unknown-identifier", line_, t.column, "unknown identifier '" + t.text + "'", expected);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Signature sig_;
  int line_;
};

// ---------------------------------------------------------------- problem files

struct Entry {
  std::string value;
  int line;
  int column;
};

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

long parse_int(const Entry& e) {
  std::string s = trim(e.value);
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(s, &pos);
  } catch (const std::exception&) {
    throw ParseError("value", e.line, e.column, "expected an integer", {"integer"});
  }
  if (pos != s.size()) throw ParseError("value", e.line, e.column + static_cast<int>(pos), "expected an integer", {"integer"});
  return v;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(trim(item));
  return out;
}

std::vector<int> parse_int_list(const Entry& e) {
  std::vector<int> out;
  for (const auto& item : split_list(e.value)) out.push_back(static_cast<int>(parse_int(Entry{item, e.line, e.column})));
  return out;
}

struct CochainLine {
  std::string name;
  std::string base;
  std::optional<int> shift;
  std::vector<int> tuple;
  std::string expr;
  int line;
  int name_column;
  int tuple_column;
  int expr_column;
};

CochainLine parse_cochain_line(const std::string& raw, int line, int column) {
  CochainLine cl;
  cl.line = line;
  cl.name_column = column;
  std::size_t i = 0;
  while (i < raw.size() && (std::isalnum(static_cast<unsigned char>(raw[i])) || raw[i] == '_')) ++i;
  cl.name = raw.substr(0, i);
  if (!is_identifier(cl.name)) throw ParseError("syntax", line, column, "expected a cochain name", {"identifier"});
  std::size_t d = cl.name.size();
  while (d > 0 && std::isdigit(static_cast<unsigned char>(cl.name[d - 1]))) --d;
  cl.base = cl.name.substr(0, d);
  if (d < cl.name.size()) {
    if (cl.name.size() - d > 2) throw ParseError("value", line, column + static_cast<int>(d), "declared shift too large");
    cl.shift = std::stoi(cl.name.substr(d));
  }
  auto skip = [&] {
    while (i < raw.size() && std::isspace(static_cast<unsigned char>(raw[i]))) ++i;
  };
  skip();
  if (i >= raw.size() || raw[i] != '[')
    throw ParseError("syntax", line, column + static_cast<int>(i), "expected a chart tuple", {"["});
  cl.tuple_column = column + static_cast<int>(i);
  ++i;
  while (true) {
    skip();
    std::size_t j = i;
    while (j < raw.size() && std::isdigit(static_cast<unsigned char>(raw[j]))) ++j;
    if (j == i) throw ParseError("syntax", line, column + static_cast<int>(i), "expected a chart index", {"integer"});
    if (j - i > 3) throw ParseError("chart-index", line, column + static_cast<int>(i), "chart index out of range");
    cl.tuple.push_back(std::stoi(raw.substr(i, j - i)));
    i = j;
    skip();
    if (i < raw.size() && raw[i] == ',') {
      ++i;
      continue;
    }
    if (i < raw.size() && raw[i] == ']') {
      ++i;
      break;
    }
    throw ParseError("syntax", line, column + static_cast<int>(i), "malformed chart tuple", {",", "]"});
  }
  skip();
  if (i >= raw.size() || raw[i] != '=') throw ParseError("syntax", line, column + static_cast<int>(i), "expected '='", {"="});
  ++i;
  skip();
  cl.expr_column = column + static_cast<int>(i);
  cl.expr = raw.substr(i);
  if (trim(cl.expr).empty()) throw ParseError("syntax", line, cl.expr_column, "missing expression", kFactorStart);
  return cl;
}

void check_shifts(const SuperOperator& d, const CochainLine& cl) {
  for (const auto& [key, c] : d.terms()) {
    for (const auto& [s, f] : c.terms()) {
      const int shift = set_size(s) - set_size(key.contractions);
      if (shift % 2 != 0)
        throw ParseError("parity", cl.line, cl.expr_column,
                         "odd-parity component of shift " + std::to_string(shift) + " in " + cl.name);
      if (cl.shift && shift != *cl.shift)
        throw ParseError("shift-mismatch", cl.line, cl.expr_column,
                         cl.name + " declares shift " + std::to_string(*cl.shift) + " but has a component of shift " +
                             std::to_string(shift));
    }
  }
}

template <std::size_t P>
void add_entry(std::map<std::string, Cochain<P>>& into, const CoverPtr& cover, const CochainLine& cl,
               const SuperOperator& value) {
  auto it = into.try_emplace(cl.base, cover).first;
  typename Cochain<P>::Simplex s{};
  for (std::size_t i = 0; i <= P; ++i) s[i] = cl.tuple[i] - 1;
  it->second.add(s, value);
}

}  // namespace

SuperOperator parse_operator(std::string_view text, const Signature& sig, int line, int column) {
  ExprParser p(lex(text, line, column), sig, line);
  return p.parse();
}

ProblemFile parse_problem(std::string_view text) {
  static const std::map<std::string, std::set<std::string>> kKeys = {
      {"cover", {"mode", "charts", "degrees"}},
      {"signature", {"variables", "rank"}},
      {"task", {"q", "bound", "seed", "trials", "k"}},
      {"cochains", {}}};
  std::map<std::string, std::map<std::string, Entry>> sections;
  std::vector<std::pair<std::string, std::pair<int, int>>> cochain_lines;
  std::string section;
  int line_no = 0;
  std::stringstream in{std::string(text)};
  std::string raw;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::size_t lead = 0;
    while (lead < raw.size() && std::isspace(static_cast<unsigned char>(raw[lead]))) ++lead;
    const std::string line = trim(raw);
    if (line.empty()) continue;
    const int col = static_cast<int>(lead) + 1;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("syntax", line_no, col, "malformed section header", {"]"});
      section = trim(std::string_view(line).substr(1, line.size() - 2));
      if (!kKeys.count(section))
        throw ParseError("section", line_no, col + 1, "unknown section '" + section + "'",
                         {"cover", "signature", "task", "cochains"});
      if (sections.count(section)) throw ParseError("duplicate", line_no, col, "section '" + section + "' repeated");
      sections[section];
      continue;
    }
    if (section.empty()) throw ParseError("syntax", line_no, col, "entry outside of a section", {"[section]"});
    if (section == "cochains") {
      cochain_lines.push_back({line, {line_no, col}});
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("syntax", line_no, col + static_cast<int>(line.size()), "expected '='", {"="});
    const std::string key = trim(std::string_view(line).substr(0, eq));
    if (!kKeys.at(section).count(key)) {
      std::vector<std::string> allowed(kKeys.at(section).begin(), kKeys.at(section).end());
      throw ParseError("key", line_no, col, "unknown key '" + key + "' in [" + section + "]", allowed);
    }
    auto& sec = sections[section];
    if (sec.count(key)) throw ParseError("duplicate", line_no, col, "key '" + key + "' repeated");
    std::size_t vstart = eq + 1;
    while (vstart < line.size() && std::isspace(static_cast<unsigned char>(line[vstart]))) ++vstart;
    sec[key] = Entry{line.substr(eq + 1), line_no, col + static_cast<int>(vstart)};
  }

  auto find = [&](const std::string& sec, const std::string& key) -> const Entry* {
    auto s = sections.find(sec);
    if (s == sections.end()) return nullptr;
    auto k = s->second.find(key);
    return k == s->second.end() ? nullptr : &k->second;
  };

  ProblemFile p;
  const Entry* mode = find("cover", "mode");
  if (!mode) throw ParseError("key", line_no, 1, "missing cover mode", {"mode = formal", "mode = p1"});
  const std::string mode_value = trim(mode->value);
  const Entry* rank = find("signature", "rank");
  if (mode_value == "p1") {
    const Entry* degrees = find("cover", "degrees");
    if (!degrees) throw ParseError("key", mode->line, mode->column, "p1 mode needs degrees", {"degrees"});
    const std::vector<int> l = parse_int_list(*degrees);
    if (l.empty() || l.size() > static_cast<std::size_t>(kMaxRank))
      throw ParseError("value", degrees->line, degrees->column, "between 1 and 7 degrees required");
    if (const Entry* charts = find("cover", "charts"); charts && parse_int(*charts) != 2)
      throw ParseError("value", charts->line, charts->column, "p1 mode has exactly 2 charts");
    if (rank && parse_int(*rank) != static_cast<long>(l.size()))
      throw ParseError("value", rank->line, rank->column, "rank must equal the number of degrees");
    if (const Entry* vars = find("signature", "variables"))
      throw ParseError("key", vars->line, vars->column, "p1 coordinates are fixed to z and w");
    p.cover = Cover::p1(l);
  } else if (mode_value == "formal") {
    const Entry* charts = find("cover", "charts");
    if (!charts) throw ParseError("key", mode->line, mode->column, "formal mode needs a chart count", {"charts"});
    if (!rank) throw ParseError("key", line_no, 1, "formal mode needs a rank", {"rank"});
    if (find("cover", "degrees")) {
      const Entry* d = find("cover", "degrees");
      throw ParseError("key", d->line, d->column, "degrees apply to p1 mode only");
    }
    const long n = parse_int(*rank);
    if (n < 1 || n > kMaxRank) throw ParseError("value", rank->line, rank->column, "rank must lie in 1..7");
    const long c = parse_int(*charts);
    if (c < 2 || c > 8) throw ParseError("value", charts->line, charts->column, "chart count must lie in 2..8");
    std::vector<std::string> vars{"x"};
    if (const Entry* v = find("signature", "variables")) {
      vars = split_list(v->value);
      std::set<std::string> seen;
      if (vars.empty() || vars.size() > kMaxVariables)
        throw ParseError("value", v->line, v->column, "between 1 and 3 variables required");
      for (const auto& name : vars) {
        if (!is_identifier(name) || name == "e" || name[0] == 'd' || !seen.insert(name).second)
          throw ParseError("value", v->line, v->column, "invalid or repeated variable name '" + name + "'");
      }
    }
    p.cover = Cover::formal(static_cast<int>(c), make_signature(vars, static_cast<int>(n)));
  } else {
    throw ParseError("value", mode->line, mode->column, "unknown cover mode '" + mode_value + "'", {"formal", "p1"});
  }

  if (const Entry* e = find("task", "q")) p.task.q = static_cast<int>(parse_int(*e));
  if (const Entry* e = find("task", "bound")) p.task.bound = static_cast<int>(parse_int(*e));
  if (const Entry* e = find("task", "k")) p.task.k = static_cast<int>(parse_int(*e));
  if (const Entry* e = find("task", "trials")) p.task.trials = static_cast<int>(parse_int(*e));
  if (const Entry* e = find("task", "seed")) {
    const long s = parse_int(*e);
    if (s < 0) throw ParseError("value", e->line, e->column, "seed must be non-negative");
    p.task.seed = static_cast<std::uint64_t>(s);
  }

  std::set<std::pair<std::string, std::vector<int>>> seen;
  std::map<std::string, std::size_t> arity;
  for (const auto& [raw_line, pos] : cochain_lines) {
    const CochainLine cl = parse_cochain_line(raw_line, pos.first, pos.second);
    for (std::size_t i = 0; i < cl.tuple.size(); ++i) {
      if (cl.tuple[i] < 1 || cl.tuple[i] > p.cover->charts())
        throw ParseError("chart-index", cl.line, cl.tuple_column,
                         "chart index " + std::to_string(cl.tuple[i]) + " out of range 1.." + std::to_string(p.cover->charts()));
      if (i > 0 && cl.tuple[i - 1] >= cl.tuple[i])
        throw ParseError("chart-index", cl.line, cl.tuple_column, "chart tuple must be strictly increasing");
    }
    if (cl.tuple.size() > 2) throw ParseError("value", cl.line, cl.tuple_column, "only 0- and 1-cochains are supported");
    if (!seen.insert({cl.name, cl.tuple}).second)
      throw ParseError("duplicate", cl.line, cl.name_column, "entry " + cl.name + " repeated for this tuple");
    if (auto [it, inserted] = arity.try_emplace(cl.base, cl.tuple.size()); !inserted && it->second != cl.tuple.size())
      throw ParseError("value", cl.line, cl.name_column, "cochain " + cl.base + " used with different tuple sizes");
    const Signature& sig = p.cover->chart_signature(cl.tuple[0] - 1);
    const SuperOperator value = parse_operator(cl.expr, sig, cl.line, cl.expr_column);
    check_shifts(value, cl);
    if (cl.tuple.size() == 1) {
      add_entry(p.cochains0, p.cover, cl, value);
    } else {
      add_entry(p.cochains1, p.cover, cl, value);
    }
  }
  return p;
}

namespace {

template <std::size_t P>
void render_cochains(std::ostringstream& os, const std::map<std::string, Cochain<P>>& cochains) {
  for (const auto& [name, c] : cochains) {
    if (c.is_zero()) {
      os << name << simplex_label(c.simplices().front()) << " = 0\n";
      continue;
    }
    for (const auto& [s, d] : c.values()) os << name << simplex_label(s) << " = " << d << "\n";
  }
}

}  // namespace

std::string render_problem(const ProblemFile& p) {
  std::ostringstream os;
  const Cover& c = *p.cover;
  os << "[cover]\n";
  if (c.mode() == CoverMode::kP1) {
    os << "mode = p1\ndegrees = ";
    for (std::size_t i = 0; i < c.degrees().size(); ++i) os << (i ? ", " : "") << c.degrees()[i];
    os << "\n\n[signature]\nrank = " << c.rank() << "\n";
  } else {
    os << "mode = formal\ncharts = " << c.charts() << "\n\n[signature]\nvariables = ";
    const auto& vars = *c.chart_signature(0)->variables;
    for (std::size_t i = 0; i < vars.size(); ++i) os << (i ? ", " : "") << vars[i];
    os << "\nrank = " << c.rank() << "\n";
  }
  const TaskParams& t = p.task;
  if (t.q || t.bound || t.k || t.seed || t.trials) {
    os << "\n[task]\n";
    if (t.q) os << "q = " << *t.q << "\n";
    if (t.bound) os << "bound = " << *t.bound << "\n";
    if (t.k) os << "k = " << *t.k << "\n";
    if (t.seed) os << "seed = " << *t.seed << "\n";
    if (t.trials) os << "trials = " << *t.trials << "\n";
  }
  if (!p.cochains0.empty() || !p.cochains1.empty()) {
    os << "\n[cochains]\n";
    render_cochains(os, p.cochains0);
    render_cochains(os, p.cochains1);
  }
  return os.str();
}

bool same_problem(const ProblemFile& a, const ProblemFile& b) {
  const Cover& ca = *a.cover;
  const Cover& cb = *b.cover;
  if (ca.mode() != cb.mode() || ca.charts() != cb.charts() || ca.degrees() != cb.degrees()) return false;
  if (!same_signature(ca.chart_signature(0), cb.chart_signature(0))) return false;
  if (!(a.task == b.task)) return false;
  auto same_maps = [](const auto& x, const auto& y) {
    if (x.size() != y.size()) return false;
    for (auto ix = x.begin(), iy = y.begin(); ix != x.end(); ++ix, ++iy)
      if (ix->first != iy->first || ix->second != iy->second) return false;
    return true;
  };
  return same_maps(a.cochains0, b.cochains0) && same_maps(a.cochains1, b.cochains1);
}

}  // namespace supercech
