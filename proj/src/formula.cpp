#include "cos/formula.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cos {

namespace {

const std::string kEmptyName;
const std::vector<Formula> kNoChildren;

}  // namespace

Formula Formula::t() {
  static const Formula value{std::make_shared<const Node>(Node{Kind::True, "", false, {}})};
  return value;
}

Formula Formula::f() {
  static const Formula value{std::make_shared<const Node>(Node{Kind::False, "", false, {}})};
  return value;
}

Formula Formula::atom(std::string name, bool negated) {
  return Formula{std::make_shared<const Node>(Node{Kind::Atom, std::move(name), negated, {}})};
}

Formula Formula::var(std::string name, bool negated) {
  return Formula{std::make_shared<const Node>(Node{Kind::Var, std::move(name), negated, {}})};
}

Formula Formula::compound(Kind k, std::vector<Formula> children) {
  if (k != Kind::Or && k != Kind::And) throw std::logic_error("compound: not a connective");
  if (children.size() < 2) throw std::logic_error("connective needs at least two children");
  return Formula{std::make_shared<const Node>(Node{k, "", false, std::move(children)})};
}

Formula Formula::disj(std::vector<Formula> children) { return compound(Kind::Or, std::move(children)); }
Formula Formula::conj(std::vector<Formula> children) { return compound(Kind::And, std::move(children)); }
Formula Formula::disj(Formula a, Formula b) { return disj(std::vector<Formula>{std::move(a), std::move(b)}); }
Formula Formula::conj(Formula a, Formula b) { return conj(std::vector<Formula>{std::move(a), std::move(b)}); }

const std::string& Formula::name() const {
  if (kind() != Kind::Atom && kind() != Kind::Var) return kEmptyName;
  return node_->name;
}

bool Formula::negated() const {
  if (kind() != Kind::Atom && kind() != Kind::Var) return false;
  return node_->negated;
}

const std::vector<Formula>& Formula::children() const {
  if (is_leaf()) return kNoChildren;
  return node_->children;
}

bool Formula::equals(const Formula& other) const {
  if (node_ == other.node_) return true;
  if (kind() != other.kind()) return false;
  switch (kind()) {
    case Kind::True:
    case Kind::False:
      return true;
    case Kind::Atom:
    case Kind::Var:
      return name() == other.name() && negated() == other.negated();
    case Kind::Or:
    case Kind::And: {
      const auto& a = children();
      const auto& b = other.children();
      if (a.size() != b.size()) return false;
      for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].equals(b[i])) return false;
      return true;
    }
  }
  return false;
}

// ---------------------------------------------------------------------------
// Parsing. Grammar:
//   formula := 't' | 'f' | atom | var | '~'(atom|var)
//            | '[' formula ('|' formula)+ ']' | '(' formula ('&' formula)+ ')'
//   atom := [a-z][a-z0-9_]*      var := [A-Z][A-Za-z0-9_]*
// Whitespace is insignificant.

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  Formula parse() {
    Formula f = formula();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw parse_error("parse error at offset " + std::to_string(pos_) + ": " + msg, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    return text_[pos_];
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_ws();
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !std::isalpha(static_cast<unsigned char>(text_[pos_]))) fail("expected identifier");
    ++pos_;
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (std::isalnum(static_cast<unsigned char>(c)) || c == '_') ++pos_;
      else break;
    }
    return text_.substr(start, pos_ - start);
  }

  Formula leaf(bool negated) {
    std::string id = identifier();
    if (!negated) {
      if (id == "t") return Formula::t();
      if (id == "f") return Formula::f();
    } else if (id == "t" || id == "f") {
      fail("'~' applies to atoms and variables only");
    }
    if (std::islower(static_cast<unsigned char>(id[0]))) {
      for (char c : id)
        if (std::isupper(static_cast<unsigned char>(c))) fail("atom names are lowercase");
      return Formula::atom(id, negated);
    }
    return Formula::var(id, negated);
  }

  Formula formula() {
    char c = peek();
    if (c == '[') return connective(Kind::Or, '[', '|', ']');
    if (c == '(') return connective(Kind::And, '(', '&', ')');
    if (c == '~') {
      ++pos_;
      return leaf(true);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return leaf(false);
    fail("expected formula");
  }

  Formula connective(Kind k, char open, char sep, char close) {
    expect(open);
    std::vector<Formula> children;
    children.push_back(formula());
    if (peek() != sep) fail(std::string("expected '") + sep + "'");
    while (peek() == sep) {
      ++pos_;
      children.push_back(formula());
    }
    expect(close);
    return Formula::compound(k, std::move(children));
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse_formula(const std::string& text) { return Parser(text).parse(); }

namespace {

void print_rec(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case Kind::True: out += 't'; return;
    case Kind::False: out += 'f'; return;
    case Kind::Atom:
    case Kind::Var:
      if (f.negated()) out += '~';
      out += f.name();
      return;
    case Kind::Or:
    case Kind::And: {
      const bool is_or = f.kind() == Kind::Or;
      out += is_or ? '[' : '(';
      for (std::size_t i = 0; i < f.arity(); ++i) {
        if (i) out += is_or ? " | " : " & ";
        print_rec(f.child(i), out);
      }
      out += is_or ? ']' : ')';
      return;
    }
  }
}

}  // namespace

std::string print_formula(const Formula& f) {
  std::string out;
  print_rec(f, out);
  return out;
}

Formula dual(const Formula& f) {
  switch (f.kind()) {
    case Kind::True: return Formula::f();
    case Kind::False: return Formula::t();
    case Kind::Atom: return Formula::atom(f.name(), !f.negated());
    case Kind::Var: return Formula::var(f.name(), !f.negated());
    case Kind::Or:
    case Kind::And: {
      std::vector<Formula> ch;
      ch.reserve(f.arity());
      for (const Formula& c : f.children()) ch.push_back(dual(c));
      return Formula::compound(f.kind() == Kind::Or ? Kind::And : Kind::Or, std::move(ch));
    }
  }
  throw std::logic_error("dual: bad kind");
}

Formula instantiate(const Formula& f, const Renaming& r, const Substitution& s) {
  switch (f.kind()) {
    case Kind::True:
    case Kind::False:
      return f;
    case Kind::Atom: {
      auto it = r.find(f.name());
      if (it == r.end()) return f;
      // a |-> b sends abar to bbar; polarities compose.
      return Formula::atom(it->second.name, f.negated() != it->second.negated);
    }
    case Kind::Var: {
      auto it = s.find(f.name());
      if (it == s.end()) return f;
      return f.negated() ? dual(it->second) : it->second;
    }
    case Kind::Or:
    case Kind::And: {
      std::vector<Formula> ch;
      ch.reserve(f.arity());
      for (const Formula& c : f.children()) ch.push_back(instantiate(c, r, s));
      return Formula::compound(f.kind(), std::move(ch));
    }
  }
  throw std::logic_error("instantiate: bad kind");
}

Formula subformula_at(const Formula& f, const Path& p) {
  Formula cur = f;
  for (std::size_t idx : p) {
    if (cur.is_leaf() || idx >= cur.arity()) throw path_error("path out of range");
    cur = cur.child(idx);
  }
  return cur;
}

Formula replace_at(const Formula& f, const Path& p, const Formula& g) {
  if (p.empty()) return g;
  std::size_t idx = p.front();
  if (f.is_leaf() || idx >= f.arity()) throw path_error("path out of range");
  Path rest(p.begin() + 1, p.end());
  std::vector<Formula> ch = f.children();
  ch[idx] = replace_at(ch[idx], rest, g);
  return Formula::compound(f.kind(), std::move(ch));
}

bool path_resolvable(const Formula& f, const Path& p) {
  Formula cur = f;
  for (std::size_t idx : p) {
    if (cur.is_leaf() || idx >= cur.arity()) return false;
    cur = cur.child(idx);
  }
  return true;
}

std::size_t size(const Formula& f) {
  if (f.is_leaf()) return 1;
  std::size_t n = 0;
  for (const Formula& c : f.children()) n += size(c);
  return n;
}

std::size_t context_size(const Formula& f, const Path& p) {
  return size(f) - size(subformula_at(f, p));
}

std::size_t andor_depth(const Formula& f) {
  if (f.is_leaf()) return 0;
  std::size_t best = 0;
  for (const Formula& c : f.children()) {
    std::size_t d = andor_depth(c);
    if (!c.is_leaf() && c.kind() != f.kind()) d += 1;
    best = std::max(best, d);
  }
  return best;
}

namespace {

void collect(const Formula& f, Kind k, std::vector<std::string>& out) {
  if (f.kind() == k) {
    if (std::find(out.begin(), out.end(), f.name()) == out.end()) out.push_back(f.name());
    return;
  }
  for (const Formula& c : f.children()) collect(c, k, out);
}

}  // namespace

void collect_atoms(const Formula& f, std::vector<std::string>& out) { collect(f, Kind::Atom, out); }
void collect_vars(const Formula& f, std::vector<std::string>& out) { collect(f, Kind::Var, out); }

bool mentions_var(const Formula& f, const std::string& var_name) {
  if (f.kind() == Kind::Var) return f.name() == var_name;
  for (const Formula& c : f.children())
    if (mentions_var(c, var_name)) return true;
  return false;
}

bool is_ground(const Formula& f) {
  if (f.kind() == Kind::Var) return false;
  for (const Formula& c : f.children())
    if (!is_ground(c)) return false;
  return true;
}

std::string path_to_string(const Path& p) {
  if (p.empty()) return "-";
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(p[i]);
  }
  return out;
}

Path path_from_string(const std::string& s) {
  Path p;
  if (s == "-" || s.empty()) return p;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, '.')) {
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw parse_error("bad path component '" + part + "'", 0);
    p.push_back(static_cast<std::size_t>(std::stoull(part)));
  }
  return p;
}

}  // namespace cos
