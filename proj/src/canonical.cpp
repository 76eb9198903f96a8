#include "cos/canonical.hpp"

#include <algorithm>

namespace cos {

namespace {

int rank(const Formula& f) {
  switch (f.kind()) {
    case Kind::False: return 0;
    case Kind::True: return 1;
    case Kind::Atom: return 2;
    case Kind::Var: return 3;
    case Kind::And: return 4;
    case Kind::Or: return 5;
  }
  return 6;
}

// Splice children of the same connective into the parent, recursively.
void flatten_into(const Formula& f, Kind k, std::vector<Formula>& out) {
  if (f.kind() == k) {
    for (const Formula& c : f.children()) flatten_into(c, k, out);
  } else {
    out.push_back(f);
  }
}

}  // namespace

int compare_formulas(const Formula& a, const Formula& b) {
  int ra = rank(a), rb = rank(b);
  if (ra != rb) return ra < rb ? -1 : 1;
  switch (a.kind()) {
    case Kind::True:
    case Kind::False:
      return 0;
    case Kind::Atom:
    case Kind::Var: {
      if (int c = a.name().compare(b.name())) return c < 0 ? -1 : 1;
      if (a.negated() == b.negated()) return 0;
      return a.negated() ? 1 : -1;  // positive before negated
    }
    case Kind::Or:
    case Kind::And: {
      std::size_t n = std::min(a.arity(), b.arity());
      for (std::size_t i = 0; i < n; ++i)
        if (int c = compare_formulas(a.child(i), b.child(i))) return c;
      if (a.arity() == b.arity()) return 0;
      return a.arity() < b.arity() ? -1 : 1;
    }
  }
  return 0;
}

Formula canonicalize(const Formula& f) {
  if (f.is_leaf()) return f;

  std::vector<Formula> canon_children;
  canon_children.reserve(f.arity());
  for (const Formula& c : f.children()) canon_children.push_back(canonicalize(c));

  // Flatten: canonical children rooted at the same connective are spliced.
  std::vector<Formula> flat;
  Formula shell = Formula::compound(f.kind(), std::move(canon_children));
  flatten_into(shell, f.kind(), flat);

  // Unit equations of Fig-style = : in a disjunction drop f ([a|f]=a) and
  // collapse repeated t ([t|t]=t); dually in a conjunction. A lone t in a
  // disjunction stays: = is weaker than logical equivalence.
  const bool is_or = f.kind() == Kind::Or;
  const Formula absorbable = is_or ? Formula::f() : Formula::t();
  const Formula collapsible = is_or ? Formula::t() : Formula::f();
  std::vector<Formula> kept;
  bool seen_collapsible = false;
  for (const Formula& c : flat) {
    if (c == absorbable) continue;
    if (c == collapsible) {
      if (seen_collapsible) continue;
      seen_collapsible = true;
    }
    kept.push_back(c);
  }
  if (kept.empty()) return absorbable;  // all children were the absorbable unit
  if (kept.size() == 1) return kept.front();

  std::sort(kept.begin(), kept.end(),
            [](const Formula& a, const Formula& b) { return compare_formulas(a, b) < 0; });
  return Formula::compound(f.kind(), std::move(kept));
}

bool equal_mod_ac(const Formula& a, const Formula& b) {
  return canonicalize(a) == canonicalize(b);
}

}  // namespace cos
