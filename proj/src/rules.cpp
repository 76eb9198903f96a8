#include "cos/rules.hpp"

#include <array>
#include <map>

#include "cos/canonical.hpp"

namespace cos {

namespace {

struct RuleInfo {
  Rule rule;
  const char* name;
  const char* ascii;  // accepted alias in files
  bool atomic;
  bool analytic;
  Rule dual;
};

const std::array<RuleInfo, 16>& rule_table() {
  static const std::array<RuleInfo, 16> table = {{
      {Rule::IDown, "i↓", "id", false, true, Rule::IUp},
      {Rule::IUp, "i↑", "iu", false, false, Rule::IDown},
      {Rule::WDown, "w↓", "wd", false, true, Rule::WUp},
      {Rule::WUp, "w↑", "wu", false, false, Rule::WDown},
      {Rule::CDown, "c↓", "cd", false, true, Rule::CUp},
      {Rule::CUp, "c↑", "cu", false, true, Rule::CDown},
      {Rule::Switch, "s", "s", false, true, Rule::Switch},
      {Rule::AiDown, "ai↓", "aid", true, true, Rule::AiUp},
      {Rule::AiUp, "ai↑", "aiu", true, false, Rule::AiDown},
      {Rule::AwDown, "aw↓", "awd", true, true, Rule::AwUp},
      {Rule::AwUp, "aw↑", "awu", true, false, Rule::AwDown},
      {Rule::AcDown, "ac↓", "acd", true, true, Rule::AcUp},
      {Rule::AcUp, "ac↑", "acu", true, true, Rule::AcDown},
      {Rule::Medial, "m", "m", false, true, Rule::Medial},
      {Rule::Eq, "=", "=", false, true, Rule::Eq},
      {Rule::SubRule, "sub", "sub", false, false, Rule::SubRule},
  }};
  return table;
}

const RuleInfo& info(Rule r) {
  for (const RuleInfo& ri : rule_table())
    if (ri.rule == r) return ri;
  throw std::logic_error("unknown rule");
}

}  // namespace

std::string rule_name(Rule r) { return info(r).name; }

std::optional<Rule> rule_from_name(const std::string& name) {
  for (const RuleInfo& ri : rule_table())
    if (name == ri.name || name == ri.ascii) return ri.rule;
  return std::nullopt;
}

bool is_atomic_rule(Rule r) { return info(r).atomic; }

bool is_structural_nonatomic(Rule r) {
  switch (r) {
    case Rule::IDown: case Rule::IUp:
    case Rule::WDown: case Rule::WUp:
    case Rule::CDown: case Rule::CUp:
      return true;
    default:
      return false;
  }
}

bool is_analytic(Rule r) { return info(r).analytic; }

Rule dual_rule(Rule r) { return info(r).dual; }

std::string system_name(SystemId s) {
  switch (s) {
    case SystemId::KSg: return "KSg";
    case SystemId::SKSg: return "SKSg";
    case SystemId::KS: return "KS";
    case SystemId::SKS: return "SKS";
    case SystemId::aKSg: return "aKSg";
    case SystemId::aKS: return "aKS";
    case SystemId::xSKSg: return "xSKSg";
    case SystemId::sSKSg: return "sSKSg";
  }
  return "?";
}

std::optional<SystemId> system_from_name(const std::string& name) {
  static const std::map<std::string, SystemId> names = {
      {"KSg", SystemId::KSg},   {"SKSg", SystemId::SKSg}, {"KS", SystemId::KS},
      {"SKS", SystemId::SKS},   {"aKSg", SystemId::aKSg}, {"aKS", SystemId::aKS},
      {"xSKSg", SystemId::xSKSg}, {"sSKSg", SystemId::sSKSg}};
  auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

bool system_has_rule(SystemId s, Rule r) {
  if (r == Rule::Eq) return true;
  switch (s) {
    case SystemId::KSg:
      return r == Rule::IDown || r == Rule::WDown || r == Rule::CDown || r == Rule::Switch;
    case SystemId::SKSg:
    case SystemId::xSKSg:
      return system_has_rule(SystemId::KSg, r) || r == Rule::IUp || r == Rule::WUp || r == Rule::CUp;
    case SystemId::sSKSg:
      return system_has_rule(SystemId::SKSg, r) || r == Rule::SubRule;
    case SystemId::KS:
      return r == Rule::AiDown || r == Rule::AwDown || r == Rule::AcDown || r == Rule::Switch ||
             r == Rule::Medial;
    case SystemId::SKS:
      return system_has_rule(SystemId::KS, r) || r == Rule::AiUp || r == Rule::AwUp || r == Rule::AcUp;
    case SystemId::aKSg:
      return system_has_rule(SystemId::KSg, r) || r == Rule::CUp;
    case SystemId::aKS:
      return system_has_rule(SystemId::KS, r) || r == Rule::AcUp;
  }
  return false;
}

bool is_atomic_system(SystemId s) {
  return s == SystemId::KS || s == SystemId::SKS || s == SystemId::aKS;
}

bool is_analytic_system(SystemId s) {
  return s == SystemId::KSg || s == SystemId::KS || s == SystemId::aKSg || s == SystemId::aKS;
}

const std::vector<RuleScheme>& rule_catalog() {
  static const std::vector<RuleScheme> catalog = [] {
    auto A = Formula::var("A");
    auto nA = Formula::var("A", true);
    auto B = Formula::var("B");
    auto C = Formula::var("C");
    auto D = Formula::var("D");
    auto a = Formula::atom("a");
    auto na = Formula::atom("a", true);
    auto T = Formula::t();
    auto F = Formula::f();
    std::vector<RuleScheme> cat;
    auto add = [&](Rule r, Formula prem, Formula concl) {
      cat.push_back(RuleScheme{r, std::move(prem), std::move(concl), is_analytic(r)});
    };
    add(Rule::IDown, T, Formula::disj(A, nA));
    add(Rule::IUp, Formula::conj(A, nA), F);
    add(Rule::WDown, F, A);
    add(Rule::WUp, A, T);
    add(Rule::CDown, Formula::disj(A, A), A);
    add(Rule::CUp, A, Formula::conj(A, A));
    add(Rule::Switch, Formula::conj(A, Formula::disj(B, C)),
        Formula::disj(Formula::conj(A, B), C));
    add(Rule::AiDown, T, Formula::disj(a, na));
    add(Rule::AiUp, Formula::conj(a, na), F);
    add(Rule::AwDown, F, a);
    add(Rule::AwUp, a, T);
    add(Rule::AcDown, Formula::disj(a, a), a);
    add(Rule::AcUp, a, Formula::conj(a, a));
    add(Rule::Medial, Formula::disj(Formula::conj(A, B), Formula::conj(C, D)),
        Formula::conj(Formula::disj(A, C), Formula::disj(B, D)));
    add(Rule::Eq, A, A);
    add(Rule::SubRule, A, A);
    return cat;
  }();
  return catalog;
}

const RuleScheme& scheme_of(Rule r) {
  for (const RuleScheme& s : rule_catalog())
    if (s.rule == r) return s;
  throw std::logic_error("no scheme");
}

namespace {

// Structural matching of a scheme against a concrete formula. Scheme variables
// bind whole formulae (barred occurrences bind the dual); scheme atoms bind
// atom occurrences through a renaming. Repeated scheme variables must match.
bool match(const Formula& scheme, const Formula& concrete, Renaming& ren, Substitution& sub) {
  switch (scheme.kind()) {
    case Kind::True:
    case Kind::False:
      return scheme == concrete;
    case Kind::Var: {
      Formula want = scheme.negated() ? dual(concrete) : concrete;
      auto it = sub.find(scheme.name());
      if (it != sub.end()) return it->second == want;
      sub.emplace(scheme.name(), want);
      return true;
    }
    case Kind::Atom: {
      if (concrete.kind() != Kind::Atom) return false;
      AtomOcc occ{concrete.name(), concrete.negated() != scheme.negated()};
      auto it = ren.find(scheme.name());
      if (it != ren.end()) return it->second == occ;
      ren.emplace(scheme.name(), occ);
      return true;
    }
    case Kind::Or:
    case Kind::And: {
      if (concrete.kind() != scheme.kind() || concrete.arity() != scheme.arity()) return false;
      for (std::size_t i = 0; i < scheme.arity(); ++i)
        if (!match(scheme.child(i), concrete.child(i), ren, sub)) return false;
      return true;
    }
  }
  return false;
}

// Structural equality of the two formulae everywhere outside the path.
bool agree_outside(const Formula& a, const Formula& b, const Path& p, std::size_t depth = 0) {
  if (depth == p.size()) return true;
  if (a.kind() != b.kind() || a.is_leaf() || a.arity() != b.arity()) return false;
  std::size_t idx = p[depth];
  if (idx >= a.arity()) return false;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (i == idx) continue;
    if (a.child(i) != b.child(i)) return false;
  }
  return agree_outside(a.child(idx), b.child(idx), p, depth + 1);
}

}  // namespace

Verdict verify_step_any(const Formula& premiss, const Formula& conclusion,
                        const StepJustification& j) {
  if (j.rule == Rule::Eq) {
    if (!equal_mod_ac(premiss, conclusion)) return Verdict::fail("scheme-mismatch: formulae are not =-equal");
    return Verdict::pass();
  }
  if (j.rule == Rule::SubRule) {
    if (!j.path.empty()) return Verdict::fail("sub-not-at-root");
    if (instantiate(premiss, {}, j.substitution) != conclusion)
      return Verdict::fail("scheme-mismatch: conclusion is not the substituted premiss");
    return Verdict::pass();
  }

  if (!path_resolvable(premiss, j.path) || !path_resolvable(conclusion, j.path))
    return Verdict::fail("path-out-of-range");
  if (!agree_outside(premiss, conclusion, j.path))
    return Verdict::fail("context-mismatch: formulae differ outside the path");

  Formula redex = subformula_at(premiss, j.path);
  Formula coredex = subformula_at(conclusion, j.path);
  const RuleScheme& sch = scheme_of(j.rule);

  if (!j.renaming.empty() || !j.substitution.empty()) {
    // Explicit bindings: instantiate the schemes and compare literally.
    if (is_atomic_rule(j.rule) && !j.substitution.empty())
      return Verdict::fail("scheme-mismatch: atomic rules carry no substitution");
    if (instantiate(sch.premiss, j.renaming, j.substitution) != redex ||
        instantiate(sch.conclusion, j.renaming, j.substitution) != coredex)
      return Verdict::fail("scheme-mismatch");
    return Verdict::pass();
  }

  // No bindings given: recover them by matching both schemes.
  Renaming ren;
  Substitution sub;
  if (!match(sch.premiss, redex, ren, sub) || !match(sch.conclusion, coredex, ren, sub))
    return Verdict::fail("scheme-mismatch");
  return Verdict::pass();
}

Verdict verify_step(SystemId sys, const Formula& premiss, const Formula& conclusion,
                    const StepJustification& j) {
  if (!system_has_rule(sys, j.rule))
    return Verdict::fail("rule-not-in-system: " + rule_name(j.rule) + " not in " + system_name(sys));
  return verify_step_any(premiss, conclusion, j);
}

}  // namespace cos
