// Rule catalog of SKSg/KSg (generic structural rules, switch) and SKS/KS
// (atomic structural rules, switch, medial), plus the = rule and the
// substitution rule of sSKSg. Single inference steps are verified against
// explicit justifications; the checker never searches for a rule or a path,
// though omitted bindings are recovered by deterministic scheme matching.

#ifndef COS_RULES_HPP
#define COS_RULES_HPP

#include <optional>
#include <string>

#include "cos/formula.hpp"

namespace cos {

enum class Rule {
  IDown, IUp, WDown, WUp, CDown, CUp, Switch,          // Fig. SKSg
  AiDown, AiUp, AwDown, AwUp, AcDown, AcUp, Medial,    // Fig. SKS (switch shared)
  Eq, SubRule
};

std::string rule_name(Rule r);
std::optional<Rule> rule_from_name(const std::string& name);

bool is_atomic_rule(Rule r);
/// Generic and atomic structural rules; these act as macros in KS/SKS.
bool is_structural_nonatomic(Rule r);
/// Analytic rules: everything except cut, coweakening and sub.
bool is_analytic(Rule r);
/// The dual rule under flip-and-negate symmetry (Eq and sub are self-dual).
Rule dual_rule(Rule r);

enum class SystemId { KSg, SKSg, KS, SKS, aKSg, aKS, xSKSg, sSKSg };

std::string system_name(SystemId s);
std::optional<SystemId> system_from_name(const std::string& name);
/// Membership; = belongs to every system.
bool system_has_rule(SystemId s, Rule r);
/// Systems whose proper rules are atomic (macro convention applies).
bool is_atomic_system(SystemId s);
bool is_analytic_system(SystemId s);

struct RuleScheme {
  Rule rule;
  Formula premiss;
  Formula conclusion;
  bool analytic;
};

/// The fifteen scheme pairs of the two figures plus = and sub.
const std::vector<RuleScheme>& rule_catalog();
const RuleScheme& scheme_of(Rule r);

struct StepJustification {
  Rule rule = Rule::Eq;
  Path path;
  Renaming renaming;        // atomic rules
  Substitution substitution;  // nonatomic rules and sub
};

struct Verdict {
  bool ok = false;
  std::string error;  // rule-not-in-system, scheme-mismatch, context-mismatch,
                      // sub-not-at-root, path-out-of-range
  static Verdict pass() { return {true, ""}; }
  static Verdict fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

/// Checks one inference step. The redex and coredex must literally match the
/// rule schemes under the justification's bindings (recovered by matching when
/// empty), the two formulae must agree outside the path, = is checked by
/// canonical forms, and sub only applies at the root.
Verdict verify_step(SystemId sys, const Formula& premiss, const Formula& conclusion,
                    const StepJustification& j);

/// Same check without system membership (used for macro steps).
Verdict verify_step_any(const Formula& premiss, const Formula& conclusion,
                        const StepJustification& j);

}  // namespace cos

#endif
