// Derivations as checkable objects: a premiss and a chain of justified steps.
// Composition under contexts, renaming, substitution and grounding; a
// truth-table oracle backs the soundness checks.

#ifndef COS_DERIVATION_HPP
#define COS_DERIVATION_HPP

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "cos/rules.hpp"

namespace cos {

struct Step {
  StepJustification just;
  Formula result;
};

struct CosDerivation {
  SystemId system = SystemId::SKSg;
  Formula premiss;
  std::vector<Step> steps;

  const Formula& conclusion() const { return steps.empty() ? premiss : steps.back().result; }
  std::size_t length() const { return steps.size(); }
  /// Appends a step; no checking happens here.
  void push(StepJustification j, Formula result) { steps.push_back({std::move(j), std::move(result)}); }
  void push(Rule r, Path p, Formula result) { steps.push_back({{r, std::move(p), {}, {}}, std::move(result)}); }
  /// Appends the steps of other; other.premiss must equal the current conclusion.
  void append(const CosDerivation& other);
};

struct CheckReport {
  bool valid = false;
  bool is_proof = false;  // premiss =-equal to t
  std::size_t length = 0;
  std::size_t size = 0;  // unit/atom/variable occurrences over every formula
  // Macro accounting as in the Statman lemma: nonatomic structural steps count
  // six, switch counts two (itself plus its adjacent =), = counts zero,
  // everything else one.
  std::size_t convention_length = 0;
  bool used_macros = false;
  std::map<std::string, std::size_t> rule_counts;
  std::string premiss, conclusion;
  std::size_t failed_step = 0;  // index of first failing step when invalid
  std::string error;
};

struct CheckOptions {
  // In KS/SKS/aKS, accept nonatomic structural steps standing for their atomic
  // expansions (macro rules).
  bool allow_macros = true;
};

CheckReport check_derivation(const CosDerivation& d, const CheckOptions& opts = {});

/// Closure under contexts: every formula is wrapped into ctx and every path is
/// prefixed with the hole's path.
CosDerivation embed(const CosDerivation& d, const Formula& ctx, const Path& hole);
CosDerivation rename_derivation(const CosDerivation& d, const Renaming& r);
CosDerivation substitute_derivation(const CosDerivation& d, const Substitution& s);

/// Replaces every variable by a fresh atom distinct from the atoms present.
CosDerivation ground(const CosDerivation& d);

/// True iff every non-sub step is implication-sound and every =-step is an
/// equivalence, by truth table over at most atom_bound leaves.
bool semantic_check(const CosDerivation& d, std::size_t atom_bound = 16);

// --- .cosd file format -------------------------------------------------------
// Line-oriented UTF-8 text, '#' starts a comment:
//   system <SystemId>
//   premiss <formula>
//   step <rule> @ <dot-path> [bind <name>=<formula|atom> ...] => <formula>
//   step = => <formula>
//   step sub {A := <formula>, ...} => <formula>
// Extended proofs add "ext <Var> := <formula>" declarations after the header.

struct ExtDecl {
  std::string var;
  Formula body;
};

struct CosFile {
  CosDerivation derivation;
  std::vector<ExtDecl> extensions;  // xSKSg declarations, in order
};

CosFile parse_cosd(std::istream& in);
CosFile parse_cosd_string(const std::string& text);
std::string write_cosd(const CosDerivation& d, const std::vector<ExtDecl>& exts = {});

}  // namespace cos

#endif
