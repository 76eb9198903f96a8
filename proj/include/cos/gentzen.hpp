// One-sided sequent system: identity, truth, weakening, contraction,
// disjunction, context-splitting conjunction and cut. Trees are checked
// locally, translated into SKSg derivations (analytic trees land in KSg), and
// a bounded exhaustive backward prover provides the cut-free baseline.

#ifndef COS_GENTZEN_HPP
#define COS_GENTZEN_HPP

#include <iosfwd>
#include <memory>
#include <optional>

#include "cos/derivation.hpp"

namespace cos {

using Sequent = std::vector<Formula>;  // read as a multiset

std::string print_sequent(const Sequent& s);
Sequent parse_sequent(const std::string& text);
std::size_t sequent_size(const Sequent& s);

enum class GRule { Id, Truth, Cut, Weak, Contr, OrRule, AndRule, Premiss };

std::string grule_name(GRule r);
std::optional<GRule> grule_from_name(const std::string& name);

struct GentzenDerivation {
  GRule rule = GRule::Premiss;
  Sequent sequent;
  std::vector<std::shared_ptr<GentzenDerivation>> children;
};

using GentzenPtr = std::shared_ptr<GentzenDerivation>;

GentzenPtr gnode(GRule r, Sequent s, std::vector<GentzenPtr> children = {});

struct GentzenReport {
  bool valid = false;
  bool analytic = false;  // no cut nodes
  std::size_t size = 0;   // occurrences over all sequents
  std::size_t nodes = 0;
  std::vector<Sequent> premisses;  // open leaves, left to right
  std::string conclusion;
  std::string error;  // first failing node
};

GentzenReport check_gentzen(const GentzenDerivation& d);

/// SKSg derivation from the conjunction of the translated premisses to the
/// translated conclusion. Analytic input stays inside KSg.
CosDerivation gentzen_to_sksg(const GentzenDerivation& d);

// --- bounded exhaustive cut-free prover ---------------------------------------

struct ProverResult {
  bool proved = false;
  bool budget_exhausted = false;  // distinguishes from "refuted within bounds"
  std::size_t minimal_size = 0;   // proof size when proved
  std::size_t nodes_explored = 0;
  GentzenPtr proof;
};

/// Backward root-first search for an analytic proof, minimal in proof size
/// within the strategy: disjunction applied eagerly, closure by identity or
/// truth plus weakenings, conjunction splits enumerated, contraction at most
/// once per formula occurrence class per branch, iterative deepening on size.
ProverResult cutfree_prove(const Sequent& goal, std::size_t node_budget = 1000000);

// --- .gtz s-expression format: (<rule> "<comma-separated sequent>" <child>*) --
GentzenPtr parse_gtz(std::istream& in);
GentzenPtr parse_gtz_string(const std::string& text);
std::string write_gtz(const GentzenDerivation& d);

}  // namespace cos

#endif
