// The Hilbert-style system: seventeen axiom schemes plus modus ponens, over
// units, variables and the connectives or/and/implies/not. Checker, proof
// builders, the two translations between this system and SKSg, and the three
// supporting lemmas (context lifting, equality chains, rule tautologies).

#ifndef COS_FREGE_HPP
#define COS_FREGE_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cos/derivation.hpp"

namespace cos {

enum class FKind { True, False, Var, Not, Or, And, Implies };

class FregeFormula {
 public:
  FregeFormula() : FregeFormula(t()) {}

  static FregeFormula t();
  static FregeFormula f();
  static FregeFormula var(std::string name);
  static FregeFormula lnot(FregeFormula x);
  static FregeFormula lor(FregeFormula a, FregeFormula b);
  static FregeFormula land(FregeFormula a, FregeFormula b);
  static FregeFormula implies(FregeFormula a, FregeFormula b);

  FKind kind() const { return node_->kind; }
  const std::string& name() const { return node_->name; }
  const FregeFormula& operand() const { return node_->children.at(0); }  // Not
  const FregeFormula& left() const { return node_->children.at(0); }
  const FregeFormula& right() const { return node_->children.at(1); }
  bool is_leaf() const {
    return kind() == FKind::True || kind() == FKind::False || kind() == FKind::Var;
  }

  bool operator==(const FregeFormula& o) const { return equals(o); }
  bool operator!=(const FregeFormula& o) const { return !equals(o); }

 private:
  struct Node {
    FKind kind;
    std::string name;
    std::vector<FregeFormula> children;
  };
  explicit FregeFormula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  bool equals(const FregeFormula& o) const;
  std::shared_ptr<const Node> node_;
};

using FSubstitution = std::map<std::string, FregeFormula>;

FregeFormula parse_frege_formula(const std::string& text);
std::string print_frege_formula(const FregeFormula& f);
FregeFormula fsubstitute(const FregeFormula& f, const FSubstitution& s);
std::size_t fsize(const FregeFormula& f);  // unit and variable occurrences
void collect_fvars(const FregeFormula& f, std::vector<std::string>& out);
bool fmentions(const FregeFormula& f, const std::string& var);

/// Negation pushed to variables, double negations removed, units flipped;
/// implications are not touched (callers never feed them).
FregeFormula nnf(const FregeFormula& f);

/// Axiom schemes F1..F17 over variables A, B, C.
const FregeFormula& frege_axiom(int k);
const std::vector<std::string>& frege_axiom_vars(int k);

struct FregeLine {
  enum Kind { Premiss, Axiom, MP, Ext, Sub } kind = Premiss;
  FregeFormula formula;
  int axiom = 0;                   // Axiom: 1..17
  FSubstitution subst;             // Axiom instantiation; Sub's substitution
  std::size_t ref1 = 0, ref2 = 0;  // MP: A at ref1, A->B at ref2 (0-based); Sub: source at ref1
  std::string ext_var;             // Ext: the defined variable
  FregeFormula ext_body;           // Ext: its body
};

struct FregeDerivation {
  std::vector<FregeLine> lines;
  const FregeFormula& conclusion() const { return lines.back().formula; }
  std::size_t length() const { return lines.size(); }
};

struct FregeReport {
  bool valid = false;
  std::size_t length = 0;
  std::size_t size = 0;
  std::vector<std::string> premisses;
  std::string conclusion;
  std::size_t failed_line = 0;
  std::string error;
};

/// Base checker: premiss/axiom/mp lines only (ext and sub are rejected; the
/// extended systems have their own checker).
FregeReport check_frege(const FregeDerivation& d);

// --- formula translations ------------------------------------------------------

/// Leaves keep their names: atoms become lowercase variables. Connectives are
/// binarized to the left; negated leaves translate through the not connective.
FregeFormula cos_to_frege_formula(const Formula& f);

/// Implication becomes [dual(left) | right]; negation is pushed to the leaves.
/// Lowercase variables come back as atoms, uppercase as formula variables.
Formula frege_to_cos_formula(const FregeFormula& f);

// --- proof builder -------------------------------------------------------------

/// Appends justified lines; all combinators return the index of the line
/// holding their conclusion.
class FregeBuilder {
 public:
  std::size_t premiss(FregeFormula f);
  std::size_t axiom(int k, FSubstitution s);
  std::size_t mp(std::size_t a, std::size_t a_imp_b);
  /// Appends a closed proof under a substitution; returns its conclusion line.
  std::size_t instance(const FregeDerivation& closed_proof, const FSubstitution& s);

  std::size_t imp_id(const FregeFormula& x);                  // X -> X
  std::size_t weaken(std::size_t thm, const FregeFormula& x); // X -> T from T
  std::size_t syll(std::size_t ab, std::size_t bc);           // A -> C
  std::size_t s_comb(std::size_t a_bc, std::size_t a_b);      // A -> C
  std::size_t exchange(std::size_t a_b_c);                    // B -> (A -> C)
  std::size_t compose_left(std::size_t xy, const FregeFormula& z);  // (Z->X) -> (Z->Y)
  std::size_t efq(const FregeFormula& y);                     // f -> Y
  std::size_t conj_under(std::size_t hx, std::size_t hy);     // H -> (X & Y)
  std::size_t conj_thm(std::size_t x, std::size_t y);         // X & Y from both
  std::size_t truth();                                        // t
  std::size_t not_f();                                        // ~f
  std::size_t absurd(const FregeFormula& x);                  // (~X -> f) -> X
  std::size_t excluded_middle(const FregeFormula& x);         // [X | ~X]
  /// X -> X' and X' -> X for X' = nnf(X); both indices, or nullopt when X is
  /// already in negation normal form.
  std::optional<std::pair<std::size_t, std::size_t>> equiv_nnf(const FregeFormula& x);
  /// Lifts line imp: (a -> b) through the binary or/and context of `whole`
  /// along `path`, concluding whole -> whole[path := b].
  std::size_t lift_through_context(std::size_t imp, const FregeFormula& whole, const Path& path);

  const FregeFormula& formula_at(std::size_t i) const { return d_.lines.at(i).formula; }
  std::size_t line_count() const { return d_.lines.size(); }
  FregeDerivation take() { return std::move(d_); }
  const FregeDerivation& derivation() const { return d_; }

 private:
  FregeDerivation d_;
};

// --- fixture proofs (closed, over variables) -------------------------------------

/// SKSg proofs of the seventeen translated axioms.
const CosDerivation& axiom_sksg_proof(int k);

/// (A->B) -> (ctx[A] -> ctx[B]) for the four one-level contexts.
enum class MonKind { OrRight, OrLeft, AndRight, AndLeft };
const FregeDerivation& monotonicity_proof(MonKind k);

/// Premiss-to-conclusion tautologies of the SKSg rules plus medial.
const FregeDerivation& rule_tautology_proof(Rule r);

/// Oriented instances of the eight formula equations.
enum class EqTaut {
  OrComm, AndComm, OrAssoc, AndAssoc, OrUnitF, AndUnitT, OrTT, AndFF
};
const FregeDerivation& equality_tautology_proof(EqTaut e, bool left_to_right);

// --- the lemmas and the two simulations ------------------------------------------

/// Premiss (a -> b) translated, conclusion (ctx[a] -> ctx[b]) translated.
FregeDerivation context_lift(const Formula& ctx, const Path& hole, const Formula& a,
                             const Formula& b);

/// Premiss translated a, conclusion translated b, for =-equal a and b; the
/// chain goes through the canonical form on both sides.
FregeDerivation equality_to_frege(const Formula& a, const Formula& b);

/// Premiss-to-conclusion derivation for one non-= inference step.
FregeDerivation rule_step_to_frege(const Formula& premiss, const Formula& conclusion,
                                   const StepJustification& j);

/// SKSg (or SKS, macros included) derivation to a Frege derivation with the
/// translated premiss as its only premiss line; proofs from t become
/// premiss-free Frege proofs.
FregeDerivation sksg_to_frege(const CosDerivation& d);

/// Frege derivation to an SKSg derivation from the conjunction of the
/// premisses to the conclusion.
CosDerivation frege_to_sksg(const FregeDerivation& d);

// --- .frg format -----------------------------------------------------------------
// Numbered lines: "n: <formula> ; premiss | axiom F<k> {A := ...} | mp <i> <j>
//                  | ext {A := <formula>} | sub <i> {A := ...}"

FregeDerivation parse_frg(std::istream& in);
FregeDerivation parse_frg_string(const std::string& text);
std::string write_frg(const FregeDerivation& d);

namespace detail {
// Shared by the translation and the extended systems: appends the translation
// of d to an existing builder, starting from the line holding the translated
// premiss of d. Returns the line holding the translated conclusion.
std::size_t append_sksg_translation(FregeBuilder& b, const CosDerivation& d,
                                    std::size_t premiss_line);
}  // namespace detail

}  // namespace cos

#endif
