// Formula AST for the calculus of structures: units t/f, atoms and formula
// variables with leaf negation, n-ary disjunction/conjunction. Values are
// immutable shared trees; all operations here are pure.

#ifndef COS_FORMULA_HPP
#define COS_FORMULA_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace cos {

class Formula;

enum class Kind { True, False, Atom, Var, Or, And };

/// Child-index sequence locating a subformula. The empty path is the root.
using Path = std::vector<std::size_t>;

/// One atom occurrence: name plus polarity (negated = the barred atom).
struct AtomOcc {
  std::string name;
  bool negated = false;
  friend bool operator==(const AtomOcc&, const AtomOcc&) = default;
};

/// Map from atom name to atom occurrence, applied simultaneously; the barred
/// atom is sent to the dual of the image.
using Renaming = std::map<std::string, AtomOcc>;

/// Map from variable name to formula, applied simultaneously; a barred
/// variable receives the De Morgan dual of the image.
using Substitution = std::map<std::string, Formula>;

struct parse_error : std::runtime_error {
  std::size_t position;
  parse_error(const std::string& what, std::size_t pos)
      : std::runtime_error(what), position(pos) {}
};

struct path_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

class Formula {
 public:
  Formula() : Formula(t()) {}

  static Formula t();
  static Formula f();
  static Formula atom(std::string name, bool negated = false);
  static Formula var(std::string name, bool negated = false);
  // Children must number at least two; nesting the same connective is allowed.
  static Formula disj(std::vector<Formula> children);
  static Formula conj(std::vector<Formula> children);
  static Formula disj(Formula a, Formula b);
  static Formula conj(Formula a, Formula b);
  static Formula compound(Kind k, std::vector<Formula> children);

  Kind kind() const { return node_->kind; }
  bool is_leaf() const { return kind() != Kind::Or && kind() != Kind::And; }
  bool is_unit() const { return kind() == Kind::True || kind() == Kind::False; }
  const std::string& name() const;
  bool negated() const;
  const std::vector<Formula>& children() const;
  std::size_t arity() const { return children().size(); }
  const Formula& child(std::size_t i) const { return children().at(i); }

  bool operator==(const Formula& other) const { return equals(other); }
  bool operator!=(const Formula& other) const { return !equals(other); }

 private:
  struct Node {
    Kind kind;
    std::string name;           // atoms and variables
    bool negated = false;       // atoms and variables
    std::vector<Formula> children;  // Or / And
  };
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  bool equals(const Formula& other) const;
  std::shared_ptr<const Node> node_;
};

Formula parse_formula(const std::string& text);
std::string print_formula(const Formula& f);

/// De Morgan dual: connectives exchanged, every leaf polarity flipped, t<->f.
Formula dual(const Formula& f);

/// Simultaneous renaming of atoms and substitution of variables.
Formula instantiate(const Formula& f, const Renaming& r, const Substitution& s);

Formula subformula_at(const Formula& f, const Path& p);
Formula replace_at(const Formula& f, const Path& p, const Formula& g);
bool path_resolvable(const Formula& f, const Path& p);

/// Number of unit, atom and variable occurrences.
std::size_t size(const Formula& f);
/// |xi{ }| = |xi{a}| - 1 for the context obtained by punching a hole at p.
std::size_t context_size(const Formula& f, const Path& p);
/// Maximum number of alternations of conjunction and disjunction on a
/// root-to-leaf path.
std::size_t andor_depth(const Formula& f);

/// Names of atoms (lowercase leaves) and variables occurring in f.
void collect_atoms(const Formula& f, std::vector<std::string>& out);
void collect_vars(const Formula& f, std::vector<std::string>& out);
bool mentions_var(const Formula& f, const std::string& var_name);
bool is_ground(const Formula& f);

std::string path_to_string(const Path& p);
Path path_from_string(const std::string& s);

}  // namespace cos

#endif
