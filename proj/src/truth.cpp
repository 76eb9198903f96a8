#include "cos/truth.hpp"

#include <algorithm>
#include <map>

namespace cos {

std::vector<std::string> leaf_names(const Formula& f) {
  std::vector<std::string> names;
  collect_atoms(f, names);
  collect_vars(f, names);
  std::sort(names.begin(), names.end());
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

namespace {

// Evaluates 64 assignments at once. vals maps each leaf name to a word whose
// bit b is the name's value in assignment b of the current block.
std::uint64_t eval_block(const Formula& f, const std::map<std::string, std::uint64_t>& vals) {
  switch (f.kind()) {
    case Kind::True: return ~0ull;
    case Kind::False: return 0ull;
    case Kind::Atom:
    case Kind::Var: {
      std::uint64_t v = vals.at(f.name());
      return f.negated() ? ~v : v;
    }
    case Kind::Or: {
      std::uint64_t v = 0;
      for (const Formula& c : f.children()) v |= eval_block(c, vals);
      return v;
    }
    case Kind::And: {
      std::uint64_t v = ~0ull;
      for (const Formula& c : f.children()) v &= eval_block(c, vals);
      return v;
    }
  }
  return 0;
}

// Runs pred over all assignments to names; stops early on a counterexample.
// pred receives the leaf valuation for a 64-assignment block and a mask of
// block bits that correspond to real assignments.
template <typename Pred>
bool all_assignments(const std::vector<std::string>& names, std::size_t atom_bound, Pred pred) {
  if (names.size() > atom_bound)
    throw too_many_atoms("formula has " + std::to_string(names.size()) +
                         " distinct atoms/variables, bound is " + std::to_string(atom_bound));
  std::map<std::string, std::uint64_t> vals;
  const std::size_t n = names.size();
  // The first min(n,6) names vary within a block.
  static const std::uint64_t kPatterns[6] = {
      0xAAAAAAAAAAAAAAAAull, 0xCCCCCCCCCCCCCCCCull, 0xF0F0F0F0F0F0F0F0ull,
      0xFF00FF00FF00FF00ull, 0xFFFF0000FFFF0000ull, 0xFFFFFFFF00000000ull};
  const std::size_t in_block = std::min<std::size_t>(n, 6);
  std::uint64_t mask = in_block >= 6 ? ~0ull : ((1ull << (1ull << in_block)) - 1);
  const std::size_t outer_bits = n - in_block;
  const std::uint64_t outer_count = 1ull << outer_bits;
  for (std::uint64_t outer = 0; outer < outer_count; ++outer) {
    for (std::size_t i = 0; i < n; ++i) {
      if (i < in_block) vals[names[i]] = kPatterns[i];
      else vals[names[i]] = (outer >> (i - in_block)) & 1 ? ~0ull : 0ull;
    }
    if (!pred(vals, mask)) return false;
  }
  return true;
}

}  // namespace

bool is_tautology(const Formula& f, std::size_t atom_bound) {
  return all_assignments(leaf_names(f), atom_bound,
                         [&](const std::map<std::string, std::uint64_t>& vals, std::uint64_t mask) {
                           return (eval_block(f, vals) & mask) == mask;
                         });
}

bool implies_semantically(const Formula& premiss, const Formula& conclusion, std::size_t atom_bound) {
  std::vector<std::string> names = leaf_names(premiss);
  for (const std::string& n : leaf_names(conclusion))
    if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  std::sort(names.begin(), names.end());
  return all_assignments(names, atom_bound,
                         [&](const std::map<std::string, std::uint64_t>& vals, std::uint64_t mask) {
                           std::uint64_t p = eval_block(premiss, vals);
                           std::uint64_t c = eval_block(conclusion, vals);
                           return ((~p | c) & mask) == mask;
                         });
}

bool equivalent_semantically(const Formula& a, const Formula& b, std::size_t atom_bound) {
  std::vector<std::string> names = leaf_names(a);
  for (const std::string& n : leaf_names(b))
    if (std::find(names.begin(), names.end(), n) == names.end()) names.push_back(n);
  std::sort(names.begin(), names.end());
  return all_assignments(names, atom_bound,
                         [&](const std::map<std::string, std::uint64_t>& vals, std::uint64_t mask) {
                           return ((eval_block(a, vals) ^ eval_block(b, vals)) & mask) == 0;
                         });
}

}  // namespace cos
