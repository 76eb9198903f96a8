#include "cos/gentzen.hpp"

#include <algorithm>
#include <istream>
#include <map>
#include <set>
#include <sstream>

#include "cos/canonical.hpp"
#include "cos/truth.hpp"

namespace cos {

std::string print_sequent(const Sequent& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += print_formula(s[i]);
  }
  return out;
}

Sequent parse_sequent(const std::string& text) {
  Sequent seq;
  int depth = 0;
  std::string cur;
  auto flush = [&] {
    std::size_t a = cur.find_first_not_of(" \t");
    if (a == std::string::npos) {
      cur.clear();
      return;
    }
    seq.push_back(parse_formula(cur));
    cur.clear();
  };
  for (char c : text) {
    if (c == '[' || c == '(') ++depth;
    if (c == ']' || c == ')') --depth;
    if (c == ',' && depth == 0) {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return seq;
}

std::size_t sequent_size(const Sequent& s) {
  std::size_t n = 0;
  for (const Formula& f : s) n += size(f);
  return n;
}

std::string grule_name(GRule r) {
  switch (r) {
    case GRule::Id: return "id";
    case GRule::Truth: return "t";
    case GRule::Cut: return "cut";
    case GRule::Weak: return "w";
    case GRule::Contr: return "c";
    case GRule::OrRule: return "or";
    case GRule::AndRule: return "and";
    case GRule::Premiss: return "prem";
  }
  return "?";
}

std::optional<GRule> grule_from_name(const std::string& name) {
  static const std::map<std::string, GRule> names = {
      {"id", GRule::Id},   {"t", GRule::Truth},   {"cut", GRule::Cut}, {"w", GRule::Weak},
      {"c", GRule::Contr}, {"or", GRule::OrRule}, {"and", GRule::AndRule}, {"prem", GRule::Premiss}};
  auto it = names.find(name);
  if (it == names.end()) return std::nullopt;
  return it->second;
}

GentzenPtr gnode(GRule r, Sequent s, std::vector<GentzenPtr> children) {
  auto n = std::make_shared<GentzenDerivation>();
  n->rule = r;
  n->sequent = std::move(s);
  n->children = std::move(children);
  return n;
}

namespace {

// Removes one occurrence structurally equal to f; false if absent.
bool remove_one(Sequent& s, const Formula& f) {
  for (auto it = s.begin(); it != s.end(); ++it) {
    if (*it == f) {
      s.erase(it);
      return true;
    }
  }
  return false;
}

bool multiset_equal(Sequent a, const Sequent& b) {
  if (a.size() != b.size()) return false;
  for (const Formula& f : b)
    if (!remove_one(a, f)) return false;
  return true;
}

// Splits an And principal into head and rest (n-ary nodes peel to the left).
std::pair<Formula, Formula> and_parts(const Formula& x) {
  const auto& ch = x.children();
  Formula rest = ch.size() == 2 ? ch[1]
                                : Formula::compound(Kind::And, std::vector<Formula>(ch.begin() + 1, ch.end()));
  return {ch[0], rest};
}

struct NodeCheck {
  bool ok = false;
  std::string error;
};

NodeCheck check_node(const GentzenDerivation& n) {
  auto fail = [](std::string e) { return NodeCheck{false, std::move(e)}; };
  switch (n.rule) {
    case GRule::Premiss:
      if (!n.children.empty()) return fail("premiss leaf has children");
      return {true, ""};
    case GRule::Id: {
      if (!n.children.empty()) return fail("id has children");
      if (n.sequent.size() != 2) return fail("id concludes exactly two formulae");
      if (n.sequent[1] != dual(n.sequent[0])) return fail("id needs a dual pair");
      return {true, ""};
    }
    case GRule::Truth: {
      if (!n.children.empty()) return fail("t has children");
      if (n.sequent.size() != 1 || n.sequent[0] != Formula::t()) return fail("t concludes the unit t");
      return {true, ""};
    }
    case GRule::Weak: {
      if (n.children.size() != 1) return fail("w has one premiss");
      for (std::size_t i = 0; i < n.sequent.size(); ++i) {
        Sequent rest = n.sequent;
        rest.erase(rest.begin() + i);
        if (multiset_equal(rest, n.children[0]->sequent)) return {true, ""};
      }
      return fail("w adds exactly one formula");
    }
    case GRule::Contr: {
      if (n.children.size() != 1) return fail("c has one premiss");
      for (std::size_t i = 0; i < n.sequent.size(); ++i) {
        Sequent more = n.sequent;
        more.push_back(n.sequent[i]);
        if (multiset_equal(more, n.children[0]->sequent)) return {true, ""};
      }
      return fail("c duplicates one formula of the conclusion");
    }
    case GRule::OrRule: {
      if (n.children.size() != 1) return fail("or has one premiss");
      for (std::size_t i = 0; i < n.sequent.size(); ++i) {
        if (n.sequent[i].kind() != Kind::Or) continue;
        Sequent open = n.sequent;
        open.erase(open.begin() + i);
        for (const Formula& c : n.sequent[i].children()) open.push_back(c);
        if (multiset_equal(open, n.children[0]->sequent)) return {true, ""};
      }
      return fail("or opens one disjunction of the conclusion");
    }
    case GRule::AndRule: {
      if (n.children.size() != 2) return fail("and has two premisses");
      const Sequent& left = n.children[0]->sequent;
      const Sequent& right = n.children[1]->sequent;
      for (std::size_t i = 0; i < n.sequent.size(); ++i) {
        if (n.sequent[i].kind() != Kind::And) continue;
        auto [a, b] = and_parts(n.sequent[i]);
        Sequent phi = left;
        if (!remove_one(phi, a)) continue;
        Sequent psi = right;
        if (!remove_one(psi, b)) continue;
        Sequent ctx = n.sequent;
        ctx.erase(ctx.begin() + i);
        Sequent both = phi;
        both.insert(both.end(), psi.begin(), psi.end());
        if (multiset_equal(both, ctx)) return {true, ""};
      }
      return fail("and must split the context between its premisses");
    }
    case GRule::Cut: {
      if (n.children.size() != 2) return fail("cut has two premisses");
      const Sequent& left = n.children[0]->sequent;
      const Sequent& right = n.children[1]->sequent;
      for (const Formula& cutf : left) {
        Sequent phi = left;
        remove_one(phi, cutf);
        Sequent psi = right;
        if (!remove_one(psi, dual(cutf))) continue;
        Sequent both = phi;
        both.insert(both.end(), psi.begin(), psi.end());
        if (multiset_equal(both, n.sequent)) return {true, ""};
      }
      return fail("cut needs a dual pair split across its premisses");
    }
  }
  return fail("unknown rule");
}

void walk(const GentzenDerivation& n, GentzenReport& rep, std::size_t& index) {
  std::size_t my_index = index++;
  rep.nodes += 1;
  rep.size += sequent_size(n.sequent);
  if (n.rule == GRule::Cut) rep.analytic = false;
  if (n.rule == GRule::Premiss) rep.premisses.push_back(n.sequent);
  NodeCheck nc = check_node(n);
  if (!nc.ok && rep.error.empty()) {
    rep.valid = false;
    rep.error = "node " + std::to_string(my_index) + " (" + grule_name(n.rule) + "): " + nc.error;
    return;
  }
  for (const auto& c : n.children) walk(*c, rep, index);
}

}  // namespace

GentzenReport check_gentzen(const GentzenDerivation& d) {
  GentzenReport rep;
  rep.valid = true;
  rep.analytic = true;
  rep.conclusion = print_sequent(d.sequent);
  std::size_t index = 0;
  walk(d, rep, index);
  if (!rep.error.empty()) rep.valid = false;
  return rep;
}

// --- translation ---------------------------------------------------------------

namespace {

Formula seq_formula(const Sequent& s) {
  if (s.empty()) return Formula::f();
  Formula acc = s[0];
  for (std::size_t i = 1; i < s.size(); ++i) acc = Formula::disj(acc, s[i]);
  return acc;
}

Formula conj_of(const std::vector<Formula>& fs) {
  if (fs.empty()) return Formula::t();
  Formula acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = Formula::conj(acc, fs[i]);
  return acc;
}

// Path of element i inside the left-nested spine of k elements.
Path spine_path(std::size_t i, std::size_t k) {
  Path p;
  if (k <= 1) return p;
  for (std::size_t j = 0; j + 1 + i < k; ++j) p.push_back(0);
  if (i > 0) p.push_back(1);
  return p;
}

struct Translated {
  CosDerivation d;
  std::vector<Sequent> premisses;
};

class GentzenTranslator {
 public:
  Translated run(const GentzenDerivation& n) {
    switch (n.rule) {
      case GRule::Premiss: {
        Translated t;
        t.d.system = SystemId::SKSg;
        t.d.premiss = seq_formula(n.sequent);
        t.premisses = {n.sequent};
        return t;
      }
      case GRule::Truth: {
        Translated t;
        t.d.system = SystemId::SKSg;
        t.d.premiss = Formula::t();
        return t;
      }
      case GRule::Id: {
        Translated t;
        t.d.system = SystemId::SKSg;
        t.d.premiss = Formula::t();
        t.d.push({Rule::IDown, {}, {}, Substitution{{"A", n.sequent[0]}}},
                 Formula::disj(n.sequent[0], n.sequent[1]));
        return t;
      }
      case GRule::Weak: {
        Translated t = run(*n.children[0]);
        auto [idx, rest] = principal_single(n, *n.children[0]);
        std::vector<Formula> slot = n.sequent;
        slot[idx] = Formula::f();
        eq(t, seq_formula(slot));
        rule(t, Rule::WDown, spine_path(idx, n.sequent.size()), n.sequent[idx],
             Substitution{{"A", n.sequent[idx]}});
        return t;
      }
      case GRule::Contr: {
        Translated t = run(*n.children[0]);
        auto [idx, rest] = principal_single(n, *n.children[0]);
        std::vector<Formula> slot = n.sequent;
        slot[idx] = Formula::disj(n.sequent[idx], n.sequent[idx]);
        eq(t, seq_formula(slot));
        rule(t, Rule::CDown, spine_path(idx, n.sequent.size()), n.sequent[idx],
             Substitution{{"A", n.sequent[idx]}});
        return t;
      }
      case GRule::OrRule: {
        Translated t = run(*n.children[0]);
        eq(t, seq_formula(n.sequent));
        return t;
      }
      case GRule::AndRule:
      case GRule::Cut:
        return binary_node(n);
    }
    throw std::logic_error("gentzen_to_sksg: bad rule");
  }

 private:
  void eq(Translated& t, Formula next) {
    if (t.d.conclusion() == next) return;
    t.d.push(Rule::Eq, {}, std::move(next));
  }

  void rule(Translated& t, Rule r, Path p, Formula redex, Substitution sub) {
    Formula next = replace_at(t.d.conclusion(), p, std::move(redex));
    t.d.push({r, std::move(p), {}, std::move(sub)}, std::move(next));
  }

  // Identifies the principal position of a single-premiss rule.
  std::pair<std::size_t, Sequent> principal_single(const GentzenDerivation& n,
                                                   const GentzenDerivation& child) {
    for (std::size_t i = 0; i < n.sequent.size(); ++i) {
      Sequent rest = n.sequent;
      rest.erase(rest.begin() + i);
      if (n.rule == GRule::Weak) {
        if (multiset_equal(rest, child.sequent)) return {i, rest};
      } else if (n.rule == GRule::Contr) {
        Sequent more = n.sequent;
        more.push_back(n.sequent[i]);
        if (multiset_equal(more, child.sequent)) return {i, rest};
      }
    }
    throw std::logic_error("principal formula not found (invalid input?)");
  }

  Translated binary_node(const GentzenDerivation& n) {
    const bool is_cut = n.rule == GRule::Cut;
    const Sequent& left = n.children[0]->sequent;
    const Sequent& right = n.children[1]->sequent;

    // Recover the principal decomposition the checker accepted.
    Formula a, b;
    Sequent phi, psi;
    bool found = false;
    if (is_cut) {
      for (const Formula& cutf : left) {
        Sequent lrest = left;
        remove_one(lrest, cutf);
        Sequent rrest = right;
        if (!remove_one(rrest, dual(cutf))) continue;
        Sequent both = lrest;
        both.insert(both.end(), rrest.begin(), rrest.end());
        if (multiset_equal(both, n.sequent)) {
          a = cutf;
          b = dual(cutf);
          phi = lrest;
          psi = rrest;
          found = true;
          break;
        }
      }
    } else {
      for (std::size_t i = 0; i < n.sequent.size() && !found; ++i) {
        if (n.sequent[i].kind() != Kind::And) continue;
        auto [ca, cb] = and_parts(n.sequent[i]);
        Sequent lrest = left;
        if (!remove_one(lrest, ca)) continue;
        Sequent rrest = right;
        if (!remove_one(rrest, cb)) continue;
        Sequent ctx = n.sequent;
        ctx.erase(ctx.begin() + i);
        Sequent both = lrest;
        both.insert(both.end(), rrest.begin(), rrest.end());
        if (multiset_equal(both, ctx)) {
          a = ca;
          b = cb;
          phi = lrest;
          psi = rrest;
          found = true;
        }
      }
    }
    if (!found) throw std::logic_error("principal decomposition not found (invalid input?)");

    Translated t1 = run(*n.children[0]);
    Translated t2 = run(*n.children[1]);

    Translated t;
    t.d.system = SystemId::SKSg;
    t.premisses = t1.premisses;
    t.premisses.insert(t.premisses.end(), t2.premisses.begin(), t2.premisses.end());

    std::vector<Formula> all;
    for (const Sequent& s : t.premisses) all.push_back(seq_formula(s));
    t.d.premiss = conj_of(all);

    // (premisses of both blocks), then the two blocks side by side.
    eq(t, Formula::conj(t1.d.premiss, t2.d.premiss));
    CosDerivation left_block = embed(t1.d, t.d.conclusion(), Path{0});
    t.d.append(left_block);
    CosDerivation right_block = embed(t2.d, t.d.conclusion(), Path{1});
    t.d.append(right_block);

    Formula pl = phi.empty() ? Formula::f() : seq_formula(phi);
    Formula pr = psi.empty() ? Formula::f() : seq_formula(psi);
    Formula x2 = Formula::disj(b, pr);

    eq(t, Formula::conj(x2, Formula::disj(a, pl)));
    rule(t, Rule::Switch, {}, Formula::disj(Formula::conj(x2, a), pl),
         Substitution{{"A", x2}, {"B", a}, {"C", pl}});
    eq(t, Formula::disj(pl, Formula::conj(a, x2)));
    rule(t, Rule::Switch, {1}, Formula::disj(Formula::conj(a, b), pr),
         Substitution{{"A", a}, {"B", b}, {"C", pr}});
    if (is_cut) {
      rule(t, Rule::IUp, {1, 0}, Formula::f(), Substitution{{"A", a}});
    }
    eq(t, seq_formula(n.sequent));
    return t;
  }
};

}  // namespace

CosDerivation gentzen_to_sksg(const GentzenDerivation& d) {
  GentzenReport rep = check_gentzen(d);
  if (!rep.valid) throw std::invalid_argument("gentzen_to_sksg: invalid input: " + rep.error);
  GentzenTranslator tr;
  Translated t = tr.run(d);
  t.d.system = rep.analytic ? SystemId::KSg : SystemId::SKSg;
  return t.d;
}

// --- bounded exhaustive prover ---------------------------------------------------

namespace {

struct BudgetExhausted {};

struct Closure {
  std::size_t cost = 0;
  bool via_t = false;
  std::size_t i = 0, j = 0;  // dual pair indices, or i = index of t
};

struct MoveChoice {
  enum Kind { CloseMove, OrMove, AndMove, ContrMove } kind = CloseMove;
  Closure closure;
  std::size_t index = 0;  // principal index for Or/And/Contr
  std::size_t mask = 0;   // context split for And
};

// Exhaustive memoized search for the minimal-size proof reachable under the
// strategy: disjunction opened eagerly, closure by id/t plus weakenings,
// conjunction splits enumerated, contraction once per conjunction value per
// branch. Sequents whose disjunction is not a tautology are pruned (cut-free
// rules only prove valid sequents), which also makes refutation exact.
class Prover {
 public:
  explicit Prover(std::size_t budget) : budget_(budget) {}

  ProverResult prove(const Sequent& goal) {
    ProverResult res;
    Sequent start = sorted(goal);
    try {
      std::size_t best = solve(start, {});
      res.nodes_explored = nodes_;
      if (best != kInf) {
        res.proved = true;
        res.minimal_size = best;
        res.proof = rebuild(start, {});
      }
    } catch (const BudgetExhausted&) {
      res.budget_exhausted = true;
      res.nodes_explored = nodes_;
    }
    return res;
  }

 private:
  static constexpr std::size_t kInf = static_cast<std::size_t>(-1);

  static Sequent sorted(Sequent s) {
    std::sort(s.begin(), s.end(),
              [](const Formula& a, const Formula& b) { return compare_formulas(a, b) < 0; });
    return s;
  }

  static std::string key_of(const Sequent& s, const std::set<std::string>& contracted) {
    std::string k = print_sequent(s);
    k += " !";
    for (const std::string& c : contracted) k += c + ";";
    return k;
  }

  std::vector<Closure> closures(const Sequent& s) {
    std::vector<Closure> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
      if (s[i] == Formula::t()) {
        Closure c;
        c.via_t = true;
        c.i = i;
        c.cost = fill_cost(s, 1, {i});
        out.push_back(c);
      }
      for (std::size_t j = i + 1; j < s.size(); ++j) {
        if (s[j] == dual(s[i])) {
          Closure c;
          c.i = i;
          c.j = j;
          c.cost = fill_cost(s, size(s[i]) + size(s[j]), {i, j});
          out.push_back(c);
        }
      }
    }
    return out;
  }

  // Cost of the leaf node plus the weakening chain restoring the remaining
  // formulae, added smallest first.
  std::size_t fill_cost(const Sequent& s, std::size_t leaf_size, std::vector<std::size_t> used) {
    std::vector<std::size_t> extras;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (std::find(used.begin(), used.end(), i) == used.end()) extras.push_back(size(s[i]));
    std::sort(extras.begin(), extras.end());
    std::size_t cost = leaf_size;
    std::size_t running = leaf_size;
    for (std::size_t e : extras) {
      running += e;
      cost += running;
    }
    return cost;
  }

  std::optional<std::size_t> first_or(const Sequent& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i].kind() == Kind::Or) return i;
    return std::nullopt;
  }

  std::size_t solve(const Sequent& s, const std::set<std::string>& contracted) {
    std::string key = key_of(s, contracted);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    if (++nodes_ > budget_) throw BudgetExhausted{};

    std::size_t best = kInf;
    MoveChoice best_move{};
    if (is_tautology(seq_formula(s), 24)) {
      std::size_t lower = sequent_size(s);
      for (const Closure& c : closures(s)) {
        if (c.cost < best) {
          best = c.cost;
          best_move = MoveChoice{MoveChoice::CloseMove, c, 0, 0};
        }
      }
      if (auto oi = first_or(s)) {
        Sequent child = or_child(s, *oi);
        std::size_t sub = solve(child, contracted);
        if (sub != kInf && lower + sub < best) {
          best = lower + sub;
          best_move = MoveChoice{MoveChoice::OrMove, {}, *oi, 0};
        }
      } else {
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (s[i].kind() != Kind::And) continue;
          std::size_t nsplits = std::size_t{1} << (s.size() - 1);
          for (std::size_t mask = 0; mask < nsplits; ++mask) {
            auto [lchild, rchild] = and_children(s, i, mask);
            std::size_t lsub = solve(lchild, contracted);
            if (lsub == kInf) continue;
            std::size_t rsub = solve(rchild, contracted);
            if (rsub == kInf) continue;
            std::size_t total = lower + lsub + rsub;
            if (total < best) {
              best = total;
              best_move = MoveChoice{MoveChoice::AndMove, {}, i, mask};
            }
          }
        }
        // Bounded contraction: once per conjunction value per branch.
        for (std::size_t i = 0; i < s.size(); ++i) {
          if (s[i].kind() != Kind::And) continue;
          std::string fkey = print_formula(s[i]);
          if (contracted.count(fkey)) continue;
          std::set<std::string> c2 = contracted;
          c2.insert(fkey);
          Sequent child = s;
          child.push_back(s[i]);
          child = sorted(child);
          std::size_t sub = solve(child, c2);
          if (sub != kInf && lower + sub < best) {
            best = lower + sub;
            best_move = MoveChoice{MoveChoice::ContrMove, {}, i, 0};
          }
        }
      }
    }

    memo_[key] = best;
    if (best != kInf) move_[key] = best_move;
    return best;
  }

  static Sequent or_child(const Sequent& s, std::size_t idx) {
    Sequent child = s;
    Formula x = child[idx];
    child.erase(child.begin() + idx);
    for (const Formula& part : x.children()) child.push_back(part);
    return sorted(child);
  }

  static std::pair<Sequent, Sequent> and_children(const Sequent& s, std::size_t idx,
                                                  std::size_t mask) {
    auto [a, b] = and_parts(s[idx]);
    Sequent lchild{a}, rchild{b};
    std::size_t bit = 0;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (j == idx) continue;
      (mask >> bit & 1 ? rchild : lchild).push_back(s[j]);
      ++bit;
    }
    return {sorted(lchild), sorted(rchild)};
  }

  GentzenPtr close_proof(const Sequent& s, const Closure& c) {
    std::vector<std::size_t> used;
    GentzenPtr node;
    if (c.via_t) {
      node = gnode(GRule::Truth, Sequent{Formula::t()});
      used = {c.i};
    } else {
      node = gnode(GRule::Id, Sequent{s[c.i], s[c.j]});
      used = {c.i, c.j};
    }
    std::vector<std::size_t> extras;
    for (std::size_t i = 0; i < s.size(); ++i)
      if (std::find(used.begin(), used.end(), i) == used.end()) extras.push_back(i);
    std::sort(extras.begin(), extras.end(),
              [&](std::size_t x, std::size_t y) { return size(s[x]) < size(s[y]); });
    for (std::size_t e : extras) {
      Sequent next = node->sequent;
      next.push_back(s[e]);
      node = gnode(GRule::Weak, next, {node});
    }
    return node;
  }

  GentzenPtr rebuild(const Sequent& s, const std::set<std::string>& contracted) {
    std::string key = key_of(s, contracted);
    auto it = move_.find(key);
    if (it == move_.end()) throw std::logic_error("prover: lost the winning move");
    const MoveChoice& mv = it->second;
    switch (mv.kind) {
      case MoveChoice::CloseMove:
        return close_proof(s, mv.closure);
      case MoveChoice::OrMove:
        return gnode(GRule::OrRule, s, {rebuild(or_child(s, mv.index), contracted)});
      case MoveChoice::AndMove: {
        auto [lchild, rchild] = and_children(s, mv.index, mv.mask);
        return gnode(GRule::AndRule, s, {rebuild(lchild, contracted), rebuild(rchild, contracted)});
      }
      case MoveChoice::ContrMove: {
        std::set<std::string> c2 = contracted;
        c2.insert(print_formula(s[mv.index]));
        Sequent child = s;
        child.push_back(s[mv.index]);
        child = sorted(child);
        return gnode(GRule::Contr, s, {rebuild(child, c2)});
      }
    }
    throw std::logic_error("prover: bad move");
  }

  std::size_t budget_;
  std::size_t nodes_ = 0;
  std::map<std::string, std::size_t> memo_;
  std::map<std::string, MoveChoice> move_;
};

}  // namespace

ProverResult cutfree_prove(const Sequent& goal, std::size_t node_budget) {
  for (const Formula& f : goal)
    if (!is_ground(f)) throw std::invalid_argument("cutfree_prove: goal must be ground");
  return Prover(node_budget).prove(goal);
}

// --- .gtz ------------------------------------------------------------------------

namespace {

struct SexpParser {
  explicit SexpParser(std::string text) : text_(std::move(text)) {}

  GentzenPtr parse() {
    GentzenPtr n = node();
    skip();
    if (pos_ != text_.size()) throw parse_error("trailing input after derivation", pos_);
    return n;
  }

 private:
  void skip() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_[pos_] == ';') {  // comment to end of line
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  char peek() {
    skip();
    if (pos_ >= text_.size()) throw parse_error("unexpected end of derivation", pos_);
    return text_[pos_];
  }

  GentzenPtr node() {
    if (peek() != '(') throw parse_error("expected '('", pos_);
    ++pos_;
    skip();
    std::string name;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')' && text_[pos_] != '"')
      name += text_[pos_++];
    auto rule = grule_from_name(name);
    if (!rule) throw parse_error("unknown sequent rule '" + name + "'", pos_);
    if (peek() != '"') throw parse_error("expected quoted sequent", pos_);
    ++pos_;
    std::string seq_text;
    while (pos_ < text_.size() && text_[pos_] != '"') seq_text += text_[pos_++];
    if (pos_ >= text_.size()) throw parse_error("unterminated sequent string", pos_);
    ++pos_;
    std::vector<GentzenPtr> children;
    while (peek() != ')') children.push_back(node());
    ++pos_;
    return gnode(*rule, parse_sequent(seq_text), std::move(children));
  }

  std::string text_;
  std::size_t pos_ = 0;
};

void write_rec(const GentzenDerivation& d, std::string& out, int indent) {
  out.append(static_cast<std::size_t>(indent) * 2, ' ');
  out += "(" + grule_name(d.rule) + " \"" + print_sequent(d.sequent) + "\"";
  if (d.children.empty()) {
    out += ")\n";
    return;
  }
  out += "\n";
  for (const auto& c : d.children) write_rec(*c, out, indent + 1);
  out.append(static_cast<std::size_t>(indent) * 2, ' ');
  out += ")\n";
}

}  // namespace

GentzenPtr parse_gtz(std::istream& in) {
  std::stringstream ss;
  ss << in.rdbuf();
  return SexpParser(ss.str()).parse();
}

GentzenPtr parse_gtz_string(const std::string& text) { return SexpParser(text).parse(); }

std::string write_gtz(const GentzenDerivation& d) {
  std::string out;
  write_rec(d, out, 0);
  return out;
}

}  // namespace cos
