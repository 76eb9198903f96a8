#include "cos/tautologies.hpp"

#include "cos/canonical.hpp"

namespace cos {

namespace {

Formula c_atom(std::size_t i) { return Formula::atom("c" + std::to_string(i)); }
Formula d_atom(std::size_t i) { return Formula::atom("d" + std::to_string(i)); }

Formula alpha(std::size_t i) {
  return Formula::disj(Formula::atom("c" + std::to_string(i), true),
                       Formula::atom("d" + std::to_string(i), true));
}

// Conjunction of alpha_i for i = n down to k, nested to the right.
Formula beta(std::size_t k, std::size_t n) {
  if (n == k) return alpha(k);
  return Formula::conj(alpha(n), beta(k, n - 1));
}

Formula gamma(std::size_t k, std::size_t n) { return Formula::conj(beta(k + 1, n), c_atom(k)); }
Formula delta(std::size_t k, std::size_t n) { return Formula::conj(beta(k + 1, n), d_atom(k)); }

Formula fold_spine(const std::vector<Formula>& blocks, const Formula& tail) {
  Formula acc = tail;
  for (std::size_t i = blocks.size(); i-- > 0;) acc = Formula::disj(blocks[i], acc);
  return acc;
}

Formula nest_of(const Formula& f, std::size_t count) {
  Formula acc = f;
  for (std::size_t i = 1; i < count; ++i) acc = Formula::disj(f, acc);
  return acc;
}

}  // namespace

Formula statman(std::size_t n) {
  if (n < 1) throw std::invalid_argument("statman: n must be at least 1");
  std::vector<Formula> blocks;
  blocks.push_back(dual(alpha(n)));  // (c_n & d_n)
  for (std::size_t k = n - 1; k >= 1; --k)
    blocks.push_back(Formula::conj(gamma(k, n), delta(k, n)));
  Formula tail = alpha(1);
  Formula head = blocks.front();
  blocks.erase(blocks.begin());
  return Formula::disj(head, fold_spine(blocks, tail));
}

CosDerivation statman_step(std::size_t n) {
  if (n < 1) throw std::invalid_argument("statman_step: n must be at least 1");
  const Formula aprime = alpha(n + 1);
  const Formula abar = dual(aprime);                 // (c_{n+1} & d_{n+1})
  const Formula pr = Formula::disj(aprime, abar);    // [alpha' | dual alpha']
  const Formula t = Formula::t();

  // blocks[0] derives from (c_n & d_n); blocks[i] (i >= 1) from the pair block
  // of k = n - i. Each block carries the two conjunct sides.
  struct BlockParts {
    std::size_t k = 0;  // 0 marks the (c_n & d_n) block
    Formula c_side, d_side;
  };
  std::vector<BlockParts> blocks;
  blocks.push_back({0, c_atom(n), d_atom(n)});
  for (std::size_t k = n - 1; k >= 1 && n >= 2; --k)
    blocks.push_back({k, gamma(k, n), delta(k, n)});

  auto assemble = [&](std::size_t nest_count) {
    std::vector<Formula> bs;
    for (const BlockParts& b : blocks) bs.push_back(Formula::conj(b.c_side, b.d_side));
    Formula head = bs.front();
    bs.erase(bs.begin());
    Formula spine = Formula::disj(head, fold_spine(bs, alpha(1)));
    if (nest_count == 0) return spine;
    return Formula::disj(nest_of(abar, nest_count), spine);
  };

  CosDerivation d;
  d.system = SystemId::KS;
  d.premiss = statman(n);
  Formula cur = d.premiss;
  auto eq_whole = [&](Formula next) {
    if (next == cur) return;
    d.push(Rule::Eq, {}, next);
    cur = next;
  };
  auto rule_at = [&](Rule r, const Path& p, Formula redex, Substitution sub) {
    Formula next = replace_at(cur, p, std::move(redex));
    d.push({r, p, {}, std::move(sub)}, next);
    cur = next;
  };
  auto block_path = [&](std::size_t nest_count, std::size_t bi) {
    Path p;
    if (nest_count > 0) p.push_back(1);
    for (std::size_t i = 0; i < bi; ++i) p.push_back(1);
    p.push_back(0);
    return p;
  };

  // Phase one: conjoin [alpha' | dual alpha'] next to every c_k, d_k and beta
  // occurrence, one = plus one interaction macro each (2n interactions).
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    BlockParts& b = blocks[bi];
    Path pb = block_path(0, bi);
    for (int side = 0; side < 2; ++side) {
      Formula& part = side == 0 ? b.c_side : b.d_side;
      Formula slot = b.k == 0 ? Formula::conj(t, part)
                              : Formula::conj(Formula::conj(t, part.child(0)), part.child(1));
      Formula filled = b.k == 0 ? Formula::conj(pr, part)
                                : Formula::conj(Formula::conj(pr, part.child(0)), part.child(1));
      Formula other_c = side == 0 ? slot : b.c_side;
      Formula other_d = side == 0 ? b.d_side : slot;
      eq_whole(replace_at(cur, pb, Formula::conj(other_c, other_d)));
      Path q = pb;
      q.push_back(side == 0 ? 0 : 1);
      q.push_back(0);
      if (b.k != 0) q.push_back(0);
      rule_at(Rule::IDown, q, pr, Substitution{{"A", aprime}});
      part = filled;
    }
  }

  // Phase two: one switch per interaction pulls dual alpha' out to the top
  // disjunction (2n switches); the = steps around each switch gather the
  // conjunct block and float the extracted copy.
  std::size_t nest = 0;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    BlockParts& b = blocks[bi];
    for (int side = 0; side < 2; ++side) {
      Path pb = block_path(nest, bi);
      Formula& part = side == 0 ? b.c_side : b.d_side;
      Formula stripped = b.k == 0 ? part.child(1)  // drop the pr conjunct
                                  : Formula::conj(part.child(0).child(1), part.child(1));
      Formula rest = side == 0 ? Formula::conj(stripped, b.d_side)
                               : Formula::conj(b.c_side, stripped);
      eq_whole(replace_at(cur, pb, Formula::conj(rest, pr)));
      rule_at(Rule::Switch, pb, Formula::disj(Formula::conj(rest, aprime), abar),
              Substitution{{"A", rest}, {"B", aprime}, {"C", abar}});
      part = b.k == 0 ? Formula::conj(aprime, part.child(1))
                      : Formula::conj(Formula::conj(aprime, part.child(0).child(1)), part.child(1));
      ++nest;
      eq_whole(assemble(nest));
    }
  }

  // Phase three: contract the 2n extracted copies down to one (2n-1
  // contraction macros on the innermost pair of the nest).
  for (std::size_t m = 2 * n; m >= 2; --m) {
    Path p{0};
    for (std::size_t i = 0; i + 2 < m; ++i) p.push_back(1);
    rule_at(Rule::CDown, p, abar, Substitution{{"A", abar}});
  }

  if (cur != statman(n + 1)) throw std::logic_error("statman_step: endpoint mismatch");
  return d;
}

CosDerivation statman_proof(std::size_t n) {
  if (n < 1) throw std::invalid_argument("statman_proof: n must be at least 1");
  CosDerivation d;
  d.system = SystemId::KS;
  d.premiss = Formula::t();
  Formula s1 = statman(1);
  d.push({Rule::IDown, {}, {}, Substitution{{"A", dual(alpha(1))}}}, s1);
  for (std::size_t k = 1; k < n; ++k) d.append(statman_step(k));
  return d;
}

namespace {

std::size_t pow5(std::size_t e) {
  std::size_t v = 1;
  while (e--) v *= 5;
  return v;
}

Formula b_atom(std::size_t i, bool neg = false) { return Formula::atom("b" + std::to_string(i), neg); }

Formula dt_h(std::size_t n, std::size_t m, const Formula& alpha) {
  if (n == 1) {
    Formula b = b_atom(m + 1);
    return Formula::disj(Formula::conj(Formula::conj(alpha, b), b),
                         Formula::conj(b_atom(m + 1, true), b_atom(m + 1, true)));
  }
  // Index management keeps the atom sets of the four branches disjoint.
  std::size_t base = pow5(n - 2);
  Formula b = b_atom(5 * base + m);
  Formula nb = b_atom(5 * base + m, true);
  return Formula::disj(
      Formula::conj(dt_h(n - 1, m, Formula::conj(alpha, b)), dt_h(n - 1, base + m, b)),
      Formula::conj(dt_h(n - 1, 2 * base + m, nb), dt_h(n - 1, 3 * base + m, nb)));
}

}  // namespace

Formula dt(std::size_t n) {
  if (n < 1) throw std::invalid_argument("dt: n must be at least 1");
  return dt_h(n, 0, Formula::t());
}

}  // namespace cos
