#include "cos/macro_expand.hpp"

#include "cos/canonical.hpp"

namespace cos {

namespace {

// Builds a derivation by replacing the subformula at a path of the running
// formula. Rules carry their justification; = steps are emitted as given.
class Emitter {
 public:
  Emitter(SystemId sys, Formula premiss) : cur_(std::move(premiss)) {
    d_.system = sys;
    d_.premiss = cur_;
  }

  const Formula& current() const { return cur_; }

  void eq_at(const Path& p, Formula new_redex) {
    Formula next = replace_at(cur_, p, std::move(new_redex));
    if (next == cur_) return;  // drop no-op = steps
    step({Rule::Eq, {}, {}, {}}, std::move(next));
  }

  void rule_at(Rule r, const Path& p, Formula new_redex, Renaming ren = {}, Substitution sub = {}) {
    step({r, p, std::move(ren), std::move(sub)}, replace_at(cur_, p, std::move(new_redex)));
  }

  CosDerivation take() { return std::move(d_); }

 private:
  void step(StepJustification j, Formula next) {
    d_.push(std::move(j), next);
    cur_ = std::move(next);
  }

  CosDerivation d_;
  Formula cur_;
};

Renaming atom_binding(const Formula& occurrence) {
  return Renaming{{"a", AtomOcc{occurrence.name(), occurrence.negated()}}};
}

// Splits the children of an n-ary node into head and the left-peeled rest.
std::pair<Formula, Formula> peel(const Formula& f) {
  const auto& ch = f.children();
  Formula head = ch[0];
  Formula rest = ch.size() == 2 ? ch[1]
                                : Formula::compound(f.kind(), std::vector<Formula>(ch.begin() + 1, ch.end()));
  return {head, rest};
}

[[noreturn]] void nonground() { throw expand_error("nonground input: expansion needs atoms"); }

// t at p becomes [x | dual(x)]; uses ai-down and switch.
void expand_i_down(Emitter& em, const Path& p, const Formula& x) {
  switch (x.kind()) {
    case Kind::Var: nonground();
    case Kind::True:
    case Kind::False:
      em.eq_at(p, Formula::disj(x, dual(x)));
      return;
    case Kind::Atom:
      em.rule_at(Rule::AiDown, p, Formula::disj(x, dual(x)), atom_binding(x));
      return;
    case Kind::Or: {
      auto [beta, gamma] = peel(x);
      Formula dbeta = dual(beta), dgamma = dual(gamma);
      expand_i_down(em, p, gamma);  // [gamma | dgamma]
      em.eq_at(p, Formula::disj(gamma, Formula::conj(Formula::t(), dgamma)));
      Path q = p;
      q.push_back(1);
      q.push_back(0);
      expand_i_down(em, q, beta);  // [gamma | ([beta|dbeta] & dgamma)]
      em.eq_at(p, Formula::disj(gamma, Formula::conj(dgamma, Formula::disj(dbeta, beta))));
      Path sw = p;
      sw.push_back(1);
      em.rule_at(Rule::Switch, sw, Formula::disj(Formula::conj(dgamma, dbeta), beta),
                 {}, Substitution{{"A", dgamma}, {"B", dbeta}, {"C", beta}});
      em.eq_at(p, Formula::disj(x, dual(x)));
      return;
    }
    case Kind::And: {
      auto [beta, gamma] = peel(x);
      Formula dbeta = dual(beta), dgamma = dual(gamma);
      expand_i_down(em, p, gamma);  // [gamma | dgamma]
      em.eq_at(p, Formula::disj(Formula::conj(Formula::t(), gamma), dgamma));
      Path q = p;
      q.push_back(0);
      q.push_back(0);
      expand_i_down(em, q, beta);  // [([beta|dbeta] & gamma) | dgamma]
      em.eq_at(p, Formula::disj(Formula::conj(gamma, Formula::disj(beta, dbeta)), dgamma));
      Path sw = p;
      sw.push_back(0);
      em.rule_at(Rule::Switch, sw, Formula::disj(Formula::conj(gamma, beta), dbeta),
                 {}, Substitution{{"A", gamma}, {"B", beta}, {"C", dbeta}});
      em.eq_at(p, Formula::disj(x, dual(x)));
      return;
    }
  }
}

// (x & dual(x)) at p becomes f; uses ai-up and switch. The redex must be the
// literal conjunction And(x, dual(x)).
void expand_i_up(Emitter& em, const Path& p, const Formula& x) {
  switch (x.kind()) {
    case Kind::Var: nonground();
    case Kind::True:
    case Kind::False:
      em.eq_at(p, Formula::f());
      return;
    case Kind::Atom:
      em.rule_at(Rule::AiUp, p, Formula::f(), atom_binding(x));
      return;
    case Kind::Or: {
      auto [beta, gamma] = peel(x);
      Formula dbeta = dual(beta), dgamma = dual(gamma);
      em.eq_at(p, Formula::conj(Formula::conj(dbeta, Formula::disj(beta, gamma)), dgamma));
      Path sw = p;
      sw.push_back(0);
      em.rule_at(Rule::Switch, sw, Formula::disj(Formula::conj(dbeta, beta), gamma),
                 {}, Substitution{{"A", dbeta}, {"B", beta}, {"C", gamma}});
      Path q = sw;
      q.push_back(0);
      expand_i_up(em, q, dbeta);  // ([f | gamma] & dgamma)
      em.eq_at(p, Formula::conj(gamma, dgamma));
      expand_i_up(em, p, gamma);
      return;
    }
    case Kind::And: {
      auto [beta, gamma] = peel(x);
      Formula dbeta = dual(beta), dgamma = dual(gamma);
      em.eq_at(p, Formula::conj(Formula::conj(beta, Formula::disj(dbeta, dgamma)), gamma));
      Path sw = p;
      sw.push_back(0);
      em.rule_at(Rule::Switch, sw, Formula::disj(Formula::conj(beta, dbeta), dgamma),
                 {}, Substitution{{"A", beta}, {"B", dbeta}, {"C", dgamma}});
      Path q = sw;
      q.push_back(0);
      expand_i_up(em, q, beta);  // ([f | dgamma] & gamma)
      em.eq_at(p, Formula::conj(gamma, dgamma));
      expand_i_up(em, p, gamma);
      return;
    }
  }
}

// f at p becomes alpha; uses aw-down (plus one switch for the unit case).
void expand_w_down(Emitter& em, const Path& p, const Formula& alpha) {
  switch (alpha.kind()) {
    case Kind::Var: nonground();
    case Kind::False:
      return;  // f to f: nothing to do
    case Kind::True: {
      em.eq_at(p, Formula::conj(Formula::f(), Formula::disj(Formula::f(), Formula::t())));
      em.rule_at(Rule::Switch, p,
                 Formula::disj(Formula::conj(Formula::f(), Formula::f()), Formula::t()), {},
                 Substitution{{"A", Formula::f()}, {"B", Formula::f()}, {"C", Formula::t()}});
      em.eq_at(p, Formula::t());
      return;
    }
    case Kind::Atom:
      em.rule_at(Rule::AwDown, p, alpha, atom_binding(alpha));
      return;
    case Kind::Or: {
      auto [head, rest] = peel(alpha);
      expand_w_down(em, p, rest);
      std::vector<Formula> slot;
      slot.push_back(Formula::f());
      for (std::size_t i = 1; i < alpha.arity(); ++i) slot.push_back(alpha.child(i));
      em.eq_at(p, Formula::disj(std::move(slot)));
      Path q = p;
      q.push_back(0);
      expand_w_down(em, q, head);
      return;
    }
    case Kind::And: {
      em.eq_at(p, Formula::conj(std::vector<Formula>(alpha.arity(), Formula::f())));
      for (std::size_t i = 0; i < alpha.arity(); ++i) {
        Path q = p;
        q.push_back(i);
        expand_w_down(em, q, alpha.child(i));
      }
      return;
    }
  }
}

// alpha at p becomes t; uses aw-up (plus one switch for the unit case).
void expand_w_up(Emitter& em, const Path& p, const Formula& alpha) {
  switch (alpha.kind()) {
    case Kind::Var: nonground();
    case Kind::True:
      return;
    case Kind::False: {
      em.eq_at(p, Formula::conj(Formula::f(), Formula::disj(Formula::f(), Formula::t())));
      em.rule_at(Rule::Switch, p,
                 Formula::disj(Formula::conj(Formula::f(), Formula::f()), Formula::t()), {},
                 Substitution{{"A", Formula::f()}, {"B", Formula::f()}, {"C", Formula::t()}});
      em.eq_at(p, Formula::t());
      return;
    }
    case Kind::Atom:
      em.rule_at(Rule::AwUp, p, Formula::t(), atom_binding(alpha));
      return;
    case Kind::Or: {
      for (std::size_t i = 0; i < alpha.arity(); ++i) {
        Path q = p;
        q.push_back(i);
        expand_w_up(em, q, alpha.child(i));
      }
      em.eq_at(p, Formula::t());
      return;
    }
    case Kind::And: {
      auto [head, rest] = peel(alpha);
      Path q = p;
      q.push_back(0);
      expand_w_up(em, q, head);
      em.eq_at(p, rest);
      expand_w_up(em, p, rest);
      return;
    }
  }
}

// [x | x] at p becomes x; uses ac-down and medial.
void expand_c_down(Emitter& em, const Path& p, const Formula& x) {
  switch (x.kind()) {
    case Kind::Var: nonground();
    case Kind::True:
    case Kind::False:
      em.eq_at(p, x);
      return;
    case Kind::Atom:
      em.rule_at(Rule::AcDown, p, x, atom_binding(x));
      return;
    case Kind::Or: {
      auto [beta, gamma] = peel(x);
      em.eq_at(p, Formula::disj(Formula::disj(beta, beta), Formula::disj(gamma, gamma)));
      Path q0 = p;
      q0.push_back(0);
      expand_c_down(em, q0, beta);
      Path q1 = p;
      q1.push_back(1);
      expand_c_down(em, q1, gamma);
      if (x.arity() > 2) em.eq_at(p, x);  // regroup [beta|gamma] into the n-ary spelling
      return;
    }
    case Kind::And: {
      auto [beta, gamma] = peel(x);
      if (x.arity() > 2)
        em.eq_at(p, Formula::disj(Formula::conj(beta, gamma), Formula::conj(beta, gamma)));
      em.rule_at(Rule::Medial, p, Formula::conj(Formula::disj(beta, beta), Formula::disj(gamma, gamma)),
                 {}, Substitution{{"A", beta}, {"B", gamma}, {"C", beta}, {"D", gamma}});
      Path q0 = p;
      q0.push_back(0);
      expand_c_down(em, q0, beta);
      Path q1 = p;
      q1.push_back(1);
      expand_c_down(em, q1, gamma);
      if (x.arity() > 2) em.eq_at(p, x);
      return;
    }
  }
}

// x at p becomes (x & x); uses ac-up and medial.
void expand_c_up(Emitter& em, const Path& p, const Formula& x) {
  switch (x.kind()) {
    case Kind::Var: nonground();
    case Kind::True:
    case Kind::False:
      em.eq_at(p, Formula::conj(x, x));
      return;
    case Kind::Atom:
      em.rule_at(Rule::AcUp, p, Formula::conj(x, x), atom_binding(x));
      return;
    case Kind::And: {
      auto [beta, gamma] = peel(x);
      if (x.arity() > 2) em.eq_at(p, Formula::conj(beta, gamma));
      Path q0 = p;
      q0.push_back(0);
      expand_c_up(em, q0, beta);
      Path q1 = p;
      q1.push_back(1);
      expand_c_up(em, q1, gamma);
      em.eq_at(p, Formula::conj(x, x));
      return;
    }
    case Kind::Or: {
      auto [beta, gamma] = peel(x);
      if (x.arity() > 2) em.eq_at(p, Formula::disj(beta, gamma));
      Path q1 = p;
      q1.push_back(1);
      expand_c_up(em, q1, gamma);
      Path q0 = p;
      q0.push_back(0);
      expand_c_up(em, q0, beta);
      em.rule_at(Rule::Medial, p,
                 Formula::conj(Formula::disj(beta, gamma), Formula::disj(beta, gamma)), {},
                 Substitution{{"A", beta}, {"B", beta}, {"C", gamma}, {"D", gamma}});
      em.eq_at(p, Formula::conj(x, x));
      return;
    }
  }
}

struct RedexPair {
  Formula redex;
  Formula coredex;
};

RedexPair redexes(Rule r, const Formula& premiss, const Formula& conclusion, const Path& path) {
  if (!path_resolvable(premiss, path) || !path_resolvable(conclusion, path))
    throw expand_error("path out of range");
  RedexPair rp{subformula_at(premiss, path), subformula_at(conclusion, path)};
  auto want = [&](bool cond, const char* what) {
    if (!cond) throw expand_error(std::string("scheme mismatch for ") + rule_name(r) + ": " + what);
  };
  switch (r) {
    case Rule::IDown:
      want(rp.redex == Formula::t(), "premiss redex must be t");
      want(rp.coredex.kind() == Kind::Or && rp.coredex.arity() == 2 &&
               rp.coredex.child(1) == dual(rp.coredex.child(0)),
           "conclusion redex must be [x | dual x]");
      break;
    case Rule::IUp:
      want(rp.coredex == Formula::f(), "conclusion redex must be f");
      want(rp.redex.kind() == Kind::And && rp.redex.arity() == 2 &&
               rp.redex.child(1) == dual(rp.redex.child(0)),
           "premiss redex must be (x & dual x)");
      break;
    case Rule::WDown:
      want(rp.redex == Formula::f(), "premiss redex must be f");
      break;
    case Rule::WUp:
      want(rp.coredex == Formula::t(), "conclusion redex must be t");
      break;
    case Rule::CDown:
      want(rp.redex.kind() == Kind::Or && rp.redex.arity() == 2 &&
               rp.redex.child(0) == rp.redex.child(1) && rp.redex.child(0) == rp.coredex,
           "redex must be [x | x] over x");
      break;
    case Rule::CUp:
      want(rp.coredex.kind() == Kind::And && rp.coredex.arity() == 2 &&
               rp.coredex.child(0) == rp.coredex.child(1) && rp.coredex.child(0) == rp.redex,
           "redex must be x over (x & x)");
      break;
    default:
      throw expand_error("not a structural rule");
  }
  return rp;
}

}  // namespace

CosDerivation expand_structural(Rule r, const Formula& premiss, const Formula& conclusion,
                                const Path& path) {
  RedexPair rp = redexes(r, premiss, conclusion, path);
  Emitter em(SystemId::SKS, premiss);
  switch (r) {
    case Rule::IDown: expand_i_down(em, path, rp.coredex.child(0)); break;
    case Rule::IUp: expand_i_up(em, path, rp.redex.child(0)); break;
    case Rule::WDown: expand_w_down(em, path, rp.coredex); break;
    case Rule::WUp: expand_w_up(em, path, rp.redex); break;
    case Rule::CDown: expand_c_down(em, path, rp.coredex); break;
    case Rule::CUp: expand_c_up(em, path, rp.redex); break;
    default: throw expand_error("not a structural rule");
  }
  CosDerivation d = em.take();
  if (d.conclusion() != conclusion)
    throw expand_error("expansion endpoint mismatch for " + rule_name(r));
  return d;
}

CosDerivation derive_co_rules(Rule r, const Formula& premiss, const Formula& conclusion,
                              const Path& path) {
  if (r != Rule::WUp && r != Rule::CUp) throw expand_error("derive_co_rules handles w-up and c-up");
  RedexPair rp = redexes(r, premiss, conclusion, path);
  Emitter em(SystemId::SKSg, premiss);
  const Formula t = Formula::t(), f = Formula::f();
  if (r == Rule::WUp) {
    const Formula& a = rp.redex;
    em.eq_at(path, Formula::conj(a, Formula::disj(f, t)));
    em.rule_at(Rule::Switch, path, Formula::disj(Formula::conj(a, f), t), {},
               Substitution{{"A", a}, {"B", f}, {"C", t}});
    Path q = path;
    q.push_back(0);
    q.push_back(1);
    em.rule_at(Rule::WDown, q, dual(a), {}, Substitution{{"A", dual(a)}});
    Path q2 = path;
    q2.push_back(0);
    em.rule_at(Rule::IUp, q2, f, {}, Substitution{{"A", a}});
    em.eq_at(path, t);
  } else {
    const Formula& a = rp.redex;
    Formula da = dual(a);
    em.eq_at(path, Formula::conj(a, t));
    Path q = path;
    q.push_back(1);
    em.rule_at(Rule::IDown, q,
               Formula::disj(Formula::disj(da, da), Formula::conj(a, a)), {},
               Substitution{{"A", Formula::disj(da, da)}});
    em.rule_at(Rule::Switch, path,
               Formula::disj(Formula::conj(a, Formula::disj(da, da)), Formula::conj(a, a)), {},
               Substitution{{"A", a}, {"B", Formula::disj(da, da)}, {"C", Formula::conj(a, a)}});
    Path q2 = path;
    q2.push_back(0);
    q2.push_back(1);
    em.rule_at(Rule::CDown, q2, da, {}, Substitution{{"A", da}});
    Path q3 = path;
    q3.push_back(0);
    em.rule_at(Rule::IUp, q3, f, {}, Substitution{{"A", a}});
    em.eq_at(path, Formula::conj(a, a));
  }
  CosDerivation d = em.take();
  if (d.conclusion() != conclusion) throw expand_error("co-rule endpoint mismatch");
  return d;
}

namespace {

CosDerivation expand_all(const CosDerivation& d, SystemId target) {
  CosDerivation out;
  out.system = target;
  out.premiss = d.premiss;
  Formula prev = d.premiss;
  for (const Step& st : d.steps) {
    if (is_structural_nonatomic(st.just.rule)) {
      CosDerivation block = expand_structural(st.just.rule, prev, st.result, st.just.path);
      for (Step& bs : block.steps) out.steps.push_back(std::move(bs));
    } else {
      out.steps.push_back(st);
    }
    prev = st.result;
  }
  return out;
}

}  // namespace

CosDerivation sksg_to_sks(const CosDerivation& d) {
  CheckReport rep = check_derivation(d);
  if (!rep.valid) throw expand_error("invalid input derivation: " + rep.error);
  SystemId target = SystemId::SKS;
  if (d.system == SystemId::KSg) target = SystemId::KS;
  if (d.system == SystemId::aKSg) target = SystemId::aKS;
  if (d.system == SystemId::KS || d.system == SystemId::SKS || d.system == SystemId::aKS)
    target = d.system;
  return expand_all(d, target);
}

CosDerivation expand_macros(const CosDerivation& d) { return expand_all(d, d.system); }

}  // namespace cos
