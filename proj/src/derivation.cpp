#include "cos/derivation.hpp"

#include <algorithm>
#include <istream>
#include <set>
#include <sstream>

#include "cos/canonical.hpp"
#include "cos/truth.hpp"

namespace cos {

void CosDerivation::append(const CosDerivation& other) {
  if (conclusion() != other.premiss)
    throw std::logic_error("append: premiss does not match current conclusion");
  steps.insert(steps.end(), other.steps.begin(), other.steps.end());
}

namespace {

// Atomic counterpart required in the system for a macro step to stand for its
// expansion.
Rule atomic_counterpart(Rule r) {
  switch (r) {
    case Rule::IDown: return Rule::AiDown;
    case Rule::IUp: return Rule::AiUp;
    case Rule::WDown: return Rule::AwDown;
    case Rule::WUp: return Rule::AwUp;
    case Rule::CDown: return Rule::AcDown;
    case Rule::CUp: return Rule::AcUp;
    default: return r;
  }
}

std::size_t convention_charge(Rule r) {
  if (r == Rule::Eq) return 0;
  if (r == Rule::Switch) return 2;
  if (is_structural_nonatomic(r)) return 6;
  return 1;
}

}  // namespace

CheckReport check_derivation(const CosDerivation& d, const CheckOptions& opts) {
  CheckReport rep;
  rep.length = d.steps.size();
  rep.premiss = print_formula(d.premiss);
  rep.conclusion = print_formula(d.conclusion());
  rep.size = size(d.premiss);
  rep.is_proof = equal_mod_ac(d.premiss, Formula::t());

  Formula prev = d.premiss;
  for (std::size_t i = 0; i < d.steps.size(); ++i) {
    const Step& st = d.steps[i];
    Rule r = st.just.rule;
    Verdict v;
    if (!system_has_rule(d.system, r) && opts.allow_macros && is_atomic_system(d.system) &&
        is_structural_nonatomic(r) && system_has_rule(d.system, atomic_counterpart(r))) {
      rep.used_macros = true;
      v = verify_step_any(prev, st.result, st.just);
    } else {
      v = verify_step(d.system, prev, st.result, st.just);
    }
    if (!v) {
      rep.valid = false;
      rep.failed_step = i;
      rep.error = "step " + std::to_string(i) + " (" + rule_name(r) + "): " + v.error;
      return rep;
    }
    rep.size += size(st.result);
    rep.convention_length += convention_charge(r);
    rep.rule_counts[rule_name(r)] += 1;
    prev = st.result;
  }
  rep.valid = true;
  return rep;
}

CosDerivation embed(const CosDerivation& d, const Formula& ctx, const Path& hole) {
  if (!path_resolvable(ctx, hole)) throw path_error("embed: hole path unresolvable");
  CosDerivation out;
  out.system = d.system;
  out.premiss = replace_at(ctx, hole, d.premiss);
  for (const Step& st : d.steps) {
    StepJustification j = st.just;
    Path p = hole;
    p.insert(p.end(), j.path.begin(), j.path.end());
    j.path = std::move(p);
    out.push(std::move(j), replace_at(ctx, hole, st.result));
  }
  return out;
}

CosDerivation rename_derivation(const CosDerivation& d, const Renaming& r) {
  CosDerivation out;
  out.system = d.system;
  out.premiss = instantiate(d.premiss, r, {});
  for (const Step& st : d.steps) {
    StepJustification j = st.just;
    for (auto& [scheme_atom, occ] : j.renaming) {
      auto it = r.find(occ.name);
      if (it != r.end()) occ = AtomOcc{it->second.name, occ.negated != it->second.negated};
    }
    for (auto& [var, body] : j.substitution) body = instantiate(body, r, {});
    out.push(std::move(j), instantiate(st.result, r, {}));
  }
  return out;
}

CosDerivation substitute_derivation(const CosDerivation& d, const Substitution& s) {
  CosDerivation out;
  out.system = d.system;
  out.premiss = instantiate(d.premiss, {}, s);
  for (const Step& st : d.steps) {
    StepJustification j = st.just;
    for (auto& [var, body] : j.substitution) body = instantiate(body, {}, s);
    out.push(std::move(j), instantiate(st.result, {}, s));
  }
  return out;
}

CosDerivation ground(const CosDerivation& d) {
  std::vector<std::string> vars;
  std::vector<std::string> atoms;
  collect_vars(d.premiss, vars);
  collect_atoms(d.premiss, atoms);
  for (const Step& st : d.steps) {
    collect_vars(st.result, vars);
    collect_atoms(st.result, atoms);
    for (const auto& [v, body] : st.just.substitution) {
      collect_vars(body, vars);
      collect_atoms(body, atoms);
    }
  }
  std::set<std::string> taken(atoms.begin(), atoms.end());
  Substitution fresh;
  std::size_t counter = 0;
  for (const std::string& v : vars) {
    std::string name;
    do {
      name = "x" + std::to_string(counter++);
    } while (taken.count(name));
    taken.insert(name);
    fresh.emplace(v, Formula::atom(name));
  }
  return substitute_derivation(d, fresh);
}

bool semantic_check(const CosDerivation& d, std::size_t atom_bound) {
  Formula prev = d.premiss;
  for (const Step& st : d.steps) {
    if (st.just.rule == Rule::SubRule) {
      prev = st.result;  // sub is not implication-sound and is exempt
      continue;
    }
    bool ok = st.just.rule == Rule::Eq ? equivalent_semantically(prev, st.result, atom_bound)
                                       : implies_semantically(prev, st.result, atom_bound);
    if (!ok) return false;
    prev = st.result;
  }
  return true;
}

// --- .cosd -------------------------------------------------------------------

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Parses "{A := f, B := g}" or "bind k=v bind2..." binding clauses.
void parse_bindings(const std::string& text, StepJustification& j) {
  std::string body = trim(text);
  if (!body.empty() && body.front() == '{') {
    if (body.back() != '}') throw parse_error("unterminated binding block", 0);
    body = body.substr(1, body.size() - 2);
    // Split on commas at depth zero.
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : body) {
      if (c == '[' || c == '(') ++depth;
      if (c == ']' || c == ')') --depth;
      if (c == ',' && depth == 0) {
        parts.push_back(cur);
        cur.clear();
      } else {
        cur += c;
      }
    }
    if (!trim(cur).empty()) parts.push_back(cur);
    for (const std::string& part : parts) {
      std::size_t eq = part.find(":=");
      if (eq == std::string::npos) throw parse_error("binding needs ':='", 0);
      std::string key = trim(part.substr(0, eq));
      Formula value = parse_formula(trim(part.substr(eq + 2)));
      if (key.empty()) throw parse_error("empty binding key", 0);
      if (std::islower(static_cast<unsigned char>(key[0]))) {
        if (value.kind() != Kind::Atom) throw parse_error("renaming image must be an atom", 0);
        j.renaming[key] = AtomOcc{value.name(), value.negated()};
      } else {
        j.substitution.emplace(key, value);
      }
    }
    return;
  }
  // "bind k=v" clauses separated by whitespace at depth zero.
  std::stringstream ss(body);
  std::string word;
  while (ss >> word) {
    if (word != "bind") throw parse_error("expected 'bind'", 0);
    std::string rest;
    std::getline(ss, rest);
    rest = trim(rest);
    // Value may contain spaces; the clause runs to the next " bind " or EOL.
    std::size_t next = rest.find(" bind ");
    std::string clause = next == std::string::npos ? rest : rest.substr(0, next);
    std::string remainder = next == std::string::npos ? "" : rest.substr(next + 1);
    std::size_t eq = clause.find('=');
    if (eq == std::string::npos) throw parse_error("bind needs '='", 0);
    std::string key = trim(clause.substr(0, eq));
    Formula value = parse_formula(trim(clause.substr(eq + 1)));
    if (key.empty()) throw parse_error("empty binding key", 0);
    if (std::islower(static_cast<unsigned char>(key[0]))) {
      if (value.kind() != Kind::Atom) throw parse_error("renaming image must be an atom", 0);
      j.renaming[key] = AtomOcc{value.name(), value.negated()};
    } else {
      j.substitution.emplace(key, value);
    }
    ss = std::stringstream(remainder);
  }
}

}  // namespace

CosFile parse_cosd(std::istream& in) {
  CosFile file;
  bool have_system = false, have_premiss = false;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string text = trim(line);
    if (text.empty() || text[0] == '#') continue;
    std::stringstream ss(text);
    std::string head;
    ss >> head;
    try {
      if (head == "system") {
        std::string name;
        ss >> name;
        auto sys = system_from_name(name);
        if (!sys) throw parse_error("unknown system '" + name + "'", 0);
        file.derivation.system = *sys;
        have_system = true;
      } else if (head == "premiss") {
        std::string rest;
        std::getline(ss, rest);
        file.derivation.premiss = parse_formula(trim(rest));
        have_premiss = true;
      } else if (head == "ext") {
        std::string rest;
        std::getline(ss, rest);
        std::size_t eq = rest.find(":=");
        if (eq == std::string::npos) throw parse_error("ext needs ':='", 0);
        file.extensions.push_back(
            ExtDecl{trim(rest.substr(0, eq)), parse_formula(trim(rest.substr(eq + 2)))});
      } else if (head == "step") {
        std::string rule_tok;
        ss >> rule_tok;
        auto rule = rule_from_name(rule_tok);
        if (!rule) throw parse_error("unknown rule '" + rule_tok + "'", 0);
        StepJustification j;
        j.rule = *rule;
        std::string rest;
        std::getline(ss, rest);
        rest = trim(rest);
        std::size_t arrow = rest.rfind("=>");
        if (arrow == std::string::npos) throw parse_error("step needs '=>'", 0);
        std::string before = trim(rest.substr(0, arrow));
        Formula result = parse_formula(trim(rest.substr(arrow + 2)));
        if (!before.empty()) {
          if (before[0] == '@') {
            std::stringstream bs(before.substr(1));
            std::string path_tok;
            bs >> path_tok;
            j.path = path_from_string(path_tok);
            std::string bindings;
            std::getline(bs, bindings);
            if (!trim(bindings).empty()) parse_bindings(bindings, j);
          } else {
            parse_bindings(before, j);
          }
        }
        file.derivation.push(std::move(j), std::move(result));
      } else {
        throw parse_error("unknown directive '" + head + "'", 0);
      }
    } catch (const parse_error& e) {
      throw parse_error("line " + std::to_string(lineno) + ": " + e.what(), lineno);
    }
  }
  if (!have_system || !have_premiss)
    throw parse_error("derivation file needs 'system' and 'premiss' lines", lineno);
  return file;
}

CosFile parse_cosd_string(const std::string& text) {
  std::istringstream ss(text);
  return parse_cosd(ss);
}

std::string write_cosd(const CosDerivation& d, const std::vector<ExtDecl>& exts) {
  std::string out;
  out += "system " + system_name(d.system) + "\n";
  for (const ExtDecl& e : exts) out += "ext " + e.var + " := " + print_formula(e.body) + "\n";
  out += "premiss " + print_formula(d.premiss) + "\n";
  for (const Step& st : d.steps) {
    const StepJustification& j = st.just;
    out += "step " + rule_name(j.rule);
    if (j.rule == Rule::SubRule) {
      out += " {";
      bool first = true;
      for (const auto& [var, body] : j.substitution) {
        if (!first) out += ", ";
        first = false;
        out += var + " := " + print_formula(body);
      }
      out += "}";
    } else if (j.rule != Rule::Eq) {
      out += " @ " + path_to_string(j.path);
      for (const auto& [name, occ] : j.renaming)
        out += " bind " + name + "=" + print_formula(Formula::atom(occ.name, occ.negated));
      for (const auto& [var, body] : j.substitution) out += " bind " + var + "=" + print_formula(body);
    }
    out += " => " + print_formula(st.result) + "\n";
  }
  return out;
}

}  // namespace cos
