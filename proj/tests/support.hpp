#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "clat/clause.hpp"
#include "clat/substitution.hpp"
#include "clat/syntax.hpp"

namespace testing_support {

using clat::Clause;
using clat::Literal;
using clat::Substitution;
using clat::Term;

inline Clause C(const std::string& text) { return clat::parse_clause(text); }
inline std::vector<Clause> P(const std::string& text) { return clat::parse_program(text).clauses; }
inline Term V(const std::string& n) { return Term::variable(n); }
inline Term K(const std::string& n) { return Term::constant(n); }
inline Term F(const std::string& f, std::vector<Term> a) { return Term::compound(f, std::move(a)); }

// Random syntax over a small fixed signature.
class Gen {
 public:
  explicit Gen(std::uint32_t seed) : rng_(seed) {}

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }
  std::mt19937& rng() { return rng_; }

  int max_depth = 2;
  int vars = 3;
  int consts = 3;
  bool functions = true;
  int max_arity = 2;
  // Predicates p/1, q/2, r/1 and, when wide, s/3.
  bool wide = false;

  Term term(int depth = 1) {
    const int roll = pick(10);
    if (functions && depth < max_depth && roll < 3) {
      const int arity = 1 + pick(max_arity);
      std::vector<Term> args;
      for (int i = 0; i < arity; ++i) args.push_back(term(depth + 1));
      static const char* const names[] = {"f", "g", "h"};
      return F(names[arity - 1], std::move(args));
    }
    if (vars > 0 && roll < 7) return V("X" + std::to_string(pick(vars)));
    return K(std::string(1, static_cast<char>('a' + pick(consts))));
  }

  Term ground_term(int depth = 1) {
    const int saved = vars;
    vars = 0;
    Term t = term(depth);
    vars = saved;
    return t;
  }

  Literal literal() {
    static const std::vector<std::pair<std::string, int>> preds = {{"p", 1}, {"q", 2}, {"r", 1}, {"s", 3}};
    const auto& [name, arity] = preds[pick(wide ? 4 : 3)];
    std::vector<Term> args;
    for (int i = 0; i < arity; ++i) args.push_back(term());
    return Literal(coin(), name, std::move(args));
  }

  Clause clause(int max_lits = 3) {
    std::vector<Literal> lits;
    const int n = 1 + pick(max_lits);
    for (int i = 0; i < n; ++i) lits.push_back(literal());
    return Clause(std::move(lits));
  }

  Clause non_tautology(int max_lits = 3) {
    while (true) {
      Clause c = clause(max_lits);
      if (!c.is_tautology()) return c;
    }
  }

  Clause ground_clause(int max_lits = 3) {
    const int saved = vars;
    vars = 0;
    Clause c = clause(max_lits);
    vars = saved;
    return c;
  }

  // A random substitution over X0..X(vars-1).
  Substitution substitution() {
    Substitution s;
    for (int i = 0; i < vars; ++i) {
      if (coin()) s.bind("X" + std::to_string(i), term());
    }
    return s;
  }

 private:
  std::mt19937 rng_;
};

inline std::vector<Term> subterms_of(const Clause& c) {
  std::set<Term> out;
  for (const Literal& l : c) {
    for (const Term& t : l.args()) {
      std::function<void(const Term&)> walk = [&](const Term& u) {
        out.insert(u);
        for (const Term& a : u.args()) walk(a);
      };
      walk(t);
    }
  }
  return {out.begin(), out.end()};
}

inline std::vector<std::string> vars_of(const Clause& c) { return c.variables(); }

// Brute-force subsumption: every map from the variables of c into the terms
// of d, then a plain subset check.
inline bool oracle_subsumes(const Clause& c, const Clause& d) {
  const std::vector<std::string> xs = c.variables();
  const std::vector<Term> ts = subterms_of(d);
  if (xs.empty()) {
    for (const Literal& l : c) {
      if (!d.contains(l)) return false;
    }
    return true;
  }
  if (ts.empty()) return false;
  std::vector<std::size_t> idx(xs.size(), 0);
  while (true) {
    Substitution s;
    for (std::size_t i = 0; i < xs.size(); ++i) s.bind(xs[i], ts[idx[i]]);
    bool all = true;
    for (const Literal& l : c) {
      if (!d.contains(clat::apply(l, s))) {
        all = false;
        break;
      }
    }
    if (all) return true;
    std::size_t pos = 0;
    while (pos < idx.size() && ++idx[pos] == ts.size()) idx[pos++] = 0;
    if (pos == idx.size()) return false;
  }
}

// Truth-table ground entailment over the atoms of premises and goal.
inline bool oracle_ground_implies(const std::vector<Clause>& premises, const Clause& goal) {
  std::map<Literal, int> atoms;
  auto atom = [&](const Literal& l) {
    const Literal a = l.positive() ? l : l.complement();
    return atoms.emplace(a, static_cast<int>(atoms.size())).first->second;
  };
  for (const Clause& c : premises) {
    for (const Literal& l : c) atom(l);
  }
  for (const Literal& l : goal) atom(l);
  const int n = static_cast<int>(atoms.size());
  auto holds = [&](const Clause& c, std::uint32_t m) {
    for (const Literal& l : c) {
      const bool v = (m >> atom(l)) & 1U;
      if (v == l.positive()) return true;
    }
    return false;
  };
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    bool model = true;
    for (const Clause& c : premises) model = model && holds(c, m);
    if (model && !holds(goal, m)) return false;
  }
  return true;
}

}  // namespace testing_support
