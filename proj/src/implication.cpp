#include "clat/implication.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "clat/errors.hpp"
#include "clat/resolution.hpp"
#include "clat/subsumption.hpp"

namespace clat {

TermSet::TermSet(std::span<const Term> terms) {
  for (const Term& t : terms) insert(t);
}

bool TermSet::contains(const Term& t) const { return std::binary_search(terms_.begin(), terms_.end(), t); }

void TermSet::insert(const Term& t) {
  if (!t.is_ground()) {
    std::ostringstream msg;
    msg << "term set member " << t << " is not ground";
    throw PreconditionError(msg.str());
  }
  for_each_subterm(t, [this](const Term& s) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), s);
    if (it == terms_.end() || *it != s) terms_.insert(it, s);
  });
}

TermSet term_set(std::span<const Clause> s, const Substitution& sigma) {
  std::vector<std::string> vars;
  std::set<std::string> consts;
  for (const Clause& c : s) {
    for (const Literal& l : c) {
      for (const Term& t : l.args()) collect_variables(t, vars);
    }
    for (const std::string& k : c.constants()) consts.insert(k);
  }
  if (sigma.size() != vars.size()) throw PreconditionError("term_set: substitution does not bind exactly the variables of the set");
  std::set<std::string> images;
  for (const std::string& v : vars) {
    const Term* t = sigma.find(v);
    if (!t) throw PreconditionError("term_set: variable " + v + " is not bound");
    if (!t->is_constant()) throw PreconditionError("term_set: variable " + v + " is not mapped to a constant");
    if (consts.contains(t->name())) throw PreconditionError("term_set: constant " + t->name() + " already occurs in the set");
    if (!images.insert(t->name()).second) throw PreconditionError("term_set: constant " + t->name() + " is used twice");
  }
  TermSet out;
  for (const Clause& c : apply(s, sigma)) {
    for (const Literal& l : c) {
      for (const Term& t : l.args()) out.insert(t);
    }
  }
  return out;
}

void for_each_instance(const Clause& c, std::span<const Term> k, const std::function<void(const Clause&)>& fn) {
  const std::vector<std::string> vars = c.variables();
  if (vars.empty()) {
    fn(c);
    return;
  }
  if (k.empty()) throw PreconditionError("instance_set: empty term collection for a non-ground clause");
  std::vector<std::size_t> idx(vars.size(), 0);
  while (true) {
    Substitution theta;
    for (std::size_t i = 0; i < vars.size(); ++i) theta.bind(vars[i], k[idx[i]]);
    fn(apply(c, theta));
    std::size_t pos = vars.size();
    while (pos > 0) {
      --pos;
      if (++idx[pos] < k.size()) break;
      idx[pos] = 0;
      if (pos == 0) return;
    }
  }
}

std::vector<Clause> instance_set(std::span<const Clause> cs, std::span<const Term> k) {
  std::vector<Clause> out;
  std::set<Clause> seen;
  for (const Clause& c : cs) {
    for_each_instance(c, k, [&](const Clause& inst) {
      if (seen.insert(inst).second) out.push_back(inst);
    });
  }
  return out;
}

std::vector<Clause> instance_set(const Clause& c, std::span<const Term> k) { return instance_set(std::span(&c, 1), k); }

int AtomTable::intern(const Literal& l) {
  Literal atom = l.positive() ? l : l.complement();
  auto [it, inserted] = index_.try_emplace(atom, static_cast<int>(atoms_.size()) + 1);
  if (inserted) atoms_.push_back(std::move(atom));
  return it->second;
}

int AtomTable::find(const Literal& l) const {
  auto it = index_.find(l.positive() ? l : l.complement());
  return it == index_.end() ? 0 : it->second;
}

namespace {

bool unsatisfiable(prop::Cnf& cnf, const AtomTable& atoms, GroundBackend backend) {
  cnf.num_vars = atoms.size();
  if (backend == GroundBackend::reference) return !prop::solve_exhaustive(cnf).has_value();
  return !prop::solve_dpll(cnf).has_value();
}

void add_clause(prop::Cnf& cnf, AtomTable& atoms, const Clause& c) {
  if (c.is_tautology()) return;
  std::vector<prop::Lit> lits;
  lits.reserve(c.size());
  for (const Literal& l : c) lits.push_back(atoms.encode(l));
  cnf.add(std::move(lits));
}

void add_negated_goal(prop::Cnf& cnf, AtomTable& atoms, const Clause& goal) {
  for (const Literal& l : goal) cnf.add({-atoms.encode(l)});
}

}  // namespace

bool ground_implies(std::span<const Clause> premises, const Clause& goal, GroundBackend backend) {
  for (const Clause& c : premises) {
    if (!c.is_ground()) throw PreconditionError("ground_implies: premise is not ground");
  }
  if (!goal.is_ground()) throw PreconditionError("ground_implies: goal is not ground");
  AtomTable atoms;
  prop::Cnf cnf;
  for (const Clause& c : premises) add_clause(cnf, atoms, c);
  add_negated_goal(cnf, atoms, goal);
  return unsatisfiable(cnf, atoms, backend);
}

namespace {

void require_function_free(std::span<const Clause> premises, const char* who) {
  for (std::size_t i = 0; i < premises.size(); ++i) {
    if (!premises[i].is_function_free()) {
      std::ostringstream msg;
      msg << who << ": premise " << i + 1 << " (" << premises[i] << ") contains a function symbol";
      throw PreconditionError(msg.str());
    }
  }
}

}  // namespace

bool implies_ff(std::span<const Clause> premises, const Clause& goal, GroundBackend backend) {
  require_function_free(premises, "implies_ff");
  if (goal.is_tautology()) return true;
  const Skolemization sk = skolemize(std::span(&goal, 1), premises);
  const Clause& ground_goal = sk.image.front();
  TermSet t = term_set(std::span(&goal, 1), sk.sigma);
  std::set<std::string> used;
  for (const Term& term : t.terms()) {
    if (term.is_constant()) used.insert(term.name());
  }
  for (const Clause& c : premises) {
    for (const std::string& k : c.constants()) {
      used.insert(k);
      t.insert(Term::constant(k));
    }
  }
  if (t.empty()) {
    std::size_t n = 0;
    while (used.contains("sk" + std::to_string(n))) ++n;
    t.insert(Term::constant("sk" + std::to_string(n)));
  }
  AtomTable atoms;
  prop::Cnf cnf;
  for (const Clause& c : premises) {
    for_each_instance(c, t.terms(), [&](const Clause& inst) { add_clause(cnf, atoms, inst); });
  }
  add_negated_goal(cnf, atoms, ground_goal);
  return unsatisfiable(cnf, atoms, backend);
}

bool implies_ff(const Clause& premise, const Clause& goal, GroundBackend backend) {
  return implies_ff(std::span(&premise, 1), goal, backend);
}

bool gottlob_filter(const Clause& c, const Clause& d) {
  if (c.is_tautology() || d.is_tautology()) throw PreconditionError("gottlob_filter: tautologous input");
  return subsumes(c.positive_part(), d.positive_part()) && subsumes(c.negative_part(), d.negative_part());
}

std::string to_string(const Verdict& v) {
  switch (v.kind) {
    case VerdictKind::proved:
      return "yes";
    case VerdictKind::disproved:
      return "no";
    case VerdictKind::unknown:
      return "unknown";
  }
  return "unknown";
}

void Budget::validate() const {
  if (max_derived_clauses == 0 || max_derivation_depth == 0 || max_term_depth == 0 || max_seconds.count() <= 0) {
    throw PreconditionError("budget fields must be positive");
  }
}

SaturationResult saturate(std::span<const Clause> premises, const Budget& budget, const SaturationOptions& options) {
  budget.validate();
  using Clock = std::chrono::steady_clock;
  const auto deadline = Clock::now() + std::chrono::duration_cast<Clock::duration>(budget.max_seconds);
  SaturationResult res;
  const std::size_t target_depth = options.target ? options.target->depth() : 0;

  auto hits_target = [&](const Clause& c) { return options.target && subsumes(c, *options.target); };
  auto forgotten = [&](const Clause& c, const std::vector<Clause>& extra) {
    for (const Clause& k : res.clauses) {
      if (subsumes(k, c)) return true;
    }
    for (const Clause& k : extra) {
      if (subsumes(k, c)) return true;
    }
    return false;
  };

  for (const Clause& p : premises) {
    if (p.is_tautology() || forgotten(p, {})) continue;
    res.clauses.push_back(p);
    if (hits_target(p)) {
      res.witness = res.clauses.size() - 1;
      return res;
    }
  }

  bool cut = false;
  std::size_t derived = 0;
  std::size_t frontier = 0;
  const EnumerationLimits limits{budget.max_derived_clauses, 0};
  for (std::size_t depth = 1;; ++depth) {
    if (depth > budget.max_derivation_depth) return res;
    std::vector<Clause> fresh;
    const std::size_t n = res.clauses.size();
    for (std::size_t j = frontier; j < n; ++j) {
      for (std::size_t i = 0; i <= j; ++i) {
        if (Clock::now() > deadline) return res;
        ClauseEnumeration rs = resolvents(res.clauses[i], res.clauses[j], limits);
        if (!rs.complete) cut = true;
        for (Clause& r : rs.clauses) {
          if (r.is_tautology()) continue;
          if (r.depth() > budget.max_term_depth ||
              (options.prune_by_target_depth && options.target && r.depth() > target_depth)) {
            cut = true;
            continue;
          }
          if (forgotten(r, fresh)) continue;
          if (options.on_step) options.on_step({r, res.clauses[i], res.clauses[j], depth});
          fresh.push_back(std::move(r));
          if (hits_target(fresh.back())) {
            res.witness = res.clauses.size() + fresh.size() - 1;
            res.clauses.insert(res.clauses.end(), fresh.begin(), fresh.end());
            return res;
          }
          if (++derived >= budget.max_derived_clauses) {
            res.clauses.insert(res.clauses.end(), fresh.begin(), fresh.end());
            return res;
          }
        }
      }
    }
    if (fresh.empty()) {
      res.complete = !cut;
      return res;
    }
    frontier = n;
    res.clauses.insert(res.clauses.end(), fresh.begin(), fresh.end());
  }
}

Verdict deduce(std::span<const Clause> premises, const Clause& goal, const Budget& budget, const DeduceOptions& options) {
  budget.validate();
  if (goal.is_tautology()) return Verdict::proved();
  if (std::ranges::all_of(premises, [](const Clause& c) { return c.is_function_free(); })) {
    return implies_ff(premises, goal, options.backend) ? Verdict::proved() : Verdict::disproved();
  }
  std::vector<const Clause*> live;
  for (const Clause& c : premises) {
    if (!c.is_tautology()) live.push_back(&c);
  }
  if (live.size() == 1) {
    const Clause& c = *live.front();
    if (!gottlob_filter(c, goal) || c.depth() > goal.depth()) return Verdict::disproved();
  }
  SaturationOptions sopts;
  sopts.target = goal;
  sopts.prune_by_target_depth = options.prune_by_goal_depth;
  sopts.on_step = options.on_step;
  const SaturationResult res = saturate(premises, budget, sopts);
  if (res.witness) return Verdict::proved();
  if (res.complete) return Verdict::disproved();
  return Verdict::unknown(UnknownReason::budget_exhausted);
}

Verdict rel_implies(const Clause& c, const Clause& goal, std::span<const Clause> bg, const Budget& budget,
                    const DeduceOptions& options) {
  std::vector<Clause> all(bg.begin(), bg.end());
  all.push_back(c);
  return deduce(all, goal, budget, options);
}

}  // namespace clat
