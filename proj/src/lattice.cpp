#include "clat/lattice.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "clat/errors.hpp"
#include "clat/matching.hpp"
#include "clat/resolution.hpp"
#include "clat/subsumption.hpp"

namespace clat {

Clause canonical_tautology() {
  const Term x = Term::variable("v0");
  return Clause{Literal::pos("sk0", {x}), Literal::neg("sk0", {x})};
}

namespace {

using Clock = std::chrono::steady_clock;

Clock::time_point deadline_for(const Budget& b) {
  return Clock::now() + std::chrono::duration_cast<Clock::duration>(b.max_seconds);
}

void check_clock(Clock::time_point deadline) {
  if (Clock::now() > deadline) throw BudgetExhausted("lgi: time budget exhausted");
}

std::vector<std::pair<std::string, std::size_t>> predicates_of(std::span<const Clause> s) {
  std::set<std::pair<std::string, std::size_t>> seen;
  std::vector<std::pair<std::string, std::size_t>> out;
  for (const Clause& c : s) {
    for (const Literal& l : c) {
      if (seen.insert({l.predicate(), l.arity()}).second) out.emplace_back(l.predicate(), l.arity());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Calls fn with every tuple of `arity` elements of `values`.
void for_each_tuple(std::span<const Term> values, std::size_t arity, const std::function<void(std::vector<Term>)>& fn) {
  std::vector<std::size_t> idx(arity, 0);
  if (arity > 0 && values.empty()) return;
  while (true) {
    std::vector<Term> args;
    args.reserve(arity);
    for (std::size_t i : idx) args.push_back(values[i]);
    fn(std::move(args));
    std::size_t pos = arity;
    while (pos > 0) {
      --pos;
      if (++idx[pos] < values.size()) break;
      idx[pos] = 0;
      if (pos == 0) return;
    }
    if (arity == 0) return;
  }
}

// Set partitions of n items as block indices, coarsest first.
std::vector<std::vector<int>> partitions(std::size_t n) {
  std::vector<std::vector<int>> out;
  std::vector<int> a(n, 0);
  std::function<void(std::size_t, int)> grow = [&](std::size_t i, int blocks) {
    if (i == n) {
      out.push_back(a);
      return;
    }
    for (int b = 0; b <= blocks; ++b) {
      a[i] = b;
      grow(i + 1, std::max(blocks, b + 1));
    }
  };
  grow(0, 0);
  auto blocks = [](const std::vector<int>& p) { return p.empty() ? 0 : *std::max_element(p.begin(), p.end()) + 1; };
  std::stable_sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return blocks(x) < blocks(y); });
  return out;
}

// The optimized search.
//
// A function-free clause C implies D iff every Herbrand interpretation M over
// the terms of D*sigma (plus the constants of the input) that falsifies D*sigma also
// falsifies an instance of C, i.e. C subsumes K_M, the clause of all literals
// false in M with the non-constant values read as variables. The
// generalizations of the input are therefore the common generalizations of all such
// K_M, and the answer is their LGS. Interpretations of coarser groundings of
// D (variables identified) give K_M that every generalization subsumes as
// well; they are smaller, so they are folded in first. The candidate is
// generalized by one countermodel at a time until the injective grounding of
// every D has none left.
class CegarLgi {
 public:
  CegarLgi(std::span<const Clause> s, const Budget& budget, const LgiOptions& options)
      : options_(options), deadline_(deadline_for(budget)), src_(s.begin(), s.end()), preds_(predicates_of(s)) {
    for (const Clause& c : src_) {
      for (const std::string& k : c.constants()) constants_.insert(k);
    }
  }

  Clause run() {
    std::size_t most = 0;
    for (const Clause& d : src_) most = std::max(most, d.variables().size());
    for (std::size_t level = 1; level <= std::max<std::size_t>(most, 1); ++level) {
      for (const Clause& d : src_) {
        const std::size_t n = d.variables().size();
        if (level > std::max<std::size_t>(n, 1)) continue;
        for (const std::vector<int>& part : partitions(n)) {
          const int blocks = part.empty() ? 0 : *std::max_element(part.begin(), part.end()) + 1;
          if (static_cast<std::size_t>(std::max(blocks, 1)) != level) continue;
          Frame f = frame(d, part);
          while (auto m = countermodel(f)) {
            if (++rounds_ > options_.max_rounds) throw BudgetExhausted("lgi: generalization round limit reached");
            const Clause k = f.falsified(*m);
            g_ = g_ ? lgs_pair(*g_, k) : reduce(k);
            if (g_->size() > options_.max_candidate_literals) return equivalent_union();
          }
        }
      }
    }
    return reduce(*g_);
  }

 private:
  // Fallback once the candidate grows too large. A generalization H of the input
  // that the input implies is implied by every generalization, so H and any union
  // of generalizations containing it are equivalent to the least one.
  Clause equivalent_union() const {
    if (!std::ranges::all_of(src_, [](const Clause& c) { return c.is_function_free(); })) {
      throw BudgetExhausted("lgi: candidate exceeds " + std::to_string(options_.max_candidate_literals) + " literals");
    }
    std::vector<Clause> pool(src_);
    pool.push_back(lgs_set(src_));
    std::vector<Clause> gens;
    bool anchored = false;
    for (const Clause& h : pool) {
      check_clock(deadline_);
      if (!std::ranges::all_of(src_, [&](const Clause& d) { return implies_ff(h, d); })) continue;
      gens.push_back(h);
      anchored = anchored || implies_ff(src_, h);
    }
    if (!anchored) {
      throw BudgetExhausted("lgi: candidate exceeds " + std::to_string(options_.max_candidate_literals) + " literals");
    }
    return reduce(gss_clausal(gens));
  }

  struct Frame {
    AtomTable atoms;
    std::set<std::string> opaque;
    std::vector<prop::Lit> goal_units;

    Term open(const Term& t) const { return opaque.contains(t.name()) ? Term::variable(t.name()) : t; }

    // K_M with opaque values as variables.
    Clause falsified(const prop::Model& m) const {
      std::vector<Literal> lits;
      for (int v = 1; v <= atoms.size(); ++v) {
        const Literal& a = atoms.atom(v);
        std::vector<Term> args;
        for (const Term& t : a.args()) args.push_back(open(t));
        lits.emplace_back(!m[v], a.predicate(), std::move(args));
      }
      return Clause(std::move(lits));
    }
  };

  Frame frame(const Clause& d, const std::vector<int>& part) const {
    Frame f;
    std::set<std::string> used = constants_;
    std::vector<Term> blocks;
    std::size_t next = 0;
    auto fresh = [&]() {
      std::string name;
      do {
        name = "sk" + std::to_string(next++);
      } while (used.contains(name));
      used.insert(name);
      f.opaque.insert(name);
      return Term::constant(name);
    };
    Substitution sigma;
    const std::vector<std::string> vars = d.variables();
    for (std::size_t i = 0; i < vars.size(); ++i) {
      while (blocks.size() <= static_cast<std::size_t>(part[i])) blocks.push_back(fresh());
      sigma.bind(vars[i], blocks[part[i]]);
    }
    const Clause ground = apply(d, sigma);
    std::map<Term, Term> value_of;
    for (const Term& t : all_subterms(std::span(&ground, 1))) value_of.emplace(t, t.is_compound() ? fresh() : t);
    std::set<Term> values;
    for (const auto& [t, v] : value_of) values.insert(v);
    for (const std::string& k : constants_) values.insert(Term::constant(k));
    const std::vector<Term> universe(values.begin(), values.end());

    std::size_t total = 0;
    for (const auto& [pred, arity] : preds_) {
      std::size_t n = 1;
      for (std::size_t i = 0; i < arity && n <= options_.max_atoms; ++i) n *= universe.size();
      total += n;
      if (total > options_.max_atoms) {
        throw BudgetExhausted("lgi: encoding needs more than " + std::to_string(options_.max_atoms) + " ground atoms");
      }
      for_each_tuple(universe, arity, [&](std::vector<Term> args) { f.atoms.intern(Literal::pos(pred, std::move(args))); });
    }
    for (const Literal& l : ground) {
      std::vector<Term> args;
      for (const Term& t : l.args()) args.push_back(value_of.at(t));
      const int v = f.atoms.find(Literal::pos(l.predicate(), std::move(args)));
      f.goal_units.push_back(l.positive() ? -v : v);
    }
    return f;
  }

  // An interpretation falsifying the frame's goal in which every ground
  // instance of the candidate holds. Instances are added lazily, as the
  // models found so far violate them.
  std::optional<prop::Model> countermodel(const Frame& f) {
    prop::Cnf cnf;
    cnf.num_vars = f.atoms.size();
    for (prop::Lit u : f.goal_units) cnf.add({u});
    while (true) {
      check_clock(deadline_);
      auto m = prop::solve_dpll(cnf);
      if (!m || !g_) return m;
      const Clause k = f.falsified(*m);
      auto theta = match_clause_by_variables(*g_, k).theta;
      if (!theta) return m;
      std::vector<prop::Lit> lits;
      for (const Literal& l : apply(*g_, *theta)) {
        std::vector<Term> args;
        for (const Term& t : l.args()) args.push_back(t.is_variable() ? Term::constant(t.name()) : t);
        const int v = f.atoms.find(Literal::pos(l.predicate(), std::move(args)));
        lits.push_back(l.positive() ? v : -v);
      }
      cnf.add(std::move(lits));
    }
  }

  LgiOptions options_;
  Clock::time_point deadline_;
  std::vector<Clause> src_;
  std::vector<std::pair<std::string, std::size_t>> preds_;
  std::set<std::string> constants_;
  std::optional<Clause> g_;
  std::size_t rounds_ = 0;
};

using Bits = std::vector<std::uint64_t>;

bool test(const Bits& b, std::size_t i) { return (b[i / 64] >> (i % 64)) & 1U; }
void set_bit(Bits& b, std::size_t i) { b[i / 64] |= std::uint64_t{1} << (i % 64); }

// The literal construction over the candidate set G: every clause over the
// predicates and constants of the input and m variables. Subsets of G are visited
// through their LGS-closures, so each distinct LGS is evaluated once.
class ReferenceLgi {
 public:
  ReferenceLgi(std::span<const Clause> s, const Budget& budget, const LgiOptions& options)
      : src_(options.standardize_apart_first ? standardize_apart(s) : std::vector<Clause>(s.begin(), s.end())),
        deadline_(deadline_for(budget)) {
    const std::vector<Term> terms = all_subterms(src_);
    std::set<Term> consts;
    for (const Term& t : terms) {
      if (t.is_constant()) consts.insert(t);
    }
    universe_.assign(consts.begin(), consts.end());
    for (std::size_t i = 1; i <= terms.size(); ++i) universe_.push_back(Term::variable("v" + std::to_string(i)));
    for (const auto& [pred, arity] : predicates_of(src_)) {
      for_each_tuple(universe_, arity, [&](std::vector<Term> args) {
        lits_.push_back(Literal::pos(pred, args));
        lits_.push_back(Literal::neg(pred, std::move(args)));
        if (lits_.size() > options.reference_max_literals) {
          throw BudgetExhausted("lgi: reference backend limited to " + std::to_string(options.reference_max_literals) +
                                " candidate literals");
        }
      });
    }
    for (std::size_t i = 0; i < lits_.size(); ++i) index_.emplace(lits_[i], i);
    count_ = std::size_t{1} << lits_.size();
  }

  Clause run() {
    std::set<Bits> visited;
    std::deque<std::pair<Clause, Bits>> queue;
    auto visit = [&](Clause h) {
      Bits cl = closure(h);
      if (visited.insert(cl).second) queue.emplace_back(std::move(h), std::move(cl));
    };
    for (std::size_t g = 0; g < count_; ++g) visit(reduce(member(g)));
    std::vector<Clause> kept;
    while (!queue.empty()) {
      check_clock(deadline_);
      auto [h, cl] = std::move(queue.front());
      queue.pop_front();
      if (implies_all(h)) {
        kept.push_back(h);
        continue;
      }
      for (std::size_t g = 0; g < count_; ++g) {
        if (!test(cl, g)) visit(lgs_pair(h, member(g)));
      }
    }
    return reduce(gss_clausal(kept));
  }

 private:
  Clause member(std::size_t mask) const {
    std::vector<Literal> out;
    for (std::size_t i = 0; i < lits_.size(); ++i) {
      if (mask & (std::size_t{1} << i)) out.push_back(lits_[i]);
    }
    return Clause(std::move(out));
  }

  // Members g of G with h subsuming g: supersets of some h*theta.
  Bits closure(const Clause& h) const {
    Bits mark((count_ + 63) / 64, 0);
    for_each_instance(h, universe_, [&](const Clause& inst) {
      std::size_t mask = 0;
      for (const Literal& l : inst) mask |= std::size_t{1} << index_.at(l);
      set_bit(mark, mask);
    });
    for (std::size_t bit = 0; bit < lits_.size(); ++bit) {
      for (std::size_t g = 0; g < count_; ++g) {
        if ((g >> bit) & 1U && test(mark, g ^ (std::size_t{1} << bit))) set_bit(mark, g);
      }
    }
    return mark;
  }

  bool implies_all(const Clause& h) const {
    for (const Clause& d : src_) {
      if (!implies_ff(h, d)) return false;
    }
    return true;
  }

  std::vector<Clause> src_;
  Clock::time_point deadline_;
  std::vector<Term> universe_;
  std::vector<Literal> lits_;
  std::map<Literal, std::size_t> index_;
  std::size_t count_ = 0;
};

}  // namespace

Clause lgi(std::span<const Clause> s, const Budget& budget, const LgiOptions& options) {
  budget.validate();
  std::vector<Clause> live;
  for (const Clause& c : s) {
    if (!c.is_tautology() && std::ranges::find(live, c) == live.end()) live.push_back(c);
  }
  if (live.empty()) return canonical_tautology();
  if (std::ranges::none_of(live, [](const Clause& c) { return c.is_function_free(); })) {
    throw PreconditionError("lgi: no non-tautologous clause is function-free");
  }
  if (options.backend == LgiBackend::reference) return ReferenceLgi(live, budget, options).run();
  return CegarLgi(live, budget, options).run();
}

Clause gsi(std::span<const Clause> s) { return gss_clausal(s); }

Clause gsr(std::span<const Clause> s, std::span<const Clause> /*bg*/) { return gss_clausal(s); }

Clause lgr_ground(std::span<const Clause> s, std::span<const Literal> bg, const Budget& budget,
                  const LgiOptions& options) {
  for (const Literal& l : bg) {
    if (!l.is_ground() || !l.is_function_free()) {
      std::ostringstream msg;
      msg << "lgr: background literal " << l << " is not ground and function-free";
      throw PreconditionError(msg.str());
    }
  }
  check_ground_background(bg);
  std::vector<Clause> aug;
  bool usable = false;
  for (const Clause& d : s) {
    aug.push_back(augment_with_background(d, bg));
    usable = usable || (!aug.back().is_tautology() && aug.back().is_function_free());
  }
  if (!usable) {
    std::ostringstream msg;
    msg << "lgr: no clause stays non-tautologous and function-free after adding the background";
    for (std::size_t i = 0; i < aug.size(); ++i) {
      msg << "; clause " << i + 1 << (aug[i].is_tautology() ? " becomes a tautology" : " has a function symbol");
    }
    throw PreconditionError(msg.str());
  }
  return lgi(aug, budget, options);
}

Clause self_saturate(const Clause& c, const Budget& budget, const LgiOptions& options) {
  if (c.is_tautology()) throw PreconditionError("self_saturate: clause is a tautology");
  if (!c.is_function_free()) throw PreconditionError("self_saturate: clause contains a function symbol");
  return lgi(std::span(&c, 1), budget, options);
}

}  // namespace clat
