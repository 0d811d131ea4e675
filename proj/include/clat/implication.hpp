#pragma once

#include <chrono>
#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "clat/clause.hpp"
#include "clat/propositional.hpp"
#include "clat/substitution.hpp"

namespace clat {

/// A finite set of ground terms closed under subterms, kept sorted.
class TermSet {
 public:
  TermSet() = default;
  /// Adds every subterm of the given terms. Throws PreconditionError on a
  /// non-ground term.
  explicit TermSet(std::span<const Term> terms);

  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }
  bool contains(const Term& t) const;
  void insert(const Term& t);

 private:
  std::vector<Term> terms_;
};

/// All terms and subterms of apply(s, sigma). sigma must map every variable
/// of s to a distinct constant not occurring in s, and nothing else;
/// otherwise PreconditionError.
TermSet term_set(std::span<const Clause> s, const Substitution& sigma);

/// Calls fn with apply(c, theta) for every map theta from the variables of c
/// into k, in lexicographic order of k. Duplicates are not removed.
void for_each_instance(const Clause& c, std::span<const Term> k, const std::function<void(const Clause&)>& fn);

/// Distinct instances of c (or of each member of cs) over k. Throws
/// PreconditionError when k is empty and some clause is not ground.
std::vector<Clause> instance_set(const Clause& c, std::span<const Term> k);
std::vector<Clause> instance_set(std::span<const Clause> cs, std::span<const Term> k);

enum class GroundBackend { reference, optimized };

/// Ground entailment. The reference backend searches all subsets of the
/// ground atoms for a Herbrand model of premises u {~L : L in goal}; the
/// optimized backend runs DPLL on the same problem. Throws PreconditionError
/// on non-ground input.
bool ground_implies(std::span<const Clause> premises, const Clause& goal,
                    GroundBackend backend = GroundBackend::optimized);

/// Numbering of ground atoms, for building propositional encodings.
class AtomTable {
 public:
  /// 1-based index of the atom of l, added if new.
  int intern(const Literal& l);
  /// 0 if unknown.
  int find(const Literal& l) const;
  prop::Lit encode(const Literal& l) { return l.positive() ? intern(l) : -intern(l); }
  int size() const noexcept { return static_cast<int>(atoms_.size()); }
  /// The positive literal numbered v.
  const Literal& atom(int v) const { return atoms_[v - 1]; }

 private:
  struct Hash {
    std::size_t operator()(const Literal& l) const noexcept { return l.hash(); }
  };
  std::vector<Literal> atoms_;
  std::unordered_map<Literal, int, Hash> index_;
};

/// Decides premises |= goal for function-free premises: Skolemize goal away
/// from the premises, collect the goal's term set together with the
/// constants of the premises (one fresh constant if that is empty), and
/// decide the ground problem over the instance set. Throws PreconditionError
/// when a premise contains a function symbol.
bool implies_ff(std::span<const Clause> premises, const Clause& goal,
                GroundBackend backend = GroundBackend::optimized);
bool implies_ff(const Clause& premise, const Clause& goal, GroundBackend backend = GroundBackend::optimized);

/// Necessary condition for c |= d between non-tautologous clauses:
/// c+ subsumes d+ and c- subsumes d-. Throws PreconditionError for a
/// tautology.
bool gottlob_filter(const Clause& c, const Clause& d);

enum class VerdictKind { proved, disproved, unknown };
enum class UnknownReason { none, budget_exhausted, undecidable_path };

struct Verdict {
  VerdictKind kind = VerdictKind::unknown;
  UnknownReason reason = UnknownReason::none;

  static Verdict proved() { return {VerdictKind::proved, UnknownReason::none}; }
  static Verdict disproved() { return {VerdictKind::disproved, UnknownReason::none}; }
  static Verdict unknown(UnknownReason r) { return {VerdictKind::unknown, r}; }

  bool is_proved() const noexcept { return kind == VerdictKind::proved; }
  bool is_disproved() const noexcept { return kind == VerdictKind::disproved; }
  bool is_unknown() const noexcept { return kind == VerdictKind::unknown; }

  friend bool operator==(const Verdict&, const Verdict&) = default;
};

std::string to_string(const Verdict& v);

struct Budget {
  std::size_t max_derived_clauses = 5000;
  std::size_t max_derivation_depth = 12;
  std::size_t max_term_depth = 12;
  std::chrono::duration<double> max_seconds{30.0};

  /// Throws PreconditionError if any field is not positive.
  void validate() const;
};

struct DerivationStep {
  Clause resolvent;
  Clause left;
  Clause right;
  std::size_t depth = 0;
};

struct SaturationOptions {
  /// Stop as soon as a kept clause subsumes this one.
  std::optional<Clause> target;
  /// Heuristic: drop derived clauses deeper than the target. Off by default;
  /// it can only turn a verdict into unknown.
  bool prune_by_target_depth = false;
  std::function<void(const DerivationStep&)> on_step;
};

struct SaturationResult {
  /// Non-tautologous premises first, then kept resolvents in derivation order.
  std::vector<Clause> clauses;
  /// Index into clauses of one subsuming the target.
  std::optional<std::size_t> witness;
  /// Closed under resolution up to subsumption, with nothing cut by the budget.
  bool complete = false;
};

/// Breadth-first saturation by derivation depth. Tautologies and clauses
/// subsumed by a kept clause are forgotten.
SaturationResult saturate(std::span<const Clause> premises, const Budget& budget,
                          const SaturationOptions& options = {});

struct DeduceOptions {
  bool prune_by_goal_depth = false;
  GroundBackend backend = GroundBackend::optimized;
  std::function<void(const DerivationStep&)> on_step;
};

/// Semi-decides premises |= goal. Proved for a tautologous goal or when a
/// derived clause subsumes the goal; exact for function-free premises;
/// Disproved for a single premise failing the subsumption filters or when
/// saturation closes without reaching the goal; Unknown otherwise.
Verdict deduce(std::span<const Clause> premises, const Clause& goal, const Budget& budget,
               const DeduceOptions& options = {});

/// c |= goal relative to background clauses: deduce(bg u {c}, goal).
Verdict rel_implies(const Clause& c, const Clause& goal, std::span<const Clause> bg, const Budget& budget,
                    const DeduceOptions& options = {});

}  // namespace clat
