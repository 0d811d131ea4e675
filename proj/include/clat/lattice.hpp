#pragma once

#include <cstddef>
#include <span>

#include "clat/clause.hpp"
#include "clat/implication.hpp"

namespace clat {

enum class LgiBackend { optimized, reference };

struct LgiOptions {
  LgiBackend backend = LgiBackend::optimized;
  /// Rename the clauses apart before Skolemizing and counting terms.
  bool standardize_apart_first = false;
  /// Size caps for the optimized search: ground atoms in the encoding and
  /// generalization rounds.
  std::size_t max_atoms = 4096;
  std::size_t max_rounds = 10000;
  /// Past this many literals the optimized search stops folding countermodels
  /// and returns the union of the inputs (and their LGS) that are
  /// generalizations, when the input implies one of them.
  std::size_t max_candidate_literals = 2000;
  /// The reference backend refuses candidate languages with more literals.
  std::size_t reference_max_literals = 10;
};

/// The clause returned for a set made only of tautologies.
Clause canonical_tautology();

/// Least generalization under implication of s. The result implies every
/// member of s and is subsumed by every clause that does.
///
/// Throws PreconditionError unless s has a non-tautologous function-free
/// member (an all-tautology or empty s gives canonical_tautology()), and
/// BudgetExhausted when the budget or the option caps run out.
Clause lgi(std::span<const Clause> s, const Budget& budget, const LgiOptions& options = {});

/// Greatest specialization under implication: gss_clausal(s).
Clause gsi(std::span<const Clause> s);

/// Greatest specialization under implication relative to bg. The union
/// construction does not depend on bg.
Clause gsr(std::span<const Clause> s, std::span<const Clause> bg);

/// Least generalization under implication relative to ground function-free
/// literals: lgi of {d u {~L : L in bg} : d in s}.
Clause lgr_ground(std::span<const Clause> s, std::span<const Literal> bg, const Budget& budget,
                  const LgiOptions& options = {});

/// lgi({c}) for a non-tautologous function-free clause.
Clause self_saturate(const Clause& c, const Budget& budget, const LgiOptions& options = {});

}  // namespace clat
