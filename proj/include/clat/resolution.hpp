#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "clat/clause.hpp"
#include "clat/substitution.hpp"

namespace clat {

/// Caps for the combinatorial enumerations below. Zero means unlimited.
struct EnumerationLimits {
  /// Stop after this many distinct results.
  std::size_t max_clauses = 0;
  /// Skip results with more literals than this.
  std::size_t max_literals = 0;
};

/// A result list that may have been cut short by EnumerationLimits.
struct ClauseEnumeration {
  std::vector<Clause> clauses;
  bool complete = true;
};

/// Renames every variable of every clause to v0, v1, ... in input order,
/// so the outputs are variants of the inputs with pairwise-disjoint variables.
std::vector<Clause> standardize_apart(std::span<const Clause> clauses);

/// Renames the variables of c to v<next>, v<next+1>, ... and advances next.
Clause rename_variables(const Clause& c, std::size_t& next);

/// All factors of a nonempty clause: c itself and c*mgu(L) for every
/// unifiable subset L of same-sign, same-predicate literals. Deduplicated up
/// to variants.
ClauseEnumeration factors(const Clause& c, const EnumerationLimits& limits = {});

/// All resolvents of c1 and c2: binary resolvents of a factor of each parent
/// upon the literals unified in those factors. Both parents are renamed apart
/// first, so c1 may equal c2. Deduplicated up to variants.
ClauseEnumeration resolvents(const Clause& c1, const Clause& c2, const EnumerationLimits& limits = {});

/// Keeps the first clause of each variant class, preserving order.
std::vector<Clause> dedup_variants(std::span<const Clause> clauses);

/// True for names in the reserved namespaces: v<digits> and sk<digits>.
bool is_reserved_name(std::string_view name);

struct Skolemization {
  Substitution sigma;
  std::vector<Clause> image;
};

/// Maps each distinct variable of `clauses` (first-occurrence order) to a
/// fresh constant sk<N> occurring neither in `clauses` nor in `avoid`.
/// Throws std::invalid_argument if `clauses` already use a reserved constant.
Skolemization skolemize(std::span<const Clause> clauses, std::span<const Clause> avoid = {});

}  // namespace clat
