#pragma once

#include <cstddef>
#include <optional>

#include "clat/clause.hpp"
#include "clat/substitution.hpp"

namespace clat {

struct MatchOptions {
  /// Restrict theta to an injective map from variables to variables.
  bool injective_renaming = false;
  /// Search-node limit; 0 means unlimited.
  std::size_t max_nodes = 0;
};

struct ClauseMatch {
  std::optional<Substitution> theta;
  /// The node limit was hit before the search finished.
  bool exhausted = false;
};

/// Searches for theta with apply(pattern, theta) a subset of target.
///
/// Backtracking over pattern literals with forward checking: after each
/// assignment the candidate lists of literals sharing a newly bound variable
/// are filtered, and the literal with the fewest live candidates is matched
/// next. Candidates are tried in the target's canonical literal order, so the
/// result is deterministic.
ClauseMatch match_clause(const Clause& pattern, const Clause& target, const MatchOptions& options = {});

/// Renaming equivalence: an injective variable renaming maps a onto b.
bool is_variant(const Clause& a, const Clause& b);

/// Order-insensitive hash that is equal for variants.
std::size_t variant_hash(const Clause& c);

/// Same contract as match_clause, searched over the variables of the pattern
/// instead of its literals: each variable gets a domain of target terms,
/// pruned by forward checking. Better for patterns with many literals over
/// few variables.
ClauseMatch match_clause_by_variables(const Clause& pattern, const Clause& target, const MatchOptions& options = {});

/// A theta with apply(c, theta) a proper subset of c, if one exists.
std::optional<Substitution> proper_endomorphism(const Clause& c);

}  // namespace clat
