#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <variant>

#include "clat/clause.hpp"
#include "clat/substitution.hpp"

namespace clat {

/// C subsumes D: some theta has apply(C, theta) a subset of D.
bool subsumes(const Clause& c, const Clause& d);

/// As subsumes, with a search-node limit. nullopt means the limit was hit.
std::optional<bool> subsumes_bounded(const Clause& c, const Clause& d, std::size_t max_nodes);

/// A theta witnessing subsumption, if there is one.
std::optional<Substitution> subsumption_witness(const Clause& c, const Clause& d);

/// Mutual subsumption.
bool subsume_equivalent(const Clause& c, const Clause& d);

/// A minimal subset of c that is subsume-equivalent to c. Literals are tried
/// in canonical order, so the result is deterministic.
Clause reduce(const Clause& c);

/// Anti-unification with a shared table from term pairs to fresh variables
/// v0, v1, ... issued in first-use order. Identical ground terms generalize to
/// themselves; compound terms with the same functor are generalized
/// argument-wise.
class AntiUnifier {
 public:
  Term generalize(const Term& a, const Term& b);
  Literal generalize(const Literal& a, const Literal& b);

 private:
  std::vector<std::pair<std::pair<Term, Term>, Term>> table_;
};

/// Least generalization under subsumption of two clauses (Plotkin): every
/// compatible literal pair is anti-unified through one shared table and the
/// resulting clause is reduced. Clauses without a compatible pair give the
/// empty clause.
Clause lgs_pair(const Clause& c, const Clause& d);

/// Left fold of lgs_pair over s in canonical order. s must be nonempty.
Clause lgs_set(std::span<const Clause> s);

/// Greatest specialization under subsumption in the clausal language: the
/// union of the clauses after standardizing them apart. s must be nonempty.
Clause gss_clausal(std::span<const Clause> s);

/// The artificial bottom element of a Horn language: subsumed by every
/// clause, subsuming only itself.
struct Bottom {
  friend bool operator==(Bottom, Bottom) = default;
};

/// Either a Horn clause or the artificial bottom element.
class HornGssResult {
 public:
  HornGssResult(Clause c) : value_(std::move(c)) {}  // NOLINT(google-explicit-constructor)
  HornGssResult(Bottom b) : value_(b) {}              // NOLINT(google-explicit-constructor)

  bool is_bottom() const noexcept { return std::holds_alternative<Bottom>(value_); }
  /// The clause; throws std::bad_variant_access for bottom.
  const Clause& clause() const { return std::get<Clause>(value_); }

 private:
  std::variant<Clause, Bottom> value_;
};

/// Subsumption extended to the bottom element.
bool subsumes(const HornGssResult& c, const HornGssResult& d);

/// Greatest specialization under subsumption inside the Horn language.
/// Goals only: the union of the standardized-apart goals. Otherwise, bottom if
/// the heads of the program clauses do not unify, else the union of the
/// standardized-apart clauses under the mgu of those heads.
/// Throws PreconditionError for an empty set or a non-Horn member.
HornGssResult gss_horn(std::span<const Clause> s);

/// C subsumes D relative to a finite set of ground literals: C subsumes
/// D u {~L1, ..., ~Lm}. Throws PreconditionError if bg is not ground or
/// contains a complementary pair.
bool rel_subsumes(const Clause& c, const Clause& d, std::span<const Literal> bg);

/// D u {~L : L in bg}.
Clause augment_with_background(const Clause& d, std::span<const Literal> bg);

/// Least generalization under relative subsumption: the LGS of the
/// background-augmented clauses.
Clause lg_rel_subsumption(std::span<const Clause> s, std::span<const Literal> bg);

/// Throws PreconditionError unless bg is ground and free of complementary pairs.
void check_ground_background(std::span<const Literal> bg);

}  // namespace clat
