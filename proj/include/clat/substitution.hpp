#pragma once

#include <initializer_list>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "clat/clause.hpp"

namespace clat {

/// A finite map from variable names to terms. Identity bindings are never
/// stored. Application is simultaneous: bound variables inside the image
/// terms are not rewritten again.
class Substitution {
 public:
  using Map = std::map<std::string, Term, std::less<>>;

  Substitution() = default;
  Substitution(std::initializer_list<std::pair<std::string, Term>> bindings);

  /// Adds or replaces a binding; x -> x removes any binding for x.
  void bind(const std::string& var, Term t);
  const Term* find(std::string_view var) const;

  bool empty() const noexcept { return map_.empty(); }
  std::size_t size() const noexcept { return map_.size(); }
  const Map& bindings() const noexcept { return map_; }
  auto begin() const noexcept { return map_.begin(); }
  auto end() const noexcept { return map_.end(); }

  /// True if every variable in the domain maps to a variable and no two
  /// map to the same one.
  bool is_renaming() const;

  friend bool operator==(const Substitution& a, const Substitution& b) = default;

 private:
  Map map_;
};

std::ostream& operator<<(std::ostream& os, const Substitution& s);

Term apply(const Term& t, const Substitution& s);
Literal apply(const Literal& l, const Substitution& s);
Clause apply(const Clause& c, const Substitution& s);
std::vector<Clause> apply(std::span<const Clause> cs, const Substitution& s);

/// The substitution s1 followed by s2: apply(t, compose(s1, s2)) equals
/// apply(apply(t, s1), s2) for every term t.
Substitution compose(const Substitution& s1, const Substitution& s2);

/// Most general unifier of a nonempty set of terms. The result is idempotent.
std::optional<Substitution> mgu(std::span<const Term> terms);
std::optional<Substitution> mgu(const Term& a, const Term& b);

/// Most general unifier of literals that share sign and predicate.
/// Throws std::invalid_argument when the literals are not all compatible.
std::optional<Substitution> mgu(std::span<const Literal> literals);
std::optional<Substitution> mgu(const Literal& a, const Literal& b);

/// One-way matching: a substitution theta over the variables of `pattern`
/// with apply(pattern, theta) == target. Variables of `target` are rigid.
std::optional<Substitution> match(const Term& pattern, const Term& target);
std::optional<Substitution> match(const Literal& pattern, const Literal& target);

}  // namespace clat
