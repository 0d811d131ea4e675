#pragma once

#include <compare>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "clat/term.hpp"

namespace clat {

/// A signed atom. Positive literals order before negative ones, then by
/// predicate, arity and arguments.
class Literal {
 public:
  Literal(bool positive, std::string predicate, std::vector<Term> args = {});

  static Literal pos(std::string predicate, std::vector<Term> args = {}) {
    return Literal(true, std::move(predicate), std::move(args));
  }
  static Literal neg(std::string predicate, std::vector<Term> args = {}) {
    return Literal(false, std::move(predicate), std::move(args));
  }

  bool positive() const noexcept { return positive_; }
  bool negative() const noexcept { return !positive_; }
  const std::string& predicate() const noexcept { return predicate_; }
  std::span<const Term> args() const noexcept { return args_; }
  std::size_t arity() const noexcept { return args_.size(); }

  Literal complement() const { return Literal(!positive_, predicate_, args_); }
  /// Same atom, opposite sign.
  bool complementary_to(const Literal& other) const noexcept;
  /// Same sign, predicate and arity: the literals could unify.
  bool compatible_with(const Literal& other) const noexcept;

  bool is_ground() const noexcept;
  bool is_function_free() const noexcept;
  /// Largest term depth among the arguments, 0 for a propositional atom.
  std::size_t depth() const noexcept;
  std::size_t hash() const noexcept { return hash_; }

  friend bool operator==(const Literal& a, const Literal& b) noexcept;
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) noexcept;

 private:
  bool positive_;
  std::string predicate_;
  std::vector<Term> args_;
  std::size_t hash_;
};

std::ostream& operator<<(std::ostream& os, const Literal& l);

/// A finite set of literals, stored sorted and duplicate-free. The default
/// value is the empty clause.
class Clause {
 public:
  Clause() = default;
  explicit Clause(std::vector<Literal> literals);
  Clause(std::initializer_list<Literal> literals);

  std::span<const Literal> literals() const noexcept { return literals_; }
  std::size_t size() const noexcept { return literals_.size(); }
  bool empty() const noexcept { return literals_.empty(); }
  auto begin() const noexcept { return literals_.begin(); }
  auto end() const noexcept { return literals_.end(); }

  bool contains(const Literal& l) const;

  Clause positive_part() const;
  Clause negative_part() const;
  std::size_t positive_count() const noexcept;
  std::size_t negative_count() const noexcept { return size() - positive_count(); }

  bool is_horn() const noexcept { return positive_count() <= 1; }
  bool is_definite() const noexcept { return positive_count() == 1; }
  bool is_goal() const noexcept { return positive_count() == 0; }
  bool is_tautology() const;
  bool is_ground() const noexcept;
  /// No function symbol of arity >= 1.
  bool is_function_free() const noexcept;
  /// Depth of the deepest term; 0 for the empty clause.
  std::size_t depth() const noexcept;

  /// Distinct variable names in first-occurrence order.
  std::vector<std::string> variables() const;
  /// Distinct constant names in first-occurrence order.
  std::vector<std::string> constants() const;

  Clause without(const Literal& l) const;

  friend bool operator==(const Clause& a, const Clause& b) = default;
  friend std::strong_ordering operator<=>(const Clause& a, const Clause& b) noexcept;

 private:
  std::vector<Literal> literals_;
};

std::ostream& operator<<(std::ostream& os, const Clause& c);

/// Set union, without renaming.
Clause clause_union(const Clause& a, const Clause& b);

/// Every term and subterm occurring in the clauses, deduplicated.
std::vector<Term> all_subterms(std::span<const Clause> clauses);

}  // namespace clat
