#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace clat {

enum class TermKind : std::uint8_t { variable, constant, compound };

/// An immutable first-order term. Copies share structure, so passing terms
/// by value is cheap. Equality and ordering are structural.
///
/// Arity-0 applications are constants; a compound term always has at least
/// one argument.
class Term {
 public:
  static Term variable(std::string name);
  static Term constant(std::string name);
  static Term compound(std::string functor, std::vector<Term> args);

  TermKind kind() const noexcept;
  bool is_variable() const noexcept { return kind() == TermKind::variable; }
  bool is_constant() const noexcept { return kind() == TermKind::constant; }
  bool is_compound() const noexcept { return kind() == TermKind::compound; }

  /// Variable name, constant name or functor.
  const std::string& name() const noexcept;
  std::span<const Term> args() const noexcept;
  std::size_t arity() const noexcept { return args().size(); }

  bool is_ground() const noexcept;
  /// 1 for variables and constants, 1 + max child depth otherwise.
  std::size_t depth() const noexcept;
  std::size_t hash() const noexcept;

  /// True when both handles point at the same node.
  bool same_node(const Term& other) const noexcept { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b) noexcept;
  friend std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept;

 private:
  struct Node;
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

std::ostream& operator<<(std::ostream& os, const Term& t);

/// Visits t and every subterm of t, parents before children.
void for_each_subterm(const Term& t, const std::function<void(const Term&)>& fn);

/// True if a variable named `var` occurs in t.
bool occurs_in(const std::string& var, const Term& t);

/// Appends variable names of t not already in `out`, in first-occurrence order.
void collect_variables(const Term& t, std::vector<std::string>& out);

/// Function-free: a variable or a constant.
inline bool is_flat(const Term& t) noexcept { return !t.is_compound(); }

struct TermHash {
  std::size_t operator()(const Term& t) const noexcept { return t.hash(); }
};

}  // namespace clat
