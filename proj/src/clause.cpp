#include "clat/clause.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <unordered_set>

namespace clat {

Literal::Literal(bool positive, std::string predicate, std::vector<Term> args)
    : positive_(positive), predicate_(std::move(predicate)), args_(std::move(args)) {
  std::size_t h = std::hash<std::string>{}(predicate_) * 31 + (positive_ ? 1 : 2);
  for (const Term& t : args_) h = h * 1000003 ^ t.hash();
  hash_ = h;
}

bool Literal::complementary_to(const Literal& other) const noexcept {
  return positive_ != other.positive_ && predicate_ == other.predicate_ && args_ == other.args_;
}

bool Literal::compatible_with(const Literal& other) const noexcept {
  return positive_ == other.positive_ && predicate_ == other.predicate_ &&
         args_.size() == other.args_.size();
}

bool Literal::is_ground() const noexcept {
  return std::ranges::all_of(args_, [](const Term& t) { return t.is_ground(); });
}

bool Literal::is_function_free() const noexcept { return std::ranges::all_of(args_, is_flat); }

std::size_t Literal::depth() const noexcept {
  std::size_t d = 0;
  for (const Term& t : args_) d = std::max(d, t.depth());
  return d;
}

bool operator==(const Literal& a, const Literal& b) noexcept {
  return a.hash_ == b.hash_ && a.positive_ == b.positive_ && a.predicate_ == b.predicate_ &&
         a.args_ == b.args_;
}

std::strong_ordering operator<=>(const Literal& a, const Literal& b) noexcept {
  if (a.positive_ != b.positive_) {
    return a.positive_ ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  if (auto c = a.predicate_ <=> b.predicate_; c != 0) return c;
  if (auto c = a.args_.size() <=> b.args_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.args_.size(); ++i) {
    if (auto c = a.args_[i] <=> b.args_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Literal& l) {
  if (l.negative()) os << '~';
  os << l.predicate();
  if (l.arity() > 0) {
    os << '(';
    for (std::size_t i = 0; i < l.arity(); ++i) {
      if (i) os << ',';
      os << l.args()[i];
    }
    os << ')';
  }
  return os;
}

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  std::ranges::sort(literals_);
  auto dup = std::ranges::unique(literals_);
  literals_.erase(dup.begin(), dup.end());
}

Clause::Clause(std::initializer_list<Literal> literals)
    : Clause(std::vector<Literal>(literals)) {}

bool Clause::contains(const Literal& l) const { return std::ranges::binary_search(literals_, l); }

Clause Clause::positive_part() const {
  std::vector<Literal> out;
  for (const Literal& l : literals_) {
    if (l.positive()) out.push_back(l);
  }
  return Clause(std::move(out));
}

Clause Clause::negative_part() const {
  std::vector<Literal> out;
  for (const Literal& l : literals_) {
    if (l.negative()) out.push_back(l);
  }
  return Clause(std::move(out));
}

std::size_t Clause::positive_count() const noexcept {
  return static_cast<std::size_t>(std::ranges::count_if(literals_, [](const Literal& l) { return l.positive(); }));
}

bool Clause::is_tautology() const {
  for (const Literal& l : literals_) {
    if (l.positive() && contains(l.complement())) return true;
  }
  return false;
}

bool Clause::is_ground() const noexcept {
  return std::ranges::all_of(literals_, [](const Literal& l) { return l.is_ground(); });
}

bool Clause::is_function_free() const noexcept {
  return std::ranges::all_of(literals_, [](const Literal& l) { return l.is_function_free(); });
}

std::size_t Clause::depth() const noexcept {
  std::size_t d = 0;
  for (const Literal& l : literals_) d = std::max(d, l.depth());
  // A clause whose literals are all propositional still has depth 1.
  return (d == 0 && !literals_.empty()) ? 1 : d;
}

std::vector<std::string> Clause::variables() const {
  std::vector<std::string> out;
  for (const Literal& l : literals_) {
    for (const Term& t : l.args()) collect_variables(t, out);
  }
  return out;
}

std::vector<std::string> Clause::constants() const {
  std::vector<std::string> out;
  for (const Literal& l : literals_) {
    for (const Term& t : l.args()) {
      for_each_subterm(t, [&](const Term& s) {
        if (s.is_constant() && std::ranges::find(out, s.name()) == out.end()) out.push_back(s.name());
      });
    }
  }
  return out;
}

Clause Clause::without(const Literal& l) const {
  std::vector<Literal> out;
  out.reserve(literals_.size());
  for (const Literal& m : literals_) {
    if (!(m == l)) out.push_back(m);
  }
  Clause c;
  c.literals_ = std::move(out);
  return c;
}

std::strong_ordering operator<=>(const Clause& a, const Clause& b) noexcept {
  if (auto c = a.literals_.size() <=> b.literals_.size(); c != 0) return c;
  for (std::size_t i = 0; i < a.literals_.size(); ++i) {
    if (auto c = a.literals_[i] <=> b.literals_[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Clause& c) {
  if (c.empty()) return os << "[]";
  bool first = true;
  for (const Literal& l : c) {
    if (!first) os << " | ";
    first = false;
    os << l;
  }
  return os;
}

Clause clause_union(const Clause& a, const Clause& b) {
  std::vector<Literal> all(a.begin(), a.end());
  all.insert(all.end(), b.begin(), b.end());
  return Clause(std::move(all));
}

std::vector<Term> all_subterms(std::span<const Clause> clauses) {
  std::vector<Term> out;
  std::unordered_set<Term, TermHash> seen;
  for (const Clause& c : clauses) {
    for (const Literal& l : c) {
      for (const Term& t : l.args()) {
        for_each_subterm(t, [&](const Term& s) {
          if (seen.insert(s).second) out.push_back(s);
        });
      }
    }
  }
  return out;
}

}  // namespace clat
