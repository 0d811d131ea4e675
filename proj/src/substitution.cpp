#include "clat/substitution.hpp"

#include <algorithm>
#include <ostream>
#include <set>
#include <stdexcept>

namespace clat {

Substitution::Substitution(std::initializer_list<std::pair<std::string, Term>> bindings) {
  for (const auto& [var, t] : bindings) bind(var, t);
}

void Substitution::bind(const std::string& var, Term t) {
  if (t.is_variable() && t.name() == var) {
    map_.erase(var);
    return;
  }
  map_.insert_or_assign(var, std::move(t));
}

const Term* Substitution::find(std::string_view var) const {
  auto it = map_.find(var);
  return it == map_.end() ? nullptr : &it->second;
}

bool Substitution::is_renaming() const {
  std::set<std::string> images;
  for (const auto& [var, t] : map_) {
    if (!t.is_variable() || !images.insert(t.name()).second) return false;
  }
  return true;
}

std::ostream& operator<<(std::ostream& os, const Substitution& s) {
  os << '{';
  bool first = true;
  for (const auto& [var, t] : s) {
    if (!first) os << ", ";
    first = false;
    os << var << '/' << t;
  }
  return os << '}';
}

Term apply(const Term& t, const Substitution& s) {
  if (s.empty() || t.is_ground()) return t;
  if (t.is_variable()) {
    const Term* bound = s.find(t.name());
    return bound ? *bound : t;
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (const Term& a : t.args()) {
    args.push_back(apply(a, s));
    changed = changed || !args.back().same_node(a);
  }
  return changed ? Term::compound(t.name(), std::move(args)) : t;
}

Literal apply(const Literal& l, const Substitution& s) {
  if (s.empty()) return l;
  std::vector<Term> args;
  args.reserve(l.arity());
  for (const Term& a : l.args()) args.push_back(apply(a, s));
  return Literal(l.positive(), l.predicate(), std::move(args));
}

Clause apply(const Clause& c, const Substitution& s) {
  if (s.empty()) return c;
  std::vector<Literal> out;
  out.reserve(c.size());
  for (const Literal& l : c) out.push_back(apply(l, s));
  return Clause(std::move(out));
}

std::vector<Clause> apply(std::span<const Clause> cs, const Substitution& s) {
  std::vector<Clause> out;
  out.reserve(cs.size());
  for (const Clause& c : cs) out.push_back(apply(c, s));
  return out;
}

Substitution compose(const Substitution& s1, const Substitution& s2) {
  Substitution out;
  for (const auto& [var, t] : s1) out.bind(var, apply(t, s2));
  for (const auto& [var, t] : s2) {
    if (!s1.find(var)) out.bind(var, t);
  }
  return out;
}

namespace {

// Robinson's algorithm over a worklist of equations. `sigma` is kept in
// solved form, so the result is idempotent.
bool unify_into(std::vector<std::pair<Term, Term>> work, Substitution& sigma) {
  while (!work.empty()) {
    auto [a, b] = std::move(work.back());
    work.pop_back();
    a = apply(a, sigma);
    b = apply(b, sigma);
    if (a == b) continue;
    if (!a.is_variable() && b.is_variable()) std::swap(a, b);
    if (a.is_variable()) {
      if (occurs_in(a.name(), b)) return false;
      sigma = compose(sigma, Substitution{{a.name(), b}});
      continue;
    }
    if (a.kind() != b.kind() || a.name() != b.name() || a.arity() != b.arity()) return false;
    for (std::size_t i = 0; i < a.arity(); ++i) work.emplace_back(a.args()[i], b.args()[i]);
  }
  return true;
}

using RawBindings = std::map<std::string, Term, std::less<>>;

// Identity bindings are kept here so repeated pattern variables stay consistent.
bool match_into(const Term& pattern, const Term& target, RawBindings& theta) {
  if (pattern.is_variable()) {
    auto [it, inserted] = theta.try_emplace(pattern.name(), target);
    return inserted || it->second == target;
  }
  if (pattern.kind() != target.kind() || pattern.name() != target.name() ||
      pattern.arity() != target.arity()) {
    return false;
  }
  if (pattern.is_ground()) return pattern == target;
  for (std::size_t i = 0; i < pattern.arity(); ++i) {
    if (!match_into(pattern.args()[i], target.args()[i], theta)) return false;
  }
  return true;
}

Substitution from_raw(const RawBindings& raw) {
  Substitution s;
  for (const auto& [var, t] : raw) s.bind(var, t);
  return s;
}

}  // namespace

std::optional<Substitution> mgu(std::span<const Term> terms) {
  if (terms.empty()) throw std::invalid_argument("mgu of an empty set");
  std::vector<std::pair<Term, Term>> work;
  for (std::size_t i = 1; i < terms.size(); ++i) work.emplace_back(terms[0], terms[i]);
  Substitution sigma;
  if (!unify_into(std::move(work), sigma)) return std::nullopt;
  return sigma;
}

std::optional<Substitution> mgu(const Term& a, const Term& b) {
  const Term both[] = {a, b};
  return mgu(both);
}

std::optional<Substitution> mgu(std::span<const Literal> literals) {
  if (literals.empty()) throw std::invalid_argument("mgu of an empty set");
  std::vector<std::pair<Term, Term>> work;
  const Literal& first = literals[0];
  for (std::size_t i = 1; i < literals.size(); ++i) {
    if (!first.compatible_with(literals[i])) {
      throw std::invalid_argument("mgu: literals differ in sign, predicate or arity");
    }
    for (std::size_t k = 0; k < first.arity(); ++k) {
      work.emplace_back(first.args()[k], literals[i].args()[k]);
    }
  }
  Substitution sigma;
  if (!unify_into(std::move(work), sigma)) return std::nullopt;
  return sigma;
}

std::optional<Substitution> mgu(const Literal& a, const Literal& b) {
  const Literal both[] = {a, b};
  return mgu(both);
}

std::optional<Substitution> match(const Term& pattern, const Term& target) {
  RawBindings theta;
  if (!match_into(pattern, target, theta)) return std::nullopt;
  return from_raw(theta);
}

std::optional<Substitution> match(const Literal& pattern, const Literal& target) {
  if (!pattern.compatible_with(target)) return std::nullopt;
  RawBindings theta;
  for (std::size_t i = 0; i < pattern.arity(); ++i) {
    if (!match_into(pattern.args()[i], target.args()[i], theta)) return std::nullopt;
  }
  return from_raw(theta);
}

}  // namespace clat
