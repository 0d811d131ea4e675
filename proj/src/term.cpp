#include "clat/term.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

namespace clat {

struct Term::Node {
  TermKind kind;
  std::string name;
  std::vector<Term> args;
  bool ground;
  std::size_t depth;
  std::size_t hash;
};

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term Term::variable(std::string name) {
  const std::size_t h = mix(std::hash<std::string>{}(name), 1);
  return Term(std::make_shared<const Node>(Node{TermKind::variable, std::move(name), {}, false, 1, h}));
}

Term Term::constant(std::string name) {
  const std::size_t h = mix(std::hash<std::string>{}(name), 2);
  return Term(std::make_shared<const Node>(Node{TermKind::constant, std::move(name), {}, true, 1, h}));
}

Term Term::compound(std::string functor, std::vector<Term> args) {
  if (args.empty()) {
    throw std::invalid_argument("compound term '" + functor + "' needs at least one argument");
  }
  bool ground = true;
  std::size_t depth = 0;
  std::size_t h = mix(std::hash<std::string>{}(functor), 3 + args.size());
  for (const Term& a : args) {
    ground = ground && a.is_ground();
    depth = std::max(depth, a.depth());
    h = mix(h, a.hash());
  }
  return Term(std::make_shared<const Node>(
      Node{TermKind::compound, std::move(functor), std::move(args), ground, depth + 1, h}));
}

TermKind Term::kind() const noexcept { return node_->kind; }
const std::string& Term::name() const noexcept { return node_->name; }
std::span<const Term> Term::args() const noexcept { return node_->args; }
bool Term::is_ground() const noexcept { return node_->ground; }
std::size_t Term::depth() const noexcept { return node_->depth; }
std::size_t Term::hash() const noexcept { return node_->hash; }

bool operator==(const Term& a, const Term& b) noexcept {
  if (a.node_ == b.node_) return true;
  const Term::Node& x = *a.node_;
  const Term::Node& y = *b.node_;
  if (x.hash != y.hash || x.kind != y.kind || x.args.size() != y.args.size() || x.name != y.name) {
    return false;
  }
  for (std::size_t i = 0; i < x.args.size(); ++i) {
    if (!(x.args[i] == y.args[i])) return false;
  }
  return true;
}

std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  const Term::Node& x = *a.node_;
  const Term::Node& y = *b.node_;
  if (auto c = x.kind <=> y.kind; c != 0) return c;
  if (auto c = x.name <=> y.name; c != 0) return c;
  if (auto c = x.args.size() <=> y.args.size(); c != 0) return c;
  for (std::size_t i = 0; i < x.args.size(); ++i) {
    if (auto c = x.args[i] <=> y.args[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  os << t.name();
  if (t.is_compound()) {
    os << '(';
    for (std::size_t i = 0; i < t.arity(); ++i) {
      if (i) os << ',';
      os << t.args()[i];
    }
    os << ')';
  }
  return os;
}

void for_each_subterm(const Term& t, const std::function<void(const Term&)>& fn) {
  fn(t);
  for (const Term& a : t.args()) for_each_subterm(a, fn);
}

bool occurs_in(const std::string& var, const Term& t) {
  if (t.is_variable()) return t.name() == var;
  if (t.is_ground()) return false;
  return std::ranges::any_of(t.args(), [&](const Term& a) { return occurs_in(var, a); });
}

void collect_variables(const Term& t, std::vector<std::string>& out) {
  if (t.is_ground()) return;
  if (t.is_variable()) {
    if (std::ranges::find(out, t.name()) == out.end()) out.push_back(t.name());
    return;
  }
  for (const Term& a : t.args()) collect_variables(a, out);
}

}  // namespace clat
