#include "clat/resolution.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

#include "clat/matching.hpp"

namespace clat {

Clause rename_variables(const Clause& c, std::size_t& next) {
  Substitution rho;
  for (const std::string& v : c.variables()) rho.bind(v, Term::variable("v" + std::to_string(next++)));
  return apply(c, rho);
}

std::vector<Clause> standardize_apart(std::span<const Clause> clauses) {
  std::vector<Clause> out;
  out.reserve(clauses.size());
  std::size_t next = 0;
  for (const Clause& c : clauses) out.push_back(rename_variables(c, next));
  return out;
}

namespace {

// Collects results up to variants and enforces the limits.
class Collector {
 public:
  explicit Collector(const EnumerationLimits& limits) : limits_(limits) {}

  // Returns false once max_clauses is reached.
  bool add(Clause c) {
    if (limits_.max_literals && c.size() > limits_.max_literals) {
      out_.complete = false;
      return true;
    }
    auto& bucket = buckets_[variant_hash(c)];
    for (std::size_t idx : bucket) {
      if (is_variant(out_.clauses[idx], c)) return true;
    }
    if (limits_.max_clauses && out_.clauses.size() >= limits_.max_clauses) {
      out_.complete = false;
      return false;
    }
    bucket.push_back(out_.clauses.size());
    out_.clauses.push_back(std::move(c));
    return true;
  }

  ClauseEnumeration take() { return std::move(out_); }

 private:
  EnumerationLimits limits_;
  ClauseEnumeration out_;
  std::unordered_map<std::size_t, std::vector<std::size_t>> buckets_;
};

using GroupKey = std::tuple<bool, std::string, std::size_t>;

std::map<GroupKey, std::vector<Literal>> literal_groups(const Clause& c) {
  std::map<GroupKey, std::vector<Literal>> groups;
  for (const Literal& l : c) groups[{l.positive(), l.predicate(), l.arity()}].push_back(l);
  return groups;
}

// A factor together with the single literal its unified subset collapsed to.
struct Factor {
  Clause clause;
  Literal unified;
  GroupKey key;
};

// Enumerates nonempty subsets of each literal group that unify. Stops early
// (and reports false) when `budget` subsets have been tried.
bool enumerate_factors(const Clause& c, std::size_t budget, std::vector<Factor>& out) {
  std::size_t tried = 0;
  for (const auto& [key, group] : literal_groups(c)) {
    const std::size_t n = group.size();
    if (n >= 8 * sizeof(std::size_t) - 1) return false;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
      if (budget && ++tried > budget) return false;
      std::vector<Literal> subset;
      for (std::size_t i = 0; i < n; ++i) {
        if (mask & (std::size_t{1} << i)) subset.push_back(group[i]);
      }
      auto theta = mgu(std::span<const Literal>(subset));
      if (!theta) continue;
      out.push_back(Factor{apply(c, *theta), apply(subset.front(), *theta), key});
    }
  }
  return true;
}

// Subset enumeration is capped independently of the result cap so a large
// literal group cannot stall a caller that asked for a bounded answer.
std::size_t subset_budget(const EnumerationLimits& limits) {
  return limits.max_clauses ? limits.max_clauses * 64 : 0;
}

}  // namespace

ClauseEnumeration factors(const Clause& c, const EnumerationLimits& limits) {
  Collector collect(limits);
  if (c.empty()) return collect.take();
  std::vector<Factor> found;
  const bool all = enumerate_factors(c, subset_budget(limits), found);
  for (Factor& f : found) {
    if (!collect.add(std::move(f.clause))) break;
  }
  ClauseEnumeration out = collect.take();
  out.complete = out.complete && all;
  return out;
}

ClauseEnumeration resolvents(const Clause& c1, const Clause& c2, const EnumerationLimits& limits) {
  const Clause parents[] = {c1, c2};
  const std::vector<Clause> apart = standardize_apart(parents);
  Collector collect(limits);
  std::vector<Factor> left;
  std::vector<Factor> right;
  bool complete = enumerate_factors(apart[0], subset_budget(limits), left);
  complete = enumerate_factors(apart[1], subset_budget(limits), right) && complete;
  bool open = true;
  for (const Factor& f1 : left) {
    for (const Factor& f2 : right) {
      if (std::get<0>(f1.key) == std::get<0>(f2.key) || std::get<1>(f1.key) != std::get<1>(f2.key) ||
          std::get<2>(f1.key) != std::get<2>(f2.key)) {
        continue;
      }
      auto sigma = mgu(f1.unified, f2.unified.complement());
      if (!sigma) continue;
      Clause r = apply(clause_union(f1.clause.without(f1.unified), f2.clause.without(f2.unified)), *sigma);
      if (!collect.add(std::move(r))) {
        open = false;
        break;
      }
    }
    if (!open) break;
  }
  ClauseEnumeration out = collect.take();
  out.complete = out.complete && complete;
  return out;
}

std::vector<Clause> dedup_variants(std::span<const Clause> clauses) {
  Collector collect({});
  for (const Clause& c : clauses) collect.add(c);
  return collect.take().clauses;
}

bool is_reserved_name(std::string_view name) {
  std::string_view digits;
  if (name.starts_with("sk")) {
    digits = name.substr(2);
  } else if (name.starts_with("v")) {
    digits = name.substr(1);
  } else {
    return false;
  }
  return !digits.empty() && std::ranges::all_of(digits, [](char ch) { return ch >= '0' && ch <= '9'; });
}

Skolemization skolemize(std::span<const Clause> clauses, std::span<const Clause> avoid) {
  std::set<std::string> used;
  std::vector<std::string> vars;
  for (const Clause& c : clauses) {
    for (const std::string& k : c.constants()) {
      if (k.starts_with("sk") && is_reserved_name(k)) {
        throw std::invalid_argument("skolemize: input already contains reserved constant '" + k + "'");
      }
      used.insert(k);
    }
    for (const Literal& l : c) {
      for (const Term& t : l.args()) collect_variables(t, vars);
    }
  }
  for (const Clause& c : avoid) {
    for (const std::string& k : c.constants()) used.insert(k);
  }
  Skolemization out;
  std::size_t next = 0;
  for (const std::string& v : vars) {
    std::string name;
    do {
      name = "sk" + std::to_string(next++);
    } while (used.contains(name));
    out.sigma.bind(v, Term::constant(name));
  }
  out.image = clat::apply(clauses, out.sigma);
  return out;
}

}  // namespace clat
