#include "clat/subsumption.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "clat/errors.hpp"
#include "clat/matching.hpp"
#include "clat/resolution.hpp"

namespace clat {

bool subsumes(const Clause& c, const Clause& d) {
  if (c.size() > d.size() && c.is_ground()) return false;
  return match_clause(c, d).theta.has_value();
}

std::optional<bool> subsumes_bounded(const Clause& c, const Clause& d, std::size_t max_nodes) {
  MatchOptions opts;
  opts.max_nodes = max_nodes;
  ClauseMatch m = match_clause(c, d, opts);
  if (m.theta) return true;
  if (m.exhausted) return std::nullopt;
  return false;
}

std::optional<Substitution> subsumption_witness(const Clause& c, const Clause& d) {
  return match_clause(c, d).theta;
}

bool subsume_equivalent(const Clause& c, const Clause& d) { return subsumes(c, d) && subsumes(d, c); }

Clause reduce(const Clause& c) {
  Clause cur = c;
  while (auto theta = proper_endomorphism(cur)) cur = apply(cur, *theta);
  return cur;
}

Term AntiUnifier::generalize(const Term& a, const Term& b) {
  if (a == b && a.is_ground()) return a;
  if (a.is_compound() && b.is_compound() && a.name() == b.name() && a.arity() == b.arity()) {
    std::vector<Term> args;
    args.reserve(a.arity());
    for (std::size_t i = 0; i < a.arity(); ++i) args.push_back(generalize(a.args()[i], b.args()[i]));
    return Term::compound(a.name(), std::move(args));
  }
  for (const auto& [key, var] : table_) {
    if (key.first == a && key.second == b) return var;
  }
  Term v = Term::variable("v" + std::to_string(table_.size()));
  table_.push_back({{a, b}, v});
  return v;
}

Literal AntiUnifier::generalize(const Literal& a, const Literal& b) {
  if (!a.compatible_with(b)) throw std::invalid_argument("generalize: literals are not compatible");
  std::vector<Term> args;
  args.reserve(a.arity());
  for (std::size_t i = 0; i < a.arity(); ++i) args.push_back(generalize(a.args()[i], b.args()[i]));
  return Literal(a.positive(), a.predicate(), std::move(args));
}

Clause lgs_pair(const Clause& c, const Clause& d) {
  AntiUnifier au;
  std::vector<Literal> out;
  for (const Literal& l : c) {
    for (const Literal& m : d) {
      if (l.compatible_with(m)) out.push_back(au.generalize(l, m));
    }
  }
  return reduce(Clause(std::move(out)));
}

Clause lgs_set(std::span<const Clause> s) {
  if (s.empty()) throw std::invalid_argument("lgs_set: empty set");
  std::vector<Clause> sorted(s.begin(), s.end());
  std::sort(sorted.begin(), sorted.end());
  Clause acc = reduce(sorted.front());
  for (std::size_t i = 1; i < sorted.size(); ++i) acc = lgs_pair(acc, sorted[i]);
  return acc;
}

Clause gss_clausal(std::span<const Clause> s) {
  if (s.empty()) throw std::invalid_argument("gss_clausal: empty set");
  Clause acc;
  for (const Clause& c : standardize_apart(s)) acc = clause_union(acc, c);
  return acc;
}

bool subsumes(const HornGssResult& c, const HornGssResult& d) {
  if (d.is_bottom()) return true;
  if (c.is_bottom()) return false;
  return subsumes(c.clause(), d.clause());
}

HornGssResult gss_horn(std::span<const Clause> s) {
  if (s.empty()) throw PreconditionError("gss_horn: empty set");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s[i].is_horn()) {
      throw PreconditionError("gss_horn: clause " + std::to_string(i + 1) + " is not Horn");
    }
  }
  const std::vector<Clause> apart = standardize_apart(s);
  std::vector<Literal> heads;
  for (const Clause& c : apart) {
    for (const Literal& l : c) {
      if (l.positive()) heads.push_back(l);
    }
  }
  Substitution sigma;
  if (!heads.empty()) {
    for (const Literal& h : heads) {
      if (!h.compatible_with(heads.front())) return Bottom{};
    }
    auto u = mgu(std::span<const Literal>(heads));
    if (!u) return Bottom{};
    sigma = std::move(*u);
  }
  Clause acc;
  for (const Clause& c : apart) acc = clause_union(acc, apply(c, sigma));
  return acc;
}

void check_ground_background(std::span<const Literal> bg) {
  for (const Literal& l : bg) {
    if (!l.is_ground()) {
      std::ostringstream msg;
      msg << "background literal " << l << " is not ground";
      throw PreconditionError(msg.str());
    }
  }
  for (std::size_t i = 0; i < bg.size(); ++i) {
    for (std::size_t j = i + 1; j < bg.size(); ++j) {
      if (bg[i].complementary_to(bg[j])) {
        std::ostringstream msg;
        msg << "background contains complementary literals " << bg[i] << " and " << bg[j];
        throw PreconditionError(msg.str());
      }
    }
  }
}

Clause augment_with_background(const Clause& d, std::span<const Literal> bg) {
  std::vector<Literal> lits(d.begin(), d.end());
  for (const Literal& l : bg) lits.push_back(l.complement());
  return Clause(std::move(lits));
}

bool rel_subsumes(const Clause& c, const Clause& d, std::span<const Literal> bg) {
  check_ground_background(bg);
  return subsumes(c, augment_with_background(d, bg));
}

Clause lg_rel_subsumption(std::span<const Clause> s, std::span<const Literal> bg) {
  check_ground_background(bg);
  std::vector<Clause> aug;
  aug.reserve(s.size());
  for (const Clause& d : s) aug.push_back(augment_with_background(d, bg));
  return lgs_set(aug);
}

}  // namespace clat
