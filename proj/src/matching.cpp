#include "clat/matching.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <map>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace clat {

namespace {

struct PNode {
  enum class Kind { var, ground, fun } kind;
  int var = -1;
  const Term* term = nullptr;  // the ground term, or the compound for its functor
  std::vector<PNode> kids;
};

struct PLiteral {
  const Literal* source;
  std::vector<PNode> args;
  std::vector<int> vars;
};

class Matcher {
 public:
  Matcher(const Clause& pattern, const Clause& target, const MatchOptions& options)
      : target_(target), options_(options) {
    for (const Literal& l : pattern) {
      if (l.is_ground()) {
        ground_.push_back(&l);
        continue;
      }
      PLiteral p{&l, {}, {}};
      for (const Term& t : l.args()) p.args.push_back(compile(t, p.vars));
      lits_.push_back(std::move(p));
    }
    bindings_.assign(var_names_.size(), nullptr);
    var_lits_.resize(var_names_.size());
    for (std::size_t i = 0; i < lits_.size(); ++i) {
      for (int v : lits_[i].vars) var_lits_[v].push_back(static_cast<int>(i));
    }
  }

  ClauseMatch run() {
    ClauseMatch result;
    for (const Literal* g : ground_) {
      if (!target_.contains(*g)) return result;
    }
    live_.resize(lits_.size());
    for (std::size_t i = 0; i < lits_.size(); ++i) {
      const std::size_t mark = trail_.size();
      for (std::size_t j = 0; j < target_.size(); ++j) {
        if (match_literal(lits_[i], target_.literals()[j])) live_[i].push_back(static_cast<int>(j));
        undo(mark);
      }
      if (live_[i].empty()) return result;
    }
    assigned_.assign(lits_.size(), false);
    if (solve(0)) {
      Substitution theta;
      for (std::size_t v = 0; v < var_names_.size(); ++v) {
        if (bindings_[v]) theta.bind(var_names_[v], *bindings_[v]);
      }
      result.theta = std::move(theta);
    }
    result.exhausted = exhausted_;
    return result;
  }

 private:
  PNode compile(const Term& t, std::vector<int>& vars) {
    if (t.is_variable()) {
      auto [it, inserted] = var_ids_.try_emplace(t.name(), static_cast<int>(var_names_.size()));
      if (inserted) var_names_.push_back(t.name());
      if (std::ranges::find(vars, it->second) == vars.end()) vars.push_back(it->second);
      return PNode{PNode::Kind::var, it->second, &t, {}};
    }
    if (t.is_ground()) return PNode{PNode::Kind::ground, -1, &t, {}};
    PNode n{PNode::Kind::fun, -1, &t, {}};
    for (const Term& a : t.args()) n.kids.push_back(compile(a, vars));
    return n;
  }

  bool match_term(const PNode& p, const Term& t) {
    switch (p.kind) {
      case PNode::Kind::ground:
        return *p.term == t;
      case PNode::Kind::fun: {
        if (!t.is_compound() || t.name() != p.term->name() || t.arity() != p.kids.size()) return false;
        for (std::size_t i = 0; i < p.kids.size(); ++i) {
          if (!match_term(p.kids[i], t.args()[i])) return false;
        }
        return true;
      }
      case PNode::Kind::var: {
        const Term*& slot = bindings_[p.var];
        if (slot) return *slot == t;
        if (options_.injective_renaming) {
          if (!t.is_variable()) return false;
          for (const Term* b : bindings_) {
            if (b && b->name() == t.name()) return false;
          }
        }
        slot = &t;
        trail_.push_back(p.var);
        return true;
      }
    }
    return false;
  }

  bool match_literal(const PLiteral& p, const Literal& t) {
    if (!p.source->compatible_with(t)) return false;
    for (std::size_t i = 0; i < p.args.size(); ++i) {
      if (!match_term(p.args[i], t.args()[i])) return false;
    }
    return true;
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      bindings_[trail_.back()] = nullptr;
      trail_.pop_back();
    }
  }

  bool solve(std::size_t depth) {
    if (options_.max_nodes && ++nodes_ > options_.max_nodes) {
      exhausted_ = true;
      return false;
    }
    if (depth == lits_.size()) return true;
    int pick = -1;
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (std::size_t i = 0; i < lits_.size(); ++i) {
      if (!assigned_[i] && live_[i].size() < best) {
        best = live_[i].size();
        pick = static_cast<int>(i);
      }
    }
    assigned_[pick] = true;
    const std::vector<int> candidates = live_[pick];
    for (int j : candidates) {
      const std::size_t mark = trail_.size();
      if (match_literal(lits_[pick], target_.literals()[j])) {
        std::vector<std::pair<int, std::vector<int>>> saved;
        if (forward_check(mark, saved) && solve(depth + 1)) return true;
        for (auto& [k, list] : saved) live_[k] = std::move(list);
      }
      undo(mark);
      if (exhausted_) break;
    }
    assigned_[pick] = false;
    return false;
  }

  // Filters the live candidates of unassigned literals touching variables
  // bound since `mark`. Returns false if some literal runs out.
  bool forward_check(std::size_t mark, std::vector<std::pair<int, std::vector<int>>>& saved) {
    std::vector<int> touched;
    for (std::size_t t = mark; t < trail_.size(); ++t) {
      for (int k : var_lits_[trail_[t]]) {
        if (!assigned_[k] && std::ranges::find(touched, k) == touched.end()) touched.push_back(k);
      }
    }
    for (int k : touched) {
      std::vector<int> kept;
      for (int j : live_[k]) {
        const std::size_t inner = trail_.size();
        if (match_literal(lits_[k], target_.literals()[j])) kept.push_back(j);
        undo(inner);
      }
      saved.emplace_back(k, std::move(live_[k]));
      live_[k] = std::move(kept);
      if (live_[k].empty()) return false;
    }
    return true;
  }

  const Clause& target_;
  MatchOptions options_;
  std::vector<const Literal*> ground_;
  std::vector<PLiteral> lits_;
  std::unordered_map<std::string, int> var_ids_;
  std::vector<std::string> var_names_;
  std::vector<std::vector<int>> var_lits_;
  std::vector<const Term*> bindings_;
  std::vector<int> trail_;
  std::vector<std::vector<int>> live_;
  std::vector<bool> assigned_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace

ClauseMatch match_clause(const Clause& pattern, const Clause& target, const MatchOptions& options) {
  return Matcher(pattern, target, options).run();
}

bool is_variant(const Clause& a, const Clause& b) {
  if (a.size() != b.size() || a.variables().size() != b.variables().size()) return false;
  if (variant_hash(a) != variant_hash(b)) return false;
  MatchOptions opts;
  opts.injective_renaming = true;
  return match_clause(a, b, opts).theta.has_value();
}

namespace {

std::size_t shape_hash(const Term& t) {
  if (t.is_variable()) return 0x5bd1e995;
  if (t.is_ground()) return t.hash();
  std::size_t h = std::hash<std::string>{}(t.name());
  for (const Term& a : t.args()) h = h * 1000003 ^ shape_hash(a);
  return h;
}

}  // namespace

std::size_t variant_hash(const Clause& c) {
  std::size_t sum = c.size();
  for (const Literal& l : c) {
    std::size_t h = std::hash<std::string>{}(l.predicate()) + (l.positive() ? 17 : 31);
    for (const Term& t : l.args()) h = h * 1000003 ^ shape_hash(t);
    sum += h * 0x9e3779b97f4a7c15ULL;
  }
  return sum;
}

namespace {

struct VecHash {
  std::size_t operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h = h * 1000003 ^ static_cast<std::size_t>(x);
    return h;
  }
};

// Search over pattern variables. Every variable ranges over the subterms of
// the target; direct argument positions narrow the initial domains.
class VarMatcher {
 public:
  using Accept = std::function<bool(const std::vector<int>&)>;

  VarMatcher(const Clause& pattern, const Clause& target, const MatchOptions& options) : options_(options) {
    for (const Clause* c : {&target}) {
      for (const Literal& l : *c) {
        for (const Term& t : l.args()) {
          for_each_subterm(t, [this](const Term& s) { term_id(s); });
        }
      }
    }
    for (const Literal& l : target) {
      std::vector<int> key{pred_id(l)};
      for (const Term& t : l.args()) key.push_back(ids_.at(t));
      keys_.insert(std::move(key));
    }
    var_names_ = pattern.variables();
    for (std::size_t i = 0; i < var_names_.size(); ++i) var_ids_.emplace(var_names_[i], static_cast<int>(i));
    for (const Literal& l : pattern) {
      PLit p{&l, pred_id(l), {}, {}};
      for (const Term& t : l.args()) {
        if (t.is_variable()) {
          p.args.push_back({Arg::var, var_ids_.at(t.name()), nullptr});
        } else if (t.is_ground()) {
          auto it = ids_.find(t);
          p.args.push_back({Arg::fixed, it == ids_.end() ? -1 : it->second, nullptr});
        } else {
          p.args.push_back({Arg::nested, -1, &t});
        }
        std::vector<std::string> vs;
        collect_variables(t, vs);
        for (const std::string& v : vs) {
          const int id = var_ids_.at(v);
          if (std::ranges::find(p.vars, id) == p.vars.end()) p.vars.push_back(id);
        }
      }
      lits_.push_back(std::move(p));
    }
    var_lits_.resize(var_names_.size());
    for (std::size_t i = 0; i < lits_.size(); ++i) {
      for (int v : lits_[i].vars) var_lits_[v].push_back(static_cast<int>(i));
    }
  }

  // Calls accept on solutions until it returns true. Returns whether it did.
  bool run(const Accept& accept) {
    accept_ = &accept;
    binding_.assign(var_names_.size(), -1);
    open_.assign(lits_.size(), 0);
    for (std::size_t i = 0; i < lits_.size(); ++i) {
      open_[i] = static_cast<int>(lits_[i].vars.size());
      if (open_[i] == 0 && !holds(lits_[i])) return false;
    }
    domains_.assign(var_names_.size(), {});
    for (std::size_t v = 0; v < var_names_.size(); ++v) {
      std::vector<char> ok(terms_.size(), 1);
      for (int li : var_lits_[v]) {
        const PLit& p = lits_[li];
        for (std::size_t a = 0; a < p.args.size(); ++a) {
          if (p.args[a].kind != Arg::var || p.args[a].index != static_cast<int>(v)) continue;
          std::vector<char> seen(terms_.size(), 0);
          for (const auto& key : keys_) {
            if (key[0] == p.pred) seen[key[a + 1]] = 1;
          }
          for (std::size_t t = 0; t < ok.size(); ++t) ok[t] = ok[t] && seen[t];
        }
      }
      for (std::size_t t = 0; t < ok.size(); ++t) {
        if (ok[t]) domains_[v].push_back(static_cast<int>(t));
      }
      if (domains_[v].empty()) return false;
    }
    return search(0);
  }

  bool exhausted() const noexcept { return exhausted_; }
  const std::vector<std::string>& var_names() const noexcept { return var_names_; }
  const Term& term(int id) const { return terms_[id]; }

 private:
  struct Arg {
    enum Kind { var, fixed, nested } kind;
    int index;
    const Term* nested_term;
  };
  struct PLit {
    const Literal* source;
    int pred;
    std::vector<Arg> args;
    std::vector<int> vars;
  };

  int term_id(const Term& t) {
    auto [it, inserted] = ids_.try_emplace(t, static_cast<int>(terms_.size()));
    if (inserted) terms_.push_back(t);
    return it->second;
  }

  int pred_id(const Literal& l) {
    auto [it, inserted] = preds_.try_emplace({l.positive(), l.predicate(), l.arity()}, static_cast<int>(preds_.size()));
    return it->second;
  }

  Term instantiate(const Term& t) const {
    if (t.is_variable()) return terms_[binding_[var_ids_.at(t.name())]];
    if (t.is_ground()) return t;
    std::vector<Term> args;
    for (const Term& a : t.args()) args.push_back(instantiate(a));
    return Term::compound(t.name(), std::move(args));
  }

  // All variables of p are bound.
  bool holds(const PLit& p) const {
    std::vector<int> key{p.pred};
    for (const Arg& a : p.args) {
      switch (a.kind) {
        case Arg::var:
          key.push_back(binding_[a.index]);
          break;
        case Arg::fixed:
          if (a.index < 0) return false;
          key.push_back(a.index);
          break;
        case Arg::nested: {
          auto it = ids_.find(instantiate(*a.nested_term));
          if (it == ids_.end()) return false;
          key.push_back(it->second);
          break;
        }
      }
    }
    return keys_.contains(key);
  }

  bool search(std::size_t depth) {
    if (options_.max_nodes && ++nodes_ > options_.max_nodes) {
      exhausted_ = true;
      return false;
    }
    if (depth == var_names_.size()) return (*accept_)(binding_);
    int pick = -1;
    for (std::size_t v = 0; v < var_names_.size(); ++v) {
      if (binding_[v] < 0 && (pick < 0 || domains_[v].size() < domains_[pick].size())) pick = static_cast<int>(v);
    }
    const std::vector<int> candidates = domains_[pick];
    for (int value : candidates) {
      binding_[pick] = value;
      std::vector<std::pair<int, std::vector<int>>> saved;
      bool ok = true;
      for (int li : var_lits_[pick]) --open_[li];
      for (int li : var_lits_[pick]) {
        if (!ok) break;
        if (open_[li] == 0) {
          ok = holds(lits_[li]);
        } else if (open_[li] == 1) {
          ok = narrow(lits_[li], saved);
        }
      }
      if (ok && search(depth + 1)) return true;
      for (int li : var_lits_[pick]) ++open_[li];
      for (auto it = saved.rbegin(); it != saved.rend(); ++it) domains_[it->first] = std::move(it->second);
      binding_[pick] = -1;
      if (exhausted_) return false;
    }
    return false;
  }

  // Filters the domain of the one unbound variable of p.
  bool narrow(const PLit& p, std::vector<std::pair<int, std::vector<int>>>& saved) {
    int y = -1;
    for (int v : p.vars) {
      if (binding_[v] < 0) y = v;
    }
    std::vector<int> kept;
    for (int value : domains_[y]) {
      binding_[y] = value;
      if (holds(p)) kept.push_back(value);
    }
    binding_[y] = -1;
    if (kept.size() == domains_[y].size()) return true;
    saved.emplace_back(y, std::move(domains_[y]));
    domains_[y] = std::move(kept);
    return !domains_[y].empty();
  }

  MatchOptions options_;
  std::vector<Term> terms_;
  std::unordered_map<Term, int, TermHash> ids_;
  std::map<std::tuple<bool, std::string, std::size_t>, int> preds_;
  std::unordered_set<std::vector<int>, VecHash> keys_;
  std::vector<std::string> var_names_;
  std::unordered_map<std::string, int> var_ids_;
  std::vector<PLit> lits_;
  std::vector<std::vector<int>> var_lits_;
  std::vector<int> binding_;
  std::vector<int> open_;
  std::vector<std::vector<int>> domains_;
  const Accept* accept_ = nullptr;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
};

Substitution to_substitution(const VarMatcher& m, const std::vector<int>& binding) {
  Substitution theta;
  for (std::size_t v = 0; v < binding.size(); ++v) theta.bind(m.var_names()[v], m.term(binding[v]));
  return theta;
}

}  // namespace

ClauseMatch match_clause_by_variables(const Clause& pattern, const Clause& target, const MatchOptions& options) {
  ClauseMatch result;
  VarMatcher m(pattern, target, options);
  m.run([&](const std::vector<int>& binding) {
    if (options.injective_renaming) {
      std::vector<int> seen;
      for (int id : binding) {
        if (!m.term(id).is_variable() || std::ranges::find(seen, id) != seen.end()) return false;
        seen.push_back(id);
      }
    }
    result.theta = to_substitution(m, binding);
    return true;
  });
  result.exhausted = m.exhausted();
  return result;
}

std::optional<Substitution> proper_endomorphism(const Clause& c) {
  std::optional<Substitution> found;
  VarMatcher m(c, c, {});
  m.run([&](const std::vector<int>& binding) {
    std::vector<int> seen;
    for (int id : binding) {
      if (!m.term(id).is_variable() || std::ranges::find(seen, id) != seen.end()) {
        found = to_substitution(m, binding);
        return true;
      }
      seen.push_back(id);
    }
    return false;
  });
  return found;
}

}  // namespace clat
