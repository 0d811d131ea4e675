#include "clat/propositional.hpp"

#include <cstdint>
#include <cstdlib>
#include <stdexcept>

namespace clat::prop {

namespace {

// 0 unassigned, 1 true, -1 false
using Assign = std::vector<std::int8_t>;

int value(const Assign& a, Lit l) {
  const int v = a[std::abs(l)];
  return l > 0 ? v : -v;
}

class Dpll {
 public:
  explicit Dpll(const Cnf& cnf) : cnf_(cnf), assign_(cnf.num_vars + 1, 0) {}

  std::optional<Model> run() {
    for (const auto& c : cnf_.clauses) {
      if (c.empty()) return std::nullopt;
    }
    if (!search()) return std::nullopt;
    Model m(cnf_.num_vars + 1, false);
    for (int v = 1; v <= cnf_.num_vars; ++v) m[v] = assign_[v] > 0;
    return m;
  }

 private:
  void set(Lit l) {
    assign_[std::abs(l)] = l > 0 ? 1 : -1;
    trail_.push_back(std::abs(l));
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      assign_[trail_.back()] = 0;
      trail_.pop_back();
    }
  }

  // Propagates units starting from the whole clause list; returns false on conflict.
  bool propagate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : cnf_.clauses) {
        int open = 0;
        Lit last = 0;
        bool sat = false;
        for (Lit l : c) {
          const int v = value(assign_, l);
          if (v > 0) {
            sat = true;
            break;
          }
          if (v == 0) {
            ++open;
            last = l;
          }
        }
        if (sat) continue;
        if (open == 0) return false;
        if (open == 1) {
          set(last);
          changed = true;
        }
      }
    }
    return true;
  }

  // First open literal of the first unsatisfied clause, or 0 when all are satisfied.
  Lit choose() const {
    for (const auto& c : cnf_.clauses) {
      Lit open = 0;
      bool sat = false;
      for (Lit l : c) {
        const int v = value(assign_, l);
        if (v > 0) {
          sat = true;
          break;
        }
        if (v == 0 && open == 0) open = l;
      }
      if (!sat) return open;
    }
    return 0;
  }

  bool search() {
    const std::size_t mark = trail_.size();
    if (!propagate()) {
      undo(mark);
      return false;
    }
    const Lit l = choose();
    if (l == 0) return true;
    // Prefer making the literal false first: models stay small.
    for (Lit pick : {-std::abs(l), std::abs(l)}) {
      const std::size_t inner = trail_.size();
      set(pick);
      if (search()) return true;
      undo(inner);
    }
    undo(mark);
    return false;
  }

  const Cnf& cnf_;
  Assign assign_;
  std::vector<int> trail_;
};

}  // namespace

bool satisfies(const Model& m, const Cnf& cnf) {
  for (const auto& c : cnf.clauses) {
    bool sat = false;
    for (Lit l : c) {
      if (m[std::abs(l)] == (l > 0)) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

std::optional<Model> solve_dpll(const Cnf& cnf) { return Dpll(cnf).run(); }

std::optional<Model> solve_exhaustive(const Cnf& cnf, int max_vars) {
  if (cnf.num_vars > max_vars) {
    throw std::length_error("exhaustive enumeration over " + std::to_string(cnf.num_vars) + " atoms exceeds the limit of " +
                            std::to_string(max_vars));
  }
  Model m(cnf.num_vars + 1, false);
  const std::uint64_t n = std::uint64_t{1} << cnf.num_vars;
  for (std::uint64_t bits = 0; bits < n; ++bits) {
    for (int v = 1; v <= cnf.num_vars; ++v) m[v] = (bits >> (v - 1)) & 1U;
    if (satisfies(m, cnf)) return m;
  }
  return std::nullopt;
}

}  // namespace clat::prop
