#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace clat::prop {

/// DIMACS-style literal: +v or -v for a variable v >= 1.
using Lit = int;

struct Cnf {
  int num_vars = 0;
  std::vector<std::vector<Lit>> clauses;

  void add(std::vector<Lit> clause) { clauses.push_back(std::move(clause)); }
};

/// A total assignment indexed by variable (index 0 unused).
using Model = std::vector<bool>;

/// Splitting search with unit propagation. Variables left open by the search
/// are reported false.
std::optional<Model> solve_dpll(const Cnf& cnf);

/// Tries all 2^num_vars assignments in increasing binary order. Throws
/// std::length_error above max_vars.
std::optional<Model> solve_exhaustive(const Cnf& cnf, int max_vars = 26);

bool satisfies(const Model& m, const Cnf& cnf);

}  // namespace clat::prop
