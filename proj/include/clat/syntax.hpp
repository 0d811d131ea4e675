#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "clat/clause.hpp"

namespace clat {

/// 1-based line and column.
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, SourcePos pos);
  SourcePos pos() const noexcept { return pos_; }

 private:
  SourcePos pos_;
};

struct Program {
  std::vector<Clause> clauses;
  /// Where each clause starts.
  std::vector<SourcePos> source_spans;
};

/// Grammar, one clause per statement:
///   H1 ; ... ; Hk :- B1, ..., Bn.     H1 ; ... ; Hk.     :- B1, ..., Bn.     false.
/// Variables start with an uppercase letter or '_', constants, functors and
/// predicates with a lowercase letter. '%' comments run to end of line.
/// Lowercase names v<digits> and sk<digits> are reserved.
Program parse_program(std::string_view text);

/// Exactly one clause.
Clause parse_clause(std::string_view text);

/// Canonical text, ending in '.': heads joined by " ; ", then " :- " and the
/// body joined by ", ". Variables print as X0, X1, ... in order of first
/// occurrence; the empty clause prints as "false.".
std::string print_clause(const Clause& c);

}  // namespace clat
