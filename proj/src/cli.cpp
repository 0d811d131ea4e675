#include "clat/cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "clat/errors.hpp"
#include "clat/implication.hpp"
#include "clat/lattice.hpp"
#include "clat/subsumption.hpp"
#include "clat/syntax.hpp"

namespace clat {

namespace {

struct Settings {
  std::size_t max_clauses = Budget{}.max_derived_clauses;
  std::size_t max_depth = Budget{}.max_derivation_depth;
  double max_seconds = Budget{}.max_seconds.count();
  std::string backend = "optimized";
  bool trace = false;

  std::string file;
  std::string bg_file;
  std::string target;
  bool horn = false;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<Clause> load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_program(buf.str()).clauses;
  } catch (const ParseError& e) {
    throw ParseError(path + ":" + e.what(), e.pos());
  }
}

std::vector<Literal> unit_literals(const std::vector<Clause>& clauses) {
  std::vector<Literal> out;
  for (const Clause& c : clauses) {
    if (c.size() != 1) throw UsageError("background file must contain unit clauses only");
    out.push_back(c.literals().front());
  }
  return out;
}

class Runner {
 public:
  Runner(const Settings& s, std::ostream& out, std::ostream& err) : s_(s), out_(out), err_(err) {
    budget_.max_derived_clauses = s.max_clauses;
    budget_.max_derivation_depth = s.max_depth;
    budget_.max_seconds = std::chrono::duration<double>(s.max_seconds);
    const GroundBackend ground = s.backend == "reference" ? GroundBackend::reference : GroundBackend::optimized;
    lgi_.backend = s.backend == "reference" ? LgiBackend::reference : LgiBackend::optimized;
    deduce_.backend = ground;
    if (s.trace) {
      deduce_.on_step = [this](const DerivationStep& st) {
        err_ << "[" << st.depth << "] " << print_clause(st.left) << "  +  " << print_clause(st.right) << "  =>  "
             << print_clause(st.resolvent) << "\n";
      };
    }
  }

  int run(const std::string& cmd) {
    if (cmd == "lgs") return print(lgs_set(nonempty()));
    if (cmd == "gss") {
      if (!s_.horn) return print(gss_clausal(nonempty()));
      HornGssResult r = gss_horn(nonempty());
      if (r.is_bottom()) {
        out_ << "bottom\n";
        return exit_ok;
      }
      return print(r.clause());
    }
    if (cmd == "lgi") return print(lgi(input(), budget_, lgi_));
    if (cmd == "gsi") return print(gsi(nonempty()));
    if (cmd == "gsr") return print(gsr(nonempty(), load(s_.bg_file)));
    if (cmd == "lgr") return print(lgr_ground(input(), unit_literals(load(s_.bg_file)), budget_, lgi_));
    if (cmd == "subsumes") {
      const std::vector<Clause> cs = input();
      if (cs.size() != 2) throw UsageError("subsumes expects exactly two clauses, found " + std::to_string(cs.size()));
      return verdict(subsumes(cs[0], cs[1]) ? Verdict::proved() : Verdict::disproved());
    }
    if (cmd == "implies") {
      std::vector<Clause> cs = nonempty();
      const Clause goal = cs.back();
      cs.pop_back();
      if (!s_.bg_file.empty()) {
        for (Clause& c : load(s_.bg_file)) cs.push_back(std::move(c));
      }
      return verdict(deduce(cs, goal, budget_, deduce_));
    }
    if (cmd == "reduce") {
      for (const Clause& c : input()) out_ << print_clause(reduce(c)) << "\n";
      return exit_ok;
    }
    if (cmd == "saturate") return saturate_cmd();
    if (cmd == "self-saturate") {
      const std::vector<Clause> cs = input();
      if (cs.size() != 1) throw UsageError("self-saturate expects exactly one clause");
      return print(self_saturate(cs.front(), budget_, lgi_));
    }
    throw UsageError("unknown command " + cmd);
  }

 private:
  std::vector<Clause> input() { return load(s_.file); }

  std::vector<Clause> nonempty() {
    std::vector<Clause> cs = input();
    if (cs.empty()) throw UsageError(s_.file + " contains no clauses");
    return cs;
  }

  int print(const Clause& c) {
    out_ << print_clause(c) << "\n";
    return exit_ok;
  }

  int verdict(const Verdict& v) {
    out_ << to_string(v) << "\n";
    if (v.is_proved()) return exit_ok;
    if (v.is_disproved()) return exit_no;
    return exit_unknown;
  }

  int saturate_cmd() {
    SaturationOptions opts;
    opts.on_step = deduce_.on_step;
    if (!s_.target.empty()) opts.target = parse_clause(s_.target);
    const SaturationResult r = saturate(input(), budget_, opts);
    if (opts.target) {
      if (r.witness) return verdict(Verdict::proved());
      return verdict(r.complete ? Verdict::disproved() : Verdict::unknown(UnknownReason::budget_exhausted));
    }
    for (const Clause& c : r.clauses) out_ << print_clause(c) << "\n";
    if (!r.complete) {
      err_ << "saturation stopped by the budget\n";
      return exit_unknown;
    }
    return exit_ok;
  }

  const Settings& s_;
  std::ostream& out_;
  std::ostream& err_;
  Budget budget_;
  LgiOptions lgi_;
  DeduceOptions deduce_;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Settings s;
  if (const char* env = std::getenv("CLAT_MAX_SECONDS")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0) s.max_seconds = v;
  }

  CLI::App app{"Generality orders on clauses: subsumption, implication and their lattices.", "clat"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--max-clauses", s.max_clauses, "Derived-clause budget")->check(CLI::PositiveNumber);
  app.add_option("--max-depth", s.max_depth, "Derivation-depth budget")->check(CLI::PositiveNumber);
  app.add_option("--max-seconds", s.max_seconds, "Time budget in seconds (default from CLAT_MAX_SECONDS)")
      ->check(CLI::PositiveNumber);
  app.add_option("--backend", s.backend, "Decision backend")->check(CLI::IsMember({"reference", "optimized"}));
  app.add_flag("--trace", s.trace, "Print derivation steps to standard error");

  auto file_cmd = [&](const char* name, const char* help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("FILE", s.file, "Clause file")->required();
    return sub;
  };
  file_cmd("lgs", "Least generalization under subsumption");
  file_cmd("gss", "Greatest specialization under subsumption")->add_flag("--horn", s.horn, "Stay in the Horn language");
  file_cmd("lgi", "Least generalization under implication");
  file_cmd("gsi", "Greatest specialization under implication");
  file_cmd("lgr", "Least generalization relative to ground literals")
      ->add_option("--bg", s.bg_file, "Background unit clauses")
      ->required();
  file_cmd("gsr", "Greatest specialization relative to background")
      ->add_option("--bg", s.bg_file, "Background clauses")
      ->required();
  file_cmd("subsumes", "Does the first clause subsume the second");
  file_cmd("implies", "Do the other clauses imply the last one")->add_option("--bg", s.bg_file, "Background clauses");
  file_cmd("reduce", "Reduce each clause");
  file_cmd("saturate", "Resolution closure, or a search for a clause subsuming --target")
      ->add_option("--target", s.target, "Goal clause");
  file_cmd("self-saturate", "Self-saturation of a function-free clause");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return Runner(s, out, err).run(cmd);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return exit_usage;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return exit_usage;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << "\n";
    return exit_precondition;
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return exit_unknown;
  } catch (const std::length_error& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return exit_unknown;
  } catch (const std::invalid_argument& e) {
    err << "precondition violated: " << e.what() << "\n";
    return exit_precondition;
  }
}

}  // namespace clat
