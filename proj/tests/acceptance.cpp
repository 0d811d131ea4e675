// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any
// failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "clat/errors.hpp"
#include "clat/implication.hpp"
#include "clat/lattice.hpp"
#include "clat/resolution.hpp"
#include "clat/subsumption.hpp"
#include "properties.hpp"

using namespace clat;
using namespace testing_support;

namespace {

// Failure messages accumulate here; an empty string at the end means PASS.
struct Check {
  std::string failures;
  void operator()(bool cond, const std::string& what) {
    if (!cond) failures += (failures.empty() ? "" : "; ") + what;
  }
};

Budget budget(double seconds) {
  Budget b;
  b.max_seconds = std::chrono::duration<double>(seconds);
  return b;
}

bool equivalent(const Clause& a, const Clause& b) { return implies_ff(a, b) && implies_ff(b, a); }

bool same_text(const Clause& a, const Clause& b) { return print_clause(a) == print_clause(b); }

bool has_variant(const std::vector<Clause>& cs, const Clause& c) {
  return std::any_of(cs.begin(), cs.end(), [&](const Clause& d) { return is_variant(c, d); });
}

void suite(Check& check, const char* name, const std::function<SuiteResult()>& run, double limit) {
  const auto t0 = std::chrono::steady_clock::now();
  const SuiteResult r = run();
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("  %-12s %5zu cases %3zu failures %7.2fs\n", name, r.cases, r.failures, s);
  check(r.ok(), std::string(name) + ": " + r.first_failure);
  check(s < limit, std::string(name) + " over time");
}

const Clause kRotA = C("p(X,Y,Z) :- p(Y,Z,X).");
const Clause kRotB = C("p(X,Y,Z) :- p(Z,X,Y).");

void c1(Check& check) {
  const std::vector<Clause> s = P("p(f(f(a))) :- p(a). p(f(b)) :- p(b).");
  const Clause g = lgs_set(s);
  check(same_text(g, C("p(f(Y)) :- p(X).")), "lgs = " + print_clause(g));
}

void c2(Check& check) {
  check(implies_ff(kRotA, kRotB), "D1 |= D2");
  check(implies_ff(kRotB, kRotA), "D2 |= D1");
  const Clause g = lgs_pair(kRotA, kRotB);
  check(same_text(g, C("p(X,Y,Z) :- p(U,V,W).")), "lgs = " + print_clause(g));
  check(has_variant(resolvents(kRotB, kRotB).clauses, kRotA), "D1 not a resolvent of D2, D2");
}

void c3(Check& check) {
  const HornGssResult g = gss_horn(P("p(X) :- p(f(X)). p(a) :- q(Y)."));
  check(!g.is_bottom() && same_text(g.clause(), C("p(a) :- p(f(a)), q(Y).")), "gss_horn of first pair");
  check(gss_horn(P("p(a). p(b).")).is_bottom(), "heads a, b not bottom");
}

void c4(Check& check) {
  const Clause g = gss_clausal(P("p(a,X). p(Y,b)."));
  check(is_variant(g, C("p(a,X) ; p(Y,b).")), "gss = " + print_clause(g));
}

void c5(Check& check) {
  const std::vector<Term> t = {K("a"), F("f", {K("a")}), F("f", {F("f", {K("a")})}), K("b"), K("c")};
  const Clause dsig = C("p(f(f(a)),b,c) :- p(b,c,f(f(a))).");
  check(ground_implies(instance_set(kRotB, t), dsig), "I(C,T) |= D sigma");

  const Clause c = C("p(f(X),Y) :- p(Z,X).");
  const Clause d = C("p(f(a),a) :- p(a,f(a)).");
  bool rejected = false;
  try {
    implies_ff(c, d);
  } catch (const PreconditionError&) {
    rejected = true;
  }
  check(rejected, "function premise accepted by implies_ff");
  const std::vector<Term> td = {K("a"), F("f", {K("a")})};
  const std::vector<Clause> inst = instance_set(c, td);
  check(!ground_implies(inst, d), "I(C,T) |= D");
  check(!oracle_ground_implies(inst, d), "truth table: I(C,T) |= D");
  check(deduce(std::vector<Clause>{c}, d, budget(5)).is_proved(), "deduce C |= D");
}

void c6(Check& check, double& worst) {
  auto timed = [&](const std::vector<Clause>& s, const LgiOptions& o = {}) {
    const auto t0 = std::chrono::steady_clock::now();
    Clause f = lgi(s, budget(60), o);
    worst = std::max(worst, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    return f;
  };

  const std::vector<Clause> pq = P("p(a). q(a).");
  check(timed(pq).empty(), "lgi {p(a), q(a)} not empty");
  LgiOptions ref;
  ref.backend = LgiBackend::reference;
  check(timed(pq, ref).empty(), "reference lgi {p(a), q(a)} not empty");

  const std::vector<Clause> ab = P("p(a). p(b).");
  const Clause f = timed(ab);
  check(equivalent(f, C("p(X).")), "lgi {p(a), p(b)} = " + print_clause(f));
  // Every single-literal clause over p/1, a, b that implies both inputs
  // must subsume the result.
  for (const char* g : {"p(X).", "p(a).", "p(b).", ":- p(X).", ":- p(a).", ":- p(b)."}) {
    const Clause e = C(g);
    if (implies_ff(e, ab[0]) && implies_ff(e, ab[1])) check(subsumes(e, f), std::string("pool member ") + g);
  }

  const Clause r = timed({kRotA, kRotB});
  check(equivalent(r, kRotA), "lgi of rotations = " + print_clause(r));
  check(worst < 60, "an lgi call took over 60 s");
}

void c7(Check& check) {
  const Clause d1 = C("p(X,Y,Z) :- p(Y,Z,X), q(f(a)).");
  const Clause d2 = C("p(X,Y,Z) :- p(Z,X,Y), q(b).");
  const Clause f = C("p(X,Y,Z) :- p(Y,Z,X), q(W).");
  check(implies_ff(f, d1), "F |= D1");
  check(implies_ff(f, d2), "F |= D2");
  const Clause g = lgs_pair(d1, d2);
  check(subsumes(g, f), "lgs does not subsume F");
  check(!subsumes(f, g), "F subsumes lgs");
}

void c8(Check& check) {
  const std::vector<Clause> sigma = P("p(a) :- q(X). p(b) :- q(X).");
  const Clause d = C("p(X) ; q(d).");
  check(rel_implies(d, C("p(a)."), sigma, budget(5)).is_proved(), "D |=Sigma p(a)");
  check(rel_implies(d, C("p(b)."), sigma, budget(5)).is_proved(), "D |=Sigma p(b)");

  std::vector<Clause> all = sigma;
  all.push_back(d);
  const SaturationResult closure = saturate(all, budget(5));
  check(closure.complete, "closure not complete");
  const std::vector<Clause> want = P("p(a) :- q(X). p(b) :- q(X). p(X) ; q(d). p(a) ; p(X). p(b) ; p(X).");
  check(closure.clauses.size() == want.size(), "closure size " + std::to_string(closure.clauses.size()));
  for (const Clause& w : want) check(has_variant(closure.clauses, w), "closure lacks " + print_clause(w));
  const Clause target = C("p(X) ; p(Y).");
  for (const Clause& e : closure.clauses) check(!subsumes(e, target), print_clause(e) + " subsumes target");
}

void c9(Check& check) {
  const Clause c = C("p(a) :- p(b).");
  const std::vector<Clause> sigma = P("p(b).");
  check(rel_implies(c, C("p(a)."), sigma, budget(1)).is_proved(), "C |=Sigma p(a)");
  check(deduce(std::vector<Clause>{c}, C("p(a)."), budget(1)).is_disproved(), "C |= p(a) not disproved");
}

void c10(Check& check) {
  const Clause d1 = C("p(f(f(X))) :- p(X).");
  const Clause d2 = C("p(f(f(f(X)))) :- p(X).");
  const Clause g1 = C("p(f(X)) :- p(X).");
  const Clause g2 = C("p(f(f(Y))) :- p(X).");
  for (const auto& [c, cn] : {std::pair{g1, "C1"}, std::pair{g2, "C2"}}) {
    for (const auto& [e, en] : {std::pair{d1, "D1"}, std::pair{d2, "D2"}}) {
      check(deduce(std::vector<Clause>{c}, e, budget(2)).is_proved(), std::string(cn) + " |= " + en);
    }
  }
  check(!subsumes(g1, g2), "C1 subsumes C2");
  check(!subsumes(g2, g1), "C2 subsumes C1");
}

void c11(Check& check) {
  suite(check, "ground", [] { return ground_backend_suite(200, 12, 8); }, 60);
}

void c12(Check& check) {
  suite(check, "subsumption", [] { return subsumption_suite(500); }, 120);
  suite(check, "lgs", [] { return lgs_suite(200); }, 120);
  suite(check, "gss", [] { return gss_suite(200); }, 120);
  suite(check, "mgu", [] { return mgu_suite(500); }, 120);
  suite(check, "roundtrip", [] { return roundtrip_suite(1000); }, 120);
}

}  // namespace

int main() {
  double lgi_worst = 0;
  struct Criterion {
    int id;
    const char* name;
    double limit;
    std::function<void(Check&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "lgs of recursive pair", 1, c1},
      {2, "rotation pair", 5, c2},
      {3, "horn gss", 1, c3},
      {4, "clausal gss", 1, c4},
      {5, "ground reduction and its limit", 5, c5},
      {6, "lgi goldens", 180, [&](Check& c) { c6(c, lgi_worst); }},
      {7, "lgi below lgs", 10, c7},
      {8, "relative implication closure", 10, c8},
      {9, "relative vs plain implication", 1, c9},
      {10, "horn minimal generalizations", 5, c10},
      {11, "ground backends agree", 60, c11},
      {12, "property suites", 600, c12},
  };

  int failed = 0;
  for (const Criterion& k : criteria) {
    Check check;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      k.run(check);
    } catch (const std::exception& e) {
      check(false, std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    check(s < k.limit, "over time limit");
    const bool ok = check.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("%s %2d %-34s %8.3fs%s%s\n", ok ? "PASS" : "FAIL", k.id, k.name, s, ok ? "" : "  ",
                check.failures.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
