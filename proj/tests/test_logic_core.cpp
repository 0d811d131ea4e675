#include <gtest/gtest.h>

#include "clat/matching.hpp"
#include "clat/resolution.hpp"
#include "clat/substitution.hpp"
#include "support.hpp"

using namespace clat;
using namespace testing_support;

namespace {

bool has_variant(const std::vector<Clause>& cs, const Clause& c) {
  for (const Clause& d : cs) {
    if (is_variant(d, c)) return true;
  }
  return false;
}

}  // namespace

TEST(Term, KindsAndDepth) {
  const Term t = F("f", {K("a"), V("X")});
  EXPECT_TRUE(t.is_compound());
  EXPECT_EQ(t.depth(), 2U);
  EXPECT_EQ(V("X").depth(), 1U);
  EXPECT_EQ(K("a").depth(), 1U);
  EXPECT_FALSE(t.is_ground());
  EXPECT_EQ(t, F("f", {K("a"), V("X")}));
  EXPECT_NE(t, F("f", {K("a"), V("Y")}));
}

TEST(Term, CompoundNeedsArguments) { EXPECT_THROW(Term::compound("f", {}), std::invalid_argument); }

TEST(Clause, Classification) {
  EXPECT_TRUE(C("p(X) :- q(X).").is_horn());
  EXPECT_TRUE(C("p(X) :- q(X).").is_definite());
  EXPECT_TRUE(C(":- q(X).").is_goal());
  EXPECT_FALSE(C("p(X) ; q(X).").is_horn());
  EXPECT_TRUE(C("p(X) :- p(X).").is_tautology());
  EXPECT_FALSE(C("p(X) :- p(Y).").is_tautology());
  EXPECT_TRUE(Clause().empty());
  const Clause c = C("p(X) ; q(a) :- r(X), s.");
  EXPECT_EQ(c.positive_part().size() + c.negative_part().size(), c.size());
  EXPECT_EQ(c.positive_count(), 2U);
}

TEST(Clause, DuplicatesCollapse) { EXPECT_EQ(C("p(a) ; p(a).").size(), 1U); }

TEST(Clause, Depth) {
  EXPECT_EQ(C("p(f(X)) :- p(g(f(X),a)).").depth(), 3U);
  EXPECT_EQ(Clause().depth(), 0U);
}

TEST(Apply, SingleBinding) { EXPECT_EQ(apply(C("p(X)."), Substitution{{"X", K("a")}}), C("p(a).")); }

TEST(Apply, SetCollapse) {
  const Clause r = apply(C("p(X) ; p(Y)."), Substitution{{"X", K("a")}, {"Y", K("a")}});
  EXPECT_EQ(r, C("p(a)."));
  EXPECT_EQ(r.size(), 1U);
}

TEST(Apply, TermSetExampleClause) {
  const Clause d = C("p(f(f(X)),Y,Z) :- p(Y,Z,f(f(X))).");
  const Clause r = apply(d, Substitution{{"X", K("a")}, {"Y", K("b")}, {"Z", K("c")}});
  EXPECT_EQ(r, C("p(f(f(a)),b,c) :- p(b,c,f(f(a)))."));
}

TEST(Apply, Simultaneous) {
  EXPECT_EQ(apply(C("p(X,Y)."), Substitution{{"X", V("Y")}, {"Y", V("X")}}), C("p(Y,X)."));
}

TEST(Substitution, NoIdentityBindings) {
  Substitution s;
  s.bind("X", V("X"));
  EXPECT_TRUE(s.empty());
  s.bind("X", K("a"));
  s.bind("X", V("X"));
  EXPECT_TRUE(s.empty());
}

TEST(Compose, Chained) {
  const Substitution s = compose(Substitution{{"X", V("Y")}}, Substitution{{"Y", K("a")}});
  EXPECT_EQ(s, (Substitution{{"X", K("a")}, {"Y", K("a")}}));
}

TEST(Compose, EmptyLeft) {
  const Substitution s{{"X", F("f", {V("Z")})}};
  EXPECT_EQ(compose(Substitution{}, s), s);
}

TEST(Compose, PostConditionOnSample) {
  const Substitution s1{{"X", F("f", {V("Y")})}};
  const Substitution s2{{"Y", K("b")}};
  const Substitution s = compose(s1, s2);
  EXPECT_EQ(s, (Substitution{{"X", F("f", {K("b")})}, {"Y", K("b")}}));
  const Term t = F("g", {V("X"), V("Y")});
  EXPECT_EQ(apply(t, s), apply(apply(t, s1), s2));
}

TEST(Mgu, ForcedBinding) {
  const auto s = mgu(Literal::pos("p", {V("X")}), Literal::pos("p", {K("a")}));
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, (Substitution{{"X", K("a")}}));
}

TEST(Mgu, OccursCheck) {
  EXPECT_FALSE(mgu(Literal::pos("p", {V("X")}), Literal::pos("p", {F("f", {V("X")})})));
}

TEST(Mgu, HeadsOfHornPair) {
  const auto s = mgu(C("p(X) :- p(f(X)).").positive_part().literals().front(),
                     C("p(a) :- q(Y).").positive_part().literals().front());
  ASSERT_TRUE(s);
  EXPECT_EQ(*s, (Substitution{{"X", K("a")}}));
}

TEST(Mgu, ManyTerms) {
  const std::vector<Term> ts = {F("g", {V("X"), K("a")}), F("g", {V("Y"), V("Z")}), F("g", {K("b"), V("W")})};
  const auto s = mgu(ts);
  ASSERT_TRUE(s);
  for (const Term& t : ts) EXPECT_EQ(apply(t, *s), F("g", {K("b"), K("a")}));
}

TEST(Mgu, IncompatibleLiteralsRejected) {
  EXPECT_THROW(mgu(Literal::pos("p", {V("X")}), Literal::neg("p", {V("X")})), std::invalid_argument);
}

TEST(Match, OneWay) {
  EXPECT_TRUE(match(F("f", {V("X"), V("X")}), F("f", {K("a"), K("a")})));
  EXPECT_FALSE(match(F("f", {V("X"), V("X")}), F("f", {K("a"), K("b")})));
  EXPECT_FALSE(match(K("a"), V("X")));
}

TEST(Skolemize, TermSetExampleClause) {
  const std::vector<Clause> s = {C("p(f(f(X)),Y,Z) :- p(Y,Z,f(f(X))).")};
  const Skolemization sk = skolemize(s);
  EXPECT_EQ(sk.sigma, (Substitution{{"X", K("sk0")}, {"Y", K("sk1")}, {"Z", K("sk2")}}));
  ASSERT_EQ(sk.image.size(), 1U);
  const Term a = K("sk0"), b = K("sk1"), c = K("sk2");
  const Term ffa = F("f", {F("f", {a})});
  EXPECT_EQ(sk.image[0], (Clause{Literal::pos("p", {ffa, b, c}), Literal::neg("p", {b, c, ffa})}));
  EXPECT_TRUE(sk.image[0].is_ground());
}

TEST(Skolemize, GroundUnchanged) {
  const std::vector<Clause> s = {C("p(a) :- q(b).")};
  const Skolemization sk = skolemize(s);
  EXPECT_TRUE(sk.sigma.empty());
  EXPECT_EQ(sk.image, s);
}

TEST(Skolemize, FreshAgainstAvoid) {
  const std::vector<Clause> s = {C("p(X).")};
  const std::vector<Clause> avoid = {Clause{Literal::pos("q", {K("sk0")})}};
  const Skolemization sk = skolemize(s, avoid);
  const Term* t = sk.sigma.find("X");
  ASSERT_NE(t, nullptr);
  EXPECT_NE(t->name(), "sk0");
  EXPECT_TRUE(is_reserved_name(t->name()));
}

TEST(Skolemize, ReservedInputRejected) {
  const std::vector<Clause> s = {Clause{Literal::pos("p", {K("sk3"), V("X")})}};
  EXPECT_THROW(skolemize(s), std::invalid_argument);
}

TEST(StandardizeApart, Disjoint) {
  const std::vector<Clause> in = {C("p(X)."), C("p(X).")};
  const std::vector<Clause> out = standardize_apart(in);
  EXPECT_EQ(out[0], Clause{Literal::pos("p", {V("v0")})});
  EXPECT_EQ(out[1], Clause{Literal::pos("p", {V("v1")})});
}

TEST(StandardizeApart, VariantsInOrder) {
  const std::vector<Clause> in = {C("p(X) :- q(X)."), C("r(Y)."), C("p(X,Y) :- p(Y,Z,X).")};
  const std::vector<Clause> out = standardize_apart(in);
  ASSERT_EQ(out.size(), in.size());
  std::set<std::string> seen;
  for (std::size_t i = 0; i < in.size(); ++i) {
    EXPECT_TRUE(is_variant(in[i], out[i]));
    for (const std::string& v : out[i].variables()) EXPECT_TRUE(seen.insert(v).second);
  }
}

TEST(Factors, UnifyPair) {
  const auto fs = factors(C("p(X) ; p(a).")).clauses;
  EXPECT_TRUE(has_variant(fs, C("p(X) ; p(a).")));
  EXPECT_TRUE(has_variant(fs, C("p(a).")));
}

TEST(Factors, Singleton) {
  const auto fs = factors(C("p(a).")).clauses;
  ASSERT_EQ(fs.size(), 1U);
  EXPECT_EQ(fs[0], C("p(a)."));
}

TEST(Factors, NoSamePredicatePair) {
  const auto fs = factors(C("p(X) ; q(Y).")).clauses;
  ASSERT_EQ(fs.size(), 1U);
  EXPECT_TRUE(is_variant(fs[0], C("p(X) ; q(Y).")));
}

TEST(Resolvents, SelfResolutionStaysVariant) {
  const Clause c2 = C("p(f(f(Y))) :- p(X).");
  const auto rs = resolvents(c2, c2).clauses;
  ASSERT_FALSE(rs.empty());
  for (const Clause& r : rs) EXPECT_TRUE(is_variant(r, c2)) << r;
}

TEST(Resolvents, RotationPair) {
  const Clause d1 = C("p(X,Y,Z) :- p(Y,Z,X).");
  const Clause d2 = C("p(X,Y,Z) :- p(Z,X,Y).");
  EXPECT_TRUE(has_variant(resolvents(d2, d2).clauses, d1));
}

TEST(Resolvents, NoComplementaryPair) { EXPECT_TRUE(resolvents(C("p(a)."), C("q(b).")).clauses.empty()); }

TEST(Resolvents, ChainStep) {
  const auto rs = resolvents(C("p(f(X)) :- p(X)."), C("p(f(X)) :- p(X).")).clauses;
  EXPECT_TRUE(has_variant(rs, C("p(f(f(X))) :- p(X).")));
}

TEST(Resolvents, LimitReportsIncomplete) {
  const auto r = resolvents(C("p(X) ; p(Y) ; q(Z) :- q(W), p(U)."), C("p(X) ; p(Y) ; q(Z) :- q(W), p(U)."), {1, 0});
  EXPECT_EQ(r.clauses.size(), 1U);
  EXPECT_FALSE(r.complete);
}

TEST(Variant, Basics) {
  EXPECT_TRUE(is_variant(C("p(X,Y)."), C("p(A,B).")));
  EXPECT_FALSE(is_variant(C("p(X,X)."), C("p(A,B).")));
  EXPECT_EQ(variant_hash(C("p(X) :- q(X,Y).")), variant_hash(C("p(B) :- q(B,A).")));
}

TEST(ReservedNames, Pattern) {
  EXPECT_TRUE(is_reserved_name("v0"));
  EXPECT_TRUE(is_reserved_name("sk12"));
  EXPECT_FALSE(is_reserved_name("v"));
  EXPECT_FALSE(is_reserved_name("skx"));
  EXPECT_FALSE(is_reserved_name("a"));
}
