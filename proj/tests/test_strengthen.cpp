#include "doctest.h"
#include "fixtures.h"
#include "omq/strengthen.h"
#include "omq/syntax.h"
#include "omq/typesat.h"

using namespace omq;

namespace {
OMQ omq_of(const fx::Case& c) { return OMQ{c.o(), {}, c.q()}; }
}  // namespace

TEST_CASE("disjunct expansion and exhaustive sets") {
  auto split = parse_ontology("top sub A1 or A2");
  auto set = exhaustive_set(split);
  REQUIRE(set.ontologies.size() == 2);
  CHECK(print_ontology(set.ontologies[0]) != print_ontology(set.ontologies[1]));
  auto left = parse_ontology("(B1 or B2) sub A");
  CHECK(exhaustive_set(left).ontologies.size() == 1);
  CHECK(exhaustive_set(left).ontologies[0].cis.size() == 2);
  auto mixed = parse_ontology("(B1 or B2) sub A1 or A2 or A3\nC sub exists r.(A or B)");
  CHECK(exhaustive_size(mixed) == "18");
  CHECK(exhaustive_set(mixed).ontologies.size() == 18);
  CHECK_THROWS_AS(exhaustive_set(parse_ontology("A sub forall r.B")), InputError);
}

TEST_CASE("certain answers for ELI_bot") {
  auto o = parse_ontology("A sub exists r.B\nB sub C");
  CHECK(eli_certain(o, parse_database("A(a)"), parse_query("q() :- C(x)."), {}));
  CHECK(!eli_certain(o, parse_database("B(a)"), parse_query("q() :- r(x,y)."), {}));
  CHECK(eli_certain(parse_ontology("A sub bot"), parse_database("A(a)"), parse_query("q(x) :- Z(x)."), {"a"}));
  auto inv = parse_ontology("A sub exists r.B\n(B and exists r-.A) sub D\n(exists r.D) sub E");
  CHECK(eli_certain(inv, parse_database("A(a)"), parse_query("q(x) :- E(x)."), {"a"}));
  auto loop = parse_ontology("top sub exists r.A\nA sub exists r-.A");
  CHECK(eli_certain(loop, parse_database("B(a)"), parse_query("q() :- r(x,y), r(y,z), r(z,w), A(w)."), {}));
}

TEST_CASE("strengthening on the worked examples") {
  auto two = fx::paired_disjuncts();
  CHECK(approx_up_ont(omq_of(two), two.d(), {"a"}));
  CHECK(!certain_beliq(two.d(), two.o(), two.q()[0], {"a"}));
  auto one = fx::pairwise_and();
  CHECK(approx_up_db(omq_of(one), one.d(), {}));
  CHECK(!certain_beliq(one.d(), one.o(), one.q()[0], {}));
  OMQ split{parse_ontology("top sub A1 or A2"), {}, parse_query("q(x) :- A1(x).")};
  CHECK(!approx_up_ont(split, parse_database("B(a)"), {"a"}));
}

TEST_CASE("quotients keep answer constants apart") {
  auto d = parse_database("r(a,b)\nr(b,c)");
  CHECK(quotients(d, {}).size() == 5);
  CHECK(quotients(d, {"a", "b"}).size() == 3);
}
