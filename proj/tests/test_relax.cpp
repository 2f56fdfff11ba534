#include "doctest.h"
#include "fixtures.h"
#include "omq/hornsat.h"
#include "omq/relax_eliu.h"
#include "omq/relax_tree.h"
#include "omq/typesat.h"

using namespace omq;

namespace {
OMQ omq_of(const fx::Case& c) { return OMQ{c.o(), {}, c.q()}; }
}  // namespace

TEST_CASE("relax-eliu on the worked examples") {
  auto fe = fx::split_successors();
  CHECK(approx_eliu_answers(omq_of(fe), fe.d()) == std::set<Tuple>{{"a"}});
  auto xx = fx::split_successors_both();
  CHECK(approx_eliu(omq_of(xx), xx.d(), {"a"}));
  auto yy = fx::disjunctive_edge();
  CHECK(approx_eliu(omq_of(yy), yy.d(), {}));
  auto e4 = fx::symmetric_pair();
  CHECK(!approx_eliu(omq_of(e4), e4.d(), {}));
  auto k4 = fx::coloring(fx::k4());
  CHECK(!approx_eliu(omq_of(k4), k4.d(), {}));
  auto loop = fx::parity_loop();
  CHECK(!approx_eliu(omq_of(loop), loop.d(), {"a"}));
  auto cyc = fx::lasso();
  CHECK(approx_eliu_answers(omq_of(cyc), cyc.d()) == std::set<Tuple>{{"a"}, {"b1"}, {"b2"}, {"b3"}});
}

TEST_CASE("relax-eliu with an unsatisfiable database answers everything") {
  OMQ q{parse_ontology("A sub bot"), {}, parse_query("q(x) :- B(x).")};
  auto d = parse_database("A(a)\nr(a,b)");
  CHECK(approx_eliu_answers(q, d) == std::set<Tuple>{{"a"}, {"b"}});
}

TEST_CASE("relax-tree on the worked examples") {
  auto loop = fx::parity_loop();
  CHECK(approx_tree(omq_of(loop), loop.d(), {"a"}));
  auto cyc = fx::lasso();
  CHECK(!approx_tree(omq_of(cyc), cyc.d(), {"a"}));
  CHECK(approx_tree(omq_of(cyc), cyc.d(), {"b1"}));
  auto fe = fx::split_successors();
  CHECK(approx_tree(omq_of(fe), fe.d(), {"a"}));
  auto k4 = fx::coloring(fx::k4());
  CHECK(!approx_tree(omq_of(k4), k4.d(), {}));
}

TEST_CASE("decoration") {
  auto d = parse_database("A(a)");
  auto dec = decorate(parse_query("q(x) :- A(x)."), d, {"a"}, Ontology{});
  REQUIRE(dec.verdict);
  CHECK(*dec.verdict);
  auto dec2 = decorate(parse_query("q(x,y) :- r(x,y)."), parse_database("r(b,a)"), {"a", "b"}, Ontology{});
  REQUIRE(dec2.verdict);
  CHECK(!*dec2.verdict);
  auto dec3 = decorate(parse_query("q() :- r(x,y)."), parse_database("r(b,a)"), {}, Ontology{});
  CHECK(!dec3.verdict);
}

TEST_CASE("trees hanging from an answer variable may be anonymous") {
  OMQ q{parse_ontology("top sub exists r.A"), {}, parse_query("q(x,w) :- B(w), r(x,y), A(y).")};
  auto d = parse_database("B(a)\nC(b)");
  std::set<Tuple> all{{"a", "a"}, {"b", "a"}};
  CHECK(approx_eliu_answers(q, d) == all);
  CHECK(approx_tree_answers(q, d) == all);
}

TEST_CASE("distributivity") {
  auto a = parse_query("q() :- A(x).")[0], b = parse_query("q() :- B(x).")[0], c = parse_query("q() :- C(x).")[0];
  // (A and B) or C  ==  (A or C) and (B or C)
  auto r = distribute({{a, b}, {c}});
  CHECK(r.size() == 2);
  // A or (A and B) == A
  auto r2 = distribute({{a}, {a, b}});
  CHECK(r2.size() == 1);
}
