#include <chrono>

#include "doctest.h"
#include "fixtures.h"
#include "omq/oracle.h"
#include "omq/relax_btw.h"
#include "omq/relax_tgd.h"
#include "omq/typesat.h"
#include "omq/unraveling.h"

using namespace omq;

namespace {
OMQ omq_of(const fx::Case& c) { return OMQ{c.o(), {}, c.q()}; }
}  // namespace

TEST_CASE("bELIQ elimination") {
  auto loop = fx::parity_loop();
  CHECK(eliminate_beliq(omq_of(loop), loop.d(), {}, {"a"}, 1, 2));
  auto k4 = fx::coloring(fx::k4());
  CHECK(eliminate_beliq(omq_of(k4), k4.d(), {}, {}, 1, 4));
  CHECK(!eliminate_beliq(omq_of(k4), k4.d(), {}, {}, 1, 2));
  CHECK(!eliminate_beliq(omq_of(k4), k4.d(), {}, {}, 1, 3));
  auto tri = fx::coloring(fx::e_triangle());
  CHECK(!eliminate_beliq(omq_of(tri), tri.d(), {}, {}, 1, 2));
  auto yy = fx::disjunctive_edge();
  CHECK(eliminate_beliq(omq_of(yy), yy.d(), {}, {}, 1, 2));
}

TEST_CASE("UCQ elimination on the clique example") {
  auto c3 = fx::clique3();
  CHECK(!eliminate_ucq(omq_of(c3), c3.d(), {}, 1, 2));
  CHECK(eliminate_ucq(omq_of(c3), c3.d(), {}, 1, 3));
  CHECK(!approx_btw(omq_of(c3), c3.d(), {}, 1, 2));
}

TEST_CASE("UCQ elimination agrees with the exact answer on tree databases") {
  auto fe = fx::split_successors();
  CHECK(eliminate_ucq(omq_of(fe), fe.d(), {"a"}, 1, 2));
  CHECK(!eliminate_ucq(omq_of(fe), fe.d(), {"b1"}, 1, 2));
  auto yy = fx::disjunctive_edge();
  CHECK(eliminate_ucq(omq_of(yy), yy.d(), {}, 1, 2));
  auto e4 = fx::symmetric_pair();
  CHECK(eliminate_ucq(omq_of(e4), e4.d(), {}, 1, 2));
  auto cyc = fx::lasso();
  CHECK(eliminate_ucq(omq_of(cyc), cyc.d(), {"a"}, 1, 2) == false);
  CHECK(eliminate_ucq(omq_of(cyc), cyc.d(), {"b1"}, 1, 2));
}

TEST_CASE("CQ entailment over unravelings") {
  Ontology none;
  auto k4db = parse_database(fx::k4());
  CQ clique;
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      if (i != j) clique.atoms.push_back({"e", "x" + std::to_string(i), "x" + std::to_string(j)});
  clique.normalize();
  CHECK(unravel_cq_entails(none, k4db, clique, {}, 1, 4));
  CHECK(!unravel_cq_entails(none, k4db, clique, {}, 1, 3));
  auto col = fx::coloring(fx::k4());
  CQ dx = parse_query("q(x) :- D(x).")[0];
  // a1 can keep a colour of its own in every copy
  CHECK(!unravel_cq_entails(col.o(), k4db, dx, {"a1"}, 1, 4));
  CQ bd = parse_query("q() :- D(x).")[0];
  CHECK(unravel_cq_entails(col.o(), k4db, bd, {}, 1, 4));
  CHECK(!unravel_cq_entails(col.o(), k4db, bd, {}, 1, 3));
}

TEST_CASE("relax-tgd") {
  auto k4 = fx::coloring(fx::k4());
  CHECK(approx_tgd(omq_of(k4), k4.d(), {}, {1, 4, 2}));
  auto tri = fx::coloring(fx::e_triangle());
  CHECK(!approx_tgd(omq_of(tri), tri.d(), {}, {1, 3, 2}));
  auto c3 = fx::clique3();
  CHECK(approx_tgd(omq_of(c3), c3.d(), {}, {1, 2, 2}));
  auto cyc = fx::lasso();
  CHECK(approx_tgd_answers(omq_of(cyc), cyc.d(), {1, 2, 2}) == std::set<Tuple>{{"a"}, {"b1"}, {"b2"}, {"b3"}});
}

TEST_CASE("CQ entailment without an ontology matches the elimination") {
  // top sub top adds nothing but sends the query through the elimination
  Ontology taut = parse_ontology("top sub top");
  int positive = 0;
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    InstanceSpec spec;
    spec.seed = seed;
    spec.flavour = Flavour::Empty;
    spec.shape = seed % 2 ? Shape::CQ : Shape::BELIQ;
    spec.constants = 2 + static_cast<int>(seed % 3);
    spec.role_facts = 2 + static_cast<int>(seed % 3);
    spec.concept_names = 2;
    spec.query_vars = 3;
    Instance in = gen_instance(spec);
    const CQ& p = in.omq.query[0];
    if (p.arity() > 1) continue;
    for (int k : {2, 3}) {
      bool fast = unravel_cq_entails({}, in.db, p, in.answer, 1, k);
      positive += fast;
      CHECK_MESSAGE(fast == unravel_cq_entails(taut, in.db, p, in.answer, 1, k), "seed ", seed, " k ", k);
    }
  }
  CHECK(positive > 5);
}

TEST_CASE("relax-btw finds a cyclic pendant that folds into the anonymous tree") {
  OMQ q{parse_ontology("top sub exists r.exists s.top"), {},
        parse_query("q(x,w) :- B(w), r(x,y), r(x,z), s(y,u), s(z,u).")};
  auto d = parse_database("B(a)");
  CHECK(approx_btw_answers(q, d, 1, 2) == std::set<Tuple>{{"a", "a"}});
  CHECK(approx_btw_answers(q, parse_database("C(a)"), 1, 2).empty());
}
