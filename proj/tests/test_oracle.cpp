#include "doctest.h"
#include "fixtures.h"
#include "omq/oracle.h"
#include "omq/syntax.h"
#include "omq/typesat.h"

using namespace omq;

TEST_CASE("bounded chase") {
  auto t = parse_tgds("A(x) -> r(x,y)");
  auto r = chase_bounded(t, parse_database("A(a)"), 1);
  CHECK(r.db.rfacts.size() == 1);
  CHECK(r.db.size() == 2);
  CHECK(chase_bounded(t, parse_database("A(a)"), 0).db.size() == 1);
  auto loop = chase_bounded(parse_tgds("r(x,x) -> s(x,x)"), parse_database("r(a,a)"), 0);
  CHECK(loop.db.rfacts.count({"s", "a", "a"}));
  auto d = parse_database("r(a,b)\nB(b)");
  CHECK(chase_bounded(std::vector<TGD>{}, d, 3).db == d);
  auto o = parse_ontology("A sub exists r.B\nB sub C");
  CHECK(chase_answers(o, parse_database("A(a)"), parse_query("q() :- C(x)."), 2).size() == 1);
  CHECK(!chase_bounded(parse_ontology("A sub bot"), parse_database("A(a)"), 1).sat);
}

TEST_CASE("prefix oracle") {
  auto yy = fx::disjunctive_edge();
  CHECK(prefix_certain(yy.o(), yy.d(), {}, {}, 2, yy.q()[0], {}));
  auto k4 = fx::coloring(fx::k4());
  CHECK(!prefix_certain(k4.o(), k4.d(), {}, {false, 1, 2}, 2, k4.q()[0], {}));
  CHECK(prefix_certain(k4.o(), k4.d(), {}, {false, 1, 3}, 1, k4.q()[0], {}) == false);
  auto all = k4.d().adom();
  CHECK(prefix_certain(k4.o(), k4.d(), all, {}, 0, k4.q()[0], {}) == certain_beliq(k4.d(), k4.o(), k4.q()[0], {}));
  auto loop = fx::parity_loop();
  CHECK(prefix_certain(loop.o(), loop.d(), {}, {false, 1, 2}, 2, loop.q()[0], {"a"}));
}

TEST_CASE("instance generation") {
  InstanceSpec s;
  CHECK(instance_text(gen_instance(s)) == instance_text(gen_instance(s)));
  std::set<std::string> seen;
  for (uint64_t i = 1; i <= 200; ++i) {
    s.seed = i;
    seen.insert(instance_text(gen_instance(s)));
  }
  CHECK(seen.size() >= 195);
}
