#include "omq/relax_eliu.h"

#include <functional>

#include "omq/hornsat.h"

namespace omq {

std::set<Tuple> all_tuples(const Database& d, size_t arity) {
  std::set<Tuple> out;
  auto dom_set = d.adom();
  std::vector<std::string> dom(dom_set.begin(), dom_set.end());
  Tuple t;
  std::function<void()> rec = [&] {
    if (t.size() == arity) {
      out.insert(t);
      return;
    }
    for (const auto& c : dom) {
      t.push_back(c);
      rec();
      t.pop_back();
    }
  };
  rec();
  return out;
}

bool eliu_unsat(const Ontology& o, const Database& d) {
  const std::string fresh = "Bot_";
  CQ q;
  q.atoms = {{fresh, "x", ""}};
  return beliq_unravel_entails(q, replace_bot(o, fresh), d);
}

Database careful_chase(const Ontology& o, const Database& d, const CQ& p) {
  Database out = d;
  int copy = 0;
  for (const auto& t : trees_closure(p, -1, o.concept_names())) {
    std::string prefix = "~" + std::to_string(copy) + ".";
    if (t.arity() == 1) {
      auto at = eliq_unravel_answers(t, o, d);
      for (const auto& a : at) {
        out.merge(glue_copy(t, {a}, prefix + a + "."));
      }
    } else if (beliq_unravel_entails(t, o, d)) {
      out.merge(glue_copy(t, {}, prefix));
    }
    ++copy;
  }
  return out;
}

namespace {

std::set<Tuple> over_adom(const std::set<Tuple>& ts, const Database& d) {
  auto dom = d.adom();
  std::set<Tuple> out;
  for (const auto& t : ts) {
    bool ok = true;
    for (const auto& c : t) ok = ok && dom.count(c);
    if (ok) out.insert(t);
  }
  return out;
}

}  // namespace

std::set<Tuple> approx_eliu_answers(const OMQ& q, const Database& d) {
  size_t arity = q.query.empty() ? 0 : q.query[0].arity();
  if (eliu_unsat(q.onto, d)) return all_tuples(d, arity);
  std::set<Tuple> out;
  for (const auto& p : q.query) {
    Database ext = careful_chase(q.onto, d, p);
    auto r = over_adom(eval_cq(ext, p), d);
    out.insert(r.begin(), r.end());
  }
  return out;
}

bool approx_eliu(const OMQ& q, const Database& d, const Tuple& a) {
  if (eliu_unsat(q.onto, d)) return true;
  for (const auto& p : q.query) {
    Database ext = careful_chase(q.onto, d, p);
    if (holds(ext, p, a)) return true;
  }
  return false;
}

}  // namespace omq
