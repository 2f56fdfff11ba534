#include "omq/relax_tgd.h"

#include <map>
#include <mutex>

#include "omq/relax_btw.h"
#include "omq/relax_eliu.h"

namespace omq {

namespace {

void validate(const TgdParams& p) {
  if (p.l < 1 || p.l >= p.k) throw InputError("need 1 <= l < k");
  if (p.kp < 1) throw InputError("need kp >= 1");
}

bool unsat(const Ontology& o, const Database& d, const TgdParams& p) {
  const std::string fresh = "Bot_";
  CQ q;
  q.atoms = {{fresh, "x", ""}};
  return unravel_cq_entails(replace_bot(o, fresh), d, q, {}, p.l, p.k);
}

// Oracle answers keyed by query and constant, shared between disjuncts.
class Cache {
 public:
  bool get(const Ontology& o, const Database& d, const CQ& p, const Tuple& a, const TgdParams& params) {
    std::string key = cq_key(p) + "|" + (a.empty() ? "" : a[0]);
    {
      std::lock_guard<std::mutex> g(mu_);
      if (auto it = m_.find(key); it != m_.end()) return it->second;
    }
    bool r = unravel_cq_entails(o, d, p, a, params.l, params.k);
    std::lock_guard<std::mutex> g(mu_);
    m_.emplace(key, r);
    return r;
  }

 private:
  std::mutex mu_;
  std::map<std::string, bool> m_;
};

Database chase(const Ontology& o, const Database& d, const CQ& p, const TgdParams& params, Cache& cache) {
  int kp = std::min<int>(params.kp, static_cast<int>(p.vars().size()));
  Database out = d;
  int copy = 0;
  for (const auto& t : trees_closure(p, std::max(kp, 1), o.concept_names())) {
    std::string prefix = "~" + std::to_string(copy++) + ".";
    if (t.arity() == 1) {
      for (const auto& a : d.adom())
        if (cache.get(o, d, t, {a}, params)) out.merge(glue_copy(t, {a}, prefix + a + "."));
    } else if (cache.get(o, d, t, {}, params)) {
      out.merge(glue_copy(t, {}, prefix));
    }
  }
  return out;
}

}  // namespace

Database tgd_careful_chase(const Ontology& o, const Database& d, const CQ& p, const TgdParams& params) {
  validate(params);
  Cache cache;
  return chase(o, d, p, params, cache);
}

std::set<Tuple> approx_tgd_answers(const OMQ& q, const Database& d, const TgdParams& params) {
  validate(params);
  size_t arity = q.query.empty() ? 0 : q.query[0].arity();
  if (unsat(q.onto, d, params)) return all_tuples(d, arity);
  Cache cache;
  auto dom = d.adom();
  std::set<Tuple> out;
  for (const auto& p : q.query) {
    Database ext = chase(q.onto, d, p, params, cache);
    for (const auto& t : eval_cq(ext, p)) {
      bool inside = true;
      for (const auto& c : t) inside = inside && dom.count(c);
      if (inside) out.insert(t);
    }
  }
  return out;
}

bool approx_tgd(const OMQ& q, const Database& d, const Tuple& a, const TgdParams& params) {
  validate(params);
  if (unsat(q.onto, d, params)) return true;
  Cache cache;
  for (const auto& p : q.query)
    if (holds(chase(q.onto, d, p, params, cache), p, a)) return true;
  return false;
}

}  // namespace omq
