#include "omq/oracle.h"

#include <map>
#include <random>

#include "omq/relax_eliu.h"
#include "omq/syntax.h"
#include "omq/typesat.h"
#include "omq/unraveling.h"

namespace omq {

namespace {

bool mentions_bot(const CPtr& c) {
  if (c->kind == CK::Bot) return true;
  return (c->a && mentions_bot(c->a)) || (c->b && mentions_bot(c->b));
}

}  // namespace

std::vector<TGD> cis_as_tgds(const Ontology& o) {
  std::vector<TGD> out;
  for (const auto& ci : o.cis) {
    if (!is_eli_bot(ci.lhs) || !is_eli_bot(ci.rhs)) throw InputError("the chase oracle needs ELI_bot inclusions");
    if (mentions_bot(ci.lhs)) continue;
    TGD t;
    t.body = *concept_to_cq(ci.lhs);
    t.frontier = {"x"};
    if (!mentions_bot(ci.rhs)) t.head = concept_to_cq(ci.rhs);
    out.push_back(t);
  }
  return out;
}

ChaseResult chase_bounded(const std::vector<TGD>& rules, const Database& d, int depth, size_t max_facts) {
  ChaseResult out;
  out.db = d;
  std::map<std::string, int> level;
  std::set<std::pair<size_t, Tuple>> done;
  int fresh = 0;
  bool grew = true;
  while (grew) {
    grew = false;
    Database snapshot = out.db;
    for (size_t i = 0; i < rules.size(); ++i) {
      const TGD& r = rules[i];
      CQ body = r.body;
      body.answer.assign(r.frontier.begin(), r.frontier.end());
      for (const auto& t : eval_cq(snapshot, body)) {
        if (done.count({i, t})) continue;
        if (!r.head) {
          out.sat = false;
          return out;
        }
        int lv = 0;
        for (const auto& c : t) lv = std::max(lv, level.count(c) ? level[c] : 0);
        std::map<std::string, std::string> ren;
        for (size_t j = 0; j < body.answer.size(); ++j) ren[body.answer[j]] = t[j];
        bool existential = false;
        for (const auto& v : r.head->vars())
          if (!ren.count(v)) existential = true;
        if (existential && lv + 1 > depth) continue;
        done.insert({i, t});
        for (const auto& v : r.head->vars())
          if (!ren.count(v)) {
            ren[v] = "_n" + std::to_string(fresh++);
            level[ren[v]] = lv + 1;
          }
        size_t before = out.db.size();
        for (const auto& a : r.head->atoms) {
          if (a.binary())
            out.db.add_role(a.pred, ren[a.x], ren[a.y]);
          else
            out.db.add_concept(a.pred, ren[a.x]);
        }
        if (out.db.size() != before) grew = true;
        if (out.db.size() > max_facts) throw GuardError("chase exceeds " + std::to_string(max_facts) + " facts");
      }
    }
  }
  return out;
}

ChaseResult chase_bounded(const Ontology& o, const Database& d, int depth, size_t max_facts) {
  return chase_bounded(cis_as_tgds(o), d, depth, max_facts);
}

std::set<Tuple> chase_answers(const Ontology& o, const Database& d, const UCQ& q, int depth) {
  size_t arity = q.empty() ? 0 : q[0].arity();
  ChaseResult ch = chase_bounded(o, d, depth);
  if (!ch.sat) return all_tuples(d, arity);
  auto dom = d.adom();
  std::set<Tuple> out;
  for (const auto& t : eval_ucq(ch.db, q)) {
    bool inside = true;
    for (const auto& c : t) inside = inside && dom.count(c);
    if (inside) out.insert(t);
  }
  return out;
}

bool prefix_certain(const Ontology& o, const Database& d, const std::set<std::string>& s, const PrefixMode& mode,
                    int depth, const CQ& q, const Tuple& a) {
  Tuple at = a;
  UnravelingPrefix p;
  if (mode.tree) {
    p = tree_unravel_prefix(d, s, depth);
  } else {
    LkOptions opt;
    if (!a.empty() && !s.count(a[0])) {
      opt.root = std::set<std::string>{a[0]};
      at = {a[0] + "_0"};
    }
    p = lk_unravel_prefix(d, s, mode.l, mode.k, depth, opt);
  }
  if (!at.empty() && !p.copy_of.count(at[0])) return false;
  return certain_beliq(p.db, o, q, at);
}

namespace {

class Gen {
 public:
  Gen(const InstanceSpec& s) : spec_(s), rng_(s.seed) {}

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng_); }
  bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(rng_); }

  std::string cname() { return "A" + std::to_string(pick(spec_.concept_names)); }
  std::string rname() { return spec_.role_names == 1 ? "r" : "r" + std::to_string(pick(spec_.role_names)); }
  Role role(bool allow_inv) { return Role::named(rname(), allow_inv && coin(0.3)); }

  // Random concept of bounded depth in the dialect; positive controls the Horn side.
  CPtr concept_of(int depth, bool lhs) {
    bool alci = spec_.flavour == Flavour::ALCI;
    int choices = depth > 0 ? 4 : 1;
    switch (pick(choices)) {
      case 0: return c_name(cname());
      case 1: return c_and(concept_of(depth - 1, lhs), concept_of(depth - 1, lhs));
      case 2: return c_exists(role(true), concept_of(depth - 1, lhs));
      default:
        if (alci) {
          int v = pick(3);
          if (v == 0) return c_not(concept_of(depth - 1, lhs));
          if (v == 1) return c_forall(role(true), concept_of(depth - 1, lhs));
          return c_or(concept_of(depth - 1, lhs), concept_of(depth - 1, lhs));
        }
        if (spec_.flavour == Flavour::ELIU_bot) return c_or(concept_of(depth - 1, lhs), concept_of(depth - 1, lhs));
        return c_exists(role(true), concept_of(depth - 1, lhs));
    }
  }

  Ontology ontology() {
    Ontology o;
    if (spec_.flavour == Flavour::Empty) return o;
    for (int i = 0; i < spec_.cis; ++i) {
      CPtr l = coin(0.15) ? c_top() : concept_of(1, true);
      CPtr r = coin(0.1) ? c_bot() : concept_of(1, false);
      o.cis.push_back({l, r});
    }
    return o;
  }

  Database database() {
    Database d;
    int n = std::max(1, spec_.constants);
    auto c = [&](int i) { return "c" + std::to_string(i); };
    for (int i = 0; i < n; ++i) d.add_concept(kTop, c(i));
    for (int i = 0; i < spec_.role_facts; ++i) d.add_role(rname(), c(pick(n)), c(pick(n)));
    for (int i = 0; i < spec_.concept_facts; ++i) d.add_concept(cname(), c(pick(n)));
    return d;
  }

  CQ tree_query(int vars, bool unary) {
    CQ q;
    auto v = [](int i) { return "x" + std::to_string(i); };
    for (int i = 1; i < vars; ++i) {
      int parent = pick(i);
      if (coin()) q.atoms.push_back({rname(), v(parent), v(i)});
      else q.atoms.push_back({rname(), v(i), v(parent)});
    }
    for (int i = 0; i < vars; ++i)
      if (coin(0.5)) q.atoms.push_back({cname(), v(i), ""});
    if (q.atoms.empty()) q.atoms.push_back({cname(), v(0), ""});
    if (unary) q.answer = {v(0)};
    q.normalize();
    return q;
  }

  CQ cq(int vars, int arity) {
    CQ q = tree_query(vars, false);
    auto v = [](int i) { return "x" + std::to_string(i); };
    if (vars >= 2 && coin(0.7)) q.atoms.push_back({rname(), v(pick(vars)), v(pick(vars))});
    for (int i = 0; i < arity && i < vars; ++i) q.answer.push_back(v(i));
    q.normalize();
    return q;
  }

  Instance make() {
    Instance in;
    in.omq.onto = ontology();
    in.db = database();
    int vars = std::max(1, 1 + pick(std::max(1, spec_.query_vars)));
    switch (spec_.shape) {
      case Shape::BELIQ: in.omq.query = {tree_query(vars, coin())}; break;
      case Shape::CQ: in.omq.query = {cq(vars, pick(2))}; break;
      case Shape::UCQ: {
        int arity = pick(2);
        in.omq.query = {cq(vars, arity), cq(std::max(1, 1 + pick(spec_.query_vars)), arity)};
        break;
      }
    }
    in.omq.sigma = sig_of(in.db);
    auto dom_set = in.db.adom();
    std::vector<std::string> dom(dom_set.begin(), dom_set.end());
    for (size_t i = 0; i < in.omq.query[0].arity(); ++i) in.answer.push_back(dom[pick(static_cast<int>(dom.size()))]);
    return in;
  }

 private:
  const InstanceSpec& spec_;
  std::mt19937_64 rng_;
};

}  // namespace

Instance gen_instance(const InstanceSpec& spec) { return Gen(spec).make(); }

std::string instance_text(const Instance& in) {
  std::string s = print_ontology(in.omq.onto) + "--\n" + print_database(in.db) + "--\n" + print_query(in.omq.query);
  s += "--\n";
  for (const auto& c : in.answer) s += c + " ";
  return s;
}

}  // namespace omq
