#include "omq/relax_btw.h"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <map>
#include <tuple>

#include "omq/config.h"
#include "omq/relax_eliu.h"
#include "omq/relax_tree.h"
#include "omq/typesat.h"

namespace omq {

namespace {

using Mask = uint32_t;

std::vector<int> bits(Mask m) {
  std::vector<int> out;
  for (int i = 0; m; ++i, m >>= 1)
    if (m & 1) out.push_back(i);
  return out;
}

struct Problem {
  const Ontology* onto = nullptr;
  Database db;
  std::set<std::string> s;
  int l = 1, k = 2;
  std::vector<CPtr> extra, global;
  CPtr target;  // ELIQ that must fail at a0
  std::string a0;
  std::vector<CQ> eliqs;      // unary tree-shaped members, decided by the types
  std::vector<CQ> members;    // remaining members with answer variables
  std::vector<CQ> forbidden;  // Boolean queries the canonical database must not satisfy
};

struct Entry {
  Mask L = 0;
  std::vector<int> tau;  // one type per element of L, in index order
  std::vector<int> P;    // positive instantiations, sorted
  bool alive = true;
};

class Elimination {
 public:
  Elimination(const Problem& pb, const TypeTable& tt, TypeSpace& sp) : pb_(pb), tt_(tt), sp_(sp) {
    std::set<std::string> names = pb.db.adom();
    names.insert(pb.s.begin(), pb.s.end());
    if (!pb.a0.empty()) names.insert(pb.a0);
    if (static_cast<int>(names.size()) > limits().max_adom)
      throw GuardError("active domain has " + std::to_string(names.size()) + " constants, limit " +
                       std::to_string(limits().max_adom));
    cs_.assign(names.begin(), names.end());
    for (size_t i = 0; i < cs_.size(); ++i) ids_[cs_[i]] = static_cast<int>(i);
    for (const auto& c : pb.s) smask_ |= Mask{1} << ids_[c];

    db_ = pb.db;
    for (const auto& c : cs_) db_.add_concept(kTop, c);
    inc_.resize(cs_.size());
    for (const auto& f : db_.rfacts) {
      int a = ids_[f.a], b = ids_[f.b];
      inc_[a].push_back({f.name, b, true});
      if (a != b) inc_[b].push_back({f.name, a, false});
    }
    for (const auto& e : pb.eliqs) eliq_nodes_.push_back(sp_.node(cq_to_concept(e, e.answer[0])));
    needs_db_ = !pb.members.empty() || !pb.eliqs.empty() || !pb.forbidden.empty();

    DbIndex idx(db_);
    std::vector<std::vector<int>> cand(idx.n());
    for (int i = 0; i < idx.n(); ++i) {
      cand[i] = tt.candidates(db_, idx.name(i));
      if (pb.target && idx.name(i) == pb.a0) {
        int node = sp_.node(pb.target);
        std::erase_if(cand[i], [&](int t) { return tt.has(t, node); });
      }
    }
    auto gfp = arc_consistent(tt, db_, idx, cand);
    dom_.resize(cs_.size());
    if (!gfp.empty())
      for (int i = 0; i < idx.n(); ++i) dom_[ids_[idx.name(i)]] = gfp[i];

    Mask rest = ((Mask{1} << cs_.size()) - 1) & ~smask_;
    int n_rest = std::popcount(rest);
    for (Mask x = rest;; x = (x - 1) & rest) {
      if (std::popcount(x) <= pb.l) ls_.push_back(smask_ | x);
      if (std::popcount(x) == std::min(pb.k, n_rest)) ks_.push_back(smask_ | x);
      if (x == 0) break;
    }
    std::sort(ls_.begin(), ls_.end());
    std::sort(ks_.begin(), ks_.end());
  }

  // False when every assignment gets eliminated.
  bool run() {
    if (!gfp_ok()) return false;
    for (Mask L : ls_) init_entries(L);
    for (Mask L : ls_)
      if (alive_[L] == 0) return false;
    bool changed = true;
    while (changed) {
      changed = false;
      size_t before = entries_.size();
      for (size_t id = 0; id < entries_.size(); ++id) {
        if (!entries_[id].alive) continue;
        Mask L = entries_[id].L;
        for (Mask K : ks_) {
          if (L & ~K) continue;
          auto w = witness_.find({static_cast<int>(id), K});
          if (w != witness_.end() &&
              std::all_of(w->second.begin(), w->second.end(), [&](int e) { return entries_[e].alive; }))
            continue;
          if (!check(static_cast<int>(id), K)) {
            entries_[id].alive = false;
            changed = true;
            if (--alive_[L] == 0) return false;
            break;
          }
        }
      }
      if (entries_.size() != before) changed = true;
    }
    return true;
  }

  // Whether every surviving assignment containing c makes p(c) true; rolled is p as a concept, or null.
  // Every alive entry containing c must have one of the concepts in its type at c
  // or one of the unary queries instantiated at c.
  bool survivors_have(const std::string& c, const std::vector<CPtr>& concepts, const std::vector<CQ>& qs) const {
    int ci = ids_.at(c);
    std::vector<int> nodes, insts;
    for (const auto& x : concepts) nodes.push_back(sp_.node(x));
    for (const auto& q : qs)
      if (auto it = inst_ids_.find(grounded_key(q, {ci})); it != inst_ids_.end()) insts.push_back(it->second);
    for (const auto& e : entries_) {
      if (!e.alive || !(e.L >> ci & 1)) continue;
      auto els = bits(e.L);
      int t = e.tau[std::find(els.begin(), els.end(), ci) - els.begin()];
      bool ok = false;
      for (int n : nodes) ok = ok || tt_.has(t, n);
      for (int i : insts) ok = ok || std::binary_search(e.P.begin(), e.P.end(), i);
      if (!ok) return false;
    }
    return true;
  }

  std::string grounded_key(const CQ& m, const std::vector<int>& c) const {
    std::map<std::string, std::string> ren;
    for (size_t i = 0; i < m.answer.size(); ++i) ren[m.answer[i]] = "#" + cs_[c[i]];
    CQ g;
    std::set<std::string> ans;
    for (const auto& [v, r] : ren) ans.insert(r);
    g.answer.assign(ans.begin(), ans.end());
    auto nm = [&](const std::string& v) {
      auto it = ren.find(v);
      return it == ren.end() ? v : it->second;
    };
    for (const auto& a : m.atoms) g.atoms.push_back({a.pred, nm(a.x), a.binary() ? nm(a.y) : ""});
    g.normalize();
    return cq_key(g);
  }

 private:
  struct Inc {
    std::string r;
    int other;
    bool fwd;
  };
  struct Inst {
    int member;
    std::vector<int> c;
    Mask mask;
  };
  struct Closure {
    bool ok = false;
    std::vector<int> forced;
  };

  bool gfp_ok() const {
    return std::none_of(dom_.begin(), dom_.end(), [](const auto& d) { return d.empty(); });
  }

  bool edge_ok(const Inc& e, int t_self, int t_other) const {
    return e.fwd ? tt_.compat(e.r, t_self, t_other) : tt_.compat(e.r, t_other, t_self);
  }

  // Compatibility of type t at element x with the assigned elements of mask.
  bool edges_ok(int x, int t, const std::vector<int>& tau, Mask assigned) const {
    for (const auto& e : inc_[x]) {
      if (e.other == x) {
        if (!tt_.compat(e.r, t, t)) return false;
      } else if (assigned >> e.other & 1) {
        if (!edge_ok(e, t, tau[e.other])) return false;
      }
    }
    return true;
  }

  std::vector<int> restrict(Mask L, const std::vector<int>& tau) const {
    std::vector<int> out;
    for (int i : bits(L)) out.push_back(tau[i]);
    return out;
  }

  const std::vector<int>& insts_of(Mask K) {
    auto it = insts_of_k_.find(K);
    if (it != insts_of_k_.end()) return it->second;
    std::set<int> ids;
    auto els = bits(K);
    for (size_t m = 0; m < pb_.members.size(); ++m) {
      const CQ& q = pb_.members[m];
      std::vector<int> c(q.arity(), 0);
      std::function<void(size_t)> rec = [&](size_t i) {
        if (i == c.size()) {
          Mask mask = 0;
          for (int x : c) mask |= Mask{1} << x;
          if (std::popcount(mask & ~smask_) > pb_.l) return;
          std::string key = grounded_key(q, c);
          auto [pos, fresh] = inst_ids_.emplace(key, static_cast<int>(insts_.size()));
          if (fresh) insts_.push_back({static_cast<int>(m), c, mask});
          ids.insert(pos->second);
          return;
        }
        for (int x : els) {
          c[i] = x;
          rec(i + 1);
        }
      };
      rec(0);
    }
    return insts_of_k_[K] = std::vector<int>(ids.begin(), ids.end());
  }

  Database inst_copy(int id) const {
    const Inst& in = insts_[id];
    Tuple at;
    for (int x : in.c) at.push_back(cs_[x]);
    return glue_copy(pb_.members[in.member], at, "~p" + std::to_string(id) + ".");
  }

  bool inst_holds(const DbIndex& idx, int id) const {
    const Inst& in = insts_[id];
    const CQ& q = pb_.members[in.member];
    std::map<std::string, std::string> fixed;
    for (size_t i = 0; i < q.answer.size(); ++i) fixed[q.answer[i]] = cs_[in.c[i]];
    return has_match(idx, q, fixed);
  }

  // Least set of instantiations over K forced by the canonical database, seeded by seed.
  Closure close(Mask K, const std::vector<int>& tau, const std::vector<int>& seed) {
    Closure out;
    if (!needs_db_) {
      out.ok = true;
      return out;
    }
    std::string key = std::to_string(K) + ":";
    for (int i : bits(K)) key += std::to_string(tau[i]) + ",";
    key += ":";
    for (int p : seed) key += std::to_string(p) + ",";
    if (auto it = closures_.find(key); it != closures_.end()) return it->second;

    std::set<std::string> keep;
    for (int i : bits(K)) keep.insert(cs_[i]);
    Database dd = db_.restrict_to(keep);
    for (int i : bits(K)) {
      uint64_t t = tt_.types[tau[i]];
      for (int a = 0; a < sp_.atom_count(); ++a)
        if (sp_.atoms()[a].is_name && (t >> a & 1)) dd.add_concept(sp_.atoms()[a].name, cs_[i]);
      for (size_t j = 0; j < pb_.eliqs.size(); ++j)
        if (tt_.has(tau[i], eliq_nodes_[j]))
          dd.merge(glue_copy(pb_.eliqs[j], {cs_[i]}, "~e" + std::to_string(j) + "." + cs_[i] + "."));
    }
    std::set<int> forced(seed.begin(), seed.end());
    for (int p : seed) dd.merge(inst_copy(p));
    const auto& cands = insts_of(K);
    while (true) {
      DbIndex idx(dd);
      std::vector<int> fresh;
      for (int id : cands)
        if (!forced.count(id) && inst_holds(idx, id)) fresh.push_back(id);
      if (fresh.empty()) {
        out.ok = true;
        for (int i : bits(K))
          for (size_t j = 0; j < pb_.eliqs.size() && out.ok; ++j)
            if (!tt_.has(tau[i], eliq_nodes_[j]) && has_match(idx, pb_.eliqs[j], {{pb_.eliqs[j].answer[0], cs_[i]}}))
              out.ok = false;
        for (const auto& f : pb_.forbidden)
          if (out.ok && has_match(idx, f)) out.ok = false;
        break;
      }
      for (int id : fresh) {
        forced.insert(id);
        dd.merge(inst_copy(id));
      }
    }
    out.forced.assign(forced.begin(), forced.end());
    return closures_[key] = out;
  }

  std::vector<int> within(Mask L, const std::vector<int>& forced) const {
    std::vector<int> out;
    for (int id : forced)
      if (!(insts_[id].mask & ~L)) out.push_back(id);
    return out;
  }

  int find(Mask L, const std::vector<int>& tau, const std::vector<int>& P) const {
    auto it = index_.find({L, tau, P});
    return it == index_.end() ? -1 : it->second;
  }

  int add(Mask L, std::vector<int> tau, std::vector<int> P) {
    int id = static_cast<int>(entries_.size());
    if (id >= limits().max_types)
      throw GuardError("more than " + std::to_string(limits().max_types) + " assignments");
    index_[{L, tau, P}] = id;
    valid_.insert({L, tau});
    by_tau_[{L, tau}].push_back(id);
    entries_.push_back({L, std::move(tau), std::move(P), true});
    ++alive_[L];
    ++stats().assignments;
    return id;
  }

  void init_entries(Mask L) {
    alive_[L];
    auto els = bits(L);
    std::vector<int> tau(cs_.size(), -1);
    std::function<void(size_t, Mask)> rec = [&](size_t i, Mask assigned) {
      if (i == els.size()) {
        Closure c = close(L, tau, {});
        if (c.ok) add(L, restrict(L, tau), within(L, c.forced));
        return;
      }
      int x = els[i];
      for (int t : dom_[x]) {
        if (!edges_ok(x, t, tau, assigned)) continue;
        tau[x] = t;
        rec(i + 1, assigned | Mask{1} << x);
        tau[x] = -1;
      }
    };
    rec(0, 0);
  }

  bool alive_tau(Mask L, const std::vector<int>& tau) const {
    auto it = by_tau_.find({L, tau});
    if (it == by_tau_.end()) return false;
    return std::any_of(it->second.begin(), it->second.end(), [&](int e) { return entries_[e].alive; });
  }

  bool check(int id, Mask K) {
    const Entry mu = entries_[id];
    std::vector<int> tau(cs_.size(), -1);
    auto lels = bits(mu.L);
    for (size_t i = 0; i < lels.size(); ++i) tau[lels[i]] = mu.tau[i];
    auto free = bits(K & ~mu.L);
    std::vector<Mask> sub;
    for (Mask L : ls_)
      if (!(L & ~K)) sub.push_back(L);

    std::function<bool(size_t, Mask)> rec = [&](size_t i, Mask assigned) {
      if (i == free.size()) return leaf(id, mu, K, tau, sub);
      int x = free[i];
      Mask now = assigned | Mask{1} << x;
      for (int t : dom_[x]) {
        if (!edges_ok(x, t, tau, assigned)) continue;
        tau[x] = t;
        bool ok = true;
        for (Mask L : sub) {
          if (!(L >> x & 1) || (L & ~now)) continue;
          auto r = restrict(L, tau);
          if (pb_.members.empty() ? !alive_tau(L, r) : !valid_.count({L, r})) {
            ok = false;
            break;
          }
        }
        if (ok && rec(i + 1, now)) return true;
        tau[x] = -1;
      }
      return false;
    };
    return rec(0, mu.L);
  }

  // Instantiation-level part of a choice for a fixed type map on K.
  bool leaf(int id, const Entry& mu, Mask K, const std::vector<int>& tau, const std::vector<Mask>& sub) {
    std::vector<int> seed = mu.P;
    for (int round = 0; round < 4; ++round) {
      Closure c = close(K, tau, seed);
      if (!c.ok) return false;
      auto mine = within(mu.L, c.forced);
      if (mine != mu.P) {
        if (find(mu.L, mu.tau, mine) < 0) add(mu.L, mu.tau, mine);
        return false;
      }
      std::vector<int> used, extra;
      std::vector<std::tuple<Mask, std::vector<int>, std::vector<int>>> missing;
      bool blocked = false;
      for (Mask L : sub) {
        if (L == mu.L) continue;
        auto r = restrict(L, tau);
        auto P = within(L, c.forced);
        int e = find(L, r, P);
        if (e >= 0 && entries_[e].alive) {
          used.push_back(e);
        } else if (e < 0) {
          missing.emplace_back(L, r, P);
        } else {
          // a dead entry; a larger alive one with the same types may still fit
          int best = -1;
          auto it = by_tau_.find({L, r});
          if (it != by_tau_.end())
            for (int o : it->second) {
              const auto& eo = entries_[o];
              if (eo.alive && std::includes(eo.P.begin(), eo.P.end(), P.begin(), P.end()) &&
                  (best < 0 || eo.P.size() < entries_[best].P.size()))
                best = o;
            }
          if (best < 0) {
            blocked = true;
            break;
          }
          extra.insert(extra.end(), entries_[best].P.begin(), entries_[best].P.end());
        }
      }
      if (blocked) return false;
      if (extra.empty()) {
        for (auto& [L, r, P] : missing) used.push_back(add(L, r, P));
        witness_[{id, K}] = used;
        return true;
      }
      size_t before = seed.size();
      seed.insert(seed.end(), extra.begin(), extra.end());
      std::sort(seed.begin(), seed.end());
      seed.erase(std::unique(seed.begin(), seed.end()), seed.end());
      if (seed.size() == before) return false;
    }
    return false;
  }

  const Problem& pb_;
  const TypeTable& tt_;
  TypeSpace& sp_;
  std::vector<std::string> cs_;
  std::map<std::string, int> ids_;
  Mask smask_ = 0;
  Database db_;
  std::vector<std::vector<Inc>> inc_;
  std::vector<std::vector<int>> dom_;
  std::vector<int> eliq_nodes_;
  bool needs_db_ = false;
  std::vector<Mask> ls_, ks_;

  std::deque<Entry> entries_;
  std::map<std::tuple<Mask, std::vector<int>, std::vector<int>>, int> index_;
  std::map<std::pair<Mask, std::vector<int>>, std::vector<int>> by_tau_;
  std::set<std::pair<Mask, std::vector<int>>> valid_;
  std::map<Mask, int> alive_;
  std::map<std::pair<int, Mask>, std::vector<int>> witness_;

  std::vector<Inst> insts_;
  std::map<std::string, int> inst_ids_;
  std::map<Mask, std::vector<int>> insts_of_k_;
  std::map<std::string, Closure> closures_;
};

// Entailed when no type table leaves surviving assignments, or when accept approves the survivors.
bool entailed(const Problem& pb, const std::function<bool(const Elimination&)>& accept = nullptr) {
  if (pb.l < 1 || pb.l >= pb.k) throw InputError("need 1 <= l < k");
  TypeSpace sp(*pb.onto, pb.extra, pb.global);
  auto tables = build_types(sp);
  for (const auto& tt : tables) {
    Elimination el(pb, tt, sp);
    if (el.run() && !(accept && accept(el))) return false;
  }
  return true;
}

CPtr root_concept(const CQ& p) {
  return cq_to_concept(p, p.arity() ? p.answer[0] : *p.vars().begin());
}

// Members of the query closure sorted into the three roles they play.
Problem ucq_problem(const Ontology& o, const Database& d, const std::set<std::string>& s, const UCQ& u, int l,
                    int k, bool target) {
  Problem pb;
  pb.onto = &o;
  pb.db = d;
  pb.s = s;
  pb.l = l;
  pb.k = k;
  std::set<std::string> full;
  UCQ boolean;
  for (CQ p : u) {
    p.answer.clear();
    boolean.push_back(p);
    if (target)
      for (const auto& c : contractions(p)) full.insert(cq_key(c, true));
  }
  int w = static_cast<int>(s.size());
  for (const auto& m : cl_contractions(boolean, l + w, k + w)) {
    if (m.arity() == 0) {
      if (target && is_tree_cq(m) && full.count(cq_key(m, true))) {
        CPtr c = root_concept(m);
        pb.extra.push_back(c);
        pb.global.push_back(c_not(c));
      }
    } else if (m.arity() == 1 && is_tree_cq(m)) {
      pb.eliqs.push_back(m);
      pb.extra.push_back(root_concept(m));
    } else {
      pb.members.push_back(m);
    }
  }
  if (target) pb.forbidden = boolean;
  return pb;
}

}  // namespace

bool eliminate_beliq(const OMQ& q, const Database& d, const std::set<std::string>& s, const Tuple& a, int l, int k) {
  if (!is_beliq_ucq(q.query)) throw InputError("expected a single bELIQ");
  const CQ& p = q.query[0];
  if (a.size() != p.arity()) throw InputError("answer tuple does not match the query arity");
  Problem pb;
  pb.onto = &q.onto;
  pb.db = d;
  pb.s = s;
  pb.l = l;
  pb.k = k;
  CPtr c = root_concept(p);
  pb.extra = {c};
  if (p.arity() == 1) {
    pb.target = c;
    pb.a0 = a[0];
  } else {
    pb.global = {c_not(c)};
  }
  return entailed(pb);
}

bool eliminate_ucq(const OMQ& q, const Database& d, const Tuple& a, int l, int k) {
  if (l < 1 || l >= k) throw InputError("need 1 <= l < k");
  std::set<std::string> s(a.begin(), a.end());
  const std::string fresh = "Bot_";
  CQ bot;
  bot.atoms = {{fresh, "x", ""}};
  if (eliminate_beliq({replace_bot(q.onto, fresh), {}, {bot}}, d, s, {}, l, k)) return true;

  // A contraction matters when it makes some part of a disjunct a tree hanging below an
  // answer constant, where the unraveling may satisfy it anonymously.
  UCQ qd = q.query;
  std::set<std::string> seen;
  for (const auto& p : q.query) seen.insert(cq_key(p));
  for (const auto& p : q.query) {
    std::map<std::string, size_t> pos;
    for (size_t i = 0; i < p.answer.size(); ++i) pos[p.answer[i]] = i;
    for (auto m : contractions(p)) {
      if (seen.count(cq_key(m))) continue;
      CQ rest = m;
      if (!split_pendants(rest, pos).empty() && seen.insert(cq_key(m)).second) qd.push_back(m);
    }
  }
  std::map<std::pair<std::string, size_t>, bool> cache;
  auto names = q.onto.concept_names();
  Decorated dec = decorate(qd, d, a, [&](const CQ& e, size_t i) {
    if (e.atoms.size() == 1 && !e.atoms[0].binary()) {
      const auto& name = e.atoms[0].pred;
      if (name == kTop) return true;
      if (!names.count(name) && !d.concept_names().count(name)) return false;
    }
    auto key = std::make_pair(cq_key(e), i);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    return cache[key] = eliminate_beliq(OMQ{q.onto, {}, {e}}, d, s, {a[i]}, l, k);
  });
  if (dec.verdict) return *dec.verdict;
  std::vector<std::vector<CQ>> dnf;
  for (const auto& p : dec.query) dnf.push_back(connected_components(p));
  for (const auto& conj : distribute(dnf))
    if (!entailed(ucq_problem(q.onto, dec.db, s, conj, l, k, true))) return false;
  return true;
}

bool approx_btw(const OMQ& q, const Database& d, const Tuple& a, int l, int k) {
  if (is_beliq_ucq(q.query)) return eliminate_beliq(q, d, std::set<std::string>(a.begin(), a.end()), a, l, k);
  return eliminate_ucq(q, d, a, l, k);
}

std::set<Tuple> approx_btw_answers(const OMQ& q, const Database& d, int l, int k) {
  std::set<Tuple> out;
  size_t arity = q.query.empty() ? 0 : q.query[0].arity();
  for (const auto& t : all_tuples(d, arity))
    if (approx_btw(q, d, t, l, k)) out.insert(t);
  return out;
}

namespace {

// Without an ontology the unraveling entails p exactly when some contraction of p
// of treewidth (l,k) maps into d; every copy of a constant sees the same bags.
bool hom_into_unraveling(const Database& d, const CQ& p, const Tuple& a, int l, int k) {
  if (!a.empty() && !d.adom().count(a[0])) return false;
  Database dt = d;
  for (const auto& c : d.adom()) dt.add_concept(kTop, c);
  DbIndex idx(dt);
  for (const auto& m : contractions(p)) {
    if (!has_treewidth(gaifman(m), l, k)) continue;
    std::map<std::string, std::string> fixed;
    if (!a.empty()) fixed[m.answer[0]] = a[0];
    if (has_match(idx, m, fixed)) return true;
  }
  return false;
}

}  // namespace

bool unravel_cq_entails(const Ontology& o, const Database& d, const CQ& p, const Tuple& a, int l, int k) {
  if (p.arity() > 1) throw InputError("expected a query of arity at most one");
  if (a.size() != p.arity()) throw InputError("answer tuple does not match the query arity");
  if (o.cis.empty()) return hom_into_unraveling(d, p, a, l, k);
  if (p.arity() == 0) return entailed(ucq_problem(o, d, {}, {p}, l, k, true));

  Problem pb = ucq_problem(o, d, {}, {p}, l, k, false);
  pb.a0 = a[0];  // keeps a[0] among the constants
  // p holds at a copy when p or one of its images of treewidth (l,k) does.
  std::vector<CPtr> concepts;
  std::vector<CQ> qs;
  for (const auto& m : is_tree_cq(p) ? std::vector<CQ>{p} : contractions(p)) {
    if (is_tree_cq(m)) {
      concepts.push_back(root_concept(m));
      pb.extra.push_back(concepts.back());
    } else if (has_treewidth(gaifman(m), l, k)) {
      qs.push_back(m);
      pb.members.push_back(m);
    }
  }
  return entailed(pb, [&](const Elimination& el) { return el.survivors_have(a[0], concepts, qs); });
}

}  // namespace omq
