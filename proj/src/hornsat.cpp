#include "omq/hornsat.h"

#include <algorithm>
#include <fstream>
#include <functional>
#include <map>

#include "omq/config.h"
#include "omq/typesat.h"

namespace omq {

void HornFormula::add(std::vector<int> body, int head) {
  std::sort(body.begin(), body.end());
  body.erase(std::unique(body.begin(), body.end()), body.end());
  clauses.push_back({std::move(body), head});
}

std::string HornFormula::dump() const {
  std::string s;
  for (const auto& c : clauses) {
    for (size_t i = 0; i < c.body.size(); ++i) {
      if (i) s += '-';
      s += std::to_string(c.body[i]);
    }
    s += '>';
    s += c.head < 0 ? "F" : std::to_string(c.head);
    s += '\n';
  }
  return s;
}

HornResult horn_solve(const HornFormula& f) {
  HornResult r;
  r.model.assign(f.nvars, 0);
  std::vector<int> missing(f.clauses.size());
  std::vector<std::vector<int>> watch(f.nvars);
  std::vector<int> queue;
  auto fire = [&](int ci) {
    int h = f.clauses[ci].head;
    if (h < 0) return false;
    if (!r.model[h]) {
      r.model[h] = 1;
      queue.push_back(h);
    }
    return true;
  };
  for (size_t i = 0; i < f.clauses.size(); ++i) {
    missing[i] = static_cast<int>(f.clauses[i].body.size());
    for (int v : f.clauses[i].body) watch[v].push_back(static_cast<int>(i));
  }
  for (size_t i = 0; i < f.clauses.size(); ++i)
    if (missing[i] == 0 && !fire(static_cast<int>(i))) {
      r.sat = false;
      return r;
    }
  while (!queue.empty()) {
    int v = queue.back();
    queue.pop_back();
    for (int ci : watch[v])
      if (--missing[ci] == 0 && !fire(ci)) {
        r.sat = false;
        return r;
      }
  }
  return r;
}

namespace {

struct Query {
  CPtr eliq;  // null if none
  std::vector<CPtr> beliqs;
};

Query to_concepts(const UCQ& q) {
  Query out;
  for (const auto& p : q) {
    if (!is_beliq(p)) throw InputError("expected a disjunction of bELIQs");
    if (p.arity() == 1) {
      if (out.eliq) throw InputError("at most one ELIQ disjunct is supported");
      out.eliq = cq_to_concept(p, p.answer[0]);
    } else {
      out.beliqs.push_back(c_exists(Role::u(), cq_to_concept(p, *p.vars().begin())));
    }
  }
  return out;
}

void dump_formula(const HornFormula& f) {
  const auto& path = limits().dump_horn;
  if (path.empty()) return;
  std::ofstream out(path, std::ios::app);
  out << f.dump();
}

// Tables in which the BELIQ disjuncts are all false.
std::vector<const TypeTable*> usable(const std::vector<TypeTable>& tables, TypeSpace& sp, const std::vector<CPtr>& beliqs) {
  uint64_t mask = 0;
  for (const auto& b : beliqs) {
    int n = sp.node(b);
    const auto& node = sp.nodes()[n];
    if (node.k == TypeSpace::Node::Atom) mask |= uint64_t{1} << node.a;
    if (node.k == TypeSpace::Node::Top) return {};
  }
  std::vector<const TypeTable*> out;
  for (const auto& t : tables)
    if (!(t.u_guess & mask)) out.push_back(&t);
  return out;
}

}  // namespace

bool unravel_entails(const UCQ& q, const Ontology& o, const Database& d, const Tuple& a, const std::set<std::string>& s) {
  Query qc = to_concepts(q);
  if (qc.eliq && a.size() != 1) throw InputError("an ELIQ needs one answer constant");
  std::vector<CPtr> extra = qc.beliqs;
  if (qc.eliq) extra.push_back(qc.eliq);
  TypeSpace sp(o, extra);
  int target = qc.eliq ? sp.node(qc.eliq) : -1;
  std::string a0 = qc.eliq ? a[0] : "";

  Database dd = d;
  for (const auto& c : s) dd.add_concept(kTop, c);
  if (qc.eliq) dd.add_concept(kTop, a0);
  DbIndex idx(dd);
  std::vector<int> sv, nv;
  for (int i = 0; i < idx.n(); ++i) (s.count(idx.name(i)) ? sv : nv).push_back(i);

  auto tables = build_types(sp);
  for (const TypeTable* tt : usable(tables, sp, qc.beliqs)) {
    std::vector<std::vector<int>> cand(idx.n());
    for (int i = 0; i < idx.n(); ++i) cand[i] = tt->candidates(dd, idx.name(i));
    // edges: incident (role, other, forward)
    struct Inc {
      std::string r;
      int other;
      bool fwd;
    };
    std::vector<std::vector<Inc>> inc(idx.n());
    for (const auto& f : dd.rfacts) {
      int x = idx.id(f.a), y = idx.id(f.b);
      inc[x].push_back({f.name, y, true});
      inc[y].push_back({f.name, x, false});
    }
    auto edge_ok = [&](const Inc& e, int t_self, int t_other) {
      return e.fwd ? tt->compat(e.r, t_self, t_other) : tt->compat(e.r, t_other, t_self);
    };

    // S-assignments satisfying the fact, edge and target conditions.
    std::vector<std::vector<int>> sassign;
    std::vector<int> cur(idx.n(), -1);
    std::function<void(size_t)> rec = [&](size_t i) {
      if (i == sv.size()) {
        std::vector<int> m;
        for (int c : sv) m.push_back(cur[c]);
        sassign.push_back(m);
        return;
      }
      int c = sv[i];
      for (int t : cand[c]) {
        if (target >= 0 && idx.name(c) == a0 && tt->has(t, target)) continue;
        bool ok = true;
        for (const auto& e : inc[c]) {
          if (e.other == c) ok = ok && edge_ok(e, t, t);
          else if (cur[e.other] >= 0 && s.count(idx.name(e.other))) ok = ok && edge_ok(e, t, cur[e.other]);
        }
        if (!ok) continue;
        cur[c] = t;
        rec(i + 1);
        cur[c] = -1;
      }
    };
    rec(0);
    stats().assignments += static_cast<long>(sassign.size());

    HornFormula f;
    std::vector<int> pS;
    // ext[m][a] = (type, var) pairs
    std::vector<std::map<int, std::vector<std::pair<int, int>>>> ext(sassign.size());
    for (size_t m = 0; m < sassign.size(); ++m) {
      pS.push_back(f.var());
      for (size_t i = 0; i < sv.size(); ++i) cur[sv[i]] = sassign[m][i];
      for (int c : nv) {
        auto& lst = ext[m][c];
        for (int t : cand[c]) {
          bool ok = true;
          for (const auto& e : inc[c])
            if (s.count(idx.name(e.other))) ok = ok && edge_ok(e, t, cur[e.other]);
          if (ok) lst.push_back({t, f.var()});
        }
        stats().assignments += static_cast<long>(lst.size());
      }
      for (int c : sv) cur[c] = -1;
    }
    for (size_t m = 0; m < sassign.size(); ++m) {
      for (int c : nv) {
        const auto& mine = ext[m][c];
        // family 1: transfer along edges between unfixed constants
        for (const auto& e : inc[c]) {
          if (s.count(idx.name(e.other))) continue;
          const auto& theirs = ext[m][e.other];
          for (const auto& [t, v] : mine) {
            std::vector<int> body;
            for (const auto& [t2, v2] : theirs)
              if (edge_ok(e, t, t2)) body.push_back(v2);
            f.add(body, v);
          }
        }
        // family 2: projection to the S-assignment
        std::vector<int> all;
        for (const auto& [t, v] : mine) all.push_back(v);
        f.add(all, pS[m]);
        // family 3: expansion from the S-assignment
        for (const auto& [t, v] : mine) f.add({pS[m]}, v);
        if (target >= 0 && idx.name(c) == a0) {
          std::vector<int> body;
          for (const auto& [t, v] : mine)
            if (!tt->has(t, target)) body.push_back(v);
          f.add(body, pS[m]);
        }
      }
    }
    f.add(pS, -1);
    stats().horn_vars += f.nvars;
    dump_formula(f);
    if (horn_solve(f).sat) return false;
  }
  return true;
}

namespace {

// Root-level possible types per constant for every usable table; calls visit(table, gfp).
void unravel_tables(const CQ& q, const Ontology& o, const Database& d,
                    const std::function<void(const TypeTable&, TypeSpace&, const DbIndex&,
                                             const std::vector<std::vector<int>>&)>& visit,
                    const std::vector<CPtr>& beliqs, const CPtr& target_concept) {
  TypeSpace sp(o, {target_concept});
  DbIndex idx(d);
  auto tables = build_types(sp);
  for (const TypeTable* tt : usable(tables, sp, beliqs)) {
    std::vector<std::vector<int>> cand(idx.n());
    for (int i = 0; i < idx.n(); ++i) cand[i] = tt->candidates(d, idx.name(i));
    stats().assignments += idx.n();
    auto gfp = arc_consistent(*tt, d, idx, cand, true);
    if (idx.n() > 0 && gfp.empty()) continue;
    visit(*tt, sp, idx, gfp);
  }
  (void)q;
}

}  // namespace

std::set<std::string> eliq_unravel_answers(const CQ& q, const Ontology& o, const Database& d) {
  if (!is_eliq(q)) throw InputError("expected an ELIQ");
  CPtr c = cq_to_concept(q, q.answer[0]);
  std::set<std::string> out = d.adom();
  unravel_tables(
      q, o, d,
      [&](const TypeTable& tt, TypeSpace& sp, const DbIndex& idx, const std::vector<std::vector<int>>& gfp) {
        int n = sp.node(c);
        for (int i = 0; i < idx.n(); ++i)
          for (int t : gfp[i])
            if (!tt.has(t, n)) {
              out.erase(idx.name(i));
              break;
            }
      },
      {}, c);
  return out;
}

bool beliq_unravel_entails(const CQ& q, const Ontology& o, const Database& d) {
  if (!is_beliq(q) || q.arity() != 0) throw InputError("expected a BELIQ");
  CPtr c = c_exists(Role::u(), cq_to_concept(q, *q.vars().begin()));
  bool entailed = true;
  unravel_tables(
      q, o, d, [&](const TypeTable&, TypeSpace&, const DbIndex&, const std::vector<std::vector<int>>&) { entailed = false; },
      {c}, c);
  return entailed;
}

}  // namespace omq
