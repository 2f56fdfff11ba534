#include "omq/querytools.h"

#include <algorithm>
#include <functional>
#include <numeric>

namespace omq {

DbIndex::DbIndex(const Database& d) {
  for (const auto& c : d.adom()) {
    ids_[c] = static_cast<int>(names_.size());
    names_.push_back(c);
  }
  int n = static_cast<int>(names_.size());
  for (const auto& f : d.cfacts) {
    if (f.name == kTop) continue;
    auto& v = unary_[f.name];
    if (v.empty()) v.assign(n, 0);
    v[ids_[f.c]] = 1;
    unary_list_[f.name].push_back(ids_[f.c]);
  }
  for (const auto& f : d.rfacts) {
    auto& o = out_[f.name];
    auto& i = in_[f.name];
    if (o.empty()) {
      o.resize(n);
      i.resize(n);
    }
    int a = ids_[f.a], b = ids_[f.b];
    o[a].push_back(b);
    i[b].push_back(a);
    pairs_[f.name].insert({a, b});
  }
}

int DbIndex::id(const std::string& c) const {
  auto it = ids_.find(c);
  return it == ids_.end() ? -1 : it->second;
}

bool DbIndex::has_unary(const std::string& p, int c) const {
  if (p == kTop) return true;
  auto it = unary_.find(p);
  return it != unary_.end() && it->second[c];
}

const std::vector<int>& DbIndex::with_unary(const std::string& p) const {
  auto it = unary_list_.find(p);
  return it == unary_list_.end() ? empty_ : it->second;
}

const std::vector<int>& DbIndex::out(const std::string& r, int c) const {
  auto it = out_.find(r);
  return it == out_.end() ? empty_ : it->second[c];
}

const std::vector<int>& DbIndex::in(const std::string& r, int c) const {
  auto it = in_.find(r);
  return it == in_.end() ? empty_ : it->second[c];
}

bool DbIndex::has_binary(const std::string& r, int a, int b) const {
  auto it = pairs_.find(r);
  return it != pairs_.end() && it->second.count({a, b});
}

namespace {

// Backtracking homomorphism search.
class Matcher {
 public:
  Matcher(const DbIndex& idx, const CQ& q) : idx_(idx), q_(q) {
    for (const auto& v : q.vars()) {
      vid_[v] = static_cast<int>(vars_.size());
      vars_.push_back(v);
    }
    val_.assign(vars_.size(), -1);
    touching_.resize(vars_.size());
    for (size_t i = 0; i < q.atoms.size(); ++i) {
      const Atom& a = q.atoms[i];
      touching_[vid_[a.x]].push_back(static_cast<int>(i));
      if (a.binary() && a.y != a.x) touching_[vid_[a.y]].push_back(static_cast<int>(i));
    }
  }

  // Assigns variables in `first` before the rest; returns false if a fixed value is absent.
  bool fix(const std::map<std::string, std::string>& fixed) {
    for (const auto& [v, c] : fixed) {
      auto it = vid_.find(v);
      if (it == vid_.end()) continue;
      int id = idx_.id(c);
      if (id < 0) return false;
      val_[it->second] = id;
    }
    for (const auto& [v, c] : fixed) {
      auto it = vid_.find(v);
      if (it == vid_.end()) continue;
      if (!check_var(it->second)) return false;
    }
    return true;
  }

  std::vector<int> plan(const std::vector<std::string>& first) {
    std::vector<int> order;
    std::vector<char> placed(vars_.size(), 0);
    for (size_t i = 0; i < vars_.size(); ++i)
      if (val_[i] >= 0) placed[i] = 1;
    auto pick = [&](const std::set<int>& allowed) {
      int best = -1;
      long best_score = -1;
      for (int v : allowed) {
        if (placed[v]) continue;
        long linked = 0, unary = 0;
        for (int ai : touching_[v]) {
          const Atom& a = q_.atoms[ai];
          if (!a.binary()) {
            if (a.pred != kTop) ++unary;
            continue;
          }
          int o = vid_[a.x] == v ? vid_[a.y] : vid_[a.x];
          if (o != v && placed[o]) ++linked;
        }
        long score = linked * 1000 + unary;
        if (score > best_score) {
          best_score = score;
          best = v;
        }
      }
      return best;
    };
    std::set<int> firsts, all;
    for (const auto& v : first)
      if (vid_.count(v)) firsts.insert(vid_[v]);
    for (size_t i = 0; i < vars_.size(); ++i) all.insert(static_cast<int>(i));
    for (;;) {
      int v = pick(firsts);
      if (v < 0) break;
      placed[v] = 1;
      order.push_back(v);
    }
    for (;;) {
      int v = pick(all);
      if (v < 0) break;
      placed[v] = 1;
      order.push_back(v);
    }
    return order;
  }

  bool check_var(int v) const {
    for (int ai : touching_[v]) {
      const Atom& a = q_.atoms[ai];
      int x = val_[vid_.at(a.x)];
      if (x < 0) continue;
      if (!a.binary()) {
        if (!idx_.has_unary(a.pred, x)) return false;
        continue;
      }
      int y = val_[vid_.at(a.y)];
      if (y < 0) continue;
      if (!idx_.has_binary(a.pred, x, y)) return false;
    }
    return true;
  }

  std::vector<int> candidates(int v) const {
    const std::vector<int>* best = nullptr;
    for (int ai : touching_[v]) {
      const Atom& a = q_.atoms[ai];
      if (!a.binary() || a.x == a.y) continue;
      int xv = vid_.at(a.x), yv = vid_.at(a.y);
      if (xv == v && val_[yv] >= 0) {
        const auto& l = idx_.in(a.pred, val_[yv]);
        if (!best || l.size() < best->size()) best = &l;
      } else if (yv == v && val_[xv] >= 0) {
        const auto& l = idx_.out(a.pred, val_[xv]);
        if (!best || l.size() < best->size()) best = &l;
      }
    }
    if (best) return *best;
    for (int ai : touching_[v]) {
      const Atom& a = q_.atoms[ai];
      if (!a.binary() && a.pred != kTop) return idx_.with_unary(a.pred);
    }
    std::vector<int> all(idx_.n());
    std::iota(all.begin(), all.end(), 0);
    return all;
  }

  bool search(const std::vector<int>& order, size_t pos) {
    if (pos == order.size()) return true;
    int v = order[pos];
    for (int c : candidates(v)) {
      val_[v] = c;
      if (check_var(v) && search(order, pos + 1)) {
        val_[v] = -1;
        return true;
      }
    }
    val_[v] = -1;
    return false;
  }

  // Enumerates assignments to the first `split` variables of order that extend to a full match.
  void enumerate(const std::vector<int>& order, size_t pos, size_t split, const std::function<void()>& emit) {
    if (pos == split) {
      std::vector<int> saved = val_;
      if (search(order, pos)) emit();
      val_ = saved;
      return;
    }
    int v = order[pos];
    for (int c : candidates(v)) {
      val_[v] = c;
      if (check_var(v)) enumerate(order, pos + 1, split, emit);
    }
    val_[v] = -1;
  }

  int value(const std::string& v) const { return val_[vid_.at(v)]; }

 private:
  const DbIndex& idx_;
  const CQ& q_;
  std::vector<std::string> vars_;
  std::map<std::string, int> vid_;
  std::vector<int> val_;
  std::vector<std::vector<int>> touching_;
};

}  // namespace

bool has_match(const DbIndex& idx, const CQ& q, const std::map<std::string, std::string>& fixed) {
  if (q.atoms.empty()) return true;
  if (idx.n() == 0) return false;
  Matcher m(idx, q);
  if (!m.fix(fixed)) return false;
  auto order = m.plan({});
  return m.search(order, 0);
}

bool has_match(const Database& d, const CQ& q, const std::map<std::string, std::string>& fixed) {
  DbIndex idx(d);
  return has_match(idx, q, fixed);
}

bool holds(const Database& d, const CQ& q, const Tuple& t) {
  std::map<std::string, std::string> fixed;
  for (size_t i = 0; i < q.answer.size(); ++i) {
    auto [it, fresh] = fixed.emplace(q.answer[i], t[i]);
    if (!fresh && it->second != t[i]) return false;
  }
  return has_match(d, q, fixed);
}

std::set<Tuple> eval_cq(const Database& d, const CQ& q) {
  std::set<Tuple> out;
  DbIndex idx(d);
  if (idx.n() == 0) {
    if (q.atoms.empty() && q.answer.empty()) out.insert({});
    return out;
  }
  Matcher m(idx, q);
  auto order = m.plan(q.answer);
  std::set<std::string> av(q.answer.begin(), q.answer.end());
  m.enumerate(order, 0, av.size(), [&] {
    Tuple t;
    for (const auto& v : q.answer) t.push_back(idx.name(m.value(v)));
    out.insert(t);
  });
  return out;
}

std::set<Tuple> eval_ucq(const Database& d, const UCQ& q) {
  std::set<Tuple> out;
  for (const auto& c : q) {
    auto r = eval_cq(d, c);
    out.insert(r.begin(), r.end());
  }
  return out;
}

namespace {

std::string atoms_string(const std::vector<Atom>& atoms) {
  std::string s;
  for (const auto& a : atoms) {
    s += a.pred;
    s += '(';
    s += a.x;
    if (a.binary()) {
      s += ',';
      s += a.y;
    }
    s += ')';
  }
  return s;
}

}  // namespace

CQ canonical(const CQ& q, bool answers_as_set) {
  auto vs_set = q.vars();
      std::vector<std::string> vs(vs_set.begin(), vs_set.end());
  std::map<std::string, int> vid;
  for (size_t i = 0; i < vs.size(); ++i) vid[vs[i]] = static_cast<int>(i);
  int n = static_cast<int>(vs.size());

  // Colour refinement; fixed answer positions are part of the initial colour.
  std::vector<std::string> colour(n);
  for (int i = 0; i < n; ++i) {
    std::string c;
    auto it = std::find(q.answer.begin(), q.answer.end(), vs[i]);
    if (it != q.answer.end())
      c = answers_as_set ? "A" : "A" + std::to_string(it - q.answer.begin());
    else
      c = "Q";
    std::vector<std::string> loc;
    for (const auto& a : q.atoms) {
      if (!a.binary() && a.x == vs[i]) loc.push_back("u" + a.pred);
      if (a.binary() && a.x == vs[i] && a.y == vs[i]) loc.push_back("l" + a.pred);
    }
    std::sort(loc.begin(), loc.end());
    for (auto& s : loc) c += "|" + s;
    colour[i] = c;
  }
  for (int round = 0; round < 3; ++round) {
    std::vector<std::string> next(n);
    for (int i = 0; i < n; ++i) {
      std::vector<std::string> nb;
      for (const auto& a : q.atoms) {
        if (!a.binary() || a.x == a.y) continue;
        if (a.x == vs[i]) nb.push_back(">" + a.pred + ":" + colour[vid[a.y]]);
        if (a.y == vs[i]) nb.push_back("<" + a.pred + ":" + colour[vid[a.x]]);
      }
      std::sort(nb.begin(), nb.end());
      std::string c = colour[i];
      for (auto& s : nb) c += "#" + s;
      next[i] = std::to_string(std::hash<std::string>{}(c));
    }
    colour = next;
  }

  // Variables that receive canonical names, grouped into colour classes.
  std::vector<int> perm_vars;
  for (int i = 0; i < n; ++i)
    if (answers_as_set || !q.is_answer(vs[i])) perm_vars.push_back(i);
  std::sort(perm_vars.begin(), perm_vars.end(), [&](int a, int b) {
    if (q.is_answer(vs[a]) != q.is_answer(vs[b])) return q.is_answer(vs[a]);
    if (colour[a] != colour[b]) return colour[a] < colour[b];
    return a < b;
  });
  std::vector<std::pair<int, int>> classes;  // [begin, end)
  for (size_t i = 0; i < perm_vars.size();) {
    size_t j = i;
    while (j < perm_vars.size() && colour[perm_vars[j]] == colour[perm_vars[i]] &&
           q.is_answer(vs[perm_vars[j]]) == q.is_answer(vs[perm_vars[i]]))
      ++j;
    classes.push_back({static_cast<int>(i), static_cast<int>(j)});
    i = j;
  }
  long budget = 1;
  for (auto [b, e] : classes)
    for (int f = 2; f <= e - b && budget <= 20000; ++f) budget *= f;
  bool exhaustive = budget <= 20000;

  std::vector<std::string> best_names;
  std::string best;
  CQ best_q;
  std::vector<int> cur = perm_vars;
  std::function<void(size_t)> rec = [&](size_t ci) {
    if (ci == classes.size()) {
      std::map<std::string, std::string> ren;
      int ai = 0, qi = 0;
      for (size_t i = 0; i < q.answer.size() && !answers_as_set; ++i) ren[q.answer[i]] = "x" + std::to_string(i);
      for (int v : cur) {
        if (q.is_answer(vs[v]))
          ren[vs[v]] = "x" + std::to_string(ai++);
        else
          ren[vs[v]] = "y" + std::to_string(qi++);
      }
      CQ r;
      for (const auto& a : q.answer) r.answer.push_back(ren[a]);
      if (answers_as_set) std::sort(r.answer.begin(), r.answer.end());
      for (auto a : q.atoms) {
        a.x = ren[a.x];
        if (a.binary()) a.y = ren[a.y];
        r.atoms.push_back(a);
      }
      r.normalize();
      std::string key = atoms_string(r.atoms);
      if (best.empty() || key < best) {
        best = key;
        best_q = r;
      }
      return;
    }
    auto [b, e] = classes[ci];
    if (!exhaustive) {
      rec(ci + 1);
      return;
    }
    std::sort(cur.begin() + b, cur.begin() + e);
    do {
      rec(ci + 1);
    } while (std::next_permutation(cur.begin() + b, cur.begin() + e));
  };
  rec(0);
  if (best_q.atoms.empty() && q.atoms.empty()) best_q.answer = q.answer;
  return best_q;
}

std::string cq_key(const CQ& q, bool answers_as_set) {
  CQ c = canonical(q, answers_as_set);
  std::string s = std::to_string(c.answer.size()) + ":";
  for (const auto& a : c.answer) s += a + ",";
  return s + ":" + atoms_string(c.atoms);
}

std::vector<CQ> contractions(const CQ& q) {
  auto vs_set = q.vars();
      std::vector<std::string> vs(vs_set.begin(), vs_set.end());
  int n = static_cast<int>(vs.size());
  std::vector<CQ> out;
  std::set<std::string> seen;
  std::vector<int> block(n, 0);
  std::function<void(int, int)> rec = [&](int i, int nblocks) {
    if (i == n) {
      std::vector<std::string> rep(nblocks);
      std::vector<int> answers_in(nblocks, 0);
      for (int j = 0; j < n; ++j) {
        if (q.is_answer(vs[j])) {
          if (answers_in[block[j]]++) return;
          rep[block[j]] = vs[j];
        }
      }
      for (int j = 0; j < n; ++j)
        if (rep[block[j]].empty()) rep[block[j]] = vs[j];
      CQ c;
      c.answer = q.answer;
      for (auto a : q.atoms) {
        a.x = rep[block[std::find(vs.begin(), vs.end(), a.x) - vs.begin()]];
        if (a.binary()) a.y = rep[block[std::find(vs.begin(), vs.end(), a.y) - vs.begin()]];
        c.atoms.push_back(a);
      }
      c.normalize();
      if (seen.insert(cq_key(c)).second) out.push_back(c);
      return;
    }
    for (int b = 0; b <= nblocks; ++b) {
      block[i] = b;
      rec(i + 1, std::max(nblocks, b + 1));
    }
  };
  rec(0, 0);
  return out;
}

namespace {

struct UF {
  std::map<std::string, std::string> p;
  std::string find(const std::string& x) {
    auto it = p.find(x);
    if (it == p.end() || it->second == x) {
      p[x] = x;
      return x;
    }
    std::string r = find(it->second);
    p[x] = r;
    return r;
  }
  bool unite(const std::string& a, const std::string& b) {
    std::string x = find(a), y = find(b);
    if (x == y) return false;
    p[x] = y;
    return true;
  }
};

// Forest test on the graph induced by the given variables.
bool forest_on(const CQ& q, const std::set<std::string>& vs) {
  UF uf;
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& a : q.atoms) {
    if (!a.binary() || !vs.count(a.x) || !vs.count(a.y)) continue;
    if (a.x == a.y) return false;
    auto pr = std::minmax(a.x, a.y);
    if (!pairs.insert(pr).second) return false;
    if (!uf.unite(a.x, a.y)) return false;
  }
  return true;
}

}  // namespace

bool quantified_part_is_forest(const CQ& q) { return forest_on(q, q.quantified()); }

bool is_connected(const CQ& q) {
  auto vs = q.vars();
  if (vs.empty()) return true;
  UF uf;
  for (const auto& v : vs) uf.find(v);
  for (const auto& a : q.atoms)
    if (a.binary()) uf.unite(a.x, a.y);
  std::set<std::string> roots;
  for (const auto& v : vs) roots.insert(uf.find(v));
  return roots.size() == 1;
}

bool is_tree_cq(const CQ& q) { return !q.vars().empty() && is_connected(q) && forest_on(q, q.vars()); }
bool is_eliq(const CQ& q) { return q.arity() == 1 && is_tree_cq(q); }
bool is_beliq(const CQ& q) { return q.arity() <= 1 && is_tree_cq(q); }
bool is_beliq_ucq(const UCQ& q) { return q.size() == 1 && is_beliq(q[0]); }

namespace {
CPtr roll(const CQ& q, const std::string& v, const std::string& parent) {
  std::vector<CPtr> parts;
  for (const auto& a : q.atoms) {
    if (!a.binary()) {
      if (a.x == v && a.pred != kTop) parts.push_back(c_name(a.pred));
      continue;
    }
    if (a.x == a.y) throw InputError("query is not tree-shaped");
    if (a.x == v && a.y != parent) parts.push_back(c_exists(Role::named(a.pred), roll(q, a.y, v)));
    if (a.y == v && a.x != parent) parts.push_back(c_exists(Role::named(a.pred, true), roll(q, a.x, v)));
  }
  return c_and_all(parts);
}
}  // namespace

CPtr cq_to_concept(const CQ& q, const std::string& root) {
  if (!is_tree_cq(q)) throw InputError("query is not tree-shaped");
  return roll(q, root, "");
}

CPtr beliq_concept(const CQ& q) {
  if (!is_beliq(q)) throw InputError("query is not a bELIQ");
  if (q.arity() == 1) return cq_to_concept(q, q.answer[0]);
  return c_exists(Role::u(), cq_to_concept(q, *q.vars().begin()));
}

std::optional<CQ> concept_to_cq(const CPtr& c) {
  CQ q;
  int fresh = 0;
  std::function<bool(const CPtr&, const std::string&)> go = [&](const CPtr& x, const std::string& v) -> bool {
    switch (x->kind) {
      case CK::Top: return true;
      case CK::Name: q.atoms.push_back({x->name, v, ""}); return true;
      case CK::And: return go(x->a, v) && go(x->b, v);
      case CK::Exists: {
        if (x->role.universal) return false;
        std::string w = "y" + std::to_string(fresh++);
        if (x->role.inv)
          q.atoms.push_back({x->role.name, w, v});
        else
          q.atoms.push_back({x->role.name, v, w});
        q.atoms.push_back({kTop, w, ""});
        return go(x->a, w);
      }
      default: return false;
    }
  };
  if (!go(c, "x")) return std::nullopt;
  q.atoms.push_back({kTop, "x", ""});
  q.answer = {"x"};
  // top atoms are only kept where a variable would otherwise be missing
  std::set<std::string> covered;
  for (const auto& a : q.atoms)
    if (a.pred != kTop) {
      covered.insert(a.x);
      if (a.binary()) covered.insert(a.y);
    }
  std::vector<Atom> kept;
  for (const auto& a : q.atoms)
    if (a.pred != kTop || !covered.count(a.x)) kept.push_back(a);
  q.atoms = kept;
  q.normalize();
  return q;
}

CQ induced_subquery(const CQ& q, const std::set<std::string>& vs) {
  CQ r;
  for (const auto& a : q.answer)
    if (vs.count(a)) r.answer.push_back(a);
  for (const auto& a : q.atoms)
    if (vs.count(a.x) && (!a.binary() || vs.count(a.y))) r.atoms.push_back(a);
  r.normalize();
  return r;
}

std::vector<CQ> connected_components(const CQ& q) {
  UF uf;
  auto vs = q.vars();
  for (const auto& v : vs) uf.find(v);
  for (const auto& a : q.atoms)
    if (a.binary()) uf.unite(a.x, a.y);
  std::map<std::string, std::set<std::string>> groups;
  for (const auto& v : vs) groups[uf.find(v)].insert(v);
  std::vector<CQ> out;
  for (const auto& [r, g] : groups) out.push_back(induced_subquery(q, g));
  return out;
}

Database canonical_db(const CQ& q, const std::string& prefix) {
  Database d;
  for (const auto& a : q.atoms) {
    if (a.binary())
      d.add_role(a.pred, prefix + a.x, prefix + a.y);
    else
      d.add_concept(a.pred, prefix + a.x);
  }
  return d;
}

Database glue_copy(const CQ& p, const Tuple& at, const std::string& prefix) {
  std::map<std::string, std::string> ren;
  for (size_t i = 0; i < p.answer.size(); ++i) ren[p.answer[i]] = at[i];
  auto name = [&](const std::string& v) {
    auto it = ren.find(v);
    return it == ren.end() ? prefix + v : it->second;
  };
  Database d;
  for (const auto& a : p.atoms) {
    if (a.binary())
      d.add_role(a.pred, name(a.x), name(a.y));
    else
      d.add_concept(a.pred, name(a.x));
  }
  return d;
}

Graph gaifman(const Database& d) {
  Graph g;
  g.nodes = d.adom();
  for (const auto& f : d.rfacts)
    if (f.a != f.b) g.edges.insert(std::minmax(f.a, f.b));
  return g;
}

Graph gaifman(const CQ& q) {
  Graph g;
  g.nodes = q.vars();
  for (const auto& a : q.atoms)
    if (a.binary() && a.x != a.y) g.edges.insert(std::minmax(a.x, a.y));
  return g;
}

namespace {

// Biconnected components (vertex sets) plus isolated vertices.
std::vector<std::set<std::string>> blocks(const Graph& g) {
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& v : g.nodes) adj[v];
  for (const auto& [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::map<std::string, int> disc, low;
  std::vector<std::pair<std::string, std::string>> stack;
  std::vector<std::set<std::string>> out;
  int timer = 0;
  std::function<void(const std::string&, const std::string&)> dfs = [&](const std::string& u, const std::string& parent) {
    disc[u] = low[u] = timer++;
    for (const auto& w : adj[u]) {
      if (!disc.count(w)) {
        stack.push_back({u, w});
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          std::set<std::string> comp;
          for (;;) {
            auto e = stack.back();
            stack.pop_back();
            comp.insert(e.first);
            comp.insert(e.second);
            if (e == std::make_pair(u, w)) break;
          }
          out.push_back(comp);
        }
      } else if (w != parent && disc[w] < disc[u]) {
        stack.push_back({u, w});
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  for (const auto& v : g.nodes) {
    if (disc.count(v)) continue;
    if (adj[v].empty()) {
      disc[v] = timer++;
      out.push_back({v});
      continue;
    }
    dfs(v, "");
  }
  return out;
}

std::optional<TreeDecomposition> decompose_l1(const Graph& g, int k) {
  TreeDecomposition td;
  td.l = 1;
  td.k = k;
  auto bs = blocks(g);
  for (const auto& b : bs)
    if (static_cast<int>(b.size()) > k) return std::nullopt;
  td.bags = bs;
  // Chain the blocks sharing each vertex, then join the remaining pieces.
  std::map<std::string, std::vector<int>> holding;
  for (size_t i = 0; i < bs.size(); ++i)
    for (const auto& v : bs[i]) holding[v].push_back(static_cast<int>(i));
  std::vector<int> comp(bs.size());
  std::iota(comp.begin(), comp.end(), 0);
  std::function<int(int)> find = [&](int x) { return comp[x] == x ? x : comp[x] = find(comp[x]); };
  for (const auto& [v, hs] : holding)
    for (size_t i = 1; i < hs.size(); ++i) {
      td.edges.push_back({hs[i - 1], hs[i]});
      comp[find(hs[i])] = find(hs[i - 1]);
    }
  for (size_t i = 1; i < bs.size(); ++i)
    if (find(static_cast<int>(i)) != find(0)) {
      td.edges.push_back({0, static_cast<int>(i)});
      comp[find(static_cast<int>(i))] = find(0);
    }
  return td;
}

struct GeneralSearch {
  int n, l, k;
  std::vector<unsigned> adj;
  std::map<std::pair<unsigned, unsigned>, std::optional<TreeDecomposition>> memo;
  std::vector<std::string> names;

  static int pop(unsigned x) { return __builtin_popcount(x); }

  std::vector<unsigned> components(unsigned vs) const {
    std::vector<unsigned> out;
    unsigned left = vs;
    while (left) {
      unsigned start = left & (~left + 1);
      unsigned comp = start, frontier = start;
      while (frontier) {
        unsigned nxt = 0;
        for (int i = 0; i < n; ++i)
          if (frontier >> i & 1) nxt |= adj[i];
        nxt &= vs & ~comp;
        comp |= nxt;
        frontier = nxt;
      }
      out.push_back(comp);
      left &= ~comp;
    }
    return out;
  }

  std::optional<TreeDecomposition> solve(unsigned vs, unsigned req) {
    auto key = std::make_pair(vs, req);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    memo[key] = std::nullopt;
    std::optional<TreeDecomposition> result;
    unsigned free = vs & ~req;
    // Enumerate root bags B with req ⊆ B ⊆ vs and |B| <= k, larger first.
    std::vector<unsigned> cands;
    for (unsigned sub = free;; sub = (sub - 1) & free) {
      if (pop(sub | req) <= k && (sub | req)) cands.push_back(sub | req);
      if (!sub) break;
    }
    std::sort(cands.begin(), cands.end(), [](unsigned a, unsigned b) { return pop(a) > pop(b); });
    for (unsigned bag : cands) {
      TreeDecomposition td;
      td.bags.push_back(to_set(bag));
      bool ok = true;
      for (unsigned comp : components(vs & ~bag)) {
        unsigned nb = 0;
        for (int i = 0; i < n; ++i)
          if (comp >> i & 1) nb |= adj[i];
        nb &= bag;
        if (pop(nb) > l) {
          ok = false;
          break;
        }
        auto sub = solve(comp | nb, nb);
        if (!sub) {
          ok = false;
          break;
        }
        int off = static_cast<int>(td.bags.size());
        for (auto& b : sub->bags) td.bags.push_back(b);
        for (auto [x, y] : sub->edges) td.edges.push_back({x + off, y + off});
        td.edges.push_back({0, off});
      }
      if (ok) {
        result = td;
        break;
      }
    }
    memo[key] = result;
    return result;
  }

  std::set<std::string> to_set(unsigned m) const {
    std::set<std::string> s;
    for (int i = 0; i < n; ++i)
      if (m >> i & 1) s.insert(names[i]);
    return s;
  }
};

}  // namespace

std::optional<TreeDecomposition> find_tree_decomposition(const Graph& g, int l, int k, int max_elements) {
  if (l < 1 || l >= k) throw InputError("treewidth parameters need 1 <= l < k");
  if (g.nodes.empty()) return TreeDecomposition{{}, {}, l, k};
  if (l == 1) return decompose_l1(g, k);
  if (static_cast<int>(g.nodes.size()) > max_elements)
    throw GuardError("tree decomposition search limited to " + std::to_string(max_elements) + " elements");
  GeneralSearch s;
  s.n = static_cast<int>(g.nodes.size());
  s.l = l;
  s.k = k;
  s.names.assign(g.nodes.begin(), g.nodes.end());
  s.adj.assign(s.n, 0);
  std::map<std::string, int> id;
  for (int i = 0; i < s.n; ++i) id[s.names[i]] = i;
  for (const auto& [a, b] : g.edges) {
    s.adj[id[a]] |= 1u << id[b];
    s.adj[id[b]] |= 1u << id[a];
  }
  std::optional<TreeDecomposition> td;
  TreeDecomposition all;
  for (unsigned comp : s.components((s.n == 32 ? 0u : (1u << s.n)) - 1)) {
    auto sub = s.solve(comp, 0);
    if (!sub) return std::nullopt;
    int off = static_cast<int>(all.bags.size());
    for (auto& b : sub->bags) all.bags.push_back(b);
    for (auto [x, y] : sub->edges) all.edges.push_back({x + off, y + off});
    if (off > 0) all.edges.push_back({0, off});
  }
  all.l = l;
  all.k = k;
  return all;
}

bool valid_decomposition(const Graph& g, const TreeDecomposition& td) {
  int n = static_cast<int>(td.bags.size());
  if (g.nodes.empty()) return true;
  if (n == 0) return false;
  if (static_cast<int>(td.edges.size()) != n - 1) return false;
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : td.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (const auto& b : td.bags)
    if (static_cast<int>(b.size()) > td.k) return false;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int common = 0;
      for (const auto& v : td.bags[i]) common += td.bags[j].count(v);
      if (common > td.l) return false;
    }
  for (const auto& [a, b] : g.edges) {
    bool covered = false;
    for (const auto& bag : td.bags) covered |= bag.count(a) && bag.count(b);
    if (!covered) return false;
  }
  // Tree connectivity and connected occurrence sets.
  auto connected = [&](const std::vector<int>& nodes) {
    if (nodes.empty()) return false;
    std::set<int> want(nodes.begin(), nodes.end()), seen{nodes[0]};
    std::vector<int> st{nodes[0]};
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      for (int y : adj[x])
        if (want.count(y) && seen.insert(y).second) st.push_back(y);
    }
    return seen.size() == want.size();
  };
  std::vector<int> all(n);
  std::iota(all.begin(), all.end(), 0);
  if (!connected(all)) return false;
  for (const auto& v : g.nodes) {
    std::vector<int> occ;
    for (int i = 0; i < n; ++i)
      if (td.bags[i].count(v)) occ.push_back(i);
    if (!connected(occ)) return false;
  }
  return true;
}

bool has_treewidth(const Graph& g, int l, int k) { return find_tree_decomposition(g, l, k).has_value(); }

std::vector<CQ> contraction_closure_qc(const CQ& q) {
  std::vector<CQ> out;
  for (auto& c : contractions(q))
    if (quantified_part_is_forest(c)) out.push_back(c);
  return out;
}

std::vector<CQ> trees_closure(const CQ& q, int k_prime, const std::set<std::string>& sig_concepts) {
  CQ bq = q;
  bq.answer.clear();
  std::vector<CQ> out;
  std::set<std::string> seen;
  auto add = [&](const CQ& c) {
    if (seen.insert(cq_key(c)).second) out.push_back(c);
  };
  for (const auto& c : contractions(bq)) {
    auto vs_set = c.vars();
    std::vector<std::string> vs(vs_set.begin(), vs_set.end());
    int n = static_cast<int>(vs.size());
    for (unsigned m = 1; m < (1u << n); ++m) {
      std::set<std::string> sub;
      for (int i = 0; i < n; ++i)
        if (m >> i & 1) sub.insert(vs[i]);
      CQ s = induced_subquery(c, sub);
      if (s.atoms.empty() || s.vars() != sub || !is_connected(s)) continue;
      bool shape = k_prime < 0 ? is_tree_cq(s) : has_treewidth(gaifman(s), 1, std::max(2, k_prime));
      if (k_prime == 1) shape = shape && s.vars().size() == 1;
      if (!shape) continue;
      add(s);
      for (const auto& v : sub) {
        CQ u = s;
        u.answer = {v};
        add(u);
      }
    }
  }
  for (const auto& a : sig_concepts) {
    CQ aq;
    aq.answer = {"x"};
    aq.atoms = {{a, "x", ""}};
    add(aq);
  }
  return out;
}

std::vector<CQ> cl_contractions(const UCQ& q, int l, int k, size_t max_size) {
  std::vector<CQ> out;
  std::set<std::string> seen;
  for (CQ d : q) {
    d.answer.clear();
    for (const auto& c : contractions(d)) {
      if (!has_treewidth(gaifman(c), l, k)) continue;
      auto vs_set = c.vars();
      std::vector<std::string> vs(vs_set.begin(), vs_set.end());
      int n = static_cast<int>(vs.size());
      for (unsigned m = 1; m < (1u << n); ++m) {
        std::set<std::string> sub;
        for (int i = 0; i < n; ++i)
          if (m >> i & 1) sub.insert(vs[i]);
        CQ s = induced_subquery(c, sub);
        if (s.atoms.empty() || s.vars() != sub || !is_connected(s)) continue;
        std::vector<std::string> sv(sub.begin(), sub.end());
        for (unsigned am = 0; am < (1u << sv.size()); ++am) {
          CQ u = s;
          u.answer.clear();
          for (size_t i = 0; i < sv.size(); ++i)
            if (am >> i & 1) u.answer.push_back(sv[i]);
          CQ cu = canonical(u, true);
          if (seen.insert(cq_key(cu, true)).second) {
            out.push_back(cu);
            if (out.size() > max_size) throw GuardError("query closure exceeds " + std::to_string(max_size));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace omq
