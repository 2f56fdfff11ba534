#include "omq/typesat.h"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

#include "omq/config.h"

namespace omq {

int TypeSpace::intern(Node n) {
  auto key = std::make_tuple(static_cast<int>(n.k), n.a, n.b);
  auto it = node_ids_.find(key);
  if (it != node_ids_.end()) return it->second;
  int id = static_cast<int>(nodes_.size());
  nodes_.push_back(n);
  node_ids_[key] = id;
  return id;
}

int TypeSpace::atom_for(AtomInfo info, bool allow_new) {
  std::string key = info.is_name ? "N:" + info.name : "E:" + info.role.str() + ":" + std::to_string(info.filler);
  auto it = atom_ids_.find(key);
  if (it != atom_ids_.end()) return it->second;
  if (!allow_new) throw std::logic_error("concept outside the type closure");
  int id = static_cast<int>(atoms_.size());
  atoms_.push_back(info);
  atom_ids_[key] = id;
  return id;
}

int TypeSpace::core(const CPtr& c, bool allow_new) {
  auto neg = [&](int x) {
    const Node& n = nodes_[x];
    if (n.k == Node::Not) return n.a;
    if (n.k == Node::Top) return intern({Node::Bot});
    if (n.k == Node::Bot) return intern({Node::Top});
    return intern({Node::Not, x});
  };
  auto conj = [&](int x, int y) {
    if (nodes_[x].k == Node::Bot || nodes_[y].k == Node::Bot) return intern({Node::Bot});
    if (nodes_[x].k == Node::Top) return y;
    if (nodes_[y].k == Node::Top) return x;
    if (x == y) return x;
    return intern({Node::And, std::min(x, y), std::max(x, y)});
  };
  switch (c->kind) {
    case CK::Top: return intern({Node::Top});
    case CK::Bot: return intern({Node::Bot});
    case CK::Name: {
      if (c->name == kTop) return intern({Node::Top});
      AtomInfo a;
      a.is_name = true;
      a.name = c->name;
      return intern({Node::Atom, atom_for(a, allow_new)});
    }
    case CK::Not: return neg(core(c->a, allow_new));
    case CK::And: return conj(core(c->a, allow_new), core(c->b, allow_new));
    case CK::Or: return neg(conj(neg(core(c->a, allow_new)), neg(core(c->b, allow_new))));
    case CK::Exists: {
      int f = core(c->a, allow_new);
      if (nodes_[f].k == Node::Bot) return intern({Node::Bot});
      AtomInfo a;
      a.role = c->role;
      a.filler = f;
      return intern({Node::Atom, atom_for(a, allow_new)});
    }
    case CK::Forall: {
      int f = neg(core(c->a, allow_new));
      if (nodes_[f].k == Node::Bot) return intern({Node::Top});
      AtomInfo a;
      a.role = c->role;
      a.filler = f;
      return neg(intern({Node::Atom, atom_for(a, allow_new)}));
    }
  }
  return -1;
}

TypeSpace::TypeSpace(const Ontology& o, const std::vector<CPtr>& extra, const std::vector<CPtr>& global) {
  for (const auto& ci : o.cis) constraints_.push_back(core(c_imp(ci.lhs, ci.rhs), true));
  for (const auto& g : global) constraints_.push_back(core(g, true));
  for (const auto& e : extra) core(e, true);
  for (size_t i = 0; i < atoms_.size(); ++i) {
    const auto& a = atoms_[i];
    if (a.is_name || !a.role.universal) continue;
    int at = intern({Node::Atom, static_cast<int>(i)});
    int f = a.filler;
    // C implies exists u.C
    int bad = intern({Node::And, std::min(f, intern({Node::Not, at})), std::max(f, intern({Node::Not, at}))});
    constraints_.push_back(intern({Node::Not, bad}));
  }
  if (static_cast<int>(atoms_.size()) > limits().max_closure)
    throw GuardError("type closure has " + std::to_string(atoms_.size()) + " atoms, limit " +
                     std::to_string(limits().max_closure));
}

int TypeSpace::node(const CPtr& c) { return core(c, false); }

bool TypeSpace::eval(uint64_t t, int n) const {
  const Node& x = nodes_[n];
  switch (x.k) {
    case Node::Top: return true;
    case Node::Bot: return false;
    case Node::Atom: return t >> x.a & 1;
    case Node::Not: return !eval(t, x.a);
    case Node::And: return eval(t, x.a) && eval(t, x.b);
  }
  return false;
}

int TypeSpace::name_atom(const std::string& n) const {
  auto it = atom_ids_.find("N:" + n);
  return it == atom_ids_.end() ? -1 : it->second;
}

int TypeSpace::u_atom_of(int filler) const {
  auto it = atom_ids_.find("E:u:" + std::to_string(filler));
  return it == atom_ids_.end() ? -1 : it->second;
}

std::string TypeSpace::atom_string(int i) const {
  const auto& a = atoms_[i];
  if (a.is_name) return a.name;
  return "exists " + a.role.str() + ".#" + std::to_string(a.filler);
}

bool TypeTable::compat(const std::string& r, int i, int j) const {
  auto f = need_fwd.find(r);
  if (f == need_fwd.end()) return true;
  const auto& inv = need_inv.at(r);
  return (f->second[j] & ~types[i]) == 0 && (inv[i] & ~types[j]) == 0;
}

std::vector<int> TypeTable::candidates(const Database& d, const std::string& c) const {
  std::vector<int> need;
  for (const auto& f : d.cfacts) {
    if (f.c != c || f.name == kTop) continue;
    int a = space->name_atom(f.name);
    if (a >= 0) need.push_back(a);
  }
  uint64_t mask = 0;
  for (int a : need) mask |= uint64_t{1} << a;
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if ((types[i] & mask) == mask) out.push_back(i);
  return out;
}

namespace {

// Three-valued evaluation over a partial assignment.
int eval3(const std::vector<TypeSpace::Node>& nodes, uint64_t known, uint64_t val, int n) {
  const auto& x = nodes[n];
  switch (x.k) {
    case TypeSpace::Node::Top: return 1;
    case TypeSpace::Node::Bot: return 0;
    case TypeSpace::Node::Atom:
      if (!(known >> x.a & 1)) return 2;
      return static_cast<int>(val >> x.a & 1);
    case TypeSpace::Node::Not: {
      int v = eval3(nodes, known, val, x.a);
      return v == 2 ? 2 : 1 - v;
    }
    case TypeSpace::Node::And: {
      int l = eval3(nodes, known, val, x.a);
      if (l == 0) return 0;
      int r = eval3(nodes, known, val, x.b);
      if (r == 0) return 0;
      return (l == 1 && r == 1) ? 1 : 2;
    }
  }
  return 2;
}

std::map<std::string, std::pair<std::vector<uint64_t>, std::vector<uint64_t>>> need_masks(
    const TypeSpace& sp, const std::vector<uint64_t>& types) {
  std::map<std::string, std::pair<std::vector<uint64_t>, std::vector<uint64_t>>> out;
  const auto& atoms = sp.atoms();
  for (size_t i = 0; i < atoms.size(); ++i) {
    const auto& a = atoms[i];
    if (a.is_name || a.role.universal) continue;
    auto& slot = out[a.role.name];
    slot.first.resize(types.size(), 0);
    slot.second.resize(types.size(), 0);
    for (size_t t = 0; t < types.size(); ++t) {
      if (!sp.eval(types[t], a.filler)) continue;
      (a.role.inv ? slot.second : slot.first)[t] |= uint64_t{1} << i;
    }
  }
  return out;
}

}  // namespace

std::vector<TypeTable> build_types(const TypeSpace& sp) {
  const auto& atoms = sp.atoms();
  int n = sp.atom_count();
  std::vector<int> u_atoms;
  for (int i = 0; i < n; ++i)
    if (!atoms[i].is_name && atoms[i].role.universal) u_atoms.push_back(i);
  std::vector<TypeTable> tables;
  std::vector<TypeSpace::Node> nodes = sp.nodes();
  for (uint64_t g = 0; g < (uint64_t{1} << u_atoms.size()); ++g) {
    uint64_t known = 0, fixed = 0;
    std::vector<int> cons = sp.constraints();
    std::vector<int> witnesses;
    for (size_t j = 0; j < u_atoms.size(); ++j) {
      int ua = u_atoms[j];
      known |= uint64_t{1} << ua;
      if (g >> j & 1) {
        fixed |= uint64_t{1} << ua;
        witnesses.push_back(atoms[ua].filler);
      } else {
        nodes.push_back({TypeSpace::Node::Not, atoms[ua].filler});
        cons.push_back(static_cast<int>(nodes.size()) - 1);
      }
    }
    std::vector<uint64_t> types;
    std::function<void(int, uint64_t, uint64_t)> dfs = [&](int i, uint64_t kn, uint64_t val) {
      for (int c : cons)
        if (eval3(nodes, kn, val, c) == 0) return;
      if (i == n) {
        types.push_back(val);
        if (static_cast<long>(types.size()) > limits().max_types)
          throw GuardError("more than " + std::to_string(limits().max_types) + " types");
        return;
      }
      if (kn >> i & 1) {
        dfs(i + 1, kn, val);
        return;
      }
      dfs(i + 1, kn | uint64_t{1} << i, val);
      dfs(i + 1, kn | uint64_t{1} << i, val | uint64_t{1} << i);
    };
    dfs(0, known, fixed);
    nodes.resize(sp.nodes().size());

    // Elimination of types lacking witnesses.
    auto needs = need_masks(sp, types);
    std::vector<char> alive(types.size(), 1);
    std::vector<std::vector<int>> with_filler(n);
    for (int i = 0; i < n; ++i) {
      if (atoms[i].is_name || atoms[i].role.universal) continue;
      for (size_t t = 0; t < types.size(); ++t)
        if (sp.eval(types[t], atoms[i].filler)) with_filler[i].push_back(static_cast<int>(t));
    }
    auto compat = [&](const std::string& r, size_t i, size_t j) {
      const auto& nm = needs.at(r);
      return (nm.first[j] & ~types[i]) == 0 && (nm.second[i] & ~types[j]) == 0;
    };
    for (bool changed = true; changed;) {
      changed = false;
      for (size_t t = 0; t < types.size(); ++t) {
        if (!alive[t]) continue;
        for (int i = 0; i < n && alive[t]; ++i) {
          if (atoms[i].is_name || atoms[i].role.universal || !(types[t] >> i & 1)) continue;
          bool ok = false;
          for (int w : with_filler[i]) {
            if (!alive[w]) continue;
            if (atoms[i].role.inv ? compat(atoms[i].role.name, w, t) : compat(atoms[i].role.name, t, w)) {
              ok = true;
              break;
            }
          }
          if (!ok) {
            alive[t] = 0;
            changed = true;
          }
        }
      }
    }
    TypeTable tt;
    tt.space = &sp;
    tt.u_guess = fixed;
    for (size_t t = 0; t < types.size(); ++t)
      if (alive[t]) tt.types.push_back(types[t]);
    if (tt.types.empty()) continue;
    bool witnessed = true;
    for (int f : witnesses) {
      bool any = false;
      for (auto t : tt.types) any |= sp.eval(t, f);
      witnessed &= any;
    }
    if (!witnessed) continue;
    for (auto& [r, m] : need_masks(sp, tt.types)) {
      tt.need_fwd[r] = m.first;
      tt.need_inv[r] = m.second;
    }
    tables.push_back(std::move(tt));
  }
  return tables;
}

std::vector<std::vector<int>> arc_consistent(const TypeTable& tt, const Database& d, const DbIndex& idx,
                                             std::vector<std::vector<int>> cands, bool loops_as_copies) {
  struct Edge {
    std::string r;
    int other;
    bool fwd;
  };
  std::vector<std::vector<Edge>> inc(idx.n());
  for (const auto& f : d.rfacts) {
    if (!tt.need_fwd.count(f.name)) continue;
    int a = idx.id(f.a), b = idx.id(f.b);
    inc[a].push_back({f.name, b, true});
    if (a != b) inc[b].push_back({f.name, a, false});
    else inc[a].push_back({f.name, a, false});
  }
  std::deque<int> queue;
  std::vector<char> queued(idx.n(), 1);
  for (int i = 0; i < idx.n(); ++i) {
    if (cands[i].empty()) return {};
    queue.push_back(i);
  }
  while (!queue.empty()) {
    int a = queue.front();
    queue.pop_front();
    queued[a] = 0;
    std::vector<int> kept;
    for (int t : cands[a]) {
      bool ok = true;
      for (const auto& e : inc[a]) {
        bool sup = false;
        for (int t2 : cands[e.other]) {
          if (e.other == a && t2 != t && !loops_as_copies) continue;
          if (e.fwd ? tt.compat(e.r, t, t2) : tt.compat(e.r, t2, t)) {
            sup = true;
            break;
          }
        }
        if (!sup) {
          ok = false;
          break;
        }
      }
      if (ok) kept.push_back(t);
    }
    if (kept.size() == cands[a].size()) continue;
    if (kept.empty()) return {};
    cands[a] = kept;
    for (const auto& e : inc[a])
      if (!queued[e.other]) {
        queued[e.other] = 1;
        queue.push_back(e.other);
      }
  }
  return cands;
}

namespace {

bool search(const TypeTable& tt, const Database& d, const DbIndex& idx, std::vector<std::vector<int>> doms) {
  doms = arc_consistent(tt, d, idx, std::move(doms));
  if (doms.empty()) return false;
  int pick = -1;
  for (int i = 0; i < idx.n(); ++i)
    if (doms[i].size() > 1 && (pick < 0 || doms[i].size() < doms[pick].size())) pick = i;
  if (pick < 0) return true;
  for (int t : doms[pick]) {
    auto next = doms;
    next[pick] = {t};
    if (search(tt, d, idx, std::move(next))) return true;
  }
  return false;
}

}  // namespace

bool kb_sat(const Database& d, const Ontology& o, const std::vector<CPtr>& global,
            const std::map<std::string, std::vector<CPtr>>& local) {
  std::vector<CPtr> extra;
  for (const auto& [c, cs] : local) extra.insert(extra.end(), cs.begin(), cs.end());
  TypeSpace sp(o, extra, global);
  Database dd = d;
  for (const auto& [c, cs] : local) dd.add_concept(kTop, c);
  DbIndex idx(dd);
  std::map<int, std::vector<int>> local_nodes;
  for (const auto& [c, cs] : local)
    for (const auto& x : cs) local_nodes[idx.id(c)].push_back(sp.node(x));
  for (const auto& tt : build_types(sp)) {
    std::vector<std::vector<int>> doms(idx.n());
    for (int i = 0; i < idx.n(); ++i) {
      for (int t : tt.candidates(dd, idx.name(i))) {
        bool ok = true;
        if (auto it = local_nodes.find(i); it != local_nodes.end())
          for (int nd : it->second) ok = ok && tt.has(t, nd);
        if (ok) doms[i].push_back(t);
      }
    }
    if (idx.n() == 0 || search(tt, dd, idx, std::move(doms))) return true;
  }
  return false;
}

bool certain_beliq(const Database& d, const Ontology& o, const CQ& q, const Tuple& a) {
  if (!is_beliq(q)) throw InputError("certain answers are only computed for bELIQs");
  if (q.arity() == 1) {
    CPtr c = cq_to_concept(q, q.answer[0]);
    return !kb_sat(d, o, {}, {{a.at(0), {c_not(c)}}});
  }
  CPtr c = cq_to_concept(q, *q.vars().begin());
  return !kb_sat(d, o, {c_not(c)}, {});
}

}  // namespace omq
