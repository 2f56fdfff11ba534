#include "omq/relax_tree.h"

#include <algorithm>
#include <functional>
#include <map>

#include "omq/config.h"
#include "omq/hornsat.h"
#include "omq/relax_eliu.h"

namespace omq {

namespace {

std::string edge_name(const std::string& r, bool inv, size_t i) {
  return "@" + r + (inv ? "-" : "") + "@" + std::to_string(i);
}

bool unravel_unsat(const Ontology& o, const Database& d, const std::set<std::string>& s) {
  const std::string fresh = "Bot_";
  CQ q;
  q.atoms = {{fresh, "x", ""}};
  return unravel_entails({q}, replace_bot(o, fresh), d, {}, s);
}

}  // namespace

// Splits off the quantified trees that hang from a single answer variable by a single atom.
// They become ELIQs at that variable and can be matched in the anonymous part below it.
std::vector<std::pair<CQ, size_t>> split_pendants(CQ& p, const std::map<std::string, size_t>& pos) {
  std::map<std::string, std::string> parent;
  std::function<std::string(const std::string&)> find = [&](const std::string& v) {
    auto it = parent.find(v);
    if (it == parent.end() || it->second == v) return v;
    return it->second = find(it->second);
  };
  for (const auto& v : p.vars())
    if (!pos.count(v)) parent[v] = v;
  for (const auto& at : p.atoms)
    if (at.binary() && parent.count(at.x) && parent.count(at.y)) parent[find(at.x)] = find(at.y);
  std::map<std::string, std::vector<size_t>> inner, attach;
  for (size_t i = 0; i < p.atoms.size(); ++i) {
    const auto& at = p.atoms[i];
    bool qx = parent.count(at.x), qy = at.binary() && parent.count(at.y);
    if (qx && (!at.binary() || qy)) inner[find(at.x)].push_back(i);
    else if (qx) attach[find(at.x)].push_back(i);
    else if (qy) attach[find(at.y)].push_back(i);
  }
  std::vector<std::pair<CQ, size_t>> out;
  std::set<size_t> gone;
  for (const auto& [root, links] : attach) {
    if (links.size() != 1) continue;
    const auto& link = p.atoms[links[0]];
    std::string x = pos.count(link.x) ? link.x : link.y;
    CQ e;
    e.answer = {x};
    e.atoms.push_back(link);
    for (size_t i : inner[root]) e.atoms.push_back(p.atoms[i]);
    e.normalize();
    if (!is_eliq(e)) continue;
    out.push_back({e, pos.at(x)});
    gone.insert(links[0]);
    gone.insert(inner[root].begin(), inner[root].end());
  }
  std::vector<Atom> rest;
  for (size_t i = 0; i < p.atoms.size(); ++i)
    if (!gone.count(i)) rest.push_back(p.atoms[i]);
  p.atoms = rest;
  return out;
}

Decorated decorate(const UCQ& qc, const Database& d, const Tuple& a,
                   const std::function<bool(const CQ&, size_t)>& entails_eliq) {
  Decorated out;
  out.db = d;
  if (qc.empty()) {
    out.verdict = false;
    return out;
  }
  const auto& xs = qc[0].answer;
  std::set<std::string> roles;
  for (const auto& p : qc)
    for (const auto& at : p.atoms)
      if (at.binary()) roles.insert(at.pred);
  for (const auto& f : d.rfacts) {
    if (!roles.count(f.name)) continue;
    for (size_t i = 0; i < a.size(); ++i) {
      if (f.b == a[i]) out.db.add_concept(edge_name(f.name, false, i), f.a);
      if (f.a == a[i]) out.db.add_concept(edge_name(f.name, true, i), f.b);
    }
  }
  for (CQ p : qc) {
    std::map<std::string, size_t> pos;
    for (size_t i = 0; i < xs.size(); ++i) pos[p.answer[i]] = i;
    bool dropped = false;
    for (const auto& [e, i] : split_pendants(p, pos))
      if (!entails_eliq(e, i)) {
        dropped = true;
        break;
      }
    if (dropped) continue;
    CQ r;
    for (const auto& at : p.atoms) {
      bool xa = pos.count(at.x), ya = at.binary() && pos.count(at.y);
      if (!at.binary()) {
        if (!xa) {
          r.atoms.push_back(at);
        } else {
          CQ aq;
          aq.answer = {"x"};
          aq.atoms = {{at.pred, "x", ""}};
          if (!entails_eliq(aq, pos[at.x])) dropped = true;
        }
      } else if (xa && ya) {
        if (!d.rfacts.count({at.pred, a[pos[at.x]], a[pos[at.y]]})) dropped = true;
      } else if (ya) {
        r.atoms.push_back({edge_name(at.pred, false, pos[at.y]), at.x, ""});
      } else if (xa) {
        r.atoms.push_back({edge_name(at.pred, true, pos[at.x]), at.y, ""});
      } else {
        r.atoms.push_back(at);
      }
      if (dropped) break;
    }
    if (dropped) continue;
    r.normalize();
    if (r.atoms.empty()) {
      out.verdict = true;
      return out;
    }
    out.query.push_back(r);
  }
  if (out.query.empty()) out.verdict = false;
  return out;
}

Decorated decorate(const UCQ& qc, const Database& d, const Tuple& a, const Ontology& o) {
  std::set<std::string> s(a.begin(), a.end());
  auto names = o.concept_names();
  for (const auto& n : d.concept_names()) names.insert(n);
  std::map<std::pair<std::string, size_t>, bool> cache;
  return decorate(qc, d, a, [&](const CQ& e, size_t i) {
    if (e.atoms.size() == 1 && !e.atoms[0].binary()) {
      if (e.atoms[0].pred == kTop) return true;
      if (!names.count(e.atoms[0].pred)) return false;
    }
    auto key = std::make_pair(cq_key(e), i);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    return cache[key] = unravel_entails({e}, o, d, {a[i]}, s);
  });
}

std::vector<UCQ> distribute(const std::vector<std::vector<CQ>>& dnf) {
  // Each conjunct of the result is a set of keys; supersets are implied by their subsets.
  std::map<std::string, CQ> by_key;
  std::vector<std::set<std::string>> acc = {{}};
  for (const auto& conj : dnf) {
    std::vector<std::set<std::string>> next;
    for (const auto& base : acc)
      for (const auto& b : conj) {
        std::string k = cq_key(b);
        by_key.emplace(k, b);
        auto s = base;
        s.insert(k);
        next.push_back(std::move(s));
      }
    std::sort(next.begin(), next.end(), [](const auto& x, const auto& y) {
      return x.size() != y.size() ? x.size() < y.size() : x < y;
    });
    next.erase(std::unique(next.begin(), next.end()), next.end());
    std::vector<std::set<std::string>> minimal;
    for (const auto& s : next) {
      bool sub = false;
      for (const auto& m : minimal)
        if (std::includes(s.begin(), s.end(), m.begin(), m.end())) {
          sub = true;
          break;
        }
      if (!sub) minimal.push_back(s);
      if (static_cast<long>(minimal.size()) > limits().max_distributivity)
        throw GuardError("distributivity produced more than " + std::to_string(limits().max_distributivity) +
                         " conjuncts");
    }
    acc = std::move(minimal);
  }
  std::vector<UCQ> out;
  for (const auto& s : acc) {
    UCQ u;
    for (const auto& k : s) u.push_back(by_key.at(k));
    out.push_back(u);
  }
  return out;
}

bool approx_tree(const OMQ& q, const Database& d, const Tuple& a) {
  std::set<std::string> s(a.begin(), a.end());
  if (unravel_unsat(q.onto, d, s)) return true;
  UCQ qc;
  std::set<std::string> seen;
  for (const auto& p : q.query)
    for (const auto& c : contraction_closure_qc(p))
      if (seen.insert(cq_key(c)).second) qc.push_back(c);
  Decorated dec = decorate(qc, d, a, q.onto);
  if (dec.verdict) return *dec.verdict;
  std::vector<std::vector<CQ>> dnf;
  for (const auto& p : dec.query) dnf.push_back(connected_components(p));
  for (const auto& conj : distribute(dnf))
    if (!unravel_entails(conj, q.onto, dec.db, {}, s)) return false;
  return true;
}

std::set<Tuple> approx_tree_answers(const OMQ& q, const Database& d) {
  std::set<Tuple> out;
  size_t arity = q.query.empty() ? 0 : q.query[0].arity();
  for (const auto& t : all_tuples(d, arity))
    if (approx_tree(q, d, t)) out.insert(t);
  return out;
}

}  // namespace omq
