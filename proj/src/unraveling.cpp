#include "omq/unraveling.h"

#include <functional>

#include "omq/querytools.h"

namespace omq {

namespace {

void check_size(const Database& d, size_t max_facts) {
  if (d.size() > max_facts) throw GuardError("unraveling prefix exceeds " + std::to_string(max_facts) + " facts");
}

std::vector<std::set<std::string>> subsets(const std::vector<std::string>& pool, size_t lo, size_t hi) {
  std::vector<std::set<std::string>> out;
  std::set<std::string> cur;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (cur.size() >= lo && cur.size() <= hi) out.push_back(cur);
    if (cur.size() == hi) return;
    for (size_t j = i; j < pool.size(); ++j) {
      cur.insert(pool[j]);
      rec(j + 1);
      cur.erase(pool[j]);
    }
  };
  rec(0);
  return out;
}

}  // namespace

UnravelingPrefix tree_unravel_prefix(const Database& d, const std::set<std::string>& s, int n, size_t max_facts) {
  UnravelingPrefix out;
  for (const auto& c : s) out.copy_of[c] = c;
  out.db = d.restrict_to(s);
  std::map<std::string, std::vector<const RoleFact*>> inc;
  for (const auto& f : d.rfacts) {
    inc[f.a].push_back(&f);
    if (f.b != f.a) inc[f.b].push_back(&f);
  }
  auto add_node = [&](const std::string& p, const std::string& tail) {
    out.copy_of[p] = tail;
    out.db.add_concept(kTop, p);
    for (const auto& f : d.cfacts)
      if (f.c == tail) out.db.add_concept(f.name, p);
    for (const RoleFact* f : inc[tail]) {
      if (f->a == tail && s.count(f->b)) out.db.add_role(f->name, p, f->b);
      if (f->b == tail && s.count(f->a)) out.db.add_role(f->name, f->a, p);
    }
  };
  std::vector<std::pair<std::string, std::string>> layer;
  for (const auto& c : d.adom())
    if (!s.count(c)) {
      add_node(c, c);
      layer.push_back({c, c});
    }
  for (int depth = 0; depth < n; ++depth) {
    std::vector<std::pair<std::string, std::string>> next;
    for (const auto& [p, tail] : layer) {
      for (const RoleFact* f : inc[tail]) {
        if (f->a == tail && !s.count(f->b)) {
          std::string c = p + "__" + f->name + "__" + f->b;
          add_node(c, f->b);
          out.db.add_role(f->name, p, c);
          next.push_back({c, f->b});
        }
        if (f->b == tail && !s.count(f->a)) {
          std::string c = p + "__" + f->name + "_inv__" + f->a;
          add_node(c, f->a);
          out.db.add_role(f->name, c, p);
          next.push_back({c, f->a});
        }
      }
      check_size(out.db, max_facts);
    }
    layer = std::move(next);
  }
  return out;
}

UnravelingPrefix lk_unravel_prefix(const Database& d, const std::set<std::string>& s, int l, int k, int n,
                                   const LkOptions& opt) {
  if (l < 0 || l >= k) throw InputError("unraveling parameters need l < k");
  UnravelingPrefix out;
  std::vector<std::string> rest;
  for (const auto& c : d.adom())
    if (!s.count(c)) rest.push_back(c);
  size_t kk = std::min<size_t>(k, rest.size()), ll = std::min<size_t>(l, kk);
  for (const auto& c : s) out.copy_of[c] = c;
  out.db = d.restrict_to(s);
  int counter = 0;
  // copies: non-s original -> copy name, per bag
  auto emit_bag = [&](const std::set<std::string>& bag, const std::map<std::string, std::string>& copy) {
    std::set<std::string> full = bag;
    full.insert(s.begin(), s.end());
    auto name = [&](const std::string& c) { return s.count(c) ? c : copy.at(c); };
    for (const auto& c : bag) {
      out.copy_of[copy.at(c)] = c;
      out.db.add_concept(kTop, copy.at(c));
    }
    for (const auto& f : d.cfacts)
      if (bag.count(f.c)) out.db.add_concept(f.name, name(f.c));
    for (const auto& f : d.rfacts)
      if (full.count(f.a) && full.count(f.b) && (bag.count(f.a) || bag.count(f.b)))
        out.db.add_role(f.name, name(f.a), name(f.b));
    check_size(out.db, opt.max_facts);
  };
  std::function<void(const std::set<std::string>&, const std::map<std::string, std::string>&, int)> grow =
      [&](const std::set<std::string>& bag, const std::map<std::string, std::string>& copy, int len) {
        emit_bag(bag, copy);
        if (len >= n) return;
        std::vector<std::string> inbag(bag.begin(), bag.end());
        for (const auto& o : subsets(inbag, opt.maximal ? std::min(ll, inbag.size()) : 0, ll)) {
          std::vector<std::string> pool;
          for (const auto& c : rest)
            if (!o.count(c)) pool.push_back(c);
          size_t need = kk - o.size();
          for (const auto& extra : subsets(pool, opt.maximal ? need : 0, need)) {
            std::set<std::string> child = o;
            child.insert(extra.begin(), extra.end());
            if (child.empty()) continue;
            std::map<std::string, std::string> ccopy;
            for (const auto& c : child)
              ccopy[c] = o.count(c) ? copy.at(c) : c + "_" + std::to_string(counter++);
            grow(child, ccopy, len + 1);
          }
        }
      };
  std::vector<std::set<std::string>> roots;
  if (opt.root) roots.push_back(*opt.root);
  else roots = subsets(rest, opt.maximal ? kk : 1, kk);
  for (const auto& r : roots) {
    std::map<std::string, std::string> copy;
    for (const auto& c : r) copy[c] = c + "_" + std::to_string(counter++);
    if (n >= 1) grow(r, copy, 1);
  }
  return out;
}

bool uncopying_is_homomorphism(const UnravelingPrefix& p, const Database& d) {
  auto img = [&](const std::string& c) {
    auto it = p.copy_of.find(c);
    return it == p.copy_of.end() ? std::string() : it->second;
  };
  for (const auto& f : p.db.cfacts) {
    if (img(f.c).empty()) return false;
    if (f.name != kTop && !d.cfacts.count({f.name, img(f.c)})) return false;
  }
  for (const auto& f : p.db.rfacts)
    if (!d.rfacts.count({f.name, img(f.a), img(f.b)})) return false;
  return true;
}

}  // namespace omq
