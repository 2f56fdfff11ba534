#include "omq/strengthen.h"

#include <deque>
#include <functional>
#include <map>

#include "omq/config.h"
#include "omq/relax_eliu.h"
#include "omq/typesat.h"

namespace omq {

namespace {

const std::string kBotLabel = "~bot";

bool uses_u(const CPtr& c) {
  if ((c->kind == CK::Exists || c->kind == CK::Forall) && c->role.universal) return true;
  return (c->a && uses_u(c->a)) || (c->b && uses_u(c->b));
}

void require_eliu_bot(const Ontology& o) {
  for (const auto& ci : o.cis)
    for (const auto& side : {ci.lhs, ci.rhs})
      if (!is_eliu_union_bot(side) || uses_u(side))
        throw InputError("ontology is not in ELIU_bot: " + to_string(ci.lhs) + " sub " + to_string(ci.rhs));
}

bool is_eli_bot_onto(const Ontology& o) {
  for (const auto& ci : o.cis)
    for (const auto& side : {ci.lhs, ci.rhs})
      if (!is_eli_bot(side)) return false;
  return true;
}

// Normal form: conjunctions of names imply a name, a name implies an existential over a name,
// an existential over a name implies a name.
struct HornOnto {
  struct Conj {
    std::vector<std::string> body;
    std::string head;
  };
  struct Ex {
    std::string a;
    Role r;
    std::string b;
  };
  struct Back {
    Role r;
    std::string x, y;
  };
  std::vector<Conj> conj;
  std::vector<Ex> ex;
  std::vector<Back> back;
  int fresh = 0;

  std::string name() { return "~n" + std::to_string(fresh++); }

  std::string lhs(const CPtr& c) {
    switch (c->kind) {
      case CK::Top: return kTop;
      case CK::Bot: return kBotLabel;
      case CK::Name: return c->name;
      case CK::And: {
        std::string n = name();
        conj.push_back({{lhs(c->a), lhs(c->b)}, n});
        return n;
      }
      case CK::Exists: {
        std::string n = name();
        back.push_back({c->role, lhs(c->a), n});
        return n;
      }
      default: throw InputError("not an ELI_bot concept: " + to_string(c));
    }
  }

  void rhs(const std::string& b, const CPtr& c) {
    switch (c->kind) {
      case CK::Top: return;
      case CK::Bot: conj.push_back({{b}, kBotLabel}); return;
      case CK::Name: conj.push_back({{b}, c->name}); return;
      case CK::And:
        rhs(b, c->a);
        rhs(b, c->b);
        return;
      case CK::Exists: {
        std::string n = name();
        ex.push_back({b, c->role, n});
        rhs(n, c->a);
        return;
      }
      default: throw InputError("not an ELI_bot concept: " + to_string(c));
    }
  }

  explicit HornOnto(const Ontology& o) {
    for (const auto& ci : o.cis) rhs(lhs(ci.lhs), ci.rhs);
  }
};

using Labels = std::set<std::string>;

// Names entailed by a conjunction of names, anonymous successors included.
class HornReasoner {
 public:
  explicit HornReasoner(const Ontology& o) : h_(o) {}
  const HornOnto& onto() const { return h_; }

  Labels conj_close(Labels l) const {
    l.insert(kTop);
    bool grew = true;
    while (grew) {
      grew = false;
      for (const auto& c : h_.conj)
        if (!l.count(c.head) &&
            std::all_of(c.body.begin(), c.body.end(), [&](const std::string& x) { return l.count(x) > 0; })) {
          l.insert(c.head);
          grew = true;
        }
    }
    return l;
  }

  // Labels passed to an r-successor of an element labelled l.
  Labels passed(const Labels& l, const Role& r) const {
    Labels out;
    Role back = r.inverse();
    for (const auto& b : h_.back)
      if (b.r == back && l.count(b.x)) out.insert(b.y);
    return out;
  }

  Labels child_key(const Labels& parent, const HornOnto::Ex& e) const {
    Labels k = passed(parent, e.r);
    k.insert(e.b);
    return k;
  }

  const Labels& close(const Labels& key) {
    if (!s_.count(key)) {
      s_[key] = conj_close(key);
      fixpoint();
    }
    return s_.at(key);
  }

 private:
  void fixpoint() {
    bool changed = true;
    while (changed) {
      changed = false;
      std::vector<Labels> keys;
      for (const auto& [k, v] : s_) keys.push_back(k);
      for (const auto& k : keys) {
        Labels val = s_[k];
        size_t before = val.size();
        for (const auto& e : h_.ex) {
          if (!val.count(e.a)) continue;
          Labels ck = child_key(val, e);
          if (!s_.count(ck)) {
            s_[ck] = conj_close(ck);
            changed = true;
          }
          const Labels& cv = s_[ck];
          if (cv.count(kBotLabel)) val.insert(kBotLabel);
          for (const auto& b : h_.back)
            if (b.r == e.r && cv.count(b.x)) val.insert(b.y);
        }
        val = conj_close(val);
        if (val.size() != before) {
          s_[k] = val;
          changed = true;
        }
      }
    }
  }

  HornOnto h_;
  std::map<Labels, Labels> s_;
};

void add_labels(Database& d, const std::string& c, const Labels& l) {
  for (const auto& n : l)
    if (n != kBotLabel) d.add_concept(n, c);
}

std::string big_mul(const std::string& a, long b) {
  std::string out;
  long carry = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    long v = (*it - '0') * b + carry;
    out.push_back(static_cast<char>('0' + v % 10));
    carry = v / 10;
  }
  while (carry) {
    out.push_back(static_cast<char>('0' + carry % 10));
    carry /= 10;
  }
  while (out.size() > 1 && out.back() == '0') out.pop_back();
  return {out.rbegin(), out.rend()};
}

bool big_leq(const std::string& a, long b) {
  std::string bs = std::to_string(b);
  return a.size() != bs.size() ? a.size() < bs.size() : a <= bs;
}

std::vector<CI> left_expanded(const Ontology& o) {
  std::vector<CI> out;
  for (const auto& ci : o.cis)
    for (const auto& l : disjunct_expansion(ci.lhs)) out.push_back({l, ci.rhs});
  return out;
}

}  // namespace

std::vector<CPtr> disjunct_expansion(const CPtr& c) {
  std::vector<CPtr> out;
  auto add_unique = [&](const CPtr& x) {
    for (const auto& y : out)
      if (concept_eq(x, y)) return;
    out.push_back(x);
  };
  switch (c->kind) {
    case CK::Top:
    case CK::Bot:
    case CK::Name: return {c};
    case CK::Exists:
      for (const auto& x : disjunct_expansion(c->a)) add_unique(c_exists(c->role, x));
      return out;
    case CK::And: {
      auto xs = disjunct_expansion(c->a), ys = disjunct_expansion(c->b);
      for (const auto& x : xs)
        for (const auto& y : ys) add_unique(c_and(x, y));
      return out;
    }
    case CK::Or:
      for (const auto& x : disjunct_expansion(c->a)) add_unique(x);
      for (const auto& y : disjunct_expansion(c->b)) add_unique(y);
      return out;
    default: throw InputError("not an ELIU_bot concept: " + to_string(c));
  }
}

std::string exhaustive_size(const Ontology& o) {
  require_eliu_bot(o);
  std::string n = "1";
  for (const auto& ci : left_expanded(o)) n = big_mul(n, static_cast<long>(disjunct_expansion(ci.rhs).size()));
  return n;
}

ExhaustiveSet exhaustive_set(const Ontology& o) {
  std::string size = exhaustive_size(o);
  if (!big_leq(size, limits().max_exhaustive))
    throw GuardError("exhaustive set has " + size + " ontologies, limit " + std::to_string(limits().max_exhaustive));
  auto cis = left_expanded(o);
  std::vector<std::vector<CPtr>> choices;
  for (const auto& ci : cis) choices.push_back(disjunct_expansion(ci.rhs));
  ExhaustiveSet out;
  std::vector<size_t> pick(cis.size(), 0);
  while (true) {
    Ontology m;
    for (size_t i = 0; i < cis.size(); ++i) m.cis.push_back({cis[i].lhs, choices[i][pick[i]]});
    out.ontologies.push_back(std::move(m));
    size_t i = 0;
    while (i < pick.size() && ++pick[i] == choices[i].size()) pick[i++] = 0;
    if (i == pick.size()) break;
  }
  return out;
}

EliChase eli_chase(const Ontology& o, const Database& d, int budget) {
  if (!is_eli_bot_onto(o)) throw InputError("ontology is not in ELI_bot");
  HornReasoner hr(o);
  const auto& h = hr.onto();
  EliChase out;
  std::map<std::string, Labels> lab;
  for (const auto& c : d.adom()) lab[c] = {kTop};
  for (const auto& f : d.cfacts) lab[f.c].insert(f.name);
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto& [c, l] : lab) {
      const Labels& cl = hr.close(l);
      if (cl.size() != l.size()) {
        l = cl;
        changed = true;
      }
    }
    for (const auto& f : d.rfacts) {
      Role r = Role::named(f.name);
      for (const auto& y : hr.passed(lab[f.b], r.inverse()))
        changed |= lab[f.a].insert(y).second;
      for (const auto& y : hr.passed(lab[f.a], r))
        changed |= lab[f.b].insert(y).second;
    }
  }
  out.db = d;
  for (const auto& [c, l] : lab) {
    if (l.count(kBotLabel)) {
      out.sat = false;
      return out;
    }
    add_labels(out.db, c, l);
  }

  struct Item {
    std::string c;
    Labels l;
    int budget;
  };
  std::deque<Item> queue;
  std::set<Labels> seen;
  for (const auto& [c, l] : lab) {
    seen.insert(l);
    queue.push_back({c, l, budget});
  }
  int fresh = 0;
  while (!queue.empty()) {
    Item it = queue.front();
    queue.pop_front();
    if (it.budget <= 0) continue;
    std::set<std::pair<Role, std::string>> done;
    for (const auto& e : h.ex) {
      if (!it.l.count(e.a) || !done.insert({e.r, e.b}).second) continue;
      Labels cl = hr.close(hr.child_key(it.l, e));
      std::string c = "~c" + std::to_string(fresh++);
      if (e.r.inv)
        out.db.add_role(e.r.name, c, it.c);
      else
        out.db.add_role(e.r.name, it.c, c);
      add_labels(out.db, c, cl);
      if (out.db.size() > 200000) throw GuardError("chase exceeds 200000 facts");
      int nb = seen.insert(cl).second ? budget : it.budget - 1;
      queue.push_back({c, cl, nb});
    }
  }
  return out;
}

bool eli_certain(const Ontology& o, const Database& d, const UCQ& q, const Tuple& a) {
  int budget = 1;
  for (const auto& p : q) budget = std::max(budget, static_cast<int>(p.vars().size()));
  EliChase ch = eli_chase(o, d, budget);
  if (!ch.sat) return true;
  for (const auto& p : q)
    if (holds(ch.db, p, a)) return true;
  return false;
}

bool approx_up_ont(const OMQ& q, const Database& d, const Tuple& a) {
  for (const auto& m : exhaustive_set(q.onto).ontologies)
    if (!eli_certain(m, d, q.query, a)) return false;
  return true;
}

std::set<Tuple> approx_up_ont_answers(const OMQ& q, const Database& d) {
  auto members = exhaustive_set(q.onto).ontologies;
  std::set<Tuple> out;
  size_t arity = q.query.empty() ? 0 : q.query[0].arity();
  for (const auto& t : all_tuples(d, arity)) {
    bool all = true;
    for (const auto& m : members)
      if (!eli_certain(m, d, q.query, t)) {
        all = false;
        break;
      }
    if (all) out.insert(t);
  }
  return out;
}

std::vector<std::pair<Database, Tuple>> quotients(const Database& d, const Tuple& a) {
  auto dom_set = d.adom();
  dom_set.insert(a.begin(), a.end());
  if (static_cast<int>(dom_set.size()) > limits().max_adom)
    throw GuardError("active domain has " + std::to_string(dom_set.size()) + " constants, limit " +
                     std::to_string(limits().max_adom));
  std::vector<std::string> dom(dom_set.begin(), dom_set.end());
  std::set<std::string> answers(a.begin(), a.end());
  std::vector<std::pair<Database, Tuple>> out;
  std::vector<int> block(dom.size());
  std::vector<int> answer_block;  // block -> holds an answer constant
  std::function<void(size_t, int)> rec = [&](size_t i, int nblocks) {
    if (i == dom.size()) {
      std::vector<std::string> rep(nblocks);
      for (size_t j = 0; j < dom.size(); ++j)
        if (rep[block[j]].empty() || answers.count(dom[j])) rep[block[j]] = dom[j];
      std::map<std::string, std::string> ren;
      for (size_t j = 0; j < dom.size(); ++j) ren[dom[j]] = rep[block[j]];
      Tuple t;
      for (const auto& c : a) t.push_back(ren[c]);
      out.emplace_back(d.rename(ren), t);
      return;
    }
    bool is_answer = answers.count(dom[i]) > 0;
    for (int b = 0; b <= nblocks; ++b) {
      if (b < nblocks && is_answer && answer_block[b]) continue;
      block[i] = b;
      if (b == nblocks) answer_block.push_back(is_answer);
      else if (is_answer) answer_block[b] = 1;
      rec(i + 1, std::max(nblocks, b + 1));
      if (b == nblocks) answer_block.pop_back();
      else if (is_answer) answer_block[b] = 0;
    }
  };
  rec(0, 0);
  return out;
}

bool approx_up_db(const OMQ& q, const Database& d, const Tuple& a) {
  bool horn = is_eli_bot_onto(q.onto);
  bool beliq = is_beliq_ucq(q.query);
  if (!horn && !beliq) throw InputError("strengthen-db needs an ELI_bot ontology or a bELIQ");
  for (const auto& [qd, qa] : quotients(d, a)) {
    auto keep = qd.adom();
    for (const auto& c : qa) keep.erase(c);
    if (!find_tree_decomposition(gaifman(qd.restrict_to(keep)), 1, 2)) continue;
    bool yes = horn ? eli_certain(q.onto, qd, q.query, qa) : certain_beliq(qd, q.onto, q.query[0], qa);
    if (!yes) return false;
  }
  return true;
}

std::set<Tuple> approx_up_db_answers(const OMQ& q, const Database& d) {
  std::set<Tuple> out;
  size_t arity = q.query.empty() ? 0 : q.query[0].arity();
  for (const auto& t : all_tuples(d, arity))
    if (approx_up_db(q, d, t)) out.insert(t);
  return out;
}

}  // namespace omq
