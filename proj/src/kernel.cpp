#include "omq/kernel.h"

#include <algorithm>

namespace omq {

std::string Role::str() const {
  if (universal) return "u";
  return inv ? name + "-" : name;
}

namespace {
CPtr mk(CK k, std::string n = {}, Role r = {}, CPtr a = nullptr, CPtr b = nullptr) {
  return std::make_shared<const Concept>(Concept{k, std::move(n), std::move(r), std::move(a), std::move(b)});
}
}  // namespace

CPtr c_top() {
  static CPtr t = mk(CK::Top);
  return t;
}
CPtr c_bot() {
  static CPtr t = mk(CK::Bot);
  return t;
}
CPtr c_name(const std::string& n) { return mk(CK::Name, n); }
CPtr c_not(CPtr c) { return mk(CK::Not, {}, {}, std::move(c)); }
CPtr c_and(CPtr x, CPtr y) { return mk(CK::And, {}, {}, std::move(x), std::move(y)); }
CPtr c_or(CPtr x, CPtr y) { return mk(CK::Or, {}, {}, std::move(x), std::move(y)); }
CPtr c_imp(CPtr x, CPtr y) { return c_or(c_not(std::move(x)), std::move(y)); }
CPtr c_exists(const Role& r, CPtr c) { return mk(CK::Exists, {}, r, std::move(c)); }
CPtr c_forall(const Role& r, CPtr c) { return mk(CK::Forall, {}, r, std::move(c)); }

CPtr c_and_all(const std::vector<CPtr>& cs) {
  if (cs.empty()) return c_top();
  CPtr r = cs.back();
  for (size_t i = cs.size() - 1; i-- > 0;) r = c_and(cs[i], r);
  return r;
}

CPtr c_or_all(const std::vector<CPtr>& cs) {
  if (cs.empty()) return c_bot();
  CPtr r = cs.back();
  for (size_t i = cs.size() - 1; i-- > 0;) r = c_or(cs[i], r);
  return r;
}

std::string to_string(const CPtr& c) {
  switch (c->kind) {
    case CK::Top: return "top";
    case CK::Bot: return "bot";
    case CK::Name: return c->name;
    case CK::Not: return "not " + to_string(c->a);
    case CK::And: return "(" + to_string(c->a) + " and " + to_string(c->b) + ")";
    case CK::Or: return "(" + to_string(c->a) + " or " + to_string(c->b) + ")";
    case CK::Exists: return "exists " + c->role.str() + "." + to_string(c->a);
    case CK::Forall: return "forall " + c->role.str() + "." + to_string(c->a);
  }
  return "?";
}

int concept_cmp(const CPtr& x, const CPtr& y) {
  if (x == y) return 0;
  if (x->kind != y->kind) return x->kind < y->kind ? -1 : 1;
  if (x->name != y->name) return x->name < y->name ? -1 : 1;
  if (x->role != y->role) return x->role < y->role ? -1 : 1;
  if (x->a || y->a) {
    if (!x->a) return -1;
    if (!y->a) return 1;
    if (int r = concept_cmp(x->a, y->a)) return r;
  }
  if (x->b || y->b) {
    if (!x->b) return -1;
    if (!y->b) return 1;
    if (int r = concept_cmp(x->b, y->b)) return r;
  }
  return 0;
}

bool concept_eq(const CPtr& x, const CPtr& y) { return concept_cmp(x, y) == 0; }

namespace {
CPtr nnf(const CPtr& c, bool neg) {
  switch (c->kind) {
    case CK::Top: return neg ? c_bot() : c;
    case CK::Bot: return neg ? c_top() : c;
    case CK::Name: return neg ? c_not(c) : c;
    case CK::Not: return nnf(c->a, !neg);
    case CK::And:
      return neg ? c_or(nnf(c->a, true), nnf(c->b, true)) : c_and(nnf(c->a, false), nnf(c->b, false));
    case CK::Or:
      return neg ? c_and(nnf(c->a, true), nnf(c->b, true)) : c_or(nnf(c->a, false), nnf(c->b, false));
    case CK::Exists:
      return neg ? c_forall(c->role, nnf(c->a, true)) : c_exists(c->role, nnf(c->a, false));
    case CK::Forall:
      return neg ? c_exists(c->role, nnf(c->a, true)) : c_forall(c->role, nnf(c->a, false));
  }
  return c;
}

bool horn_shape(const CPtr& c, bool allow_u, bool allow_or) {
  switch (c->kind) {
    case CK::Top:
    case CK::Bot:
    case CK::Name: return true;
    case CK::Not:
    case CK::Forall: return false;
    case CK::Or:
      return allow_or && horn_shape(c->a, allow_u, allow_or) && horn_shape(c->b, allow_u, allow_or);
    case CK::And: return horn_shape(c->a, allow_u, allow_or) && horn_shape(c->b, allow_u, allow_or);
    case CK::Exists:
      if (c->role.universal && !allow_u) return false;
      return horn_shape(c->a, allow_u, allow_or);
  }
  return false;
}

bool has_kind(const CPtr& c, CK k) {
  if (c->kind == k) return true;
  return (c->a && has_kind(c->a, k)) || (c->b && has_kind(c->b, k));
}

bool has_role(const CPtr& c, bool want_inverse, bool want_u) {
  if (c->kind == CK::Exists || c->kind == CK::Forall) {
    if (want_inverse && c->role.inv) return true;
    if (want_u && c->role.universal) return true;
  }
  return (c->a && has_role(c->a, want_inverse, want_u)) || (c->b && has_role(c->b, want_inverse, want_u));
}
}  // namespace

CPtr to_nnf(const CPtr& c) { return nnf(c, false); }

int quantifier_depth(const CPtr& c) {
  int d = 0;
  if (c->a) d = std::max(d, quantifier_depth(c->a));
  if (c->b) d = std::max(d, quantifier_depth(c->b));
  if (c->kind == CK::Exists || c->kind == CK::Forall) d += 1;
  return d;
}

bool is_eli_bot(const CPtr& c) { return horn_shape(c, false, false); }
bool is_eliu_bot(const CPtr& c) { return horn_shape(c, true, false); }
bool is_eliu_union_bot(const CPtr& c) { return horn_shape(c, true, true); }

std::string dialect_name(Dialect d) {
  switch (d) {
    case Dialect::ELI: return "ELI";
    case Dialect::ELI_bot: return "ELI_bot";
    case Dialect::ELIu_bot: return "ELIu_bot";
    case Dialect::ELIU_bot: return "ELIU_bot";
    case Dialect::ALC: return "ALC";
    case Dialect::ALCI: return "ALCI";
  }
  return "?";
}

Dialect classify_dialect(const Ontology& o) {
  bool horn = true, u = false, bot = false, orr = false, inverse = false;
  for (const auto& ci : o.cis) {
    for (const auto& side : {ci.lhs, ci.rhs}) {
      if (!is_eliu_union_bot(side)) horn = false;
      if (has_kind(side, CK::Bot)) bot = true;
      if (has_kind(side, CK::Or)) orr = true;
      if (has_role(side, false, true)) u = true;
      if (has_role(side, true, false)) inverse = true;
    }
  }
  if (horn) {
    if (orr) return Dialect::ELIU_bot;
    if (u) return Dialect::ELIu_bot;
    return bot ? Dialect::ELI_bot : Dialect::ELI;
  }
  return (inverse || u) ? Dialect::ALCI : Dialect::ALC;
}

Dialect Ontology::dialect() const { return classify_dialect(*this); }

std::set<std::string> sig_of(const CPtr& c) {
  std::set<std::string> s;
  if (c->kind == CK::Name) s.insert(c->name);
  if ((c->kind == CK::Exists || c->kind == CK::Forall) && !c->role.universal) s.insert(c->role.name);
  if (c->a) s.merge(sig_of(c->a));
  if (c->b) s.merge(sig_of(c->b));
  return s;
}

namespace {
void collect_names(const CPtr& c, std::set<std::string>& cn, std::set<std::string>& rn) {
  if (c->kind == CK::Name) cn.insert(c->name);
  if ((c->kind == CK::Exists || c->kind == CK::Forall) && !c->role.universal) rn.insert(c->role.name);
  if (c->a) collect_names(c->a, cn, rn);
  if (c->b) collect_names(c->b, cn, rn);
}
}  // namespace

std::set<std::string> Ontology::concept_names() const {
  std::set<std::string> cn, rn;
  for (const auto& ci : cis) {
    collect_names(ci.lhs, cn, rn);
    collect_names(ci.rhs, cn, rn);
  }
  return cn;
}

std::set<std::string> Ontology::role_names() const {
  std::set<std::string> cn, rn;
  for (const auto& ci : cis) {
    collect_names(ci.lhs, cn, rn);
    collect_names(ci.rhs, cn, rn);
  }
  return rn;
}

std::set<std::string> sig_of(const Ontology& o) {
  std::set<std::string> s = o.concept_names();
  s.merge(o.role_names());
  return s;
}

void Database::merge(const Database& o) {
  cfacts.insert(o.cfacts.begin(), o.cfacts.end());
  rfacts.insert(o.rfacts.begin(), o.rfacts.end());
}

std::set<std::string> Database::adom() const {
  std::set<std::string> s;
  for (const auto& f : cfacts) s.insert(f.c);
  for (const auto& f : rfacts) {
    s.insert(f.a);
    s.insert(f.b);
  }
  return s;
}

std::set<std::string> Database::concept_names() const {
  std::set<std::string> s;
  for (const auto& f : cfacts)
    if (f.name != kTop) s.insert(f.name);
  return s;
}

std::set<std::string> Database::role_names() const {
  std::set<std::string> s;
  for (const auto& f : rfacts) s.insert(f.name);
  return s;
}

Database Database::restrict_to(const std::set<std::string>& keep) const {
  Database d;
  for (const auto& f : cfacts)
    if (keep.count(f.c)) d.cfacts.insert(f);
  for (const auto& f : rfacts)
    if (keep.count(f.a) && keep.count(f.b)) d.rfacts.insert(f);
  return d;
}

Database Database::rename(const std::map<std::string, std::string>& m) const {
  auto ren = [&](const std::string& c) {
    auto it = m.find(c);
    return it == m.end() ? c : it->second;
  };
  Database d;
  for (const auto& f : cfacts) d.cfacts.insert({f.name, ren(f.c)});
  for (const auto& f : rfacts) d.rfacts.insert({f.name, ren(f.a), ren(f.b)});
  return d;
}

std::set<std::string> sig_of(const Database& d) {
  std::set<std::string> s = d.concept_names();
  s.merge(d.role_names());
  return s;
}

void CQ::normalize() {
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
}

std::set<std::string> CQ::vars() const {
  std::set<std::string> s(answer.begin(), answer.end());
  for (const auto& a : atoms) {
    s.insert(a.x);
    if (a.binary()) s.insert(a.y);
  }
  return s;
}

std::set<std::string> CQ::quantified() const {
  auto s = vars();
  for (const auto& v : answer) s.erase(v);
  return s;
}

bool CQ::is_answer(const std::string& v) const {
  return std::find(answer.begin(), answer.end(), v) != answer.end();
}

std::set<std::string> sig_of(const CQ& q) {
  std::set<std::string> s;
  for (const auto& a : q.atoms)
    if (a.pred != kTop) s.insert(a.pred);
  return s;
}

namespace {
CPtr replace_bot_c(const CPtr& c, const CPtr& fresh) {
  switch (c->kind) {
    case CK::Bot: return fresh;
    case CK::Top:
    case CK::Name: return c;
    case CK::Not: return c_not(replace_bot_c(c->a, fresh));
    case CK::And: return c_and(replace_bot_c(c->a, fresh), replace_bot_c(c->b, fresh));
    case CK::Or: return c_or(replace_bot_c(c->a, fresh), replace_bot_c(c->b, fresh));
    case CK::Exists: return c_exists(c->role, replace_bot_c(c->a, fresh));
    case CK::Forall: return c_forall(c->role, replace_bot_c(c->a, fresh));
  }
  return c;
}
}  // namespace

Ontology replace_bot(const Ontology& o, const std::string& fresh) {
  Ontology r;
  CPtr f = c_name(fresh);
  for (const auto& ci : o.cis) r.cis.push_back({replace_bot_c(ci.lhs, f), replace_bot_c(ci.rhs, f)});
  return r;
}

}  // namespace omq
