#pragma once

#include <map>
#include <memory>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace omq {

// Raised when a configured size bound is exceeded (CLI exit code 1).
struct GuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised on malformed or unsupported input (CLI exit code 2).
struct InputError : std::runtime_error {
  int line = 0, column = 0, length = 0;
  InputError(const std::string& msg, int l = 0, int c = 0, int len = 0)
      : std::runtime_error(msg), line(l), column(c), length(len) {}
};

// Reserved name of the top concept in facts and atoms.
inline const std::string kTop = "top";

struct Role {
  std::string name;
  bool inv = false;
  bool universal = false;

  static Role named(std::string n, bool inverse = false) { return Role{std::move(n), inverse, false}; }
  static Role u() { return Role{"u", false, true}; }
  Role inverse() const {
    if (universal) return *this;
    return Role{name, !inv, false};
  }
  std::string str() const;
  auto operator<=>(const Role&) const = default;
};

enum class CK { Top, Bot, Name, Not, And, Or, Exists, Forall };

struct Concept;
using CPtr = std::shared_ptr<const Concept>;

struct Concept {
  CK kind;
  std::string name;  // Name only
  Role role;         // Exists / Forall
  CPtr a, b;         // children
};

CPtr c_top();
CPtr c_bot();
CPtr c_name(const std::string& n);
CPtr c_not(CPtr c);
CPtr c_and(CPtr x, CPtr y);
CPtr c_or(CPtr x, CPtr y);
CPtr c_imp(CPtr x, CPtr y);
CPtr c_exists(const Role& r, CPtr c);
CPtr c_forall(const Role& r, CPtr c);
CPtr c_and_all(const std::vector<CPtr>& cs);
CPtr c_or_all(const std::vector<CPtr>& cs);

std::string to_string(const CPtr& c);
bool concept_eq(const CPtr& x, const CPtr& y);
int concept_cmp(const CPtr& x, const CPtr& y);
CPtr to_nnf(const CPtr& c);
int quantifier_depth(const CPtr& c);

bool is_eli_bot(const CPtr& c);
bool is_eliu_bot(const CPtr& c);
bool is_eliu_union_bot(const CPtr& c);

struct CI {
  CPtr lhs, rhs;
};

enum class Dialect { ELI, ELI_bot, ELIu_bot, ELIU_bot, ALC, ALCI };
std::string dialect_name(Dialect d);

struct Ontology {
  std::vector<CI> cis;
  Dialect dialect() const;
  std::set<std::string> concept_names() const;
  std::set<std::string> role_names() const;
};

Dialect classify_dialect(const Ontology& o);

struct ConceptFact {
  std::string name, c;
  auto operator<=>(const ConceptFact&) const = default;
};
struct RoleFact {
  std::string name, a, b;
  auto operator<=>(const RoleFact&) const = default;
};

struct Database {
  std::set<ConceptFact> cfacts;
  std::set<RoleFact> rfacts;

  void add_concept(const std::string& n, const std::string& c) { cfacts.insert({n, c}); }
  void add_role(const std::string& n, const std::string& a, const std::string& b) { rfacts.insert({n, a, b}); }
  void merge(const Database& o);
  std::set<std::string> adom() const;
  std::set<std::string> concept_names() const;
  std::set<std::string> role_names() const;
  Database restrict_to(const std::set<std::string>& keep) const;
  Database rename(const std::map<std::string, std::string>& m) const;
  size_t size() const { return cfacts.size() + rfacts.size(); }
  bool operator==(const Database&) const = default;
};

struct Atom {
  std::string pred;
  std::string x, y;  // y empty for unary atoms
  bool binary() const { return !y.empty(); }
  auto operator<=>(const Atom&) const = default;
};

struct CQ {
  std::vector<std::string> answer;
  std::vector<Atom> atoms;  // sorted, unique

  void normalize();
  std::set<std::string> vars() const;
  std::set<std::string> quantified() const;
  size_t arity() const { return answer.size(); }
  bool boolean() const { return answer.empty(); }
  bool is_answer(const std::string& v) const;
  bool operator==(const CQ&) const = default;
};

using UCQ = std::vector<CQ>;

struct TGD {
  CQ body;                  // all variables listed in answer are the frontier
  std::optional<CQ> head;   // nullopt: head is false
  std::set<std::string> frontier;
  bool frontier_one() const { return frontier.size() <= 1; }
};

struct OMQ {
  Ontology onto;
  std::set<std::string> sigma;
  UCQ query;
};

std::set<std::string> sig_of(const CPtr& c);
std::set<std::string> sig_of(const Ontology& o);
std::set<std::string> sig_of(const Database& d);
std::set<std::string> sig_of(const CQ& q);

// Replaces bot by a fresh concept name: C sub bot becomes C sub name.
Ontology replace_bot(const Ontology& o, const std::string& fresh);

}  // namespace omq
