#pragma once

#include <set>
#include <string>
#include <vector>

#include "omq/kernel.h"
#include "omq/querytools.h"

namespace omq {

// Disjunction-free concepts whose union is equivalent to c.
std::vector<CPtr> disjunct_expansion(const CPtr& c);

struct ExhaustiveSet {
  std::vector<Ontology> ontologies;
};

// Number of members exhaustive_set would produce, as a decimal string.
std::string exhaustive_size(const Ontology& o);
ExhaustiveSet exhaustive_set(const Ontology& o);

// Certain answer for an ELI_bot ontology.
bool eli_certain(const Ontology& o, const Database& d, const UCQ& q, const Tuple& a);
// Chase prefix used by eli_certain; sat is false when d is inconsistent.
struct EliChase {
  bool sat = true;
  Database db;
};
EliChase eli_chase(const Ontology& o, const Database& d, int budget);

bool approx_up_ont(const OMQ& q, const Database& d, const Tuple& a);
std::set<Tuple> approx_up_ont_answers(const OMQ& q, const Database& d);

// Quotients of d that never merge two constants of a; each maps to its block representatives.
std::vector<std::pair<Database, Tuple>> quotients(const Database& d, const Tuple& a);
bool approx_up_db(const OMQ& q, const Database& d, const Tuple& a);
std::set<Tuple> approx_up_db_answers(const OMQ& q, const Database& d);

}  // namespace omq
