#pragma once

#include <set>

#include "omq/kernel.h"
#include "omq/querytools.h"

namespace omq {

// Extension of d by copies of the bELIQs from trees(p) entailed under the unraveling of d.
Database careful_chase(const Ontology& o, const Database& d, const CQ& p);

bool approx_eliu(const OMQ& q, const Database& d, const Tuple& a);
std::set<Tuple> approx_eliu_answers(const OMQ& q, const Database& d);

// Whether d is unsatisfiable under the ontology relaxed to its ELIu-bot consequences.
bool eliu_unsat(const Ontology& o, const Database& d);

// All tuples over adom(d) of the given arity.
std::set<Tuple> all_tuples(const Database& d, size_t arity);

}  // namespace omq
