#pragma once

#include <string>
#include <vector>

#include "omq/kernel.h"
#include "omq/syntax.h"

namespace fx {

struct Case {
  std::string onto, db, query;
  omq::Ontology o() const { return omq::parse_ontology(onto); }
  omq::Database d() const { return omq::parse_database(db); }
  omq::UCQ q() const { return omq::parse_query(query); }
};

// Small fixed OMQs with their databases.
Case split_successors();
Case split_successors_both();
Case disjunctive_edge();
Case symmetric_pair();
Case coloring(const std::string& db);  // three-colouring ontology, query exists x D(x)
std::string k4();
std::string e_triangle();
Case parity_loop();  // P/not P ontology on r(a,a)
Case lasso();        // empty ontology, cycle query
Case clique3();      // irreflexive r-clique on three constants, clique query
Case paired_disjuncts();
Case pairwise_and();

}  // namespace fx
