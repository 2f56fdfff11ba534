#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>

#include "omq/kernel.h"
#include "omq/querytools.h"

namespace omq {

struct Decorated {
  Database db;
  UCQ query;                  // Boolean disjuncts, answer atoms removed
  std::optional<bool> verdict;  // decided during decoration
};

// Removes from p the quantified trees hanging from one answer variable by one atom and
// returns them as ELIQs together with the position of that variable. pos maps answer
// variables to positions.
std::vector<std::pair<CQ, size_t>> split_pendants(CQ& p, const std::map<std::string, size_t>& pos);

// Decoration of a UCQ at the tuple a: answer atoms are decided, edges to answer constants
// become fresh concept names, and trees hanging from one answer variable become ELIQ checks.
// entails_eliq(e, i) decides whether the ELIQ e holds at a[i] in the relaxed semantics.
Decorated decorate(const UCQ& qc, const Database& d, const Tuple& a,
                   const std::function<bool(const CQ&, size_t)>& entails_eliq);
// Same, with atomic queries answered over the tree unraveling at a.
Decorated decorate(const UCQ& qc, const Database& d, const Tuple& a, const Ontology& o);

// Conversion of a disjunction of conjunctions into a conjunction of disjunctions, subsumed conjuncts dropped.
std::vector<UCQ> distribute(const std::vector<std::vector<CQ>>& dnf);

bool approx_tree(const OMQ& q, const Database& d, const Tuple& a);
std::set<Tuple> approx_tree_answers(const OMQ& q, const Database& d);

}  // namespace omq
