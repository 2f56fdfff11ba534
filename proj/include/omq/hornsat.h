#pragma once

#include <set>
#include <string>
#include <vector>

#include "omq/kernel.h"
#include "omq/querytools.h"

namespace omq {

struct HornClause {
  std::vector<int> body;
  int head = -1;  // -1 is false
};

struct HornFormula {
  int nvars = 0;
  std::vector<HornClause> clauses;
  int var() { return nvars++; }
  void add(std::vector<int> body, int head);
  // One clause per line: body joined by '-', then '>' and the head or F.
  std::string dump() const;
};

struct HornResult {
  bool sat = true;
  std::vector<char> model;  // least model when sat
};

HornResult horn_solve(const HornFormula& f);

// Whether the tuple is a certain answer of a disjunction of bELIQs (at most one ELIQ, the target)
// on the unraveling of d that keeps the constants in s fixed.
bool unravel_entails(const UCQ& q, const Ontology& o, const Database& d, const Tuple& a, const std::set<std::string>& s);

// Unraveling with nothing fixed, for all constants at once: constants a with a in q(unraveling), for an ELIQ q.
std::set<std::string> eliq_unravel_answers(const CQ& q, const Ontology& o, const Database& d);
// Same for a BELIQ.
bool beliq_unravel_entails(const CQ& q, const Ontology& o, const Database& d);

}  // namespace omq
