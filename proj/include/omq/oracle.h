#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "omq/kernel.h"
#include "omq/querytools.h"

namespace omq {

struct ChaseResult {
  bool sat = true;
  Database db;
};

// Fair oblivious chase; new anonymous elements only up to the given depth.
ChaseResult chase_bounded(const std::vector<TGD>& rules, const Database& d, int depth, size_t max_facts = 200000);
// ELI_bot concept inclusions as frontier-one TGDs.
std::vector<TGD> cis_as_tgds(const Ontology& o);
ChaseResult chase_bounded(const Ontology& o, const Database& d, int depth, size_t max_facts = 200000);

// Answers of q over the depth-bounded chase; everything when the chase hits bottom.
std::set<Tuple> chase_answers(const Ontology& o, const Database& d, const UCQ& q, int depth);

struct PrefixMode {
  bool tree = true;
  int l = 1, k = 2;
};

// Certain answer of a bELIQ over a finite prefix of the unraveling at s; false is inconclusive.
bool prefix_certain(const Ontology& o, const Database& d, const std::set<std::string>& s, const PrefixMode& mode,
                    int depth, const CQ& q, const Tuple& a);

enum class Shape { BELIQ, CQ, UCQ };
enum class Flavour { Empty, ELI_bot, ELIU_bot, ALCI };

struct InstanceSpec {
  uint64_t seed = 1;
  int cis = 2;
  int constants = 4;
  int role_facts = 5;
  int concept_facts = 3;
  Shape shape = Shape::BELIQ;
  Flavour flavour = Flavour::ALCI;
  int concept_names = 3;
  int role_names = 1;
  int query_vars = 3;
};

struct Instance {
  OMQ omq;
  Database db;
  Tuple answer;
};

Instance gen_instance(const InstanceSpec& spec);
std::string instance_text(const Instance& in);

}  // namespace omq
