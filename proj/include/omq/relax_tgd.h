#pragma once

#include <set>

#include "omq/kernel.h"
#include "omq/querytools.h"

namespace omq {

struct TgdParams {
  int l = 1, k = 2, kp = 2;
};

// Extension of d by copies of the trees of p entailed over the (l,k)-unraveling.
Database tgd_careful_chase(const Ontology& o, const Database& d, const CQ& p, const TgdParams& params);

bool approx_tgd(const OMQ& q, const Database& d, const Tuple& a, const TgdParams& params);
std::set<Tuple> approx_tgd_answers(const OMQ& q, const Database& d, const TgdParams& params);

}  // namespace omq
