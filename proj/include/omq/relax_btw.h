#pragma once

#include <set>

#include "omq/kernel.h"
#include "omq/querytools.h"

namespace omq {

// Whether the bELIQ holds at a (one constant for an ELIQ, none for a BELIQ)
// over the (l,k)-unraveling of d at s.
bool eliminate_beliq(const OMQ& q, const Database& d, const std::set<std::string>& s, const Tuple& a, int l, int k);

// Whether a is an answer to the UCQ over the (l,k)-unraveling of d at a.
bool eliminate_ucq(const OMQ& q, const Database& d, const Tuple& a, int l, int k);

// bELIQs go to eliminate_beliq with s = a, everything else to eliminate_ucq.
bool approx_btw(const OMQ& q, const Database& d, const Tuple& a, int l, int k);
std::set<Tuple> approx_btw_answers(const OMQ& q, const Database& d, int l, int k);

// Whether p (arity at most one) holds at a over the (l,k)-unraveling of d at the empty set.
// A unary p must hold at every copy of a[0].
bool unravel_cq_entails(const Ontology& o, const Database& d, const CQ& p, const Tuple& a, int l, int k);

}  // namespace omq
