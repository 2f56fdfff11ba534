#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "omq/kernel.h"

namespace omq {

struct UnravelingPrefix {
  Database db;
  std::map<std::string, std::string> copy_of;  // copy constant -> original
};

// Paths of length at most n over constants outside s; s is kept as is.
UnravelingPrefix tree_unravel_prefix(const Database& d, const std::set<std::string>& s, int n,
                                     size_t max_facts = 200000);

struct LkOptions {
  // Only bags with as many non-s constants as allowed, and overlaps of full size.
  bool maximal = true;
  // Root bag (non-s part); all admissible roots when empty.
  std::optional<std::set<std::string>> root;
  size_t max_facts = 200000;
};

// Bags for all (l,k)-sequences with at most n sets S_i.
UnravelingPrefix lk_unravel_prefix(const Database& d, const std::set<std::string>& s, int l, int k, int n,
                                   const LkOptions& opt = {});

// Whether copy_of is a homomorphism from the prefix into d.
bool uncopying_is_homomorphism(const UnravelingPrefix& p, const Database& d);

}  // namespace omq
