#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "omq/kernel.h"

namespace omq {

using Tuple = std::vector<std::string>;

// Integer-indexed view of a database used by homomorphism search.
class DbIndex {
 public:
  explicit DbIndex(const Database& d);

  int n() const { return static_cast<int>(names_.size()); }
  int id(const std::string& c) const;  // -1 if absent
  const std::string& name(int i) const { return names_[i]; }
  bool has_unary(const std::string& p, int c) const;
  const std::vector<int>& out(const std::string& r, int c) const;
  const std::vector<int>& in(const std::string& r, int c) const;
  bool has_binary(const std::string& r, int a, int b) const;
  const std::vector<int>& with_unary(const std::string& p) const;

 private:
  std::vector<std::string> names_;
  std::map<std::string, int> ids_;
  std::map<std::string, std::vector<char>> unary_;
  std::map<std::string, std::vector<int>> unary_list_;
  std::map<std::string, std::vector<std::vector<int>>> out_, in_;
  std::map<std::string, std::set<std::pair<int, int>>> pairs_;
  std::vector<int> empty_;
};

// All answers of q on d, sorted.
std::set<Tuple> eval_cq(const Database& d, const CQ& q);
std::set<Tuple> eval_ucq(const Database& d, const UCQ& q);
// Whether some homomorphism maps q into d extending the given partial assignment.
bool has_match(const DbIndex& idx, const CQ& q, const std::map<std::string, std::string>& fixed = {});
bool has_match(const Database& d, const CQ& q, const std::map<std::string, std::string>& fixed = {});
// Whether the tuple is an answer.
bool holds(const Database& d, const CQ& q, const Tuple& t);

// Canonical form: quantified variables renamed y0,y1,... minimizing the atom list.
// When answers_as_set is true the answer variables may also be permuted.
CQ canonical(const CQ& q, bool answers_as_set = false);
std::string cq_key(const CQ& q, bool answers_as_set = false);

std::vector<CQ> contractions(const CQ& q);
bool quantified_part_is_forest(const CQ& q);
bool is_connected(const CQ& q);
bool is_tree_cq(const CQ& q);  // whole canonical database is a connected tree
bool is_eliq(const CQ& q);
bool is_beliq(const CQ& q);
bool is_beliq_ucq(const UCQ& q);

// Tree-shaped CQ rolled up into a concept at the given root variable.
CPtr cq_to_concept(const CQ& q, const std::string& root);
// bELIQ as concept: C for an ELIQ, exists u.C for a BELIQ.
CPtr beliq_concept(const CQ& q);
// Positive ELI concept (top, names, and, exists over named roles) as a tree CQ with answer variable x.
std::optional<CQ> concept_to_cq(const CPtr& c);

CQ induced_subquery(const CQ& q, const std::set<std::string>& vs);
std::vector<CQ> connected_components(const CQ& q);
// Canonical database of q; variables become constants with the given prefix.
Database canonical_db(const CQ& q, const std::string& prefix = "");

struct TreeDecomposition {
  std::vector<std::set<std::string>> bags;
  std::vector<std::pair<int, int>> edges;
  int l = 0, k = 0;
};

struct Graph {
  std::set<std::string> nodes;
  std::set<std::pair<std::string, std::string>> edges;
};
Graph gaifman(const Database& d);
Graph gaifman(const CQ& q);

// Exact search; throws GuardError beyond max_elements for l >= 2.
std::optional<TreeDecomposition> find_tree_decomposition(const Graph& g, int l, int k, int max_elements = 16);
bool valid_decomposition(const Graph& g, const TreeDecomposition& td);
bool has_treewidth(const Graph& g, int l, int k);

std::vector<CQ> contraction_closure_qc(const CQ& q);
// k_prime < 0 means unbounded (tree-shaped results).
std::vector<CQ> trees_closure(const CQ& q, int k_prime, const std::set<std::string>& sig_concepts);
std::vector<CQ> cl_contractions(const UCQ& q, int l, int k, size_t max_size = 200000);

// Fresh copy of the canonical database of p, answer variables glued to the given constants.
Database glue_copy(const CQ& p, const Tuple& at, const std::string& prefix);

}  // namespace omq
