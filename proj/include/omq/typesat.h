#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "omq/kernel.h"
#include "omq/querytools.h"

namespace omq {

// Concepts over the closure, with Or/Forall rewritten through negation.
// Names and existential restrictions are the free atoms; a type is a bit mask over them.
class TypeSpace {
 public:
  TypeSpace(const Ontology& o, const std::vector<CPtr>& extra, const std::vector<CPtr>& global = {});

  // Node id of a concept; adds it if it only uses atoms already in the closure.
  int node(const CPtr& c);
  int atom_count() const { return static_cast<int>(atoms_.size()); }
  bool eval(uint64_t t, int node) const;
  int name_atom(const std::string& n) const;  // -1 if absent
  // Atom index of exists u.C for a node C, -1 if absent.
  int u_atom_of(int filler) const;
  std::string atom_string(int i) const;

  struct Node {
    enum K { Top, Bot, Atom, Not, And } k;
    int a = -1, b = -1;  // children / atom index
  };
  struct AtomInfo {
    bool is_name = false;
    std::string name;
    Role role;
    int filler = -1;
  };
  const std::vector<AtomInfo>& atoms() const { return atoms_; }
  const std::vector<int>& constraints() const { return constraints_; }
  const std::vector<Node>& nodes() const { return nodes_; }

 private:
  int intern(Node n);
  int core(const CPtr& c, bool allow_new);
  int atom_for(AtomInfo info, bool allow_new);
  std::vector<Node> nodes_;
  std::map<std::tuple<int, int, int>, int> node_ids_;
  std::vector<AtomInfo> atoms_;
  std::map<std::string, int> atom_ids_;
  std::vector<int> constraints_;
};

// Surviving types for one guess of the universal-role atoms.
class TypeTable {
 public:
  const TypeSpace* space = nullptr;
  uint64_t u_guess = 0;
  std::vector<uint64_t> types;

  bool has(int type, int node) const { return space->eval(types[type], node); }
  // t_i ~>_r t_j for a named role r; true when r does not occur in the closure.
  bool compat(const std::string& r, int i, int j) const;
  int size() const { return static_cast<int>(types.size()); }
  // Types consistent with the facts about one constant.
  std::vector<int> candidates(const Database& d, const std::string& c) const;

  std::map<std::string, std::vector<uint64_t>> need_fwd, need_inv;
};

std::vector<TypeTable> build_types(const TypeSpace& sp);

// Knowledge-base satisfiability with concepts required everywhere (global) or at given constants (local).
bool kb_sat(const Database& d, const Ontology& o, const std::vector<CPtr>& global = {},
            const std::map<std::string, std::vector<CPtr>>& local = {});

// Exact certain answer for an ELIQ (one answer constant) or BELIQ (none).
bool certain_beliq(const Database& d, const Ontology& o, const CQ& q, const Tuple& a);

// Arc-consistent candidate types per constant of d (index order of DbIndex), empty vector if some constant has none.
std::vector<std::vector<int>> arc_consistent(const TypeTable& tt, const Database& d, const DbIndex& idx,
                                             std::vector<std::vector<int>> cands, bool loops_as_copies = false);

}  // namespace omq
