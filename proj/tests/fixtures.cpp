#include "fixtures.h"

namespace fx {

Case split_successors() {
  return {"top sub (forall r.(B1 imp A)) or (forall r.(B2 imp A))\n", "r(a,b1)\nr(a,b2)\nB1(b1)\nB2(b2)\n",
          "q(x) :- r(x,y), A(y).\n"};
}

Case split_successors_both() {
  return {"top sub (forall r.(B1 imp B)) or (forall r.(B2 imp B))\n",
          "r(a,b1)\nr(a,b2)\nB1(b1)\nB2(b2)\nA(b1)\nA(b2)\n", "q(x) :- r(x,y), A(y), B(y).\n"};
}

Case disjunctive_edge() { return {"A sub B or (forall r.B)\n", "A(a)\nr(a,b)\n", "q() :- B(x).\n"}; }

Case symmetric_pair() {
  return {"A sub B or (forall r.B)\n", "A(a)\nr(a,b)\nr(b,a)\nA(b)\n",
          "q() :- A(x), A(y), B(y), r(x,y), r(y,x).\n"};
}

Case coloring(const std::string& db) {
  std::string o = "top sub (R or G) or B\n";
  for (const char* x : {"R", "G", "B"}) o += std::string("(") + x + " and exists e." + x + ") sub D\n";
  return {o, db, "q() :- D(x).\n"};
}

namespace {
std::string sym_clique(const std::string& r, const std::vector<std::string>& cs) {
  std::string s;
  for (const auto& a : cs)
    for (const auto& b : cs)
      if (a != b) s += r + "(" + a + "," + b + ")\n";
  return s;
}
}  // namespace

std::string k4() { return sym_clique("e", {"a1", "a2", "a3", "a4"}); }
std::string e_triangle() { return sym_clique("e", {"a1", "a2", "a3"}); }

Case parity_loop() {
  return {"(P and exists r.P) sub A\n(not P and exists r.(not P)) sub A\n", "r(a,a)\n", "q(x) :- A(x).\n"};
}

Case lasso() {
  return {"", "r(a,b1)\nr(b1,b2)\nr(b2,b3)\nr(b3,b1)\n", "q(x) :- r(x,y1), r(y1,y2), r(y2,y3), r(y3,y1).\n"};
}

Case clique3() {
  return {"", sym_clique("r", {"a1", "a2", "a3"}), "q() :- r(x1,x2), r(x2,x1), r(x1,x3), r(x3,x1), r(x2,x3), r(x3,x2).\n"};
}

Case paired_disjuncts() {
  return {"A sub A1 or A2\n((exists r.(A1 and B1)) and (exists r.(A1 and B2))) sub B\n"
          "((exists r.(A2 and B1)) and (exists r.(A2 and B2))) sub B\n",
          "r(a,b1)\nr(a,b2)\nA(b1)\nB1(b1)\nA(b2)\nB2(b2)\n", "q(x) :- B(x).\n"};
}

Case pairwise_and() {
  std::string o;
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) o += "(A" + std::to_string(i) + " and A" + std::to_string(j) + ") sub B\n";
  return {o, "r(a1,a2)\nr(a2,a3)\nr(a3,a1)\nA1(a1)\nA2(a2)\nA3(a3)\n", "q() :- B(x).\n"};
}

}  // namespace fx
