#pragma once

#include <compare>
#include <utility>
#include <vector>

namespace gl3 {

// A point of the index poset: the three valuation exponents cutting out the
// compact open subgroup C_c inside GL(3,R).
struct Triple {
  int c1 = 0, c2 = 0, c3 = 0;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

// Membership in T: 0 <= c1, c2 <= c3 <= c1 + c2.
bool in_T(const Triple& c);
// Membership in the shifted cone T^1: 1 <= a1, a2 <= a3.
bool in_T1(const Triple& a);
// Componentwise partial order c <= d.
bool dominated_by(const Triple& c, const Triple& d);
// c lies in T and above the base point m.
bool in_Tm(const Triple& c, const Triple& m);

// Componentwise max with 1; lands in T when c does.
Triple underline(const Triple& c);

struct PosetPredicates {
  bool in_T = false, in_T1 = false, in_Tm = false, leq_cd = false;
};
PosetPredicates poset_predicates(const Triple& c, const Triple& d, const Triple& m);

// Validated conductor pair: 0 <= M <= N, N >= 1, with base point m = (M,N,N).
struct ConductorData {
  int M = 0;
  int N = 1;
  Triple m{0, 1, 1};
  ConductorData(int M, int N);
};

// The one-step drop c_{i} along coordinate i.  When c1 = 0 (resp. c2 = 0)
// only i = 3 is meaningful and drops two coordinates at once.
Triple descendant_candidate(const Triple& c, int i);

// Candidate descendants of c together with sset, the indices whose candidate
// stays inside T_m.
struct Descendants {
  std::vector<std::pair<int, Triple>> candidates;
  std::vector<int> sset;
};
Descendants descendants(const Triple& c, const Triple& m);

// Greatest element of T_m lying below c_{i} for every i in I; I must be a
// subset of sset(c), and I = {} returns c itself.  Computed as the
// componentwise min of the candidates with the third coordinate clamped to
// the sum of the first two (validated against brute force in tests).
Triple meet_family(const Triple& c, const std::vector<int>& I, const Triple& m);

// Finite enumeration window for T_m.
struct TmBound {
  bool is_sum = false;
  Triple cap{};
  int sum_cap = 0;
  static TmBound componentwise(Triple cap) { return {false, cap, 0}; }
  static TmBound sum(int cap) { return {true, {}, cap}; }
};

// All c in T_m within the bound, lexicographically ordered.
std::vector<Triple> enumerate_Tm(const Triple& m, const TmBound& bound);

// True when hi covers lo in T_m (hi > lo with nothing of T_m strictly
// between them).
bool covers(const Triple& hi, const Triple& lo, const Triple& m);

}  // namespace gl3
