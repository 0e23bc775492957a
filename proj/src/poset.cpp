#include "gl3/poset.hpp"

#include <algorithm>
#include <stdexcept>

namespace gl3 {

bool in_T(const Triple& c) {
  return 0 <= c.c1 && 0 <= c.c2 && c.c1 <= c.c3 && c.c2 <= c.c3 &&
         c.c3 <= c.c1 + c.c2;
}

bool in_T1(const Triple& a) {
  return 1 <= a.c1 && 1 <= a.c2 && a.c1 <= a.c3 && a.c2 <= a.c3;
}

bool dominated_by(const Triple& c, const Triple& d) {
  return c.c1 <= d.c1 && c.c2 <= d.c2 && c.c3 <= d.c3;
}

bool in_Tm(const Triple& c, const Triple& m) {
  return in_T(c) && dominated_by(m, c);
}

Triple underline(const Triple& c) {
  return {std::max(c.c1, 1), std::max(c.c2, 1), std::max(c.c3, 1)};
}

PosetPredicates poset_predicates(const Triple& c, const Triple& d, const Triple& m) {
  return {in_T(c), in_T1(c), in_Tm(c, m), dominated_by(c, d)};
}

ConductorData::ConductorData(int M_, int N_) : M(M_), N(N_), m{M_, N_, N_} {
  if (M < 0 || N < 1 || M > N)
    throw std::invalid_argument("ConductorData: need 0 <= M <= N and N >= 1");
}

Triple descendant_candidate(const Triple& c, int i) {
  if (c.c1 == 0 && c.c2 == 0)
    throw std::invalid_argument("descendant_candidate: no descent below (0,0,0)");
  if (c.c1 == 0) {
    if (i != 3) throw std::invalid_argument("descendant_candidate: only i=3 when c1=0");
    return {0, c.c2 - 1, c.c2 - 1};
  }
  if (c.c2 == 0) {
    if (i != 3) throw std::invalid_argument("descendant_candidate: only i=3 when c2=0");
    return {c.c1 - 1, 0, c.c1 - 1};
  }
  switch (i) {
    case 1: return {c.c1 - 1, c.c2, c.c3};
    case 2: return {c.c1, c.c2 - 1, c.c3};
    case 3: return {c.c1, c.c2, c.c3 - 1};
    default: throw std::invalid_argument("descendant_candidate: index out of range");
  }
}

Descendants descendants(const Triple& c, const Triple& m) {
  if (!in_Tm(c, m)) throw std::invalid_argument("descendants: c not in T_m");
  Descendants out;
  std::vector<int> idx;
  if (c.c1 == 0 || c.c2 == 0)
    idx = {3};
  else
    idx = {1, 2, 3};
  for (int i : idx) {
    Triple cand = descendant_candidate(c, i);
    out.candidates.emplace_back(i, cand);
    if (in_Tm(cand, m)) out.sset.push_back(i);
  }
  return out;
}

Triple meet_family(const Triple& c, const std::vector<int>& I, const Triple& m) {
  if (!in_Tm(c, m)) throw std::invalid_argument("meet_family: c not in T_m");
  if (I.empty()) return c;
  Descendants des = descendants(c, m);
  Triple w{INT32_MAX, INT32_MAX, INT32_MAX};
  for (int i : I) {
    if (std::find(des.sset.begin(), des.sset.end(), i) == des.sset.end())
      throw std::invalid_argument("meet_family: index not in sset(c)");
    Triple cand = descendant_candidate(c, i);
    w.c1 = std::min(w.c1, cand.c1);
    w.c2 = std::min(w.c2, cand.c2);
    w.c3 = std::min(w.c3, cand.c3);
  }
  w.c3 = std::min(w.c3, w.c1 + w.c2);
  return w;
}

std::vector<Triple> enumerate_Tm(const Triple& m, const TmBound& bound) {
  std::vector<Triple> out;
  int hi1, hi2, hi3;
  if (bound.is_sum) {
    hi1 = hi2 = hi3 = bound.sum_cap;
  } else {
    hi1 = bound.cap.c1;
    hi2 = bound.cap.c2;
    hi3 = bound.cap.c3;
  }
  for (int c1 = m.c1; c1 <= hi1; ++c1)
    for (int c2 = m.c2; c2 <= hi2; ++c2)
      for (int c3 = std::max({m.c3, c1, c2}); c3 <= std::min(hi3, c1 + c2); ++c3) {
        Triple c{c1, c2, c3};
        if (bound.is_sum && c1 + c2 + c3 > bound.sum_cap) continue;
        if (in_Tm(c, m)) out.push_back(c);
      }
  std::sort(out.begin(), out.end());
  return out;
}

bool covers(const Triple& hi, const Triple& lo, const Triple& m) {
  if (!in_Tm(hi, m) || !in_Tm(lo, m)) return false;
  if (!(dominated_by(lo, hi) && lo != hi)) return false;
  for (int c1 = lo.c1; c1 <= hi.c1; ++c1)
    for (int c2 = lo.c2; c2 <= hi.c2; ++c2)
      for (int c3 = lo.c3; c3 <= hi.c3; ++c3) {
        Triple w{c1, c2, c3};
        if (w != lo && w != hi && in_Tm(w, m)) return false;
      }
  return true;
}

}  // namespace gl3
