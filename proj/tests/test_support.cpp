#include "doctest.h"

#include <algorithm>
#include <optional>

#include "gl3/support.hpp"

using namespace gl3;

namespace {

QPoly alpha() { return QPoly::from_coeffs({1, 1}) * QPoly::from_coeffs({1, 1, 1}); }

std::vector<std::optional<int>> val_grid(int hi) {
  std::vector<std::optional<int>> vals;
  for (int v = 0; v <= hi; ++v) vals.push_back(v);
  vals.push_back(std::nullopt);  // x = 1 exactly
  return vals;
}

// the self-pair support conditions specialized to c = d = (n,n,n), stated via
// val(r_x) = a3 + val(x-1) in the balanced case
bool level_pair_supported(const Triple& a, std::optional<int> val, int n, int M, int N) {
  if (a.c1 >= M && a.c2 >= N) return true;
  auto balanced_tail = [&](int t) {
    if (a.c1 + a.c2 < a.c3) return a.c3 <= n - t;
    if (a.c1 + a.c2 > a.c3) return a.c1 + a.c2 >= t - n + 2 * a.c3;
    return a.c3 <= n - t && val.has_value() && a.c3 + *val <= n - t;
  };
  if (a.c1 < M && a.c2 >= N) return balanced_tail(M);
  if (a.c1 >= N && a.c2 < N) return balanced_tail(N);
  return false;
}

}  // namespace

TEST_SUITE("support") {

TEST_CASE("support decisions for named representatives") {
  ConductorData m22(2, 2);
  SupportDecision s = supports(CosetRep::s1(2, 2), {4, 4, 4}, {4, 4, 4}, m22);
  CHECK(s.supported);
  CHECK(s.case_tag == SupportCase::II);

  // t_{(1,2,2),x} at (2,2,2): the opposite-triple bound fails
  std::vector<CosetRep> reps = enumerate_R({2, 2, 2}, {2, 2, 2});
  auto it = std::find_if(reps.begin(), reps.end(), [](const CosetRep& r) {
    return r.family == Weyl::One && r.a == Triple{1, 2, 2};
  });
  REQUIRE(it != reps.end());
  s = supports(*it, {2, 2, 2}, {2, 2, 2}, m22);
  CHECK_FALSE(s.supported);
  CHECK(s.case_tag == SupportCase::I2b);

  ConductorData m01(0, 1);
  reps = enumerate_R({1, 1, 1}, {1, 1, 1});
  auto t111 = std::find_if(reps.begin(), reps.end(), [](const CosetRep& r) {
    return r.family == Weyl::One;
  });
  REQUIRE(t111 != reps.end());
  s = supports(*t111, {1, 1, 1}, {1, 1, 1}, m01);
  CHECK(s.supported);
  CHECK(s.case_tag == SupportCase::I1);

  // never-supporting families
  s = supports(CosetRep::w0(), {1, 1, 1}, {1, 1, 1}, m01);
  CHECK_FALSE(s.supported);
  CHECK(s.case_tag == SupportCase::ExcludedW);

  // rejects representatives from a different pair
  CHECK_THROWS_AS(supports(CosetRep::s1(5, 5), {1, 1, 1}, {1, 1, 1}, m01),
                  std::invalid_argument);
}

TEST_CASE("intertwining dimensions of the induced characters") {
  ConductorData m22(2, 2);
  CHECK(count_S({2, 2, 2}, {2, 2, 2}, m22) == QPoly(1));
  CHECK(count_S({2, 2, 3}, {2, 2, 2}, m22) == QPoly(1));
  ConductorData m01(0, 1);
  CHECK(count_S({1, 1, 1}, {1, 1, 1}, m01) == QPoly(2));
  ConductorData m11(1, 1);
  CHECK(count_S({1, 1, 1}, {1, 1, 1}, m11) == QPoly(1));

  // values around (3,3,4) at M = N = 2, frozen from a hand evaluation of the
  // support criterion clause by clause
  CHECK(count_S({3, 3, 4}, {3, 3, 4}, m22) == QPoly::from_coeffs({9, 1}));
  CHECK(count_S({3, 3, 4}, {2, 3, 4}, m22) == QPoly(6));
  CHECK(count_S({3, 3, 4}, {3, 3, 3}, m22) == QPoly(7));
  CHECK(count_S({3, 3, 4}, {2, 2, 4}, m22) == QPoly(3));
  CHECK(count_S({2, 3, 4}, {3, 2, 4}, m22) == QPoly(3));
  CHECK(count_S({2, 2, 3}, {2, 2, 3}, m22) == QPoly(2));
}

TEST_CASE("induced dimensions") {
  ConductorData m01(0, 1);
  CHECK(dim_U({1, 1, 1}, m01) == alpha());
  CHECK(dim_U({0, 1, 1}, m01) == QPoly::from_coeffs({1, 1, 1}));
  ConductorData m22(2, 2);
  CHECK(dim_U({2, 2, 3}, m22) == alpha() * QPoly::monomial(1, 4));
  CHECK_THROWS_AS(dim_U({1, 1, 1}, m22), std::invalid_argument);  // below base
}

TEST_CASE("quotient dimensions") {
  ConductorData m22(2, 2);
  QPoly qm1 = QPoly::from_coeffs({-1, 1});
  CHECK(dim_V({3, 3, 4}, m22) == QPoly::monomial(1, 4) * qm1 * qm1 * qm1 * alpha());
  CHECK(dim_V({2, 2, 2}, m22) == QPoly::monomial(1, 3) * alpha());
  ConductorData m12(1, 2);
  CHECK(dim_V({1, 2, 2}, m12) == QPoly::monomial(1, 2) * alpha());
  CHECK(dim_V({2, 3, 4}, m12) ==
        QPoly::monomial(1, 4) * qm1 * QPoly::from_coeffs({-2, 1}) * alpha());
}

TEST_CASE("quotient intertwining numbers") {
  ConductorData m22(2, 2);
  IntertwiningReport r = intertwine_V({3, 3, 4}, {3, 3, 4}, m22);
  CHECK(r.i_VV == QPoly::from_coeffs({-1, 1}));
  CHECK(r.i_UU == QPoly::from_coeffs({9, 1}));
  CHECK(r.i_UU == r.subset_terms.at({{}, {}}));
  CHECK(r.subset_terms.size() == 64);

  CHECK(intertwine_V({2, 4, 4}, {2, 4, 4}, m22).i_VV == QPoly(3));

  ConductorData m12(1, 2);
  CHECK(intertwine_V({1, 3, 4}, {2, 2, 4}, m12).i_VV == QPoly(1));
  CHECK(intertwine_V({2, 3, 4}, {2, 3, 4}, m12).i_VV == QPoly::from_coeffs({-2, 1}));
}

TEST_CASE("signed sum reassembles i_VV") {
  ConductorData m12(1, 2);
  IntertwiningReport r = intertwine_V({2, 3, 4}, {1, 3, 4}, m12);
  QPoly sum;
  for (const auto& [key, term] : r.subset_terms) {
    if ((key.first.size() + key.second.size()) % 2 == 0)
      sum += term;
    else
      sum -= term;
  }
  CHECK(sum == r.i_VV);
}

TEST_CASE("limiting support membership") {
  ConductorData m12(1, 2);
  CHECK(total_support_member(CosetRep::t({1, 2, 2}, {}), m12));
  CHECK_FALSE(total_support_member(CosetRep::t({1, 1, 3}, {}), m12));
  CHECK_FALSE(total_support_member(CosetRep::s1(1, 3), m12));
  CHECK(total_support_member(CosetRep::s1(2, 3), m12));
  CHECK_FALSE(total_support_member(CosetRep::w0(), m12));
  CHECK_FALSE(total_support_member(CosetRep::s1s2(1), m12));
  CHECK_THROWS_AS(total_support_member(CosetRep::t({0, 1, 1}, {}), m12),
                  std::invalid_argument);
}

TEST_CASE("irreducibility reports") {
  ConductorData m22(2, 2);
  IrreducibilityReport r = irreducibility_report({2, 3, 3}, m22);
  CHECK(r.i_vv == QPoly(2));
  CHECK_FALSE(r.irreducible);
  REQUIRE(r.tags.size() == 1);
  CHECK(r.tags[0].tag == "first_min_face");
  CHECK(r.tags[0].matches);

  r = irreducibility_report({2, 2, 4}, m22);
  CHECK(r.irreducible);
  bool top = false;
  for (const auto& t : r.tags) top |= t.tag == "top_face" && t.matches;
  CHECK(top);

  r = irreducibility_report({3, 3, 3}, m22);
  CHECK(r.irreducible);
  bool bottom = false, level = false;
  for (const auto& t : r.tags) {
    bottom |= t.tag == "bottom_face" && t.matches;
    level |= t.tag == "principal_level" && t.matches;
  }
  CHECK(bottom);
  CHECK(level);

  r = irreducibility_report({3, 3, 4}, m22);
  CHECK_FALSE(r.irreducible);
  CHECK(r.i_vv == QPoly::from_coeffs({-1, 1}));
  CHECK(r.tags.empty());
}

TEST_CASE("containment: supported counts stay below representative counts") {
  ConductorData cd(1, 2);
  std::vector<Triple> ts = enumerate_Tm(cd.m, TmBound::componentwise({3, 4, 4}));
  for (const Triple& c : ts)
    for (const Triple& d : ts)
      CHECK(poly_eval(count_S(c, d, cd), 5) <= poly_eval(count_R(c, d), 5));
}

TEST_CASE("symmetry of the intertwining count") {
  for (const ConductorData& cd : {ConductorData(0, 1), ConductorData(1, 2),
                                  ConductorData(2, 2)}) {
    std::vector<Triple> ts = enumerate_Tm(
        cd.m, TmBound::componentwise({cd.m.c1 + 2, cd.m.c2 + 2, cd.m.c3 + 2}));
    for (const Triple& c : ts)
      for (const Triple& d : ts) CHECK(count_S(c, d, cd) == count_S(d, c, cd));
  }
}

TEST_CASE("order monotonicity of support") {
  for (const ConductorData& cd : {ConductorData(0, 1), ConductorData(1, 2)}) {
    std::vector<Triple> ts = enumerate_Tm(
        cd.m, TmBound::componentwise({cd.m.c1 + 2, cd.m.c2 + 2, cd.m.c3 + 2}));
    auto steps = [&](const Triple& t) {
      std::vector<Triple> out;
      for (Triple up : {Triple{t.c1 + 1, t.c2, t.c3}, Triple{t.c1, t.c2 + 1, t.c3},
                        Triple{t.c1, t.c2, t.c3 + 1}})
        if (in_Tm(up, cd.m)) out.push_back(up);
      return out;
    };
    for (const Triple& c : ts)
      for (const Triple& d : ts) {
        std::vector<std::pair<Triple, Triple>> ups;
        for (const Triple& cu : steps(c)) ups.emplace_back(cu, d);
        for (const Triple& du : steps(d)) ups.emplace_back(c, du);
        for (const auto& [cu, du] : ups) {
          // index triples only grow
          std::vector<Triple> small = tcd_set(c, d), big = tcd_set(cu, du);
          for (const Triple& a : small)
            CHECK(std::find(big.begin(), big.end(), a) != big.end());
          // t-representatives: verdicts at fixed x never flip off
          for (const Triple& a : small)
            for (const auto& val : val_grid(5))
              if (t_supports_at_val(a, val, c, d, cd).supported)
                CHECK(t_supports_at_val(a, val, cu, du, cd).supported);
          // s-representatives carry over by their (alpha, beta) labels
          for (const CosetRep& rep : enumerate_R(c, d)) {
            if (rep.family != Weyl::S1 && rep.family != Weyl::S2) continue;
            if (supports(rep, c, d, cd).supported)
              CHECK(supports(rep, cu, du, cd).supported);
          }
        }
      }
  }
}

TEST_CASE("quotient dimensions telescope to the induced dimension") {
  for (const ConductorData& cd : {ConductorData(0, 1), ConductorData(1, 2),
                                  ConductorData(2, 2)}) {
    std::vector<Triple> ts = enumerate_Tm(
        cd.m, TmBound::componentwise({cd.m.c1 + 2, cd.m.c2 + 2, cd.m.c3 + 2}));
    for (const Triple& c : ts) {
      QPoly sum;
      for (const Triple& d : ts)
        if (dominated_by(d, c)) sum += dim_V(d, cd);
      CHECK(sum == dim_U(c, cd));
    }
  }
  ConductorData m22(2, 2);
  CHECK(dim_V({2, 2, 2}, m22) + dim_V({2, 2, 3}, m22) == dim_U({2, 2, 3}, m22));
}

TEST_CASE("positivity at concrete residue sizes") {
  ConductorData cd(1, 2);
  std::vector<Triple> ts = enumerate_Tm(cd.m, TmBound::componentwise({3, 4, 4}));
  for (const Triple& c : ts) {
    for (long long q0 : {5, 7, 9}) CHECK(poly_eval(dim_V(c, cd), q0) > 0);
    for (const Triple& d : ts)
      for (long long q0 : {5, 7, 9})
        CHECK(poly_eval(intertwine_V(c, d, cd).i_VV, q0) >= 0);
  }
}

TEST_CASE("base point is irreducible") {
  for (int N = 1; N <= 3; ++N)
    for (int M = 0; M <= N; ++M) {
      ConductorData cd(M, N);
      CHECK(intertwine_V(cd.m, cd.m, cd).i_VV == QPoly(1));
    }
}

TEST_CASE("self-pair specialization at full congruence levels") {
  for (int N = 1; N <= 3; ++N)
    for (int M = 0; M <= N; ++M) {
      ConductorData cd(M, N);
      for (int n = N; n <= N + 3; ++n) {
        Triple c{n, n, n};
        for (const Triple& a : tcd_set(c, c))
          for (const auto& val : val_grid(n + 1))
            CHECK(t_supports_at_val(a, val, c, c, cd).supported ==
                  level_pair_supported(a, val, n, M, N));
        // s-family boxes collapse to N <= alpha, beta <= n - M (resp. n - N)
        for (const CosetRep& rep : enumerate_R(c, c)) {
          if (rep.family == Weyl::S1)
            CHECK(supports(rep, c, c, cd).supported ==
                  (N <= rep.alpha && rep.alpha <= n - M && N <= rep.beta &&
                   rep.beta <= n - M));
          if (rep.family == Weyl::S2)
            CHECK(supports(rep, c, c, cd).supported ==
                  (N <= rep.alpha && rep.alpha <= n - N && N <= rep.beta &&
                   rep.beta <= n - N));
        }
      }
    }
}

}  // TEST_SUITE
