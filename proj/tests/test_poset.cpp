#include "doctest.h"

#include <algorithm>

#include "gl3/poset.hpp"

using namespace gl3;

namespace {

// brute-force greatest element of {d in T_m : d <= cand_i for all i in I}
Triple meet_bruteforce(const Triple& c, const std::vector<int>& I, const Triple& m) {
  std::vector<Triple> below;
  for (const Triple& d : enumerate_Tm(m, TmBound::componentwise(c))) {
    bool ok = true;
    for (int i : I) ok &= dominated_by(d, descendant_candidate(c, i));
    if (ok) below.push_back(d);
  }
  REQUIRE(!below.empty());
  for (const Triple& top : below) {
    bool is_max = true;
    for (const Triple& d : below) is_max &= dominated_by(d, top);
    if (is_max) return top;
  }
  REQUIRE(false);
  return m;
}

}  // namespace

TEST_SUITE("poset") {

TEST_CASE("membership predicates") {
  CHECK(in_T({2, 3, 4}));
  CHECK_FALSE(in_T({1, 2, 4}));  // c3 > c1 + c2
  CHECK_FALSE(in_T({4, 4, 3}));  // c3 < c1
  CHECK(in_T({0, 0, 0}));
  CHECK(in_T1({1, 1, 3}));  // T^1 has no upper constraint on a3
  CHECK_FALSE(in_T1({0, 1, 1}));
  CHECK(dominated_by({2, 2, 2}, {3, 3, 4}));
  CHECK_FALSE(dominated_by({3, 3, 4}, {2, 2, 2}));

  PosetPredicates p = poset_predicates({2, 3, 4}, {3, 3, 4}, {2, 2, 2});
  CHECK(p.in_T);
  CHECK(p.in_T1);
  CHECK(p.in_Tm);
  CHECK(p.leq_cd);
  CHECK_FALSE(poset_predicates({1, 2, 4}, {1, 2, 4}, {0, 1, 1}).in_T);
}

TEST_CASE("conductor validation") {
  CHECK_NOTHROW(ConductorData(0, 1));
  CHECK_NOTHROW(ConductorData(2, 2));
  CHECK_THROWS_AS(ConductorData(0, 0), std::invalid_argument);  // unramified excluded
  CHECK_THROWS_AS(ConductorData(2, 1), std::invalid_argument);
  CHECK_THROWS_AS(ConductorData(-1, 1), std::invalid_argument);
  CHECK(ConductorData(1, 2).m == Triple{1, 2, 2});
}

TEST_CASE("underline") {
  CHECK(underline({0, 1, 1}) == Triple{1, 1, 1});
  CHECK(underline({2, 3, 4}) == Triple{2, 3, 4});
  CHECK(underline({0, 2, 2}) == Triple{1, 2, 2});
}

TEST_CASE("descendants and sset") {
  Descendants d = descendants({2, 2, 2}, {2, 2, 2});
  CHECK(d.sset.empty());
  CHECK(d.candidates.size() == 3);

  d = descendants({2, 3, 3}, {2, 2, 2});
  CHECK(d.sset == std::vector<int>{2});
  CHECK(descendant_candidate({2, 3, 3}, 2) == Triple{2, 2, 3});

  // c1 = 0: only the double-drop candidate
  d = descendants({0, 2, 2}, {0, 2, 2});
  CHECK(d.candidates.size() == 1);
  CHECK(d.candidates[0] == std::pair<int, Triple>{3, {0, 1, 1}});
  CHECK(d.sset.empty());

  CHECK_THROWS_AS(descendants({1, 1, 1}, {2, 2, 2}), std::invalid_argument);
}

TEST_CASE("descendant drops component sum by one, or two when degenerate") {
  for (const Triple& m : {Triple{0, 1, 1}, Triple{1, 2, 2}, Triple{2, 2, 2}}) {
    for (const Triple& c : enumerate_Tm(m, TmBound::componentwise({5, 5, 5}))) {
      Descendants d = descendants(c, m);
      for (int i : d.sset) {
        Triple cand = descendant_candidate(c, i);
        CHECK(dominated_by(cand, c));
        CHECK(cand != c);
        int drop = (c.c1 + c.c2 + c.c3) - (cand.c1 + cand.c2 + cand.c3);
        CHECK(drop == ((c.c1 == 0 || c.c2 == 0) ? 2 : 1));
      }
    }
  }
}

TEST_CASE("meet family examples") {
  // base point (0,0,0) on purpose: below any conductor pair
  CHECK(meet_family({2, 3, 4}, {1, 2}, {0, 0, 0}) == Triple{1, 2, 3});
  CHECK(meet_family({3, 3, 4}, {1, 2}, {2, 2, 2}) == Triple{2, 2, 4});
  CHECK(meet_family({2, 3, 4}, {1, 2}, {1, 2, 2}) == Triple{1, 2, 3});
  CHECK(meet_family({2, 3, 4}, {}, {1, 2, 2}) == Triple{2, 3, 4});
  CHECK_THROWS_AS(meet_family({2, 2, 2}, {1}, {2, 2, 2}), std::invalid_argument);
}

TEST_CASE("meet family equals the brute-force maximum") {
  for (const Triple& m :
       {Triple{0, 0, 0}, Triple{0, 1, 1}, Triple{1, 2, 2}, Triple{2, 2, 2}}) {
    for (const Triple& c : enumerate_Tm(m, TmBound::componentwise({4, 4, 5}))) {
      if (c == Triple{0, 0, 0}) continue;
      Descendants des = descendants(c, m);
      for (unsigned mask = 1; mask < (1u << des.sset.size()); ++mask) {
        std::vector<int> I;
        for (size_t i = 0; i < des.sset.size(); ++i)
          if (mask & (1u << i)) I.push_back(des.sset[i]);
        Triple got = meet_family(c, I, m);
        CHECK(got == meet_bruteforce(c, I, m));
        // maximality: d <= cand_i for all i <=> d <= meet
        for (const Triple& d : enumerate_Tm(m, TmBound::componentwise(c))) {
          bool below_all = true;
          for (int i : I) below_all &= dominated_by(d, descendant_candidate(c, i));
          CHECK(below_all == dominated_by(d, got));
        }
      }
    }
  }
}

TEST_CASE("enumeration windows") {
  std::vector<Triple> fig1 = enumerate_Tm({2, 2, 2}, TmBound::componentwise({4, 4, 4}));
  CHECK(fig1.size() == 14);
  CHECK(std::is_sorted(fig1.begin(), fig1.end()));

  std::vector<Triple> fig2 = enumerate_Tm({1, 2, 2}, TmBound::sum(9));
  CHECK(fig2.size() == 13);
  for (const Triple& t : fig2) CHECK(t.c1 + t.c2 + t.c3 <= 9);

  CHECK(enumerate_Tm({1, 1, 1}, TmBound::componentwise({1, 1, 1})) ==
        std::vector<Triple>{{1, 1, 1}});
}

TEST_CASE("enumeration closed under meets") {
  Triple m{1, 2, 2};
  std::vector<Triple> ts = enumerate_Tm(m, TmBound::componentwise({4, 4, 5}));
  for (const Triple& c : ts) {
    Descendants des = descendants(c, m);
    for (unsigned mask = 0; mask < (1u << des.sset.size()); ++mask) {
      std::vector<int> I;
      for (size_t i = 0; i < des.sset.size(); ++i)
        if (mask & (1u << i)) I.push_back(des.sset[i]);
      Triple w = meet_family(c, I, m);
      CHECK(std::binary_search(ts.begin(), ts.end(), w));
    }
  }
}

TEST_CASE("covering relations") {
  Triple m{2, 2, 2};
  CHECK(covers({2, 2, 3}, {2, 2, 2}, m));
  CHECK(covers({3, 3, 4}, {2, 3, 4}, m));
  CHECK_FALSE(covers({3, 3, 4}, {2, 2, 4}, m));  // (2,3,4) sits between
  CHECK_FALSE(covers({2, 2, 2}, {2, 2, 3}, m));
}

}  // TEST_SUITE
