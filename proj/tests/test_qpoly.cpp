#include "doctest.h"

#include <random>

#include "gl3/qpoly.hpp"

using gl3::Int;
using gl3::QPoly;

namespace {

QPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 6), coef(-9, 9);
  std::vector<Int> cs(static_cast<size_t>(deg(rng)) + 1);
  for (auto& c : cs) c = coef(rng);
  return QPoly::from_coeffs(cs);
}

}  // namespace

TEST_SUITE("qpoly") {

TEST_CASE("ring identities on small inputs") {
  QPoly q = QPoly::q();
  CHECK(QPoly::from_coeffs({-1, 1}) + QPoly(1) == q);
  CHECK(QPoly::from_coeffs({-1, 1}) * QPoly::from_coeffs({-1, 1}) ==
        QPoly::from_coeffs({1, -2, 1}));
  // (q+1)(q^2+q+1) = q^3 + 2q^2 + 2q + 1
  CHECK(QPoly::from_coeffs({1, 1}) * QPoly::from_coeffs({1, 1, 1}) ==
        QPoly::from_coeffs({1, 2, 2, 1}));
}

TEST_CASE("normalization and degree") {
  CHECK(QPoly().is_zero());
  CHECK(QPoly().degree() == -1);
  CHECK(QPoly::from_coeffs({0, 0, 0}).is_zero());
  CHECK((QPoly::from_coeffs({1, 1}) - QPoly::from_coeffs({0, 1})) == QPoly(1));
  CHECK(QPoly::monomial(3, 4).degree() == 4);
  CHECK(QPoly::monomial(0, 4).is_zero());
}

TEST_CASE("evaluation") {
  QPoly alpha = QPoly::from_coeffs({1, 1}) * QPoly::from_coeffs({1, 1, 1});
  CHECK(poly_eval(alpha, 5) == 186);
  CHECK(poly_eval(QPoly::from_coeffs({-2, 1}), 5) == 3);
  QPoly p = QPoly::monomial(1, 4) * QPoly::from_coeffs({-1, 1}) *
            QPoly::from_coeffs({-1, 1}) * QPoly::from_coeffs({-1, 1});
  CHECK(poly_eval(p, 5) == 40000);
  CHECK_THROWS_AS(poly_eval(alpha, 3), std::invalid_argument);
  CHECK_THROWS_AS(poly_eval(alpha, 0), std::invalid_argument);
}

TEST_CASE("unit counts") {
  CHECK(gl3::phi(0) == QPoly(1));
  CHECK(gl3::phi(1) == QPoly::from_coeffs({-1, 1}));
  CHECK(gl3::phi(3) == QPoly::from_coeffs({0, 0, -1, 1}));
}

TEST_CASE("rendering") {
  CHECK(QPoly().str() == "0");
  CHECK(QPoly(7).str() == "7");
  CHECK(QPoly(-7).str() == "-7");
  CHECK(QPoly::q().str() == "q");
  CHECK(QPoly::from_coeffs({-1, 1}).str() == "q - 1");
  CHECK(QPoly::from_coeffs({0, -2, 0, 0, 1}).str() == "q^4 - 2q");
  QPoly p = QPoly::monomial(1, 4) * QPoly::from_coeffs({-1, 1}) *
            QPoly::from_coeffs({-1, 1}) * QPoly::from_coeffs({-1, 1});
  CHECK(p.str() == "q^7 - 3q^6 + 3q^5 - q^4");
}

TEST_CASE("ring axioms and evaluation homomorphism on random triples") {
  std::mt19937 rng(20260810);
  for (int i = 0; i < 200; ++i) {
    QPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    Int q0 = 5 + (i % 3) * 2;
    CHECK(poly_eval(a * b, q0) == poly_eval(a, q0) * poly_eval(b, q0));
    CHECK(poly_eval(a + b, q0) == poly_eval(a, q0) + poly_eval(b, q0));
  }
}

}  // TEST_SUITE
