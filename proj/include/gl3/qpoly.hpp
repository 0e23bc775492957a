#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace gl3 {

using Int = boost::multiprecision::cpp_int;

// Dense polynomial in the formal residue-field size q, with exact integer
// coefficients.  Every count and dimension in the library is one of these.
//
// Coefficients are stored low degree first; the highest stored coefficient is
// nonzero, and the zero polynomial stores nothing.
class QPoly {
public:
  QPoly() = default;
  QPoly(long long c) { if (c != 0) coeffs_.assign(1, Int(c)); }
  QPoly(const Int& c) { if (c != 0) coeffs_.assign(1, c); }

  // coef * q^deg
  static QPoly monomial(Int coef, int deg);
  // the variable itself, q^deg
  static QPoly q(int deg = 1) { return monomial(1, deg); }
  // coefficients low to high (normalized here)
  static QPoly from_coeffs(std::vector<Int> coeffs);

  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Int coeff(int i) const;
  const std::vector<Int>& coeffs() const { return coeffs_; }

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  QPoly operator-() const;

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend bool operator==(const QPoly& a, const QPoly& b) = default;

  // Expanded rendering, highest degree first: "q^7 - 3q^6 + 3q^5 - q^4".
  std::string str() const;

private:
  std::vector<Int> coeffs_;
  void normalize();
};

// Exact value of p at q0.  The formal variable stands for a residue-field
// size with q > 3, so q0 <= 3 is rejected.
Int poly_eval(const QPoly& p, const Int& q0);

// Number of units of the residue ring at precision k:
// 1 for k = 0, q^{k-1}(q-1) for k >= 1.
QPoly phi(int k);

}  // namespace gl3
