#include "gl3/qpoly.hpp"

#include <sstream>
#include <stdexcept>

namespace gl3 {

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

QPoly QPoly::monomial(Int coef, int deg) {
  QPoly p;
  if (deg < 0) throw std::invalid_argument("monomial: negative degree");
  if (coef != 0) {
    p.coeffs_.assign(static_cast<size_t>(deg) + 1, Int(0));
    p.coeffs_.back() = std::move(coef);
  }
  return p;
}

QPoly QPoly::from_coeffs(std::vector<Int> coeffs) {
  QPoly p;
  p.coeffs_ = std::move(coeffs);
  p.normalize();
  return p;
}

Int QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return 0;
  return coeffs_[static_cast<size_t>(i)];
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), 0);
  for (size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  QPoly r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Int(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  r.normalize();
  return r;
}

QPoly& QPoly::operator*=(const QPoly& o) { return *this = *this * o; }

QPoly QPoly::operator-() const {
  QPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string QPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    Int c = coeff(i);
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    Int a = abs(c);
    if (a != 1 || i == 0) out << a.str();
    if (i >= 1) out << "q";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

Int poly_eval(const QPoly& p, const Int& q0) {
  if (q0 <= 3) throw std::invalid_argument("poly_eval: q0 must be at least 4");
  Int v = 0;
  for (int i = p.degree(); i >= 0; --i) v = v * q0 + p.coeff(i);
  return v;
}

QPoly phi(int k) {
  if (k < 0) throw std::invalid_argument("phi: negative precision");
  if (k == 0) return QPoly(1);
  return QPoly::monomial(1, k - 1) * QPoly::from_coeffs({-1, 1});
}

}  // namespace gl3
