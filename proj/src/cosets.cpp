#include "gl3/cosets.hpp"

#include <algorithm>
#include <stdexcept>

namespace gl3 {

const char* weyl_name(Weyl w) {
  switch (w) {
    case Weyl::One: return "t";
    case Weyl::S1: return "s1";
    case Weyl::S2: return "s2";
    case Weyl::S1S2: return "s1s2";
    case Weyl::S2S1: return "s2s1";
    case Weyl::W0: return "w0";
  }
  return "?";
}

static void require_in_T(const Triple& c, const char* who) {
  if (!in_T(c)) throw std::invalid_argument(std::string(who) + ": triple not in T");
}

std::vector<Weyl> weyl_subset(const Triple& c, const Triple& d) {
  require_in_T(c, "weyl_subset");
  require_in_T(d, "weyl_subset");
  const Triple one{1, 1, 1};
  if (dominated_by(one, c) && dominated_by(one, d))
    return {Weyl::One, Weyl::S1, Weyl::S2, Weyl::S1S2, Weyl::S2S1, Weyl::W0};
  if (c.c1 * d.c1 * (c.c2 + d.c2) > 0 && c.c2 * d.c2 == 0)
    return {Weyl::One, Weyl::S1, Weyl::W0};
  if (c.c1 * d.c1 == 0 && (c.c1 + d.c1) * c.c2 * d.c2 > 0)
    return {Weyl::One, Weyl::S2, Weyl::W0};
  if (c.c1 * c.c2 == 0 && d.c1 * d.c2 == 0 &&
      (c.c1 + c.c2) * (d.c1 + d.c2) > 0)
    return {Weyl::One, Weyl::W0};
  return {Weyl::One};
}

std::vector<Triple> tcd_set(const Triple& c, const Triple& d) {
  require_in_T(c, "tcd_set");
  require_in_T(d, "tcd_set");
  std::vector<Triple> out;
  const Triple zero{0, 0, 0};
  if (c == zero || d == zero) {
    out.push_back({1, 1, 1});
    return out;
  }
  if (c.c2 * d.c2 > 0 && c.c1 == 0 && d.c1 == 0) {
    for (int a = 1; a <= std::min(c.c2, d.c2); ++a) out.push_back({1, a, a});
    return out;
  }
  if (c.c1 * d.c1 > 0 && c.c2 == 0 && d.c2 == 0) {
    for (int a = 1; a <= std::min(c.c1, d.c1); ++a) out.push_back({a, 1, a});
    return out;
  }
  const Triple uc = underline(c), ud = underline(d);
  for (int a1 = 1; a1 <= std::min(uc.c1, ud.c1); ++a1)
    for (int a2 = 1; a2 <= std::min(uc.c2, ud.c2); ++a2) {
      int hi = std::min({uc.c3, ud.c3, a1 + uc.c2, ud.c1 + a2});
      for (int a3 = std::max(a1, a2); a3 <= hi; ++a3) out.push_back({a1, a2, a3});
    }
  std::sort(out.begin(), out.end());
  return out;
}

DepthPair depth_pair(const Triple& a, const Triple& c, const Triple& d) {
  int inner = std::min({a.c1, a.c2, a.c3 - a.c1, a.c3 - a.c2,
                        c.c1 - a.c1, c.c2 - a.c2, c.c3 - a.c3,
                        d.c1 - a.c1, d.c2 - a.c2, d.c3 - a.c3,
                        a.c1 + c.c2 - a.c3, d.c1 + a.c2 - a.c3});
  int prime = std::min({d.c3 - a.c3, c.c3 - a.c3, c.c1 - a.c1, d.c2 - a.c2});
  return {std::max(0, inner), std::max(0, prime)};
}

std::vector<XClassLabel> x_class_labels(const Triple& a, const Triple& c,
                                        const Triple& d) {
  DepthPair dp = depth_pair(a, c, d);
  std::vector<XClassLabel> out;
  if (a.c1 + a.c2 != a.c3) {
    out.push_back({false, std::nullopt, dp.depth});
    return out;
  }
  for (int i = 0; i < dp.depth_prime; ++i)
    out.push_back({true, i, std::min(i + dp.depth, dp.depth_prime)});
  out.push_back({true, std::nullopt, dp.depth_prime});
  return out;
}

QPoly x_class_size(const XClassLabel& label, const DepthPair& dp) {
  if (!label.one_plus_pi) return phi(dp.depth);
  if (!label.val) return QPoly(1);
  int i = *label.val;
  if (i == 0) {
    if (dp.depth == 0) return QPoly(1);
    // units at precision depth whose residue is not 1 mod p: q^{depth-1}(q-2)
    return QPoly::monomial(1, dp.depth - 1) * QPoly::from_coeffs({-2, 1});
  }
  return phi(std::min(dp.depth, dp.depth_prime - i));
}

QPoly x_count(const Triple& a, const Triple& c, const Triple& d, ValBound val_bound) {
  DepthPair dp = depth_pair(a, c, d);
  if (a.c1 + a.c2 != a.c3) return phi(dp.depth);
  QPoly total;
  for (const XClassLabel& label : x_class_labels(a, c, d)) {
    if (val_bound) {
      if (label.val && *label.val > *val_bound) continue;
      if (!label.val && *val_bound < dp.depth_prime) continue;
    }
    total += x_class_size(label, dp);
  }
  return total;
}

CosetRep CosetRep::t(const Triple& a, const XClassLabel& x) {
  CosetRep r;
  r.family = Weyl::One;
  r.a = a;
  r.xclass = x;
  return r;
}
CosetRep CosetRep::s1(int alpha, int beta) {
  CosetRep r;
  r.family = Weyl::S1;
  r.alpha = alpha;
  r.beta = beta;
  return r;
}
CosetRep CosetRep::s2(int alpha, int beta) {
  CosetRep r;
  r.family = Weyl::S2;
  r.alpha = alpha;
  r.beta = beta;
  return r;
}
CosetRep CosetRep::s1s2(int alpha) {
  CosetRep r;
  r.family = Weyl::S1S2;
  r.alpha = alpha;
  return r;
}
CosetRep CosetRep::s2s1(int alpha) {
  CosetRep r;
  r.family = Weyl::S2S1;
  r.alpha = alpha;
  return r;
}
CosetRep CosetRep::w0() { return CosetRep{}; }

namespace {

// (alpha, beta) ranges of the s1/s2 families per Weyl element.
struct SPairBounds {
  int alpha_hi = 0, beta_hi = 0, diff_lo = 0, diff_hi = 0;
};

SPairBounds s_pair_bounds(Weyl w, const Triple& c, const Triple& d) {
  const Triple uc = underline(c), ud = underline(d);
  if (w == Weyl::S1)
    return {std::min(ud.c2, c.c3), std::min(uc.c2, d.c3), -c.c1, d.c1};
  return {std::min(ud.c1, c.c3), std::min(uc.c1, d.c3), -c.c2, d.c2};
}

}  // namespace

std::vector<CosetRep> enumerate_R(const Triple& c, const Triple& d) {
  std::vector<Weyl> ws = weyl_subset(c, d);
  auto has = [&](Weyl w) { return std::find(ws.begin(), ws.end(), w) != ws.end(); };
  std::vector<CosetRep> out;

  if (has(Weyl::One))
    for (const Triple& a : tcd_set(c, d))
      for (const XClassLabel& label : x_class_labels(a, c, d))
        out.push_back(CosetRep::t(a, label));

  for (Weyl w : {Weyl::S1, Weyl::S2}) {
    if (!has(w)) continue;
    SPairBounds b = s_pair_bounds(w, c, d);
    for (int alpha = 1; alpha <= b.alpha_hi; ++alpha)
      for (int beta = 1; beta <= b.beta_hi; ++beta) {
        int diff = beta - alpha;
        if (diff < b.diff_lo || diff > b.diff_hi) continue;
        out.push_back(w == Weyl::S1 ? CosetRep::s1(alpha, beta)
                                    : CosetRep::s2(alpha, beta));
      }
  }

  if (has(Weyl::S1S2))
    for (int alpha = 1; alpha <= std::min(d.c1, c.c2); ++alpha)
      out.push_back(CosetRep::s1s2(alpha));
  if (has(Weyl::S2S1))
    for (int alpha = 1; alpha <= std::min(c.c1, d.c2); ++alpha)
      out.push_back(CosetRep::s2s1(alpha));
  if (has(Weyl::W0)) out.push_back(CosetRep::w0());
  return out;
}

QPoly count_R(const Triple& c, const Triple& d) {
  QPoly total;
  for (const CosetRep& rep : enumerate_R(c, d)) {
    if (rep.family == Weyl::One)
      total += x_class_size(rep.xclass, depth_pair(rep.a, c, d));
    else
      total += QPoly(1);
  }
  return total;
}

}  // namespace gl3
