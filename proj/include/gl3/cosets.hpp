#pragma once

#include <optional>
#include <vector>

#include "gl3/poset.hpp"
#include "gl3/qpoly.hpp"

namespace gl3 {

enum class Weyl { One, S1, S2, S1S2, S2S1, W0 };

const char* weyl_name(Weyl w);

// The subset W_{c,d} of Weyl elements contributing distinguished double coset
// representatives for the pair (c, d).
std::vector<Weyl> weyl_subset(const Triple& c, const Triple& d);

// The triples a indexing the unipotent lower-triangular representatives
// t_{a,x} for the pair (c, d), lexicographically ordered.
std::vector<Triple> tcd_set(const Triple& c, const Triple& d);

// Depth invariants of a triple a relative to (c, d): the precision at which
// the x-parameter of t_{a,x} is defined, and the coarser cutoff beyond which
// all x collapse.  Always depth_prime >= depth >= 0.
struct DepthPair {
  int depth = 0;
  int depth_prime = 0;
};
DepthPair depth_pair(const Triple& a, const Triple& c, const Triple& d);

// Label for one q-parametric family of equivalence classes of the unit
// parameter x of t_{a,x}.
//
// When a1 + a2 != a3 the classes are simply units at precision `precision`
// (one label for the whole family, phi(precision) classes).  When
// a1 + a2 = a3 the classes are stratified by val(x-1): one label per stratum
// val = 0, 1, ..., depth_prime - 1 (residues at precision
// min(val + depth, depth_prime)) plus a single deep class holding every x
// with val(x-1) >= depth_prime.
struct XClassLabel {
  bool one_plus_pi = false;
  std::optional<int> val;  // stratum; nullopt marks the deep class
  int precision = 0;
  friend bool operator==(const XClassLabel&, const XClassLabel&) = default;
};

// Number of x-classes the label stands for.
QPoly x_class_size(const XClassLabel& label, const DepthPair& depth);

// All x-class labels for a relative to (c, d), in stratum order.
std::vector<XClassLabel> x_class_labels(const Triple& a, const Triple& c,
                                        const Triple& d);

// nullopt = unbounded.  Bounds may be negative (then nothing qualifies).
using ValBound = std::optional<int>;

// Number of x-classes of X^a_{c,d} whose val(x-1) is at most val_bound.
// The bound only stratifies the a1 + a2 = a3 case; otherwise all classes
// count.  The deep class counts iff val_bound >= depth_prime.
QPoly x_count(const Triple& a, const Triple& c, const Triple& d, ValBound val_bound);

// One distinguished double coset representative (at x-class granularity for
// the t-family).
struct CosetRep {
  Weyl family = Weyl::W0;
  Triple a{};          // t-family only
  XClassLabel xclass;  // t-family only
  int alpha = 0;       // s1/s2 pairs and s1s2/s2s1 single parameter
  int beta = 0;        // s1/s2 pairs only

  static CosetRep t(const Triple& a, const XClassLabel& x);
  static CosetRep s1(int alpha, int beta);
  static CosetRep s2(int alpha, int beta);
  static CosetRep s1s2(int alpha);
  static CosetRep s2s1(int alpha);
  static CosetRep w0();
  friend bool operator==(const CosetRep&, const CosetRep&) = default;
};

// Complete set of distinguished representatives of C_c \ K / C_d, in family
// order (t, s1, s2, s1s2, s2s1, w0) and lexicographic order within a family.
std::vector<CosetRep> enumerate_R(const Triple& c, const Triple& d);

// |C_c \ K / C_d| as a polynomial in q.
QPoly count_R(const Triple& c, const Triple& d);

}  // namespace gl3
