#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gl3/cosets.hpp"
#include "gl3/poset.hpp"
#include "gl3/qpoly.hpp"

namespace gl3 {

// Which clause of the support criterion decided the verdict.  The i* tags
// apply to t-representatives (split by how a1 + a2 compares to a3 and which
// of a1, a2 sits below its conductor), ii/iii to the s1/s2 families, and
// excluded_w to the families that never support.
enum class SupportCase { I1, I2a, I2b, I2c, I3a, I3b, I3c, II, III, ExcludedW };

const char* support_case_name(SupportCase c);

struct SupportDecision {
  CosetRep rep;
  bool supported = false;
  SupportCase case_tag = SupportCase::ExcludedW;
};

// Decides whether the double coset of rep supports an intertwining operator
// between the induced characters of C_c and C_d.  rep must come from
// enumerate_R(c, d); anything else is rejected.
SupportDecision supports(const CosetRep& rep, const Triple& c, const Triple& d,
                         const ConductorData& cd);

// Support decision for a t-representative whose x-parameter has
// val(x - 1) = val (nullopt meaning x = 1 exactly).  Exposed for the
// order-monotonicity checks, which compare verdicts across pairs at fixed x.
SupportDecision t_supports_at_val(const Triple& a, std::optional<int> val,
                                  const Triple& c, const Triple& d,
                                  const ConductorData& cd);

// Dimension of the intertwining space between the inductions from C_c and
// C_d, as a polynomial in q.
QPoly count_S(const Triple& c, const Triple& d, const ConductorData& cd);

// dim of the induced representation U_c.
QPoly dim_U(const Triple& c, const ConductorData& cd);

// dim of the quotient V_c, by inclusion-exclusion over descendant meets.
QPoly dim_V(const Triple& c, const ConductorData& cd);

using SubsetKey = std::pair<std::vector<int>, std::vector<int>>;

struct IntertwiningReport {
  Triple c, d;
  QPoly i_UU;  // term at (I, J) = ({}, {})
  QPoly i_VV;  // signed sum over all (I, J)
  std::map<SubsetKey, QPoly> subset_terms;
};

// Intertwining dimension between the quotients V_c and V_d: double
// inclusion-exclusion of count_S over descendant meets.
IntertwiningReport intertwine_V(const Triple& c, const Triple& d,
                                const ConductorData& cd);

// Whether rep supports a self-intertwining operator for some pair in T_m
// (the limiting support set; only N enters).
bool total_support_member(const CosetRep& rep, const ConductorData& cd);

struct ClosedFormCheck {
  std::string tag;
  QPoly predicted;
  bool matches = false;
};

struct IrreducibilityReport {
  Triple c;
  QPoly i_vv;
  bool irreducible = false;
  // Closed-form families whose hypotheses c satisfies, each checked against
  // the computed i_vv.  A mismatch is a warning at runtime and a hard test
  // failure.
  std::vector<ClosedFormCheck> tags;
};

IrreducibilityReport irreducibility_report(const Triple& c, const ConductorData& cd);

}  // namespace gl3
