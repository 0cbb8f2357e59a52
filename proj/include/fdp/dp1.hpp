#pragma once

#include <optional>
#include <string>

#include "fdp/mpoly.hpp"
#include "fdp/unifactor.hpp"

namespace fdp {

// Anticanonical sextic of a degree-1 del Pezzo surface in P(1,1,2,3):
//   f = y^2 + a1*x*y + a3*y - (x^3 + a2*x^2 + a4*x + a6)
// with a_i a binary form of degree i in (s, t).  Any of the forms may vanish.
struct DP1Equation {
  BinaryForm a1, a2, a3, a4, a6;

  static DP1Equation zero(FieldRef f);
  static DP1Equation make(BinaryForm a1, BinaryForm a2, BinaryForm a3, BinaryForm a4,
                          BinaryForm a6);
  FieldRef field() const { return a1.field(); }
  bool operator==(const DP1Equation& o) const;
  DP1Equation embed_into(FieldRef target) const;
};

MultiPoly to_poly(const DP1Equation& eq);
// Inverse of to_poly: accepts any weighted-homogeneous sextic over the
// default alphabet whose y^2 coefficient is 1 and x^3 coefficient is -1.
DP1Equation equation_from_poly(const MultiPoly& f);

// Kills a1 and a3 when p != 2 (completing the square in y), and additionally
// a2 when p is not 2 or 3 (completing the cube in x).  Identity in
// characteristic 2.  The underlying coordinate change is a graded
// automorphism, so every geometric property studied here is preserved.
DP1Equation complete_square_cube(const DP1Equation& eq);

bool is_normalized(const DP1Equation& eq);

// Standard quantities of the long Weierstrass shape, as binary forms:
// b2 = a1^2 + 4a2 (degree 2), b4 = 2a4 + a1a3 (4), b6 = a3^2 + 4a6 (6),
// b8 = a1^2a6 + 4a2a6 - a1a3a4 + a2a3^2 - a4^2 (8), c4 = b2^2 - 24b4 (4).
BinaryForm form_b2(const DP1Equation& eq);
BinaryForm form_b4(const DP1Equation& eq);
BinaryForm form_b6(const DP1Equation& eq);
BinaryForm form_b8(const DP1Equation& eq);
BinaryForm form_c4(const DP1Equation& eq);

// Two independent routes to the degree-12 discriminant form.
//  - formulaire: -b2^2 b8 - 8 b4^3 - 27 b6^2 + 9 b2 b4 b6, any characteristic.
//  - reduced: the characteristic-specific closed forms
//      p = 5 (needs a1 = a2 = a3 = 0):  a4^3 - 2 a6^2
//      p = 3 (needs a1 = a3 = 0):      -a2^2 (a2 a6 - a4^2) - a4^3
//      p = 2:                           a1^4 (a1^2 a6 + a1 a3 a4 + a2 a3^2 + a4^2)
//                                         + a1^3 a3^3 + a3^4
enum class DiscriminantPath { formulaire, reduced };
BinaryForm discriminant(const DP1Equation& eq, DiscriminantPath path = DiscriminantPath::formulaire);

// j as the ratio numerator/delta of degree-12 forms.  The formulaire route
// uses c4^3; the reduced route uses the characteristic-specific numerators
// 3 a4^3 (p=5, normalized), a2^6 (p=3, a1=a3=0), a1^12 (p=2).
struct JInvariant {
  BinaryForm numerator;
  BinaryForm delta;
  bool defined;    // delta is not identically zero
  bool j_is_zero;  // the numerator vanishes identically
};
JInvariant j_invariant(const DP1Equation& eq,
                       DiscriminantPath path = DiscriminantPath::formulaire);

// The elliptic (or degenerate) fiber over a point of P^1, as scalar
// Weierstrass coefficients over the point's field.
struct WeierstrassFiber {
  FieldRef field;
  FieldElem a1, a2, a3, a4, a6;
};

WeierstrassFiber fiber_at(const DP1Equation& eq, const PointP1& pt);
FieldElem fiber_discriminant(const WeierstrassFiber& fb);
FieldElem fiber_c4(const WeierstrassFiber& fb);
bool fiber_is_smooth(const WeierstrassFiber& fb);

// Trace of Frobenius a = q + 1 - #E(F_q) by direct point counting; requires
// a smooth fiber and field order at most 2^20.
int64_t fiber_trace(const WeierstrassFiber& fb);
// supersingular iff the trace is divisible by p
bool is_supersingular(const WeierstrassFiber& fb);

struct SurfacePoint {
  FieldElem s, t, x, y;  // a point of the affine cone, never the origin
  FieldRef field() const { return s.field(); }
  std::string to_string() const;
};

enum class SmoothnessVerdict { smooth, singular, undetermined };

// How the verdict was reached.
//  - exact: a proof, not a search.  Used when the discriminant form vanishes
//    identically (the fibration is nowhere elliptic and the sextic model is
//    singular), and for the characteristic-5 family y^2 = x^3 + a6, which is
//    smooth precisely when a6 is squarefree of degree 6.
//  - point_search: singular points were hunted over the residue fields of the
//    roots of the discriminant (every singular point lies over such a root).
//    Finding one proves `singular`.  When every root fit under the degree
//    bound and every fiber's finite candidate set could be enumerated in full,
//    finding none proves `smooth`; otherwise the verdict is `undetermined`.
enum class SmoothnessMethod { exact, point_search };

struct SmoothnessReport {
  SmoothnessVerdict verdict;
  SmoothnessMethod method;
  std::optional<SurfacePoint> witness;  // a singular point, when one was found
  int search_bound;                     // max residue-field degree over the base
  std::string detail;
};

SmoothnessReport smoothness(const DP1Equation& eq, int search_bound = 6);

}  // namespace fdp
