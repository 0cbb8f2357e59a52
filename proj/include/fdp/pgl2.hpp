#pragma once

#include <optional>
#include <string>

#include "fdp/dp1.hpp"
#include "fdp/unifactor.hpp"

namespace fdp {

// Invertible 2x2 matrix [[a, b], [c, d]] over a finite field.
struct GL2 {
  FieldElem a, b, c, d;

  static GL2 identity(FieldRef f);
  // validates: single field, nonzero determinant
  static GL2 make(FieldElem a, FieldElem b, FieldElem c, FieldElem d);

  FieldRef field() const { return a.field(); }
  FieldElem det() const { return a * d - b * c; }
  GL2 inverse() const;
  GL2 operator*(const GL2& o) const;  // matrix product
  GL2 embed_into(FieldRef target) const;
  std::string to_string() const;
};

// substitution action: act_gl2(g, M)(s, t) = g(a s + b t, c s + d t).
// Consequently roots(act_gl2(g, M)) = M^{-1} applied to roots(g).
BinaryForm act_gl2(const BinaryForm& g, const GL2& M);
// acts on every coefficient form of the equation
DP1Equation act_gl2(const DP1Equation& eq, const GL2& M);
// the matrix acting on column vectors: P -> M P
PointP1 apply_point(const GL2& M, const PointP1& P);

// Change of coordinates sending three chosen distinct roots of g to [1:0],
// [0:1] and [1:1].  The span of {s^(p+1), s^p t, s t^p, t^(p+1)} is
// GL2-stable (substitution distributes over p-th powers), so for forms in
// that span the transformed form is exactly unit * (s^p t - s t^p); any
// other input is rejected with wrong_shape.  Needs at least three distinct
// roots (insufficient_roots otherwise).
struct La5Result {
  GL2 change;
  FieldElem unit;
  BinaryForm normalized;  // act_gl2(g over the splitting field, change)
};
La5Result la5_normalize(const BinaryForm& g, uint64_t seed = 0);

// PGL2-equivalence of effective divisors on P^1, decided by exhausting
// ordered triples of support points (a Moebius map is pinned by three
// points).  Divisors over different fields are compared over the compositum.
struct EquivalenceWitness {
  bool equivalent;
  std::optional<GL2> map;  // sends d1 to d2 when equivalent
};
EquivalenceWitness divisor_pgl2_equivalent(const DivisorP1& d1, const DivisorP1& d2);

// Configuration labels for discriminant divisors (degree 12; characteristics
// 5 and 3) and branch divisors (degree 3; characteristic 2).
enum class DeltaClass {
  two_p1_f5,            // 2 * (the six points of P^1(F_5))
  twelve_o,             // 12 * [0:1]
  nine_three,           // 9 * [0:1] + 3 * [1:0]
  three_p1_f3,          // 3 * (the four points of P^1(F_3))
  branch_triple,        // 3 * [0:1]
  branch_double_single, // 2 * [0:1] + 1 * [1:0]
  branch_distinct,      // [0:1] + [1:0] + [1:1]
  other,
};
const char* delta_class_name(DeltaClass c);

struct DeltaClassResult {
  DeltaClass label;
  std::optional<GL2> witness;  // equivalence onto the reference configuration
};
// branch_context selects the degree-3 reference set; otherwise the degree-12
// discriminant references for p in {3, 5}
DeltaClassResult delta_class(const DivisorP1& d, uint32_t p, bool branch_context);

// Admissible coordinate change of the ambient P(1,1,2,3):
//   (s, t) -> M (s, t),  x -> lambda x + b2(s, t),
//   y -> mu y + b1(s, t) x + b3(s, t),
// with lambda, mu units and deg b_i = i.
struct AdmissibleChange {
  GL2 m;
  FieldElem lambda, mu;
  BinaryForm b1, b2, b3;
};
AdmissibleChange make_admissible(GL2 m, FieldElem lambda, FieldElem mu, BinaryForm b1,
                                 BinaryForm b2, BinaryForm b3);
// graded substitution into an arbitrary polynomial
MultiPoly apply(const AdmissibleChange& ch, const MultiPoly& f);
// On equations: requires lambda^3 == mu^2, so that mu^-2 (f o change) is
// again monic in y^2 with x^3 coefficient -1; returns the new equation.
DP1Equation apply(const AdmissibleChange& ch, const DP1Equation& eq);

}  // namespace fdp
