#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "fdp/mpoly.hpp"

namespace fdp {

// A point of P^1: either the affine point [alpha : 1] or [1 : 0].
struct PointP1 {
  FieldElem alpha;
  bool at_infinity;

  static PointP1 finite(FieldElem a) { return PointP1{std::move(a), false}; }
  static PointP1 infinity(FieldRef f) { return PointP1{f->zero(), true}; }

  FieldRef field() const { return alpha.field(); }
  bool operator==(const PointP1& o) const;
  // canonical order: finite points by coordinate (lex), then infinity
  bool before(const PointP1& o) const;
  std::string to_string() const;  // "[alpha:1]" or "[1:0]"
};

PointP1 embed_point(const PointP1& pt, FieldRef target);

// Effective divisor on P^1 with all points rational over `field` (for root
// divisors: the minimal common splitting field).  Points are kept in
// canonical order.
struct DivisorP1 {
  FieldRef field;
  std::vector<std::pair<PointP1, int>> points;

  int degree() const;
  void sort_points();
  std::string to_string() const;  // "2*[0:1] + 1*[1:0]", "0" when empty
};

DivisorP1 embed_divisor(const DivisorP1& d, FieldRef target);

// g = unit * prod parts[i]^mult[i]; parts squarefree, pairwise coprime,
// multiplicities strictly increasing, each part normalized so its highest
// nonzero s-power coefficient is 1.  A root at [1:0] is carried by the part
// of the matching multiplicity (the factor t).
struct SquarefreeParts {
  FieldElem unit;
  std::vector<std::pair<BinaryForm, int>> parts;
};

SquarefreeParts squarefree_decomposition(const BinaryForm& g);

// Complete root divisor of a nonzero form over the minimal common splitting
// field F_{p^(m*l)}, l = lcm of the irreducible factor degrees; errors with
// splitting_field_too_large beyond degree 12.  Deterministic for a fixed
// seed, and the canonical point order makes the divisor seed-independent.
DivisorP1 roots(const BinaryForm& g, uint64_t seed = 0);

}  // namespace fdp
