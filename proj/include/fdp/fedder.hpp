#pragma once

#include <optional>

#include "fdp/mpoly.hpp"

namespace fdp {

// Verdict of Fedder's criterion for the hypersurface ring k[vars]/(f):
// F-split iff f^(p-1) has a monomial outside (v1^p, ..., vn^p).  When split,
// `witness` is the first such term of f^(p-1) in canonical order.
struct FedderVerdict {
  bool f_split;
  std::optional<Term> witness;
};

// Membership of a monomial in the Frobenius power (v1^p, ..., vn^p) of the
// maximal monomial ideal: true iff some exponent reaches p.
bool monomial_in_frobenius_power(const Monomial& m, uint32_t p);

FedderVerdict is_fsplit_hypersurface(const MultiPoly& f);

}  // namespace fdp
