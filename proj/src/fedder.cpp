#include "fdp/fedder.hpp"

namespace fdp {

bool monomial_in_frobenius_power(const Monomial& m, uint32_t p) {
  for (uint16_t e : m.e)
    if (e >= p) return true;
  return false;
}

FedderVerdict is_fsplit_hypersurface(const MultiPoly& f) {
  if (f.is_zero())
    throw math_error(errc::zero_input, "Fedder's criterion needs a nonzero hypersurface equation");
  const uint32_t p = f.field()->characteristic();
  const MultiPoly power = f.pow(p - 1);
  for (const auto& t : power.terms()) {
    if (!monomial_in_frobenius_power(t.m, p)) return FedderVerdict{true, t};
  }
  return FedderVerdict{false, std::nullopt};
}

}  // namespace fdp
