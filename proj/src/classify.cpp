#include "fdp/classify.hpp"

namespace fdp {

namespace {

// a6 in span{s^6, s^5 t, s t^5, t^6}: middle coefficients vanish
bool a6_span_ok(const BinaryForm& a6) {
  return a6.coeff(2).is_zero() && a6.coeff(3).is_zero() && a6.coeff(4).is_zero();
}

// a4 in span{s^4, s^3 t, s t^3, t^4}
bool a4_span_ok(const BinaryForm& a4) { return a4.coeff(2).is_zero(); }

bool predicate_of_normalized(const DP1Equation& w, uint32_t p) {
  switch (p) {
    case 2:
      return w.a1.is_zero();
    case 3:
      return w.a2.is_zero() && a4_span_ok(w.a4);
    case 5:
      return w.a4.is_zero() && a6_span_ok(w.a6);
    default:
      throw math_error(errc::unsupported,
                       "the splitting criterion is stated for characteristics 2, 3 and 5");
  }
}

}  // namespace

bool lemma_predicate(const DP1Equation& eq) {
  const uint32_t p = eq.field()->characteristic();
  return predicate_of_normalized(complete_square_cube(eq), p);
}

ClassificationReport classify(const DP1Equation& eq, int search_bound) {
  FieldRef F = eq.field();
  const uint32_t p = F->characteristic();
  if (p != 2 && p != 3 && p != 5)
    throw math_error(errc::unsupported,
                     "classification covers characteristics 2, 3 and 5");

  const DP1Equation w = complete_square_cube(eq);
  const FedderVerdict fedder = is_fsplit_hypersurface(to_poly(eq));
  const bool pred = predicate_of_normalized(w, p);

  JInvariant j = j_invariant(w, DiscriminantPath::formulaire);

  DeltaClassResult config{DeltaClass::other, std::nullopt};
  try {
    if (p == 2) {
      if (eq.a1.is_zero() && !eq.a3.is_zero())
        config = delta_class(roots(eq.a3), p, /*branch_context=*/true);
    } else {
      const BinaryForm dr = discriminant(w, DiscriminantPath::reduced);
      if (!dr.is_zero()) config = delta_class(roots(dr), p, /*branch_context=*/false);
    }
  } catch (const math_error& e) {
    if (e.code() != errc::splitting_field_too_large) throw;
    // roots live beyond the degree-12 cap, which already rules out the three
    // reference configurations
  }

  SmoothnessReport smooth = smoothness(eq, search_bound);

  // spot-check fibers: on a smooth fiber over P, supersingularity must agree
  // with the vanishing of c4 at P (j = 0 detects supersingular for p <= 5)
  int fibers_checked = 0;
  bool fibers_agree = true;
  const BinaryForm delta_form = discriminant(w, DiscriminantPath::formulaire);
  if (!delta_form.is_zero()) {
    const int m = F->degree();
    std::vector<FieldRef> levels = {F};
    if (2 * m <= Field::kMaxDegree) levels.push_back(make_field(p, 2 * m));
    constexpr int kFibersWanted = 3;
    for (FieldRef K : levels) {
      if (fibers_checked >= kFibersWanted) break;
      const BinaryForm dK = delta_form.embed_into(K);
      const uint64_t q = K->order();
      for (uint64_t i = 0; i <= q && fibers_checked < kFibersWanted; ++i) {
        const PointP1 pt =
            (i == q) ? PointP1::infinity(K) : PointP1::finite(K->from_index(i));
        const FieldElem s0 = pt.at_infinity ? K->one() : pt.alpha;
        const FieldElem t0 = pt.at_infinity ? K->zero() : K->one();
        if (dK.eval(s0, t0).is_zero()) continue;
        const WeierstrassFiber fb = fiber_at(eq, pt);
        const bool ss = is_supersingular(fb);
        fibers_agree = fibers_agree && (ss == fiber_c4(fb).is_zero());
        ++fibers_checked;
      }
    }
  }

  return ClassificationReport{p,
                              fedder,
                              pred,
                              fedder.f_split == !pred,
                              std::move(j),
                              std::move(config),
                              std::move(smooth),
                              fibers_checked,
                              fibers_agree,
                              w};
}

}  // namespace fdp
