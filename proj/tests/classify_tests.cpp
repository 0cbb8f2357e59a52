#include <cstdint>
#include <string>
#include <vector>

#include "doctest.h"
#include "fdp/classify.hpp"
#include "fdp/upoly.hpp"

using namespace fdp;

namespace {

BinaryForm random_form(FieldRef F, int degree, fdp::upoly::SplitMix& rng) {
  std::vector<FieldElem> c;
  for (int k = 0; k <= degree; ++k) c.push_back(F->from_index(rng.bounded(F->order())));
  return BinaryForm::from_coeffs(F, std::move(c));
}

DP1Equation random_equation(FieldRef F, fdp::upoly::SplitMix& rng) {
  return DP1Equation::make(random_form(F, 1, rng), random_form(F, 2, rng),
                           random_form(F, 3, rng), random_form(F, 4, rng),
                           random_form(F, 6, rng));
}

GL2 random_gl2(FieldRef F, fdp::upoly::SplitMix& rng) {
  for (;;) {
    FieldElem a = F->from_index(rng.bounded(F->order()));
    FieldElem b = F->from_index(rng.bounded(F->order()));
    FieldElem c = F->from_index(rng.bounded(F->order()));
    FieldElem d = F->from_index(rng.bounded(F->order()));
    if (!(a * d - b * c).is_zero()) return GL2::make(a, b, c, d);
  }
}

DP1Equation eq_from_text(const char* text, FieldRef F) {
  return equation_from_poly(parse_poly(text, F));
}

}  // namespace

TEST_SUITE("classify") {
  TEST_CASE("the coefficient predicate, characteristic by characteristic") {
    FieldRef F5 = make_field(5);
    CHECK(lemma_predicate(DP1Equation::zero(F5)));  // y^2 = x^3
    CHECK(lemma_predicate(eq_from_text("y^2 - (x^3 + s^6 + t^6)", F5)));
    CHECK(lemma_predicate(eq_from_text("y^2 - (x^3 + s^5*t + 2*s*t^5)", F5)));
    CHECK_FALSE(lemma_predicate(eq_from_text("y^2 - (x^3 + s^4*t^2)", F5)));
    CHECK_FALSE(lemma_predicate(eq_from_text("y^2 - (x^3 + s^4*x)", F5)));

    FieldRef F3 = make_field(3);
    CHECK(lemma_predicate(eq_from_text("y^2 - (x^3 + s^3*t*x + s^6)", F3)));
    CHECK_FALSE(lemma_predicate(eq_from_text("y^2 - (x^3 + s^2*t^2*x)", F3)));
    CHECK_FALSE(lemma_predicate(eq_from_text("y^2 - (x^3 + s^2*x^2)", F3)));

    FieldRef F2 = make_field(2);
    CHECK(lemma_predicate(eq_from_text("y^2 + t^3*y - x^3", F2)));
    CHECK_FALSE(lemma_predicate(eq_from_text("y^2 + s*x*y - x^3", F2)));
  }

  TEST_CASE("the predicate is invariant under completing the square and cube") {
    fdp::upoly::SplitMix rng(90);
    for (FieldRef F : {make_field(3), make_field(5), make_field(5, 2)}) {
      for (int trial = 0; trial < 12; ++trial) {
        const DP1Equation eq = random_equation(F, rng);
        CHECK(lemma_predicate(eq) == lemma_predicate(complete_square_cube(eq)));
      }
    }
  }

  TEST_CASE("pinned classifications in characteristic 5") {
    const ClassificationReport r =
        classify(eq_from_text("y^2 - (x^3 + s^6 + t^6)", make_field(5)));
    CHECK(r.p == 5);
    CHECK_FALSE(r.fedder.f_split);
    CHECK(r.predicate);
    CHECK(r.consistent);
    CHECK(r.j.defined);
    CHECK(r.j.j_is_zero);
    CHECK(r.configuration.label == DeltaClass::two_p1_f5);
    CHECK(r.configuration.witness.has_value());
    CHECK(r.smoothness.verdict == SmoothnessVerdict::smooth);
    CHECK(r.smoothness.method == SmoothnessMethod::exact);
    CHECK(r.fibers_agree);
    CHECK(r.fibers_checked > 0);
    CHECK(is_normalized(r.normalized));
  }

  TEST_CASE("pinned classifications in characteristic 3") {
    FieldRef F = make_field(3);
    struct Case {
      const char* text;
      DeltaClass label;
    };
    const Case cases[] = {
        {"y^2 - (x^3 + s^4*x + t^6)", DeltaClass::twelve_o},
        {"y^2 - (x^3 + s^3*t*x + t^6)", DeltaClass::nine_three},
        {"y^2 - (x^3 + (s^3*t - s*t^3)*x + s^6)", DeltaClass::three_p1_f3},
    };
    for (const Case& c : cases) {
      const ClassificationReport r = classify(eq_from_text(c.text, F));
      CAPTURE(c.text);
      CHECK_FALSE(r.fedder.f_split);
      CHECK(r.predicate);
      CHECK(r.consistent);
      CHECK(r.j.j_is_zero);
      CHECK(r.configuration.label == c.label);
    }
    // a2 != 0 after completion: F-split, and j is the nonzero a2^6 route
    const ClassificationReport split =
        classify(eq_from_text("y^2 - (x^3 + s^2*x^2 + t^6)", F));
    CHECK(split.fedder.f_split);
    CHECK_FALSE(split.predicate);
    CHECK(split.consistent);
  }

  TEST_CASE("pinned classifications in characteristic 2") {
    FieldRef F = make_field(2);
    const ClassificationReport r = classify(
        eq_from_text("y^2 + (s^2*t + s*t^2)*y - (x^3 + s^6 + s^4*t^2 + t^6)", F));
    CHECK_FALSE(r.fedder.f_split);
    CHECK(r.predicate);
    CHECK(r.consistent);
    CHECK(r.configuration.label == DeltaClass::branch_distinct);
    CHECK(r.smoothness.verdict == SmoothnessVerdict::smooth);

    const ClassificationReport split = classify(eq_from_text("y^2 + s*x*y - x^3", F));
    CHECK(split.fedder.f_split);
    CHECK_FALSE(split.predicate);
    CHECK(split.consistent);
    CHECK(split.configuration.label == DeltaClass::other);
  }

  TEST_CASE("the splitting theorem holds on random equations") {
    fdp::upoly::SplitMix rng(91);
    for (FieldRef F : {make_field(2), make_field(2, 2), make_field(3), make_field(3, 2),
                       make_field(5), make_field(5, 2)}) {
      for (int trial = 0; trial < 40; ++trial) {
        const DP1Equation eq = random_equation(F, rng);
        const ClassificationReport r = classify(eq);
        CHECK(r.consistent);
        CHECK(r.fibers_agree);
      }
    }
  }

  TEST_CASE("classification is unsupported outside characteristics 2, 3, 5") {
    try {
      classify(DP1Equation::zero(make_field(7)));
      FAIL("characteristic 7 accepted");
    } catch (const math_error& e) {
      CHECK(e.code() == errc::unsupported);
    }
  }

  TEST_CASE("classification is invariant under admissible coordinate changes") {
    fdp::upoly::SplitMix rng(92);
    for (FieldRef F : {make_field(2), make_field(3), make_field(5), make_field(3, 2)}) {
      for (int trial = 0; trial < 8; ++trial) {
        const DP1Equation eq = random_equation(F, rng);
        const FieldElem v = F->from_index(1 + rng.bounded(F->order() - 1));
        const AdmissibleChange ch =
            make_admissible(random_gl2(F, rng), v * v, v * v * v, random_form(F, 1, rng),
                            random_form(F, 2, rng), random_form(F, 3, rng));
        const ClassificationReport before = classify(eq);
        const ClassificationReport after = classify(apply(ch, eq));
        CHECK(before.fedder.f_split == after.fedder.f_split);
        CHECK(before.predicate == after.predicate);
        CHECK(before.j.defined == after.j.defined);
        if (before.j.defined) CHECK(before.j.j_is_zero == after.j.j_is_zero);
        CHECK(before.configuration.label == after.configuration.label);
      }
    }
  }

  TEST_CASE("tiny exhaustive censuses against closed-form counts") {
    CensusSpec spec;
    spec.p = 2;
    spec.space = CensusSpace::a6_only;
    CensusSummary s2 = census(spec);
    CHECK(s2.space_size == 128);  // 2^7
    CHECK(s2.scanned == 128);
    CHECK(s2.non_f_split == 128);  // a1 = 0 throughout the slice
    CHECK(s2.mismatch_count == 0);
    CHECK(s2.mismatches.empty());

    spec.p = 3;
    CensusSummary s3 = census(spec);
    CHECK(s3.space_size == 2187);  // 3^7
    CHECK(s3.non_f_split == 2187);
    CHECK(s3.mismatch_count == 0);

    spec.p = 5;
    CensusSummary s5 = census(spec);
    CHECK(s5.space_size == 78125);   // 5^7
    CHECK(s5.non_f_split == 625);    // a6 in the 4-dim span: 5^4
    CHECK(s5.mismatch_count == 0);
  }

  TEST_CASE("sampled census digits follow the documented stream") {
    CensusSpec spec;
    spec.p = 2;
    spec.space = CensusSpace::full;
    spec.exhaustive = false;
    spec.samples = 400;
    spec.seed = 123;
    const CensusSummary s = census(spec);
    CHECK(s.scanned == 400);
    CHECK(s.mismatch_count == 0);
    CHECK(s.space_size == 2097152);  // 2^21

    // regenerate every sample from the stated SplitMix derivation and count
    // non-F-split instances with the library's own Fedder routine
    FieldRef F = make_field(2);
    const int degrees[] = {1, 2, 3, 4, 6};
    uint64_t non_split = 0;
    for (uint64_t k = 0; k < spec.samples; ++k) {
      fdp::upoly::SplitMix rng(spec.seed ^ ((k + 1) * 0x9E3779B97F4A7C15ull));
      BinaryForm forms[] = {BinaryForm(F, 1), BinaryForm(F, 2), BinaryForm(F, 3),
                            BinaryForm(F, 4), BinaryForm(F, 6)};
      for (int i = 0; i < 5; ++i)
        for (int c = 0; c <= degrees[i]; ++c)
          forms[static_cast<std::size_t>(i)].set_coeff(
              c, F->from_index(rng.bounded(F->order())));
      const DP1Equation eq =
          DP1Equation::make(forms[0], forms[1], forms[2], forms[3], forms[4]);
      const bool split = is_fsplit_hypersurface(to_poly(eq)).f_split;
      if (!split) ++non_split;
      CHECK(split == !lemma_predicate(eq));
    }
    CHECK(s.non_f_split == non_split);
  }

  TEST_CASE("census limits and unsupported shapes") {
    CensusSpec spec;
    spec.p = 3;
    spec.field_degree = 2;
    spec.space = CensusSpace::normalized;  // 9^15 instances
    try {
      census(spec);
      FAIL("oversized exhaustive census accepted");
    } catch (const math_error& e) {
      CHECK(e.code() == errc::census_infeasible);
    }

    CensusSpec tiny;
    tiny.p = 2;
    tiny.space = CensusSpace::a6_only;
    tiny.exhaustive_ceiling = 100;  // below 128
    try {
      census(tiny);
      FAIL("ceiling ignored");
    } catch (const math_error& e) {
      CHECK(e.code() == errc::census_infeasible);
    }

    CensusSpec full5;
    full5.p = 5;
    full5.space = CensusSpace::full;
    try {
      census(full5);
      FAIL("full space outside characteristic 2 accepted");
    } catch (const math_error& e) {
      CHECK(e.code() == errc::unsupported);
    }

    CensusSpec p7;
    p7.p = 7;
    try {
      census(p7);
      FAIL("characteristic 7 accepted");
    } catch (const math_error& e) {
      CHECK(e.code() == errc::unsupported);
    }

    CensusSpec wide;
    wide.p = 2;
    wide.field_degree = 9;  // order 512 > 256
    wide.space = CensusSpace::a6_only;
    try {
      census(wide);
      FAIL("order above 256 accepted");
    } catch (const math_error& e) {
      CHECK(e.code() == errc::unsupported);
    }
  }

  TEST_CASE("worker count never changes the outcome") {
    CensusSpec spec;
    spec.p = 3;
    spec.space = CensusSpace::normalized;
    spec.exhaustive = false;
    spec.samples = 4000;
    spec.seed = 9;
    spec.workers = 1;
    const CensusSummary one = census(spec);
    spec.workers = 3;
    const CensusSummary three = census(spec);
    CHECK(one.scanned == three.scanned);
    CHECK(one.non_f_split == three.non_f_split);
    CHECK(one.mismatch_count == three.mismatch_count);
  }

  TEST_CASE("progress reporting reaches the total") {
    CensusSpec spec;
    spec.p = 2;
    spec.space = CensusSpace::a6_only;
    uint64_t last_done = 0, last_total = 0;
    int calls = 0;
    const CensusSummary s = census(spec, [&](uint64_t done, uint64_t total) {
      CHECK(done >= last_done);
      last_done = done;
      last_total = total;
      ++calls;
    });
    CHECK(calls > 0);
    CHECK(last_done == 128);
    CHECK(last_total == 128);
    CHECK(s.seconds >= 0.0);
  }
}
