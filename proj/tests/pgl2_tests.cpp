#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "fdp/pgl2.hpp"
#include "fdp/upoly.hpp"

using namespace fdp;

namespace {

bool gl2_eq(const GL2& A, const GL2& B) {
  return A.a == B.a && A.b == B.b && A.c == B.c && A.d == B.d;
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

BinaryForm random_form(FieldRef F, int degree, fdp::upoly::SplitMix& rng) {
  std::vector<FieldElem> c;
  for (int k = 0; k <= degree; ++k) c.push_back(F->from_index(rng.bounded(F->order())));
  BinaryForm g = BinaryForm::from_coeffs(F, std::move(c));
  if (g.is_zero()) g.set_coeff(0, F->one());
  return g;
}

bool divisor_eq(const DivisorP1& a, const DivisorP1& b) {
  if (a.field != b.field || a.points.size() != b.points.size()) return false;
  for (std::size_t i = 0; i < a.points.size(); ++i)
    if (!(a.points[i].first == b.points[i].first) ||
        a.points[i].second != b.points[i].second)
      return false;
  return true;
}

// the reference form s^p t - s t^p over F
BinaryForm span_reference(FieldRef F) {
  const int d = static_cast<int>(F->characteristic()) + 1;
  BinaryForm ref(F, d);
  ref.set_coeff(1, F->one());
  ref.set_coeff(d - 1, -F->one());
  return ref;
}

DivisorP1 all_points_times(FieldRef F, int mult) {
  DivisorP1 d{F, {}};
  for (uint64_t i = 0; i < F->order(); ++i)
    d.points.push_back({PointP1::finite(F->from_index(i)), mult});
  d.points.push_back({PointP1::infinity(F), mult});
  d.sort_points();
  return d;
}

}  // namespace

TEST_SUITE("pgl2") {
  TEST_CASE("matrix group axioms") {
    fdp::upoly::SplitMix rng(70);
    for (FieldRef F : {make_field(5), make_field(2, 3), make_field(3, 2)}) {
      const GL2 I = GL2::identity(F);
      for (int trial = 0; trial < 12; ++trial) {
        const GL2 M = random_gl2(F, rng);
        const GL2 N = random_gl2(F, rng);
        const GL2 P = random_gl2(F, rng);
        CHECK(gl2_eq(M * I, M));
        CHECK(gl2_eq(I * M, M));
        CHECK(gl2_eq(M * M.inverse(), I));
        CHECK(gl2_eq(M.inverse() * M, I));
        CHECK(gl2_eq((M * N) * P, M * (N * P)));
        CHECK((M * N).det() == M.det() * N.det());
        CHECK(gl2_eq((M * N).inverse(), N.inverse() * M.inverse()));
      }
    }
    CHECK_THROWS_AS(GL2::make(make_field(5)->one(), make_field(5)->one(),
                              make_field(5)->one(), make_field(5)->one()),
                    math_error);
  }

  TEST_CASE("substitution action on forms") {
    fdp::upoly::SplitMix rng(71);
    for (FieldRef F : {make_field(5), make_field(3, 2)}) {
      for (int trial = 0; trial < 10; ++trial) {
        const BinaryForm g = random_form(F, 2 + static_cast<int>(rng.bounded(5)), rng);
        const GL2 M = random_gl2(F, rng);
        const GL2 N = random_gl2(F, rng);
        // compatibility with composition
        CHECK(act_gl2(act_gl2(g, M), N) == act_gl2(g, M * N));
        // pointwise evaluation identity
        for (int k = 0; k < 4; ++k) {
          const FieldElem s0 = F->from_index(rng.bounded(F->order()));
          const FieldElem t0 = F->from_index(rng.bounded(F->order()));
          CHECK(act_gl2(g, M).eval(s0, t0) ==
                g.eval(M.a * s0 + M.b * t0, M.c * s0 + M.d * t0));
        }
        // the identity fixes everything
        CHECK(act_gl2(g, GL2::identity(F)) == g);
      }
    }
  }

  TEST_CASE("root divisors transform by the inverse matrix") {
    fdp::upoly::SplitMix rng(72);
    for (FieldRef F : {make_field(3), make_field(5), make_field(2, 2)}) {
      int done = 0;
      while (done < 6) {
        const BinaryForm g = random_form(F, 3 + static_cast<int>(rng.bounded(3)), rng);
        const GL2 M = random_gl2(F, rng);
        DivisorP1 base{F, {}};
        try {
          base = roots(g);
        } catch (const math_error& e) {
          REQUIRE(e.code() == errc::splitting_field_too_large);
          continue;
        }
        ++done;
        const DivisorP1 moved = roots(act_gl2(g, M));
        REQUIRE(moved.field == base.field);
        const GL2 Minv = M.embed_into(base.field).inverse();
        DivisorP1 expect{base.field, {}};
        for (const auto& [pt, mult] : base.points)
          expect.points.push_back({apply_point(Minv, pt), mult});
        expect.sort_points();
        CHECK(divisor_eq(moved, expect));
      }
    }
  }

  TEST_CASE("normalization of forms in the stable span") {
    // the reference form normalizes to a scalar multiple of itself
    for (uint32_t p : {3u, 5u}) {
      FieldRef F = make_field(p);
      const BinaryForm ref = span_reference(F);
      const La5Result res = la5_normalize(ref);
      CHECK(res.normalized.field() == F);  // splits over the prime field
      CHECK(res.normalized == span_reference(F).scaled(res.unit));
      CHECK(act_gl2(ref, res.change) == res.normalized);
    }

    // random members of the span with at least three distinct roots
    fdp::upoly::SplitMix rng(73);
    for (uint32_t p : {3u, 5u}) {
      FieldRef F = make_field(p);
      const int d = static_cast<int>(p) + 1;
      int done = 0;
      while (done < 8) {
        BinaryForm g(F, d);
        g.set_coeff(0, F->from_index(rng.bounded(p)));
        g.set_coeff(1, F->from_index(rng.bounded(p)));
        g.set_coeff(d - 1, F->from_index(rng.bounded(p)));
        g.set_coeff(d, F->from_index(rng.bounded(p)));
        if (g.is_zero()) continue;
        DivisorP1 div{F, {}};
        try {
          div = roots(g);
        } catch (const math_error&) {
          continue;
        }
        if (div.points.size() < 3) continue;
        ++done;
        const La5Result res = la5_normalize(g);
        FieldRef L = res.normalized.field();
        CHECK(res.normalized == span_reference(L).scaled(res.unit));
        CHECK(act_gl2(g.embed_into(L), res.change) == res.normalized);
        CHECK_FALSE(res.unit.is_zero());
      }
    }
  }

  TEST_CASE("normalization rejects what the span does not contain") {
    FieldRef F5 = make_field(5);
    // s^4 t^2 - s^2 t^4 has degree 6 but middle monomials
    BinaryForm bad5(F5, 6);
    bad5.set_coeff(2, F5->one());
    bad5.set_coeff(4, -F5->one());
    try {
      la5_normalize(bad5);
      FAIL("non-span form accepted");
    } catch (const math_error& e) {
      CHECK(e.code() == errc::wrong_shape);
    }

    FieldRef F3 = make_field(3);
    BinaryForm bad3(F3, 4);  // s^3 t + s^2 t^2 + s t^3
    bad3.set_coeff(1, F3->one());
    bad3.set_coeff(2, F3->one());
    bad3.set_coeff(3, F3->one());
    try {
      la5_normalize(bad3);
      FAIL("non-span form accepted");
    } catch (const math_error& e) {
      CHECK(e.code() == errc::wrong_shape);
    }

    // wrong degree entirely
    fdp::upoly::SplitMix rng(1);
    try {
      la5_normalize(random_form(F5, 4, rng));
      FAIL("wrong degree accepted");
    } catch (const math_error& e) {
      CHECK(e.code() == errc::degree_mismatch);
    }

    // s^5 t: in the span, but only two distinct roots
    BinaryForm thin(F5, 6);
    thin.set_coeff(1, F5->one());
    try {
      la5_normalize(thin);
      FAIL("two-root form accepted");
    } catch (const math_error& e) {
      CHECK(e.code() == errc::insufficient_roots);
    }
  }

  TEST_CASE("divisor equivalence: identity, twists, and profiles") {
    fdp::upoly::SplitMix rng(74);
    FieldRef F = make_field(7);
    DivisorP1 d{F, {}};
    d.points.push_back({PointP1::finite(F->from_int(0)), 2});
    d.points.push_back({PointP1::finite(F->from_int(3)), 1});
    d.points.push_back({PointP1::infinity(F), 1});
    d.sort_points();

    const EquivalenceWitness self = divisor_pgl2_equivalent(d, d);
    CHECK(self.equivalent);

    for (int trial = 0; trial < 6; ++trial) {
      const GL2 M = random_gl2(F, rng);
      DivisorP1 moved{F, {}};
      for (const auto& [pt, mult] : d.points)
        moved.points.push_back({apply_point(M, pt), mult});
      moved.sort_points();
      const EquivalenceWitness w = divisor_pgl2_equivalent(d, moved);
      REQUIRE(w.equivalent);
      REQUIRE(w.map.has_value());
      // the witness really maps d onto moved
      DivisorP1 image{F, {}};
      for (const auto& [pt, mult] : d.points)
        image.points.push_back({apply_point(*w.map, pt), mult});
      image.sort_points();
      CHECK(divisor_eq(image, moved));
    }

    // different multiplicity profile: never equivalent
    DivisorP1 other{F, {}};
    other.points.push_back({PointP1::finite(F->from_int(0)), 3});
    other.points.push_back({PointP1::finite(F->from_int(3)), 1});
    CHECK_FALSE(divisor_pgl2_equivalent(d, other).equivalent);
  }

  TEST_CASE("four-point equivalence is decided by the cross-ratio orbit") {
    FieldRef F = make_field(7);
    auto quad = [&](int a, int b, int c) {
      DivisorP1 d{F, {}};
      d.points.push_back({PointP1::finite(F->from_int(a)), 1});
      d.points.push_back({PointP1::finite(F->from_int(b)), 1});
      d.points.push_back({PointP1::finite(F->from_int(c)), 1});
      d.points.push_back({PointP1::infinity(F), 1});
      d.sort_points();
      return d;
    };
    const DivisorP1 dA = quad(0, 1, 3);  // cross-ratio orbit {3, 5}
    const DivisorP1 dB = quad(0, 1, 2);  // cross-ratio orbit {2, 4, 6}
    const DivisorP1 dC = quad(0, 1, 5);  // cross-ratio 5: same orbit as dA
    CHECK_FALSE(divisor_pgl2_equivalent(dA, dB).equivalent);
    const EquivalenceWitness w = divisor_pgl2_equivalent(dA, dC);
    REQUIRE(w.equivalent);
    REQUIRE(w.map.has_value());
    DivisorP1 image{F, {}};
    for (const auto& [pt, mult] : dA.points)
      image.points.push_back({apply_point(*w.map, pt), mult});
    image.sort_points();
    CHECK(divisor_eq(image, dC));
  }

  TEST_CASE("divisors over different fields are compared over the compositum") {
    FieldRef F2 = make_field(2);
    FieldRef F4 = make_field(2, 2);
    DivisorP1 small{F2, {{PointP1::finite(F2->zero()), 1}, {PointP1::infinity(F2), 2}}};
    small.sort_points();
    const DivisorP1 big = embed_divisor(small, F4);
    const EquivalenceWitness w = divisor_pgl2_equivalent(small, big);
    CHECK(w.equivalent);
  }

  TEST_CASE("reference configurations classify themselves, twisted or not") {
    fdp::upoly::SplitMix rng(75);
    FieldRef F5 = make_field(5);
    FieldRef F3 = make_field(3);

    const DivisorP1 two_p1 = all_points_times(F5, 2);
    CHECK(delta_class(two_p1, 5, false).label == DeltaClass::two_p1_f5);

    DivisorP1 twelve{F5, {{PointP1::finite(F5->zero()), 12}}};
    CHECK(delta_class(twelve, 5, false).label == DeltaClass::twelve_o);
    DivisorP1 twelve_inf{F5, {{PointP1::infinity(F5), 12}}};
    CHECK(delta_class(twelve_inf, 5, false).label == DeltaClass::twelve_o);

    DivisorP1 nine{F3, {{PointP1::finite(F3->zero()), 9}, {PointP1::infinity(F3), 3}}};
    nine.sort_points();
    CHECK(delta_class(nine, 3, false).label == DeltaClass::nine_three);

    const DivisorP1 three_p1 = all_points_times(F3, 3);
    CHECK(delta_class(three_p1, 3, false).label == DeltaClass::three_p1_f3);

    // twists by random matrices keep the label, and the witness maps onto the
    // reference configuration
    for (int trial = 0; trial < 5; ++trial) {
      const GL2 M = random_gl2(F5, rng);
      DivisorP1 moved{F5, {}};
      for (const auto& [pt, mult] : two_p1.points)
        moved.points.push_back({apply_point(M, pt), mult});
      moved.sort_points();
      const DeltaClassResult r = delta_class(moved, 5, false);
      CHECK(r.label == DeltaClass::two_p1_f5);
      REQUIRE(r.witness.has_value());
      DivisorP1 image{F5, {}};
      for (const auto& [pt, mult] : moved.points)
        image.points.push_back({apply_point(*r.witness, pt), mult});
      image.sort_points();
      CHECK(divisor_eq(image, two_p1));
    }
  }

  TEST_CASE("branch configurations in characteristic 2") {
    FieldRef F = make_field(2);
    auto form_class = [&](const BinaryForm& g) {
      return delta_class(roots(g), 2, true).label;
    };
    BinaryForm s3(F, 3);
    s3.set_coeff(0, F->one());  // s^3
    CHECK(form_class(s3) == DeltaClass::branch_triple);

    BinaryForm s2t(F, 3);
    s2t.set_coeff(1, F->one());  // s^2 t
    CHECK(form_class(s2t) == DeltaClass::branch_double_single);

    BinaryForm dist(F, 3);
    dist.set_coeff(1, F->one());  // s^2 t + s t^2 = s t (s + t)
    dist.set_coeff(2, F->one());
    CHECK(form_class(dist) == DeltaClass::branch_distinct);

    BinaryForm irred(F, 3);  // s^3 + s^2 t + t^3: irreducible, roots in F_8
    irred.set_coeff(0, F->one());
    irred.set_coeff(1, F->one());
    irred.set_coeff(3, F->one());
    const DivisorP1 d = roots(irred);
    CHECK(d.field->degree() == 3);
    CHECK(delta_class(d, 2, true).label == DeltaClass::branch_distinct);
  }

  TEST_CASE("unmatched configurations come out as OTHER") {
    FieldRef F5 = make_field(5);
    // 6 + 6 profile: not any reference
    DivisorP1 d{F5, {{PointP1::finite(F5->zero()), 6}, {PointP1::infinity(F5), 6}}};
    d.sort_points();
    CHECK(delta_class(d, 5, false).label == DeltaClass::other);
    CHECK_FALSE(delta_class(d, 5, false).witness.has_value());

    // wrong degree is an error, not OTHER
    DivisorP1 short_d{F5, {{PointP1::finite(F5->zero()), 5}}};
    try {
      delta_class(short_d, 5, false);
      FAIL("degree 5 accepted");
    } catch (const math_error& e) {
      CHECK(e.code() == errc::degree_mismatch);
    }
    try {
      delta_class(short_d, 5, true);
      FAIL("degree 5 accepted in branch context");
    } catch (const math_error& e) {
      CHECK(e.code() == errc::degree_mismatch);
    }
  }

  TEST_CASE("delta class names") {
    CHECK(std::string(delta_class_name(DeltaClass::two_p1_f5)) == "TWO_P1_F5");
    CHECK(std::string(delta_class_name(DeltaClass::branch_double_single)) ==
          "BRANCH_DOUBLE_SINGLE");
    CHECK(std::string(delta_class_name(DeltaClass::other)) == "OTHER");
  }

  TEST_CASE("admissible change validation") {
    FieldRef F = make_field(5);
    const GL2 I = GL2::identity(F);
    const BinaryForm b1(F, 1), b2(F, 2), b3(F, 3);
    CHECK_NOTHROW(make_admissible(I, F->one(), F->one(), b1, b2, b3));
    try {
      make_admissible(I, F->zero(), F->one(), b1, b2, b3);
      FAIL("lambda = 0 accepted");
    } catch (const math_error& e) {
      CHECK(e.code() == errc::wrong_shape);
    }
    try {
      make_admissible(I, F->one(), F->one(), b2, b2, b3);
      FAIL("deg b1 = 2 accepted");
    } catch (const math_error& e) {
      CHECK(e.code() == errc::degree_mismatch);
    }
    try {
      make_admissible(I, make_field(3)->one(), F->one(), b1, b2, b3);
      FAIL("mixed fields accepted");
    } catch (const math_error& e) {
      CHECK(e.code() == errc::field_mismatch);
    }
  }

  TEST_CASE("admissible substitutions preserve the grading") {
    fdp::upoly::SplitMix rng(76);
    FieldRef F = make_field(5);
    for (int trial = 0; trial < 8; ++trial) {
      const GL2 M = random_gl2(F, rng);
      const FieldElem v = F->from_index(1 + rng.bounded(4));
      const AdmissibleChange ch =
          make_admissible(M, v * v, v * v * v, random_form(F, 1, rng),
                          random_form(F, 2, rng), random_form(F, 3, rng));
      std::vector<Term> terms;
      for (int k = 0; k < 5; ++k) {
        Monomial m;
        m.e[kVarS] = static_cast<uint16_t>(rng.bounded(3));
        m.e[kVarX] = static_cast<uint16_t>(rng.bounded(2));
        const int used = m.e[kVarS] + 2 * m.e[kVarX];
        if (used > 6) continue;
        const int rest = 6 - used;
        m.e[kVarY] = static_cast<uint16_t>(rest / 3 >= 1 && rng.bounded(2) ? 1 : 0);
        m.e[kVarT] = static_cast<uint16_t>(rest - 3 * m.e[kVarY]);
        terms.push_back(Term{m, F->from_index(rng.bounded(5))});
      }
      const MultiPoly f = MultiPoly::from_terms(F, Alphabet::dp1(), std::move(terms));
      if (f.is_zero()) continue;
      REQUIRE(f.is_homogeneous(6));
      const MultiPoly g = apply(ch, f);
      CHECK(g.is_homogeneous(6));
    }
  }

  TEST_CASE("admissible changes act on equations when lambda^3 = mu^2") {
    fdp::upoly::SplitMix rng(77);
    for (FieldRef F : {make_field(5), make_field(3, 2), make_field(2, 2)}) {
      for (int trial = 0; trial < 8; ++trial) {
        const FieldElem v = F->from_index(1 + rng.bounded(F->order() - 1));
        const FieldElem lambda = v * v, mu = v * v * v;
        const AdmissibleChange ch =
            make_admissible(random_gl2(F, rng), lambda, mu, random_form(F, 1, rng),
                            random_form(F, 2, rng), random_form(F, 3, rng));
        std::vector<FieldElem> c1, c2, c3, c4, c6;
        auto fill = [&](std::vector<FieldElem>& c, int degree) {
          for (int k = 0; k <= degree; ++k)
            c.push_back(F->from_index(rng.bounded(F->order())));
        };
        fill(c1, 1);
        fill(c2, 2);
        fill(c3, 3);
        fill(c4, 4);
        fill(c6, 6);
        const DP1Equation eq = DP1Equation::make(
            BinaryForm::from_coeffs(F, std::move(c1)), BinaryForm::from_coeffs(F, std::move(c2)),
            BinaryForm::from_coeffs(F, std::move(c3)), BinaryForm::from_coeffs(F, std::move(c4)),
            BinaryForm::from_coeffs(F, std::move(c6)));
        const DP1Equation moved = apply(ch, eq);
        // the equation transform is the polynomial substitution, rescaled to
        // keep y^2 monic
        const FieldElem mu2inv = (mu * mu).inverse();
        CHECK(to_poly(moved) == apply(ch, to_poly(eq)).scaled(mu2inv));
        // the discriminant transforms as a weight-12 form: the matrix acts by
        // substitution and the scale factor is (mu/lambda)^(-12)
        const FieldElem u = mu / lambda;
        const BinaryForm expect =
            act_gl2(discriminant(eq), ch.m).scaled(u.pow(12).inverse());
        CHECK(discriminant(moved) == expect);
      }
    }
    // lambda^3 != mu^2 is rejected
    FieldRef F = make_field(5);
    const AdmissibleChange bad =
        make_admissible(GL2::identity(F), F->from_int(2), F->one(), BinaryForm(F, 1),
                        BinaryForm(F, 2), BinaryForm(F, 3));
    try {
      apply(bad, DP1Equation::zero(F));
      FAIL("lambda^3 != mu^2 accepted");
    } catch (const math_error& e) {
      CHECK(e.code() == errc::wrong_shape);
    }
  }

  TEST_CASE("coefficientwise matrix action on equations") {
    fdp::upoly::SplitMix rng(78);
    FieldRef F = make_field(3, 2);
    const GL2 M = random_gl2(F, rng);
    DP1Equation eq = DP1Equation::zero(F);
    eq.a2.set_coeff(1, F->generator());
    eq.a6.set_coeff(3, F->one());
    const DP1Equation moved = act_gl2(eq, M);
    CHECK(moved.a2 == act_gl2(eq.a2, M));
    CHECK(moved.a6 == act_gl2(eq.a6, M));
    CHECK(moved.a1.is_zero());
  }
}
