#include <map>
#include <optional>
#include <vector>

#include "doctest.h"
#include "fdp/mpoly.hpp"
#include "fdp/upoly.hpp"

using namespace fdp;

namespace {

MultiPoly random_poly(FieldRef F, AlphabetRef A, fdp::upoly::SplitMix& rng, int max_terms) {
  std::vector<Term> terms;
  const int n = 1 + static_cast<int>(rng.bounded(static_cast<uint64_t>(max_terms)));
  for (int i = 0; i < n; ++i) {
    Monomial m;
    for (std::size_t v = 0; v < A->size(); ++v)
      m.e[v] = static_cast<uint16_t>(rng.bounded(4));
    terms.push_back(Term{m, F->from_index(rng.bounded(F->order()))});
  }
  return MultiPoly::from_terms(F, A, std::move(terms));
}

// independent evaluation oracle: substitute constants (grading waived) and
// compare scalars
FieldElem eval_at(const MultiPoly& f, const std::vector<FieldElem>& vals) {
  FieldElem acc = f.field()->zero();
  for (const Term& t : f.terms()) {
    FieldElem prod = t.c;
    for (std::size_t v = 0; v < f.alphabet()->size(); ++v)
      for (int k = 0; k < t.m.e[v]; ++k) prod *= vals[v];
    acc += prod;
  }
  return acc;
}

std::vector<FieldElem> random_point(FieldRef F, std::size_t n, fdp::upoly::SplitMix& rng) {
  std::vector<FieldElem> vals;
  for (std::size_t i = 0; i < n; ++i) vals.push_back(F->from_index(rng.bounded(F->order())));
  return vals;
}

}  // namespace

TEST_SUITE("mpoly") {
  TEST_CASE("default alphabet is the P(1,1,2,3) coordinate ring") {
    AlphabetRef A = Alphabet::dp1();
    REQUIRE(A->size() == 4);
    CHECK(A->name(kVarS) == "s");
    CHECK(A->name(kVarT) == "t");
    CHECK(A->name(kVarX) == "x");
    CHECK(A->name(kVarY) == "y");
    CHECK(A->weight(kVarS) == 1);
    CHECK(A->weight(kVarT) == 1);
    CHECK(A->weight(kVarX) == 2);
    CHECK(A->weight(kVarY) == 3);
    CHECK(A->index_of("x") == kVarX);
    CHECK(A->index_of("z") == -1);
  }

  TEST_CASE("alphabet validation") {
    CHECK_THROWS_AS(Alphabet::make({"a", "a"}, {1, 1}), math_error);
    CHECK_THROWS_AS(Alphabet::make({"a"}, {0}), math_error);
    CHECK_THROWS_AS(
        Alphabet::generic({"v1", "v2", "v3", "v4", "v5", "v6", "v7", "v8", "v9"}),
        math_error);
  }

  TEST_CASE("parse/format round trip and canonical term order") {
    FieldRef F = make_field(7);
    CHECK(format_poly(parse_poly("s^6+t^6", F)) == "s^6 + t^6");
    CHECK(format_poly(parse_poly("t^6 + s^6", F)) == "s^6 + t^6");
    // weighted degree dominates: y (weight 3) prints before x*s (weight 3)?
    // same degree -- exponent tuple decides, s-major first
    CHECK(format_poly(parse_poly("y + x*s", F)) == "s*x + y");
    // ties in weighted degree go to the larger exponent of the earlier
    // variable, so x^3 = (0,0,3,0) prints before y^2 = (0,0,0,2)
    CHECK(format_poly(parse_poly("y^2 - x^3", F)) == "6*x^3 + y^2");
    CHECK(format_poly(parse_poly("0", F)) == "0");
    CHECK(format_poly(parse_poly("3*s - 3*s", F)) == "0");
    CHECK(format_poly(parse_poly("10*s", F)) == "3*s");
    // round trip through the printer twice is stable
    for (const char* text : {"y^2 + 6*x^3 + s*t*x*y", "s^6 + 2*s^3*t^3 + t^6", "5"}) {
      const std::string once = format_poly(parse_poly(text, F));
      CHECK(format_poly(parse_poly(once, F)) == once);
    }
  }

  TEST_CASE("extension coefficients print parenthesized and re-parse") {
    FieldRef F9 = make_field(3, 2);
    const std::string rendered = format_poly(parse_poly("(u+1)*s + u*t", F9));
    CHECK(rendered == "(u + 1)*s + u*t");
    CHECK(parse_poly(rendered, F9) == parse_poly("(u+1)*s + u*t", F9));
    CHECK(parse_elem("2*u + 1", F9).to_string() == "2*u + 1");
  }

  TEST_CASE("parse errors carry byte offsets") {
    FieldRef F = make_field(5);
    try {
      parse_poly("y^2 - (x^3", F);
      CHECK(false);
    } catch (const parse_error& e) {
      CHECK(e.offset() == 10);
    }
    try {
      parse_poly("s + q", F);
      CHECK(false);
    } catch (const parse_error& e) {
      CHECK(e.offset() == 4);
    }
    // no implicit multiplication
    CHECK_THROWS_AS(parse_poly("2s", F), parse_error);
    CHECK_THROWS_AS(parse_poly("s t", F), parse_error);
    // unknown generator over a prime field
    CHECK_THROWS_AS(parse_poly("u + 1", F), parse_error);
    // exponent cap
    CHECK_THROWS_AS(parse_poly("s^10001", F), parse_error);
    CHECK_THROWS_AS(parse_poly("", F), parse_error);
  }

  TEST_CASE("ring operations agree with the evaluation oracle") {
    fdp::upoly::SplitMix rng(4242);
    for (FieldRef F : {make_field(5), make_field(3, 2), make_field(2, 3)}) {
      CAPTURE(F->name());
      AlphabetRef A = Alphabet::dp1();
      for (int trial = 0; trial < 25; ++trial) {
        const MultiPoly f = random_poly(F, A, rng, 6), g = random_poly(F, A, rng, 6);
        const auto pt = random_point(F, A->size(), rng);
        CHECK(eval_at(f + g, pt) == eval_at(f, pt) + eval_at(g, pt));
        CHECK(eval_at(f - g, pt) == eval_at(f, pt) - eval_at(g, pt));
        CHECK(eval_at(f * g, pt) == eval_at(f, pt) * eval_at(g, pt));
        CHECK(eval_at(f.pow(3), pt) == eval_at(f, pt).pow(3));
        CHECK(eval_at(-f, pt) == -eval_at(f, pt));
        CHECK(f * g == g * f);
        CHECK((f + g) - g == f);
      }
    }
  }

  TEST_CASE("freshman's dream: (s + t)^p is s^p + t^p") {
    for (uint32_t p : {2u, 3u, 5u}) {
      FieldRef F = make_field(p);
      const MultiPoly s = MultiPoly::variable(F, Alphabet::dp1(), kVarS);
      const MultiPoly t = MultiPoly::variable(F, Alphabet::dp1(), kVarT);
      CHECK((s + t).pow(p) == s.pow(p) + t.pow(p));
    }
  }

  TEST_CASE("weighted degree bookkeeping") {
    FieldRef F = make_field(5);
    const MultiPoly f = parse_poly("y^2 - x^3 + s^6", F);
    CHECK(f.weighted_degree() == 6);
    CHECK(f.is_homogeneous(6));
    CHECK_FALSE(parse_poly("y^2 + s^5", F).is_homogeneous(6));
    CHECK(MultiPoly::zero(F, Alphabet::dp1()).weighted_degree() == -1);
    const auto comps = parse_poly("y^2 + s^5 + x", F).weighted_components();
    REQUIRE(comps.size() == 3);
    CHECK(comps.at(6) == parse_poly("y^2", F));
    CHECK(comps.at(5) == parse_poly("s^5", F));
    CHECK(comps.at(2) == parse_poly("x", F));
  }

  TEST_CASE("substitution respects the grading unless waived") {
    FieldRef F = make_field(5);
    AlphabetRef A = Alphabet::dp1();
    const MultiPoly f = parse_poly("x^3 + s^6", F);
    std::vector<std::optional<MultiPoly>> images(A->size());
    images[kVarX] = parse_poly("s*t", F);  // weight 2 image: fine
    CHECK(f.substitute(images) == parse_poly("s^3*t^3 + s^6", F));
    images[kVarX] = parse_poly("s", F);  // weight 1 image: breaks the grading
    CHECK_THROWS_AS(f.substitute(images), math_error);
    CHECK(f.substitute(images, /*waive_grading=*/true) == parse_poly("s^3 + s^6", F));
    // substitution is multiplicative
    fdp::upoly::SplitMix rng(77);
    for (int trial = 0; trial < 10; ++trial) {
      const MultiPoly g = random_poly(F, A, rng, 5), h = random_poly(F, A, rng, 5);
      std::vector<std::optional<MultiPoly>> im(A->size());
      im[kVarS] = parse_poly("s + t", F);
      im[kVarY] = parse_poly("y - s*x", F);
      CHECK((g * h).substitute(im) == g.substitute(im) * h.substitute(im));
    }
  }

  TEST_CASE("partial derivatives satisfy the product rule") {
    FieldRef F = make_field(3);
    fdp::upoly::SplitMix rng(31);
    AlphabetRef A = Alphabet::dp1();
    for (int trial = 0; trial < 10; ++trial) {
      const MultiPoly f = random_poly(F, A, rng, 5), g = random_poly(F, A, rng, 5);
      for (int v = 0; v < 4; ++v)
        CHECK((f * g).partial(v) == f.partial(v) * g + f * g.partial(v));
    }
    CHECK(parse_poly("x^3", F).partial(kVarX) == MultiPoly::zero(F, A));  // 3 = 0
    CHECK(parse_poly("s^2*t", F).partial(kVarS) ==
          parse_poly("2*s*t", F));
  }

  TEST_CASE("coeff lookup") {
    FieldRef F = make_field(7);
    const MultiPoly f = parse_poly("3*s^2*x + y", F);
    Monomial m;
    m.e[kVarS] = 2;
    m.e[kVarX] = 1;
    CHECK(f.coeff(m) == F->from_int(3));
    Monomial absent;
    absent.e[kVarT] = 1;
    CHECK(f.coeff(absent) == F->zero());
  }

  TEST_CASE("mixing fields or alphabets is rejected") {
    const MultiPoly over5 = parse_poly("s", make_field(5));
    const MultiPoly over7 = parse_poly("s", make_field(7));
    CHECK_THROWS_AS(over5 + over7, math_error);
    const MultiPoly generic =
        parse_poly("a", make_field(5), Alphabet::generic({"a", "b"}));
    CHECK_THROWS_AS(over5 * generic, math_error);
  }

  TEST_CASE("binary forms: dense storage round-trips the sparse view") {
    FieldRef F = make_field(5);
    const BinaryForm g = BinaryForm::from_coeffs(
        F, {F->from_int(1), F->from_int(0), F->from_int(2), F->from_int(4)});
    CHECK(g.degree() == 3);
    CHECK(g.coeff(0) == F->one());          // s^3
    CHECK(g.coeff(2) == F->from_int(2));    // s t^2
    CHECK(g.to_poly() == parse_poly("s^3 + 2*s*t^2 + 4*t^3", F));
    CHECK(BinaryForm::from_poly(g.to_poly(), 3) == g);
    CHECK(g.to_string() == "s^3 + 2*s*t^2 + 4*t^3");
    // the zero form keeps its stated degree
    const BinaryForm z(F, 6);
    CHECK(z.is_zero());
    CHECK(z.degree() == 6);
    CHECK(z.to_poly().is_zero());
    CHECK(BinaryForm::from_poly(MultiPoly::zero(F, Alphabet::dp1()), 6) == z);
  }

  TEST_CASE("binary form arithmetic matches evaluation") {
    fdp::upoly::SplitMix rng(555);
    FieldRef F = make_field(3, 2);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<FieldElem> ca, cb;
      for (int i = 0; i < 4; ++i) ca.push_back(F->from_index(rng.bounded(9)));
      for (int i = 0; i < 3; ++i) cb.push_back(F->from_index(rng.bounded(9)));
      const BinaryForm a = BinaryForm::from_coeffs(F, ca);
      const BinaryForm b = BinaryForm::from_coeffs(F, cb);
      const FieldElem s = F->from_index(rng.bounded(9)), t = F->from_index(rng.bounded(9));
      CHECK((a * b).eval(s, t) == a.eval(s, t) * b.eval(s, t));
      CHECK((a * b).degree() == 5);
      CHECK(a.pow(3).eval(s, t) == a.eval(s, t).pow(3));
      CHECK((a + a.scaled(F->from_int(2))).is_zero());  // 3a = 0
    }
    CHECK_THROWS_AS(BinaryForm(F, 2) + BinaryForm(F, 3), math_error);
  }

  TEST_CASE("binary form derivatives against the Euler relation") {
    // s g_s + t g_t = deg(g) * g for homogeneous forms
    fdp::upoly::SplitMix rng(816);
    for (FieldRef F : {make_field(5), make_field(7)}) {
      for (int d : {3, 4, 6}) {
        std::vector<FieldElem> c;
        for (int i = 0; i <= d; ++i) c.push_back(F->from_index(rng.bounded(F->order())));
        const BinaryForm g = BinaryForm::from_coeffs(F, c);
        const MultiPoly S = MultiPoly::variable(F, Alphabet::dp1(), kVarS);
        const MultiPoly T = MultiPoly::variable(F, Alphabet::dp1(), kVarT);
        const MultiPoly lhs =
            S * g.derivative_s().to_poly() + T * g.derivative_t().to_poly();
        CHECK(lhs == g.to_poly().scaled(F->from_int(d)));
      }
    }
  }

  TEST_CASE("from_poly rejects shape violations") {
    FieldRef F = make_field(5);
    CHECK_THROWS_AS(BinaryForm::from_poly(parse_poly("s^2 + s*t", F), 3), math_error);
    CHECK_THROWS_AS(BinaryForm::from_poly(parse_poly("s^2 + x", F), 2), math_error);
  }

  TEST_CASE("monomial exponent overflow is caught") {
    FieldRef F = make_field(2);
    const MultiPoly s = MultiPoly::variable(F, Alphabet::dp1(), kVarS);
    MultiPoly big = s;
    // square repeatedly: exponent 2^16 overflows uint16 storage
    CHECK_THROWS_AS(
        [&] {
          for (int i = 0; i < 17; ++i) big = big * big;
          return big;
        }(),
        math_error);
  }
}
