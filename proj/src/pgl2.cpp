#include "fdp/pgl2.hpp"

#include <algorithm>
#include <numeric>

namespace fdp {

namespace {

struct Vec2 {
  FieldElem x, y;
};

Vec2 vec(const PointP1& P) {
  FieldRef K = P.field();
  if (P.at_infinity) return Vec2{K->one(), K->zero()};
  return Vec2{P.alpha, K->one()};
}

FieldElem det2(const Vec2& u, const Vec2& v) { return u.x * v.y - u.y * v.x; }

// matrix sending [1:0] -> R1, [0:1] -> R2, [1:1] -> R3 (three distinct points)
GL2 canon_triple(const PointP1& R1, const PointP1& R2, const PointP1& R3) {
  const Vec2 v1 = vec(R1), v2 = vec(R2), v3 = vec(R3);
  const FieldElem d12 = det2(v1, v2);
  const FieldElem lambda = det2(v3, v2) / d12;
  const FieldElem mu = det2(v1, v3) / d12;
  return GL2::make(lambda * v1.x, mu * v2.x, lambda * v1.y, mu * v2.y);
}

}  // namespace

GL2 GL2::identity(FieldRef f) { return GL2{f->one(), f->zero(), f->zero(), f->one()}; }

GL2 GL2::make(FieldElem a, FieldElem b, FieldElem c, FieldElem d) {
  if (a.field() != b.field() || a.field() != c.field() || a.field() != d.field())
    throw math_error(errc::field_mismatch, "matrix entries over different fields");
  GL2 m{std::move(a), std::move(b), std::move(c), std::move(d)};
  if (m.det().is_zero())
    throw math_error(errc::wrong_shape, "matrix must be invertible");
  return m;
}

GL2 GL2::inverse() const {
  const FieldElem di = det().inverse();
  return GL2{d * di, -b * di, -c * di, a * di};
}

GL2 GL2::operator*(const GL2& o) const {
  return GL2::make(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
}

GL2 GL2::embed_into(FieldRef target) const {
  return GL2{embed(a, target), embed(b, target), embed(c, target), embed(d, target)};
}

std::string GL2::to_string() const {
  return "[[" + a.to_string() + ", " + b.to_string() + "], [" + c.to_string() + ", " +
         d.to_string() + "]]";
}

BinaryForm act_gl2(const BinaryForm& g, const GL2& M) {
  if (g.field() != M.field())
    throw math_error(errc::field_mismatch, "form and matrix over different fields");
  FieldRef F = g.field();
  const int d = g.degree();
  BinaryForm imgS(F, 1), imgT(F, 1);
  imgS.set_coeff(0, M.a);
  imgS.set_coeff(1, M.b);
  imgT.set_coeff(0, M.c);
  imgT.set_coeff(1, M.d);
  // powers of the two images up to the degree
  std::vector<BinaryForm> Spow, Tpow;
  BinaryForm one(F, 0);
  one.set_coeff(0, F->one());
  Spow.push_back(one);
  Tpow.push_back(one);
  for (int i = 1; i <= d; ++i) {
    Spow.push_back(Spow.back() * imgS);
    Tpow.push_back(Tpow.back() * imgT);
  }
  BinaryForm out(F, d);
  for (int k = 0; k <= d; ++k) {
    if (g.coeff(k).is_zero()) continue;
    out = out + (Spow[static_cast<std::size_t>(d - k)] * Tpow[static_cast<std::size_t>(k)])
                    .scaled(g.coeff(k));
  }
  return out;
}

DP1Equation act_gl2(const DP1Equation& eq, const GL2& M) {
  return DP1Equation{act_gl2(eq.a1, M), act_gl2(eq.a2, M), act_gl2(eq.a3, M),
                     act_gl2(eq.a4, M), act_gl2(eq.a6, M)};
}

PointP1 apply_point(const GL2& M, const PointP1& P) {
  if (P.field() != M.field())
    throw math_error(errc::field_mismatch, "point and matrix over different fields");
  const Vec2 v = vec(P);
  const FieldElem nx = M.a * v.x + M.b * v.y;
  const FieldElem ny = M.c * v.x + M.d * v.y;
  if (ny.is_zero()) return PointP1::infinity(M.field());
  return PointP1::finite(nx / ny);
}

La5Result la5_normalize(const BinaryForm& g, uint64_t seed) {
  if (g.is_zero()) throw math_error(errc::zero_input, "cannot normalize the zero form");
  FieldRef F = g.field();
  const uint32_t p = F->characteristic();
  if (g.degree() != static_cast<int>(p) + 1)
    throw math_error(errc::degree_mismatch,
                     "normalization expects a form of degree p + 1 = " + std::to_string(p + 1));
  DivisorP1 d = roots(g, seed);
  if (d.points.size() < 3)
    throw math_error(errc::insufficient_roots,
                     "normalization needs at least three distinct roots, found " +
                         std::to_string(d.points.size()));
  const GL2 M = canon_triple(d.points[0].first, d.points[1].first, d.points[2].first);
  const BinaryForm gN = act_gl2(g.embed_into(d.field), M);
  const FieldElem unit = gN.coeff(1);  // coefficient of s^p t
  BinaryForm ref(d.field, g.degree());
  ref.set_coeff(1, d.field->one());
  ref.set_coeff(static_cast<int>(p), -d.field->one());
  if (unit.is_zero() || !(gN == ref.scaled(unit)))
    throw math_error(errc::wrong_shape,
                     "form is not equivalent to s^p*t - s*t^p (not in the stable span)");
  return La5Result{M, unit, gN};
}

namespace {

std::vector<int> mult_profile(const DivisorP1& d) {
  std::vector<int> m;
  m.reserve(d.points.size());
  for (const auto& [pt, k] : d.points) m.push_back(k);
  std::sort(m.begin(), m.end());
  return m;
}

// does M carry d1 exactly onto d2 (with multiplicities)?
bool maps_divisor(const GL2& M, const DivisorP1& d1, const DivisorP1& d2) {
  std::vector<bool> used(d2.points.size(), false);
  for (const auto& [pt, mult] : d1.points) {
    const PointP1 q = apply_point(M, pt);
    bool found = false;
    for (std::size_t i = 0; i < d2.points.size(); ++i) {
      if (!used[i] && d2.points[i].second == mult && d2.points[i].first == q) {
        used[i] = true;
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

}  // namespace

EquivalenceWitness divisor_pgl2_equivalent(const DivisorP1& d1, const DivisorP1& d2) {
  if (d1.field->characteristic() != d2.field->characteristic())
    throw math_error(errc::field_mismatch, "divisors over different characteristics");
  if (d1.degree() != d2.degree() || mult_profile(d1) != mult_profile(d2))
    return EquivalenceWitness{false, std::nullopt};

  const int deg = std::lcm(d1.field->degree(), d2.field->degree());
  if (deg > Field::kMaxDegree)
    throw math_error(errc::splitting_field_too_large,
                     "compositum field exceeds the degree-12 cap");
  FieldRef K = make_field(d1.field->characteristic(), deg);
  const DivisorP1 e1 = embed_divisor(d1, K);
  const DivisorP1 e2 = embed_divisor(d2, K);
  const std::size_t n = e1.points.size();

  if (n == 0) return EquivalenceWitness{true, GL2::identity(K)};

  if (n == 1) {
    // complete each point to a basis and conjugate
    auto completion = [&K](const PointP1& P) {
      const Vec2 v = vec(P);
      if (!v.y.is_zero()) return GL2::make(v.x, K->one(), v.y, K->zero());
      return GL2::make(v.x, K->zero(), v.y, K->one());
    };
    const GL2 M = completion(e2.points[0].first) * completion(e1.points[0].first).inverse();
    return EquivalenceWitness{true, M};
  }

  if (n == 2) {
    const auto& [P1, m1] = e1.points[0];
    const auto& [P2, m2] = e1.points[1];
    auto pair_matrix = [](const PointP1& A, const PointP1& B) {
      const Vec2 u = vec(A), v = vec(B);
      return GL2::make(u.x, v.x, u.y, v.y);
    };
    const GL2 base = pair_matrix(P1, P2).inverse();
    for (int swap = 0; swap < 2; ++swap) {
      const auto& [Q1, k1] = e2.points[static_cast<std::size_t>(swap)];
      const auto& [Q2, k2] = e2.points[static_cast<std::size_t>(1 - swap)];
      if (m1 != k1 || m2 != k2) continue;
      const GL2 M = pair_matrix(Q1, Q2) * base;
      if (maps_divisor(M, e1, e2)) return EquivalenceWitness{true, M};
    }
    return EquivalenceWitness{false, std::nullopt};
  }

  // three base points of d1 against every ordered triple of d2
  const GL2 base = canon_triple(e1.points[0].first, e1.points[1].first, e1.points[2].first)
                       .inverse();
  for (std::size_t i = 0; i < n; ++i) {
    if (e2.points[i].second != e1.points[0].second) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i || e2.points[j].second != e1.points[1].second) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == i || k == j || e2.points[k].second != e1.points[2].second) continue;
        const GL2 M =
            canon_triple(e2.points[i].first, e2.points[j].first, e2.points[k].first) * base;
        if (maps_divisor(M, e1, e2)) return EquivalenceWitness{true, M};
      }
    }
  }
  return EquivalenceWitness{false, std::nullopt};
}

const char* delta_class_name(DeltaClass c) {
  switch (c) {
    case DeltaClass::two_p1_f5: return "TWO_P1_F5";
    case DeltaClass::twelve_o: return "TWELVE_O";
    case DeltaClass::nine_three: return "NINE_THREE";
    case DeltaClass::three_p1_f3: return "THREE_P1_F3";
    case DeltaClass::branch_triple: return "BRANCH_TRIPLE";
    case DeltaClass::branch_double_single: return "BRANCH_DOUBLE_SINGLE";
    case DeltaClass::branch_distinct: return "BRANCH_DISTINCT";
    case DeltaClass::other: return "OTHER";
  }
  return "OTHER";
}

namespace {

DivisorP1 point_divisor(FieldRef F, std::vector<std::pair<PointP1, int>> pts) {
  DivisorP1 d{F, std::move(pts)};
  d.sort_points();
  return d;
}

}  // namespace

DeltaClassResult delta_class(const DivisorP1& d, uint32_t p, bool branch_context) {
  FieldRef Fp = make_field(p, 1);
  std::vector<std::pair<DeltaClass, DivisorP1>> refs;

  if (branch_context) {
    if (d.degree() != 3)
      throw math_error(errc::degree_mismatch, "branch configuration expects a degree-3 divisor");
    refs.emplace_back(DeltaClass::branch_triple,
                      point_divisor(Fp, {{PointP1::finite(Fp->zero()), 3}}));
    refs.emplace_back(DeltaClass::branch_double_single,
                      point_divisor(Fp, {{PointP1::finite(Fp->zero()), 2},
                                         {PointP1::infinity(Fp), 1}}));
    refs.emplace_back(DeltaClass::branch_distinct,
                      point_divisor(Fp, {{PointP1::finite(Fp->zero()), 1},
                                         {PointP1::infinity(Fp), 1},
                                         {PointP1::finite(Fp->one()), 1}}));
  } else {
    if (p != 3 && p != 5)
      throw math_error(errc::unsupported,
                       "discriminant configurations are classified for p = 3 and p = 5");
    if (d.degree() != 12)
      throw math_error(errc::degree_mismatch,
                       "discriminant configuration expects a degree-12 divisor");
    // p+1 points of P^1(F_p) as roots of s^p t - s t^p, with multiplicity
    // 2 (p = 5) or 3 (p = 3)
    BinaryForm full(Fp, static_cast<int>(p) + 1);
    full.set_coeff(1, Fp->one());
    full.set_coeff(static_cast<int>(p), -Fp->one());
    DivisorP1 rational = roots(full);
    for (auto& [pt, m] : rational.points) m = (p == 5) ? 2 : 3;
    refs.emplace_back(p == 5 ? DeltaClass::two_p1_f5 : DeltaClass::three_p1_f3, rational);
    refs.emplace_back(DeltaClass::twelve_o,
                      point_divisor(Fp, {{PointP1::finite(Fp->zero()), 12}}));
    refs.emplace_back(DeltaClass::nine_three,
                      point_divisor(Fp, {{PointP1::finite(Fp->zero()), 9},
                                         {PointP1::infinity(Fp), 3}}));
  }

  for (const auto& [label, ref] : refs) {
    EquivalenceWitness w = divisor_pgl2_equivalent(d, ref);
    if (w.equivalent) return DeltaClassResult{label, w.map};
  }
  return DeltaClassResult{DeltaClass::other, std::nullopt};
}

AdmissibleChange make_admissible(GL2 m, FieldElem lambda, FieldElem mu, BinaryForm b1,
                                 BinaryForm b2, BinaryForm b3) {
  FieldRef F = m.field();
  if (lambda.field() != F || mu.field() != F || b1.field() != F || b2.field() != F ||
      b3.field() != F)
    throw math_error(errc::field_mismatch, "change-of-coordinates data over different fields");
  if (lambda.is_zero() || mu.is_zero())
    throw math_error(errc::wrong_shape, "lambda and mu must be units");
  if (b1.degree() != 1 || b2.degree() != 2 || b3.degree() != 3)
    throw math_error(errc::degree_mismatch, "b1, b2, b3 must have degrees 1, 2, 3");
  return AdmissibleChange{std::move(m), std::move(lambda), std::move(mu), std::move(b1),
                          std::move(b2), std::move(b3)};
}

MultiPoly apply(const AdmissibleChange& ch, const MultiPoly& f) {
  if (!(*f.alphabet() == *Alphabet::dp1()))
    throw math_error(errc::wrong_shape, "admissible changes act on the weighted alphabet");
  FieldRef F = f.field();
  if (F != ch.m.field())
    throw math_error(errc::field_mismatch, "polynomial and change over different fields");
  AlphabetRef A = f.alphabet();
  const MultiPoly S = MultiPoly::variable(F, A, kVarS);
  const MultiPoly T = MultiPoly::variable(F, A, kVarT);
  const MultiPoly X = MultiPoly::variable(F, A, kVarX);
  const MultiPoly Y = MultiPoly::variable(F, A, kVarY);
  std::vector<std::optional<MultiPoly>> images(A->size());
  images[static_cast<std::size_t>(kVarS)] = S.scaled(ch.m.a) + T.scaled(ch.m.b);
  images[static_cast<std::size_t>(kVarT)] = S.scaled(ch.m.c) + T.scaled(ch.m.d);
  images[static_cast<std::size_t>(kVarX)] = X.scaled(ch.lambda) + ch.b2.to_poly(A);
  images[static_cast<std::size_t>(kVarY)] =
      Y.scaled(ch.mu) + ch.b1.to_poly(A) * X + ch.b3.to_poly(A);
  return f.substitute(images);
}

DP1Equation apply(const AdmissibleChange& ch, const DP1Equation& eq) {
  if (ch.lambda * ch.lambda * ch.lambda != ch.mu * ch.mu)
    throw math_error(errc::wrong_shape,
                     "equation-level changes need lambda^3 == mu^2 to preserve the shape");
  const MultiPoly moved = apply(ch, to_poly(eq));
  return equation_from_poly(moved.scaled((ch.mu * ch.mu).inverse()));
}

}  // namespace fdp
