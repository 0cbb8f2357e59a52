#include "fdp/unifactor.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "fdp/upoly.hpp"

namespace fdp {

namespace {

// g(s, 1) as a univariate polynomial in s: coefficient of s^i is c_{d-i}
upoly::Poly dehomogenize(const BinaryForm& g) {
  std::vector<FieldElem> c;
  c.reserve(static_cast<std::size_t>(g.degree() + 1));
  for (int i = 0; i <= g.degree(); ++i) c.push_back(g.coeff(g.degree() - i));
  return upoly::from_coeffs(g.field(), std::move(c));
}

// univariate h of degree e back to a binary form of degree e
BinaryForm homogenize(const upoly::Poly& h) {
  const int e = upoly::deg(h);
  BinaryForm g(h.field, std::max(e, 0));
  for (int i = 0; i <= e; ++i) g.set_coeff(e - i, h.c[static_cast<std::size_t>(i)]);
  return g;
}

}  // namespace

bool PointP1::operator==(const PointP1& o) const {
  if (at_infinity != o.at_infinity) return false;
  if (at_infinity) return true;
  return alpha == o.alpha;
}

bool PointP1::before(const PointP1& o) const {
  if (at_infinity != o.at_infinity) return !at_infinity;
  if (at_infinity) return false;
  return alpha.lex_less(o.alpha);
}

std::string PointP1::to_string() const {
  if (at_infinity) return "[1:0]";
  return "[" + alpha.to_string() + ":1]";
}

PointP1 embed_point(const PointP1& pt, FieldRef target) {
  if (pt.at_infinity) return PointP1::infinity(target);
  return PointP1::finite(embed(pt.alpha, target));
}

int DivisorP1::degree() const {
  int d = 0;
  for (const auto& [pt, m] : points) d += m;
  return d;
}

void DivisorP1::sort_points() {
  std::sort(points.begin(), points.end(),
            [](const auto& a, const auto& b) { return a.first.before(b.first); });
}

std::string DivisorP1::to_string() const {
  if (points.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [pt, m] : points) {
    if (!first) out << " + ";
    first = false;
    out << m << "*" << pt.to_string();
  }
  return out.str();
}

DivisorP1 embed_divisor(const DivisorP1& d, FieldRef target) {
  DivisorP1 out{target, {}};
  out.points.reserve(d.points.size());
  for (const auto& [pt, m] : d.points) out.points.emplace_back(embed_point(pt, target), m);
  out.sort_points();
  return out;
}

SquarefreeParts squarefree_decomposition(const BinaryForm& g) {
  if (g.is_zero())
    throw math_error(errc::zero_input, "squarefree decomposition of the zero form");
  FieldRef f = g.field();
  upoly::Poly h = dehomogenize(g);
  const int mult_inf = g.degree() - upoly::deg(h);  // t-multiplicity

  SquarefreeParts out{upoly::lead(h), {}};
  for (auto& [part, m] : upoly::squarefree_decomposition(h))
    out.parts.emplace_back(homogenize(part), m);

  if (mult_inf > 0) {
    BinaryForm tform(f, 1);
    tform.set_coeff(1, f->one());
    bool merged = false;
    for (auto& [part, m] : out.parts) {
      if (m == mult_inf) {
        part = part * tform;
        merged = true;
        break;
      }
    }
    if (!merged) out.parts.emplace_back(tform, mult_inf);
  }
  std::sort(out.parts.begin(), out.parts.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

DivisorP1 roots(const BinaryForm& g, uint64_t seed) {
  if (g.is_zero()) throw math_error(errc::zero_input, "the zero form has no root divisor");
  FieldRef f = g.field();
  upoly::Poly h = dehomogenize(g);
  const int mult_inf = g.degree() - upoly::deg(h);

  auto factors = upoly::factor(h, seed);
  int lcm_deg = 1;
  for (const auto& [q, m] : factors)
    if (upoly::deg(q) > 0) lcm_deg = std::lcm(lcm_deg, upoly::deg(q));
  const int target_deg = f->degree() * lcm_deg;
  if (target_deg > Field::kMaxDegree)
    throw math_error(errc::splitting_field_too_large,
                     "splitting field F_" + std::to_string(f->characteristic()) + "^" +
                         std::to_string(target_deg) + " exceeds the degree-12 cap");
  FieldRef K = make_field(f->characteristic(), target_deg);

  DivisorP1 out{K, {}};
  for (const auto& [q, m] : factors) {
    if (upoly::deg(q) < 1) continue;
    upoly::Poly qK = upoly::embed_poly(q, K);
    auto rts = upoly::roots_in_field(qK, seed);
    if (static_cast<int>(rts.size()) != upoly::deg(q))
      throw math_error(errc::unsupported, "irreducible factor failed to split");  // cannot happen
    for (const auto& [r, rm] : rts) out.points.emplace_back(PointP1::finite(r), m);
  }
  if (mult_inf > 0) out.points.emplace_back(PointP1::infinity(K), mult_inf);
  out.sort_points();
  return out;
}

}  // namespace fdp
