#include "fdp/upoly.hpp"

#include <algorithm>

namespace fdp::upoly {

namespace {

void trim(Poly& a) {
  while (!a.c.empty() && a.c.back().is_zero()) a.c.pop_back();
}

void check_field(const Poly& a, const Poly& b) {
  if (a.field != b.field)
    throw math_error(errc::field_mismatch, "polynomials over different fields");
}

// p^(m*e) as a 128-bit integer; throws when the splitting exponent would not
// fit (only reachable for characteristics far beyond this library's use).
unsigned __int128 pow128_checked(uint64_t base, int e) {
  unsigned __int128 r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > (~static_cast<unsigned __int128>(0)) / base)
      throw math_error(errc::unsupported, "field too large for factorization");
    r *= base;
  }
  return r;
}

// canonical order on monic polynomials: degree, then coefficients from the
// top down by lex_less
bool poly_canon_less(const Poly& a, const Poly& b) {
  if (deg(a) != deg(b)) return deg(a) < deg(b);
  for (int i = deg(a); i >= 0; --i) {
    const auto& ca = a.c[static_cast<std::size_t>(i)];
    const auto& cb = b.c[static_cast<std::size_t>(i)];
    if (!(ca == cb)) return ca.lex_less(cb);
  }
  return false;
}

Poly random_poly_below(FieldRef f, int degree_bound, SplitMix& rng) {
  const uint64_t q = f->order();
  std::vector<FieldElem> c;
  c.reserve(static_cast<std::size_t>(degree_bound));
  for (int i = 0; i < degree_bound; ++i) c.push_back(f->from_index(rng.bounded(q)));
  return from_coeffs(f, std::move(c));
}

// coefficient-wise p-th root of a polynomial in x^p
Poly pth_root(const Poly& f) {
  const uint32_t p = f.field->characteristic();
  const int n = f.field->degree();
  std::vector<FieldElem> out;
  for (std::size_t i = 0; i < f.c.size(); i += p) {
    FieldElem a = f.c[i];
    // inverse Frobenius: a^(p^(n-1))
    for (int k = 0; k + 1 < n; ++k) a = frobenius(a);
    out.push_back(a);
  }
  return from_coeffs(f.field, std::move(out));
}

// split a monic squarefree product of degree-d irreducibles into its factors
void edf(const Poly& g, int d, SplitMix& rng, std::vector<Poly>& out) {
  if (deg(g) == d) {
    out.push_back(g);
    return;
  }
  FieldRef f = g.field;
  const uint32_t p = f->characteristic();
  const unsigned __int128 qd = pow128_checked(f->order(), d);
  for (;;) {
    Poly a = random_poly_below(f, deg(g), rng);
    if (is_zero(a)) continue;
    Poly b = zero(f);
    if (p == 2) {
      // trace map: sum of a^(2^i) over i < log2(q^d)
      unsigned __int128 q2 = qd;
      Poly t = mod(a, g);
      while (q2 > 1) {
        b = add(b, t);
        t = powmod(t, 2, g);
        q2 >>= 1;
      }
    } else {
      b = sub(powmod(a, (qd - 1) / 2, g), constant(f->one()));
    }
    Poly h = gcd(b, g);
    if (deg(h) > 0 && deg(h) < deg(g)) {
      edf(h, d, rng, out);
      edf(divexact(g, h), d, rng, out);
      return;
    }
  }
}

}  // namespace

Poly zero(FieldRef f) { return Poly{f, {}}; }

Poly constant(const FieldElem& a) {
  Poly r{a.field(), {}};
  if (!a.is_zero()) r.c.push_back(a);
  return r;
}

Poly x(FieldRef f) { return Poly{f, {f->zero(), f->one()}}; }

Poly from_coeffs(FieldRef f, std::vector<FieldElem> c) {
  for (const auto& a : c)
    if (a.field() != f)
      throw math_error(errc::field_mismatch, "coefficient from a different field");
  Poly r{f, std::move(c)};
  trim(r);
  return r;
}

int deg(const Poly& a) { return static_cast<int>(a.c.size()) - 1; }
bool is_zero(const Poly& a) { return a.c.empty(); }

bool equal(const Poly& a, const Poly& b) {
  check_field(a, b);
  if (a.c.size() != b.c.size()) return false;
  for (std::size_t i = 0; i < a.c.size(); ++i)
    if (a.c[i] != b.c[i]) return false;
  return true;
}

FieldElem lead(const Poly& a) {
  if (is_zero(a)) throw math_error(errc::zero_input, "zero polynomial has no leading coefficient");
  return a.c.back();
}

Poly add(const Poly& a, const Poly& b) {
  check_field(a, b);
  Poly r{a.field, {}};
  const std::size_t n = std::max(a.c.size(), b.c.size());
  r.c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    FieldElem v = a.field->zero();
    if (i < a.c.size()) v += a.c[i];
    if (i < b.c.size()) v += b.c[i];
    r.c.push_back(v);
  }
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b) {
  check_field(a, b);
  Poly r{a.field, {}};
  const std::size_t n = std::max(a.c.size(), b.c.size());
  r.c.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    FieldElem v = a.field->zero();
    if (i < a.c.size()) v += a.c[i];
    if (i < b.c.size()) v -= b.c[i];
    r.c.push_back(v);
  }
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b) {
  check_field(a, b);
  if (is_zero(a) || is_zero(b)) return zero(a.field);
  std::vector<FieldElem> r(a.c.size() + b.c.size() - 1, a.field->zero());
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) r[i + j] += a.c[i] * b.c[j];
  }
  Poly out{a.field, std::move(r)};
  trim(out);
  return out;
}

Poly scale(const Poly& a, const FieldElem& s) {
  Poly r{a.field, {}};
  r.c.reserve(a.c.size());
  for (const auto& c : a.c) r.c.push_back(c * s);
  trim(r);
  return r;
}

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b) {
  check_field(a, b);
  if (is_zero(b)) throw math_error(errc::division_by_zero, "polynomial division by zero");
  const int db = deg(b);
  Poly rem = a;
  if (deg(a) < db) return {zero(a.field), rem};
  const FieldElem li = lead(b).inverse();
  std::vector<FieldElem> q(static_cast<std::size_t>(deg(a) - db + 1), a.field->zero());
  for (int i = deg(rem); i >= db; --i) {
    FieldElem coeff = rem.c[static_cast<std::size_t>(i)] * li;
    if (coeff.is_zero()) {
      if (static_cast<int>(rem.c.size()) - 1 == i) rem.c.pop_back();
      continue;
    }
    q[static_cast<std::size_t>(i - db)] = coeff;
    for (int k = 0; k <= db; ++k)
      rem.c[static_cast<std::size_t>(i - db + k)] -= coeff * b.c[static_cast<std::size_t>(k)];
    trim(rem);
  }
  Poly quot{a.field, std::move(q)};
  trim(quot);
  trim(rem);
  return {std::move(quot), std::move(rem)};
}

Poly mod(const Poly& a, const Poly& b) { return divrem(a, b).second; }

Poly divexact(const Poly& a, const Poly& b) {
  auto [q, r] = divrem(a, b);
  if (!is_zero(r))
    throw math_error(errc::wrong_shape, "inexact polynomial division");
  return q;
}

Poly monic(const Poly& a) {
  if (is_zero(a)) return a;
  return scale(a, lead(a).inverse());
}

Poly gcd(const Poly& a, const Poly& b) {
  check_field(a, b);
  Poly x0 = a, x1 = b;
  while (!is_zero(x1)) {
    Poly r = mod(x0, x1);
    x0 = std::move(x1);
    x1 = std::move(r);
  }
  return monic(x0);
}

Poly derivative(const Poly& a) {
  Poly r{a.field, {}};
  for (std::size_t i = 1; i < a.c.size(); ++i)
    r.c.push_back(a.c[i] * a.field->from_int(static_cast<int64_t>(i)));
  trim(r);
  return r;
}

FieldElem eval(const Poly& a, const FieldElem& v) {
  FieldElem acc = a.field->zero();
  for (std::size_t i = a.c.size(); i-- > 0;) acc = acc * v + a.c[i];
  return acc;
}

Poly powmod(const Poly& base, unsigned __int128 e, const Poly& m) {
  Poly acc = constant(base.field->one());
  Poly b = mod(base, m);
  while (e) {
    if (e & 1) acc = mod(mul(acc, b), m);
    b = mod(mul(b, b), m);
    e >>= 1;
  }
  return acc;
}

Poly embed_poly(const Poly& a, FieldRef target) {
  Poly r{target, {}};
  r.c.reserve(a.c.size());
  for (const auto& c : a.c) r.c.push_back(embed(c, target));
  trim(r);
  return r;
}

std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f) {
  if (is_zero(f)) throw math_error(errc::zero_input, "squarefree decomposition of zero");
  Poly g = monic(f);
  std::vector<std::pair<Poly, int>> out;
  if (deg(g) == 0) return out;

  Poly d = derivative(g);
  if (is_zero(d)) {
    // g is a p-th power
    for (auto& [part, m] : squarefree_decomposition(pth_root(g)))
      out.emplace_back(std::move(part), m * static_cast<int>(f.field->characteristic()));
    return out;
  }

  Poly c = gcd(g, d);
  Poly w = divexact(g, c);
  int i = 1;
  while (deg(w) > 0) {
    Poly y = gcd(w, c);
    Poly part = divexact(w, y);
    if (deg(part) > 0) out.emplace_back(std::move(part), i);
    c = divexact(c, y);
    w = std::move(y);
    ++i;
  }
  if (deg(c) > 0) {
    // leftover primes whose multiplicity is divisible by p
    for (auto& [part, m] : squarefree_decomposition(pth_root(c)))
      out.emplace_back(std::move(part), m * static_cast<int>(f.field->characteristic()));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

std::vector<std::pair<Poly, int>> factor(const Poly& f, uint64_t seed) {
  if (is_zero(f)) throw math_error(errc::zero_input, "factorization of zero");
  SplitMix rng(seed);
  std::vector<std::pair<Poly, int>> out;
  for (const auto& [part, mult] : squarefree_decomposition(f)) {
    // distinct-degree split of the squarefree part
    Poly v = part;
    Poly h = mod(x(f.field), v);
    int d = 0;
    std::vector<std::pair<Poly, int>> buckets;  // (product of degree-d factors, d)
    while (deg(v) >= 2 * (d + 1)) {
      ++d;
      h = powmod(h, pow128_checked(f.field->order(), 1), v);
      Poly g = gcd(sub(h, x(f.field)), v);
      if (deg(g) > 0) {
        buckets.emplace_back(g, d);
        v = divexact(v, g);
        h = mod(h, v);
      }
    }
    if (deg(v) > 0) buckets.emplace_back(v, deg(v));
    for (const auto& [prod, degree] : buckets) {
      std::vector<Poly> irr;
      edf(prod, degree, rng, irr);
      for (auto& q : irr) out.emplace_back(std::move(q), mult);
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return poly_canon_less(a.first, b.first);
  });
  return out;
}

std::vector<std::pair<FieldElem, int>> roots_in_field(const Poly& f, uint64_t seed) {
  std::vector<std::pair<FieldElem, int>> out;
  for (const auto& [q, mult] : factor(f, seed)) {
    if (deg(q) != 1) continue;
    out.emplace_back(-q.c[0], mult);  // q = x + c0 monic
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first.lex_less(b.first); });
  return out;
}

}  // namespace fdp::upoly
