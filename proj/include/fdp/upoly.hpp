#pragma once

// Dense univariate polynomial arithmetic and factorization over a finite
// field.  This is the engine behind canonical embeddings and binary-form root
// extraction; it is an implementation detail of the library rather than part
// of the advertised surface, but it lives in the public include tree so the
// test suite can cross-check it directly.

#include <cstdint>
#include <utility>
#include <vector>

#include "fdp/fields.hpp"

namespace fdp::upoly {

// c[i] = coefficient of x^i.  Invariant: empty (the zero polynomial) or
// c.back() != 0.
struct Poly {
  FieldRef field;
  std::vector<FieldElem> c;
};

Poly zero(FieldRef f);
Poly constant(const FieldElem& a);
Poly x(FieldRef f);
Poly from_coeffs(FieldRef f, std::vector<FieldElem> c);

int deg(const Poly& a);  // -1 for zero
bool is_zero(const Poly& a);
bool equal(const Poly& a, const Poly& b);
FieldElem lead(const Poly& a);

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const FieldElem& s);
// quotient and remainder; b must be nonzero
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b);
Poly mod(const Poly& a, const Poly& b);
// exact division; throws if the remainder is nonzero
Poly divexact(const Poly& a, const Poly& b);
Poly monic(const Poly& a);
Poly gcd(const Poly& a, const Poly& b);  // monic (or zero)
Poly derivative(const Poly& a);
FieldElem eval(const Poly& a, const FieldElem& v);
Poly powmod(const Poly& base, unsigned __int128 e, const Poly& m);
// Embed every coefficient into `target` (same characteristic, divisible
// degrees).
Poly embed_poly(const Poly& a, FieldRef target);

// Deterministic: same seed, same sequence.
struct SplitMix {
  uint64_t s;
  explicit SplitMix(uint64_t seed) : s(seed) {}
  uint64_t next() {
    s += 0x9E3779B97F4A7C15ull;
    uint64_t z = s;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // uniform in 0..n-1 via rejection
  uint64_t bounded(uint64_t n) {
    const uint64_t lim = UINT64_MAX - UINT64_MAX % n;
    uint64_t v;
    do { v = next(); } while (v >= lim);
    return v % n;
  }
};

// Multiplicity-grouped squarefree parts of a monic polynomial:
// f = prod part^mult, parts pairwise coprime and squarefree, multiplicities
// strictly increasing.  Characteristic-p aware (p-th power parts are handled
// by coefficient p-th roots).
std::vector<std::pair<Poly, int>> squarefree_decomposition(const Poly& f);

// Full factorization of a nonzero polynomial into monic irreducibles with
// multiplicities, sorted canonically (degree, then coefficient sequence).
// The unit is f's leading coefficient.  Randomized splitting is driven by a
// SplitMix stream seeded with `seed`, so results are bit-reproducible anyway;
// sorting makes the order independent of the seed as well.
std::vector<std::pair<Poly, int>> factor(const Poly& f, uint64_t seed = 0);

// Distinct roots of f that lie in its own coefficient field, paired with
// multiplicities, sorted by FieldElem::lex_less.
std::vector<std::pair<FieldElem, int>> roots_in_field(const Poly& f, uint64_t seed = 0);

}  // namespace fdp::upoly
