#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "fdp/errors.hpp"

namespace fdp {

class Field;
// Fields are interned: one immutable descriptor per (p, n), owned by a global
// registry for the lifetime of the process.  Plain pointers are therefore safe
// to copy around and compare for identity.
using FieldRef = const Field*;

class FieldElem;

// F_{p^n} = F_p[u] / (modulus).  The modulus is pinned: the lexicographically
// smallest monic irreducible of degree n, comparing coefficient tuples
// (c_{n-1}, ..., c_0) with representatives 0..p-1.  This keeps every
// descriptor byte-identical across runs and platforms.
class Field {
 public:
  static constexpr int kMaxDegree = 12;

  static FieldRef get(uint32_t p, int n = 1);

  uint32_t characteristic() const { return p_; }
  int degree() const { return n_; }
  bool is_prime_field() const { return n_ == 1; }
  // p^n; throws errc::unsupported if it does not fit in uint64_t.
  uint64_t order() const;
  // Monic, length degree()+1; for prime fields the vector is {0, 1} (= u,
  // unused) purely so modulus()[n] == 1 always holds.
  const std::vector<uint16_t>& modulus() const { return modulus_; }
  std::string name() const;  // e.g. "F_25"

  FieldElem zero() const;
  FieldElem one() const;
  // Reduction of an arbitrary integer into the prime subfield.
  FieldElem from_int(int64_t v) const;
  // The class of u; errors for prime fields.
  FieldElem generator() const;
  // Bijection with 0..order()-1: index = sum c_i p^i over the coefficients.
  FieldElem from_index(uint64_t idx) const;
  uint64_t index(const FieldElem& a) const;

  Field(const Field&) = delete;
  Field& operator=(const Field&) = delete;

 private:
  Field(uint32_t p, int n, std::vector<uint16_t> modulus);

  uint32_t p_;
  int n_;
  std::vector<uint16_t> modulus_;

  friend class FieldElem;
};

inline FieldRef make_field(uint32_t p, int n = 1) { return Field::get(p, n); }

// Value type, 32 bytes, no heap: coefficients of 1, u, ..., u^{n-1}.
// Arithmetic between elements of distinct fields throws field_mismatch;
// embeddings are always explicit (see embed below).
class FieldElem {
 public:
  FieldElem(FieldRef field, const std::array<uint16_t, Field::kMaxDegree>& c)
      : field_(field), c_(c) {}

  FieldRef field() const { return field_; }
  uint16_t coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;

  FieldElem operator+(const FieldElem& o) const;
  FieldElem operator-(const FieldElem& o) const;
  FieldElem operator*(const FieldElem& o) const;
  FieldElem operator/(const FieldElem& o) const;
  FieldElem operator-() const;
  FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
  FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
  FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
  bool operator==(const FieldElem& o) const;
  bool operator!=(const FieldElem& o) const { return !(*this == o); }

  FieldElem inverse() const;
  FieldElem pow(uint64_t e) const;
  FieldElem pow128(unsigned __int128 e) const;

  // Total order used whenever a canonical representative must be picked
  // (deterministic root listings, minimal embeddings): lexicographic on
  // (c_{n-1}, ..., c_0).
  bool lex_less(const FieldElem& o) const;

  // "2*u + 1" style; round-trips through parse_elem (mpoly.hpp).
  std::string to_string() const;

 private:
  FieldRef field_;
  std::array<uint16_t, Field::kMaxDegree> c_;

  friend class Field;
  friend FieldElem frobenius(const FieldElem& a);
};

// a |-> a^p, the absolute Frobenius.
FieldElem frobenius(const FieldElem& a);

// Canonical embedding F_{p^m} -> F_{p^n} for m | n: the generator of the
// source is sent to the lexicographically smallest root of the source modulus
// in the target.  Embeddings are cached; composites of canonical embeddings
// along a divisor chain agree with the direct one only by accident, so all
// code embeds directly from the source into the final target.
FieldElem embed(const FieldElem& a, FieldRef target);

}  // namespace fdp
