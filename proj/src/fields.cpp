#include "fdp/fields.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace fdp {
namespace {

bool is_prime_u32(uint32_t p) {
  if (p < 2) return false;
  for (uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// --- dense univariate arithmetic over F_p, only what the modulus search
// needs.  Coefficients are uint32_t in 0..p-1, index = exponent. ---

using PVec = std::vector<uint32_t>;

int pdeg(const PVec& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[static_cast<std::size_t>(i)]) return i;
  return -1;
}

void ptrim(PVec& a) { a.resize(static_cast<std::size_t>(pdeg(a) + 1)); }

PVec pmul(const PVec& a, const PVec& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  PVec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<uint32_t>(
          (r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
  }
  ptrim(r);
  return r;
}

// a mod f, f monic.
PVec pmod(PVec a, const PVec& f, uint32_t p) {
  const int df = pdeg(f);
  for (int i = pdeg(a); i >= df; --i) {
    const uint32_t v = a[static_cast<std::size_t>(i)];
    if (!v) continue;
    for (int k = 0; k <= df; ++k) {
      auto& slot = a[static_cast<std::size_t>(i - df + k)];
      slot = static_cast<uint32_t>(
          (slot + static_cast<uint64_t>(v) * (p - f[static_cast<std::size_t>(k)] % p)) % p);
    }
  }
  a.resize(static_cast<std::size_t>(df));
  ptrim(a);
  return a;
}

PVec pmulmod(const PVec& a, const PVec& b, const PVec& f, uint32_t p) {
  return pmod(pmul(a, b, p), f, p);
}

// x^(p^k) mod f via k successive p-th powers of the residue.
PVec frob_power(int k, const PVec& f, uint32_t p) {
  PVec h = {0, 1};  // x
  for (int step = 0; step < k; ++step) {
    PVec acc = {1};
    PVec base = h;
    uint32_t e = p;
    while (e) {
      if (e & 1) acc = pmulmod(acc, base, f, p);
      base = pmulmod(base, base, f, p);
      e >>= 1;
    }
    h = std::move(acc);
  }
  return h;
}

PVec pgcd(PVec a, PVec b, uint32_t p) {
  auto inv_mod_p = [p](uint32_t v) {
    // p < 2^16 so pow by p-2 is plenty fast.
    uint64_t r = 1, base = v, e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<uint32_t>(r);
  };
  while (pdeg(b) >= 0) {
    // normalise b monic, then a = a mod b
    PVec bm = b;
    const uint32_t lead = bm[static_cast<std::size_t>(pdeg(bm))];
    if (lead != 1) {
      const uint32_t li = inv_mod_p(lead);
      for (auto& c : bm) c = static_cast<uint32_t>(static_cast<uint64_t>(c) * li % p);
    }
    PVec r = pmod(std::move(a), bm, p);
    a = std::move(bm);
    b = std::move(r);
  }
  ptrim(a);
  return a;
}

// Rabin's test; f monic of degree n >= 1.
bool is_irreducible(const PVec& f, uint32_t p) {
  const int n = pdeg(f);
  if (n == 1) return true;
  // x^(p^n) == x mod f
  PVec h = frob_power(n, f, p);
  if (!(h.size() == 2 && h[0] == 0 && h[1] == 1)) return false;
  for (int ell = 2; ell <= n; ++ell) {
    if (n % ell || !is_prime_u32(static_cast<uint32_t>(ell))) continue;
    PVec g = frob_power(n / ell, f, p);
    // gcd(g - x, f) must be 1
    if (g.size() < 2) g.resize(2, 0);
    g[1] = (g[1] + p - 1) % p;
    PVec d = pgcd(f, g, p);
    if (pdeg(d) != 0) return false;
  }
  return true;
}

std::vector<uint16_t> smallest_irreducible(uint32_t p, int n) {
  // Enumerate monic degree-n candidates by the coefficient tuple
  // (c_{n-1}, ..., c_0) in lexicographic order: c_{n-1} is the most
  // significant digit of the counter.
  uint64_t total = 1;
  for (int i = 0; i < n; ++i) total *= p;
  for (uint64_t k = 0; k < total; ++k) {
    PVec f(static_cast<std::size_t>(n + 1), 0);
    f[static_cast<std::size_t>(n)] = 1;
    uint64_t rem = k;
    for (int j = n - 1; j >= 0; --j) {
      // digit weight p^j: c_j is more significant than c_{j-1}
      uint64_t w = 1;
      for (int t = 0; t < j; ++t) w *= p;
      f[static_cast<std::size_t>(j)] = static_cast<uint32_t>(rem / w);
      rem %= w;
    }
    if (f[0] == 0) continue;  // divisible by x
    if (is_irreducible(f, p)) {
      std::vector<uint16_t> out(f.size());
      for (std::size_t i = 0; i < f.size(); ++i) out[i] = static_cast<uint16_t>(f[i]);
      return out;
    }
  }
  throw math_error(errc::unsupported, "no irreducible polynomial found");  // unreachable
}

struct Registry {
  std::mutex mu;
  std::map<std::pair<uint32_t, int>, std::unique_ptr<Field>> fields;
};

Registry& registry() {
  static Registry* r = new Registry;
  return *r;
}

}  // namespace

Field::Field(uint32_t p, int n, std::vector<uint16_t> modulus)
    : p_(p), n_(n), modulus_(std::move(modulus)) {}

FieldRef Field::get(uint32_t p, int n) {
  if (p >= (1u << 16) || !is_prime_u32(p))
    throw math_error(errc::not_prime, "characteristic must be a prime < 2^16, got " + std::to_string(p));
  if (n < 1 || n > kMaxDegree)
    throw math_error(errc::degree_out_of_range,
                     "extension degree must be in 1.." + std::to_string(kMaxDegree) +
                         ", got " + std::to_string(n));
  auto& reg = registry();
  std::lock_guard<std::mutex> lock(reg.mu);
  auto key = std::make_pair(p, n);
  auto it = reg.fields.find(key);
  if (it != reg.fields.end()) return it->second.get();
  std::vector<uint16_t> mod;
  if (n == 1) {
    mod = {0, 1};
  } else {
    mod = smallest_irreducible(p, n);
  }
  auto field = std::unique_ptr<Field>(new Field(p, n, std::move(mod)));
  FieldRef ref = field.get();
  reg.fields.emplace(key, std::move(field));
  return ref;
}

uint64_t Field::order() const {
  unsigned __int128 o = 1;
  for (int i = 0; i < n_; ++i) o *= p_;
  if (o > static_cast<unsigned __int128>(UINT64_MAX))
    throw math_error(errc::unsupported, "field order exceeds 64 bits");
  return static_cast<uint64_t>(o);
}

std::string Field::name() const {
  unsigned __int128 o = 1;
  bool overflow = false;
  for (int i = 0; i < n_; ++i) {
    o *= p_;
    if (o > static_cast<unsigned __int128>(UINT64_MAX)) { overflow = true; break; }
  }
  if (overflow)
    return "F_" + std::to_string(p_) + "^" + std::to_string(n_);
  return "F_" + std::to_string(static_cast<uint64_t>(o));
}

FieldElem Field::zero() const {
  std::array<uint16_t, kMaxDegree> c{};
  return FieldElem(this, c);
}

FieldElem Field::one() const { return from_int(1); }

FieldElem Field::from_int(int64_t v) const {
  std::array<uint16_t, kMaxDegree> c{};
  int64_t r = v % static_cast<int64_t>(p_);
  if (r < 0) r += p_;
  c[0] = static_cast<uint16_t>(r);
  return FieldElem(this, c);
}

FieldElem Field::generator() const {
  if (n_ == 1)
    throw math_error(errc::unsupported, "prime field has no extension generator");
  std::array<uint16_t, kMaxDegree> c{};
  c[1] = 1;
  return FieldElem(this, c);
}

FieldElem Field::from_index(uint64_t idx) const {
  if (idx >= order())
    throw math_error(errc::degree_out_of_range, "element index out of range");
  std::array<uint16_t, kMaxDegree> c{};
  for (int i = 0; i < n_; ++i) {
    c[static_cast<std::size_t>(i)] = static_cast<uint16_t>(idx % p_);
    idx /= p_;
  }
  return FieldElem(this, c);
}

uint64_t Field::index(const FieldElem& a) const {
  if (a.field() != this)
    throw math_error(errc::field_mismatch, "element belongs to a different field");
  uint64_t idx = 0;
  for (int i = n_ - 1; i >= 0; --i) idx = idx * p_ + a.coeff(i);
  return idx;
}

bool FieldElem::is_zero() const {
  for (int i = 0; i < field_->degree(); ++i)
    if (c_[static_cast<std::size_t>(i)]) return false;
  return true;
}

namespace {
void check_same(const FieldElem& a, const FieldElem& b) {
  if (a.field() != b.field())
    throw math_error(errc::field_mismatch,
                     "operands belong to different fields (" + a.field()->name() +
                         " vs " + b.field()->name() + ")");
}
}  // namespace

FieldElem FieldElem::operator+(const FieldElem& o) const {
  check_same(*this, o);
  const uint32_t p = field_->characteristic();
  std::array<uint16_t, Field::kMaxDegree> r{};
  for (int i = 0; i < field_->degree(); ++i) {
    const auto s = static_cast<std::size_t>(i);
    r[s] = static_cast<uint16_t>((static_cast<uint32_t>(c_[s]) + o.c_[s]) % p);
  }
  return FieldElem(field_, r);
}

FieldElem FieldElem::operator-(const FieldElem& o) const {
  check_same(*this, o);
  const uint32_t p = field_->characteristic();
  std::array<uint16_t, Field::kMaxDegree> r{};
  for (int i = 0; i < field_->degree(); ++i) {
    const auto s = static_cast<std::size_t>(i);
    r[s] = static_cast<uint16_t>((static_cast<uint32_t>(c_[s]) + p - o.c_[s]) % p);
  }
  return FieldElem(field_, r);
}

FieldElem FieldElem::operator-() const {
  const uint32_t p = field_->characteristic();
  std::array<uint16_t, Field::kMaxDegree> r{};
  for (int i = 0; i < field_->degree(); ++i) {
    const auto s = static_cast<std::size_t>(i);
    r[s] = static_cast<uint16_t>((p - c_[s]) % p);
  }
  return FieldElem(field_, r);
}

FieldElem FieldElem::operator*(const FieldElem& o) const {
  check_same(*this, o);
  const uint32_t p = field_->characteristic();
  const int n = field_->degree();
  if (n == 1) {
    std::array<uint16_t, Field::kMaxDegree> r{};
    r[0] = static_cast<uint16_t>(static_cast<uint64_t>(c_[0]) * o.c_[0] % p);
    return FieldElem(field_, r);
  }
  // schoolbook product then reduction by the monic modulus
  std::array<uint64_t, 2 * Field::kMaxDegree> prod{};
  for (int i = 0; i < n; ++i) {
    if (!c_[static_cast<std::size_t>(i)]) continue;
    for (int j = 0; j < n; ++j)
      prod[static_cast<std::size_t>(i + j)] +=
          static_cast<uint64_t>(c_[static_cast<std::size_t>(i)]) * o.c_[static_cast<std::size_t>(j)];
  }
  const auto& mod = field_->modulus();
  for (int i = 2 * n - 2; i >= n; --i) {
    const uint64_t v = prod[static_cast<std::size_t>(i)] % p;
    prod[static_cast<std::size_t>(i)] = 0;
    if (!v) continue;
    for (int k = 0; k < n; ++k)
      prod[static_cast<std::size_t>(i - n + k)] += v * ((p - mod[static_cast<std::size_t>(k)] % p) % p);
  }
  std::array<uint16_t, Field::kMaxDegree> r{};
  for (int i = 0; i < n; ++i)
    r[static_cast<std::size_t>(i)] = static_cast<uint16_t>(prod[static_cast<std::size_t>(i)] % p);
  return FieldElem(field_, r);
}

FieldElem FieldElem::inverse() const {
  if (is_zero())
    throw math_error(errc::division_by_zero, "zero has no inverse in " + field_->name());
  const uint32_t p = field_->characteristic();
  const int n = field_->degree();
  if (n == 1) {
    uint64_t r = 1, base = c_[0], e = p - 2;
    while (e) {
      if (e & 1) r = r * base % p;
      base = base * base % p;
      e >>= 1;
    }
    std::array<uint16_t, Field::kMaxDegree> out{};
    out[0] = static_cast<uint16_t>(r);
    return FieldElem(field_, out);
  }
  // a^(p^n - 2) would work but extended Euclid over F_p[u] is exact and fast.
  using V = std::vector<int64_t>;
  const int64_t P = p;
  auto deg = [](const V& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
      if (a[static_cast<std::size_t>(i)]) return i;
    return -1;
  };
  auto inv_p = [&](int64_t v) {
    int64_t r = 1, base = ((v % P) + P) % P, e = P - 2;
    while (e) {
      if (e & 1) r = r * base % P;
      base = base * base % P;
      e >>= 1;
    }
    return r;
  };
  V r0(field_->modulus().begin(), field_->modulus().end());
  V r1(static_cast<std::size_t>(n), 0);
  for (int i = 0; i < n; ++i) r1[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)];
  V s0 = {0}, s1 = {1};  // coefficients of *this in the Bezout identity
  while (deg(r1) > 0) {
    // divide r0 by r1
    V q(static_cast<std::size_t>(std::max(0, deg(r0) - deg(r1) + 1)), 0);
    V rem = r0;
    const int d1 = deg(r1);
    const int64_t li = inv_p(r1[static_cast<std::size_t>(d1)]);
    for (int i = deg(rem); i >= d1; --i) {
      const int64_t coeff = rem[static_cast<std::size_t>(i)] % P * li % P;
      if (!coeff) continue;
      q[static_cast<std::size_t>(i - d1)] = coeff;
      for (int k = 0; k <= d1; ++k)
        rem[static_cast<std::size_t>(i - d1 + k)] =
            ((rem[static_cast<std::size_t>(i - d1 + k)] - coeff * r1[static_cast<std::size_t>(k)]) % P + P) % P;
    }
    // (r0, r1) = (r1, rem); (s0, s1) = (s1, s0 - q s1)
    V qs(q.size() + s1.size(), 0);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < s1.size(); ++j)
        qs[i + j] = (qs[i + j] + q[i] * s1[j]) % P;
    V s2(std::max(s0.size(), qs.size()), 0);
    for (std::size_t i = 0; i < s2.size(); ++i) {
      int64_t v = (i < s0.size() ? s0[i] : 0) - (i < qs.size() ? qs[i] : 0);
      s2[i] = ((v % P) + P) % P;
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (deg(r1) != 0)
    throw math_error(errc::division_by_zero, "element not invertible");  // cannot happen: modulus irreducible
  const int64_t scale = inv_p(r1[0]);
  std::array<uint16_t, Field::kMaxDegree> out{};
  for (int i = 0; i < n && i < static_cast<int>(s1.size()); ++i)
    out[static_cast<std::size_t>(i)] = static_cast<uint16_t>(s1[static_cast<std::size_t>(i)] * scale % P);
  return FieldElem(field_, out);
}

FieldElem FieldElem::operator/(const FieldElem& o) const {
  check_same(*this, o);
  return *this * o.inverse();
}

bool FieldElem::operator==(const FieldElem& o) const {
  check_same(*this, o);
  for (int i = 0; i < field_->degree(); ++i)
    if (c_[static_cast<std::size_t>(i)] != o.c_[static_cast<std::size_t>(i)]) return false;
  return true;
}

FieldElem FieldElem::pow(uint64_t e) const {
  FieldElem acc = field_->one();
  FieldElem base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

FieldElem FieldElem::pow128(unsigned __int128 e) const {
  FieldElem acc = field_->one();
  FieldElem base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool FieldElem::lex_less(const FieldElem& o) const {
  check_same(*this, o);
  for (int i = field_->degree() - 1; i >= 0; --i) {
    const auto s = static_cast<std::size_t>(i);
    if (c_[s] != o.c_[s]) return c_[s] < o.c_[s];
  }
  return false;
}

FieldElem frobenius(const FieldElem& a) {
  return a.pow(a.field()->characteristic());
}

std::string FieldElem::to_string() const {
  const int n = field_->degree();
  std::ostringstream out;
  bool first = true;
  for (int i = n - 1; i >= 0; --i) {
    const uint16_t c = c_[static_cast<std::size_t>(i)];
    if (!c) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0) {
      out << c;
    } else {
      if (c != 1) out << c << "*";
      out << "u";
      if (i > 1) out << "^" << i;
    }
  }
  if (first) out << "0";
  return out.str();
}

}  // namespace fdp
