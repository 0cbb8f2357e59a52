#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "fdp/fields.hpp"
#include "fdp/upoly.hpp"

namespace fdp {
namespace {

struct EmbedCache {
  std::mutex mu;
  // (source, target) -> powers of the chosen root of the source modulus
  std::map<std::pair<FieldRef, FieldRef>, std::vector<FieldElem>> powers;
};

EmbedCache& cache() {
  static EmbedCache* c = new EmbedCache;
  return *c;
}

std::vector<FieldElem> build_embedding(FieldRef src, FieldRef target) {
  // The source modulus has coefficients in F_p; read it over the target and
  // take its lexicographically smallest root there.  Any root induces a field
  // homomorphism; picking the lex-min one pins the embedding canonically.
  std::vector<FieldElem> coeffs;
  coeffs.reserve(src->modulus().size());
  for (uint16_t c : src->modulus()) coeffs.push_back(target->from_int(c));
  upoly::Poly m = upoly::from_coeffs(target, std::move(coeffs));
  auto roots = upoly::roots_in_field(m, /*seed=*/0);
  if (roots.empty())
    throw math_error(errc::unsupported, "source modulus has no root in target field");
  const FieldElem r0 = roots.front().first;
  std::vector<FieldElem> powers;
  powers.reserve(static_cast<std::size_t>(src->degree()));
  FieldElem p = target->one();
  for (int i = 0; i < src->degree(); ++i) {
    powers.push_back(p);
    p = p * r0;
  }
  return powers;
}

}  // namespace

FieldElem embed(const FieldElem& a, FieldRef target) {
  FieldRef src = a.field();
  if (src == target) return a;
  if (src->characteristic() != target->characteristic())
    throw math_error(errc::field_mismatch,
                     "cannot embed across characteristics (" + src->name() + " into " +
                         target->name() + ")");
  if (target->degree() % src->degree() != 0)
    throw math_error(errc::non_divisible_degrees,
                     "no embedding of " + src->name() + " into " + target->name());
  if (src->is_prime_field()) return target->from_int(a.coeff(0));

  std::vector<FieldElem>* powers = nullptr;
  {
    auto& c = cache();
    std::lock_guard<std::mutex> lock(c.mu);
    auto key = std::make_pair(src, target);
    auto it = c.powers.find(key);
    if (it == c.powers.end())
      it = c.powers.emplace(key, build_embedding(src, target)).first;
    powers = &it->second;
  }
  FieldElem out = target->zero();
  for (int i = 0; i < src->degree(); ++i)
    out += target->from_int(a.coeff(i)) * (*powers)[static_cast<std::size_t>(i)];
  return out;
}

}  // namespace fdp
