#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdp/fields.hpp"

namespace fdp {

// A fixed, ordered set of at most 8 named variables with positive integer
// weights.  The default alphabet is the weighted coordinate ring of
// P(1,1,2,3): s, t of weight 1, x of weight 2, y of weight 3.
class Alphabet {
 public:
  static constexpr std::size_t kMaxVars = 8;

  static std::shared_ptr<const Alphabet> dp1();
  static std::shared_ptr<const Alphabet> make(std::vector<std::string> names,
                                              std::vector<int> weights);
  // all weights 1
  static std::shared_ptr<const Alphabet> generic(std::vector<std::string> names);
  // no variables at all; used to parse bare field elements
  static std::shared_ptr<const Alphabet> none();

  std::size_t size() const { return names_.size(); }
  const std::string& name(int i) const { return names_[static_cast<std::size_t>(i)]; }
  int weight(int i) const { return weights_[static_cast<std::size_t>(i)]; }
  int index_of(std::string_view name) const;  // -1 when absent
  bool operator==(const Alphabet& o) const {
    return names_ == o.names_ && weights_ == o.weights_;
  }

 private:
  Alphabet(std::vector<std::string> names, std::vector<int> weights);
  std::vector<std::string> names_;
  std::vector<int> weights_;
};

using AlphabetRef = std::shared_ptr<const Alphabet>;

// Variable indices of the default alphabet.
inline constexpr int kVarS = 0;
inline constexpr int kVarT = 1;
inline constexpr int kVarX = 2;
inline constexpr int kVarY = 3;

struct Monomial {
  std::array<uint16_t, Alphabet::kMaxVars> e{};

  bool operator==(const Monomial& o) const { return e == o.e; }
  int weighted_degree(const Alphabet& a) const {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a.weight(static_cast<int>(i)) * e[i];
    return d;
  }
};

struct Term {
  Monomial m;
  FieldElem c;
};

// Sparse multivariate polynomial over a finite field.  Terms are kept in the
// canonical order: weighted degree first, ties by the exponent tuple read
// left to right (earlier variables more significant), largest term first.
// That order is also the printing order, so rendering is deterministic.
class MultiPoly {
 public:
  static MultiPoly zero(FieldRef f, AlphabetRef a);
  static MultiPoly constant(const FieldElem& c, AlphabetRef a);
  static MultiPoly variable(FieldRef f, AlphabetRef a, int index);
  // sorts, combines and drops zero terms
  static MultiPoly from_terms(FieldRef f, AlphabetRef a, std::vector<Term> terms);

  FieldRef field() const { return field_; }
  const AlphabetRef& alphabet() const { return alpha_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t num_terms() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  FieldElem coeff(const Monomial& m) const;  // zero when absent

  MultiPoly operator+(const MultiPoly& o) const;
  MultiPoly operator-(const MultiPoly& o) const;
  MultiPoly operator*(const MultiPoly& o) const;
  MultiPoly operator-() const;
  MultiPoly scaled(const FieldElem& c) const;
  bool operator==(const MultiPoly& o) const;
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  MultiPoly pow(uint32_t e) const;

  // Substitute images[i] for variable i (nullopt keeps the variable).  Images
  // must live over the same field and alphabet.  Unless waive_grading is set,
  // every image must be homogeneous of its variable's weight, so substitution
  // preserves the grading.
  MultiPoly substitute(const std::vector<std::optional<MultiPoly>>& images,
                       bool waive_grading = false) const;

  // split into weighted-homogeneous pieces, keyed by degree
  std::map<int, MultiPoly> weighted_components() const;
  MultiPoly partial(int var) const;

  // max weighted degree of a term; -1 for the zero polynomial
  int weighted_degree() const;
  bool is_homogeneous(int d) const;

  std::string to_string() const;

 private:
  MultiPoly(FieldRef f, AlphabetRef a) : field_(f), alpha_(std::move(a)) {}
  void normalize();

  FieldRef field_;
  AlphabetRef alpha_;
  std::vector<Term> terms_;
};

std::string format_poly(const MultiPoly& p);
// Grammar: + - * ^ and parentheses, integer literals, variable names from the
// alphabet, `u` for the extension generator.  ^ binds tighter than *, which
// binds tighter than + and -; unary minus is allowed; there is no implicit
// multiplication.  Errors carry the byte offset of the offending token.
MultiPoly parse_poly(std::string_view text, FieldRef f, AlphabetRef a = Alphabet::dp1());
// parse a bare field element ("2*u + 1"); round-trips FieldElem::to_string
FieldElem parse_elem(std::string_view text, FieldRef f);

// Homogeneous binary form of a stated degree in (s, t), stored densely:
// coefficient k multiplies s^(degree-k) t^k.  The zero form of any degree is
// allowed, so the a_i of a surface equation can vanish without losing their
// grading.
class BinaryForm {
 public:
  BinaryForm(FieldRef f, int degree);  // zero form
  static BinaryForm from_coeffs(FieldRef f, std::vector<FieldElem> coeffs);

  FieldRef field() const { return field_; }
  int degree() const { return degree_; }
  const FieldElem& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
  void set_coeff(int k, const FieldElem& v);
  bool is_zero() const;

  BinaryForm operator+(const BinaryForm& o) const;  // same degree
  BinaryForm operator-(const BinaryForm& o) const;
  BinaryForm operator*(const BinaryForm& o) const;  // degrees add
  BinaryForm operator-() const;
  BinaryForm scaled(const FieldElem& v) const;
  bool operator==(const BinaryForm& o) const;
  bool operator!=(const BinaryForm& o) const { return !(*this == o); }
  BinaryForm pow(int e) const;

  FieldElem eval(const FieldElem& s, const FieldElem& t) const;
  BinaryForm derivative_s() const;  // stated degree drops by one (floor 0)
  BinaryForm derivative_t() const;
  BinaryForm embed_into(FieldRef target) const;

  MultiPoly to_poly(AlphabetRef a = Alphabet::dp1(), int svar = kVarS, int tvar = kVarT) const;
  // p must be supported on the two chosen variables and homogeneous of the
  // stated degree (or zero)
  static BinaryForm from_poly(const MultiPoly& p, int degree, int svar = kVarS,
                              int tvar = kVarT);
  std::string to_string() const;

 private:
  FieldRef field_;
  int degree_;
  std::vector<FieldElem> c_;
};

}  // namespace fdp
