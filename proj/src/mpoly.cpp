#include "fdp/mpoly.hpp"

#include <algorithm>
#include <sstream>

namespace fdp {

namespace {

// canonical term order: weighted degree, then the exponent tuple with earlier
// variables more significant.  Returns true when a > b ("a prints first").
bool term_greater(const Alphabet& alpha, const Monomial& a, const Monomial& b) {
  const int da = a.weighted_degree(alpha);
  const int db = b.weighted_degree(alpha);
  if (da != db) return da > db;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
  }
  return false;
}

Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < Alphabet::kMaxVars; ++i) {
    const uint32_t s = static_cast<uint32_t>(a.e[i]) + b.e[i];
    if (s > 0xFFFF)
      throw math_error(errc::degree_out_of_range, "monomial exponent overflow");
    r.e[i] = static_cast<uint16_t>(s);
  }
  return r;
}

void check_compatible(const MultiPoly& a, const MultiPoly& b) {
  if (a.field() != b.field())
    throw math_error(errc::field_mismatch, "polynomials over different fields");
  if (!(*a.alphabet() == *b.alphabet()))
    throw math_error(errc::field_mismatch, "polynomials over different alphabets");
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {}

std::shared_ptr<const Alphabet> Alphabet::dp1() {
  static const std::shared_ptr<const Alphabet> a(
      new Alphabet({"s", "t", "x", "y"}, {1, 1, 2, 3}));
  return a;
}

std::shared_ptr<const Alphabet> Alphabet::make(std::vector<std::string> names,
                                               std::vector<int> weights) {
  if (names.size() != weights.size() || names.size() > kMaxVars)
    throw math_error(errc::degree_out_of_range, "alphabet must have at most 8 variables");
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty())
      throw math_error(errc::wrong_shape, "empty variable name");
    if (weights[i] < 1)
      throw math_error(errc::wrong_shape, "variable weights must be positive");
    for (std::size_t j = i + 1; j < names.size(); ++j)
      if (names[i] == names[j])
        throw math_error(errc::wrong_shape, "duplicate variable name '" + names[i] + "'");
  }
  return std::shared_ptr<const Alphabet>(new Alphabet(std::move(names), std::move(weights)));
}

std::shared_ptr<const Alphabet> Alphabet::generic(std::vector<std::string> names) {
  std::vector<int> w(names.size(), 1);
  return make(std::move(names), std::move(w));
}

std::shared_ptr<const Alphabet> Alphabet::none() {
  static const std::shared_ptr<const Alphabet> a(new Alphabet({}, {}));
  return a;
}

int Alphabet::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return static_cast<int>(i);
  return -1;
}

MultiPoly MultiPoly::zero(FieldRef f, AlphabetRef a) { return MultiPoly(f, std::move(a)); }

MultiPoly MultiPoly::constant(const FieldElem& c, AlphabetRef a) {
  MultiPoly p(c.field(), std::move(a));
  if (!c.is_zero()) p.terms_.push_back(Term{Monomial{}, c});
  return p;
}

MultiPoly MultiPoly::variable(FieldRef f, AlphabetRef a, int index) {
  if (index < 0 || static_cast<std::size_t>(index) >= a->size())
    throw math_error(errc::degree_out_of_range, "variable index out of range");
  MultiPoly p(f, std::move(a));
  Monomial m;
  m.e[static_cast<std::size_t>(index)] = 1;
  p.terms_.push_back(Term{m, f->one()});
  return p;
}

MultiPoly MultiPoly::from_terms(FieldRef f, AlphabetRef a, std::vector<Term> terms) {
  MultiPoly p(f, std::move(a));
  for (const auto& t : terms)
    if (t.c.field() != f)
      throw math_error(errc::field_mismatch, "term coefficient from a different field");
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void MultiPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(), [&](const Term& a, const Term& b) {
    return term_greater(*alpha_, a.m, b.m);
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().m == t.m) {
      out.back().c += t.c;
      if (out.back().c.is_zero()) out.pop_back();
    } else if (!t.c.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

FieldElem MultiPoly::coeff(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.m == m) return t.c;
  return field_->zero();
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
  check_compatible(*this, o);
  std::vector<Term> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return from_terms(field_, alpha_, std::move(all));
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
  MultiPoly p(field_, alpha_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{t.m, -t.c});
  return p;
}

MultiPoly MultiPoly::scaled(const FieldElem& c) const {
  if (c.field() != field_)
    throw math_error(errc::field_mismatch, "scalar from a different field");
  if (c.is_zero()) return zero(field_, alpha_);
  MultiPoly p(field_, alpha_);
  p.terms_.reserve(terms_.size());
  for (const auto& t : terms_) p.terms_.push_back(Term{t.m, t.c * c});
  return p;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
  check_compatible(*this, o);
  std::vector<Term> prod;
  prod.reserve(terms_.size() * o.terms_.size());
  for (const auto& a : terms_)
    for (const auto& b : o.terms_)
      prod.push_back(Term{mono_mul(a.m, b.m), a.c * b.c});
  return from_terms(field_, alpha_, std::move(prod));
}

bool MultiPoly::operator==(const MultiPoly& o) const {
  check_compatible(*this, o);
  if (terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i)
    if (!(terms_[i].m == o.terms_[i].m) || terms_[i].c != o.terms_[i].c) return false;
  return true;
}

MultiPoly MultiPoly::pow(uint32_t e) const {
  MultiPoly acc = constant(field_->one(), alpha_);
  MultiPoly base = *this;
  while (e) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

MultiPoly MultiPoly::substitute(const std::vector<std::optional<MultiPoly>>& images,
                                bool waive_grading) const {
  if (images.size() != alpha_->size())
    throw math_error(errc::degree_out_of_range, "one image slot per variable required");
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (!images[i]) continue;
    check_compatible(*this, *images[i]);
    if (!waive_grading && !images[i]->is_homogeneous(alpha_->weight(static_cast<int>(i))))
      throw math_error(errc::wrong_shape,
                       "substitution image for '" + alpha_->name(static_cast<int>(i)) +
                           "' is not homogeneous of its weight");
  }
  MultiPoly acc = zero(field_, alpha_);
  // cache image powers across terms; exponents in this library stay small
  std::map<std::pair<int, int>, MultiPoly> powers;
  auto image_pow = [&](int var, int e) -> const MultiPoly& {
    auto key = std::make_pair(var, e);
    auto it = powers.find(key);
    if (it == powers.end())
      it = powers.emplace(key, images[static_cast<std::size_t>(var)]->pow(static_cast<uint32_t>(e))).first;
    return it->second;
  };
  for (const auto& t : terms_) {
    MultiPoly term = constant(t.c, alpha_);
    Monomial kept;  // exponents of variables mapped to themselves
    for (std::size_t i = 0; i < alpha_->size(); ++i) {
      if (!t.m.e[i]) continue;
      if (images[i]) {
        term = term * image_pow(static_cast<int>(i), t.m.e[i]);
      } else {
        kept.e[i] = t.m.e[i];
      }
    }
    if (!(kept == Monomial{})) {
      MultiPoly k(field_, alpha_);
      k.terms_.push_back(Term{kept, field_->one()});
      term = term * k;
    }
    acc = acc + term;
  }
  return acc;
}

std::map<int, MultiPoly> MultiPoly::weighted_components() const {
  std::map<int, MultiPoly> out;
  for (const auto& t : terms_) {
    const int d = t.m.weighted_degree(*alpha_);
    auto it = out.find(d);
    if (it == out.end()) it = out.emplace(d, zero(field_, alpha_)).first;
    it->second.terms_.push_back(t);
  }
  // terms arrive in canonical order, so each component is already normalized
  return out;
}

MultiPoly MultiPoly::partial(int var) const {
  if (var < 0 || static_cast<std::size_t>(var) >= alpha_->size())
    throw math_error(errc::degree_out_of_range, "variable index out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    const uint16_t e = t.m.e[static_cast<std::size_t>(var)];
    if (!e) continue;
    Term d = t;
    d.m.e[static_cast<std::size_t>(var)] = static_cast<uint16_t>(e - 1);
    d.c = t.c * field_->from_int(e);
    out.push_back(d);
  }
  return from_terms(field_, alpha_, std::move(out));
}

int MultiPoly::weighted_degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.m.weighted_degree(*alpha_));
  return d;
}

bool MultiPoly::is_homogeneous(int d) const {
  for (const auto& t : terms_)
    if (t.m.weighted_degree(*alpha_) != d) return false;
  return true;
}

std::string MultiPoly::to_string() const { return format_poly(*this); }

std::string format_poly(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  const Alphabet& alpha = *p.alphabet();
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    if (!first) out << " + ";
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < alpha.size(); ++i) {
      const uint16_t e = t.m.e[i];
      if (!e) continue;
      if (!mono.empty()) mono += "*";
      mono += alpha.name(static_cast<int>(i));
      if (e > 1) mono += "^" + std::to_string(e);
    }
    const std::string cs = t.c.to_string();
    if (mono.empty()) {
      out << cs;
    } else if (cs == "1") {
      out << mono;
    } else if (cs.find(' ') != std::string::npos) {
      out << "(" << cs << ")*" << mono;
    } else {
      out << cs << "*" << mono;
    }
  }
  return out.str();
}

BinaryForm::BinaryForm(FieldRef f, int degree) : field_(f), degree_(degree) {
  if (degree < 0) throw math_error(errc::degree_out_of_range, "negative form degree");
  c_.assign(static_cast<std::size_t>(degree + 1), f->zero());
}

BinaryForm BinaryForm::from_coeffs(FieldRef f, std::vector<FieldElem> coeffs) {
  if (coeffs.empty()) throw math_error(errc::degree_out_of_range, "empty coefficient list");
  BinaryForm g(f, static_cast<int>(coeffs.size()) - 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].field() != f)
      throw math_error(errc::field_mismatch, "coefficient from a different field");
    g.c_[i] = coeffs[i];
  }
  return g;
}

void BinaryForm::set_coeff(int k, const FieldElem& v) {
  if (k < 0 || k > degree_) throw math_error(errc::degree_out_of_range, "coefficient index out of range");
  if (v.field() != field_) throw math_error(errc::field_mismatch, "coefficient from a different field");
  c_[static_cast<std::size_t>(k)] = v;
}

bool BinaryForm::is_zero() const {
  for (const auto& v : c_)
    if (!v.is_zero()) return false;
  return true;
}

BinaryForm BinaryForm::operator+(const BinaryForm& o) const {
  if (field_ != o.field_) throw math_error(errc::field_mismatch, "forms over different fields");
  if (degree_ != o.degree_)
    throw math_error(errc::degree_mismatch, "cannot add forms of different degrees");
  BinaryForm r(field_, degree_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

BinaryForm BinaryForm::operator-(const BinaryForm& o) const { return *this + (-o); }

BinaryForm BinaryForm::operator-() const {
  BinaryForm r(field_, degree_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
  return r;
}

BinaryForm BinaryForm::operator*(const BinaryForm& o) const {
  if (field_ != o.field_) throw math_error(errc::field_mismatch, "forms over different fields");
  BinaryForm r(field_, degree_ + o.degree_);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] += c_[i] * o.c_[j];
  }
  return r;
}

BinaryForm BinaryForm::scaled(const FieldElem& v) const {
  if (v.field() != field_) throw math_error(errc::field_mismatch, "scalar from a different field");
  BinaryForm r(field_, degree_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * v;
  return r;
}

bool BinaryForm::operator==(const BinaryForm& o) const {
  if (field_ != o.field_) throw math_error(errc::field_mismatch, "forms over different fields");
  if (degree_ != o.degree_) return false;
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != o.c_[i]) return false;
  return true;
}

BinaryForm BinaryForm::pow(int e) const {
  if (e < 0) throw math_error(errc::degree_out_of_range, "negative power");
  BinaryForm acc(field_, 0);
  acc.set_coeff(0, field_->one());
  for (int i = 0; i < e; ++i) acc = acc * *this;
  return acc;
}

FieldElem BinaryForm::eval(const FieldElem& s, const FieldElem& t) const {
  FieldElem acc = field_->zero();
  // sum c_k s^(d-k) t^k, Horner in t with a running power of s
  for (std::size_t k = 0; k < c_.size(); ++k) {
    FieldElem term = c_[k];
    for (int i = 0; i < degree_ - static_cast<int>(k); ++i) term *= s;
    for (std::size_t i = 0; i < k; ++i) term *= t;
    acc += term;
  }
  return acc;
}

BinaryForm BinaryForm::derivative_s() const {
  const int d = degree_ > 0 ? degree_ - 1 : 0;
  BinaryForm r(field_, d);
  for (int k = 0; k <= d; ++k)
    r.set_coeff(k, c_[static_cast<std::size_t>(k)] * field_->from_int(degree_ - k));
  return r;
}

BinaryForm BinaryForm::derivative_t() const {
  const int d = degree_ > 0 ? degree_ - 1 : 0;
  BinaryForm r(field_, d);
  if (degree_ == 0) return r;
  for (int k = 0; k <= d; ++k)
    r.set_coeff(k, c_[static_cast<std::size_t>(k + 1)] * field_->from_int(k + 1));
  return r;
}

BinaryForm BinaryForm::embed_into(FieldRef target) const {
  BinaryForm r(target, degree_);
  for (int k = 0; k <= degree_; ++k) r.set_coeff(k, embed(c_[static_cast<std::size_t>(k)], target));
  return r;
}

MultiPoly BinaryForm::to_poly(AlphabetRef a, int svar, int tvar) const {
  std::vector<Term> terms;
  for (int k = 0; k <= degree_; ++k) {
    if (c_[static_cast<std::size_t>(k)].is_zero()) continue;
    Monomial m;
    m.e[static_cast<std::size_t>(svar)] = static_cast<uint16_t>(degree_ - k);
    m.e[static_cast<std::size_t>(tvar)] = static_cast<uint16_t>(k);
    terms.push_back(Term{m, c_[static_cast<std::size_t>(k)]});
  }
  return MultiPoly::from_terms(field_, std::move(a), std::move(terms));
}

BinaryForm BinaryForm::from_poly(const MultiPoly& p, int degree, int svar, int tvar) {
  BinaryForm g(p.field(), degree);
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < Alphabet::kMaxVars; ++i) {
      if (t.m.e[i] && static_cast<int>(i) != svar && static_cast<int>(i) != tvar)
        throw math_error(errc::wrong_shape, "polynomial involves variables beyond the form's pair");
    }
    const int es = t.m.e[static_cast<std::size_t>(svar)];
    const int et = t.m.e[static_cast<std::size_t>(tvar)];
    if (es + et != degree)
      throw math_error(errc::wrong_shape, "polynomial is not homogeneous of the stated degree");
    g.set_coeff(et, t.c);
  }
  return g;
}

std::string BinaryForm::to_string() const { return format_poly(to_poly()); }

FieldElem parse_elem(std::string_view text, FieldRef f) {
  MultiPoly p = parse_poly(text, f, Alphabet::none());
  if (p.is_zero()) return f->zero();
  return p.terms()[0].c;
}

}  // namespace fdp
