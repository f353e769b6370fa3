#include "schublas/polynomial.hpp"

#include <algorithm>

#include "json.hpp"
#include "schublas/errors.hpp"
#include "schublas/limits.hpp"

namespace schublas {

namespace {

WeakComposition add_exponents(const WeakComposition& a, const WeakComposition& b) {
  int n = std::max(a.size(), b.size());
  std::vector<int> out(n);
  for (int i = 1; i <= n; ++i) out[i - 1] = a.at(i) + b.at(i);
  return WeakComposition(std::move(out));
}

}  // namespace

Polynomial Polynomial::one() { return monomial(WeakComposition()); }

Polynomial Polynomial::monomial(WeakComposition exponent, Rational coeff) {
  Polynomial p;
  p.add_term(exponent, coeff);
  return p;
}

Polynomial Polynomial::variable(int i) {
  if (i < 1) fail(ErrorKind::OutOfRange, "variable index " + std::to_string(i));
  return monomial(WeakComposition().with(i, 1));
}

Rational Polynomial::coeff(const WeakComposition& exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Polynomial::add_term(const WeakComposition& exponent, const Rational& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
  limits::check_term_count(terms_.size(), "polynomial");
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) out.add_term(add_exponents(ea, eb), ca * cb);
  return out;
}

Polynomial Polynomial::operator-() const {
  Polynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  if (factor == 0) return {};
  Polynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * factor);
  return out;
}

Polynomial Polynomial::times_monomial(const WeakComposition& shift) const {
  Polynomial out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(add_exponents(e, shift), c);
  return out;
}

std::vector<WeakComposition> Polynomial::support() const {
  std::vector<WeakComposition> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

WeakComposition Polynomial::leading_exponent() const {
  if (terms_.empty()) fail(ErrorKind::ZeroPolynomial, "leading exponent");
  return terms_.begin()->first;
}

Rational Polynomial::leading_coeff() const {
  if (terms_.empty()) fail(ErrorKind::ZeroPolynomial, "leading coefficient");
  return terms_.begin()->second;
}

bool Polynomial::is_homogeneous(long long* degree) const {
  long long d = terms_.empty() ? 0 : terms_.begin()->first.total();
  for (const auto& [e, c] : terms_)
    if (e.total() != d) return false;
  if (degree) *degree = d;
  return true;
}

long long Polynomial::max_total_degree() const {
  long long best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e.total());
  return best;
}

int Polynomial::max_variable() const {
  int best = 0;
  for (const auto& [e, c] : terms_) best = std::max(best, e.size());
  return best;
}

std::string Polynomial::to_json() const {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : terms_) {
    nlohmann::json term;
    term["exp"] = e.entries();
    term["coeff"] = rational_str(c);
    terms.push_back(std::move(term));
  }
  nlohmann::json out;
  out["terms"] = std::move(terms);
  return out.dump();
}

Polynomial Polynomial::from_json(std::string_view text) {
  nlohmann::json in = nlohmann::json::parse(text, nullptr, false);
  if (in.is_discarded() || !in.is_object() || !in.contains("terms") || !in["terms"].is_array())
    fail(ErrorKind::InvalidInput, "polynomial JSON must be {\"terms\": [...]}");
  Polynomial out;
  for (const auto& term : in["terms"]) {
    if (!term.is_object() || !term.contains("exp") || !term["exp"].is_array() ||
        !term.contains("coeff"))
      fail(ErrorKind::InvalidInput, "polynomial term must have \"exp\" and \"coeff\"");
    std::vector<int> exp;
    for (const auto& e : term["exp"]) {
      if (!e.is_number_integer()) fail(ErrorKind::InvalidInput, "exponent must be an integer");
      exp.push_back(e.get<int>());
    }
    if (!term["coeff"].is_string() && !term["coeff"].is_number_integer())
      fail(ErrorKind::InvalidInput, "coefficient must be a string or an integer");
    Rational coeff = term["coeff"].is_string()
                         ? parse_rational(term["coeff"].get<std::string>())
                         : Rational(term["coeff"].get<long long>());
    out.add_term(WeakComposition(std::move(exp)), coeff);
  }
  return out;
}

std::string Polynomial::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out += "-";
        a = -a;
      }
    } else {
      out += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    std::string mono;
    for (int i = 1; i <= e.size(); ++i) {
      if (e.at(i) == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i);
      if (e.at(i) > 1) mono += "^" + std::to_string(e.at(i));
    }
    if (mono.empty()) {
      out += rational_str(a);
    } else {
      if (a != 1) out += rational_str(a) + "*";
      out += mono;
    }
    first = false;
  }
  return out;
}

Polynomial divided_difference(const Polynomial& f, int i) {
  if (i < 1) fail(ErrorKind::OutOfRange, "operator index " + std::to_string(i));
  Polynomial out;
  for (const auto& [e, c] : f.terms()) {
    int a = e.at(i);
    int b = e.at(i + 1);
    if (a == b) continue;
    // (x_i^a x_{i+1}^b - x_i^b x_{i+1}^a) / (x_i - x_{i+1}) telescopes to a
    // signed sum of monomials x_i^s x_{i+1}^(a+b-1-s).
    int lo = std::min(a, b);
    int hi = std::max(a, b);
    Rational sign = (a > b) ? c : -c;
    for (int s = lo; s <= hi - 1; ++s)
      out.add_term(e.with(i, s).with(i + 1, a + b - 1 - s), sign);
  }
  return out;
}

Polynomial demazure_pi(const Polynomial& f, int i) {
  if (i < 1) fail(ErrorKind::OutOfRange, "operator index " + std::to_string(i));
  return divided_difference(f.times_monomial(WeakComposition().with(i, 1)), i);
}

Polynomial pi_hat(const Polynomial& f, int i) {
  if (i < 1) fail(ErrorKind::OutOfRange, "operator index " + std::to_string(i));
  return divided_difference(f, i).times_monomial(
      WeakComposition().with(i, 1).with(i + 1, 1));
}

Polynomial reverse_complement(const Polynomial& f, int m, int n) {
  Polynomial out;
  for (const auto& [e, c] : f.terms()) out.add_term(reverse_complement(e, m, n), c);
  return out;
}

Polynomial swap_variables(const Polynomial& f, int i) {
  if (i < 1) fail(ErrorKind::OutOfRange, "variable index " + std::to_string(i));
  Polynomial out;
  for (const auto& [e, c] : f.terms()) out.add_term(e.swapped(i), c);
  return out;
}

}  // namespace schublas
