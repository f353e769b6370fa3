#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "schublas/composition.hpp"
#include "schublas/rational.hpp"

namespace schublas {

/// Multivariate polynomial over the rationals with exact coefficients.
/// Terms are keyed by normalized exponent vectors and iterate tail-lex
/// descending, so begin() is the leading term. No zero coefficients are
/// stored; operations reject results above limits::term_limit().
class Polynomial {
 public:
  using TermMap = std::map<WeakComposition, Rational, TailLexGreater>;

  Polynomial() = default;  // zero
  static Polynomial zero() { return {}; }
  static Polynomial one();
  static Polynomial monomial(WeakComposition exponent, Rational coeff = 1);
  static Polynomial variable(int i);  // x_i

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational coeff(const WeakComposition& exponent) const;

  /// Adds coeff * x^exponent, combining and dropping zeros.
  void add_term(const WeakComposition& exponent, const Rational& coeff);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial scaled(const Rational& factor) const;
  /// Multiply by x^shift (exponent translation; no term merging happens).
  Polynomial times_monomial(const WeakComposition& shift) const;

  /// Exponents present, tail-lex descending.
  std::vector<WeakComposition> support() const;
  /// Tail-lex maximal exponent; ZeroPolynomial on zero input.
  WeakComposition leading_exponent() const;
  Rational leading_coeff() const;

  bool is_homogeneous(long long* degree = nullptr) const;
  long long max_total_degree() const;
  /// Largest variable index appearing (0 for constants).
  int max_variable() const;

  /// {"terms":[{"exp":[...],"coeff":"p/q"}, ...]} tail-lex descending.
  std::string to_json() const;
  static Polynomial from_json(std::string_view text);
  /// "x1*x3 + 2*x2^3 + 1/2" style; tail-lex descending; "0" for zero.
  std::string to_text() const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  TermMap terms_;
};

/// Divided difference: (f - f with x_i, x_{i+1} exchanged) / (x_i - x_{i+1}),
/// computed termwise by the telescoped geometric sum, never by division.
Polynomial divided_difference(const Polynomial& f, int i);

/// Demazure operator: divided_difference(x_i * f, i). Idempotent.
Polynomial demazure_pi(const Polynomial& f, int i);

/// x_i * x_{i+1} * divided_difference(f, i); equals demazure_pi(x_{i+1} f, i).
Polynomial pi_hat(const Polynomial& f, int i);

/// Linear extension of the box reverse complement to polynomials: each
/// exponent e maps to reverse_complement(e, m, n). Every exponent must fit
/// the box (OutOfRange names the first offender). An involution.
Polynomial reverse_complement(const Polynomial& f, int m, int n);

/// f with the variables x_i and x_{i+1} exchanged.
Polynomial swap_variables(const Polynomial& f, int i);

}  // namespace schublas
