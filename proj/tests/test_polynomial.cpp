#include <doctest.h>

#include <random>
#include <vector>

#include "schublas/errors.hpp"
#include "schublas/limits.hpp"
#include "schublas/polynomial.hpp"

using namespace schublas;

namespace {

Polynomial random_polynomial(std::mt19937& rng, int max_var = 4, int max_exp = 3) {
  std::uniform_int_distribution<int> n_terms(1, 4);
  std::uniform_int_distribution<int> exp(0, max_exp);
  std::uniform_int_distribution<int> coeff(-3, 3);
  Polynomial f;
  int terms = n_terms(rng);
  for (int t = 0; t < terms; ++t) {
    std::vector<int> e(max_var);
    for (int& v : e) v = exp(rng);
    int c = coeff(rng);
    if (c == 0) c = 1;
    f.add_term(WeakComposition(e), c);
  }
  return f;
}

Polynomial x(int i) { return Polynomial::variable(i); }

}  // namespace

TEST_CASE("term storage and ordering") {
  Polynomial f;
  f.add_term(WeakComposition{2}, 1);
  f.add_term(WeakComposition{0, 1}, 3);
  f.add_term(WeakComposition{1, 1}, Rational(1) / 2);
  CHECK(f.term_count() == 3);
  // Tail-lex descending: (1,1) > (0,1) > (2).
  CHECK(f.support() ==
        std::vector<WeakComposition>{{1, 1}, {0, 1}, {2}});
  CHECK(f.leading_exponent() == WeakComposition{1, 1});
  CHECK(f.leading_coeff() == Rational(1) / 2);
  CHECK(f.coeff(WeakComposition{2}) == 1);
  CHECK(f.coeff(WeakComposition{5}) == 0);
  f.add_term(WeakComposition{2}, -1);
  CHECK(f.term_count() == 2);
  CHECK(f.coeff(WeakComposition{2}) == 0);
  CHECK(Polynomial::zero().is_zero());
  CHECK_THROWS_AS(Polynomial::zero().leading_exponent(), SchubError);
}

TEST_CASE("arithmetic") {
  Polynomial f = x(1) + x(2);
  Polynomial g = x(1) - x(2);
  CHECK(f * g == x(1) * x(1) - x(2) * x(2));
  CHECK(f - f == Polynomial::zero());
  CHECK(f * Polynomial::zero() == Polynomial::zero());
  CHECK(f * Polynomial::one() == f);
  CHECK((-f).scaled(-1) == f);
  CHECK(f.scaled(Rational(2) / 3) + f.scaled(Rational(1) / 3) == f);
  CHECK(f.times_monomial(WeakComposition{1, 2}) ==
        x(1) * x(1) * x(2) * x(2) + x(1) * x(2) * x(2) * x(2));
  Polynomial c = Polynomial::monomial(WeakComposition{}, Rational(5) / 2);
  CHECK(c * c == Polynomial::monomial(WeakComposition{}, Rational(25) / 4));
}

TEST_CASE("degree and homogeneity") {
  Polynomial f = x(1) * x(2) + x(3) * x(3);
  long long d = -1;
  CHECK(f.is_homogeneous(&d));
  CHECK(d == 2);
  CHECK_FALSE((f + Polynomial::one()).is_homogeneous());
  CHECK(f.max_total_degree() == 2);
  CHECK(f.max_variable() == 3);
  CHECK(Polynomial::one().max_variable() == 0);
  CHECK(Polynomial::zero().is_homogeneous());
}

TEST_CASE("text rendering") {
  Polynomial f = x(1) * x(3) + x(1) * x(2) + x(1) * x(1);
  CHECK(f.to_text() == "x1*x3 + x1*x2 + x1^2");
  CHECK(Polynomial::zero().to_text() == "0");
  CHECK(Polynomial::one().to_text() == "1");
  CHECK((x(1) * x(1) * x(1)).to_text() == "x1^3");
  CHECK((x(2) - x(1)).to_text() == "x2 - x1");
  Polynomial g = Polynomial::monomial(WeakComposition{1}, Rational(-1) / 2);
  CHECK(g.to_text() == "-1/2*x1");
  CHECK((Polynomial::one() + g).to_text() == "-1/2*x1 + 1");
}

TEST_CASE("json round trip") {
  std::mt19937 rng(12345);
  for (int t = 0; t < 50; ++t) {
    Polynomial f = random_polynomial(rng);
    CHECK(Polynomial::from_json(f.to_json()) == f);
  }
  CHECK(Polynomial::from_json(Polynomial::zero().to_json()).is_zero());
  CHECK_THROWS_AS(Polynomial::from_json("nope"), SchubError);
  CHECK_THROWS_AS(Polynomial::from_json("{\"terms\":[{\"exp\":[1]}]}"), SchubError);
}

TEST_CASE("divided difference against the multiply-back identity") {
  std::mt19937 rng(67890);
  for (int t = 0; t < 200; ++t) {
    Polynomial f = random_polynomial(rng);
    int i = 1 + static_cast<int>(t % 3);
    Polynomial d = divided_difference(f, i);
    CHECK((x(i) - x(i + 1)) * d == f - swap_variables(f, i));
    CHECK(divided_difference(d, i).is_zero());
    CHECK(swap_variables(d, i) == d);
  }
}

TEST_CASE("divided difference fixed values") {
  CHECK(divided_difference(x(1), 1) == Polynomial::one());
  CHECK(divided_difference(x(2), 1) == -Polynomial::one());
  CHECK(divided_difference(x(1) * x(1), 1) == x(1) + x(2));
  CHECK(divided_difference(x(1) * x(2), 1).is_zero());
  CHECK(divided_difference(x(3), 1).is_zero());
  CHECK(divided_difference(Polynomial::one(), 2).is_zero());
  CHECK_THROWS_AS(divided_difference(x(1), 0), SchubError);
}

TEST_CASE("demazure operator") {
  CHECK(demazure_pi(Polynomial::one(), 1) == Polynomial::one());
  CHECK(demazure_pi(x(1), 1) == x(1) + x(2));
  CHECK(demazure_pi(x(2), 1).is_zero());
  std::mt19937 rng(24680);
  for (int t = 0; t < 100; ++t) {
    Polynomial f = random_polynomial(rng);
    int i = 1 + static_cast<int>(t % 3);
    Polynomial p = demazure_pi(f, i);
    CHECK(demazure_pi(p, i) == p);
    CHECK(swap_variables(p, i) == p);
    // pi_i acts as identity on polynomials already symmetric in x_i, x_{i+1}.
    Polynomial sym = f + swap_variables(f, i);
    CHECK(demazure_pi(sym, i) == sym);
  }
}

TEST_CASE("hatted demazure operator") {
  CHECK(pi_hat(Polynomial::one(), 1).is_zero());
  CHECK(pi_hat(x(1), 1) == x(1) * x(2));
  CHECK(pi_hat(x(1) * x(1), 1) == x(1) * x(2) * (x(1) + x(2)));
  std::mt19937 rng(13579);
  for (int t = 0; t < 100; ++t) {
    Polynomial f = random_polynomial(rng);
    int i = 1 + static_cast<int>(t % 3);
    Polynomial p = pi_hat(f, i);
    CHECK(p == demazure_pi(x(i + 1) * f, i));
    CHECK(pi_hat(p, i).is_zero());
  }
}

TEST_CASE("reverse complement of polynomials") {
  Polynomial f = Polynomial::monomial(WeakComposition{0, 4, 2});
  CHECK(reverse_complement(f, 4, 3) == Polynomial::monomial(WeakComposition{2, 0, 4}));
  CHECK(reverse_complement(Polynomial::one(), 2, 2) ==
        Polynomial::monomial(WeakComposition{2, 2}));
  std::mt19937 rng(11111);
  for (int t = 0; t < 100; ++t) {
    Polynomial f = random_polynomial(rng, 3, 3);
    Polynomial g = random_polynomial(rng, 3, 3);
    CHECK(reverse_complement(reverse_complement(f, 3, 3), 3, 3) == f);
    // Linearity.
    CHECK(reverse_complement(f + g, 3, 3) ==
          reverse_complement(f, 3, 3) + reverse_complement(g, 3, 3));
  }
  CHECK_THROWS_AS(reverse_complement(x(4), 3, 3), SchubError);
  CHECK_THROWS_AS(reverse_complement(x(1) * x(1), 1, 2), SchubError);
}

TEST_CASE("term limit stops oversized results") {
  std::size_t old = limits::term_limit();
  limits::set_term_limit(4);
  Polynomial f;
  for (int i = 1; i <= 3; ++i) f += x(i);
  bool hit = false;
  try {
    Polynomial g = f * f;  // nine raw products, six distinct terms
    (void)g;
  } catch (const SchubError& e) {
    hit = e.kind() == ErrorKind::ResourceLimit;
  }
  limits::set_term_limit(old);
  CHECK(hit);
}
