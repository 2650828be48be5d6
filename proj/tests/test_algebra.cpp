#include <doctest.h>

#include "su3sf/algebra.hpp"
#include "su3sf/errors.hpp"

using namespace su3sf;

TEST_CASE("rational text round trip") {
  CHECK(to_string(Rational(-6) / 4) == "-3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK(parse_rational("-3/2") == Rational(-3, 2));
  CHECK(parse_rational(" 7 ") == 7);
  CHECK_THROWS_AS(parse_rational("x/2"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
}

TEST_CASE("matrix products and inverse") {
  const RatMatrix m{{1, 2}, {3, 4}};
  CHECK(determinant(m) == -2);
  const auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(m * *inv == RatMatrix::identity(2));
  CHECK_FALSE(inverse(RatMatrix{{1, 2}, {2, 4}}));
  CHECK(rank(RatMatrix{{1, 2}, {2, 4}}) == 1);
}

TEST_CASE("nullspace vectors are annihilated") {
  const RatMatrix m{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  const auto ns = nullspace(m);
  REQUIRE(ns.size() == 1);
  CHECK(is_zero(m * ns[0]));
  CHECK_FALSE(is_zero(ns[0]));
}

TEST_CASE("characteristic polynomial against direct determinant") {
  const RatMatrix m{{2, 1, 0}, {Rational(1, 3), -1, 4}, {0, 5, 7}};
  const Polynomial cp = characteristic_polynomial(m);
  CHECK(cp.degree() == 3);
  CHECK(cp.leading() == 1);
  for (int x : {-3, 0, 1, 2, 9}) {
    const RatMatrix shifted = RatMatrix::identity(3) * Rational(x) - m;
    CHECK(cp(Rational(x)) == determinant(shifted));
  }
}

TEST_CASE("from_roots vanishes at the roots") {
  const RatVector roots{1, Rational(-2, 3), 5};
  const Polynomial p = from_roots(roots);
  for (const auto& r : roots) CHECK(p(r) == 0);
  CHECK(p(Rational(0)) == Rational(10, 3));
}

TEST_CASE("polynomial gcd, shift and division") {
  const Polynomial a = from_roots({1, 2, 3});
  const Polynomial b = from_roots({2, 3, 7});
  CHECK(Polynomial::gcd(a, b) == from_roots({2, 3}));
  const Polynomial p{1, 2, 3};
  CHECK(p.shifted(1)(Rational(4)) == p(Rational(5)));
  Polynomial q, r;
  Polynomial::divide(a, Polynomial{-1, 1}, q, r);
  CHECK(r.is_zero());
  CHECK(q == from_roots({2, 3}));
  CHECK(p.derivative() == Polynomial{2, 6});
}

TEST_CASE("pochhammer and binomial") {
  CHECK(pochhammer(3, 0) == 1);
  CHECK(pochhammer(3, 4) == 3 * 4 * 5 * 6);
  CHECK(pochhammer(-2, 3) == 0);
  CHECK(pochhammer(Rational(1, 2), 2) == Rational(3, 4));
  CHECK(binomial(6, 2) == 15);
  CHECK(binomial(3, 5) == 0);
}
