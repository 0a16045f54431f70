#include <doctest.h>

#include <random>

#include "support.hpp"
#include "ysym/algebra.hpp"
#include "ysym/json_io.hpp"
#include "ysym/symmetrizer.hpp"

using namespace ysym;
using support::to_oracle;

namespace {
Permutation cyc(std::string_view s, int n) { return Permutation::parse_cycles(s).pad(n); }
AlgebraElement sym(std::vector<int> X, int n) { return symmetrize_set(X, n); }
AlgebraElement alt(std::vector<int> X, int n) { return antisymmetrize_set(X, n); }
}  // namespace

TEST_CASE("linear combinations") {
  std::mt19937 rng(3);
  const AlgebraElement f = support::random_element(4, 6, rng);
  CHECK(linear(1, f, -1, f).is_zero());
  const AlgebraElement one = AlgebraElement::identity(3);
  CHECK(linear(2, one, 3, one) == AlgebraElement::scalar(3, 5));
  AlgebraElement g(2);
  g.add_term(cyc("(1 2)", 2), Rational(1, 3));
  const AlgebraElement h = linear(1, AlgebraElement::scalar(2, Rational(1, 2)), 1, g);
  CHECK(h.size() == 2);
  CHECK(h.coeff(Permutation::identity(2)) == Rational(1, 2));
  CHECK(h.coeff(cyc("(1 2)", 2)) == Rational(1, 3));
  CHECK_THROWS(linear(1, AlgebraElement(2), 1, AlgebraElement(3)));
}

TEST_CASE("multiplication basics") {
  std::mt19937 rng(5);
  const AlgebraElement f = support::random_element(5, 8, rng);
  CHECK(multiply(f, AlgebraElement::identity(5)) == f);
  CHECK(multiply(AlgebraElement::identity(5), f) == f);
  for (int size = 1; size <= 4; ++size) {
    std::vector<int> X(static_cast<std::size_t>(size));
    std::iota(X.begin(), X.end(), 2);
    const AlgebraElement a = sym(X, 6);
    CHECK(multiply(a, a) == Rational(factorial(size)) * a);
  }
  // |X cap Y| >= 2 kills a(X) b(Y) and b(Y) a(X).
  const AlgebraElement a = sym({1, 2, 3}, 5), b = alt({2, 3, 5}, 5);
  CHECK(multiply(a, b).is_zero());
  CHECK(multiply(b, a).is_zero());
  CHECK_FALSE(multiply(sym({1, 2}, 4), alt({2, 3}, 4)).is_zero());
}

TEST_CASE("multiplication agrees with the dense oracle") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 5;
    const AlgebraElement f = support::random_element(n, 1 + trial % 9, rng);
    const AlgebraElement g = support::random_element(n, 1 + (trial * 7) % 11, rng);
    CHECK(to_oracle(multiply(f, g)) == oracle::mul(to_oracle(f), to_oracle(g)));
    const Permutation p = support::random_perm(n, rng);
    CHECK(multiply(f, p) == multiply(f, AlgebraElement::basis(p)));
    CHECK(multiply(p, f) == multiply(AlgebraElement::basis(p), f));
  }
}

TEST_CASE("ring axioms on random elements") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + trial % 3;
    const AlgebraElement f = support::random_element(n, 4, rng), g = support::random_element(n, 5, rng),
                         h = support::random_element(n, 3, rng);
    CHECK(multiply(multiply(f, g), h) == multiply(f, multiply(g, h)));
    CHECK(multiply(f, g + h) == multiply(f, g) + multiply(f, h));
    CHECK(multiply(Rational(2, 3) * f, g) == Rational(2, 3) * multiply(f, g));
  }
}

TEST_CASE("symmetrize and antisymmetrize") {
  CHECK(sym({}, 3) == AlgebraElement::identity(3));
  CHECK(sym({2}, 3) == AlgebraElement::identity(3));
  const AlgebraElement s12 = sym({1, 2}, 2);
  CHECK(s12.size() == 2);
  CHECK(s12.coeff(cyc("(1 2)", 2)) == Rational(1));
  const AlgebraElement s123 = sym({1, 2, 3}, 4);
  CHECK(s123.size() == 6);
  for (const auto& [p, c] : s123.terms()) CHECK(p(4) == 4);
  CHECK(to_oracle(s123) == oracle::group_sum({{1, 2, 3}}, 4, false));
  CHECK(alt({1}, 3) == AlgebraElement::identity(3));
  const AlgebraElement a12 = alt({1, 2}, 2);
  CHECK(a12.coeff(Permutation::identity(2)) == Rational(1));
  CHECK(a12.coeff(cyc("(1 2)", 2)) == Rational(-1));
  CHECK(to_oracle(alt({1, 3, 4, 5}, 5)) == oracle::group_sum({{1, 3, 4, 5}}, 5, true));
}

TEST_CASE("adding one element to a symmetrized set") {
  const int n = 6;
  const std::vector<int> X{1, 3, 4};
  const int a = 6;
  const AlgebraElement z = transposition_sum(a, X, n);
  CHECK(sym({1, 3, 4, 6}, n) == multiply(sym(X, n), add_scalar(z, 1)));
  CHECK(alt({1, 3, 4, 6}, n) == multiply(alt(X, n), add_scalar(-z, 1)));
}

TEST_CASE("conjugation") {
  std::mt19937 rng(29);
  const AlgebraElement f = support::random_element(5, 6, rng);
  CHECK(conjugate(Permutation::identity(5), f) == f);
  const Permutation d = cyc("(1 4 2)(3 5)", 5);
  const std::vector<int> X{1, 2, 5};
  std::vector<int> dX;
  for (int x : X) dX.push_back(d(x));
  CHECK(conjugate(d, sym(X, 5)) == sym(dX, 5));
  const YoungTableau T = YoungTableau::parse("1,2,3/4,5");
  CHECK(conjugate(d, young_c(T)) == young_c(T.relabel(d)));
}

TEST_CASE("polynomials and products") {
  const AlgebraElement x = transposition_sum(4, std::vector<int>{1, 2, 3}, 4);
  // (x - 1)(x + 1) = x^2 - 1
  const std::vector<Rational> coeffs{-1, 0, 1};
  const std::vector<AlgebraElement> factors{add_scalar(x, -1), add_scalar(x, 1)};
  CHECK(evaluate_polynomial(coeffs, x) == product(4, factors));
  CHECK(product(4, std::vector<AlgebraElement>{}) == AlgebraElement::identity(4));
}

TEST_CASE("algebra JSON round trip") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    const AlgebraElement f = support::random_element(2 + trial % 5, 5, rng);
    const Json j = to_json(f);
    CHECK(algebra_from_json(j) == f);
    CHECK(algebra_from_json(Json::parse(j.dump())) == f);
  }
  const Json j = to_json(alt({1, 2}, 2));
  CHECK(j.dump() ==
        R"({"degree":2,"terms":[{"perm":[1,2],"coeff":"1/1"},{"perm":[2,1],"coeff":"-1/1"}]})");
  CHECK_THROWS(algebra_from_json(Json::parse(R"({"degree":2,"terms":[{"perm":[1,2,3],"coeff":"1"}]})")));
}
