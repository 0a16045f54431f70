#include <doctest.h>

#include <random>

#include "support.hpp"
#include "ysym/permutation.hpp"
#include "ysym/rational.hpp"

using namespace ysym;

namespace {
Permutation cyc(std::string_view s, int n) { return Permutation::parse_cycles(s).pad(n); }
}  // namespace

TEST_CASE("rational arithmetic and formatting") {
  CHECK(Rational(6, 4).str() == "3/2");
  CHECK(Rational(-6, 4).str() == "-3/2");
  CHECK(Rational(5).str() == "5/1");
  CHECK(Rational(0).str() == "0/1");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS(Rational::parse("1/0"));
  CHECK_THROWS(Rational::parse("x"));
  CHECK_THROWS(Rational::parse("1/2/3"));
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) * Rational(3, 4) == Rational(1, 2));
  CHECK(Rational(1) / Rational(-3) == Rational(-1, 3));
  CHECK(Rational(3, 1).is_integer());
  CHECK_FALSE(Rational(3, 2).is_integer());
  CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("rational overflow promotes to big integers") {
  Rational big(1);
  for (int i = 0; i < 40; ++i) big *= Rational(1000003);
  Rational back = big;
  for (int i = 0; i < 40; ++i) back /= Rational(1000003);
  CHECK(back == Rational(1));
  CHECK((big - big).is_zero());
  mpq_class expected = 1;
  for (int i = 0; i < 40; ++i) expected *= 1000003;
  CHECK(big.str() == expected.get_str() + "/1");
  // Agreement with plain GMP on a mixed sequence.
  std::mt19937 rng(7);
  std::uniform_int_distribution<long long> d(-1000000000LL, 1000000000LL);
  Rational r(0);
  mpq_class q = 0;
  for (int i = 0; i < 200; ++i) {
    const long a = static_cast<long>(d(rng)), b = static_cast<long>(d(rng) | 1);
    r += Rational(a, b) * Rational(b + 7, a == 0 ? 1 : a);
    mpq_class t(a, b), u(b + 7, a == 0 ? 1 : a);
    t.canonicalize();
    u.canonicalize();
    q += t * u;
  }
  q.canonicalize();
  CHECK(r.str() == q.get_num().get_str() + "/" + q.get_den().get_str());
}

TEST_CASE("compose") {
  CHECK(compose(Permutation::identity(3), cyc("(1 2)", 3)) == cyc("(1 2)", 3));
  CHECK(compose(cyc("(1 2)", 2), cyc("(1 2)", 2)).is_identity());
  // checked pointwise against the word oracle
  const Permutation p = compose(cyc("(1 2)", 3), cyc("(2 3)", 3));
  const oracle::Word w = oracle::compose({2, 1, 3}, {1, 3, 2});
  CHECK(p.word() == w);
  CHECK(p == cyc("(1 2 3)", 3).inverse().inverse());
  CHECK_THROWS(compose(Permutation::identity(2), Permutation::identity(3)));
}

TEST_CASE("inverse and sign") {
  CHECK(Permutation::identity(4).inverse() == Permutation::identity(4));
  CHECK(cyc("(1 2)", 2).inverse() == cyc("(1 2)", 2));
  CHECK(cyc("(1 2 3)", 3).inverse() == cyc("(1 3 2)", 3));
  CHECK(compose(cyc("(1 2 3)", 3), cyc("(1 3 2)", 3)).is_identity());
  CHECK(Permutation::identity(5).sign() == 1);
  CHECK(cyc("(1 2)", 2).sign() == -1);
  CHECK(cyc("(1 2 3)", 3).sign() == 1);
}

TEST_CASE("cycle helper") {
  CHECK(Permutation::cycle(5, 3, {}).is_identity());
  CHECK(Permutation::cycle(9, 9, {4}) == Permutation::transposition(9, 9, 4));
  CHECK(Permutation::cycle(3, 3, {1, 2}) ==
        compose(Permutation::transposition(3, 3, 1), Permutation::transposition(3, 3, 2)));
  // (a, b1)(a, b2)(a, b3) = (a, b3, b2, b1)
  CHECK(Permutation::cycle(6, 6, {1, 3, 4}) == cyc("(6 4 3 1)", 6));
}

TEST_CASE("star") {
  CHECK(star(Permutation::identity(2), Permutation::identity(3)) == Permutation::identity(5));
  CHECK(star(cyc("(1 2)", 2), Permutation::identity(1)) == cyc("(1 2)", 3));
  CHECK(star(cyc("(1 2)", 2), cyc("(1 2)", 2)) == Permutation::parse_cycles("(1 2)(3 4)"));
}

TEST_CASE("parsing and printing") {
  const Permutation p = Permutation::parse_one_line("[3,1,2]");
  CHECK(p(1) == 3);
  CHECK(p.to_cycle_string() == "(1 3 2)");
  CHECK(Permutation::parse_cycles(p.to_cycle_string()) == p);
  CHECK_THROWS(Permutation::parse_one_line("[1,1]"));
  CHECK_THROWS(Permutation::parse_cycles("(1 2)(2 3)"));
  CHECK_THROWS(Permutation::from_word({1, 3}));
}

TEST_CASE("group laws on random permutations") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 9;
    const Permutation a = support::random_perm(n, rng), b = support::random_perm(n, rng),
                      c = support::random_perm(n, rng);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, a.inverse()).is_identity());
    CHECK(compose(a, b).sign() == a.sign() * b.sign());
    CHECK(a.sign() == oracle::sign(a.word()));
    CHECK(compose(a, b).word() == oracle::compose(a.word(), b.word()));
    // star applied pointwise
    const Permutation s = star(a, b);
    for (int i = 1; i <= n; ++i) CHECK(s(i) == a(i));
    for (int i = 1; i <= n; ++i) CHECK(s(n + i) == n + b(i));
    CHECK(star(compose(a, c), compose(b, b)) == compose(star(a, b), star(c, b)));
  }
}
