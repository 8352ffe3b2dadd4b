#include <doctest.h>

#include "stardec/embedder.hpp"
#include "stardec/exact.hpp"

using namespace stardec;

TEST_CASE("rational floor and ceil round toward the right integers") {
  CHECK(floor(Rational(7, 2)) == 3);
  CHECK(ceil(Rational(7, 2)) == 4);
  CHECK(floor(Rational(-7, 2)) == -4);
  CHECK(ceil(Rational(-7, 2)) == -3);
  CHECK(floor(Rational(6)) == 6);
  CHECK(ceil(Rational(6)) == 6);
  CHECK(to_string(Rational(27, 4)) == "27/4");
}

TEST_CASE("surd radicands are square-free") {
  const Surd a(0, 1, 8);
  CHECK(a.radicand() == 2);
  CHECK(a.radical_coefficient() == 2);
  CHECK(Surd(0, 3, 16).is_rational());
  CHECK(Surd(0, 3, 16) == Surd(12));
}

TEST_CASE("surd signs are decided exactly") {
  const Surd root2(0, 1, 2);
  CHECK(root2 > Surd(Rational(14142, 10000)));
  CHECK(root2 < Surd(Rational(14143, 10000)));
  // 3 - 2 sqrt 2 is a small positive number
  CHECK(Surd(3, -2, 2).sign() == 1);
  // 99 - 70 sqrt 2 ~ 0.00505
  CHECK(Surd(99, -70, 2).sign() == 1);
  // 577 - 408 sqrt 2 ~ 0.0012
  CHECK(Surd(577, -408, 2).sign() == 1);
  CHECK(Surd(-577, 408, 2).sign() == -1);
  CHECK((root2 * root2) == Surd(2));
}

TEST_CASE("surd ceil") {
  CHECK(ceil(Surd(0, 1, 2)) == 2);
  CHECK(ceil(Surd(32, -16, 2)) == 10);  // (4 - 2 sqrt 2) * 8 ~ 9.37
  CHECK(ceil(Surd(5)) == 5);
}

TEST_CASE("nested radicals compare exactly against rationals") {
  // 1 + sqrt(2 + sqrt 2) ~ 2.8478
  const NestedRadical x(1, Surd(2, 1, 2));
  CHECK(x.is_above(Rational(2847, 1000)));
  CHECK(x.is_below(Rational(2848, 1000)));
  CHECK(x.first_integer_above() == 3);
  // value exactly 3: 1 + sqrt(4)
  const NestedRadical three(1, Surd(4));
  CHECK(three.compare_from(3) == 0);
  CHECK(three.first_integer_above() == 4);
}

TEST_CASE("theorem caps and thresholds") {
  CHECK(theorem_cap(3) == Surd(Rational(27, 4)));
  CHECK(theorem_cap(5) == Surd(Rational(45, 4)));
  const Surd even8 = theorem_cap(8);
  CHECK(even8 > Surd(Rational(2537, 100)));
  CHECK(even8 < Surd(Rational(2538, 100)));
  CHECK(statement1_cap(3) == 4);
  CHECK(statement1_cap(8) == 22);
  CHECK(n_threshold(8) == Surd(8));
  // 6 / (sqrt 24 - 1) ~ 1.5389
  const Surd t3 = n_threshold(3);
  CHECK(t3 > Surd(Rational(15388, 10000)));
  CHECK(t3 < Surd(Rational(15389, 10000)));
}

TEST_CASE("n_threshold matches its defining quotient") {
  for (int k = 2; k <= 40; ++k) {
    // threshold * (sqrt(8k) - 1) == k(k-1)
    const Surd denom = Surd(-1, 1, 8 * k);
    CHECK(n_threshold(k) * denom == Surd(k * (k - 1)));
  }
}
