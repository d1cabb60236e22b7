#include <doctest.h>

#include <random>

#include "hecke/errors.hpp"
#include "hecke/mat2.hpp"

using namespace hecke;

TEST_CASE("rational arithmetic is exact") {
  std::mt19937_64 eng(7);
  std::uniform_int_distribution<long> num(-50, 50), den(1, 50);
  for (int t = 0; t < 200; ++t) {
    Rational a(num(eng), den(eng)), b(num(eng), den(eng));
    a.canonicalize();
    b.canonicalize();
    CHECK((a + b) - b == a);
    if (b != 0) CHECK((a / b) * b == a);
  }
  CHECK(rational_from_string("3/6") == Rational(1, 2));
  CHECK(rational_from_string("-4") == Rational(-4));
  CHECK(to_string(Rational(-1, 2)) == "-1/2");
  CHECK_THROWS_AS(rational_from_string("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(rational_from_string("x"), std::invalid_argument);
}

TEST_CASE("matrix product and parsing") {
  Mat2 x = mat2_from_string("1,1;0,1");
  Mat2 y = mat2_from_string("1,0;1,1");
  CHECK(Mat2::identity() * x == x);
  CHECK(x * y == mat2_from_string("2,1;1,1"));
  CHECK(to_string(x * y) == "2,1;1,1");
  CHECK(mat2_from_string("1,-1/2;0,1/4").a == 1);
  CHECK_THROWS_AS(mat2_from_string("1,2;3"), std::invalid_argument);
}

TEST_CASE("inverse") {
  CHECK(Mat2::identity().inverse() == Mat2::identity());
  CHECK(Mat2::diag(1, 5).inverse() == Mat2(1, 0, 0, Rational(1, 5)));
  Mat2 x = mat2_from_string("1,2;0,4");
  CHECK(x.inverse() == mat2_from_string("1,-1/2;0,1/4"));
  CHECK(x * x.inverse() == Mat2::identity());

  // x * x^{-1} = identity for random unimodular words
  std::mt19937_64 eng(11);
  std::uniform_int_distribution<int> len(0, 12), pick(0, 1);
  const Mat2 S = Mat2(0, -1, 1, 0), T = Mat2(1, 1, 0, 1);
  for (int t = 0; t < 50; ++t) {
    Mat2 w = Mat2::identity();
    int n = len(eng);
    for (int k = 0; k < n; ++k) w = w * (pick(eng) ? S : T);
    CHECK(w * w.inverse() == Mat2::identity());
    CHECK(w.inverse() * w == Mat2::identity());
  }
}

namespace {

Integer gcd4(const Mat2& m) {
  auto e = integral_entries(m);
  Integer g;
  mpz_gcd(g.get_mpz_t(), e[0].get_mpz_t(), e[1].get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e[2].get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), e[3].get_mpz_t());
  return g;
}

// Independent classifier: for 2x2 integral matrices, d1 is the gcd of the
// entries and d1*d2 the determinant.
std::pair<Integer, Integer> smith_oracle(const Mat2& m) {
  Integer d1 = gcd4(m);
  Integer det = m.det().get_num();
  return {d1, det / d1};
}

void check_smith(const Mat2& m) {
  SmithForm sf = smith_form(m);
  auto [o1, o2] = smith_oracle(m);
  CHECK(sf.d1 == o1);
  CHECK(sf.d2 == o2);
  CHECK(sf.d2 % sf.d1 == 0);
  CHECK(sf.d1 * sf.d2 == m.det().get_num());
  Rational du = sf.U.det(), dv = sf.V.det();
  CHECK((du == 1 || du == -1));
  CHECK((dv == 1 || dv == -1));
  CHECK(sf.U * m * sf.V == Mat2::diag(Rational(o1), Rational(o2)));
}

}  // namespace

TEST_CASE("smith form examples") {
  check_smith(Mat2::diag(1, 4));
  check_smith(mat2_from_string("1,2;0,4"));
  check_smith(Mat2::diag(2, 2));
  CHECK(smith_form(Mat2::diag(1, 4)).d2 == 4);
  CHECK(smith_form(mat2_from_string("1,2;0,4")).d1 == 1);
  CHECK(smith_form(mat2_from_string("1,2;0,4")).d2 == 4);
  CHECK(smith_form(Mat2::diag(2, 2)).d1 == 2);
  CHECK_THROWS_AS(smith_form(mat2_from_string("1/2,0;0,2")), NonIntegralError);
}

TEST_CASE("smith form is SL2(Z)-bi-invariant") {
  std::mt19937_64 eng(3);
  std::uniform_int_distribution<int> len(0, 8), pick(0, 1), entry(-5, 5);
  const Mat2 S = Mat2(0, -1, 1, 0), T = Mat2(1, 1, 0, 1);
  auto word = [&]() {
    Mat2 w = Mat2::identity();
    int n = len(eng);
    for (int k = 0; k < n; ++k) w = w * (pick(eng) ? S : T);
    return w;
  };
  int done = 0;
  while (done < 100) {
    Mat2 m(entry(eng), entry(eng), entry(eng), entry(eng));
    if (m.det() <= 0) continue;
    ++done;
    SmithForm base = smith_form(m);
    Mat2 u = word(), v = word();
    SmithForm moved = smith_form(u * m * v);
    CHECK(base.d1 == moved.d1);
    CHECK(base.d2 == moved.d2);
  }
}

TEST_CASE("determinant multiplicativity through smith pairs") {
  std::mt19937_64 eng(5);
  std::uniform_int_distribution<int> entry(-4, 4);
  int done = 0;
  while (done < 50) {
    Mat2 x(entry(eng), entry(eng), entry(eng), entry(eng));
    Mat2 y(entry(eng), entry(eng), entry(eng), entry(eng));
    if (x.det() <= 0 || y.det() <= 0) continue;
    ++done;
    SmithForm sx = smith_form(x), sy = smith_form(y), sxy = smith_form(x * y);
    CHECK(sx.d1 * sx.d2 * sy.d1 * sy.d2 == sxy.d1 * sxy.d2);
  }
}

TEST_CASE("column Hermite form") {
  CHECK(hnf_cols(Mat2::diag(1, 2)) == Mat2::diag(1, 2));
  // one SL2(Z) coset: the form is invariant under right multiplication
  Mat2 m = mat2_from_string("2,0;1,2");
  Mat2 u = mat2_from_string("1,3;0,1");
  CHECK(hnf_cols(m * u) == hnf_cols(m));
  CHECK(hnf_cols(m).b == 0);
  // [[2,0],[2,2]] is column-equivalent to [[2,0],[0,2]]
  CHECK(hnf_cols(mat2_from_string("2,0;2,2")) == Mat2::diag(2, 2));
}
