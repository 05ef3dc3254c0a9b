#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "splinespace/matrix.hpp"
#include "splinespace/rational.hpp"

using namespace splinespace;

namespace {

RatMatrix mat(const std::vector<std::vector<long>>& rows) {
  RatMatrix m(static_cast<int>(rows.size()),
              rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  return m;
}

}  // namespace

TEST_CASE("rational helpers canonicalize") {
  CHECK(rat(2, 4) == rat(1, 2));
  CHECK(rat(-2, -4) == rat(1, 2));
  CHECK(rat(2, -4) == rat(-1, 2));
  CHECK(rat_str(rat(1, 2)) == "1/2");
  CHECK(rat_str(rat(-3)) == "-3");
  CHECK(rat_str(rat(4, 2)) == "2");
  CHECK(rat_str(rat(0)) == "0");
  CHECK(rat_sign(rat(-1, 7)) == -1);
  CHECK(rat_sign(rat(0)) == 0);
  CHECK(rat_double(rat(1, 2)) == 0.5);
}

TEST_CASE("rational parsing is strict") {
  CHECK(rat_parse("3") == rat(3));
  CHECK(rat_parse("-3") == rat(-3));
  CHECK(rat_parse("2/4") == rat(1, 2));
  CHECK(rat_parse("-6/4") == rat(-3, 2));
  CHECK(!rat_parse(""));
  CHECK(!rat_parse("1/0"));
  CHECK(!rat_parse("1/"));
  CHECK(!rat_parse("/2"));
  CHECK(!rat_parse("1.5"));
  CHECK(!rat_parse("2/-4"));
  CHECK(!rat_parse(" 1"));
  CHECK(!rat_parse("1 "));
  CHECK(!rat_parse("+1"));
}

TEST_CASE("rref fixed points and collapses") {
  RatMatrix id2 = RatMatrix::identity(2);
  CHECK(id2.rref() == id2);

  RatMatrix m = mat({{1, 2}, {2, 4}});
  CHECK(m.rref() == mat({{1, 2}, {0, 0}}));

  RatMatrix swap = mat({{0, 1}, {1, 0}});
  CHECK(swap.rref() == RatMatrix::identity(2));
}

TEST_CASE("rank on dependent and independent line systems") {
  CHECK(mat({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}).rank() == 0);

  // Circuit matrix around three interacting lines: singular exactly when
  // the products around the cycle balance.
  RatMatrix singular = mat({{-2, 0, 2}, {1, -2, 0}, {0, 4, -2}});
  CHECK(singular.rank() == 2);

  RatMatrix regular = mat({{-2, 0, 2}, {1, -2, 0}, {0, 4, -3}});
  CHECK(regular.rank() == 3);
}

TEST_CASE("nullspace basis layout") {
  CHECK(RatMatrix::identity(3).nullspace_basis().empty());

  auto ns = RatMatrix(2, 3).nullspace_basis();
  REQUIRE(ns.size() == 3);
  for (int f = 0; f < 3; ++f) {
    for (int j = 0; j < 3; ++j) CHECK(ns[f][j] == (j == f ? 1 : 0));
  }

  RatMatrix singular = mat({{-2, 0, 2}, {1, -2, 0}, {0, 4, -2}});
  auto one = singular.nullspace_basis();
  REQUIRE(one.size() == 1);
  CHECK(proportional(one[0], {rat(4), rat(2), rat(4)}));
  CHECK(is_zero_vector(singular.apply(one[0])));

  RatMatrix regular = mat({{-2, 0, 2}, {1, -2, 0}, {0, 4, -3}});
  CHECK(regular.nullspace_basis().empty());
}

TEST_CASE("solve_linear reports inconsistency") {
  RatMatrix a = mat({{1, 2}, {3, 4}});
  auto x = solve_linear(a, {rat(5), rat(11)});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == rat(1));
  CHECK((*x)[1] == rat(2));

  RatMatrix dep = mat({{1, 2}, {2, 4}});
  CHECK(!solve_linear(dep, {rat(1), rat(3)}).has_value());

  // Underdetermined: free variables fixed at zero.
  auto y = solve_linear(mat({{1, 2}}), {rat(3)});
  REQUIRE(y.has_value());
  CHECK((*y)[0] == rat(3));
  CHECK((*y)[1] == rat(0));
}

TEST_CASE("proportional compares up to a nonzero scalar") {
  CHECK(proportional({rat(2), rat(4)}, {rat(1), rat(2)}));
  CHECK(proportional({rat(-1), rat(-2)}, {rat(1), rat(2)}));
  CHECK(!proportional({rat(1), rat(2)}, {rat(2), rat(1)}));
  CHECK(!proportional({rat(0), rat(0)}, {rat(0), rat(0)}));
  CHECK(!proportional({rat(0), rat(2)}, {rat(1), rat(2)}));
}

TEST_CASE("random matrices satisfy rank-nullity and rref idempotence") {
  std::mt19937 rng(911);
  std::uniform_int_distribution<int> dim(1, 12);
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 4);
  for (int iter = 0; iter < 40; ++iter) {
    int r = dim(rng), c = dim(rng);
    RatMatrix m(r, c);
    for (int i = 0; i < r; ++i)
      for (int j = 0; j < c; ++j) m.at(i, j) = rat(num(rng), den(rng));

    RatMatrix red = m.rref();
    CHECK(red.rref() == red);

    auto ns = m.nullspace_basis();
    CHECK(m.rank() + static_cast<int>(ns.size()) == c);
    for (const auto& v : ns) CHECK(is_zero_vector(m.apply(v)));
  }
}
