#include <catch_amalgamated.hpp>

#include <random>

#include "grasscoh/exact_linalg.hpp"

using namespace grasscoh;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<int>>& rows) {
  RationalMatrix m(static_cast<int>(rows.size()),
                   rows.empty() ? 0 : static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) m.at(r, c) = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
  return m;
}

std::vector<Rat> matvec(const RationalMatrix& m, const std::vector<Rat>& x) {
  std::vector<Rat> y(static_cast<std::size_t>(m.rows()), Rat(0));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) y[static_cast<std::size_t>(r)] += m.at(r, c) * x[static_cast<std::size_t>(c)];
  return y;
}

}  // namespace

TEST_CASE("rank basics", "[linalg]") {
  CHECK(rank(RationalMatrix::identity(3)) == 3);
  CHECK(rank(RationalMatrix(2, 5)) == 0);
  CHECK(rank(from_rows({{1, 2}, {2, 4}})) == 1);
  CHECK(rank(from_rows({{1, 2}, {2, 4}}), PivotPolicy::LargestNumerator) == 1);
}

TEST_CASE("rank equals rank of the transpose", "[linalg]") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coin(-3, 3);
  for (int trial = 0; trial < 25; ++trial) {
    RationalMatrix m(4, 6);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 6; ++c) m.at(r, c) = coin(rng);
    CHECK(rank(m) == rank(m.transposed()));
    CHECK(rank(m) == rank(m, PivotPolicy::LargestNumerator));
  }
}

TEST_CASE("solve classification", "[linalg]") {
  {
    const auto res = solve(RationalMatrix::identity(2), {Rat(3), Rat(4)});
    REQUIRE(res.unique());
    CHECK(res.solution == std::vector<Rat>{Rat(3), Rat(4)});
  }
  CHECK(solve(from_rows({{1, 1}, {2, 2}}), {Rat(1), Rat(3)}).kind ==
        SolveResult::Kind::Inconsistent);
  CHECK(solve(from_rows({{1, 1}, {2, 2}}), {Rat(1), Rat(2)}).kind ==
        SolveResult::Kind::Underdetermined);
  CHECK_THROWS_AS(solve(RationalMatrix::identity(2), {Rat(1)}), std::invalid_argument);
}

TEST_CASE("unique solutions substitute back exactly", "[linalg]") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coin(-4, 4);
  for (int trial = 0; trial < 25; ++trial) {
    RationalMatrix m(4, 4);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) m.at(r, c) = Rat(coin(rng), 1 + trial % 3);
    std::vector<Rat> b{Rat(coin(rng)), Rat(coin(rng)), Rat(coin(rng)), Rat(coin(rng))};
    const auto res = solve(m, b);
    if (res.unique()) CHECK(matvec(m, res.solution) == b);
  }
}

TEST_CASE("in_span with certificates", "[linalg]") {
  {
    const auto res = in_span({{Rat(1), Rat(0)}}, {Rat(2), Rat(0)});
    REQUIRE(res.in_span);
    CHECK(res.certificate == std::vector<Rat>{Rat(2)});
  }
  CHECK_FALSE(in_span({{Rat(1), Rat(0)}}, {Rat(0), Rat(1)}).in_span);
  CHECK(in_span({}, {Rat(0), Rat(0)}).in_span);
  CHECK_FALSE(in_span({}, {Rat(1)}).in_span);

  // certificate reproduces the target
  const std::vector<std::vector<Rat>> vecs = {{Rat(1), Rat(2), Rat(0)},
                                              {Rat(0), Rat(1), Rat(1)},
                                              {Rat(1), Rat(3), Rat(1)}};
  const std::vector<Rat> target = {Rat(2), Rat(5), Rat(1)};
  const auto res = in_span(vecs, target);
  REQUIRE(res.in_span);
  std::vector<Rat> rebuilt(3, Rat(0));
  for (std::size_t i = 0; i < vecs.size(); ++i)
    for (std::size_t d = 0; d < 3; ++d) rebuilt[d] += res.certificate[i] * vecs[i][d];
  CHECK(rebuilt == target);
}

TEST_CASE("inverse", "[linalg]") {
  const auto m = from_rows({{2, 1}, {1, 1}});
  const auto inv = inverse(m);
  REQUIRE(inv.has_value());
  RationalMatrix prod(2, 2);
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c)
      for (int t = 0; t < 2; ++t) prod.at(r, c) += m.at(r, t) * inv->at(t, c);
  CHECK(prod == RationalMatrix::identity(2));
  CHECK_FALSE(inverse(from_rows({{1, 2}, {2, 4}})).has_value());
  CHECK_THROWS_AS(inverse(RationalMatrix(2, 3)), std::invalid_argument);
}
