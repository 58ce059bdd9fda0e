#include <gtest/gtest.h>

#include "streamcode/matrix.hpp"
#include "test_helpers.hpp"

using namespace sc;
using sc::testing::for_each_vector;
using sc::testing::random_matrix;
using sc::testing::rank_by_counting;

TEST(Matrix, RankExamples) {
  auto gf2 = Field::of_order(2);
  EXPECT_EQ(rank(FieldMatrix::identity(gf2, 3)), 3u);
  EXPECT_EQ(rank(FieldMatrix(gf2, 2, 5)), 0u);
  EXPECT_EQ(rank(FieldMatrix::from_rows(gf2, {{1, 1}, {1, 1}})), 1u);
}

TEST(Matrix, RankAgainstRowSpaceSize) {
  std::mt19937_64 rng(7);
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    auto f = Field::of_order(q);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t rows = 1 + rng() % 4;
      const std::size_t cols = 1 + rng() % 5;
      FieldMatrix m = random_matrix(f, rows, cols, rng);
      if (trial % 3 == 0 && rows > 1)  // force a dependent row
        for (std::size_t c = 0; c < cols; ++c) m(rows - 1, c) = f->mul(2 % q, m(0, c));
      EXPECT_EQ(rank(m), rank_by_counting(m));
      EXPECT_EQ(rank(m), rank(m.transpose()));
    }
  }
}

TEST(Matrix, InSpanExamples) {
  auto gf2 = Field::of_order(2);
  FieldMatrix empty(gf2, 2, 0);
  EXPECT_TRUE(in_span(FieldVector(gf2, 2), empty));
  EXPECT_FALSE(in_span(FieldVector(gf2, {1, 0}), empty));
  EXPECT_TRUE(in_span(FieldVector(gf2, {1, 0}), FieldMatrix::identity(gf2, 2)));
  EXPECT_FALSE(in_span(FieldVector(gf2, {1, 0}), FieldMatrix::from_rows(gf2, {{0}, {1}})));
  EXPECT_THROW(in_span(FieldVector(gf2, 3), FieldMatrix::identity(gf2, 2)), std::invalid_argument);
}

TEST(Matrix, InSpanAgainstEnumeration) {
  std::mt19937_64 rng(11);
  for (std::uint32_t q : {2u, 3u, 8u}) {
    auto f = Field::of_order(q);
    for (int trial = 0; trial < 30; ++trial) {
      const std::size_t rows = 2 + rng() % 3;
      const std::size_t cols = rng() % 3;
      FieldMatrix b = random_matrix(f, rows, cols, rng);
      FieldMatrix v = random_matrix(f, rows, 1, rng);
      bool reachable = false;
      for_each_vector(*f, cols, [&](const std::vector<std::uint32_t>& c) {
        bool eq = true;
        for (std::size_t r = 0; r < rows; ++r) {
          std::uint32_t acc = 0;
          for (std::size_t j = 0; j < cols; ++j) acc = f->add(acc, f->mul(c[j], b(r, j)));
          eq = eq && acc == v(r, 0);
        }
        reachable = reachable || eq;
      });
      EXPECT_EQ(in_span(v.column(0), b), reachable);
      EXPECT_EQ(in_span(v.column(0), b), rank(hstack(b, v)) == rank(b));
    }
  }
}

TEST(Matrix, Submatrix) {
  auto gf2 = Field::of_order(2);
  auto i3 = FieldMatrix::identity(gf2, 3);
  EXPECT_EQ(submatrix(i3, index_range(0, 2), index_range(0, 2)), i3);
  const std::vector<std::size_t> one{1};
  EXPECT_EQ(submatrix(i3, one, one).rows(), 1u);
  EXPECT_EQ(submatrix(i3, one, one)(0, 0), 1u);
  const std::vector<std::size_t> ends{0, 2};
  EXPECT_EQ(submatrix(i3, ends, ends), FieldMatrix::identity(gf2, 2));
  const std::vector<std::size_t> bad{3};
  EXPECT_THROW(submatrix(i3, bad, ends), std::out_of_range);
  EXPECT_TRUE(index_range(3, 2).empty());
}

TEST(Matrix, SolveExamples) {
  auto gf8 = Field::of_order(8);
  FieldVector b(gf8, {5, 1, 7});
  auto x = solve(FieldMatrix::identity(gf8, 3), b);
  ASSERT_TRUE(x);
  EXPECT_EQ(*x, b);
  EXPECT_FALSE(solve(FieldMatrix(gf8, 3, 3), b));
  EXPECT_THROW(solve(FieldMatrix::identity(gf8, 2), b), std::invalid_argument);

  // Vandermonde on points 1, 2, 3
  FieldMatrix v(gf8, 3, 3);
  for (std::uint32_t r = 0; r < 3; ++r)
    for (std::uint32_t c = 0; c < 3; ++c) v(r, c) = gf8->pow(c + 1, r);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    FieldVector rhs = random_matrix(gf8, 3, 1, rng).column(0);
    auto sol = solve_with_uniqueness(v, rhs);
    ASSERT_TRUE(sol);
    EXPECT_EQ(v * sol->x, rhs);
    for (bool d : sol->determined) EXPECT_TRUE(d);
  }
}

TEST(Matrix, SolveUnderdeterminedReportsFreeCoordinates) {
  auto gf3 = Field::of_order(3);
  // x0 + x1 = 1, x2 = 2 : x2 pinned, x0/x1 free
  auto a = FieldMatrix::from_rows(gf3, {{1, 1, 0}, {0, 0, 1}});
  auto sol = solve_with_uniqueness(a, FieldVector(gf3, {1, 2}));
  ASSERT_TRUE(sol);
  EXPECT_EQ(a * sol->x, FieldVector(gf3, {1, 2}));
  EXPECT_FALSE(sol->determined[0]);
  EXPECT_FALSE(sol->determined[1]);
  EXPECT_TRUE(sol->determined[2]);
  // free variables come back as zero
  EXPECT_EQ(sol->x[1], 0u);

  // determined flags against enumeration of all solutions
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    FieldMatrix m = random_matrix(gf3, 1 + rng() % 3, 1 + rng() % 4, rng);
    FieldVector rhs = m * random_matrix(gf3, m.cols(), 1, rng).column(0);
    auto s = solve_with_uniqueness(m, rhs);
    ASSERT_TRUE(s);
    std::vector<std::vector<std::uint32_t>> all;
    for_each_vector(*gf3, m.cols(), [&](const std::vector<std::uint32_t>& x) {
      if (m * FieldVector(gf3, x) == rhs) all.push_back(x);
    });
    for (std::size_t i = 0; i < m.cols(); ++i) {
      bool pinned = true;
      for (const auto& x : all) pinned = pinned && x[i] == all.front()[i];
      EXPECT_EQ(s->determined[i], pinned);
    }
  }
}

TEST(Matrix, NullspaceAndInverse) {
  std::mt19937_64 rng(9);
  for (std::uint32_t q : {2u, 5u, 16u}) {
    auto f = Field::of_order(q);
    for (int trial = 0; trial < 20; ++trial) {
      FieldMatrix a = random_matrix(f, 1 + rng() % 4, 1 + rng() % 6, rng);
      FieldMatrix ns = nullspace(a);
      EXPECT_EQ(ns.rows(), a.cols() - rank(a));
      EXPECT_EQ(rank(ns), ns.rows());
      for (std::size_t r = 0; r < ns.rows(); ++r) EXPECT_TRUE((a * ns.row_vector(r)).is_zero());
      FieldMatrix sq = random_matrix(f, 3, 3, rng);
      auto inv = inverse(sq);
      EXPECT_EQ(inv.has_value(), rank(sq) == 3);
      if (inv) EXPECT_EQ(sq * *inv, FieldMatrix::identity(f, 3));
    }
  }
}

TEST(Matrix, PuncturedParityShape) {
  auto gf2 = Field::of_order(2);
  const std::size_t n = 9, k = 5, tau = 7;
  std::mt19937_64 rng(1);
  FieldMatrix p = random_matrix(gf2, k, n - k, rng);
  FieldMatrix h(gf2, n - k, n);
  for (std::size_t r = 0; r < n - k; ++r) {
    for (std::size_t c = 0; c < k; ++c) h(r, c) = p(c, r);
    h(r, k + r) = 1;
  }
  FieldMatrix h0 = punctured_parity(h, n, k, tau, 0);
  EXPECT_EQ(h0.rows(), 3u);
  EXPECT_EQ(h0.cols(), 8u);
  EXPECT_EQ(submatrix(h0, index_range(0, 2), index_range(5, 7)), FieldMatrix::identity(gf2, 3));
  for (std::size_t i = n - tau - 1; i < n; ++i) EXPECT_EQ(punctured_parity(h, n, k, tau, i), h);
  EXPECT_THROW(punctured_parity(h, n, k, 4, 0), std::domain_error);
}

TEST(Matrix, PuncturedParityAnnihilatesPuncturedCode) {
  std::mt19937_64 rng(2);
  for (std::uint32_t q : {2u, 3u, 4u}) {
    auto f = Field::of_order(q);
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t k = 2 + rng() % 3, n = k + 2 + rng() % 3;
      FieldMatrix p = random_matrix(f, k, n - k, rng);
      FieldMatrix h(f, n - k, n);
      for (std::size_t r = 0; r < n - k; ++r) {
        for (std::size_t c = 0; c < k; ++c) h(r, c) = f->neg(p(c, r));
        h(r, k + r) = 1;
      }
      for (std::size_t tau = k; tau < n; ++tau)
        for (std::size_t i = 0; i < k; ++i) {
          FieldMatrix hi = punctured_parity(h, n, k, tau, i);
          const std::size_t keep = hi.cols();
          EXPECT_EQ(keep, std::min(tau + i, n - 1) + 1);
          EXPECT_EQ(rank(hi), hi.rows());
          // every message's codeword, punctured to [0 : keep-1], is annihilated
          for_each_vector(*f, k, [&](const std::vector<std::uint32_t>& u) {
            std::vector<std::uint32_t> c(keep, 0);
            for (std::size_t j = 0; j < keep; ++j) {
              if (j < k) {
                c[j] = u[j];
                continue;
              }
              for (std::size_t m = 0; m < k; ++m) c[j] = f->add(c[j], f->mul(u[m], p(m, j - k)));
            }
            ASSERT_TRUE((hi * FieldVector(f, c)).is_zero());
          });
          // and it has the right dimension: (keep - k) checks for a k-dimensional code
          EXPECT_EQ(hi.rows(), keep - k);
          // shortening an arbitrary parity basis spans the same space
          FieldMatrix sd = shortened_dual(h, keep);
          EXPECT_EQ(rank(sd), rank(hi));
          EXPECT_EQ(rank(vstack(sd, hi)), rank(hi));
        }
    }
  }
}
