#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "dtt/tchebichef.hpp"

using namespace dtt;

namespace {

// Independent route: three-term recurrence for the discrete Tchebichef
// polynomials, each row normalized numerically.
TransformMatrix recurrence_dtt(std::size_t n) {
	const double N = static_cast<double>(n);
	TransformMatrix t(n, n);
	for (std::size_t x = 0; x < n; ++x) {
		const double dx = static_cast<double>(x);
		double prev = 1.0;
		double cur = 2.0 * dx + 1.0 - N;
		t(0, x) = prev;
		if (n > 1)
			t(1, x) = cur;
		for (std::size_t k = 1; k + 1 < n; ++k) {
			const double dk = static_cast<double>(k);
			const double next = ((2.0 * dk + 1.0) * (2.0 * dx + 1.0 - N) * cur - dk * (N * N - dk * dk) * prev) / (dk + 1.0);
			prev = cur;
			cur = next;
			t(k + 1, x) = cur;
		}
	}
	for (std::size_t k = 0; k < n; ++k) {
		double norm = 0.0;
		for (double v : t.row(k))
			norm += v * v;
		norm = std::sqrt(norm);
		for (double &v : t.row(k))
			v /= norm;
	}
	return t;
}

} // namespace

TEST(AscendingFactorial, Examples) {
	EXPECT_EQ(ascending_factorial(3.0, 0), 1.0);
	EXPECT_EQ(ascending_factorial(1.0, 4), 24.0);
	EXPECT_EQ(ascending_factorial(-7.0, 2), 42.0);
}

TEST(Hypergeom3F2, OnlyLeadingTermWhenA1IsZero) {
	EXPECT_EQ(hypergeom_3f2_terminating(0.0, -3.0, 2.5, 1.0, -7.0, 1.0), 1.0);
	EXPECT_EQ(hypergeom_3f2_terminating(0.0, 4.2, 2.5, 1.0, 3.0, 0.3), 1.0);
}

TEST(Hypergeom3F2, TwoTermSum) {
	// 1 + (-1)(-1)(2) / ((1)(-7)) = 5/7, evaluated in exact fractions
	EXPECT_NEAR(hypergeom_3f2_terminating(-1.0, -1.0, 2.0, 1.0, -7.0, 1.0), 5.0 / 7.0, 1e-15);
}

TEST(Hypergeom3F2, RejectsNonTerminatingSeries) {
	EXPECT_THROW(hypergeom_3f2_terminating(0.5, 1.5, 1.0, 1.0, 2.0, 0.5), std::domain_error);
	EXPECT_THROW(hypergeom_3f2_terminating(1.0, 2.0, 1.0, 1.0, 2.0, 0.5), std::domain_error);
}

TEST(Hypergeom3F2, RejectsVanishingDenominator) {
	// (b2)_1 = 0 is reached before the series ends at j = 3
	EXPECT_THROW(hypergeom_3f2_terminating(-3.0, -3.0, 1.0, 1.0, 0.0, 1.0), std::domain_error);
}

TEST(DttMatrix, RejectsZeroOrder) { EXPECT_THROW(dtt_matrix(0), std::invalid_argument); }

TEST(DttMatrix, FirstRowIsConstant) {
	for (std::size_t n = 1; n <= 16; ++n) {
		const auto t = dtt_matrix(n);
		for (double v : t.row(0))
			EXPECT_NEAR(v, 1.0 / std::sqrt(static_cast<double>(n)), 1e-14) << "n=" << n;
	}
	EXPECT_NEAR(dtt_matrix(8)(0, 3), 1.0 / (2.0 * std::sqrt(2.0)), 1e-15);
}

TEST(DttMatrix, OrderTwoClosedForm) {
	const double h = 1.0 / std::sqrt(2.0);
	EXPECT_LT(max_abs_diff(dtt_matrix(2), TransformMatrix{{h, h}, {-h, h}}), 1e-15);
}

TEST(DttMatrix, OrthonormalRowsUpToSixteen) {
	for (std::size_t n = 1; n <= 16; ++n) {
		const auto t = dtt_matrix(n);
		EXPECT_LE(max_abs_diff(t * t.transpose(), TransformMatrix::identity(n)), 1e-10) << "n=" << n;
	}
}

TEST(DttMatrix, MatchesRecurrenceOracle) {
	for (std::size_t n = 1; n <= 16; ++n)
		EXPECT_LE(max_abs_diff(dtt_matrix(n), recurrence_dtt(n)), 1e-10) << "n=" << n;
}

TEST(ExactFactorization, PrintedRows) {
	const auto [f, t0] = exact_factorization_8();
	const std::vector<int> row1{-7, -5, -3, -1, 1, 3, 5, 7};
	const std::vector<int> row7{-1, 7, -21, 35, -35, 21, -7, 1};
	EXPECT_TRUE(std::equal(row1.begin(), row1.end(), t0.row(1).begin()));
	EXPECT_TRUE(std::equal(row7.begin(), row7.end(), t0.row(7).begin()));
	int peak = 0;
	for (int v : t0.data())
		peak = std::max(peak, std::abs(v));
	EXPECT_EQ(peak, 35);
}

TEST(ExactFactorization, ReproducesDtt) {
	const auto [f, t0] = exact_factorization_8();
	EXPECT_LE(max_abs_diff(scale_rows(f, t0), dtt_matrix(8)), 1e-12);
}

TEST(ExactFactorization, RowParity) {
	const auto t0 = exact_factorization_8().kernel;
	for (std::size_t k = 0; k < 8; ++k)
		for (std::size_t n = 0; n < 8; ++n) {
			const int mirrored = t0(k, 7 - n);
			EXPECT_EQ(t0(k, n), k % 2 ? -mirrored : mirrored) << "k=" << k << " n=" << n;
		}
}
