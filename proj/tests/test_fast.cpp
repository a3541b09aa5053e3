#include <gtest/gtest.h>

#include <random>

#include "dtt/approx.hpp"
#include "dtt/fast.hpp"

using namespace dtt;

namespace {

Vec8<long long> dense(const IntegerKernel &m, const Vec8<long long> &x) {
	Vec8<long long> y{};
	for (std::size_t r = 0; r < 8; ++r)
		for (std::size_t c = 0; c < 8; ++c)
			y[r] += m(r, c) * x[c];
	return y;
}

std::vector<Vec8<long long>> canonical_vectors() {
	std::vector<Vec8<long long>> v;
	for (std::size_t i = 0; i < 8; ++i) {
		Vec8<long long> e{};
		e[i] = 1;
		v.push_back(e);
		e[i] = -1;
		v.push_back(e);
	}
	return v;
}

} // namespace

TEST(ForwardFast, ConstantInput) {
	const Vec8<long long> y = forward_fast(Vec8<long long>{1, 1, 1, 1, 1, 1, 1, 1});
	EXPECT_EQ(y, (Vec8<long long>{8, 0, 0, 0, 0, 0, 0, 0}));
}

TEST(ForwardFast, FirstBasisVector) {
	EXPECT_EQ(forward_fast(Vec8<int>{1, 0, 0, 0, 0, 0, 0, 0}), (Vec8<int>{1, -1, 1, -1, 0, 0, 0, 0}));
}

TEST(InverseFast, FirstColumns) {
	EXPECT_EQ(inverse_fast(Vec8<int>{1, 0, 0, 0, 0, 0, 0, 0}), (Vec8<int>{1, 1, 1, 1, 1, 1, 1, 1}));
	EXPECT_EQ(inverse_fast(Vec8<int>{0, 1, 0, 0, 0, 0, 0, 0}), (Vec8<int>{-3, -2, -1, -1, 1, 1, 2, 3}));
}

TEST(FastAlgorithms, MatchDenseProductOnCanonicalVectors) {
	const auto k = proposed_kernel();
	auto vecs = canonical_vectors();
	Vec8<long long> ones;
	ones.fill(1);
	vecs.push_back(ones);
	for (const auto &x : vecs) {
		EXPECT_EQ(forward_fast(x), dense(k.forward, x));
		EXPECT_EQ(inverse_fast(x), dense(k.inverse_int, x));
	}
}

TEST(FastAlgorithms, MatchDenseProductOnRandomVectors) {
	const auto k = proposed_kernel();
	std::mt19937_64 rng(2024);
	std::uniform_int_distribution<long long> d(-255, 255);
	for (int trial = 0; trial < 10000; ++trial) {
		Vec8<long long> x;
		for (auto &v : x)
			v = d(rng);
		ASSERT_EQ(forward_fast(x), dense(k.forward, x));
		ASSERT_EQ(inverse_fast(x), dense(k.inverse_int, x));
	}
}

TEST(FastAlgorithms, FloatingInstantiationAgrees) {
	std::mt19937_64 rng(5);
	std::uniform_int_distribution<int> d(-1000, 1000);
	for (int trial = 0; trial < 200; ++trial) {
		Vec8<long long> xi;
		Vec8<double> xd;
		for (std::size_t i = 0; i < 8; ++i)
			xd[i] = static_cast<double>(xi[i] = d(rng));
		const auto fi = forward_fast(xi), ii = inverse_fast(xi);
		const auto fd = forward_fast(xd), id = inverse_fast(xd);
		for (std::size_t i = 0; i < 8; ++i) {
			EXPECT_EQ(static_cast<double>(fi[i]), fd[i]);
			EXPECT_EQ(static_cast<double>(ii[i]), id[i]);
		}
	}
}

TEST(FastAlgorithms, ExactRoundTripThroughD1) {
	// x = T1 D1 T* x; with D1 = diag(5, 4, 5, 4, 10, 4, 5, 4) / 40 everything stays integral
	const Vec8<long long> scale40{5, 4, 5, 4, 10, 4, 5, 4};
	std::mt19937_64 rng(99);
	std::uniform_int_distribution<long long> d(-255, 255);
	for (int trial = 0; trial < 2000; ++trial) {
		Vec8<long long> x;
		for (auto &v : x)
			v = d(rng);
		Vec8<long long> y = forward_fast(x);
		for (std::size_t i = 0; i < 8; ++i)
			y[i] *= scale40[i];
		const Vec8<long long> back = inverse_fast(y);
		for (std::size_t i = 0; i < 8; ++i)
			ASSERT_EQ(back[i], 40 * x[i]);
	}
}

TEST(FastAlgorithms, EightBitDynamicRange) {
	std::mt19937 rng(1);
	std::uniform_int_distribution<int> d(0, 255);
	int peak = 0;
	for (int trial = 0; trial < 10000; ++trial) {
		Vec8<int> x;
		for (auto &v : x)
			v = d(rng);
		for (int v : forward_fast(x))
			peak = std::max(peak, std::abs(v));
	}
	Vec8<int> full;
	full.fill(255);
	peak = std::max(peak, forward_fast(full)[0]);
	EXPECT_EQ(peak, 2040);
}

TEST(CountOps, Table) {
	EXPECT_EQ(count_ops(FastAlgorithm::forward), (OpCount{0, 20, 0}));
	EXPECT_EQ(count_ops(FastAlgorithm::inverse), (OpCount{0, 29, 8}));
}

TEST(CountOps, InputIndependent) {
	std::mt19937_64 rng(3);
	std::uniform_int_distribution<long long> d(-1000, 1000);
	for (int trial = 0; trial < 50; ++trial) {
		Vec8<long long> x;
		for (auto &v : x)
			v = d(rng);
		EXPECT_EQ(count_ops(FastAlgorithm::forward, x), count_ops(FastAlgorithm::forward));
		EXPECT_EQ(count_ops(FastAlgorithm::inverse, x), count_ops(FastAlgorithm::inverse));
	}
	EXPECT_EQ(count_ops(FastAlgorithm::inverse, Vec8<long long>{}), count_ops(FastAlgorithm::inverse));
}

TEST(CountOps, CountedArithmeticTallies) {
	using C = Counted<int>;
	C::tally() = {};
	const C a(3), b(4);
	const C c = shift_left(a + b, 1) * (-a);
	EXPECT_EQ(c.value(), -42);
	EXPECT_EQ(C::tally(), (OpCount{1, 1, 1}));
}
