#ifndef DTT_FAST_HPP
#define DTT_FAST_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <type_traits>

namespace dtt {

template <typename T>
using Vec8 = std::array<T, 8>;

/// Multiply by 2^bits. Integer inputs shift, floating inputs scale exactly.
template <typename T>
constexpr T shl(const T &x, int bits) {
	if constexpr (std::is_integral_v<T>)
		return static_cast<T>(x << bits);
	else if constexpr (std::is_floating_point_v<T>)
		return std::ldexp(x, bits);
	else
		return shift_left(x, bits); // ADL hook for instrumented types
}

/// Forward approximate DTT, y = T* x, with 20 additions and no shifts.
///
/// Rows of T* are symmetric (even k) or antisymmetric (odd k) under index
/// reversal, so a butterfly splits the input into sums a and differences b
/// and each half feeds a 4x4 block of +-1/0 entries.
template <typename T>
constexpr Vec8<T> forward_fast(const Vec8<T> &x) {
	const T a0 = x[0] + x[7], a1 = x[1] + x[6], a2 = x[2] + x[5], a3 = x[3] + x[4];
	const T b0 = x[0] - x[7], b1 = x[1] - x[6], b2 = x[2] - x[5], b3 = x[3] - x[4];

	Vec8<T> y;
	y[0] = (a0 + a3) + (a1 + a2);
	y[2] = a0 - a3;
	y[4] = a3 - a1;
	y[6] = a2 - a1;

	y[1] = -(b0 + b1);
	y[3] = (b1 + b2) - b0;
	y[5] = b1 - (b2 + b3);
	y[7] = b3 - b2;
	return y;
}

/// Inverse integer kernel, x = T1 y, with 29 additions and 8 shifts.
/// The D1 (and D*) scaling is left to the caller.
///
/// Columns of T1 with even index are symmetric and odd ones antisymmetric,
/// so x[i] = u[i] + v[i] and x[7-i] = u[i] - v[i], with u driven only by the
/// even coefficients and v only by the odd ones. Factors of 2 are a shift,
/// factors of 3 a shift and an add.
template <typename T>
constexpr Vec8<T> inverse_fast(const Vec8<T> &y) {
	const T &e0 = y[0], &e2 = y[2], &e4 = y[4], &e6 = y[6];
	const T &o1 = y[1], &o3 = y[3], &o5 = y[5], &o7 = y[7];

	// even half
	const T p = e0 - e2;
	const T s = e4 + e6;
	const T d = e4 - e6;
	const T u0 = (e0 + (shl(e2, 1) + e2)) + d;
	const T u1 = p - s;
	const T u2 = (p - e4) + (shl(e6, 1) + e6);
	const T u3 = p + d;

	// odd half
	const T m = o3 - o1;
	const T w = o5 + o7;
	const T v0 = -(((shl(o1, 1) + o1) + shl(o3, 1)) + w);
	const T v1 = shl(m, 1) + w;
	const T v2 = m - shl(w, 1);
	const T v3 = (m - shl(o5, 1)) + (shl(o7, 1) + o7);

	return {u0 + v0, u1 + v1, u2 + v2, u3 + v3, u3 - v3, u2 - v2, u1 - v1, u0 - v0};
}

struct OpCount {
	std::size_t multiplications = 0;
	std::size_t additions = 0; // additions and subtractions
	std::size_t shifts = 0;

	friend bool operator==(const OpCount &, const OpCount &) = default;
};

/// Arithmetic wrapper that tallies every operation into the active counter.
/// Negation is free. Single-threaded use only.
template <typename T>
class Counted {
public:
	Counted() = default;
	Counted(T v) : v_(v) {}

	const T &value() const { return v_; }

	static OpCount &tally() {
		static thread_local OpCount c;
		return c;
	}

	friend Counted operator+(const Counted &a, const Counted &b) {
		++tally().additions;
		return Counted(a.v_ + b.v_);
	}
	friend Counted operator-(const Counted &a, const Counted &b) {
		++tally().additions;
		return Counted(a.v_ - b.v_);
	}
	friend Counted operator*(const Counted &a, const Counted &b) {
		++tally().multiplications;
		return Counted(a.v_ * b.v_);
	}
	friend Counted operator-(const Counted &a) { return Counted(-a.v_); }
	friend Counted shift_left(const Counted &a, int bits) {
		++tally().shifts;
		return Counted(shl(a.v_, bits));
	}

private:
	T v_{};
};

enum class FastAlgorithm { forward, inverse };

/// Operation counts obtained by running the algorithm on counting arithmetic.
inline OpCount count_ops(FastAlgorithm alg, const Vec8<long long> &input = {1, 2, 3, 4, 5, 6, 7, 8}) {
	using C = Counted<long long>;
	Vec8<C> x;
	for (std::size_t i = 0; i < 8; ++i)
		x[i] = C(input[i]);
	C::tally() = {};
	if (alg == FastAlgorithm::forward)
		(void)forward_fast(x);
	else
		(void)inverse_fast(x);
	return C::tally();
}

} // namespace dtt

#endif // DTT_FAST_HPP
