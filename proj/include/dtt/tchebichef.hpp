#ifndef DTT_TCHEBICHEF_HPP
#define DTT_TCHEBICHEF_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "dtt/matrix.hpp"

namespace dtt {

/// Rising (Pochhammer) factorial a(a+1)...(a+k-1); 1 for k == 0.
inline double ascending_factorial(double a, unsigned k) {
	double p = 1.0;
	for (unsigned i = 0; i < k; ++i)
		p *= a + static_cast<double>(i);
	return p;
}

namespace detail {

inline bool is_nonpositive_integer(double v) {
	return v <= 0.0 && std::floor(v) == v;
}

} // namespace detail

/// Terminating generalized hypergeometric series 3F2(a1, a2, a3; b1, b2; z).
///
/// At least one of a1, a2 must be a nonpositive integer; the sum runs up to
/// the smallest such -a inclusive. Throws std::domain_error for a series that
/// does not terminate or whose denominator vanishes before termination.
inline double hypergeom_3f2_terminating(double a1, double a2, double a3,
                                        double b1, double b2, double z) {
	long last = -1;
	for (double a : {a1, a2})
		if (detail::is_nonpositive_integer(a)) {
			const long n = static_cast<long>(-a);
			last = last < 0 ? n : std::min(last, n);
		}
	if (last < 0)
		throw std::domain_error("hypergeom_3f2_terminating: series does not terminate");

	double sum = 0.0;
	double term = 1.0;
	for (long j = 0; j <= last; ++j) {
		sum += term;
		if (j == last)
			break;
		const double dj = static_cast<double>(j);
		const double den = (b1 + dj) * (b2 + dj) * (dj + 1.0);
		if (den == 0.0)
			throw std::domain_error("hypergeom_3f2_terminating: lower parameter hits a nonpositive integer");
		term *= (a1 + dj) * (a2 + dj) * (a3 + dj) * z / den;
	}
	return sum;
}

/// Exact orthonormal N-point discrete Tchebichef transform matrix, rows are
/// the sampled polynomials of increasing degree.
inline TransformMatrix dtt_matrix(std::size_t n) {
	if (n == 0)
		throw std::invalid_argument("dtt_matrix: order must be positive");
	const double N = static_cast<double>(n);
	TransformMatrix t(n, n);
	for (std::size_t k = 0; k < n; ++k) {
		const double dk = static_cast<double>(k);
		// (N-k-1)! / (N+k)! == 1 / (N-k)_{2k+1}
		const double norm = std::sqrt((2.0 * dk + 1.0) / ascending_factorial(N - dk, 2 * static_cast<unsigned>(k) + 1));
		const double lead = ascending_factorial(1.0 - N, static_cast<unsigned>(k));
		for (std::size_t m = 0; m < n; ++m) {
			const double dm = static_cast<double>(m);
			t(k, m) = norm * lead * hypergeom_3f2_terminating(-dk, -dm, 1.0 + dk, 1.0, 1.0 - N, 1.0);
		}
	}
	return t;
}

/// The 8-point DTT written as F * T0: a positive diagonal and a small-integer kernel.
struct ExactFactorization {
	DiagonalScale scale;  // F
	IntegerKernel kernel; // T0
};

inline ExactFactorization exact_factorization_8() {
	IntegerKernel t0{
		{1, 1, 1, 1, 1, 1, 1, 1},
		{-7, -5, -3, -1, 1, 3, 5, 7},
		{7, 1, -3, -5, -5, -3, 1, 7},
		{-7, 5, 7, 3, -3, -7, -5, 7},
		{7, -13, -3, 9, 9, -3, -13, 7},
		{-7, 23, -17, -15, 15, 17, -23, 7},
		{1, -5, 9, -5, -5, 9, -5, 1},
		{-1, 7, -21, 35, -35, 21, -7, 1},
	};
	std::vector<double> f;
	for (double v : {2.0, 42.0, 42.0, 66.0, 154.0, 546.0, 66.0, 858.0})
		f.push_back(0.5 / std::sqrt(v));
	return {DiagonalScale(std::move(f)), std::move(t0)};
}

} // namespace dtt

#endif // DTT_TCHEBICHEF_HPP
