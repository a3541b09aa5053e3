#ifndef DTT_APPROX_HPP
#define DTT_APPROX_HPP

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "dtt/matrix.hpp"
#include "dtt/tchebichef.hpp"

namespace dtt {

/// Column rescaling that equalizes the dynamic range of the 8-point DTT.
inline DiagonalScale d0_scaling() {
	const double a = std::sqrt(6.0 / 7.0);
	const double b = std::sqrt(154.0) / 13.0;
	const double c = std::sqrt(66.0) / 9.0;
	const double d = std::sqrt(858.0) / 35.0;
	return DiagonalScale({a, b, c, d, d, c, b, a});
}

/// T * D0 rescaled so that every column peaks at magnitude exactly 1.
/// D0 on its own brings each column peak to 1/2; the extra factor 2 places
/// the {-1, 0, 1} alphabet on alpha in (0, 3/2).
inline TransformMatrix companded_dtt() {
	TransformMatrix m = scale_cols(dtt_matrix(8), d0_scaling());
	for (std::size_t r = 0; r < m.rows(); ++r)
		for (std::size_t c = 0; c < m.cols(); ++c)
			m(r, c) *= 2.0;
	return m;
}

namespace detail {

inline IntegerKernel round_scaled(const TransformMatrix &m, double alpha) {
	IntegerKernel k(m.rows(), m.cols());
	for (std::size_t r = 0; r < m.rows(); ++r)
		for (std::size_t c = 0; c < m.cols(); ++c)
			// std::round is half-away-from-zero, same as C round() and Matlab round()
			k(r, c) = static_cast<int>(std::round(alpha * m(r, c)));
	return k;
}

inline bool entries_in_unit_alphabet(const IntegerKernel &k) {
	for (int v : k.data())
		if (v < -1 || v > 1)
			return false;
	return true;
}

} // namespace detail

/// Scale-and-round member of the approximation family at parameter alpha.
inline IntegerKernel approx_family(double alpha) {
	if (!(alpha > 0.0 && alpha < 1.5))
		throw std::invalid_argument("approx_family: alpha must lie in (0, 3/2)");
	return detail::round_scaled(companded_dtt(), alpha);
}

/// Maximal run of consecutive admissible grid points sharing one kernel.
struct AlphaRun {
	double lo;
	double hi;
	std::size_t first_index; // grid index of lo (alpha = index * step)
	std::size_t last_index;
	IntegerKernel kernel;
};

struct AlphaSearchResult {
	double grid_step = 0.0;
	std::vector<std::pair<double, IntegerKernel>> admissible;
	std::vector<AlphaRun> runs;
	/// The run that contains the grid point nearest 0.95, if it is admissible.
	std::optional<std::pair<double, double>> optimal_interval;
	std::optional<IntegerKernel> optimal_kernel;
};

/// Exhaustive search over alpha = step, 2 step, ... strictly inside (0, 3/2).
/// A grid point is admissible when its kernel has entries in {-1, 0, 1} and
/// is nonsingular.
inline AlphaSearchResult search_alpha(double grid_step, double anchor = 0.95) {
	if (!(grid_step > 0.0) || !(grid_step < 1.5))
		throw std::invalid_argument("search_alpha: grid step must lie in (0, 3/2)");
	const TransformMatrix base = companded_dtt();
	AlphaSearchResult res;
	res.grid_step = grid_step;

	const auto count = static_cast<std::size_t>(std::ceil(1.5 / grid_step - 1e-9)) - 1;
	const auto anchor_index = static_cast<std::size_t>(std::llround(anchor / grid_step));
	std::optional<std::size_t> anchor_run;

	for (std::size_t i = 1; i <= count; ++i) {
		const double alpha = static_cast<double>(i) * grid_step;
		IntegerKernel k = detail::round_scaled(base, alpha);
		if (!detail::entries_in_unit_alphabet(k) || determinant(k) == 0)
			continue;
		if (!res.runs.empty() && res.runs.back().last_index + 1 == i && res.runs.back().kernel == k) {
			res.runs.back().hi = alpha;
			res.runs.back().last_index = i;
		} else {
			res.runs.push_back({alpha, alpha, i, i, k});
		}
		if (i == anchor_index)
			anchor_run = res.runs.size() - 1;
		res.admissible.emplace_back(alpha, std::move(k));
	}
	if (anchor_run) {
		const AlphaRun &run = res.runs[*anchor_run];
		res.optimal_interval = std::pair{run.lo, run.hi};
		res.optimal_kernel = run.kernel;
	}
	return res;
}

/// d_k = 1 / ||row k||, the diagonal that gives diag(d) * kernel unit-norm rows.
inline DiagonalScale orthogonal_scaling(const IntegerKernel &kernel) {
	if (!kernel.square())
		throw std::invalid_argument("orthogonal_scaling: kernel must be square");
	std::vector<double> d(kernel.rows());
	for (std::size_t r = 0; r < kernel.rows(); ++r) {
		long long norm2 = 0;
		for (int v : kernel.row(r))
			norm2 += static_cast<long long>(v) * v;
		if (norm2 == 0)
			throw std::domain_error("orthogonal_scaling: zero row");
		d[r] = 1.0 / std::sqrt(static_cast<double>(norm2));
	}
	return DiagonalScale(std::move(d));
}

/// pi * ||exact - approx||_F^2
inline double total_energy_error(const TransformMatrix &exact, const TransformMatrix &approx) {
	if (exact.rows() != approx.rows() || exact.cols() != approx.cols())
		throw std::invalid_argument("total_energy_error: dimension mismatch");
	double sum = 0.0;
	for (std::size_t r = 0; r < exact.rows(); ++r)
		for (std::size_t c = 0; c < exact.cols(); ++c) {
			const double d = exact(r, c) - approx(r, c);
			sum += d * d;
		}
	return std::numbers::pi * sum;
}

using Rational = boost::rational<long long>;

/// The proposed multiplierless 8-point DTT approximation.
///
/// forward:       T*, entries in {-1, 0, 1}
/// inverse_int:   T1, with (T*)^-1 = T1 * D1
/// inverse_scale: D1, each entry 1/8, 1/10 or 1/4
/// ortho_scale:   D*, so that D* T* has unit-norm rows
struct ApproxKernel {
	IntegerKernel forward;
	IntegerKernel inverse_int;
	DiagonalScale inverse_scale;
	DiagonalScale ortho_scale;
	std::array<long long, 8> inverse_scale_denominators;

	/// D* T*
	TransformMatrix approximate_transform() const { return scale_rows(ortho_scale, forward); }

	/// T1 D1 (D*)^-1, the exact inverse of approximate_transform().
	TransformMatrix approximate_inverse() const {
		TransformMatrix m = scale_cols(inverse_int, inverse_scale);
		return scale_cols(m, ortho_scale.inverse());
	}

	/// T1 D1, the exact inverse of the integer forward kernel.
	TransformMatrix forward_inverse() const { return scale_cols(inverse_int, inverse_scale); }
};

/// T1 * D1 over the rationals.
inline Matrix<Rational> rational_inverse(const IntegerKernel &inverse_int,
                                         const std::array<long long, 8> &denominators) {
	Matrix<Rational> m(inverse_int.rows(), inverse_int.cols());
	for (std::size_t r = 0; r < m.rows(); ++r)
		for (std::size_t c = 0; c < m.cols(); ++c)
			m(r, c) = Rational(inverse_int(r, c), denominators.at(c));
	return m;
}

/// True when (T1 D1) T* and T* (T1 D1) are both the identity in exact arithmetic.
inline bool verify_rational_inverse(const IntegerKernel &forward, const IntegerKernel &inverse_int,
                                    const std::array<long long, 8> &denominators) {
	const Matrix<Rational> inv = rational_inverse(inverse_int, denominators);
	const Matrix<Rational> fwd = forward.cast<Rational>();
	const auto id = Matrix<Rational>::identity(forward.rows());
	return inv * fwd == id && fwd * inv == id;
}

/// Hard-coded published kernel. Throws std::logic_error if the inverse pair
/// does not multiply to the identity.
inline ApproxKernel proposed_kernel() {
	IntegerKernel forward{
		{1, 1, 1, 1, 1, 1, 1, 1},
		{-1, -1, 0, 0, 0, 0, 1, 1},
		{1, 0, 0, -1, -1, 0, 0, 1},
		{-1, 1, 1, 0, 0, -1, -1, 1},
		{0, -1, 0, 1, 1, 0, -1, 0},
		{0, 1, -1, -1, 1, 1, -1, 0},
		{0, -1, 1, 0, 0, 1, -1, 0},
		{0, 0, -1, 1, -1, 1, 0, 0},
	};
	IntegerKernel inverse_int{
		{1, -3, 3, -2, 1, -1, -1, -1},
		{1, -2, -1, 2, -1, 1, -1, 1},
		{1, -1, -1, 1, -1, -2, 3, -2},
		{1, -1, -1, 1, 1, -2, -1, 3},
		{1, 1, -1, -1, 1, 2, -1, -3},
		{1, 1, -1, -1, -1, 2, 3, 2},
		{1, 2, -1, -2, -1, -1, -1, -1},
		{1, 3, 3, 2, 1, 1, -1, 1},
	};
	const std::array<long long, 8> den{8, 10, 8, 10, 4, 10, 8, 10};
	if (!verify_rational_inverse(forward, inverse_int, den))
		throw std::logic_error("proposed_kernel: T1 * D1 is not the inverse of T*");

	std::vector<double> d1;
	for (long long v : den)
		d1.push_back(1.0 / static_cast<double>(v));
	DiagonalScale ortho = orthogonal_scaling(forward);
	return {std::move(forward), std::move(inverse_int), DiagonalScale(std::move(d1)), std::move(ortho), den};
}

} // namespace dtt

#endif // DTT_APPROX_HPP
