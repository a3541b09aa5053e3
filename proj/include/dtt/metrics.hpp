#ifndef DTT_METRICS_HPP
#define DTT_METRICS_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "dtt/image.hpp"
#include "dtt/matrix.hpp"

namespace dtt {

/// Real-valued image plane, rows x cols == height x width.
using Plane = Matrix<double>;

inline Plane to_plane(const GrayImage &img) {
	Plane p(img.height(), img.width());
	for (std::size_t y = 0; y < img.height(); ++y)
		for (std::size_t x = 0; x < img.width(); ++x)
			p(y, x) = img(x, y);
	return p;
}

namespace detail {

inline void require_same_size(const GrayImage &a, const GrayImage &b, const char *who) {
	if (a.width() != b.width() || a.height() != b.height())
		throw std::invalid_argument(std::string(who) + ": image dimensions differ");
}

// Separable correlation with 'valid' extent.
inline Plane correlate_valid(const Plane &in, const std::vector<double> &k) {
	const std::size_t n = k.size();
	const std::size_t oh = in.rows() - n + 1, ow = in.cols() - n + 1;
	Plane tmp(in.rows(), ow);
	for (std::size_t y = 0; y < in.rows(); ++y)
		for (std::size_t x = 0; x < ow; ++x) {
			double s = 0.0;
			for (std::size_t i = 0; i < n; ++i)
				s += k[i] * in(y, x + i);
			tmp(y, x) = s;
		}
	Plane out(oh, ow);
	for (std::size_t y = 0; y < oh; ++y)
		for (std::size_t x = 0; x < ow; ++x) {
			double s = 0.0;
			for (std::size_t i = 0; i < n; ++i)
				s += k[i] * tmp(y + i, x);
			out(y, x) = s;
		}
	return out;
}

// Normalized 1-D Gaussian of the given length centred at (len - 1) / 2.
inline std::vector<double> gaussian_taps(std::size_t len, double sigma) {
	std::vector<double> g(len);
	const double centre = (static_cast<double>(len) - 1.0) / 2.0;
	double sum = 0.0;
	for (std::size_t i = 0; i < len; ++i) {
		const double x = static_cast<double>(i) - centre;
		g[i] = std::exp(-x * x / (2.0 * sigma * sigma));
		sum += g[i];
	}
	for (double &v : g)
		v /= sum;
	return g;
}

inline Plane elementwise_product(const Plane &a, const Plane &b) {
	Plane out(a.rows(), a.cols());
	for (std::size_t r = 0; r < a.rows(); ++r)
		for (std::size_t c = 0; c < a.cols(); ++c)
			out(r, c) = a(r, c) * b(r, c);
	return out;
}

} // namespace detail

/// Mean structural similarity with an 11x11 Gaussian window (sigma 1.5),
/// K1 = 0.01, K2 = 0.03, L = 255, over valid window positions only.
inline double ssim(const GrayImage &a, const GrayImage &b) {
	detail::require_same_size(a, b, "ssim");
	constexpr std::size_t win = 11;
	if (a.width() < win || a.height() < win)
		throw std::invalid_argument("ssim: images must be at least 11x11");
	constexpr double c1 = (0.01 * 255.0) * (0.01 * 255.0);
	constexpr double c2 = (0.03 * 255.0) * (0.03 * 255.0);

	const auto g = detail::gaussian_taps(win, 1.5);
	const Plane pa = to_plane(a), pb = to_plane(b);
	const Plane mu_a = detail::correlate_valid(pa, g);
	const Plane mu_b = detail::correlate_valid(pb, g);
	const Plane e_aa = detail::correlate_valid(detail::elementwise_product(pa, pa), g);
	const Plane e_bb = detail::correlate_valid(detail::elementwise_product(pb, pb), g);
	const Plane e_ab = detail::correlate_valid(detail::elementwise_product(pa, pb), g);

	// every expression is written so that swapping a and b gives bitwise identical results
	double total = 0.0;
	for (std::size_t y = 0; y < mu_a.rows(); ++y) {
		double row = 0.0;
		for (std::size_t x = 0; x < mu_a.cols(); ++x) {
			const double ma = mu_a(y, x), mb = mu_b(y, x);
			const double mab = ma * mb;
			const double var_a = e_aa(y, x) - ma * ma;
			const double var_b = e_bb(y, x) - mb * mb;
			const double cov = e_ab(y, x) - mab;
			const double num = (2.0 * mab + c1) * (2.0 * cov + c2);
			const double den = (ma * ma + mb * mb + c1) * (var_a + var_b + c2);
			row += num / den;
		}
		total += row;
	}
	return total / static_cast<double>(mu_a.rows() * mu_a.cols());
}

namespace srsim {

/// Constants of the spectral-residual similarity index.
inline constexpr double saliency_c = 0.40;
inline constexpr double gradient_c = 225.0;
inline constexpr double gradient_exponent = 0.50;
inline constexpr double saliency_scale = 0.25;
inline constexpr std::size_t log_amplitude_box = 3;
inline constexpr std::size_t smoothing_size = 10;
inline constexpr double smoothing_sigma = 3.8;

namespace detail {

inline double cubic(double x) {
	const double ax = std::abs(x), ax2 = ax * ax, ax3 = ax2 * ax;
	if (ax <= 1.0)
		return 1.5 * ax3 - 2.5 * ax2 + 1.0;
	if (ax <= 2.0)
		return -0.5 * ax3 + 2.5 * ax2 - 4.0 * ax + 2.0;
	return 0.0;
}

struct Contribution {
	std::vector<std::size_t> index;
	std::vector<double> weight;
};

// Bicubic resampling weights for one axis; antialiased when shrinking, with
// symmetric boundary reflection.
inline std::vector<Contribution> contributions(std::size_t in_len, std::size_t out_len, double scale) {
	const bool shrink = scale < 1.0;
	const double width = shrink ? 4.0 / scale : 4.0;
	const auto taps = static_cast<std::size_t>(std::ceil(width)) + 2;
	const auto n = static_cast<long>(in_len);
	std::vector<Contribution> out(out_len);
	for (std::size_t o = 0; o < out_len; ++o) {
		// 1-based output coordinate mapped into 1-based input coordinates
		const double u = static_cast<double>(o + 1) / scale + 0.5 * (1.0 - 1.0 / scale);
		const auto left = static_cast<long>(std::floor(u - width / 2.0));
		double sum = 0.0;
		Contribution &c = out[o];
		for (std::size_t t = 0; t < taps; ++t) {
			const long idx = left + static_cast<long>(t);
			const double dist = u - static_cast<double>(idx);
			const double w = shrink ? scale * cubic(scale * dist) : cubic(dist);
			if (w == 0.0)
				continue;
			long m = (idx - 1) % (2 * n);
			if (m < 0)
				m += 2 * n;
			const long src = m < n ? m : 2 * n - 1 - m;
			c.index.push_back(static_cast<std::size_t>(src));
			c.weight.push_back(w);
			sum += w;
		}
		for (double &w : c.weight)
			w /= sum;
	}
	return out;
}

inline Plane resize_bicubic(const Plane &in, std::size_t out_rows, std::size_t out_cols, double row_scale, double col_scale) {
	const auto rc = contributions(in.rows(), out_rows, row_scale);
	const auto cc = contributions(in.cols(), out_cols, col_scale);
	Plane tmp(out_rows, in.cols());
	for (std::size_t r = 0; r < out_rows; ++r)
		for (std::size_t c = 0; c < in.cols(); ++c) {
			double s = 0.0;
			for (std::size_t t = 0; t < rc[r].index.size(); ++t)
				s += rc[r].weight[t] * in(rc[r].index[t], c);
			tmp(r, c) = s;
		}
	Plane out(out_rows, out_cols);
	for (std::size_t r = 0; r < out_rows; ++r)
		for (std::size_t c = 0; c < out_cols; ++c) {
			double s = 0.0;
			for (std::size_t t = 0; t < cc[c].index.size(); ++t)
				s += cc[c].weight[t] * tmp(r, cc[c].index[t]);
			out(r, c) = s;
		}
	return out;
}

using cplx = std::complex<double>;

inline bool is_pow2(std::size_t n) { return n && !(n & (n - 1)); }

// In-place 1-D DFT; radix-2 for powers of two, direct summation otherwise.
inline void dft(std::vector<cplx> &a, bool inverse) {
	const std::size_t n = a.size();
	const double sign = inverse ? 1.0 : -1.0;
	if (!is_pow2(n)) {
		std::vector<cplx> out(n);
		for (std::size_t k = 0; k < n; ++k) {
			cplx s = 0.0;
			for (std::size_t j = 0; j < n; ++j) {
				const double ang = sign * 2.0 * std::numbers::pi * static_cast<double>((k * j) % n) / static_cast<double>(n);
				s += a[j] * cplx(std::cos(ang), std::sin(ang));
			}
			out[k] = s;
		}
		a = std::move(out);
	} else {
		for (std::size_t i = 1, j = 0; i < n; ++i) {
			std::size_t bit = n >> 1;
			for (; j & bit; bit >>= 1)
				j ^= bit;
			j ^= bit;
			if (i < j)
				std::swap(a[i], a[j]);
		}
		for (std::size_t len = 2; len <= n; len <<= 1) {
			const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
			const cplx wl(std::cos(ang), std::sin(ang));
			for (std::size_t i = 0; i < n; i += len) {
				cplx w = 1.0;
				for (std::size_t j = 0; j < len / 2; ++j) {
					const cplx u = a[i + j], v = a[i + j + len / 2] * w;
					a[i + j] = u + v;
					a[i + j + len / 2] = u - v;
					w *= wl;
				}
			}
		}
	}
	if (inverse)
		for (cplx &v : a)
			v /= static_cast<double>(n);
}

inline void dft2(Matrix<cplx> &m, bool inverse) {
	std::vector<cplx> buf(m.cols());
	for (std::size_t r = 0; r < m.rows(); ++r) {
		std::copy(m.row(r).begin(), m.row(r).end(), buf.begin());
		dft(buf, inverse);
		std::copy(buf.begin(), buf.end(), m.row(r).begin());
	}
	buf.resize(m.rows());
	for (std::size_t c = 0; c < m.cols(); ++c) {
		for (std::size_t r = 0; r < m.rows(); ++r)
			buf[r] = m(r, c);
		dft(buf, inverse);
		for (std::size_t r = 0; r < m.rows(); ++r)
			m(r, c) = buf[r];
	}
}

// Correlation with a k x k box or Gaussian, output the size of the input.
// 'replicate' extends edges, otherwise zero padding. Kernel anchor sits at
// floor((k - 1) / 2).
inline Plane filter_same(const Plane &in, const std::vector<double> &taps, bool replicate) {
	const long k = static_cast<long>(taps.size());
	const long anchor = (k - 1) / 2;
	const long rows = static_cast<long>(in.rows()), cols = static_cast<long>(in.cols());
	auto sample = [&](long r, long c) -> double {
		if (replicate)
			return in(static_cast<std::size_t>(std::clamp(r, 0L, rows - 1)), static_cast<std::size_t>(std::clamp(c, 0L, cols - 1)));
		if (r < 0 || r >= rows || c < 0 || c >= cols)
			return 0.0;
		return in(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
	};
	// both kernels used here are separable and symmetric
	Plane tmp(in.rows(), in.cols());
	for (long r = 0; r < rows; ++r)
		for (long c = 0; c < cols; ++c) {
			double s = 0.0;
			for (long i = 0; i < k; ++i)
				s += taps[static_cast<std::size_t>(i)] * sample(r, c + i - anchor);
			tmp(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = s;
		}
	Plane out(in.rows(), in.cols());
	auto sample_tmp = [&](long r, long c) -> double {
		if (replicate)
			return tmp(static_cast<std::size_t>(std::clamp(r, 0L, rows - 1)), static_cast<std::size_t>(c));
		if (r < 0 || r >= rows)
			return 0.0;
		return tmp(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
	};
	for (long r = 0; r < rows; ++r)
		for (long c = 0; c < cols; ++c) {
			double s = 0.0;
			for (long i = 0; i < k; ++i)
				s += taps[static_cast<std::size_t>(i)] * sample_tmp(r + i - anchor, c);
			out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = s;
		}
	return out;
}

inline void rescale_unit(Plane &p) {
	const auto [lo, hi] = std::minmax_element(p.data().begin(), p.data().end());
	const double mn = *lo, mx = *hi;
	for (std::size_t r = 0; r < p.rows(); ++r)
		for (std::size_t c = 0; c < p.cols(); ++c)
			p(r, c) = mx > mn ? (p(r, c) - mn) / (mx - mn) : 0.0;
}

// Box average (zero padded) followed by decimation, for large inputs.
inline Plane downsample(const Plane &in, std::size_t factor) {
	if (factor <= 1)
		return in;
	const long f = static_cast<long>(factor);
	const long lead = f / 2 - f + 1; // first tap offset of a centred 'same' box
	const std::size_t rows = (in.rows() + factor - 1) / factor;
	const std::size_t cols = (in.cols() + factor - 1) / factor;
	Plane out(rows, cols);
	for (std::size_t r = 0; r < rows; ++r)
		for (std::size_t c = 0; c < cols; ++c) {
			double s = 0.0;
			for (long i = 0; i < f; ++i)
				for (long j = 0; j < f; ++j) {
					const long y = static_cast<long>(r * factor) + lead + i;
					const long x = static_cast<long>(c * factor) + lead + j;
					if (y >= 0 && x >= 0 && y < static_cast<long>(in.rows()) && x < static_cast<long>(in.cols()))
						s += in(static_cast<std::size_t>(y), static_cast<std::size_t>(x));
				}
			out(r, c) = s / static_cast<double>(f * f);
		}
	return out;
}

} // namespace detail

/// Spectral-residual visual saliency map, same size as the input, values in [0, 1].
inline Plane saliency_map(const Plane &img) {
	const auto small_rows = static_cast<std::size_t>(std::ceil(saliency_scale * static_cast<double>(img.rows())));
	const auto small_cols = static_cast<std::size_t>(std::ceil(saliency_scale * static_cast<double>(img.cols())));
	const Plane small = detail::resize_bicubic(img, small_rows, small_cols, saliency_scale, saliency_scale);

	Matrix<detail::cplx> spec(small.rows(), small.cols());
	for (std::size_t r = 0; r < small.rows(); ++r)
		for (std::size_t c = 0; c < small.cols(); ++c)
			spec(r, c) = small(r, c);
	detail::dft2(spec, false);

	Plane log_amp(spec.rows(), spec.cols());
	Plane phase(spec.rows(), spec.cols());
	for (std::size_t r = 0; r < spec.rows(); ++r)
		for (std::size_t c = 0; c < spec.cols(); ++c) {
			// floor keeps log finite for exactly vanishing bins
			log_amp(r, c) = std::log(std::max(std::abs(spec(r, c)), 1e-12));
			phase(r, c) = std::arg(spec(r, c));
		}
	const std::vector<double> box(log_amplitude_box, 1.0 / static_cast<double>(log_amplitude_box));
	const Plane smooth_amp = detail::filter_same(log_amp, box, true);
	for (std::size_t r = 0; r < spec.rows(); ++r)
		for (std::size_t c = 0; c < spec.cols(); ++c)
			spec(r, c) = std::exp(detail::cplx(log_amp(r, c) - smooth_amp(r, c), phase(r, c)));
	detail::dft2(spec, true);

	Plane sal(spec.rows(), spec.cols());
	for (std::size_t r = 0; r < spec.rows(); ++r)
		for (std::size_t c = 0; c < spec.cols(); ++c)
			sal(r, c) = std::norm(spec(r, c));
	sal = detail::filter_same(sal, ::dtt::detail::gaussian_taps(smoothing_size, smoothing_sigma), false);
	detail::rescale_unit(sal);

	const double row_scale = static_cast<double>(img.rows()) / static_cast<double>(sal.rows());
	const double col_scale = static_cast<double>(img.cols()) / static_cast<double>(sal.cols());
	return detail::resize_bicubic(sal, img.rows(), img.cols(), row_scale, col_scale);
}

/// Gradient magnitude from the 3x3 Scharr-style operator (3, 10, 3) / 16.
inline Plane gradient_magnitude(const Plane &img) {
	const long rows = static_cast<long>(img.rows()), cols = static_cast<long>(img.cols());
	auto px = [&](long r, long c) -> double {
		if (r < 0 || r >= rows || c < 0 || c >= cols)
			return 0.0;
		return img(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
	};
	Plane g(img.rows(), img.cols());
	for (long r = 0; r < rows; ++r)
		for (long c = 0; c < cols; ++c) {
			const double gx = (3.0 * (px(r - 1, c - 1) - px(r - 1, c + 1)) + 10.0 * (px(r, c - 1) - px(r, c + 1)) +
			                   3.0 * (px(r + 1, c - 1) - px(r + 1, c + 1))) / 16.0;
			const double gy = (3.0 * (px(r - 1, c - 1) - px(r + 1, c - 1)) + 10.0 * (px(r - 1, c) - px(r + 1, c)) +
			                   3.0 * (px(r - 1, c + 1) - px(r + 1, c + 1))) / 16.0;
			g(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = std::sqrt(gx * gx + gy * gy);
		}
	return g;
}

} // namespace srsim

/// Spectral-residual based similarity: saliency similarity times gradient
/// similarity^0.5, pooled with max-saliency weighting. Inputs with a side of
/// 512 or more are first box-averaged and decimated by round(min side / 256).
inline double sr_sim(const GrayImage &a, const GrayImage &b) {
	detail::require_same_size(a, b, "sr_sim");
	const std::size_t min_side = std::min(a.width(), a.height());
	const auto factor = std::max<std::size_t>(1, static_cast<std::size_t>(std::lround(static_cast<double>(min_side) / 256.0)));
	const Plane ya = srsim::detail::downsample(to_plane(a), factor);
	const Plane yb = srsim::detail::downsample(to_plane(b), factor);
	if (ya.rows() < 4 || ya.cols() < 4)
		throw std::invalid_argument("sr_sim: image too small");

	const Plane sa = srsim::saliency_map(ya), sb = srsim::saliency_map(yb);
	const Plane ga = srsim::gradient_magnitude(ya), gb = srsim::gradient_magnitude(yb);

	double weighted = 0.0, weight_sum = 0.0;
	for (std::size_t r = 0; r < ya.rows(); ++r)
		for (std::size_t c = 0; c < ya.cols(); ++c) {
			const double s1 = sa(r, c), s2 = sb(r, c);
			const double g1 = ga(r, c), g2 = gb(r, c);
			const double sal_sim = (2.0 * (s1 * s2) + srsim::saliency_c) / (s1 * s1 + s2 * s2 + srsim::saliency_c);
			const double grad_sim = (2.0 * (g1 * g2) + srsim::gradient_c) / (g1 * g1 + g2 * g2 + srsim::gradient_c);
			const double w = std::max(s1, s2);
			weighted += sal_sim * std::pow(grad_sim, srsim::gradient_exponent) * w;
			weight_sum += w;
		}
	if (weight_sum == 0.0)
		throw std::domain_error("sr_sim: saliency maps vanish everywhere");
	return weighted / weight_sum;
}

/// Mean squared error. Not reported by the tools; used by tests.
inline double mse(const GrayImage &a, const GrayImage &b) {
	detail::require_same_size(a, b, "mse");
	double s = 0.0;
	for (std::size_t i = 0; i < a.samples().size(); ++i) {
		const double d = static_cast<double>(a.samples()[i]) - static_cast<double>(b.samples()[i]);
		s += d * d;
	}
	return s / static_cast<double>(a.samples().size());
}

} // namespace dtt

#endif // DTT_METRICS_HPP
