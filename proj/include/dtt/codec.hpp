#ifndef DTT_CODEC_HPP
#define DTT_CODEC_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

#include "dtt/approx.hpp"
#include "dtt/fast.hpp"
#include "dtt/image.hpp"
#include "dtt/matrix.hpp"
#include "dtt/tchebichef.hpp"

namespace dtt {

/// 8x8 tile, row-major. Used for both pixel and coefficient blocks.
using Block8 = std::array<double, 64>;

inline double &at(Block8 &b, std::size_t row, std::size_t col) { return b[row * 8 + col]; }
inline double at(const Block8 &b, std::size_t row, std::size_t col) { return b[row * 8 + col]; }

namespace detail {

inline void require_8x8(const TransformMatrix &m) {
	if (m.rows() != 8 || m.cols() != 8)
		throw std::invalid_argument("block transform: kernel must be 8x8");
}

// left * b * right^T
inline Block8 sandwich(const TransformMatrix &left, const Block8 &b, const TransformMatrix &right) {
	Block8 tmp{};
	for (std::size_t i = 0; i < 8; ++i)
		for (std::size_t k = 0; k < 8; ++k) {
			const double l = left(i, k);
			for (std::size_t j = 0; j < 8; ++j)
				tmp[i * 8 + j] += l * b[k * 8 + j];
		}
	Block8 out{};
	for (std::size_t i = 0; i < 8; ++i)
		for (std::size_t j = 0; j < 8; ++j) {
			double s = 0.0;
			for (std::size_t k = 0; k < 8; ++k)
				s += tmp[i * 8 + k] * right(j, k);
			out[i * 8 + j] = s;
		}
	return out;
}

} // namespace detail

/// B = M A M^T
inline Block8 transform_block_2d(const Block8 &block, const TransformMatrix &kernel) {
	detail::require_8x8(kernel);
	return detail::sandwich(kernel, block, kernel);
}

/// A = M^-1 B M^-T for the forward kernel M. Throws std::domain_error when M is singular.
inline Block8 inverse_block_2d(const Block8 &coeffs, const TransformMatrix &kernel) {
	detail::require_8x8(kernel);
	const TransformMatrix inv = invert(kernel);
	return detail::sandwich(inv, coeffs, inv);
}

/// A = S B S^T for an explicit synthesis matrix S (e.g. T^T, or T1 D1 (D*)^-1).
inline Block8 synthesize_block_2d(const Block8 &coeffs, const TransformMatrix &synthesis) {
	detail::require_8x8(synthesis);
	return detail::sandwich(synthesis, coeffs, synthesis);
}

/// Standard JPEG zigzag order; entry i is the (row, col) of the i-th scanned coefficient.
inline constexpr std::array<std::pair<std::uint8_t, std::uint8_t>, 64> zigzag_order = [] {
	std::array<std::pair<std::uint8_t, std::uint8_t>, 64> order{};
	std::size_t idx = 0;
	for (int s = 0; s <= 14; ++s) {
		const int lo = std::max(0, s - 7);
		const int hi = std::min(s, 7);
		for (int step = 0; step <= hi - lo; ++step) {
			// odd diagonals run down-left, even diagonals up-right
			const int row = (s % 2) ? lo + step : hi - step;
			order[idx++] = {static_cast<std::uint8_t>(row), static_cast<std::uint8_t>(s - row)};
		}
	}
	return order;
}();

inline std::array<double, 64> zigzag_scan(const Block8 &coeffs) {
	std::array<double, 64> out;
	for (std::size_t i = 0; i < 64; ++i)
		out[i] = at(coeffs, zigzag_order[i].first, zigzag_order[i].second);
	return out;
}

inline Block8 zigzag_unscan(const std::array<double, 64> &scanned) {
	Block8 out;
	for (std::size_t i = 0; i < 64; ++i)
		at(out, zigzag_order[i].first, zigzag_order[i].second) = scanned[i];
	return out;
}

/// Number of leading zigzag coefficients kept per block.
class RetentionSpec {
public:
	explicit RetentionSpec(int r) : r_(r) {
		if (r < 1 || r > 64)
			throw std::out_of_range("RetentionSpec: r must lie in 1..64");
	}
	int r() const { return r_; }

private:
	int r_;
};

inline std::array<double, 64> retain(std::array<double, 64> scanned, RetentionSpec spec) {
	std::fill(scanned.begin() + spec.r(), scanned.end(), 0.0);
	return scanned;
}

enum class KernelId { exact_dtt, proposed };

inline std::string_view to_string(KernelId k) {
	return k == KernelId::exact_dtt ? "exact_dtt" : "proposed";
}

inline KernelId parse_kernel_id(std::string_view s) {
	if (s == "exact_dtt" || s == "exact" || s == "dtt")
		return KernelId::exact_dtt;
	if (s == "proposed")
		return KernelId::proposed;
	throw std::invalid_argument("unsupported kernel id: " + std::string(s));
}

/// Per-block forward/inverse pair for one kernel. Forward and inverse are
/// exact inverses of each other before retention.
class BlockCodec {
public:
	explicit BlockCodec(KernelId id) : id_(id) {
		if (id_ == KernelId::exact_dtt) {
			exact_ = dtt_matrix(8);
			exact_t_ = exact_.transpose();
		} else {
			const ApproxKernel k = proposed_kernel();
			for (std::size_t i = 0; i < 8; ++i)
				d1_[i] = k.inverse_scale[i];
		}
	}

	KernelId id() const { return id_; }

	Block8 forward(const Block8 &a) const {
		if (id_ == KernelId::exact_dtt)
			return detail::sandwich(exact_, a, exact_);
		// T* on columns then rows; scaling folded into the inverse
		return separable(a, [](const Vec8<double> &v) { return forward_fast(v); });
	}

	Block8 inverse(const Block8 &b) const {
		if (id_ == KernelId::exact_dtt)
			return detail::sandwich(exact_t_, b, exact_t_);
		// (T1 D1) B (T1 D1)^T = T1 (D1 B D1) T1^T
		Block8 scaled = b;
		for (std::size_t i = 0; i < 8; ++i)
			for (std::size_t j = 0; j < 8; ++j)
				at(scaled, i, j) *= d1_[i] * d1_[j];
		return separable(scaled, [](const Vec8<double> &v) { return inverse_fast(v); });
	}

private:
	template <typename F>
	static Block8 separable(const Block8 &in, F &&f) {
		Block8 tmp;
		for (std::size_t c = 0; c < 8; ++c) {
			Vec8<double> col;
			for (std::size_t r = 0; r < 8; ++r)
				col[r] = at(in, r, c);
			const Vec8<double> out = f(col);
			for (std::size_t r = 0; r < 8; ++r)
				at(tmp, r, c) = out[r];
		}
		Block8 res;
		for (std::size_t r = 0; r < 8; ++r) {
			Vec8<double> row;
			std::copy_n(tmp.begin() + static_cast<std::ptrdiff_t>(r * 8), 8, row.begin());
			const Vec8<double> out = f(row);
			std::copy(out.begin(), out.end(), res.begin() + static_cast<std::ptrdiff_t>(r * 8));
		}
		return res;
	}

	KernelId id_;
	TransformMatrix exact_;
	TransformMatrix exact_t_;
	std::array<double, 8> d1_{};
};

/// Forward 2-D transform, zigzag, keep r, unscan, inverse 2-D for one block.
inline Block8 compress_block(const Block8 &a, const BlockCodec &codec, RetentionSpec spec) {
	return codec.inverse(zigzag_unscan(retain(zigzag_scan(codec.forward(a)), spec)));
}

/// Block-wise compression of an 8-bit image. Dimensions that are not a
/// multiple of 8 are edge-replicated for processing and cropped back.
/// No level shift is applied. Output samples are rounded half away from zero
/// and clamped to 0..255.
inline GrayImage compress_image(const GrayImage &img, KernelId kernel, RetentionSpec spec) {
	const BlockCodec codec(kernel);
	const std::size_t w = img.width(), h = img.height();
	const std::size_t pw = (w + 7) / 8 * 8, ph = (h + 7) / 8 * 8;
	GrayImage out(w, h);
	for (std::size_t by = 0; by < ph; by += 8)
		for (std::size_t bx = 0; bx < pw; bx += 8) {
			Block8 a;
			for (std::size_t r = 0; r < 8; ++r)
				for (std::size_t c = 0; c < 8; ++c)
					at(a, r, c) = img(std::min(bx + c, w - 1), std::min(by + r, h - 1));
			const Block8 rec = compress_block(a, codec, spec);
			for (std::size_t r = 0; r < 8 && by + r < h; ++r)
				for (std::size_t c = 0; c < 8 && bx + c < w; ++c) {
					const double v = std::clamp(std::round(at(rec, r, c)), 0.0, 255.0);
					out(bx + c, by + r) = static_cast<std::uint8_t>(v);
				}
		}
	return out;
}

} // namespace dtt

#endif // DTT_CODEC_HPP
