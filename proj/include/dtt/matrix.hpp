#ifndef DTT_MATRIX_HPP
#define DTT_MATRIX_HPP

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace dtt {

/// Small dense row-major matrix. Sized for transform kernels (8x8, up to
/// a few dozen rows), not for general linear algebra.
template <typename T>
class Matrix {
public:
	Matrix() = default;

	Matrix(std::size_t rows, std::size_t cols, T fill = T{})
		: rows_(rows), cols_(cols), data_(rows * cols, fill) {}

	Matrix(std::initializer_list<std::initializer_list<T>> rows) {
		rows_ = rows.size();
		cols_ = rows_ ? rows.begin()->size() : 0;
		data_.reserve(rows_ * cols_);
		for (const auto &row : rows) {
			if (row.size() != cols_)
				throw std::invalid_argument("Matrix: ragged initializer");
			data_.insert(data_.end(), row.begin(), row.end());
		}
	}

	static Matrix identity(std::size_t n) {
		Matrix m(n, n);
		for (std::size_t i = 0; i < n; ++i)
			m(i, i) = T{1};
		return m;
	}

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }
	bool square() const { return rows_ == cols_; }

	T &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
	const T &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

	std::span<T> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
	std::span<const T> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

	std::vector<T> column(std::size_t c) const {
		std::vector<T> out(rows_);
		for (std::size_t r = 0; r < rows_; ++r)
			out[r] = (*this)(r, c);
		return out;
	}

	std::span<const T> data() const { return data_; }

	Matrix transpose() const {
		Matrix t(cols_, rows_);
		for (std::size_t r = 0; r < rows_; ++r)
			for (std::size_t c = 0; c < cols_; ++c)
				t(c, r) = (*this)(r, c);
		return t;
	}

	/// Elementwise conversion, e.g. an integer kernel to doubles.
	template <typename U>
	Matrix<U> cast() const {
		Matrix<U> out(rows_, cols_);
		for (std::size_t r = 0; r < rows_; ++r)
			for (std::size_t c = 0; c < cols_; ++c)
				out(r, c) = static_cast<U>((*this)(r, c));
		return out;
	}

	friend bool operator==(const Matrix &, const Matrix &) = default;

private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<T> data_;
};

using TransformMatrix = Matrix<double>;
using IntegerKernel = Matrix<int>;

template <typename T>
Matrix<T> operator*(const Matrix<T> &a, const Matrix<T> &b) {
	if (a.cols() != b.rows())
		throw std::invalid_argument("Matrix product: dimension mismatch");
	Matrix<T> out(a.rows(), b.cols());
	for (std::size_t i = 0; i < a.rows(); ++i)
		for (std::size_t k = 0; k < a.cols(); ++k) {
			const T aik = a(i, k);
			for (std::size_t j = 0; j < b.cols(); ++j)
				out(i, j) += aik * b(k, j);
		}
	return out;
}

template <typename T>
Matrix<T> operator-(const Matrix<T> &a, const Matrix<T> &b) {
	if (a.rows() != b.rows() || a.cols() != b.cols())
		throw std::invalid_argument("Matrix difference: dimension mismatch");
	Matrix<T> out(a.rows(), a.cols());
	for (std::size_t r = 0; r < a.rows(); ++r)
		for (std::size_t c = 0; c < a.cols(); ++c)
			out(r, c) = a(r, c) - b(r, c);
	return out;
}

/// Matrix-vector product y = m * x.
template <typename T>
std::vector<T> apply(const Matrix<T> &m, std::span<const T> x) {
	if (x.size() != m.cols())
		throw std::invalid_argument("Matrix apply: dimension mismatch");
	std::vector<T> y(m.rows(), T{});
	for (std::size_t r = 0; r < m.rows(); ++r)
		for (std::size_t c = 0; c < m.cols(); ++c)
			y[r] += m(r, c) * x[c];
	return y;
}

inline double max_abs_diff(const TransformMatrix &a, const TransformMatrix &b) {
	if (a.rows() != b.rows() || a.cols() != b.cols())
		throw std::invalid_argument("max_abs_diff: dimension mismatch");
	double worst = 0.0;
	for (std::size_t r = 0; r < a.rows(); ++r)
		for (std::size_t c = 0; c < a.cols(); ++c)
			worst = std::max(worst, std::abs(a(r, c) - b(r, c)));
	return worst;
}

/// Positive diagonal matrix stored as its diagonal.
class DiagonalScale {
public:
	DiagonalScale() = default;

	explicit DiagonalScale(std::vector<double> d) : d_(std::move(d)) {
		for (double v : d_)
			if (!(v > 0.0) || !std::isfinite(v))
				throw std::domain_error("DiagonalScale: entries must be finite and positive");
	}

	std::size_t size() const { return d_.size(); }
	double operator[](std::size_t i) const { return d_[i]; }
	std::span<const double> values() const { return d_; }

	DiagonalScale inverse() const {
		std::vector<double> inv(d_.size());
		for (std::size_t i = 0; i < d_.size(); ++i)
			inv[i] = 1.0 / d_[i];
		return DiagonalScale(std::move(inv));
	}

	TransformMatrix as_matrix() const {
		TransformMatrix m(d_.size(), d_.size());
		for (std::size_t i = 0; i < d_.size(); ++i)
			m(i, i) = d_[i];
		return m;
	}

private:
	std::vector<double> d_;
};

/// diag(d) * m
template <typename T>
TransformMatrix scale_rows(const DiagonalScale &d, const Matrix<T> &m) {
	if (d.size() != m.rows())
		throw std::invalid_argument("scale_rows: dimension mismatch");
	TransformMatrix out(m.rows(), m.cols());
	for (std::size_t r = 0; r < m.rows(); ++r)
		for (std::size_t c = 0; c < m.cols(); ++c)
			out(r, c) = d[r] * static_cast<double>(m(r, c));
	return out;
}

/// m * diag(d)
template <typename T>
TransformMatrix scale_cols(const Matrix<T> &m, const DiagonalScale &d) {
	if (d.size() != m.cols())
		throw std::invalid_argument("scale_cols: dimension mismatch");
	TransformMatrix out(m.rows(), m.cols());
	for (std::size_t r = 0; r < m.rows(); ++r)
		for (std::size_t c = 0; c < m.cols(); ++c)
			out(r, c) = static_cast<double>(m(r, c)) * d[c];
	return out;
}

/// Inverse by Gauss-Jordan elimination with partial pivoting.
/// Throws std::domain_error for (numerically) singular input.
inline TransformMatrix invert(const TransformMatrix &m, double pivot_tol = 1e-12) {
	if (!m.square())
		throw std::invalid_argument("invert: matrix must be square");
	const std::size_t n = m.rows();
	TransformMatrix a = m;
	TransformMatrix inv = TransformMatrix::identity(n);
	for (std::size_t col = 0; col < n; ++col) {
		std::size_t pivot = col;
		for (std::size_t r = col + 1; r < n; ++r)
			if (std::abs(a(r, col)) > std::abs(a(pivot, col)))
				pivot = r;
		if (std::abs(a(pivot, col)) < pivot_tol)
			throw std::domain_error("invert: singular matrix");
		if (pivot != col)
			for (std::size_t c = 0; c < n; ++c) {
				std::swap(a(col, c), a(pivot, c));
				std::swap(inv(col, c), inv(pivot, c));
			}
		const double p = a(col, col);
		for (std::size_t c = 0; c < n; ++c) {
			a(col, c) /= p;
			inv(col, c) /= p;
		}
		for (std::size_t r = 0; r < n; ++r) {
			if (r == col)
				continue;
			const double f = a(r, col);
			if (f == 0.0)
				continue;
			for (std::size_t c = 0; c < n; ++c) {
				a(r, c) -= f * a(col, c);
				inv(r, c) -= f * inv(col, c);
			}
		}
	}
	return inv;
}

/// Determinant of an integer matrix by fraction-free (Bareiss) elimination.
/// Exact for the small kernels handled here.
inline long long determinant(const IntegerKernel &m) {
	if (!m.square())
		throw std::invalid_argument("determinant: matrix must be square");
	const std::size_t n = m.rows();
	if (n == 0)
		return 1;
	Matrix<long long> a = m.cast<long long>();
	long long sign = 1;
	long long prev = 1;
	for (std::size_t k = 0; k + 1 < n; ++k) {
		if (a(k, k) == 0) {
			std::size_t swap = k + 1;
			while (swap < n && a(swap, k) == 0)
				++swap;
			if (swap == n)
				return 0;
			for (std::size_t c = 0; c < n; ++c)
				std::swap(a(k, c), a(swap, c));
			sign = -sign;
		}
		for (std::size_t i = k + 1; i < n; ++i)
			for (std::size_t j = k + 1; j < n; ++j)
				a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
		prev = a(k, k);
	}
	return sign * a(n - 1, n - 1);
}

/// Row-major text rendering, one row per line, fixed precision.
template <typename T>
std::string format_matrix(const Matrix<T> &m, int precision = 6) {
	std::string out;
	char buf[64];
	for (std::size_t r = 0; r < m.rows(); ++r) {
		for (std::size_t c = 0; c < m.cols(); ++c) {
			if constexpr (std::is_integral_v<T>)
				std::snprintf(buf, sizeof buf, "%4lld", static_cast<long long>(m(r, c)));
			else
				std::snprintf(buf, sizeof buf, "%*.*f", precision + 4, precision, static_cast<double>(m(r, c)));
			if (c)
				out += ' ';
			out += buf;
		}
		out += '\n';
	}
	return out;
}

} // namespace dtt

#endif // DTT_MATRIX_HPP
