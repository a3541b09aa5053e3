#ifndef DTT_IMAGE_HPP
#define DTT_IMAGE_HPP

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <istream>
#include <iterator>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dtt {

/// Unreadable or malformed image data.
struct ImageError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

/// 8-bit grayscale image, row-major.
class GrayImage {
public:
	GrayImage() = default;

	GrayImage(std::size_t width, std::size_t height, std::uint8_t fill = 0)
		: width_(width), height_(height), samples_(width * height, fill) {
		if (width == 0 || height == 0)
			throw std::invalid_argument("GrayImage: dimensions must be positive");
	}

	GrayImage(std::size_t width, std::size_t height, std::vector<std::uint8_t> samples)
		: width_(width), height_(height), samples_(std::move(samples)) {
		if (width == 0 || height == 0)
			throw std::invalid_argument("GrayImage: dimensions must be positive");
		if (samples_.size() != width * height)
			throw std::invalid_argument("GrayImage: sample count does not match dimensions");
	}

	std::size_t width() const { return width_; }
	std::size_t height() const { return height_; }

	std::uint8_t &operator()(std::size_t x, std::size_t y) { return samples_[y * width_ + x]; }
	std::uint8_t operator()(std::size_t x, std::size_t y) const { return samples_[y * width_ + x]; }

	const std::vector<std::uint8_t> &samples() const { return samples_; }

	friend bool operator==(const GrayImage &, const GrayImage &) = default;

private:
	std::size_t width_ = 0;
	std::size_t height_ = 0;
	std::vector<std::uint8_t> samples_;
};

namespace detail {

inline void skip_pnm_space(std::istream &in) {
	for (;;) {
		const int c = in.peek();
		if (c == '#') {
			std::string ignored;
			std::getline(in, ignored);
		} else if (c != EOF && std::isspace(c)) {
			in.get();
		} else {
			return;
		}
	}
}

inline std::size_t read_pnm_number(std::istream &in) {
	skip_pnm_space(in);
	std::size_t v = 0;
	if (!(in >> v))
		throw ImageError("PGM: malformed header");
	return v;
}

} // namespace detail

/// Binary PGM (P5) with maxval 255.
inline GrayImage read_pgm(std::istream &in) {
	char magic[2] = {};
	if (!in.read(magic, 2) || magic[0] != 'P' || magic[1] != '5')
		throw ImageError("PGM: expected binary P5 header");
	const std::size_t width = detail::read_pnm_number(in);
	const std::size_t height = detail::read_pnm_number(in);
	const std::size_t maxval = detail::read_pnm_number(in);
	if (width == 0 || height == 0)
		throw ImageError("PGM: zero dimension");
	if (maxval != 255)
		throw ImageError("PGM: only maxval 255 is supported");
	// exactly one whitespace byte separates the header from the raster
	if (!std::isspace(in.get()))
		throw ImageError("PGM: malformed header");
	std::vector<std::uint8_t> samples(width * height);
	if (!in.read(reinterpret_cast<char *>(samples.data()), static_cast<std::streamsize>(samples.size())))
		throw ImageError("PGM: truncated raster");
	return GrayImage(width, height, std::move(samples));
}

inline GrayImage read_pgm(const std::filesystem::path &path) {
	std::ifstream in(path, std::ios::binary);
	if (!in)
		throw ImageError("cannot open " + path.string());
	try {
		return read_pgm(in);
	} catch (const ImageError &e) {
		throw ImageError(path.string() + ": " + e.what());
	}
}

inline void write_pgm(std::ostream &out, const GrayImage &img) {
	out << "P5\n" << img.width() << ' ' << img.height() << "\n255\n";
	out.write(reinterpret_cast<const char *>(img.samples().data()),
	          static_cast<std::streamsize>(img.samples().size()));
}

inline void write_pgm(const std::filesystem::path &path, const GrayImage &img) {
	std::ofstream out(path, std::ios::binary);
	if (!out)
		throw ImageError("cannot write " + path.string());
	write_pgm(out, img);
	if (!out)
		throw ImageError("write failed: " + path.string());
}

} // namespace dtt

#endif // DTT_IMAGE_HPP
