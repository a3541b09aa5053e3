#ifndef DTT_EXPERIMENT_HPP
#define DTT_EXPERIMENT_HPP

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "dtt/codec.hpp"
#include "dtt/fast.hpp"
#include "dtt/image.hpp"
#include "dtt/metrics.hpp"

namespace dtt {

/// Fixed, locale-independent rendering with 6 significant digits.
inline std::string format_real(double v) {
	char buf[32];
	std::snprintf(buf, sizeof buf, "%.6g", v);
	return buf;
}

struct ExperimentRecord {
	std::string image_id;
	KernelId kernel;
	int r;
	double ssim;
	double srsim;
};

struct MeanRecord {
	KernelId kernel;
	int r;
	double mean_ssim;
	double mean_srsim;
	std::size_t images;
};

struct SweepConfig {
	std::filesystem::path corpus_dir;
	int r_min = 1;
	int r_max = 45;
	std::vector<KernelId> kernels{KernelId::exact_dtt, KernelId::proposed};
	std::filesystem::path output; // per-record CSV; means go next to it

	void validate() const {
		if (!(1 <= r_min && r_min <= r_max && r_max <= 64))
			throw std::invalid_argument("sweep: require 1 <= r_min <= r_max <= 64");
		if (kernels.empty())
			throw std::invalid_argument("sweep: no kernels selected");
	}
};

/// Corpus directory missing, empty, or containing unreadable images.
struct CorpusError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

struct CorpusImage {
	std::string id;
	GrayImage image;
};

/// Every *.pgm in the directory, sorted by file name.
inline std::vector<CorpusImage> load_corpus(const std::filesystem::path &dir) {
	namespace fs = std::filesystem;
	std::error_code ec;
	if (!fs::is_directory(dir, ec))
		throw CorpusError("corpus directory not found: " + dir.string());
	std::vector<fs::path> files;
	for (const auto &entry : fs::directory_iterator(dir))
		if (entry.is_regular_file() && entry.path().extension() == ".pgm")
			files.push_back(entry.path());
	std::sort(files.begin(), files.end());
	if (files.empty())
		throw CorpusError("no .pgm files in " + dir.string());

	std::vector<CorpusImage> out;
	std::vector<std::string> bad;
	for (const auto &f : files) {
		try {
			out.push_back({f.stem().string(), read_pgm(f)});
		} catch (const ImageError &e) {
			bad.push_back(e.what());
		}
	}
	if (!bad.empty()) {
		std::string msg = "unreadable corpus files:";
		for (const auto &b : bad)
			msg += " [" + b + "]";
		throw CorpusError(msg);
	}
	return out;
}

/// Quality of compress_image for every r in [r_min, r_max].
inline std::vector<ExperimentRecord> evaluate_image(const CorpusImage &img, KernelId kernel, int r_min, int r_max) {
	std::vector<ExperimentRecord> out;
	for (int r = r_min; r <= r_max; ++r) {
		const GrayImage rec = compress_image(img.image, kernel, RetentionSpec(r));
		out.push_back({img.id, kernel, r, ssim(img.image, rec), sr_sim(img.image, rec)});
	}
	return out;
}

/// Runs (image, kernel) pairs concurrently; output is sorted by image, kernel, r.
inline std::vector<ExperimentRecord> sweep_records(const std::vector<CorpusImage> &corpus, const SweepConfig &cfg) {
	cfg.validate();
	std::vector<std::future<std::vector<ExperimentRecord>>> jobs;
	for (const auto &img : corpus)
		for (KernelId k : cfg.kernels)
			jobs.push_back(std::async(std::launch::async, [&img, k, &cfg] {
				return evaluate_image(img, k, cfg.r_min, cfg.r_max);
			}));
	std::vector<ExperimentRecord> records;
	for (auto &j : jobs) {
		auto part = j.get();
		records.insert(records.end(), part.begin(), part.end());
	}
	std::sort(records.begin(), records.end(), [](const ExperimentRecord &a, const ExperimentRecord &b) {
		return std::tie(a.image_id, a.kernel, a.r) < std::tie(b.image_id, b.kernel, b.r);
	});
	return records;
}

/// Per-kernel, per-r average of the per-image scores.
inline std::vector<MeanRecord> aggregate(const std::vector<ExperimentRecord> &records) {
	// records arrive sorted by image, so each bucket sums in image order
	std::map<std::pair<KernelId, int>, MeanRecord> acc;
	for (const auto &rec : records) {
		auto [it, fresh] = acc.try_emplace({rec.kernel, rec.r}, MeanRecord{rec.kernel, rec.r, 0.0, 0.0, 0});
		it->second.mean_ssim += rec.ssim;
		it->second.mean_srsim += rec.srsim;
		++it->second.images;
	}
	std::vector<MeanRecord> out;
	for (auto &[key, m] : acc) {
		m.mean_ssim /= static_cast<double>(m.images);
		m.mean_srsim /= static_cast<double>(m.images);
		out.push_back(m);
	}
	return out;
}

inline void write_records_csv(std::ostream &out, const std::vector<ExperimentRecord> &records) {
	out << "image,kernel,r,ssim,srsim\n";
	for (const auto &r : records)
		out << r.image_id << ',' << to_string(r.kernel) << ',' << r.r << ',' << format_real(r.ssim) << ','
		    << format_real(r.srsim) << '\n';
}

inline void write_means_csv(std::ostream &out, const std::vector<MeanRecord> &means) {
	out << "kernel,r,mean_ssim,mean_srsim,images\n";
	for (const auto &m : means)
		out << to_string(m.kernel) << ',' << m.r << ',' << format_real(m.mean_ssim) << ','
		    << format_real(m.mean_srsim) << ',' << m.images << '\n';
}

/// "results.csv" -> "results_mean.csv"
inline std::filesystem::path means_path(const std::filesystem::path &records_path) {
	auto p = records_path;
	p.replace_filename(records_path.stem().string() + "_mean" + records_path.extension().string());
	return p;
}

struct SweepResult {
	std::vector<ExperimentRecord> records;
	std::vector<MeanRecord> means;
};

/// Loads the corpus, evaluates every (image, kernel, r) and writes both CSVs
/// when cfg.output is set.
inline SweepResult run_sweep(const SweepConfig &cfg) {
	cfg.validate();
	const auto corpus = load_corpus(cfg.corpus_dir);
	SweepResult res;
	res.records = sweep_records(corpus, cfg);
	res.means = aggregate(res.records);
	if (!cfg.output.empty()) {
		std::ofstream rec(cfg.output, std::ios::binary);
		std::ofstream mean(means_path(cfg.output), std::ios::binary);
		if (!rec || !mean)
			throw std::runtime_error("cannot write sweep output next to " + cfg.output.string());
		write_records_csv(rec, res.records);
		write_means_csv(mean, res.means);
	}
	return res;
}

/// Cited reference costs for 8-point transforms.
inline constexpr OpCount exact_dtt_fast_cost{0, 44, 29};
inline constexpr OpCount h264_transform_cost{0, 32, 14};

/// Relative saving of `ours` against `baseline`, in percent.
inline double percent_reduction(std::size_t ours, std::size_t baseline) {
	return 100.0 * (static_cast<double>(baseline) - static_cast<double>(ours)) / static_cast<double>(baseline);
}

struct ComplexityReport {
	OpCount forward;
	OpCount inverse;
	double forward_vs_exact_adds;
	double inverse_vs_exact_adds;
	double forward_vs_h264_adds;
	double inverse_vs_h264_adds;
	double forward_vs_h264_shifts;
	double inverse_vs_h264_shifts;
};

inline ComplexityReport report_complexity() {
	ComplexityReport r{};
	r.forward = count_ops(FastAlgorithm::forward);
	r.inverse = count_ops(FastAlgorithm::inverse);
	r.forward_vs_exact_adds = percent_reduction(r.forward.additions, exact_dtt_fast_cost.additions);
	r.inverse_vs_exact_adds = percent_reduction(r.inverse.additions, exact_dtt_fast_cost.additions);
	r.forward_vs_h264_adds = percent_reduction(r.forward.additions, h264_transform_cost.additions);
	r.inverse_vs_h264_adds = percent_reduction(r.inverse.additions, h264_transform_cost.additions);
	r.forward_vs_h264_shifts = percent_reduction(r.forward.shifts, h264_transform_cost.shifts);
	r.inverse_vs_h264_shifts = percent_reduction(r.inverse.shifts, h264_transform_cost.shifts);
	return r;
}

inline std::string format_complexity(const ComplexityReport &r, bool csv) {
	auto pct = [](double v) {
		char buf[32];
		std::snprintf(buf, sizeof buf, "%.1f%%", v);
		return std::string(buf);
	};
	std::ostringstream out;
	auto row = [&](const char *name, const OpCount &c, const char *source) {
		const std::size_t total = c.multiplications + c.additions + c.shifts;
		if (csv)
			out << name << ',' << c.multiplications << ',' << c.additions << ',' << c.shifts << ',' << total << ','
			    << source << '\n';
		else {
			char buf[128];
			std::snprintf(buf, sizeof buf, "%-22s %5zu %9zu %6zu %6zu  %s\n", name, c.multiplications, c.additions,
			              c.shifts, total, source);
			out << buf;
		}
	};
	if (csv)
		out << "method,mult,additions,shifts,total,source\n";
	else
		out << "method                 mult. additions shifts  total  source\n";
	row("exact DTT fast", exact_dtt_fast_cost, "cited");
	row("H.264 8-point", h264_transform_cost, "cited");
	row("proposed forward", r.forward, "measured");
	row("proposed inverse T1", r.inverse, "measured");
	if (csv)
		return out.str();
	out << "\nadditions saved vs exact DTT:  forward " << pct(r.forward_vs_exact_adds) << ", inverse "
	    << pct(r.inverse_vs_exact_adds) << '\n';
	out << "additions saved vs H.264:      forward " << pct(r.forward_vs_h264_adds) << ", inverse "
	    << pct(r.inverse_vs_h264_adds) << '\n';
	out << "shifts saved vs H.264:         forward " << pct(r.forward_vs_h264_shifts) << ", inverse "
	    << pct(r.inverse_vs_h264_shifts) << '\n';
	return out.str();
}

} // namespace dtt

#endif // DTT_EXPERIMENT_HPP
