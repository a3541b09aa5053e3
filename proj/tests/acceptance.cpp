// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "dtt/dtt.hpp"

using namespace dtt;

namespace {

struct Outcome {
	bool pass;
	std::string detail;
};

struct Criterion {
	int id;
	const char *title;
	double time_limit_s; // 0 = no limit
	std::function<Outcome()> check;
};

std::string fmt(const char *f, auto... args) {
	char buf[512];
	std::snprintf(buf, sizeof buf, f, args...);
	return buf;
}

double round_to(double v, double unit) { return std::round(v / unit) * unit; }

std::vector<CorpusImage> corpus() {
	static const std::vector<CorpusImage> images = load_corpus(DTT_DATA_DIR);
	return images;
}

Outcome orthogonality() {
	double worst = 0.0;
	for (std::size_t n = 2; n <= 16; ++n) {
		const auto t = dtt_matrix(n);
		worst = std::max(worst, max_abs_diff(t * t.transpose(), TransformMatrix::identity(n)));
	}
	return {worst <= 1e-10, fmt("max |T T^T - I| over N=2..16 = %.3g (tol 1e-10)", worst)};
}

Outcome factorization() {
	const auto [f, t0] = exact_factorization_8();
	const double err = max_abs_diff(scale_rows(f, t0), dtt_matrix(8));
	return {err <= 1e-12, fmt("max |F T0 - T| = %.3g (tol 1e-12)", err)};
}

Outcome alpha_search() {
	const auto res = search_alpha(1e-3);
	if (!res.optimal_interval)
		return {false, "no admissible run contains 0.95"};
	const auto [lo, hi] = *res.optimal_interval;
	const bool interval = std::abs(lo - 0.931) < 1e-9 && std::abs(hi - 0.957) < 1e-9;
	const auto t_star = proposed_kernel().forward;
	bool same = true;
	for (const auto &[alpha, k] : res.admissible)
		if (alpha >= lo - 1e-12 && alpha <= hi + 1e-12)
			same = same && k == t_star;
	return {interval && same, fmt("interval [%.3f, %.3f], all kernels equal T*: %s", lo, hi, same ? "yes" : "no")};
}

Outcome inverse_identity() {
	const auto k = proposed_kernel();
	const bool ok = verify_rational_inverse(k.forward, k.inverse_int, k.inverse_scale_denominators);
	return {ok, "(T1 D1) T* == I and T* (T1 D1) == I over the rationals"};
}

Outcome energy_errors() {
	const auto k = proposed_kernel();
	const auto t = dtt_matrix(8);
	const double fwd = total_energy_error(t, k.approximate_transform());
	const double inv = total_energy_error(t.transpose(), k.approximate_inverse());
	return {std::abs(fwd - 3.32) <= 0.01 && std::abs(inv - 4.86) <= 0.01,
	        fmt("forward %.4f (3.32 +- 0.01), inverse %.4f (4.86 +- 0.01)", fwd, inv)};
}

Outcome fast_oracle() {
	const auto k = proposed_kernel();
	auto dense = [](const IntegerKernel &m, const Vec8<long long> &x) {
		Vec8<long long> y{};
		for (std::size_t r = 0; r < 8; ++r)
			for (std::size_t c = 0; c < 8; ++c)
				y[r] += m(r, c) * x[c];
		return y;
	};
	std::vector<Vec8<long long>> inputs;
	for (std::size_t i = 0; i < 8; ++i) {
		Vec8<long long> e{};
		e[i] = 1;
		inputs.push_back(e);
	}
	std::mt19937_64 rng(20240601);
	std::uniform_int_distribution<long long> d(-255, 255);
	for (int i = 0; i < 10000; ++i) {
		Vec8<long long> x;
		for (auto &v : x)
			v = d(rng);
		inputs.push_back(x);
	}
	std::size_t mismatches = 0;
	for (const auto &x : inputs) {
		mismatches += forward_fast(x) != dense(k.forward, x);
		mismatches += inverse_fast(x) != dense(k.inverse_int, x);
	}
	return {mismatches == 0, fmt("%zu vectors, %zu mismatches", inputs.size(), mismatches)};
}

Outcome op_counts() {
	const auto r = report_complexity();
	const bool counts = r.forward == OpCount{0, 20, 0} && r.inverse == OpCount{0, 29, 8};
	const bool vs_exact = round_to(r.forward_vs_exact_adds, 0.1) == round_to(54.5, 0.1) &&
	                      round_to(r.inverse_vs_exact_adds, 0.1) == round_to(34.1, 0.1);
	const bool vs_h264 = round_to(r.forward_vs_h264_adds, 0.1) == round_to(37.5, 0.1) &&
	                     round_to(r.inverse_vs_h264_adds, 0.1) == round_to(9.4, 0.1) &&
	                     round_to(r.inverse_vs_h264_shifts, 0.1) == round_to(42.9, 0.1);
	// rounded to whole percent as quoted: 38, 9, 43
	const bool quoted = std::lround(r.forward_vs_h264_adds) == 38 && std::lround(r.inverse_vs_h264_adds) == 9 &&
	                    std::lround(r.inverse_vs_h264_shifts) == 43 && r.forward.shifts == 0;
	return {counts && vs_exact && vs_h264 && quoted,
	        fmt("fwd (%zu,%zu,%zu) inv (%zu,%zu,%zu); vs exact %.1f%%/%.1f%%; vs H.264 adds %.1f%%/%.1f%%, shifts %.1f%%",
	            r.forward.multiplications, r.forward.additions, r.forward.shifts, r.inverse.multiplications,
	            r.inverse.additions, r.inverse.shifts, r.forward_vs_exact_adds, r.inverse_vs_exact_adds,
	            r.forward_vs_h264_adds, r.inverse_vs_h264_adds, r.inverse_vs_h264_shifts)};
}

Outcome lossless_roundtrip() {
	std::size_t exact = 0, total = 0, large = 0;
	for (const auto &img : corpus()) {
		large += img.image.width() == 512 && img.image.height() == 512;
		for (KernelId k : {KernelId::exact_dtt, KernelId::proposed}) {
			++total;
			exact += compress_image(img.image, k, RetentionSpec(64)) == img.image;
		}
	}
	return {total >= 6 && exact == total && large >= 3,
	        fmt("%zu/%zu reconstructions pixel-exact (%zu images of 512x512)", exact, total, large)};
}

Outcome figure2_proximity() {
	const auto images = corpus();
	std::size_t large = 0;
	for (const auto &img : images)
		large += img.image.width() == 512 && img.image.height() == 512;
	SweepConfig cfg;
	cfg.r_min = 1;
	cfg.r_max = 45;
	const auto means = aggregate(sweep_records(images, cfg));

	std::vector<double> ssim_exact(46), ssim_prop(46), sr_exact(46), sr_prop(46);
	for (const auto &m : means) {
		const auto r = static_cast<std::size_t>(m.r);
		(m.kernel == KernelId::exact_dtt ? ssim_exact : ssim_prop)[r] = m.mean_ssim;
		(m.kernel == KernelId::exact_dtt ? sr_exact : sr_prop)[r] = m.mean_srsim;
	}
	double gap_ssim = 0.0, gap_sr = 0.0, worst_drop = 0.0;
	for (std::size_t r = 1; r <= 45; ++r) {
		gap_ssim = std::max(gap_ssim, std::abs(ssim_prop[r] - ssim_exact[r]));
		gap_sr = std::max(gap_sr, std::abs(sr_prop[r] - sr_exact[r]));
		if (r > 1)
			for (const auto *curve : {&ssim_exact, &ssim_prop, &sr_exact, &sr_prop})
				worst_drop = std::max(worst_drop, (*curve)[r - 1] - (*curve)[r]);
	}
	return {large >= 3 && gap_ssim <= 0.05 && gap_sr <= 0.05 && worst_drop <= 1e-3,
	        fmt("%zu images; max |dSSIM| %.4f, max |dSR-SIM| %.4f (tol 0.05); worst decrease %.2g (slack 1e-3)", large,
	            gap_ssim, gap_sr, worst_drop)};
}

Outcome metric_sanity() {
	double id_err = 0.0, sym_err = 0.0;
	for (const auto &img : corpus()) {
		const GrayImage rec = compress_image(img.image, KernelId::proposed, RetentionSpec(10));
		id_err = std::max({id_err, std::abs(ssim(img.image, img.image) - 1.0), std::abs(sr_sim(img.image, img.image) - 1.0)});
		sym_err = std::max({sym_err, std::abs(ssim(img.image, rec) - ssim(rec, img.image)),
		                    std::abs(sr_sim(img.image, rec) - sr_sim(rec, img.image))});
	}
	return {id_err <= 1e-12 && sym_err <= 1e-12, fmt("identity error %.3g, symmetry error %.3g (tol 1e-12)", id_err, sym_err)};
}

} // namespace

int main() {
	const std::vector<Criterion> criteria{
		{1, "exact DTT orthogonality", 1.0, orthogonality},
		{2, "F * T0 factorization", 1.0, factorization},
		{3, "alpha search interval", 5.0, alpha_search},
		{4, "rational inverse identity", 1.0, inverse_identity},
		{5, "total energy errors", 0.0, energy_errors},
		{6, "fast algorithm oracle equivalence", 5.0, fast_oracle},
		{7, "operation counts and reductions", 0.0, op_counts},
		{8, "codec r=64 roundtrip", 10.0, lossless_roundtrip},
		{9, "quality curves proximity", 600.0, figure2_proximity},
		{10, "metric identity and symmetry", 0.0, metric_sanity},
	};
	int failed = 0;
	for (const auto &c : criteria) {
		const auto t0 = std::chrono::steady_clock::now();
		Outcome o;
		try {
			o = c.check();
		} catch (const std::exception &e) {
			o = {false, std::string("exception: ") + e.what()};
		}
		const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
		const bool in_time = c.time_limit_s == 0.0 || secs < c.time_limit_s;
		const bool pass = o.pass && in_time;
		failed += !pass;
		std::printf("[%s] criterion %2d: %s -- %s; %.2fs%s\n", pass ? "PASS" : "FAIL", c.id, c.title, o.detail.c_str(), secs,
		            in_time ? "" : fmt(" exceeds %.0fs limit", c.time_limit_s).c_str());
		std::fflush(stdout);
	}
	std::printf("[EXCL] criterion 11: video encoder and FPGA results -- not reproducible at desk scale; "
	            "the arithmetic they rest on is covered by criteria 6 and 7\n");
	std::printf("%d of %zu criteria failed\n", failed, criteria.size());
	return failed ? 1 : 0;
}
