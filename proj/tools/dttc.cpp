// dttc: command-line front end for the 8-point DTT approximation toolkit.
//
// Exit codes: 0 success, 1 usage error, 2 data error. Failures print a single
// "error: <kind>: <message>" line on stderr.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dtt/dtt.hpp"

namespace {

struct UsageError : std::runtime_error {
	using std::runtime_error::runtime_error;
};

int fail(const char *kind, const std::string &msg, int code) {
	std::string oneline = msg;
	for (char &c : oneline)
		if (c == '\n')
			c = ' ';
	std::cerr << "error: " << kind << ": " << oneline << '\n';
	return code;
}

void print_alpha_search(double step) {
	const auto res = dtt::search_alpha(step);
	std::printf("grid step %g, %zu admissible grid points in %zu runs\n", step, res.admissible.size(), res.runs.size());
	std::printf("alpha_lo,alpha_hi,points\n");
	for (const auto &run : res.runs)
		std::printf("%.6g,%.6g,%zu\n", run.lo, run.hi, run.last_index - run.first_index + 1);
	if (res.optimal_interval) {
		std::printf("\noptimal interval: %.6g <= alpha <= %.6g\nkernel:\n", res.optimal_interval->first,
		            res.optimal_interval->second);
		std::cout << dtt::format_matrix(*res.optimal_kernel);
	} else {
		std::printf("\nno admissible run contains alpha = 0.95\n");
	}
}

void print_energy_errors() {
	const auto k = dtt::proposed_kernel();
	const auto t = dtt::dtt_matrix(8);
	std::printf("forward %.6f\n", dtt::total_energy_error(t, k.approximate_transform()));
	std::printf("inverse %.6f\n", dtt::total_energy_error(t.transpose(), k.approximate_inverse()));
}

void print_matrix(const std::string &which, std::size_t n, int precision) {
	if (which != "exact" && n != 8)
		throw UsageError("--n applies to the exact matrix only");
	if (which == "exact") {
		std::cout << dtt::format_matrix(dtt::dtt_matrix(n), precision);
		return;
	}
	const auto k = dtt::proposed_kernel();
	if (which == "t0") {
		std::cout << dtt::format_matrix(dtt::exact_factorization_8().kernel);
	} else if (which == "f") {
		for (double v : dtt::exact_factorization_8().scale.values())
			std::printf("%.*f\n", precision, v);
	} else if (which == "d0") {
		for (double v : dtt::d0_scaling().values())
			std::printf("%.*f\n", precision, v);
	} else if (which == "tstar") {
		std::cout << dtt::format_matrix(k.forward);
	} else if (which == "t1") {
		std::cout << dtt::format_matrix(k.inverse_int);
	} else if (which == "approx") {
		std::cout << dtt::format_matrix(k.approximate_transform(), precision);
	} else {
		throw UsageError("unknown matrix: " + which);
	}
}

} // namespace

int main(int argc, char **argv) {
	CLI::App app{"8-point discrete Tchebichef transform approximation toolkit"};
	app.require_subcommand(1);
	app.set_config("--config", "", "TOML file mirroring the command-line flags");

	std::string matrix_kind = "exact";
	std::size_t order = 8;
	int precision = 6;
	auto *gen = app.add_subcommand("gen-matrix", "Print a transform matrix");
	gen->add_option("--kind", matrix_kind, "exact | t0 | f | d0 | tstar | t1 | approx")->capture_default_str();
	gen->add_option("--n", order, "Order of the exact DTT")->check(CLI::Range(1, 64))->capture_default_str();
	gen->add_option("--precision", precision, "Digits after the decimal point")->check(CLI::Range(0, 17))->capture_default_str();

	double step = 1e-3;
	auto *search = app.add_subcommand("search-alpha", "Exhaustive search of the scale-and-round parameter");
	search->add_option("--step", step, "Grid step")->capture_default_str();

	auto *energy = app.add_subcommand("energy-error", "Total energy error of the forward and inverse approximation");

	bool csv = false;
	auto *ops = app.add_subcommand("op-count", "Measured arithmetic complexity of the fast algorithms");
	ops->add_flag("--csv", csv, "CSV output");

	std::string kernel = "proposed";
	int retained = 6;
	std::string in_path, out_path;
	auto *compress = app.add_subcommand("compress", "Block-transform an image keeping r coefficients per block");
	compress->add_option("--kernel", kernel, "exact_dtt | proposed")->capture_default_str();
	compress->add_option("--r", retained, "Retained coefficients per block")->check(CLI::Range(1, 64))->capture_default_str();
	compress->add_option("input", in_path, "Input PGM")->required();
	compress->add_option("output", out_path, "Output PGM")->required();

	std::string metric = "ssim";
	std::string ref_path, test_path;
	auto *quality = app.add_subcommand("quality", "Full-reference quality score");
	quality->add_option("--metric", metric, "ssim | srsim")->check(CLI::IsMember({"ssim", "srsim"}))->capture_default_str();
	quality->add_option("reference", ref_path, "Reference PGM")->required();
	quality->add_option("test", test_path, "Test PGM")->required();

	dtt::SweepConfig sweep_cfg;
	std::string corpus, output;
	std::vector<std::string> kernels{"exact_dtt", "proposed"};
	auto *sweep = app.add_subcommand("sweep", "Quality sweep over a PGM corpus");
	sweep->add_option("--corpus", corpus, "Directory of PGM images")->required();
	sweep->add_option("--r-min", sweep_cfg.r_min, "Smallest r")->capture_default_str();
	sweep->add_option("--r-max", sweep_cfg.r_max, "Largest r")->capture_default_str();
	sweep->add_option("--kernels", kernels, "Kernels to evaluate")->delimiter(',')->capture_default_str();
	sweep->add_option("--output", output, "Per-record CSV; means go to <stem>_mean.csv")->required();

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp &e) {
		return app.exit(e);
	} catch (const CLI::CallForAllHelp &e) {
		return app.exit(e);
	} catch (const CLI::ParseError &e) {
		return fail("usage", e.what(), 1);
	}

	try {
		if (*gen) {
			print_matrix(matrix_kind, order, precision);
		} else if (*search) {
			if (!(step > 0.0 && step < 1.5))
				throw UsageError("--step must lie in (0, 1.5)");
			print_alpha_search(step);
		} else if (*energy) {
			print_energy_errors();
		} else if (*ops) {
			std::cout << dtt::format_complexity(dtt::report_complexity(), csv);
		} else if (*compress) {
			const auto id = dtt::parse_kernel_id(kernel);
			const auto img = dtt::read_pgm(std::filesystem::path(in_path));
			dtt::write_pgm(std::filesystem::path(out_path), dtt::compress_image(img, id, dtt::RetentionSpec(retained)));
		} else if (*quality) {
			const auto a = dtt::read_pgm(std::filesystem::path(ref_path));
			const auto b = dtt::read_pgm(std::filesystem::path(test_path));
			if (a.width() != b.width() || a.height() != b.height())
				throw dtt::ImageError("image dimensions differ");
			std::printf("%.6f\n", metric == "ssim" ? dtt::ssim(a, b) : dtt::sr_sim(a, b));
		} else if (*sweep) {
			sweep_cfg.corpus_dir = corpus;
			sweep_cfg.output = output;
			sweep_cfg.kernels.clear();
			for (const auto &k : kernels)
				sweep_cfg.kernels.push_back(dtt::parse_kernel_id(k));
			sweep_cfg.validate();
			const auto res = dtt::run_sweep(sweep_cfg);
			std::cout << "wrote " << res.records.size() << " records to " << output << " and "
			          << res.means.size() << " means to " << dtt::means_path(output).string() << '\n';
		}
	} catch (const UsageError &e) {
		return fail("usage", e.what(), 1);
	} catch (const std::invalid_argument &e) {
		return fail("usage", e.what(), 1);
	} catch (const std::out_of_range &e) {
		return fail("usage", e.what(), 1);
	} catch (const std::exception &e) {
		return fail("data", e.what(), 2);
	}
	return 0;
}
