#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include <halfhex/aztec.hpp>
#include <halfhex/enumerate.hpp>
#include <halfhex/serialize.hpp>
#include <halfhex/shuffle.hpp>
#include <halfhex/svg.hpp>
#include <halfhex/version.hpp>

// Exit codes: 0 success, 1 verification failure, 2 usage error
// (including unreadable input and unwritable output).

namespace {

using halfhex::ojson;

std::filesystem::path resolve_out(const std::string& name) {
    std::filesystem::path p(name);
    if (p.is_absolute()) return p;
    if (const char* dir = std::getenv("HALFHEX_OUT_DIR"); dir && *dir)
        return std::filesystem::path(dir) / p;
    return p;
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    out << content;
    out.close();
    if (!out) throw std::runtime_error("cannot write " + path.string());
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path.string());
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Sample k comes from trajectory k of the stream, so the draws are
// independent and can be farmed out to threads; each slot has a
// single writer and the result does not depend on the schedule.
std::vector<halfhex::StaircaseTableau> draw_samples(int order, int count,
                                                    std::uint64_t seed) {
    std::vector<halfhex::StaircaseTableau> out(count, halfhex::StaircaseTableau(0));
    const unsigned workers =
        std::min<unsigned>(std::max(1u, std::thread::hardware_concurrency()),
                           static_cast<unsigned>(count));
    if (workers <= 1) {
        for (int k = 0; k < count; ++k) out[k] = halfhex::sample(order, seed, k);
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (int k = static_cast<int>(w); k < count; k += static_cast<int>(workers))
                out[k] = halfhex::sample(order, seed, k);
        });
    for (auto& th : pool) th.join();
    return out;
}

int run_sample(int order, int count, std::uint64_t seed, const std::string& model,
               const std::string& format, std::string outname) {
    const auto states = draw_samples(order, count, seed);
    std::string content;
    if (format == "json")
        content = halfhex::sample_document(model, order, count, seed, states).dump(2) + "\n";
    else
        content = halfhex::samples_to_csv(model, order, count, seed, states);
    if (outname.empty())
        outname = "sample_" + model + "_n" + std::to_string(order) + "_s" +
                  std::to_string(seed) + "." + format;
    const auto path = resolve_out(outname);
    write_file(path, content);
    std::printf("wrote %s\n", path.string().c_str());
    return 0;
}

struct Check {
    std::string name;
    bool ok = true;
    std::string detail;
};

void run_suite(const std::string& suite, int max_order, std::vector<Check>& checks) {
    using namespace halfhex;
    auto add = [&checks](std::string name, bool ok, std::string detail = "") {
        checks.push_back({std::move(name), ok, std::move(detail)});
    };

    if (suite == "counts") {
        const int top = std::min(max_order, 6);
        std::vector<BigInt> counts;
        for (int n = 0; n <= top; ++n) {
            counts.push_back(enumerate_count(n));
            const BigInt want = count_closed(n);
            add("count order " + std::to_string(n), counts.back() == want,
                counts.back().str() + " vs closed form " + want.str());
        }
        for (int n = 1; n <= top; ++n) {
            const BigInt want = counts[n - 1] * (BigInt(1) << n);
            add("recurrence order " + std::to_string(n), counts[n] == want,
                counts[n].str() + " vs 2^n * previous " + want.str());
        }
    } else if (suite == "uniform") {
        for (int n = 1; n <= std::min(max_order, 4); ++n) {
            const VerifyResult r = verify_uniform_preservation(n);
            add("uniform preservation order " + std::to_string(n), r.ok, r.detail);
        }
    } else if (suite == "adjoint") {
        for (int n = 1; n <= std::min(max_order, 4); ++n) {
            const VerifyResult r = verify_adjointness(n);
            add("adjointness order " + std::to_string(n), r.ok, r.detail);
        }
    } else if (suite == "qenum") {
        // The closed product form sits a single monomial q^(n(n+1)/2)
        // above the volume polynomial; compare after shifting it down.
        for (int n = 0; n <= std::min(max_order, 5); ++n) {
            const Poly brute = q_enumerate_bruteforce(n);
            const Poly closed = q_enumerate_closed(n);
            const int c = closed.valuation() - brute.valuation();
            const bool ok = c == n * (n + 1) / 2 && closed.shifted_down(c) == brute;
            add("q-enumeration order " + std::to_string(n), ok,
                "normalization exponent " + std::to_string(c));
        }
    } else if (suite == "bijections") {
        auto round_trip = [](const StaircaseTableau& t) {
            const auto paths = lozenges_to_paths(
                matching_to_lozenges(particles_to_matching(st_to_particles(t))));
            return particles_to_st(matching_to_particles(
                       lozenges_to_matching(paths_to_lozenges(paths)))) == t;
        };
        for (int n = 0; n <= std::min(max_order, 4); ++n) {
            int bad = 0;
            const auto states = enumerate_states(n);
            for (const auto& t : states)
                if (!round_trip(t)) ++bad;
            add("round trip on all order-" + std::to_string(n) + " states", bad == 0,
                std::to_string(states.size()) + " states, " + std::to_string(bad) +
                    " failures");
        }
        if (max_order > 4) {
            int bad = 0;
            for (int k = 0; k < 100; ++k)
                if (!round_trip(sample(max_order, 2026, k))) ++bad;
            add("round trip on 100 samples at order " + std::to_string(max_order),
                bad == 0);
        }
    } else if (suite == "aztec-equivalence") {
        const int top = std::min(max_order, 20);
        int bad = 0;
        for (std::uint64_t s = 1; s <= 32; ++s) {
            const BitStream stream(s);
            const auto hist = simulate_half_diamond_dormant(2 * top + 1, stream);
            StaircaseTableau t(0);
            for (int tau = 0; tau <= top; ++tau) {
                if (!(x_view(hist, tau) == t)) ++bad;
                if (tau < top)
                    t = shuffle_forward(t,
                                        StepBits{stream, static_cast<std::uint64_t>(tau + 1)});
            }
        }
        add("half-diamond views retrace the shuffle chain, 32 streams to order " +
                std::to_string(top),
            bad == 0, std::to_string(bad) + " mismatched views");
    } else {
        throw std::runtime_error("unknown suite " + suite);
    }
}

int run_verify(const std::string& suite, int max_order, const std::string& report) {
    std::vector<Check> checks;
    run_suite(suite, max_order, checks);
    bool all = true;
    for (const Check& c : checks) {
        all = all && c.ok;
        std::printf("%s  %s%s%s\n", c.ok ? "ok  " : "FAIL", c.name.c_str(),
                    c.detail.empty() ? "" : ": ", c.detail.c_str());
    }
    std::printf("suite %s: %s (%zu checks)\n", suite.c_str(), all ? "PASS" : "FAIL",
                checks.size());
    if (!report.empty()) {
        ojson j;
        j["halfhex"] = halfhex::library_version;
        j["suite"] = suite;
        j["max_order"] = max_order;
        j["ok"] = all;
        j["checks"] = ojson::array();
        for (const Check& c : checks)
            j["checks"].push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
        write_file(resolve_out(report), j.dump(2) + "\n");
    }
    return all ? 0 : 1;
}

int run_render(const std::string& input, const std::string& view, std::string outname,
               double scale) {
    const ojson j = ojson::parse(read_file(input));
    std::string svg;
    if (view == "half-diamond") {
        const auto [region, tiling] = halfhex::tiling_from_json(j);
        svg = halfhex::render_half_diamond(region, tiling, scale);
    } else {
        svg = halfhex::render_view(halfhex::first_sample_from_json(j), view, scale);
    }
    if (outname.empty())
        outname = std::filesystem::path(input).stem().string() + "_" + view + ".svg";
    const auto path = resolve_out(outname);
    write_file(path, svg);
    std::printf("wrote %s\n", path.string().c_str());
    return 0;
}

int run_limitshape(int order, int samples, std::uint64_t seed, double threshold,
                   std::string prefix) {
    using namespace halfhex;
    const DensityField d = empirical_density(order, samples, seed);
    const auto pts = frozen_boundary(d, threshold);
    const CurveFit quad = fit_curve(pts, CurveModel::quadratic);
    const CurveFit conic = fit_curve(pts, CurveModel::general_conic);

    if (prefix.empty())
        prefix = "limitshape_n" + std::to_string(order) + "_s" + std::to_string(seed);
    const auto density_path = resolve_out(prefix + "_density.csv");
    const auto boundary_path = resolve_out(prefix + "_boundary.csv");
    const auto fit_path = resolve_out(prefix + "_fit.json");
    write_file(density_path, density_to_csv(d, seed));
    write_file(boundary_path, points_to_csv(pts));
    ojson j;
    j["halfhex"] = library_version;
    j["order"] = order;
    j["samples"] = samples;
    j["seed"] = seed;
    j["threshold"] = threshold;
    j["boundary_points"] = pts.size();
    j["quadratic"] = to_json(quad);
    j["general_conic"] = to_json(conic);
    write_file(fit_path, j.dump(2) + "\n");

    std::printf("order %d, %d samples, %zu boundary points\n", order, samples, pts.size());
    std::printf("quadratic fit: y = %s + %s x + %s x^2, sup residual %s, rms %s\n",
                format_fixed(quad.coefficients[0]).c_str(),
                format_fixed(quad.coefficients[1]).c_str(),
                format_fixed(quad.coefficients[2]).c_str(),
                format_fixed(quad.sup_residual).c_str(),
                format_fixed(quad.rms_residual).c_str());
    std::printf("general conic fit: discriminant %s, sup residual %s, rms %s\n",
                format_fixed(conic.discriminant).c_str(),
                format_fixed(conic.sup_residual).c_str(),
                format_fixed(conic.rms_residual).c_str());
    std::printf("wrote %s %s %s\n", density_path.string().c_str(),
                boundary_path.string().c_str(), fit_path.string().c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"half-hexagon dimer model: sampling, verification, rendering"};
    app.set_version_flag("--version", std::string("halfhex ") + halfhex::library_version);
    app.require_subcommand(1);

    int order = 3, count = 1, max_order = 4, ls_order = 200, ls_samples = 200;
    std::uint64_t seed = 0, ls_seed = 0;
    double scale = 40.0, threshold = 0.05;
    std::string model = "tableau", format = "json", out, suite, report, input, view,
                prefix;

    CLI::App* c_sample = app.add_subcommand("sample", "draw seeded samples of one model");
    c_sample->add_option("--order", order, "staircase order n")->check(CLI::NonNegativeNumber);
    c_sample->add_option("--count", count, "number of samples")->check(CLI::PositiveNumber);
    c_sample->add_option("--seed", seed, "stream seed");
    c_sample->add_option("--model", model, "output model")
        ->check(CLI::IsMember({"tableau", "particles", "matching", "lozenges", "paths"}));
    c_sample->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"json", "csv"}));
    c_sample->add_option("--out", out, "output file (default derived from flags)");

    CLI::App* c_verify = app.add_subcommand("verify", "run a verification suite");
    c_verify->add_option("--suite", suite, "suite name")
        ->required()
        ->check(CLI::IsMember(
            {"bijections", "adjoint", "uniform", "counts", "qenum", "aztec-equivalence"}));
    c_verify->add_option("--max-order", max_order, "largest order to check")
        ->check(CLI::PositiveNumber);
    c_verify->add_option("--report", report, "also write a JSON report here");

    CLI::App* c_render = app.add_subcommand("render", "render a sample file to SVG");
    c_render->add_option("--input", input, "sample or tiling file (JSON)")->required();
    c_render->add_option("--view", view, "picture to draw")
        ->required()
        ->check(CLI::IsMember(
            {"paths", "boxes", "matching", "lozenges", "particles", "half-diamond"}));
    c_render->add_option("--out", out, "output SVG file");
    c_render->add_option("--scale", scale, "pixels per lattice unit")
        ->check(CLI::PositiveNumber);

    CLI::App* c_limit = app.add_subcommand("limitshape", "empirical density and fits");
    c_limit->add_option("--order", ls_order, "staircase order n")->check(CLI::PositiveNumber);
    c_limit->add_option("--samples", ls_samples, "Monte Carlo sample count")
        ->check(CLI::PositiveNumber);
    c_limit->add_option("--seed", ls_seed, "stream seed");
    c_limit->add_option("--threshold", threshold, "disorder detection threshold in (0, 1/2)");
    c_limit->add_option("--prefix", prefix, "output file prefix");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(c_sample))
            return run_sample(order, count, seed, model, format, out);
        if (app.got_subcommand(c_verify)) return run_verify(suite, max_order, report);
        if (app.got_subcommand(c_render)) return run_render(input, view, out, scale);
        if (app.got_subcommand(c_limit))
            return run_limitshape(ls_order, ls_samples, ls_seed, threshold, prefix);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
