// trichi: chirality of triangle side triples.
//
// Subcommands: chi, phase-grid, simulate, table1, classify, chi-max.
// Exit codes: 0 success, 2 usage or input error, 3 I/O error.

#include "trichi/chirality.hpp"
#include "trichi/extremal.hpp"
#include "trichi/io.hpp"
#include "trichi/montecarlo.hpp"
#include "trichi/phase_space.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

namespace {

using trichi::format_sci;
using trichi::round_sci;
using ordered_json = nlohmann::ordered_json;

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Data sink: --out PATH or standard output.
class Output {
public:
    explicit Output(const std::string& path) : to_file_(!path.empty()) {
        if (to_file_) {
            file_.open(path, std::ios::binary);
            if (!file_) throw IoError("cannot open output file: " + path);
        }
    }
    std::ostream& stream() { return to_file_ ? file_ : std::cout; }
    bool to_file() const { return to_file_; }
    void finish(const std::string& path) {
        stream().flush();
        if (!stream()) throw IoError("error writing output: " + (path.empty() ? "<stdout>" : path));
    }

private:
    bool to_file_;
    std::ofstream file_;
};

// Summary lines go to stdout when the data went to a file, to stderr when
// the data occupies stdout.
std::ostream& summary_stream(const Output& out) {
    return out.to_file() ? std::cout : std::cerr;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
    if (seed) return *seed;
    std::random_device rd;
    const std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
    std::cerr << "seed " << s << " (from OS entropy; pass --seed to reproduce)\n";
    return s;
}

// One-record report: CSV header + row, or a flat JSON object.
struct Report {
    std::vector<std::pair<std::string, std::string>> csv_fields;
    ordered_json json_fields;

    void add(const std::string& key, double v) {
        csv_fields.emplace_back(key, format_sci(v));
        json_fields[key] = round_sci(v);
    }
    void add(const std::string& key, const std::string& v) {
        csv_fields.emplace_back(key, v);
        json_fields[key] = v;
    }
    void add(const std::string& key, bool v) {
        csv_fields.emplace_back(key, v ? "true" : "false");
        json_fields[key] = v;
    }
    void add(const std::string& key, std::uint64_t v) {
        csv_fields.emplace_back(key, std::to_string(v));
        json_fields[key] = v;
    }

    void write(const std::string& format, std::ostream& os) const {
        if (format == "json") {
            os << json_fields.dump() << '\n';
            return;
        }
        for (std::size_t i = 0; i < csv_fields.size(); ++i) {
            os << csv_fields[i].first << (i + 1 < csv_fields.size() ? ',' : '\n');
        }
        for (std::size_t i = 0; i < csv_fields.size(); ++i) {
            os << csv_fields[i].second << (i + 1 < csv_fields.size() ? ',' : '\n');
        }
    }
};

constexpr const char* kSeedHelp =
    "64-bit seed for the mt19937-64 + Box-Muller generator; "
    "omitted: drawn from OS entropy and echoed to stderr";

int run(int argc, char** argv) {
    CLI::App app{"chirality measure (a-b)(b-c)(c-a)/(a+b+c)^3 for side triples"};
    app.require_subcommand(1);

    std::string format = "csv";
    std::string out_path;
    const auto add_envelope = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format")->check(CLI::IsMember({"csv", "json"}))
            ->capture_default_str();
        cmd->add_option("--out", out_path, "write data to this file instead of stdout");
    };

    // chi a b c
    double a = 0, b = 0, c = 0;
    double rel_tol = 0.0;
    auto* cmd_chi = app.add_subcommand("chi", "evaluate and classify one triple");
    cmd_chi->add_option("a", a, "side a")->required();
    cmd_chi->add_option("b", b, "side b")->required();
    cmd_chi->add_option("c", c, "side c")->required();
    cmd_chi->add_option("--rel-tol", rel_tol,
                        "relative tolerance for side-equality and degeneracy tests")
        ->capture_default_str();
    add_envelope(cmd_chi);

    // phase-grid
    std::size_t resolution = 201;
    std::string domain = "full";
    auto* cmd_grid = app.add_subcommand("phase-grid", "chi over the normalized simplex");
    cmd_grid->add_option("--resolution", resolution, "lattice points per simplex edge (2..4001)")
        ->capture_default_str();
    cmd_grid->add_option("--domain", domain, "full simplex or triangle-inequality region")
        ->check(CLI::IsMember({"full", "triangle"}))
        ->capture_default_str();
    add_envelope(cmd_grid);

    // simulate
    double base = 5.0;
    double rel_sigma = 0.2;
    std::uint64_t n_samples = 100000;
    std::optional<std::uint64_t> seed;
    std::size_t bins = 100;
    auto* cmd_sim = app.add_subcommand(
        "simulate", "|chi| distribution for noisy equilateral triples; histogram + summary");
    cmd_sim->add_option("--base", base, "noise-free side length")->capture_default_str();
    cmd_sim->add_option("--rel-sigma", rel_sigma, "per-side relative Gaussian error")
        ->capture_default_str();
    cmd_sim->add_option("--n", n_samples, "number of sampled triples")->capture_default_str();
    cmd_sim->add_option("--seed", seed, kSeedHelp);
    cmd_sim->add_option("--bins", bins, "histogram bin count")->capture_default_str();
    add_envelope(cmd_sim);

    // table1
    std::vector<double> errors;
    auto* cmd_table = app.add_subcommand("table1", "75%-confidence chi thresholds per error level");
    cmd_table->add_option("--n", n_samples, "samples per error level")->capture_default_str();
    cmd_table->add_option("--seed", seed, kSeedHelp);
    cmd_table->add_option("--errors", errors,
                          "relative error levels (default: 0.01 0.025 0.05 0.075 0.10 0.15 "
                          "0.20 0.25 0.30 0.35 0.40)");
    add_envelope(cmd_table);

    // classify
    double rel_error = 0.0;
    auto* cmd_classify =
        app.add_subcommand("classify", "is a measured triple significantly chiral?");
    cmd_classify->add_option("a", a, "side a")->required();
    cmd_classify->add_option("b", b, "side b")->required();
    cmd_classify->add_option("c", c, "side c")->required();
    cmd_classify->add_option("--rel-error", rel_error, "relative measurement error of the sides")
        ->required();
    cmd_classify->add_option("--n", n_samples, "simulation samples for the threshold")
        ->capture_default_str();
    cmd_classify->add_option("--seed", seed, kSeedHelp);
    add_envelope(cmd_classify);

    // chi-max
    std::size_t search_resolution = 1000;
    auto* cmd_max = app.add_subcommand("chi-max", "extremal chirality over valid triangles");
    cmd_max->add_option("--resolution", search_resolution, "lattice subdivisions (100..50000)")
        ->capture_default_str();
    add_envelope(cmd_max);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    Output out(out_path);

    if (cmd_chi->parsed()) {
        const auto r = trichi::classify(trichi::SideTriple(a, b, c), rel_tol);
        Report rep;
        rep.add("chi", r.chi);
        rep.add("handedness", std::string(trichi::to_string(r.handedness)));
        rep.add("symmetry_class", std::string(trichi::to_string(r.symmetry_class)));
        rep.add("triangle_status", std::string(trichi::to_string(r.triangle_status)));
        rep.write(format, out.stream());
    } else if (cmd_grid->parsed()) {
        const auto g = trichi::make_grid(
            resolution, domain == "full" ? trichi::GridDomain::full_simplex
                                         : trichi::GridDomain::triangle_region);
        if (format == "json") {
            trichi::write_json(g, out.stream());
        } else {
            trichi::write_csv(g, out.stream());
        }
    } else if (cmd_sim->parsed()) {
        trichi::NoiseSpec spec;
        spec.base_side = base;
        spec.rel_sigma = rel_sigma;
        spec.n_samples = n_samples;
        spec.seed = resolve_seed(seed);
        const auto r = trichi::simulate(spec, bins);
        if (format == "json") {
            trichi::write_json(r.histogram, out.stream());
        } else {
            trichi::write_csv(r.histogram, out.stream());
        }
        auto& ss = summary_stream(out);
        ss << "mean_abs_chi " << format_sci(r.mean_abs_chi) << '\n'
           << "fraction_below_mean " << format_sci(r.fraction_below_mean) << '\n'
           << "violation_rate " << format_sci(r.violation_rate) << '\n'
           << "exceed_chimax_rate " << format_sci(r.exceed_chimax_rate) << '\n'
           << "seed " << spec.seed << '\n';
    } else if (cmd_table->parsed()) {
        if (errors.empty()) errors = trichi::default_error_levels();
        const auto rows = trichi::confidence_table(errors, n_samples, resolve_seed(seed));
        if (format == "json") {
            trichi::write_json(rows, out.stream());
        } else {
            trichi::write_csv(rows, out.stream());
        }
    } else if (cmd_classify->parsed()) {
        const auto v = trichi::is_significant(trichi::SideTriple(a, b, c), rel_error,
                                              n_samples, resolve_seed(seed));
        Report rep;
        rep.add("chi", v.chi);
        rep.add("threshold", v.threshold);
        rep.add("significant", v.significant);
        rep.add("confidence", v.confidence);
        rep.write(format, out.stream());
    } else if (cmd_max->parsed()) {
        const auto analytic = trichi::chi_max_analytic();
        const auto search = trichi::chi_max_search(search_resolution);
        Report rep;
        rep.add("analytic_chi_max", analytic.chi_max);
        rep.add("search_chi_max", search.best.chi_max);
        rep.add("abs_difference", std::fabs(analytic.chi_max - search.best.chi_max));
        rep.add("argmax_a_bar", search.best.argmax.a_bar);
        rep.add("argmax_b_bar", search.best.argmax.b_bar);
        rep.add("argmax_c_bar", search.best.argmax.c_bar);
        rep.add("on_boundary", search.best.on_boundary);
        rep.add("resolution", static_cast<std::uint64_t>(search.resolution));
        rep.write(format, out.stream());
    }

    out.finish(out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
