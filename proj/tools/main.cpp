// Command-line front end. Talks to the library only through hardy_c.h.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hardy_c.h"

namespace {

constexpr int exit_input_error = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path)
{
    if (path == "-") {
        return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::optional<std::string> read_optional(const std::string& path)
{
    return path.empty() ? std::nullopt : std::optional<std::string>(read_input(path));
}

const char* c_str(const std::optional<std::string>& s)
{
    return s ? s->c_str() : nullptr;
}

/// Settings shared by every subcommand. Precedence, lowest first: built-in
/// defaults, the --config file, HC_* environment variables, flags.
struct GlobalOptions {
    hc_config config = hc_config_default();
    std::string out;
    std::string config_file;
    std::vector<std::pair<std::string, CLI::Option*>> keyed;

    void attach(CLI::App& app)
    {
        const auto add = [&](const std::string& key, CLI::Option* opt) { keyed.emplace_back(key, opt); };
        add("truncation", app.add_option("--truncation", config.truncation, "Series truncation N (>= 16)")
                              ->capture_default_str());
        add("tol", app.add_option("--tol", config.tol, "Verification tolerance")->capture_default_str());
        add("samples", app.add_option("--samples", config.samples, "Boundary samples for certificates")
                           ->capture_default_str());
        add("radius", app.add_option("--radius", config.radius, "Certification radius in (0, 1)")
                          ->capture_default_str());
        add("seed", app.add_option("--seed", config.seed, "Random seed")->capture_default_str());
        add("out", app.add_option("--out", out, "Write the JSON report here instead of stdout"));
        app.add_option("--config", config_file, "TOML-style file with any of the options above");
    }

    /// Fills options not given on the command line from the environment and
    /// then from the config file.
    void apply_fallbacks()
    {
        std::vector<CLI::ConfigItem> items;
        if (!config_file.empty()) {
            try {
                items = CLI::ConfigTOML().from_file(config_file);
            } catch (const CLI::Error& e) {
                throw UsageError("config file " + config_file + ": " + e.what());
            }
            for (const auto& item : items) {
                bool known = false;
                for (const auto& kv : keyed) {
                    known = known || kv.first == item.name;
                }
                if (!known || !item.parents.empty()) {
                    throw UsageError("config file " + config_file + ": unknown key " + item.fullname());
                }
            }
        }
        for (auto& [key, opt] : keyed) {
            if (opt->count() > 0) {
                continue;
            }
            std::optional<std::string> value;
            std::string env = "HC_" + key;
            for (auto& c : env) {
                c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            }
            if (const char* v = std::getenv(env.c_str()); v != nullptr && *v != '\0') {
                value = v;
            } else {
                for (const auto& item : items) {
                    if (item.name == key && item.inputs.size() == 1) {
                        value = item.inputs.front();
                    }
                }
            }
            if (value) {
                try {
                    opt->add_result(*value);
                    opt->run_callback();
                } catch (const CLI::Error& e) {
                    throw UsageError("bad value for " + key + ": " + e.what());
                }
            }
        }
    }
};

int finish(hc_status status, hc_result* result, const std::string& out)
{
    if (status != HC_OK) {
        std::cerr << "error: " << hc_status_name(status) << ": " << hc_last_error() << "\n";
        return exit_input_error;
    }
    const int code = hc_result_exit_code(result);
    const std::string json = hc_result_json(result);
    const std::string message = hc_result_message(result);
    hc_result_free(result);
    if (out.empty()) {
        std::cout << json;
    } else {
        std::ofstream f(out, std::ios::binary);
        if (!(f << json)) {
            std::cerr << "error: cannot write " << out << "\n";
            return exit_input_error;
        }
    }
    if (!message.empty()) {
        std::cerr << message << "\n";
    }
    return code;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Hardy-space interpolation, subband decomposition and kernel checks"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", hc_version());
    GlobalOptions global;
    global.attach(app);

    std::string series_path, blaschke_path, problem_path, parameter_path, data_path, schur_path;
    std::string route = "direct";
    bool cauchy_rows = false;
    std::string suite = "all";
    int grid_points = 32;
    double grid_radius = 0.95;

    auto* decompose = app.add_subcommand("decompose", "Split a series into its subband parts for b");
    decompose->add_option("series", series_path, "Series JSON file (- for stdin)")->required();
    decompose->add_option("blaschke", blaschke_path, "Blaschke product JSON file")->required();

    auto* interpolate = app.add_subcommand("interpolate", "Solve a linear-functional or derivative problem");
    interpolate->add_option("problem", problem_path, "Problem JSON file")->required();
    interpolate->add_option("--parameter", parameter_path,
                            "Free parameter: series list (direct) or a Schur series (schur route)");
    interpolate->add_option("--route", route, "direct or schur")
        ->check(CLI::IsMember({"direct", "schur"}))
        ->capture_default_str();
    interpolate->add_flag("--cauchy-rows", cauchy_rows, "Derivative problems: use the Cauchy rows");

    auto* np = app.add_subcommand("np", "Tangential Nevanlinna-Pick interpolation");
    np->add_option("data", data_path, "Interpolation data JSON file")->required();
    np->add_option("--parameter", parameter_path, "Schur parameter series JSON file");

    auto* leech = app.add_subcommand("leech", "Schur representation of a series");
    leech->add_option("series", series_path, "Series JSON file")->required();
    leech->add_option("--blaschke", blaschke_path, "Represent through the basis of this Blaschke product");

    auto* verify = app.add_subcommand("verify", "Run verification batteries");
    verify->add_option("suite", suite, "cuntz, leech, dbr, interp or all")
        ->check(CLI::IsMember({"cuntz", "leech", "dbr", "interp", "all"}))
        ->capture_default_str();

    auto* dbr = app.add_subcommand("dbr-check", "Kernel identities for s composed with b");
    dbr->add_option("blaschke", blaschke_path, "Blaschke product JSON file")->required();
    dbr->add_option("--schur", schur_path, "s as a Blaschke product or a polynomial series (default 0)");
    dbr->add_option("--grid-points", grid_points, "Kernel grid size")->capture_default_str();
    dbr->add_option("--grid-radius", grid_radius, "Kernel grid radius")->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_input_error;
    }

    try {
        global.apply_fallbacks();
        const hc_config* cfg = &global.config;
        hc_result* result = nullptr;
        hc_status status = HC_OK;
        if (*decompose) {
            const auto s = read_input(series_path);
            const auto b = read_input(blaschke_path);
            status = hc_cmd_decompose(s.c_str(), b.c_str(), cfg, &result);
        } else if (*interpolate) {
            const auto p = read_input(problem_path);
            const auto g = read_optional(parameter_path);
            status = hc_cmd_interpolate(p.c_str(), c_str(g), route.c_str(), cauchy_rows ? 1 : 0, cfg, &result);
        } else if (*np) {
            const auto d = read_input(data_path);
            const auto g = read_optional(parameter_path);
            status = hc_cmd_np(d.c_str(), c_str(g), cfg, &result);
        } else if (*leech) {
            const auto s = read_input(series_path);
            const auto b = read_optional(blaschke_path);
            status = hc_cmd_leech(s.c_str(), c_str(b), cfg, &result);
        } else if (*verify) {
            status = hc_cmd_verify(suite.c_str(), cfg, &result);
        } else if (*dbr) {
            const auto b = read_input(blaschke_path);
            const auto s = read_optional(schur_path);
            status = hc_cmd_dbr_check(b.c_str(), c_str(s), grid_points, grid_radius, cfg, &result);
        }
        return finish(status, result, global.out);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}
