/**
 * @file kacmod_main.cpp
 * @brief kacmod command-line interface: build, verify, classify.
 *
 * Exit codes: 0 success, 1 verification failure, 2 build/compute error,
 * 64 usage error.
 */
#include <kacmod/bundle.hpp>

#include <CLI11.hpp>

#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitComputeError = 2;
constexpr int kExitUsage = 64;

std::vector<double> parse_csv_doubles(const std::string& text) {
    std::vector<double> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const double v = std::stod(item, &used);
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
            ++used;
        if (used != item.size())
            throw std::invalid_argument("malformed number: " + item);
        out.push_back(v);
    }
    return out;
}

kacmod::HighestWeight parse_hw(const std::string& text) {
    const auto vals = parse_csv_doubles(text);
    if (vals.size() != 3)
        throw std::invalid_argument("--hw expects three comma-separated values");
    const kacmod::HighestWeight hw{vals[0], vals[1], vals[2]};
    kacmod::validate_highest_weight(hw);
    return hw;
}

std::array<double, 3> parse_avec(const std::string& text) {
    const auto vals = parse_csv_doubles(text);
    if (vals.size() != 3)
        throw std::invalid_argument("a-vector expects three comma-separated values");
    return {vals[0], vals[1], vals[2]};
}

void write_output(const std::string& path, const std::string& payload) {
    if (path.empty()) {
        std::fwrite(payload.data(), 1, payload.size(), stdout);
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file: " + path);
    f.write(payload.data(), static_cast<std::streamsize>(payload.size()));
}

std::string format_g(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%g", v);
    return buf;
}

int run_build(const std::string& hw_text, double q, const std::string& a_text,
              bool factor, const std::string& out_path) {
    kacmod::HighestWeight hw;
    std::array<double, 3> a{};
    std::optional<kacmod::QContext> ctx;
    try {
        hw = parse_hw(hw_text);
        a = parse_avec(a_text);
        ctx.emplace(q);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << std::endl;
        return kExitUsage;
    }
    const auto bundle = kacmod::make_bundle(*ctx, hw, a, factor);
    write_output(out_path, kacmod::serialize(bundle));
    return kExitOk;
}

int run_verify(const std::vector<std::string>& hw_texts, const std::string& grid,
               const std::string& qlist_text, const std::string& alist_text,
               double tol, const std::string& out_path) {
    kacmod::SweepConfig cfg;
    try {
        const kacmod::SweepConfig defaults = kacmod::default_sweep_config();
        cfg.qs = defaults.qs;
        cfg.avecs = defaults.avecs;
        if (!hw_texts.empty()) {
            for (const auto& t : hw_texts) cfg.weights.push_back(parse_hw(t));
        } else if (grid == "default") {
            cfg.weights = defaults.weights;
        } else if (grid == "empty") {
            // no cells: trivially verified
        } else {
            throw std::invalid_argument("unknown grid name: " + grid);
        }
        if (!qlist_text.empty()) {
            cfg.qs = parse_csv_doubles(qlist_text);
            if (cfg.qs.empty()) throw std::invalid_argument("--q-list is empty");
        }
        if (!alist_text.empty()) {
            cfg.avecs.clear();
            std::stringstream ss(alist_text);
            std::string part;
            while (std::getline(ss, part, ';')) cfg.avecs.push_back(parse_avec(part));
            if (cfg.avecs.empty()) throw std::invalid_argument("--a-list is empty");
        }
        if (!(tol > 0.0)) throw std::invalid_argument("--tol must be positive");
        cfg.tol = tol;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << std::endl;
        return kExitUsage;
    }

    const auto reports = kacmod::sweep(cfg);
    std::size_t failures = 0;
    for (const auto& r : reports)
        if (!r.passed) ++failures;
    if (!out_path.empty())
        write_output(out_path, kacmod::serialize_reports(reports, cfg.tol));
    std::cout << "checked " << reports.size() << " relation reports: " << failures
              << " failure(s)" << std::endl;
    for (const auto& r : reports)
        if (!r.passed)
            std::cout << "FAIL " << r.relation_id << " [" << r.context
                      << "] residual=" << r.max_residual << std::endl;
    return failures == 0 ? kExitOk : kExitVerifyFailed;
}

int run_classify(const std::string& hw_text) {
    kacmod::HighestWeight hw;
    try {
        hw = parse_hw(hw_text);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << std::endl;
        return kExitUsage;
    }
    const auto cls = kacmod::classify(hw);
    const int d = kacmod::gl2_width(hw);
    std::string line = std::string(kacmod::kind_name(cls.kind)) +
                       " c1=" + format_g(cls.c1) + " c2=" + format_g(cls.c2);
    if (cls.kind == kacmod::Classification::Kind::typical)
        line += " dim=" + std::to_string(4 * d);
    else if (cls.kind == kacmod::Classification::Kind::class1)
        line += " factor_dim=" + std::to_string(2 * d + 1);
    else
        line += " factor_dim=" + std::to_string(2 * d - 1);
    std::cout << line << std::endl;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-dimensional induced modules of the q-deformed gl(2/1): "
                 "build matrices, verify relations, classify weights"};
    app.require_subcommand(1);

    std::string hw_text, a_text = "1,1,1", out_path;
    double q = 1.7;
    bool factor = false;
    CLI::App* build = app.add_subcommand("build", "export generator matrices as JSON");
    build->add_option("--hw", hw_text, "highest weight m13,m23,m33")->required();
    build->add_option("--q", q, "deformation parameter (positive, != 1)");
    build->add_option("--a", a_text, "normalization constants a1,a2,a3");
    build->add_flag("--factor", factor, "export the factor module (nontypical only)");
    build->add_option("--out", out_path, "output path (default: stdout)");

    std::vector<std::string> verify_hw_texts;
    std::string grid = "default", qlist_text, alist_text, verify_out;
    double verify_tol = 1e-10;
    CLI::App* verify = app.add_subcommand("verify", "run the relation suite over a grid");
    verify->add_option("--hw", verify_hw_texts, "highest weight(s) m13,m23,m33");
    verify->add_option("--grid", grid, "named grid: default | empty");
    verify->add_option("--q-list", qlist_text, "comma-separated q values");
    verify->add_option("--a-list", alist_text,
                       "semicolon-separated a-vectors, e.g. 1,1,1;2,1,0.5");
    verify->add_option("--tol", verify_tol, "relative tolerance");
    verify->add_option("--out", verify_out, "write the JSON report here");

    std::string classify_hw_text;
    CLI::App* classify_cmd = app.add_subcommand("classify", "print typicality class");
    classify_cmd->add_option("--hw", classify_hw_text, "highest weight m13,m23,m33")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError&) {
        std::cerr << "usage error; see --help" << std::endl;
        return kExitUsage;
    }

    try {
        if (*build) return run_build(hw_text, q, a_text, factor, out_path);
        if (*verify)
            return run_verify(verify_hw_texts, grid, qlist_text, alist_text,
                              verify_tol, verify_out);
        if (*classify_cmd) return run_classify(classify_hw_text);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << std::endl;
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << std::endl;
        return kExitComputeError;
    }
    return kExitUsage;
}
