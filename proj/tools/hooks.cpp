// Command-line driver: single-shape computations, identity cross-checks, and
// the conjecture-screening sweep. See README.md for usage examples.

#include "eyd/excited.hpp"
#include "eyd/formulas.hpp"
#include "eyd/partition.hpp"
#include "eyd/screen.hpp"
#include "eyd/tableaux.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::ordered_json;

namespace {

ordered_json shape_json(const eyd::SkewShape& s) {
    ordered_json j;
    j["lambda"] = s.outer().str();
    j["mu"] = s.inner().str();
    return j;
}

ordered_json rat_json(const eyd::QRat& v) {
    ordered_json j;
    j["num"] = v.num().str();
    j["den"] = v.den().str();
    j["polynomial"] = v.is_polynomial();
    j["value"] = v.str();
    return j;
}

int run_eyd(const std::string& shape_arg, bool count_only, bool json) {
    const eyd::SkewShape s = eyd::SkewShape::parse(shape_arg);
    const std::vector<eyd::Diagram> diagrams = eyd::enumerate_eyd(s);
    if (json) {
        ordered_json j = shape_json(s);
        j["count"] = diagrams.size();
        if (!count_only) {
            ordered_json list = ordered_json::array();
            for (const eyd::Diagram& d : diagrams) {
                ordered_json cells = ordered_json::array();
                for (const eyd::Cell& c : d.cells()) cells.push_back({c.row, c.col});
                list.push_back(std::move(cells));
            }
            j["diagrams"] = std::move(list);
        }
        std::cout << j.dump() << '\n';
        return 0;
    }
    if (count_only) {
        std::cout << diagrams.size() << '\n';
        return 0;
    }
    for (const eyd::Diagram& d : diagrams) std::cout << d.str() << '\n';
    std::cout << "count: " << diagrams.size() << '\n';
    return 0;
}

int run_count(const std::string& shape_arg, bool oracle, int limit, bool json) {
    const eyd::SkewShape s = eyd::SkewShape::parse(shape_arg);
    const mpz_class f = eyd::naruse_f(s);
    std::optional<mpz_class> brute;
    if (oracle) {
        eyd::OracleLimits lim;
        lim.syt_cells = limit;
        brute = eyd::count_syt(s, lim);
    }
    const bool match = !brute || *brute == f;
    if (json) {
        ordered_json j = shape_json(s);
        j["count"] = f.get_str();
        if (brute) {
            j["oracle"] = brute->get_str();
            j["match"] = match;
        }
        std::cout << j.dump() << '\n';
    } else if (brute) {
        std::cout << "formula: " << f.get_str() << '\n'
                  << "oracle:  " << brute->get_str() << '\n'
                  << "match:   " << (match ? "yes" : "NO") << '\n';
    } else {
        std::cout << f.get_str() << '\n';
    }
    return match ? 0 : 2;
}

int run_fq(const std::string& shape_arg, bool json) {
    const eyd::SkewShape s = eyd::SkewShape::parse(shape_arg);
    const eyd::QRat fq = eyd::naruse_f_q(s);
    if (json) {
        ordered_json j = shape_json(s);
        j.update(rat_json(fq));
        std::cout << j.dump() << '\n';
    } else {
        std::cout << fq.str() << '\n';
    }
    return 0;
}

int run_hc(const std::string& shape_arg, int n, bool both_sides, bool json) {
    const eyd::SkewShape s = eyd::SkewShape::parse(shape_arg);
    const eyd::QRat product_side = eyd::hook_content_product(s, n);
    const eyd::QRat normalized = product_side / eyd::QRat(eyd::q_factorial(s.size()));
    const mpq_class hbar = eyd::hbar(s, n);
    std::optional<bool> sides_agree;
    if (both_sides) sides_agree = (eyd::hook_content_sum(s, n) == product_side);
    if (json) {
        ordered_json j = shape_json(s);
        j["n"] = n;
        j["H"] = rat_json(product_side);
        j["H_over_m_factorial"] = rat_json(normalized);
        j["hbar"] = hbar.get_str();
        if (sides_agree) j["sides_agree"] = *sides_agree;
        std::cout << j.dump() << '\n';
    } else {
        std::cout << "H(" << n << ";q) = " << product_side.str() << '\n'
                  << "H/[m]_q!  = " << normalized.str() << '\n'
                  << "Hbar      = " << hbar.get_str() << '\n';
        if (sides_agree)
            std::cout << "sum side = product side: " << (*sides_agree ? "yes" : "NO") << '\n';
    }
    return (!sides_agree || *sides_agree) ? 0 : 2;
}

int run_spec(const std::string& shape_arg, std::optional<int> n, bool series, int order,
             bool json) {
    const eyd::SkewShape s = eyd::SkewShape::parse(shape_arg);
    if (series) {
        const eyd::QSeries ser = eyd::skew_schur_series(s, order);
        if (json) {
            ordered_json j = shape_json(s);
            j["order"] = order;
            ordered_json coeffs = ordered_json::array();
            for (int k = 0; k <= order; ++k) coeffs.push_back(ser.coeff(k).get_str());
            j["coefficients"] = std::move(coeffs);
            j["value"] = ser.str();
            std::cout << j.dump() << '\n';
        } else {
            std::cout << ser.str() << '\n';
        }
        return 0;
    }
    if (!s.inner().empty())
        throw std::invalid_argument("spec: closed form needs a straight shape; use --series");
    if (!n) throw std::invalid_argument("spec: closed form needs -n");
    const eyd::QRat v = eyd::principal_specialization(s.outer(), *n);
    if (json) {
        ordered_json j = shape_json(s);
        j["n"] = *n;
        j.update(rat_json(v));
        std::cout << j.dump() << '\n';
    } else {
        std::cout << v.str() << '\n';
    }
    return 0;
}

int run_lr(const std::string& shape_arg, int limit, bool json) {
    const eyd::SkewShape s = eyd::SkewShape::parse(shape_arg);
    eyd::OracleLimits lim;
    lim.lr_cells = limit;
    lim.syt_cells = std::max(lim.syt_cells, limit);
    const auto coeffs = eyd::lr_coefficients(s.outer(), s.inner(), lim);
    const mpz_class direct = eyd::naruse_f(s);
    mpz_class expanded = 0;
    for (const auto& [nu, c] : coeffs)
        expanded += mpz_class(static_cast<long>(c)) * eyd::naruse_f(eyd::SkewShape(nu, eyd::Partition{}));
    const bool match = expanded == direct;
    if (json) {
        ordered_json j = shape_json(s);
        ordered_json table = ordered_json::array();
        for (const auto& [nu, c] : coeffs) {
            ordered_json row;
            row["nu"] = nu.str();
            row["coeff"] = c;
            table.push_back(std::move(row));
        }
        j["expansion"] = std::move(table);
        j["expanded_count"] = expanded.get_str();
        j["direct_count"] = direct.get_str();
        j["match"] = match;
        std::cout << j.dump() << '\n';
    } else {
        for (const auto& [nu, c] : coeffs) std::cout << nu.str() << ": " << c << '\n';
        std::cout << "expansion total: " << expanded.get_str() << '\n'
                  << "direct count:    " << direct.get_str() << '\n'
                  << "match:           " << (match ? "yes" : "NO") << '\n';
    }
    return match ? 0 : 2;
}

int run_sweep_cmd(const eyd::SweepConfig& cfg, const std::string& out_path, bool resume) {
    std::optional<std::stringstream> previous;
    if (resume) {
        std::ifstream in(out_path);
        if (in) {
            previous.emplace();
            *previous << in.rdbuf();
        }
    }
    eyd::SweepSummary summary;
    std::istream* resume_from = previous ? &*previous : nullptr;
    if (out_path.empty()) {
        summary = eyd::run_sweep(cfg, resume_from, std::cout);
    } else {
        std::ofstream out(out_path, std::ios::trunc);
        if (!out) throw std::runtime_error("sweep: cannot open output file " + out_path);
        summary = eyd::run_sweep(cfg, resume_from, out);
        std::cout << "pass=" << summary.pass << " passcanonical=" << summary.pass_canonical
                  << " inconclusive=" << summary.inconclusive << " fail=" << summary.fail
                  << " skipped=" << summary.skipped << " total=" << summary.total() << '\n';
    }
    return summary.fail > 0 ? 2 : 0;
}

std::vector<eyd::CheckKind> parse_checks(const std::string& arg) {
    std::vector<eyd::CheckKind> out;
    if (arg.empty() || arg == "all") return out;
    std::stringstream ss(arg);
    std::string name;
    while (std::getline(ss, name, ',')) {
        auto kind = eyd::check_kind_from_string(name);
        if (!kind)
            throw CLI::ValidationError("--checks", "unknown check '" + name + "'");
        out.push_back(*kind);
    }
    return out;
}

std::pair<int, int> parse_offsets(const std::string& arg) {
    const auto dots = arg.find("..");
    int lo = 0, hi = 0;
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(arg);
        } else {
            lo = std::stoi(arg.substr(0, dots));
            hi = std::stoi(arg.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw CLI::ValidationError("--n-offsets", "expected 'a..b' or a single integer");
    }
    if (lo < 0 || hi < lo)
        throw CLI::ValidationError("--n-offsets", "need 0 <= a <= b");
    return {lo, hi};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact hook-length and hook-content computations over excited Young diagrams"};
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "machine-readable output, one JSON object per line");

    int rc = 0;
    std::string shape_arg;

    auto* eyd_cmd = app.add_subcommand("eyd", "list the excited diagrams of a skew shape");
    bool eyd_count = false;
    eyd_cmd->add_option("shape", shape_arg, "skew shape, e.g. 3,3,2,1/2,1")->required();
    eyd_cmd->add_flag("--count", eyd_count, "print only the number of diagrams");
    eyd_cmd->fallthrough();
    eyd_cmd->callback([&] { rc = run_eyd(shape_arg, eyd_count, json); });

    auto* count_cmd =
        app.add_subcommand("count", "standard tableaux count by the hook-length formula");
    bool count_oracle = false;
    int count_limit = 12;
    count_cmd->add_option("shape", shape_arg)->required();
    count_cmd->add_flag("--oracle", count_oracle, "cross-check by direct enumeration");
    count_cmd->add_option("--limit", count_limit, "cell ceiling for the oracle (default 12)");
    count_cmd->fallthrough();
    count_cmd->callback([&] { rc = run_count(shape_arg, count_oracle, count_limit, json); });

    auto* fq_cmd = app.add_subcommand("fq", "q-analogue of the tableaux count, fully reduced");
    fq_cmd->add_option("shape", shape_arg)->required();
    fq_cmd->fallthrough();
    fq_cmd->callback([&] { rc = run_fq(shape_arg, json); });

    auto* hc_cmd = app.add_subcommand("hc", "hook-content polynomial H(n;q) and Hbar(n)");
    int hc_n = 0;
    bool hc_both = false;
    hc_cmd->add_option("shape", shape_arg)->required();
    hc_cmd->add_option("-n", hc_n, "number of variables")->required();
    hc_cmd->add_flag("--both-sides", hc_both,
                     "also evaluate the excited-diagram sum and compare");
    hc_cmd->fallthrough();
    hc_cmd->callback([&] { rc = run_hc(shape_arg, hc_n, hc_both, json); });

    auto* spec_cmd =
        app.add_subcommand("spec", "principal specialization of the (skew) Schur function");
    std::optional<int> spec_n;
    bool spec_series = false;
    int spec_order = 20;
    spec_cmd->add_option("shape", shape_arg)->required();
    spec_cmd->add_option("-n", spec_n, "number of variables (closed form, straight shapes)");
    spec_cmd->add_flag("--series", spec_series, "truncated series in infinitely many variables");
    spec_cmd->add_option("-N,--order", spec_order, "series truncation order (default 20)");
    spec_cmd->fallthrough();
    spec_cmd->callback([&] { rc = run_spec(shape_arg, spec_n, spec_series, spec_order, json); });

    auto* lr_cmd =
        app.add_subcommand("lr", "Littlewood-Richardson expansion and count cross-check");
    int lr_limit = 12;
    lr_cmd->add_option("shape", shape_arg)->required();
    lr_cmd->add_option("--limit", lr_limit, "cell ceiling for the enumeration (default 12)");
    lr_cmd->fallthrough();
    lr_cmd->callback([&] { rc = run_lr(shape_arg, lr_limit, json); });

    auto* sweep_cmd = app.add_subcommand("sweep", "screening sweep over all shapes up to a size");
    eyd::SweepConfig cfg;
    std::string checks_arg = "all";
    std::string offsets_arg = "0..3";
    std::string out_path;
    bool resume = false;
    sweep_cmd->add_option("--max-size", cfg.max_size, "largest |lambda| (default 6)");
    sweep_cmd->add_option("--checks", checks_arg,
                          "comma-separated check names, or 'all' (default)");
    sweep_cmd->add_option("--n-offsets", offsets_arg,
                          "n range as offsets from length(lambda), e.g. 0..3");
    sweep_cmd->add_option("--order", cfg.order, "series truncation for Eq2/Eq3 (default 20)");
    sweep_cmd->add_option("--workers", cfg.workers, "worker threads (default 1)");
    sweep_cmd->add_option("-o,--output", out_path, "record file (default: stdout)");
    sweep_cmd->add_flag("--resume", resume, "reuse records already present in the output file");
    sweep_cmd->add_flag("--timings", cfg.timings,
                        "emit real elapsed times (breaks byte-reproducibility)");
    sweep_cmd->fallthrough();
    sweep_cmd->callback([&] {
        cfg.json = json;
        cfg.checks = parse_checks(checks_arg);
        std::tie(cfg.n_offset_lo, cfg.n_offset_hi) = parse_offsets(offsets_arg);
        if (resume && out_path.empty())
            throw CLI::ValidationError("--resume", "needs -o to know what to resume from");
        rc = run_sweep_cmd(cfg, out_path, resume);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return rc;
}
