#include "latpath/cli.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "latpath/dp.hpp"
#include "latpath/gfengine.hpp"
#include "latpath/grid.hpp"
#include "latpath/series.hpp"
#include "latpath/steps.hpp"
#include "latpath/verify.hpp"

namespace latpath::cli {

namespace {

struct Options {
    std::string kind;
    std::optional<int> max;
    std::optional<int> nmax;
    std::optional<int> nmin;
    std::optional<int> order;
    int p = 2;
    int h = 0;
    std::optional<std::string> steps;
    std::string weights;
    std::string format;
    std::string out;
    int rise_max = 10;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::uint64_t enumeration_cap() {
    const char* text = std::getenv("LATPATH_ENUM_CAP");
    if (text == nullptr || *text == '\0') {
        return oracle::kDefaultEnumerationCap;
    }
    const std::string value(text);
    if (!std::all_of(value.begin(), value.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        throw UsageError("LATPATH_ENUM_CAP must be a non-negative integer, got '" + value + "'");
    }
    try {
        return std::stoull(value);
    } catch (const std::out_of_range&) {
        throw UsageError("LATPATH_ENUM_CAP is out of range: " + value);
    }
}

StepSet steps_of(const Options& o, const char* fallback) { return StepSet::parse(o.steps.value_or(fallback)); }

std::string render(const Grid& grid, const Options& o, bool omit_zeros = false) {
    return o.format == "json" ? to_json(grid) : to_tsv(grid, omit_zeros);
}

std::string table(const Options& o) {
    const int M = o.max.value_or(6);
    const std::string& k = o.kind;
    if (k == "ballot") {
        return render(dp::ballot(M), o);
    }
    if (k == "ballot-ext") {
        return render(dp::ballot_extended(M), o);
    }
    if (k == "cp") {
        return render(dp::c_p(o.p, M), o);
    }
    if (k == "cp-ext") {
        return render(dp::c_p_extended(o.p, M), o);
    }
    if (k == "dp") {
        return render(dp::d_p(o.p, M, o.nmax.value_or(-1)), o);
    }
    if (k == "eph") {
        return render(dp::e_ph(o.p, o.h, M, o.nmax.value_or(-1)), o);
    }
    if (k == "d2-ext") {
        return render(dp::d2_extended(o.nmax.value_or(M), M), o);
    }
    if (k == "s") {
        return render(dp::s_count(M, o.nmax.value_or(-1)), o, true);
    }
    if (k == "s-prime") {
        const int top = o.nmax.value_or(M);
        if (top < 0) {
            throw UsageError("--nmax must be non-negative");
        }
        const auto cols = gf::ns_family(static_cast<std::size_t>(top)).columns(M);
        Grid g(0, M, 0, top);
        for (int m = 0; m <= M; ++m) {
            for (int n = 0; n <= top; ++n) {
                g.set(m, n, cols[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)]);
            }
        }
        return render(g, o);
    }
    const StepSet steps = steps_of(o, "-1,0,1,2");
    const Weights weights = Weights::parse(steps, o.weights);
    if (k == "ph") {
        Grid g = dp::p_h(steps, weights, o.h, M);
        if (o.nmax) {
            g = g.cropped(0, M, 0, std::min(*o.nmax, g.n_max()));
        }
        return render(g, o);
    }
    // ph-ext
    const int K = steps.max_step();
    return render(dp::p_h_extended(steps, weights, o.h, M, o.nmin.value_or(-K - 1), o.nmax), o);
}

std::string series(const Options& o) {
    const auto order = static_cast<std::size_t>(o.order.value_or(10));
    if (o.order && *o.order < 0) {
        throw UsageError("--order must be non-negative");
    }
    Series s;
    if (o.kind == "catalan") {
        s = gf::catalan_gf(order);
    } else if (o.kind == "gamma") {
        s = gf::gamma(o.p, order);
    } else {
        const StepSet steps = steps_of(o, "-1,0,1,2");
        const Weights weights = Weights::parse(steps, o.weights);
        s = o.kind == "f" ? gf::solve_f(steps, weights, order) : gf::solve_g(steps, weights, order);
    }
    if (o.format == "json") {
        nlohmann::json j;
        j["series"] = o.kind;
        j["order"] = s.order();
        j["coefficients"] = nlohmann::json::parse(to_json(s));
        return j.dump() + "\n";
    }
    std::string line;
    for (const auto& c : s.coefficients()) {
        if (!line.empty()) {
            line += ',';
        }
        line += to_string(c);
    }
    return line + "\n";
}

verify::Report verify_report(const Options& o) {
    const std::string& k = o.kind;
    auto size = [&](int fallback) { return o.max.value_or(fallback); };
    if (k == "thm51" || k == "lemma53") {
        std::vector<verify::Case> cases;
        if (o.steps) {
            const StepSet steps = StepSet::parse(*o.steps);
            cases.push_back({steps, Weights::parse(steps, o.weights), o.h});
        } else {
            cases = verify::theorem_fixtures();
        }
        return k == "thm51" ? verify::thm51(cases, size(10)) : verify::lemma53(cases, size(10));
    }
    if (k == "ns") {
        return verify::ns(size(15));
    }
    if (k == "lemma31") {
        return verify::lemma31(size(200));
    }
    if (k == "eq204") {
        return verify::eq204(size(10));
    }
    if (k == "rgf") {
        return verify::rgf(size(10), 2 * size(10));
    }
    if (k == "bijection") {
        return verify::bijection(size(10));
    }
    if (k == "catalan-line") {
        return verify::catalan_line(size(30));
    }
    return verify::motzkin_line(size(20));
}

void emit(const std::string& text, const Options& o, std::ostream& out) {
    if (o.out.empty()) {
        out << text;
        return;
    }
    std::ofstream file(o.out, std::ios::binary);
    if (!file) {
        throw UsageError("cannot open --out file " + o.out);
    }
    file << text;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Lattice path counts, redundant generating functions and their cross-checks.", "latpath"};
    app.failure_message(CLI::FailureMessage::help);
    // --h is the start height, so help is long-form only.
    app.set_help_flag("--help", "Print this help message and exit");
    app.require_subcommand(1);

    auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out, "Write output to FILE instead of stdout"); };
    auto add_path_flags = [&](CLI::App* sub) {
        sub->add_option("--steps", o.steps, "Step set T as comma separated rises (default -1,0,1,2)");
        sub->add_option("--weights", o.weights, "Weights as i=p/q pairs (default all 1)");
    };

    auto* table_cmd = app.add_subcommand("table", "Print a count table (rows n descending, header row last)");
    table_cmd->add_option("kind", o.kind, "Table to print")
        ->required()
        ->check(CLI::IsMember({"ballot", "ballot-ext", "cp", "cp-ext", "dp", "d2-ext", "s", "s-prime", "ph", "ph-ext",
                               "eph"}));
    table_cmd->add_option("--max", o.max, "Largest column m (default 6)");
    table_cmd->add_option("--nmax", o.nmax, "Largest row n");
    table_cmd->add_option("--nmin", o.nmin, "Smallest row n for ph-ext (default -K-1)");
    table_cmd->add_option("--p", o.p, "Slope p (default 2)");
    table_cmd->add_option("--h", o.h, "Start height h (default 0)");
    add_path_flags(table_cmd);
    o.format = "tsv";
    table_cmd->add_option("--format", o.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
    add_out(table_cmd);

    auto* series_cmd = app.add_subcommand("series", "Expand a power series; coefficients from t^0 up");
    series_cmd->add_option("kind", o.kind, "Series to expand")
        ->required()
        ->check(CLI::IsMember({"f", "g", "gamma", "catalan"}));
    series_cmd->add_option("--order", o.order, "Truncation order (default 10)");
    series_cmd->add_option("--p", o.p, "p for gamma (default 2)");
    add_path_flags(series_cmd);
    std::string series_format = "text";
    series_cmd->add_option("--format", series_format, "text or json")->check(CLI::IsMember({"text", "json"}));
    add_out(series_cmd);

    auto* verify_cmd = app.add_subcommand("verify", "Run a cross-check and print a PASS/FAIL report");
    verify_cmd->add_option("kind", o.kind, "Check to run")
        ->required()
        ->check(CLI::IsMember({"ns", "thm51", "lemma31", "eq204", "rgf", "bijection", "lemma53", "catalan-line",
                               "motzkin-line"}));
    verify_cmd->add_option("--max", o.max, "Size bound of the check");
    verify_cmd->add_option("--h", o.h, "Start height for a single thm51/lemma53 case");
    add_path_flags(verify_cmd);
    add_out(verify_cmd);

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force enumeration");
    oracle_cmd->require_subcommand(1);
    auto* compare_cmd = oracle_cmd->add_subcommand("compare", "Compare enumeration with every dp family");
    compare_cmd->add_option("--max", o.max, "Largest m for unit-step grids (default 8)");
    compare_cmd->add_option("--rise-max", o.rise_max, "Largest m for rise-path grids (default 10)");
    add_out(compare_cmd);

    auto* experiment_cmd = app.add_subcommand("experiment", "Exploratory tables without claimed properties");
    experiment_cmd->require_subcommand(1);
    auto* line_cmd = experiment_cmd->add_subcommand("dp-line", "D_p continued leftward like the p = 2 table");
    line_cmd->add_option("--p", o.p, "Slope p (default 2)");
    line_cmd->add_option("--max", o.max, "Largest column m (default 4)");
    line_cmd->add_option("--nmax", o.nmax, "Largest row n (default 6)");
    line_cmd->add_option("--format", o.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));
    add_out(line_cmd);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (table_cmd->parsed()) {
            emit(table(o), o, out);
            return kExitOk;
        }
        if (series_cmd->parsed()) {
            o.format = series_format;
            emit(series(o), o, out);
            return kExitOk;
        }
        if (verify_cmd->parsed()) {
            const verify::Report report = verify_report(o);
            emit(report.text(), o, out);
            return report.passed() ? kExitOk : kExitFail;
        }
        if (compare_cmd->parsed()) {
            const verify::Report report = verify::oracle_compare(o.max.value_or(8), o.rise_max, enumeration_cap());
            emit(report.text(), o, out);
            return report.passed() ? kExitOk : kExitFail;
        }
        emit(render(dp::d_p_extended_experimental(o.p, o.nmax.value_or(6), o.max.value_or(4)), o), o, out);
        return kExitOk;
    } catch (const std::exception& e) {
        err << "latpath: " << e.what() << "\n";
        return kExitUsage;
    }
}

}  // namespace latpath::cli
