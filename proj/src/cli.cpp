#include "latvis/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <memory>
#include <sstream>

#include "latvis/base_set_io.hpp"
#include "latvis/counting.hpp"
#include "latvis/density.hpp"
#include "latvis/error_report.hpp"
#include "latvis/format.hpp"
#include "latvis/tables.hpp"

namespace latvis {

namespace {

struct Options {
    int k = 2;
    std::uint64_t level = 1;
    std::uint64_t x = 0;
    std::uint64_t n = 0;
    std::string set;
    std::string engine = "sieve";
    double tol = static_cast<double>(kDefaultDensityTolerance);
    std::string xs;
    int which = 1;
    unsigned threads = 0;
    std::uint64_t max_x = 0;
    std::string output;
};

std::vector<std::uint64_t> parse_size_list(const std::string& text) {
    std::vector<std::uint64_t> out;
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) {
        try {
            std::size_t used = 0;
            const unsigned long long value = std::stoull(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(value);
        } catch (const std::logic_error&) {
            throw ParseError("--xs: expected comma-separated positive integers, got '" + item + "'", 0);
        }
    }
    if (out.empty()) throw ParseError("--xs: empty list", 0);
    return out;
}

void cmd_validate(const Options& o, std::ostream& out) {
    const CurveExponent k(o.k);
    const auto points = load_base_set(o.set);
    out << "N=" << points.size() << "\n";
    out << "k=" << k.value() << "\n";
    out << "bound=2^(k+1)=" << u128_to_string(max_base_set_size(k)) << "\n";
    for (std::size_t i = 0; i < points.size(); ++i) {
        for (std::size_t j = i + 1; j < points.size(); ++j) {
            out << "pair " << points[i] << "-" << points[j] << ": ";
            const std::int64_t du = checked_difference(points[j].u, points[i].u);
            const std::int64_t dv = checked_difference(points[j].v, points[i].v);
            if (du == 0 && dv == 0) out << "duplicate\n";
            else if (du == 0 || dv == 0) out << "degenerate (shared coordinate)\n";
            else {
                const auto g = gcd_k(du, dv, k);
                out << "gcd_k=" << g << (g == 1 ? " ok" : " not visible") << "\n";
            }
        }
    }
    validate_base_set(points, k);
    out << "status=valid\n";
}

void cmd_count(const Options& o, std::ostream& out) {
    const CurveExponent k(o.k);
    const VisibilityLevel level(o.level);
    const auto points = load_base_set(o.set);
    const ValidatedBaseSet set = validate_base_set(points, k);
    const CountOptions options{o.max_x, o.threads};

    const Engine engine = parse_engine(o.engine);
    CountResult result = [&] {
        switch (engine) {
            case Engine::brute: return count_brute(set, o.x, level, options);
            case Engine::sieve: return count_sieve(set, o.x, level, options);
            case Engine::moebius: break;
        }
        if (points.size() != 1 || points.front() != LatticePoint{0, 0} || level.value() != 1)
            throw DomainError("the moebius engine counts only level 1 against the single base point (0,0)");
        return CountResult{count_moebius_origin(k, o.x), 0, o.x, level, set, Engine::moebius};
    }();
    out << count_csv_header() << "\n" << to_csv_row(result) << "\n";
}

void cmd_density(const Options& o, std::ostream& out) {
    const auto result = density(o.n, CurveExponent(o.k), VisibilityLevel(o.level), o.tol);
    out << density_csv_header() << "\n" << to_csv_row(result) << "\n";
}

void cmd_table(const Options& o, std::ostream& out) {
    const auto rows = reproduce_table(o.which, o.x, CountOptions{o.max_x, o.threads});
    out << table_csv_header() << "\n";
    for (const auto& row : rows) out << to_csv_row(row) << "\n";
}

void cmd_error_report(const Options& o, std::ostream& out) {
    const CurveExponent k(o.k);
    const auto points = load_base_set(o.set);
    const ValidatedBaseSet set = validate_base_set(points, k);
    const auto xs = parse_size_list(o.xs);
    const auto report =
        empirical_error_report(set, VisibilityLevel(o.level), xs, o.tol, CountOptions{o.max_x, o.threads});
    out << error_report_csv_header() << "\n";
    for (const auto& row : report.rows) out << to_csv_row(row) << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Joint visibility of lattice points along curves y - v = r (x - u)^k", "latvis"};
    app.require_subcommand(1);
    Options o;

    auto add_k = [&](CLI::App* sub) { sub->add_option("--k", o.k, "curve exponent k")->required(); };
    auto add_level = [&](CLI::App* sub) { sub->add_option("--level", o.level, "visibility level L")->required(); };
    auto add_set = [&](CLI::App* sub) {
        sub->add_option("--set", o.set, "base set: file path, or inline \"(u,v);(u,v)\"")->required();
    };
    auto add_runtime = [&](CLI::App* sub) {
        sub->add_option("--threads", o.threads, "worker threads (0 = all cores)");
        sub->add_option("--max-x", o.max_x, "override the engine's x guard");
    };

    auto* validate = app.add_subcommand("validate", "check that a base set is pairwise k-visible");
    add_k(validate);
    add_set(validate);

    auto* count = app.add_subcommand("count", "count jointly visible points in [1, x]^2");
    add_k(count);
    count->add_option("--x", o.x, "square side")->required();
    add_level(count);
    add_set(count);
    count->add_option("--engine", o.engine, "brute | sieve | moebius")
        ->check(CLI::IsMember({"brute", "sieve", "moebius"}));
    add_runtime(count);

    auto* dens = app.add_subcommand("density", "theoretical density (Euler product)");
    add_k(dens);
    dens->add_option("--n", o.n, "base set cardinality N")->required();
    add_level(dens);
    dens->add_option("--tol", o.tol, "certified absolute tolerance");

    auto* table = app.add_subcommand("table", "reproduce density table 1 or 2");
    table->add_option("--which", o.which, "1: {(0,0),(1,1)}, 2: {(0,0),(1,2),(2,1)}")
        ->required()
        ->check(CLI::Range(1, 2));
    o.x = kTableDefaultX;
    table->add_option("--x", o.x, "square side");
    add_runtime(table);

    auto* report = app.add_subcommand("error-report", "measured count - x^2 density along a list of x");
    add_k(report);
    add_level(report);
    add_set(report);
    report->add_option("--xs", o.xs, "comma-separated increasing sizes")->required();
    report->add_option("--tol", o.tol, "density tolerance");
    add_runtime(report);

    for (auto* sub : {count, dens, table, report}) sub->add_option("--output", o.output, "write CSV here instead of stdout");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    std::ostringstream buffer;
    try {
        if (*validate) cmd_validate(o, out);
        else if (*count) cmd_count(o, buffer);
        else if (*dens) cmd_density(o, buffer);
        else if (*table) cmd_table(o, buffer);
        else if (*report) cmd_error_report(o, buffer);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ResourceError& e) {
        err << "error: " << e.what() << "\n";
        return kExitResource;
    } catch (const std::bad_alloc&) {
        err << "error: out of memory\n";
        return kExitResource;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kExitDomain;
    }

    if (!o.output.empty()) {
        std::ofstream file(o.output, std::ios::binary);
        if (!file) {
            err << "error: cannot write '" << o.output << "'\n";
            return kExitUsage;
        }
        file << buffer.str();
    } else {
        out << buffer.str();
    }
    return kExitOk;
}

}  // namespace latvis
