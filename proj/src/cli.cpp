#include "hopspan/cli.hpp"

#include <charconv>
#include <fstream>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hopspan/ackermann.hpp"
#include "hopspan/bounds.hpp"
#include "hopspan/construct.hpp"
#include "hopspan/error.hpp"
#include "hopspan/line_metric.hpp"
#include "hopspan/oracle.hpp"
#include "hopspan/spanner.hpp"

namespace hopspan::cli {

namespace {

// A usage problem tied to a flag.
struct UsageError {
    std::string flag;
    std::string message;
};

Rational eps_flag(const std::string& text, const std::string& flag) {
    try {
        return parse_ratio(text);
    } catch (const Error& e) {
        throw UsageError{flag, e.what()};
    }
}

std::string read_file(const std::string& path, const std::string& flag) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError{flag, "cannot open '" + path + "'"};
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_output(const std::string& text, const std::string& path, std::ostream& out) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw UsageError{"--out", "cannot write '" + path + "'"};
    file << text;
}

std::vector<std::int64_t> iota_points(std::uint64_t n) {
    std::vector<std::int64_t> points(n);
    std::iota(points.begin(), points.end(), 1);
    return points;
}

HopMode mode_flag(const std::string& mode, const std::string& grid_path) {
    if (mode == "all") {
        if (!grid_path.empty()) throw UsageError{"--grid", "only meaningful with --mode global"};
        return AllHops{};
    }
    if (grid_path.empty()) throw UsageError{"--grid", "required with --mode global"};
    return GlobalHops{metric_from_json(read_file(grid_path, "--grid"))};
}

// "L..R", both inclusive.
std::pair<std::int64_t, std::int64_t> steiner_flag(const std::string& text) {
    const auto dots = text.find("..");
    std::int64_t lo = 0;
    std::int64_t hi = 0;
    const auto parse = [&](std::string_view part, std::int64_t& value) {
        const auto* end = part.data() + part.size();
        const auto [ptr, ec] = std::from_chars(part.data(), end, value);
        return !part.empty() && ec == std::errc{} && ptr == end;
    };
    if (dots == std::string::npos || !parse(std::string_view(text).substr(0, dots), lo) ||
        !parse(std::string_view(text).substr(dots + 2), hi) || lo > hi) {
        throw UsageError{"--steiner", "expected L..R with L <= R, got '" + text + "'"};
    }
    return {lo, hi};
}

struct Options {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::uint64_t k = 2;
    std::string eps = "0/1";
    std::string mode = "all";
    std::string grid;
    std::string in;
    std::string out;
    std::string format = "csv";
    std::string method = "bnb";
    std::string kind;
    std::string steiner;
    std::vector<std::uint64_t> ns;
    std::vector<std::uint64_t> ks;
    std::vector<std::string> epss;
    bool oracle = false;
    std::optional<std::uint64_t> alpha_k;
    bool alpha_m = false;
    bool alpha = false;
    std::vector<std::uint64_t> eval_a;
    std::vector<std::uint64_t> eval_b;
};

int do_build(const Options& o, std::ostream& out) {
    const auto points = iota_points(o.n);
    const auto result = build_general(points, o.k);
    write_output(spanner_to_json(result.spanner) + "\n", o.out, out);
    if (!o.out.empty()) {
        out << "edges: " << result.stats.edge_count << "\nbound: " << result.stats.bound << '\n';
    }
    return kOk;
}

int do_verify(const Options& o, std::ostream& out) {
    const auto s = spanner_from_json(read_file(o.in, "--in"));
    const auto eps = eps_flag(o.eps, "--eps");
    const auto report = verify_spanner(s, eps, o.k, mode_flag(o.mode, o.grid));
    if (report.ok) {
        out << "ok\n";
        return kOk;
    }
    const auto& w = *report.witness;
    out << "violation: " << w.a << ' ' << w.b;
    if (w.best_weight) {
        out << " best_weight " << *w.best_weight << " best_hops " << *w.best_hops;
    } else {
        out << " no path within " << o.k << " hops";
    }
    out << '\n';
    return kViolation;
}

int do_minimize(const Options& o, std::ostream& out) {
    SearchConfig cfg;
    cfg.eps = eps_flag(o.eps, "--eps");
    cfg.k = o.k;
    if (!o.steiner.empty()) cfg.steiner_range = steiner_flag(o.steiner);
    const auto points = iota_points(o.n);
    const auto result = o.method == "exhaustive" ? min_edges_exhaustive(points, cfg) : min_edges_bnb(points, cfg);
    out << "minimum: " << result.minimum << '\n';
    out << "nodes: " << result.nodes_explored << '\n';
    if (o.out.empty()) {
        out << "witness: " << spanner_to_json(result.witness) << '\n';
    } else {
        write_output(spanner_to_json(result.witness) + "\n", o.out, out);
    }
    return kOk;
}

std::string saturating(ackermann::Family fam, std::uint64_t k, std::uint64_t s) {
    const auto& table = ackermann::default_table();
    const auto v = table.saturated(fam, k, s);
    return v >= table.cap() ? ">= " + std::to_string(table.cap()) : std::to_string(v);
}

int do_ackermann(const Options& o, std::ostream& out) {
    const int chosen = (o.alpha_k ? 1 : 0) + (o.alpha_m ? 1 : 0) + (o.alpha ? 1 : 0) + (o.eval_a.empty() ? 0 : 1) +
                       (o.eval_b.empty() ? 0 : 1);
    if (chosen != 1) throw UsageError{"--alpha-k", "choose exactly one of --alpha-k, --alpha-m, --alpha, --A, --B"};
    if (o.alpha_k) {
        out << ackermann::alpha_k(*o.alpha_k, o.n) << '\n';
    } else if (o.alpha_m) {
        out << ackermann::alpha_two_param(o.m, o.n) << '\n';
    } else if (o.alpha) {
        out << ackermann::alpha_one(o.n) << '\n';
    } else if (!o.eval_a.empty()) {
        out << saturating(ackermann::Family::A, o.eval_a[0], o.eval_a[1]) << '\n';
    } else {
        out << saturating(ackermann::Family::B, o.eval_b[0], o.eval_b[1]) << '\n';
    }
    return kOk;
}

int do_bounds(const Options& o, std::ostream& out) {
    if (o.m > 0) {
        out << "m: " << o.m << "\nn: " << o.n << '\n';
        std::string region = "none";
        try {
            region = std::to_string(unique_k_region(o.m, o.n));
        } catch (const Error& e) {
            if (e.code() != Errc::NoRegion) throw;
        }
        out << "region: " << region << '\n';
        out << "stretch1: " << hop_lower_bound_from_edges(o.m, o.n, HopVariant::Stretch1) << '\n';
        if (static_cast<unsigned __int128>(o.m) * 32 < static_cast<unsigned __int128>(o.n) * o.n) {
            out << "stretch_eps: " << hop_lower_bound_from_edges(o.m, o.n, HopVariant::StretchEps) << '\n';
        } else {
            out << "stretch_eps: n/a\n";
        }
        return kOk;
    }
    const auto eps = eps_flag(o.eps, "--eps");
    std::vector<LowerBoundKind> kinds;
    if (!o.kind.empty()) {
        try {
            kinds.push_back(parse_kind(o.kind));
        } catch (const Error& e) {
            throw UsageError{"--kind", e.what()};
        }
    } else {
        for (const auto kind : {LowerBoundKind::Uniform2, LowerBoundKind::Uniform3, LowerBoundKind::Subspace2,
                                LowerBoundKind::Subspace3, LowerBoundKind::GeneralSubspace,
                                LowerBoundKind::GeneralUniform, LowerBoundKind::MainEps}) {
            if ((kind == LowerBoundKind::Uniform2 || kind == LowerBoundKind::Subspace2) && o.k != 2) continue;
            if ((kind == LowerBoundKind::Uniform3 || kind == LowerBoundKind::Subspace3) && o.k != 3) continue;
            kinds.push_back(kind);
        }
    }
    out << "kind,n,k,eps,value\n";
    for (const auto kind : kinds) {
        out << kind_name(kind) << ',' << o.n << ',' << o.k << ',' << format_ratio(eps) << ','
            << format_big(lower_bound_edges(kind, o.n, o.k, eps)) << '\n';
    }
    return kOk;
}

int do_report(const Options& o, std::ostream& out) {
    std::vector<Rational> epss;
    for (const auto& e : o.epss) epss.push_back(eps_flag(e, "--eps"));
    if (epss.empty()) epss.emplace_back(0);
    const auto rows = make_report(o.ns, o.ks, epss, o.oracle);
    write_output(o.format == "json" ? report_json(rows) : report_csv(rows), o.out, out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hop-bounded spanners on line metrics", "hopspan"};
    app.require_subcommand(1);
    Options o;

    auto* build = app.add_subcommand("build", "Build a stretch-1 spanner on 1..n with hop bound k (JSON)");
    build->add_option("--n", o.n, "Number of points")->required()->check(CLI::Range(std::uint64_t{1}, std::uint64_t{1} << 24));
    build->add_option("--k", o.k, "Hop bound (>= 2)")->required();
    build->add_option("--out", o.out, "Write the spanner here instead of stdout");

    auto* verify = app.add_subcommand("verify", "Check a spanner JSON against stretch 1+eps and hop bound k");
    verify->add_option("--in", o.in, "Spanner JSON file")->required();
    verify->add_option("--eps", o.eps, "Stretch slack as p/q")->required();
    verify->add_option("--k", o.k, "Hop bound")->required();
    verify->add_option("--mode", o.mode, "Hop counting: all or global")->check(CLI::IsMember({"all", "global"}));
    verify->add_option("--grid", o.grid, "Metric JSON defining cells for --mode global");

    auto* minimize = app.add_subcommand("minimize", "Exact minimum spanner size on 1..n");
    minimize->add_option("--n", o.n, "Number of points")->required()->check(CLI::Range(1, 16));
    minimize->add_option("--k", o.k, "Hop bound")->required();
    minimize->add_option("--eps", o.eps, "Stretch slack as p/q")->required();
    minimize->add_option("--method", o.method, "bnb or exhaustive")->check(CLI::IsMember({"bnb", "exhaustive"}));
    minimize->add_option("--steiner", o.steiner, "Steiner candidate range L..R (inclusive)");
    minimize->add_option("--out", o.out, "Write the witness JSON here");

    auto* ack = app.add_subcommand("ackermann", "Evaluate Ackermann functions and their inverses");
    ack->add_option("--n", o.n, "Argument of the inverse");
    ack->add_option("--m", o.m, "Edge count for --alpha-m");
    ack->add_option("--alpha-k", o.alpha_k, "Print alpha_k(n)");
    ack->add_flag("--alpha-m", o.alpha_m, "Print alpha(m, n)");
    ack->add_flag("--alpha", o.alpha, "Print alpha(n)");
    ack->add_option("--A", o.eval_a, "Print A(k, s) for K,S")->delimiter(',')->expected(2);
    ack->add_option("--B", o.eval_b, "Print B(k, s) for K,S")->delimiter(',')->expected(2);

    auto* bounds = app.add_subcommand("bounds", "Evaluate lower-bound formulas, or the edge/hop tradeoff with --m");
    bounds->add_option("--n", o.n, "Number of points")->required();
    bounds->add_option("--k", o.k, "Hop bound");
    bounds->add_option("--eps", o.eps, "Stretch slack as p/q");
    bounds->add_option("--kind", o.kind, "Single formula to evaluate");
    bounds->add_option("--m", o.m, "Edge count: print the region and hop lower bounds");

    auto* report = app.add_subcommand("report", "Compare formulas, constructions and oracle minima");
    report->add_option("--n", o.ns, "Point counts")->delimiter(',')->required();
    report->add_option("--k", o.ks, "Hop bounds")->delimiter(',')->required();
    report->add_option("--eps", o.epss, "Stretch slacks as p/q")->delimiter(',');
    report->add_flag("--oracle", o.oracle, "Include exact minima (n <= 10)");
    report->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    report->add_option("--out", o.out, "Write the report here instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }

    try {
        if (build->parsed()) return do_build(o, out);
        if (verify->parsed()) return do_verify(o, out);
        if (minimize->parsed()) return do_minimize(o, out);
        if (ack->parsed()) return do_ackermann(o, out);
        if (bounds->parsed()) return do_bounds(o, out);
        return do_report(o, out);
    } catch (const UsageError& e) {
        err << "usage error: " << e.flag << ": " << e.message << '\n';
    } catch (const Error& e) {
        err << "error: " << errc_name(e.code()) << ": " << e.what() << '\n';
    }
    return kUsage;
}

}  // namespace hopspan::cli
