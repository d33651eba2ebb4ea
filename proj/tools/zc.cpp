// zc: command-line surface over the cubization library.  Subcommands:
//   series  exact q-series for a Seifert parameter set
//   char    character of a graph expression
//   graph   DOT output for a graph expression
//   reduce  run the reduction pipeline and report each stage
//   verify  named invariant suites, one PASS/FAIL line per check
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include "zc/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

namespace {

using nlohmann::ordered_json;

const char* kLegend =
    "expression syntax          meaning\n"
    "  [|]                      the two-sided depth tower\n"
    "  [|)  (|]                 its left / right half\n"
    "  [w1|w2)                  left bracket: pinned first coordinates w1,\n"
    "                           final-layer second-coordinate cut w2\n"
    "  (w1|w2]                  right bracket, the mirrored convention\n"
    "  [w1|w2]                  bracket applied to both halves\n"
    "  (w1|w2)                  plain module cube; a box-product factor when\n"
    "                           it follows another expression\n"
    "  +  -                     definite slot signs\n"
    "  *                        a free slot standing for both signs\n"
    "  ~E                       edge reversal of E\n"
    "  E_[h=n]  E_[d=n]         horizontal / depth shift by n\n"
    "  E_[v=w]                  twist by the sign word w (depth rises by its\n"
    "                           minus count)\n"
    "  E^ext(n)                 horizontal extension, n columns each way\n"
    "                           (n even)\n"
    "  E F                      juxtaposition: successive bracketing or box\n"
    "                           product\n";

zc::Bit parse_lambda1(const std::string& s) {
    if (s == "+") return zc::Bit::Plus;
    if (s == "-") return zc::Bit::Minus;
    throw std::invalid_argument("lambda1 must be '+' or '-'");
}

int run_series(const std::vector<long long>& p, const std::vector<long long>& r,
               const std::string& lambda1, long order_in,
               const std::string& eta, const std::string& kind, long window,
               const std::string& format) {
    zc::SeifertParams params{p, r};
    zc::Bit l1 = parse_lambda1(lambda1);
    zc::Rational order(order_in);
    zc::EtaMode mode =
        eta == "expand" ? zc::EtaMode::Expand : zc::EtaMode::Strip;

    zc::QSeries series;
    if (kind == "singlet") {
        if (window != 0)
            throw std::invalid_argument("--window needs --kind triplet");
        series = zc::singlet_series(params, l1, order, mode);
    } else if (mode == zc::EtaMode::Strip) {
        series = zc::triplet_series(params, l1, order, window);
    } else {
        zc::QSeries stripped =
            zc::triplet_series(params, l1, order + 1, window);
        series = zc::qs_mul(stripped, zc::inv_eta_series(order + 1), order);
    }

    if (format == "json") {
        ordered_json rows = ordered_json::array();
        for (const auto& [e, c] : series.coeffs)
            rows.push_back({{"exponent_num", e.numerator()},
                            {"exponent_den", e.denominator()},
                            {"coefficient", c}});
        std::cout << rows.dump(2) << "\n";
    } else {
        std::cout << "exponent_num,exponent_den,coefficient\n";
        for (const auto& [e, c] : series.coeffs)
            std::cout << e.numerator() << "," << e.denominator() << "," << c
                      << "\n";
    }
    return 0;
}

int run_char(const std::string& expr, long depth, bool as_json) {
    zc::ColoredDag q = zc::eval_flat(zc::parse_expr(expr), depth);
    zc::CharPoly chi = zc::char_of(q);
    if (as_json) {
        ordered_json rows = ordered_json::array();
        for (const auto& [color, count] : chi)
            rows.push_back({{"bits", color.bits.str()},
                            {"depth", color.depth},
                            {"count", count}});
        std::cout << rows.dump(2) << "\n";
    } else {
        for (const auto& [color, count] : chi)
            std::cout << color.str() << ": " << count << "\n";
    }
    return 0;
}

int run_graph(const std::string& expr, long depth, const std::string& dot) {
    zc::ColoredDag q = zc::eval_flat(zc::parse_expr(expr), depth);
    std::string text = zc::to_dot(q);
    if (dot.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(dot);
    if (!out) throw std::runtime_error("cannot write " + dot);
    out << text;
    std::cout << "nodes " << q.size() << " edges " << q.edge_count() << "\n";
    return 0;
}

std::pair<std::size_t, std::size_t> family_census(const zc::BilateralFamily& f) {
    std::size_t nodes = 0, edges = 0;
    for (const auto& [idx, g] : f.members) {
        nodes += g.left.size() + g.right.size();
        edges += g.left.edge_count() + g.right.edge_count();
    }
    return {nodes, edges};
}

void print_stage(int stage, const char* op, const zc::BilateralFamily& f) {
    zc::XDagKind kind = zc::classify(f);
    auto [nodes, edges] = family_census(f);
    std::cout << "stage " << stage << " " << op << ": "
              << zc::group_name(kind.x) << " m=" << kind.m
              << " h0=" << kind.h0 << " members=" << f.members.size()
              << " nodes=" << nodes << " edges=" << edges << "\n";
}

int run_reduce(const std::string& lambda1, int m, long depth, long guard,
               bool trace) {
    if (m < 0) throw std::invalid_argument("--m must be >= 0");
    if (guard < 0) guard = 2 * m;
    long cutoff = depth + guard;
    if (cutoff % 2 != 0 || cutoff < 4)
        throw std::invalid_argument("depth + guard must be even and >= 4");
    zc::Bit l1 = parse_lambda1(lambda1);

    zc::BilateralFamily f = zc::b_family(l1, std::size_t(m), cutoff);
    int stage = 0;
    if (trace) print_stage(stage, "start", f);
    for (int k = 0; k < m; ++k) {
        f = zc::gamma(f);
        if (trace) print_stage(++stage, "gamma", f);
        f = zc::quotient_sim(f);
        if (trace) print_stage(++stage, "quotient", f);
    }
    f = zc::gamma(f);
    print_stage(++stage, "gamma", f);
    return 0;
}

int run_verify(const std::string& suite, long depth, int max_m,
               unsigned jobs) {
    if (depth % 2 != 0 || depth < 8)
        throw std::invalid_argument("--depth must be even and >= 8");
    if ((suite == "all" || suite == "loewy") && depth < 10)
        throw std::invalid_argument("the loewy suite needs --depth >= 10");
    if (max_m < 1) throw std::invalid_argument("--max-m must be >= 1");

    std::vector<zc::SuiteCheck> checks = zc::suite_checks(suite, depth, max_m);
    std::vector<zc::SuiteOutcome> results = zc::run_checks(checks, jobs);
    std::size_t passed = 0;
    for (const zc::SuiteOutcome& r : results) {
        if (r.pass) ++passed;
        std::cout << (r.pass ? "PASS" : "FAIL") << " " << r.suite << "/"
                  << r.name << "  " << r.detail << "\n";
    }
    std::cout << "passed " << passed << " of " << results.size()
              << " checks\n";
    return passed == results.size() ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-series and cubization toolkit"};
    app.set_config("--config", "", "read options from a config file");
    app.require_subcommand(0, 1);
    bool legend = false;
    app.add_flag("--legend", legend, "print the expression-syntax legend");

    // series
    auto* series = app.add_subcommand("series", "exact q-series coefficients");
    std::vector<long long> p_in, r_in;
    std::string lambda1 = "+", eta = "strip", kind = "singlet",
                format = "csv";
    long order = 50, window = 0;
    series->add_option("--p", p_in, "fiber orders, comma separated")
        ->required()
        ->delimiter(',');
    series->add_option("--r", r_in, "residues, comma separated")
        ->required()
        ->delimiter(',');
    series->add_option("--lambda1", lambda1, "first slot sign")
        ->check(CLI::IsMember({"+", "-"}));
    series->add_option("--order", order, "truncation order");
    series->add_option("--eta", eta, "eta handling")
        ->check(CLI::IsMember({"strip", "expand"}));
    series->add_option("--kind", kind, "series kind")
        ->check(CLI::IsMember({"singlet", "triplet"}));
    series->add_option("--window", window, "triplet horizontal window");
    series->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));

    // char
    auto* chr = app.add_subcommand("char", "character of a graph expression");
    std::string chr_expr;
    long chr_depth = 12;
    bool chr_json = false;
    chr->add_option("--expr", chr_expr, "graph expression")->required();
    chr->add_option("--depth", chr_depth, "tower cutoff depth")
        ->envname("ZC_DEPTH");
    chr->add_flag("--json", chr_json, "emit a JSON array");

    // graph
    auto* graph = app.add_subcommand("graph", "DOT for a graph expression");
    std::string graph_expr, graph_dot;
    long graph_depth = 12;
    graph->add_option("--expr", graph_expr, "graph expression")->required();
    graph->add_option("--depth", graph_depth, "tower cutoff depth")
        ->envname("ZC_DEPTH");
    graph->add_option("--dot", graph_dot, "write DOT here, print a summary");

    // reduce
    auto* reduce =
        app.add_subcommand("reduce", "reduction pipeline stage report");
    std::string red_lambda1 = "+";
    int red_m = 2;
    long red_depth = 12, red_guard = -1;
    bool red_trace = false;
    reduce->add_option("--lambda1", red_lambda1, "first slot sign")
        ->check(CLI::IsMember({"+", "-"}));
    reduce->add_option("--m", red_m, "free slot count");
    reduce->add_option("--depth", red_depth, "tower cutoff depth")
        ->envname("ZC_DEPTH");
    reduce->add_option("--guard", red_guard,
                       "extra cutoff guard (default 2m)");
    reduce->add_flag("--trace", red_trace, "print every stage");

    // verify
    auto* verify = app.add_subcommand("verify", "named invariant suites");
    std::string suite = "all";
    long ver_depth = 12;
    int max_m = 3;
    unsigned jobs = 0;
    verify->add_option("--suite", suite, "suite name or 'all'")
        ->check(CLI::IsMember({"all", "expr", "cubes", "bilateral",
                               "characters", "qseries", "loewy"}));
    verify->add_option("--depth", ver_depth, "tower cutoff depth")
        ->envname("ZC_DEPTH");
    verify->add_option("--max-m", max_m, "largest slot count exercised");
    verify->add_option("--jobs", jobs, "worker count (0 = logical cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (legend) {
            std::cout << kLegend;
            return 0;
        }
        if (*series)
            return run_series(p_in, r_in, lambda1, order, eta, kind, window,
                              format);
        if (*chr) return run_char(chr_expr, chr_depth, chr_json);
        if (*graph) return run_graph(graph_expr, graph_depth, graph_dot);
        if (*reduce)
            return run_reduce(red_lambda1, red_m, red_depth, red_guard,
                              red_trace);
        if (*verify) return run_verify(suite, ver_depth, max_m, jobs);
        std::cerr << app.help();
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
