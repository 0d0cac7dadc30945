// Command-line front end for the power ideal / monomization library.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <powerideal/powerideal.hpp>

namespace
{

using nlohmann::json;
using namespace powerideal;

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_usage = 2;

// Raised for bad input discovered after argument parsing.
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphSource {
    std::string path;
    int complete = 0;
};

struct Common {
    GraphSource source;
    int k = 1;
    bool json = false;
};

void add_common(CLI::App *cmd, Common &common, bool graph_positional = true)
{
    if (graph_positional) {
        cmd->add_option("graph", common.source.path, "graph file");
    }
    cmd->add_option("--complete", common.source.complete, "use the complete graph on this many vertices (root included)")
        ->check(CLI::Range(2, max_vertices + 1));
    cmd->add_option("--k", common.k, "0 or 1")->check(CLI::IsMember({0, 1}));
    cmd->add_flag("--json", common.json, "machine-readable output");
}

RootedMultigraph load_graph(const GraphSource &source)
{
    if (source.complete > 0) {
        if (!source.path.empty()) {
            throw usage_error("give either a graph file or --complete, not both");
        }
        return RootedMultigraph::complete(source.complete);
    }
    if (source.path.empty()) {
        throw usage_error("no graph given (file argument or --complete N)");
    }
    std::ifstream in(source.path);
    if (!in) {
        throw usage_error("cannot read " + source.path);
    }
    try {
        return parse_graph(in);
    } catch (const graph_parse_error &e) {
        throw usage_error(source.path + ": " + e.what());
    }
}

json series_json(const HilbertSeries &s)
{
    return json(s.coeffs());
}

json subset_json(VertexSubset s)
{
    return json(s.members());
}

void print_json(const json &j)
{
    std::cout << j.dump(2) << '\n';
}

int run_hilbert(const Common &c, const std::string &method, unsigned threads)
{
    const auto g = load_graph(c.source);
    std::optional<HilbertSeries> mono;
    std::optional<HilbertSeries> rank;
    if (method == "monomial" || method == "both") {
        mono = hilbert_series_B(monomize(g, c.k));
    }
    if (method == "rank" || method == "both") {
        rank = hilbert_series_A(g, c.k, threads);
    }
    const bool match = !(mono && rank) || *mono == *rank;
    const auto dim = mono ? mono->total() : rank->total();
    if (c.json) {
        json j{{"command", "hilbert"}, {"n", g.n()}, {"k", c.k}, {"dim", dim}, {"match", match}};
        if (mono) {
            j["monomial"] = series_json(*mono);
        }
        if (rank) {
            j["rank"] = series_json(*rank);
        }
        print_json(j);
    } else {
        if (mono) {
            std::cout << "monomial: " << mono->to_string() << '\n';
        }
        if (rank) {
            std::cout << "rank: " << rank->to_string() << '\n';
        }
        if (match) {
            std::cout << "dim = " << dim << '\n';
        } else {
            std::cout << "dim = " << mono->total() << " (monomial), " << rank->total() << " (rank)\n";
            std::cerr << "error: Hilbert series disagree\n";
        }
    }
    return match ? exit_ok : exit_mismatch;
}

int run_monomize(const Common &c, bool minimal)
{
    const auto g = load_graph(c.source);
    const auto ideal = monomize(g, c.k);
    const auto gens = minimal ? minimal_generators(ideal) : ideal.generators;
    if (c.json) {
        json list = json::array();
        for (const auto &m : gens) {
            list.push_back({{"support", subset_json(m.support)}, {"exponents", m.exponents}});
        }
        print_json({{"command", "monomize"}, {"n", g.n()}, {"k", c.k}, {"minimal", minimal}, {"generators", list}});
    } else {
        std::cout << "# n=" << g.n() << " k=" << c.k << " generators=" << gens.size() << '\n';
        for (const auto &m : gens) {
            std::cout << monomial_to_string(m.exponents) << '\n';
        }
    }
    return exit_ok;
}

int run_parking_enumerate(const Common &c)
{
    const auto g = load_graph(c.source);
    const auto basis = standard_monomials(monomize(g, c.k));
    if (c.json) {
        print_json({{"command", "parking"}, {"n", g.n()}, {"k", c.k}, {"dim", basis.size()}, {"functions", basis}});
    } else {
        write_standard_monomials(std::cout, g.n(), c.k, basis);
    }
    return exit_ok;
}

ExponentVector parse_vector(const std::string &text, int n)
{
    ExponentVector a;
    std::stringstream in(text);
    for (std::string field; std::getline(in, field, ',');) {
        std::size_t used = 0;
        int value = -1;
        try {
            value = std::stoi(field, &used);
        } catch (const std::exception &) {
            used = 0;
        }
        if (used != field.size() || field.empty() || value < 0) {
            throw usage_error("bad vector entry '" + field + "'");
        }
        a.push_back(value);
    }
    if (static_cast<int>(a.size()) != n) {
        throw usage_error("vector has " + std::to_string(a.size()) + " entries, graph has n = " + std::to_string(n));
    }
    return a;
}

int run_parking_test(const Common &c, const std::string &vector_text)
{
    const auto g = load_graph(c.source);
    const auto a = parse_vector(vector_text, g.n());
    const bool parking = is_g_parking(g, a, c.k);
    if (c.json) {
        print_json({{"command", "parking"}, {"n", g.n()}, {"k", c.k}, {"vector", a}, {"parking", parking}});
    } else {
        std::cout << (parking ? "yes" : "no") << '\n';
    }
    return exit_ok;
}

int run_forests(const Common &c, bool by_activity, std::optional<std::uint64_t> order_seed)
{
    const auto g = load_graph(c.source);
    if (!g.undirected()) {
        throw usage_error("forests needs an undirected graph");
    }
    const auto count = enumerate_forests(g).size();
    std::optional<HilbertSeries> activity;
    if (by_activity) {
        const auto order = order_seed ? random_edge_orders(g, 1, *order_seed).front() : identity_edge_order(g);
        activity = activity_series(g, order);
    }
    if (c.json) {
        json j{{"command", "forests"}, {"count", count}};
        if (activity) {
            j["activity"] = series_json(*activity);
        }
        print_json(j);
    } else {
        std::cout << count << '\n';
        if (activity) {
            std::cout << "activity: " << activity->to_string() << '\n';
        }
    }
    return exit_ok;
}

int run_altsum(const Common &c)
{
    const auto g = load_graph(c.source);
    const auto sum = alternating_sum(monomize(g, c.k));
    if (c.json) {
        print_json({{"command", "altsum"}, {"k", c.k}, {"value", sum.value}, {"nonzero_chains", sum.nonzero_chains}});
    } else {
        std::cout << "altsum = " << sum.value << '\n' << "nonzero chains = " << sum.nonzero_chains << '\n';
    }
    return exit_ok;
}

const char *status_text(CheckStatus s)
{
    switch (s) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::skip:
        return "skip";
    }
    return "?";
}

int run_verify(const Common &c, bool no_rank, unsigned threads)
{
    const auto g = load_graph(c.source);
    const auto results = verify_graph(g, VerifyOptions{c.k, !no_rank, threads});
    std::size_t failures = 0;
    for (const auto &r : results) {
        failures += r.ok() ? 0 : 1;
    }
    if (c.json) {
        json checks = json::array();
        for (const auto &r : results) {
            checks.push_back({{"name", r.name}, {"status", status_text(r.status)}, {"detail", r.detail}});
        }
        print_json({{"command", "verify"}, {"k", c.k}, {"passed", failures == 0}, {"checks", checks}});
    } else {
        for (const auto &r : results) {
            std::cout << (r.status == CheckStatus::pass ? "PASS " : r.status == CheckStatus::fail ? "FAIL " : "SKIP ")
                      << r.name;
            if (!r.detail.empty()) {
                std::cout << (r.status == CheckStatus::pass ? " (" + r.detail + ")" : ": " + r.detail);
            }
            std::cout << '\n';
        }
        if (failures == 0) {
            std::cout << "all checks passed\n";
        } else {
            std::cout << failures << " check(s) failed\n";
        }
    }
    return failures == 0 ? exit_ok : exit_mismatch;
}

int run_export(const Common &c, const std::string &format, const std::string &which, bool minimal)
{
    const auto g = load_graph(c.source);
    const auto dialect = format == "m2" ? CasDialect::macaulay2 : CasDialect::singular;
    std::string text;
    if (which == "power") {
        if (minimal) {
            throw usage_error("--minimal applies to the monomial ideal only");
        }
        text = export_power_ideal(build_power_ideal(g, c.k), dialect);
    } else {
        const auto ideal = monomize(g, c.k);
        text = minimal ? export_monomial_ideal(ideal.n, minimal_generators(ideal), dialect)
                       : export_monomial_ideal(ideal, dialect);
    }
    if (c.json) {
        print_json({{"command", "export"}, {"format", format}, {"ideal", which}, {"text", text}});
    } else {
        std::cout << text;
    }
    return exit_ok;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Power ideals of rooted graphs, their monomizations, and Hilbert series cross-checks"};
    app.require_subcommand(1);

    Common common;

    std::string method = "monomial";
    unsigned threads = 1;
    auto *hilbert = app.add_subcommand("hilbert", "Hilbert series of the quotient algebra");
    add_common(hilbert, common);
    hilbert->add_option("--method", method, "monomial | rank | both")
        ->check(CLI::IsMember({"monomial", "rank", "both"}));
    hilbert->add_option("--threads", threads, "degrees ranked concurrently")->check(CLI::PositiveNumber);

    bool minimal = false;
    auto *mono = app.add_subcommand("monomize", "generators of the monomial ideal");
    add_common(mono, common);
    mono->add_flag("--minimal", minimal, "drop redundant generators");

    auto *parking = app.add_subcommand("parking", "(G,k)-parking functions");
    parking->require_subcommand(1);
    auto *enumerate = parking->add_subcommand("enumerate", "list every parking function");
    add_common(enumerate, common);
    std::string vector_text;
    auto *test = parking->add_subcommand("test", "test one vector a1,...,an");
    test->add_option("vector", vector_text, "comma-separated values")->required();
    add_common(test, common);

    bool by_activity = false;
    std::optional<std::uint64_t> order_seed;
    auto *forests = app.add_subcommand("forests", "count forests");
    add_common(forests, common);
    forests->add_flag("--by-activity", by_activity, "distribution of |E| - |F| - ea(F)");
    forests->add_option("--order-seed", order_seed, "random edge order for --by-activity");

    auto *altsum = app.add_subcommand("altsum", "alternating sum over subset chains");
    add_common(altsum, common);

    bool no_rank = false;
    auto *verify = app.add_subcommand("verify", "run every cross-check on one graph");
    add_common(verify, common);
    verify->add_flag("--no-rank", no_rank, "skip the linear-algebra oracle");
    verify->add_option("--threads", threads, "degrees ranked concurrently")->check(CLI::PositiveNumber);

    std::string format;
    std::string which = "monomial";
    auto *exporter = app.add_subcommand("export", "ideal in Macaulay2 or Singular syntax");
    add_common(exporter, common);
    exporter->add_option("--format", format, "m2 | singular")->required()->check(CLI::IsMember({"m2", "singular"}));
    exporter->add_option("--ideal", which, "power | monomial")->check(CLI::IsMember({"power", "monomial"}));
    exporter->add_flag("--minimal", minimal, "minimal generators of the monomial ideal");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e);
    } catch (const CLI::ParseError &e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        if (*hilbert) {
            return run_hilbert(common, method, threads);
        }
        if (*mono) {
            return run_monomize(common, minimal);
        }
        if (*enumerate) {
            return run_parking_enumerate(common);
        }
        if (*test) {
            return run_parking_test(common, vector_text);
        }
        if (*forests) {
            return run_forests(common, by_activity, order_seed);
        }
        if (*altsum) {
            return run_altsum(common);
        }
        if (*verify) {
            return run_verify(common, no_rank, threads);
        }
        if (*exporter) {
            return run_export(common, format, which, minimal);
        }
    } catch (const usage_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::domain_error &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
