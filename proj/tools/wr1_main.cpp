// wr1: search for weakly reversible single-linkage-class realizations of
// polynomial dynamical systems, and analyze reaction graphs.

#include "wr1/errors.hpp"
#include "wr1/graph.hpp"
#include "wr1/poly.hpp"
#include "wr1/realize.hpp"
#include "wr1/report.hpp"

#include "CLI11.hpp"

#include <iostream>
#include <map>
#include <random>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitNegative = 2;

wr1::SourceDecomposition load_system(const std::string& path, const std::string& kind) {
    const std::string text = wr1::read_text_file(path);
    if (kind == "matrices-json") return wr1::load_decomposition(text);
    return wr1::decompose(wr1::parse_system(text));
}

// Spot-checks the realization at random positive points against the input.
bool pointwise_agreement(const wr1::EGraph& g, const wr1::SourceDecomposition& dec, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(1, 20), den(1, 7);
    for (int trial = 0; trial < 8; ++trial) {
        wr1::RationalVector x(dec.n());
        for (auto& xi : x) {
            xi = wr1::Rational(num(rng), den(rng));
            xi.canonicalize();
        }
        if (wr1::mass_action_rhs(g, x) != dec.evaluate(x)) return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Weakly reversible single-linkage-class realizations of polynomial dynamical systems"};
    app.require_subcommand(1);

    const std::map<std::string, wr1::OutputFormat> formats{
        {"json", wr1::OutputFormat::Json}, {"dot", wr1::OutputFormat::Dot}, {"human", wr1::OutputFormat::Human}};

    std::string input = "-";
    std::string input_kind = "ode-text";
    wr1::OutputFormat format = wr1::OutputFormat::Json;
    bool check_oracle = false;
    bool quiet = false;
    std::uint64_t seed = 1;

    auto* realize = app.add_subcommand("realize", "Find the maximal WR1 realization of a system");
    realize->add_option("--input-kind", input_kind, "ode-text or matrices-json")
        ->check(CLI::IsMember({"ode-text", "matrices-json"}));
    realize->add_option("--format", format, "json, dot or human")->transform(CLI::CheckedTransformer(formats));
    realize->add_flag("--check-oracle", check_oracle, "Re-run the maximality assertions after realizing");
    realize->add_option("--seed", seed, "Seed for the random evaluation points used by --check-oracle");
    realize->add_flag("--quiet", quiet, "Only set the exit code");
    realize->add_option("input", input, "Input file, or - for stdin");

    std::string graph_path, system_path;
    std::string system_kind = "ode-text";
    wr1::OutputFormat verify_format = wr1::OutputFormat::Human;
    auto* verify = app.add_subcommand("verify", "Check a rated graph against a target system");
    verify->add_option("--graph", graph_path, "Graph JSON with rates")->required();
    verify->add_option("--system", system_path, "Target system")->required();
    verify->add_option("--system-kind", system_kind, "ode-text or matrices-json")
        ->check(CLI::IsMember({"ode-text", "matrices-json"}));
    verify->add_option("--format", verify_format, "json or human")
        ->transform(CLI::CheckedTransformer(std::map<std::string, wr1::OutputFormat>{
            {"json", wr1::OutputFormat::Json}, {"human", wr1::OutputFormat::Human}}));
    verify->add_flag("--quiet", quiet, "Only set the exit code");

    std::string analyze_path;
    wr1::OutputFormat analyze_format = wr1::OutputFormat::Json;
    auto* analyze = app.add_subcommand("analyze", "Structural report for a graph");
    analyze->add_option("--graph", analyze_path, "Graph JSON")->required();
    analyze->add_option("--format", analyze_format, "json or human")
        ->transform(CLI::CheckedTransformer(std::map<std::string, wr1::OutputFormat>{
            {"json", wr1::OutputFormat::Json}, {"human", wr1::OutputFormat::Human}}));
    analyze->add_flag("--quiet", quiet, "Only set the exit code");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*realize) {
            const auto dec = load_system(input, input_kind);
            const auto report = wr1::realize_wr1(dec);
            wr1::RealizeRenderOptions opts;
            opts.format = format;
            bool ok = report.realized();
            if (ok && check_oracle) {
                opts.maximality_violations = wr1::maximality_violations(dec, report.profiles);
                const bool agree = pointwise_agreement(report.realization().graph, dec, seed);
                if (!opts.maximality_violations->empty() || !agree) {
                    std::cerr << "wr1: post-hoc check failed"
                              << (agree ? "" : " (pointwise dynamics mismatch)") << '\n';
                    ok = false;
                }
            }
            if (!quiet) std::cout << wr1::render_realization(report, dec, opts);
            return ok ? kExitOk : kExitNegative;
        }
        if (*verify) {
            const auto doc = wr1::load_graph(wr1::read_text_file(graph_path));
            const auto target = load_system(system_path, system_kind);
            const auto result = wr1::verify_realization(doc.graph, target);
            if (!quiet) std::cout << wr1::render_verification(result, verify_format);
            return result.passed() ? kExitOk : kExitNegative;
        }
        if (*analyze) {
            const auto doc = wr1::load_graph(wr1::read_text_file(analyze_path));
            if (!quiet) std::cout << wr1::render_structure(doc.graph, doc.species, analyze_format);
            return kExitOk;
        }
    } catch (const wr1::InputError& e) {
        std::cerr << "wr1: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "wr1: " << e.what() << '\n';
        return kExitInput;
    }
    return kExitInput;
}
