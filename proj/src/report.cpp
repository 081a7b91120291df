#include "wr1/report.hpp"

#include "wr1/errors.hpp"

#include "json.hpp"

#include <map>
#include <sstream>

namespace wr1 {

using nlohmann::json;

namespace {

json exponent_json(const Exponent& y) {
    json a = json::array();
    for (auto e : y) a.push_back(e);
    return a;
}

json rational_array(const RationalVector& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

json index_array(const std::vector<std::size_t>& v) {
    json a = json::array();
    for (auto i : v) a.push_back(i);
    return a;
}

json partition_json(const Partition& p) {
    json a = json::array();
    for (const auto& block : p) a.push_back(index_array(block));
    return a;
}

std::vector<std::string> species_or_default(const std::vector<std::string>& species, std::size_t n) {
    if (species.size() == n) return species;
    std::vector<std::string> out;
    for (std::size_t s = 0; s < n; ++s) out.push_back("x" + std::to_string(s + 1));
    return out;
}

std::string set_text(const std::vector<std::size_t>& s) {
    std::string out = "{";
    for (std::size_t k = 0; k < s.size(); ++k) out += (k ? ", " : "") + std::to_string(s[k]);
    return out + "}";
}

std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

json reason_json(const NoRealizationReason& reason, const SourceDecomposition& dec) {
    return std::visit(
        [&](const auto& r) -> json {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, InfeasibleVertex>) {
                return {{"kind", "infeasible_vertex"}, {"vertex", r.vertex}, {"source", exponent_json(dec.vertex(r.vertex))}};
            } else if constexpr (std::is_same_v<T, KernelDimensionFailure>) {
                return {{"kind", "kernel_dimension"}, {"dimension", r.dimension}};
            } else if constexpr (std::is_same_v<T, KernelSupportFailure>) {
                return {{"kind", "kernel_support"}, {"missing", index_array(r.missing)}};
            } else {
                return {{"kind", "single_vertex"}};
            }
        },
        reason);
}

std::map<Exponent, RationalVector> nonzero_columns(const SourceDecomposition& d) {
    std::map<Exponent, RationalVector> out;
    for (std::size_t i = 0; i < d.m(); ++i) {
        RationalVector w = d.net(i);
        if (!is_zero(w)) out.emplace(d.vertex(i), std::move(w));
    }
    return out;
}

}  // namespace

GraphDocument load_graph(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    try {
        if (!doc.is_object()) throw SchemaError("graph document must be a JSON object");
        if (!doc.contains("vertices") || !doc["vertices"].is_array()) throw SchemaError("missing 'vertices' array");
        if (!doc.contains("edges") || !doc["edges"].is_array()) throw SchemaError("missing 'edges' array");

        std::vector<Exponent> vertices;
        for (const auto& v : doc["vertices"]) {
            if (!v.is_array()) throw SchemaError("each vertex must be an array of integers");
            Exponent y;
            for (const auto& e : v) {
                if (!e.is_number_integer()) throw SchemaError("vertex coordinates must be integers");
                y.push_back(e.get<std::int64_t>());
            }
            vertices.push_back(std::move(y));
        }
        std::size_t n = vertices.empty() ? 0 : vertices.front().size();
        if (doc.contains("n")) {
            if (!doc["n"].is_number_unsigned()) throw SchemaError("'n' must be a nonnegative integer");
            n = doc["n"].get<std::size_t>();
        }

        std::vector<std::string> species;
        if (doc.contains("species")) {
            for (const auto& s : doc["species"]) {
                if (!s.is_string()) throw SchemaError("'species' must be an array of strings");
                species.push_back(s.get<std::string>());
            }
            if (species.size() != n) throw ShapeMismatch("'species' length differs from n");
        }

        std::vector<Edge> plain;
        std::vector<EGraph::RatedEdge> rated;
        for (const auto& e : doc["edges"]) {
            if (!e.is_object() || !e.contains("from") || !e.contains("to") || !e["from"].is_number_unsigned() ||
                !e["to"].is_number_unsigned()) {
                throw SchemaError("each edge needs nonnegative integer 'from' and 'to'");
            }
            Edge edge{e["from"].get<std::size_t>(), e["to"].get<std::size_t>()};
            if (e.contains("rate")) {
                const auto& r = e["rate"];
                Rational k;
                if (r.is_string()) {
                    try {
                        k = parse_rational(r.get<std::string>());
                    } catch (const std::invalid_argument& ex) {
                        throw SchemaError(std::string("edge rate: ") + ex.what());
                    }
                } else if (r.is_number_integer()) {
                    k = Rational(r.get<long>());
                } else {
                    throw SchemaError("edge rate must be a rational string");
                }
                rated.push_back({edge, k});
            } else {
                plain.push_back(edge);
            }
        }
        if (!rated.empty() && !plain.empty()) throw SchemaError("rates must be given on every edge or on none");
        if (rated.empty()) return {EGraph(n, std::move(vertices), std::move(plain)), species_or_default(species, n)};
        return {EGraph(n, std::move(vertices), std::move(rated)), species_or_default(species, n)};
    } catch (const json::exception& e) {
        throw SchemaError(std::string("graph JSON: ") + e.what());
    }
}

bool Verification::passed() const {
    for (const auto& c : checks) {
        if (!c.passed) return false;
    }
    return !checks.empty();
}

Verification verify_realization(const EGraph& g, const SourceDecomposition& target) {
    Verification v;
    const bool wr = is_weakly_reversible(g);
    v.checks.push_back({"weakly_reversible", wr, wr ? "" : "some edge leaves its strong component"});
    const auto classes = linkage_classes(g).size();
    v.checks.push_back({"single_linkage_class", classes == 1, std::to_string(classes) + " linkage class(es)"});

    Check dyn{"dynamics_match", false, ""};
    if (g.n() != target.n()) {
        dyn.detail = "graph has n=" + std::to_string(g.n()) + ", system has n=" + std::to_string(target.n());
    } else {
        const auto have = nonzero_columns(source_decomposition(g, target.species));
        const auto want = nonzero_columns(target);
        dyn.passed = have == want;
        if (!dyn.passed) {
            for (const auto& [y, w] : want) {
                auto it = have.find(y);
                if (it == have.end() || it->second != w) {
                    dyn.detail = "monomial " + monomial_label(y, target.species) + ": expected " + to_string(w) +
                                 ", graph gives " + (it == have.end() ? std::string("0") : to_string(it->second));
                    break;
                }
            }
            if (dyn.detail.empty()) dyn.detail = "graph produces monomials absent from the system";
        }
    }
    v.checks.push_back(std::move(dyn));
    return v;
}

std::string render_realization(const RealizationReport& report, const SourceDecomposition& dec,
                               const RealizeRenderOptions& options) {
    const auto species = species_or_default(dec.species, dec.n());
    std::ostringstream os;

    if (!report.realized()) {
        const auto& reason = report.reason();
        if (options.format == OutputFormat::Json) {
            json out;
            out["status"] = "no_realization";
            out["reason"] = reason_json(reason, dec);
            out["message"] = describe(reason, dec);
            json sets = json::array();
            for (const auto& p : report.profiles) sets.push_back(index_array(p.support));
            out["support_sets"] = sets;
            os << out.dump(2) << '\n';
        } else if (options.format == OutputFormat::Dot) {
            os << "// no weakly reversible single-linkage-class realization: " << describe(reason, dec) << '\n'
               << "digraph wr1 {\n}\n";
        } else {
            os << "no weakly reversible single-linkage-class realization\n"
               << "reason: " << describe(reason, dec) << '\n';
        }
        return os.str();
    }

    const Realization& r = report.realization();
    const EGraph& g = r.graph;
    const bool exact = net_reaction_vectors(g) == dec.W;
    const long delta = deficiency(g);

    if (options.format == OutputFormat::Json) {
        json out;
        out["status"] = "realized";
        out["species"] = species;
        out["n"] = g.n();
        json verts = json::array(), labels = json::array();
        for (const auto& y : g.vertices()) {
            verts.push_back(exponent_json(y));
            labels.push_back(monomial_label(y, species));
        }
        out["vertices"] = verts;
        out["vertex_labels"] = labels;
        json edges = json::array();
        for (std::size_t k = 0; k < g.edges().size(); ++k) {
            edges.push_back({{"from", g.edges()[k].from}, {"to", g.edges()[k].to}, {"rate", to_string(g.rates()[k])}});
        }
        out["edges"] = edges;
        json sets = json::array();
        for (const auto& p : r.profiles) sets.push_back(index_array(p.support));
        out["support_sets"] = sets;
        out["kernel_vector"] = rational_array(r.kernel_vector);
        out["deficiency"] = delta;
        out["deficiency_from_W"] = deficiency_from_W(dec);
        out["verified"] = exact;
        if (options.maximality_violations) {
            json bad = json::array();
            for (const auto& e : *options.maximality_violations) bad.push_back({e.from, e.to});
            out["maximality_check"] = {{"passed", options.maximality_violations->empty()}, {"violations", bad}};
        }
        os << out.dump(2) << '\n';
    } else if (options.format == OutputFormat::Dot) {
        os << "digraph wr1 {\n  node [shape=box];\n";
        for (std::size_t i = 0; i < g.m(); ++i) {
            os << "  v" << i << " [label=\"" << dot_escape(monomial_label(g.vertex(i), species)) << "\"];\n";
        }
        for (std::size_t k = 0; k < g.edges().size(); ++k) {
            os << "  v" << g.edges()[k].from << " -> v" << g.edges()[k].to << " [label=\"" << to_string(g.rates()[k])
               << "\"];\n";
        }
        os << "}\n";
    } else {
        os << "weakly reversible single-linkage-class realization found\n";
        os << "vertices:\n";
        for (std::size_t i = 0; i < g.m(); ++i) {
            os << "  [" << i << "] " << monomial_label(g.vertex(i), species) << "  S = " << set_text(r.profiles[i].support)
               << '\n';
        }
        os << "reactions:\n";
        for (std::size_t k = 0; k < g.edges().size(); ++k) {
            const auto& e = g.edges()[k];
            os << "  " << monomial_label(g.vertex(e.from), species) << " -> " << monomial_label(g.vertex(e.to), species)
               << "   k = " << to_string(g.rates()[k]) << '\n';
        }
        os << "deficiency: " << delta << '\n';
        os << "net reaction vectors reproduce input: " << (exact ? "yes" : "NO") << '\n';
        if (options.maximality_violations) {
            os << "maximality check: " << (options.maximality_violations->empty() ? "pass" : "FAIL") << '\n';
        }
    }
    return os.str();
}

std::string render_verification(const Verification& v, OutputFormat format) {
    if (format == OutputFormat::Json) {
        json out;
        json checks = json::array();
        for (const auto& c : v.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
        out["checks"] = checks;
        out["passed"] = v.passed();
        return out.dump(2) + "\n";
    }
    std::ostringstream os;
    for (const auto& c : v.checks) {
        os << (c.passed ? "PASS " : "FAIL ") << c.name;
        if (!c.detail.empty()) os << "  (" << c.detail << ")";
        os << '\n';
    }
    os << (v.passed() ? "verified\n" : "verification failed\n");
    return os.str();
}

std::string render_structure(const EGraph& g, const std::vector<std::string>& species, OutputFormat format) {
    const StructureReport s = analyze_structure(g);
    std::optional<KernelSupportCheck> ks;
    if (g.has_rates()) ks = kernel_support_check(g);

    Partition terminal;
    for (std::size_t c = 0; c < s.strong.components.size(); ++c) {
        if (s.strong.terminal[c]) terminal.push_back(s.strong.components[c]);
    }

    if (format == OutputFormat::Json) {
        json out;
        out["vertices"] = g.m();
        out["linkage_classes"] = partition_json(s.linkage_classes);
        out["strong_components"] = partition_json(s.strong.components);
        out["terminal_components"] = partition_json(terminal);
        out["weakly_reversible"] = s.weakly_reversible;
        out["stoichiometric_dimension"] = s.stoich_dim;
        out["deficiency"] = s.deficiency;
        if (s.deficiency < 0) out["warning"] = "negative deficiency";
        if (ks) {
            json basis = json::array();
            for (const auto& e : ks->nonnegative_basis) basis.push_back(rational_array(e));
            out["kernel_support_check"] = {{"kernel_dimension", ks->kernel_dim},
                                           {"nonnegative_basis", basis},
                                           {"consistent", ks->consistent},
                                           {"detail", ks->detail}};
        }
        return out.dump(2) + "\n";
    }
    const auto names = species_or_default(species, g.n());
    std::ostringstream os;
    os << "vertices: " << g.m() << '\n';
    for (std::size_t i = 0; i < g.m(); ++i) os << "  [" << i << "] " << monomial_label(g.vertex(i), names) << '\n';
    os << "linkage classes: " << s.linkage_classes.size() << '\n';
    for (const auto& b : s.linkage_classes) os << "  " << set_text(b) << '\n';
    os << "strong components: " << s.strong.components.size() << '\n';
    for (std::size_t c = 0; c < s.strong.components.size(); ++c) {
        os << "  " << set_text(s.strong.components[c]) << (s.strong.terminal[c] ? "  terminal" : "") << '\n';
    }
    os << "weakly reversible: " << (s.weakly_reversible ? "yes" : "no") << '\n';
    os << "stoichiometric dimension: " << s.stoich_dim << '\n';
    os << "deficiency: " << s.deficiency << (s.deficiency < 0 ? "  (warning: negative)" : "") << '\n';
    if (ks) {
        os << "kernel of Kirchhoff matrix: dimension " << ks->kernel_dim << ", "
           << (ks->consistent ? "supported exactly on the terminal components" : "INCONSISTENT: " + ks->detail) << '\n';
    }
    return os.str();
}

}  // namespace wr1
