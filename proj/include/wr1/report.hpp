#ifndef WR1_REPORT_HPP
#define WR1_REPORT_HPP

#include "wr1/graph.hpp"
#include "wr1/poly.hpp"
#include "wr1/realize.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wr1 {

struct GraphDocument {
    EGraph graph;
    std::vector<std::string> species;
};

// {"n": 2, "vertices": [[1,0],...], "edges": [{"from":0,"to":1,"rate":"1"},...]}
// with optional "species". Rates must be given on all edges or on none.
GraphDocument load_graph(std::string_view json_text);

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct Verification {
    std::vector<Check> checks;
    bool passed() const;
};

// Weak reversibility, a single linkage class, and exact equality of the
// graph's mass-action dynamics with the target system.
Verification verify_realization(const EGraph& g, const SourceDecomposition& target);

enum class OutputFormat { Json, Dot, Human };

struct RealizeRenderOptions {
    OutputFormat format = OutputFormat::Json;
    // Result of the post-hoc maximality assertions, when they were run.
    std::optional<std::vector<Edge>> maximality_violations;
};

std::string render_realization(const RealizationReport& report, const SourceDecomposition& dec,
                               const RealizeRenderOptions& options);

std::string render_verification(const Verification& v, OutputFormat format);

std::string render_structure(const EGraph& g, const std::vector<std::string>& species, OutputFormat format);

}  // namespace wr1

#endif  // WR1_REPORT_HPP
