#ifndef WR1_REALIZE_HPP
#define WR1_REALIZE_HPP

#include "wr1/graph.hpp"
#include "wr1/poly.hpp"
#include "wr1/rational.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <variant>
#include <vector>

namespace wr1 {

// Column k of B_i is y_k - y_i (column i is zero).
RationalMatrix build_B(const SourceDecomposition& dec, std::size_t i);

/// Outcome of the support search at one source vertex.
struct SupportProfile {
    std::size_t vertex = 0;
    std::vector<std::size_t> support;      // S_i, ascending, always contains vertex
    std::vector<RationalVector> witnesses; // each v >= 0 with B_i v = w_i
};

enum class ScanOrder { Ascending, Descending };

// Finds the maximal support S_i of nonnegative solutions to B_i v = w_i.
// The first witness is the feasibility solution with component i set to 1;
// each further witness comes from maximizing v_j for a j not yet covered.
// nullopt when B_i v = w_i has no nonnegative solution.
std::optional<SupportProfile> saturate_support(const SourceDecomposition& dec, std::size_t i,
                                               ScanOrder order = ScanOrder::Ascending);

/// Column i of q holds r_i: ones on S_i \ {i}, -|S_i \ {i}| on the diagonal.
struct KirchhoffStructure {
    RationalMatrix q;
};

KirchhoffStructure build_kirchhoff(const std::vector<SupportProfile>& profiles);

struct KernelDimensionFailure {
    std::size_t dimension;
};
struct KernelSupportFailure {
    std::vector<std::size_t> missing;  // indices where the kernel vector vanishes
};

struct Wr1Decision {
    bool accepted = false;
    std::optional<RationalVector> kernel_vector;  // set when the kernel is one-dimensional
    std::variant<std::monostate, KernelDimensionFailure, KernelSupportFailure> failure;
};

// Accepts iff ker(q) is one-dimensional and its generator has no zero entry.
Wr1Decision decide_wr1(const KirchhoffStructure& k);

// rate(i -> j) = (average of the witnesses of i)_j for j in S_i \ {i}.
// Throws InternalInvariantViolation if a selected rate is not positive.
std::map<Edge, Rational> extract_rates(const std::vector<SupportProfile>& profiles);

struct Realization {
    EGraph graph;
    std::vector<SupportProfile> profiles;
    KirchhoffStructure kirchhoff;
    RationalVector kernel_vector;
};

struct InfeasibleVertex {
    std::size_t vertex;
};
// A single source vertex with w = 0: realizable only by an isolated vertex,
// which is not an E-graph.
struct SingleVertex {};

using NoRealizationReason = std::variant<InfeasibleVertex, KernelDimensionFailure, KernelSupportFailure, SingleVertex>;

struct RealizationReport {
    std::variant<Realization, NoRealizationReason> outcome;
    std::vector<SupportProfile> profiles;  // whatever was computed before stopping

    bool realized() const { return std::holds_alternative<Realization>(outcome); }
    const Realization& realization() const { return std::get<Realization>(outcome); }
    const NoRealizationReason& reason() const { return std::get<NoRealizationReason>(outcome); }
};

struct RealizeOptions {
    // Run the per-vertex support searches on separate threads.
    bool parallel = false;
};

RealizationReport realize_wr1(const SourceDecomposition& dec, const RealizeOptions& options = {});

// For every vertex i and every j outside S_i, maximizing v_j must give 0.
// Returns the offending (i, j) pairs; empty means the supports are maximal.
std::vector<Edge> maximality_violations(const SourceDecomposition& dec, const std::vector<SupportProfile>& profiles);

std::string describe(const NoRealizationReason& reason, const SourceDecomposition& dec);

}  // namespace wr1

#endif  // WR1_REALIZE_HPP
