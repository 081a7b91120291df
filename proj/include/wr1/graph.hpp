#ifndef WR1_GRAPH_HPP
#define WR1_GRAPH_HPP

#include "wr1/poly.hpp"
#include "wr1/rational.hpp"

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace wr1 {

struct Edge {
    std::size_t from;
    std::size_t to;

    auto operator<=>(const Edge&) const = default;
};

/// Euclidean embedded graph: distinct vertices in Z^n, directed edges without
/// self-loops, no isolated vertices, optionally one positive rate per edge.
/// Edges are kept sorted by (from, to); rates follow the same order.
class EGraph {
public:
    struct RatedEdge {
        Edge edge;
        Rational rate;
    };

    EGraph(std::size_t n, std::vector<Exponent> vertices, std::vector<Edge> edges);
    EGraph(std::size_t n, std::vector<Exponent> vertices, std::vector<RatedEdge> edges);

    std::size_t n() const { return n_; }
    std::size_t m() const { return vertices_.size(); }
    const std::vector<Exponent>& vertices() const { return vertices_; }
    const Exponent& vertex(std::size_t i) const { return vertices_[i]; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool has_rates() const { return rates_.has_value(); }
    // Throws MissingRates when the graph is unrated.
    const std::vector<Rational>& rates() const;

    // Index of the edge, or nullopt.
    std::optional<std::size_t> find_edge(std::size_t from, std::size_t to) const;

private:
    void validate() const;

    std::size_t n_;
    std::vector<Exponent> vertices_;
    std::vector<Edge> edges_;
    std::optional<std::vector<Rational>> rates_;
};

// Partition of vertex indices; each block ascending, blocks ordered by first element.
using Partition = std::vector<std::vector<std::size_t>>;

Partition linkage_classes(const EGraph& g);

struct StrongComponents {
    Partition components;
    std::vector<bool> terminal;             // parallel to components
    std::vector<std::size_t> component_of;  // vertex -> component index
};

StrongComponents strong_components(const EGraph& g);

bool is_weakly_reversible(const EGraph& g);

// dim span{ y' - y : y -> y' in E }
std::size_t stoich_dim(const EGraph& g);

// m - l - s. Not clamped; a negative value signals malformed input.
long deficiency(const EGraph& g);

// m - 1 - rank(W): deficiency of a single-linkage-class weakly reversible
// realization of the decomposition.
long deficiency_from_W(const SourceDecomposition& dec);

// [A_k]_{ji} = k(i->j), diagonal = -(outflow of i). Requires rates.
RationalMatrix kirchhoff_matrix(const EGraph& g);

// n x m; column i is sum_j k(i->j) (y_j - y_i). Requires rates.
RationalMatrix net_reaction_vectors(const EGraph& g);

// sum over edges of k x^{y_i} (y_j - y_i), x > 0 componentwise. Requires rates.
RationalVector mass_action_rhs(const EGraph& g, const RationalVector& x);

// Polynomial right-hand side generated by the rated graph; vertices whose
// net reaction vector vanishes do not appear.
PolynomialSystem mass_action_system(const EGraph& g, std::vector<std::string> species);

// (Y_s, W) over the source vertices of g, in vertex order. Zero columns are
// kept unless drop_zero_columns is set.
SourceDecomposition source_decomposition(const EGraph& g, std::vector<std::string> species,
                                         bool drop_zero_columns = false);

struct KernelSupportCheck {
    std::size_t kernel_dim = 0;
    Partition terminal_components;
    // One vector per terminal component: positive on it, zero elsewhere, in ker(A_k).
    std::vector<RationalVector> nonnegative_basis;
    bool consistent = false;
    std::string detail;
};

// Cross-checks ker(A_k) against the terminal strong components.
KernelSupportCheck kernel_support_check(const EGraph& g);

struct StructureReport {
    Partition linkage_classes;
    StrongComponents strong;
    bool weakly_reversible = false;
    std::size_t stoich_dim = 0;
    long deficiency = 0;
};

StructureReport analyze_structure(const EGraph& g);

}  // namespace wr1

#endif  // WR1_GRAPH_HPP
