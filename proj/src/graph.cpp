#include "wr1/graph.hpp"

#include "wr1/errors.hpp"
#include "wr1/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <utility>

namespace wr1 {

EGraph::EGraph(std::size_t n, std::vector<Exponent> vertices, std::vector<Edge> edges)
    : n_(n), vertices_(std::move(vertices)), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    validate();
}

EGraph::EGraph(std::size_t n, std::vector<Exponent> vertices, std::vector<RatedEdge> edges)
    : n_(n), vertices_(std::move(vertices)) {
    std::sort(edges.begin(), edges.end(), [](const RatedEdge& a, const RatedEdge& b) { return a.edge < b.edge; });
    std::vector<Rational> rates;
    for (auto& e : edges) {
        if (e.rate <= 0) {
            throw InvalidGraph("edge " + std::to_string(e.edge.from) + "->" + std::to_string(e.edge.to) +
                               " has non-positive rate " + to_string(e.rate));
        }
        edges_.push_back(e.edge);
        rates.push_back(std::move(e.rate));
    }
    rates_ = std::move(rates);
    validate();
}

void EGraph::validate() const {
    std::set<Exponent> seen;
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
        if (vertices_[i].size() != n_) {
            throw InvalidGraph("vertex " + std::to_string(i) + " has dimension " +
                               std::to_string(vertices_[i].size()) + ", expected " + std::to_string(n_));
        }
        if (!seen.insert(vertices_[i]).second) throw InvalidGraph("vertex " + std::to_string(i) + " is a duplicate");
    }
    std::vector<bool> touched(vertices_.size(), false);
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        const Edge& e = edges_[k];
        if (e.from >= m() || e.to >= m()) throw InvalidGraph("edge endpoint out of range");
        if (e.from == e.to) throw InvalidGraph("self-loop at vertex " + std::to_string(e.from));
        if (k > 0 && edges_[k - 1] == e) {
            throw InvalidGraph("duplicate edge " + std::to_string(e.from) + "->" + std::to_string(e.to));
        }
        touched[e.from] = touched[e.to] = true;
    }
    for (std::size_t i = 0; i < m(); ++i) {
        if (!touched[i]) throw InvalidGraph("vertex " + std::to_string(i) + " is isolated");
    }
}

const std::vector<Rational>& EGraph::rates() const {
    if (!rates_) throw MissingRates("graph has no rate constants");
    return *rates_;
}

std::optional<std::size_t> EGraph::find_edge(std::size_t from, std::size_t to) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{from, to});
    if (it == edges_.end() || *it != Edge{from, to}) return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
}

namespace {

Partition canonical(Partition p) {
    for (auto& block : p) std::sort(block.begin(), block.end());
    std::sort(p.begin(), p.end());
    return p;
}

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

}  // namespace

Partition linkage_classes(const EGraph& g) {
    std::vector<std::size_t> parent(g.m());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    for (const auto& e : g.edges()) parent[find_root(parent, e.from)] = find_root(parent, e.to);

    std::vector<std::vector<std::size_t>> by_root(g.m());
    for (std::size_t v = 0; v < g.m(); ++v) by_root[find_root(parent, v)].push_back(v);
    Partition out;
    for (auto& block : by_root) {
        if (!block.empty()) out.push_back(std::move(block));
    }
    return canonical(std::move(out));
}

StrongComponents strong_components(const EGraph& g) {
    const std::size_t m = g.m();
    std::vector<std::vector<std::size_t>> adj(m);
    for (const auto& e : g.edges()) adj[e.from].push_back(e.to);

    // Iterative Tarjan.
    constexpr std::size_t unvisited = static_cast<std::size_t>(-1);
    std::vector<std::size_t> index(m, unvisited), low(m, 0);
    std::vector<bool> on_stack(m, false);
    std::vector<std::size_t> stack;
    Partition comps;
    std::size_t counter = 0;

    for (std::size_t root = 0; root < m; ++root) {
        if (index[root] != unvisited) continue;
        std::vector<std::pair<std::size_t, std::size_t>> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            auto& [v, next_child] = call.back();
            if (next_child < adj[v].size()) {
                const std::size_t w = adj[v][next_child++];
                if (index[w] == unvisited) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.emplace_back(w, 0);
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            const std::size_t done = v;
            call.pop_back();
            if (!call.empty()) low[call.back().first] = std::min(low[call.back().first], low[done]);
            if (low[done] == index[done]) {
                std::vector<std::size_t> comp;
                std::size_t w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    comp.push_back(w);
                } while (w != done);
                comps.push_back(std::move(comp));
            }
        }
    }

    StrongComponents out;
    out.components = canonical(std::move(comps));
    out.component_of.assign(m, 0);
    for (std::size_t c = 0; c < out.components.size(); ++c)
        for (auto v : out.components[c]) out.component_of[v] = c;
    out.terminal.assign(out.components.size(), true);
    for (const auto& e : g.edges()) {
        if (out.component_of[e.from] != out.component_of[e.to]) out.terminal[out.component_of[e.from]] = false;
    }
    return out;
}

bool is_weakly_reversible(const EGraph& g) {
    // Every edge must lie inside a strong component.
    const auto sc = strong_components(g);
    for (const auto& e : g.edges()) {
        if (sc.component_of[e.from] != sc.component_of[e.to]) return false;
    }
    return true;
}

std::size_t stoich_dim(const EGraph& g) {
    RationalMatrix R(g.n(), g.edges().size());
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
        const auto& e = g.edges()[k];
        for (std::size_t s = 0; s < g.n(); ++s) {
            R(s, k) = Rational(static_cast<long>(g.vertex(e.to)[s] - g.vertex(e.from)[s]));
        }
    }
    return rank(R);
}

long deficiency(const EGraph& g) {
    return static_cast<long>(g.m()) - static_cast<long>(linkage_classes(g).size()) -
           static_cast<long>(stoich_dim(g));
}

long deficiency_from_W(const SourceDecomposition& dec) {
    return static_cast<long>(dec.m()) - 1 - static_cast<long>(rank(dec.W));
}

RationalMatrix kirchhoff_matrix(const EGraph& g) {
    const auto& rates = g.rates();
    RationalMatrix A(g.m(), g.m());
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
        const auto& e = g.edges()[k];
        A(e.to, e.from) += rates[k];
        A(e.from, e.from) -= rates[k];
    }
    return A;
}

RationalMatrix net_reaction_vectors(const EGraph& g) {
    const auto& rates = g.rates();
    RationalMatrix W(g.n(), g.m());
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
        const auto& e = g.edges()[k];
        for (std::size_t s = 0; s < g.n(); ++s) {
            const auto d = g.vertex(e.to)[s] - g.vertex(e.from)[s];
            if (d != 0) W(s, e.from) += rates[k] * Rational(static_cast<long>(d));
        }
    }
    return W;
}

RationalVector mass_action_rhs(const EGraph& g, const RationalVector& x) {
    if (x.size() != g.n()) throw std::invalid_argument("mass_action_rhs: point has wrong dimension");
    for (const auto& xi : x) {
        if (xi <= 0) throw std::invalid_argument("mass_action_rhs: point must be strictly positive");
    }
    const auto& rates = g.rates();
    RationalVector out(g.n());
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
        const auto& e = g.edges()[k];
        const Rational flux = rates[k] * monomial_value(g.vertex(e.from), x);
        for (std::size_t s = 0; s < g.n(); ++s) {
            const auto d = g.vertex(e.to)[s] - g.vertex(e.from)[s];
            if (d != 0) out[s] += flux * Rational(static_cast<long>(d));
        }
    }
    return out;
}

PolynomialSystem mass_action_system(const EGraph& g, std::vector<std::string> species) {
    const RationalMatrix W = net_reaction_vectors(g);
    PolynomialSystem sys;
    sys.species = std::move(species);
    for (std::size_t i = 0; i < g.m(); ++i) {
        RationalVector w = W.col(i);
        if (!is_zero(w)) sys.terms.push_back({g.vertex(i), std::move(w)});
    }
    return sys;
}

SourceDecomposition source_decomposition(const EGraph& g, std::vector<std::string> species,
                                         bool drop_zero_columns) {
    const RationalMatrix W = net_reaction_vectors(g);
    std::vector<bool> is_source(g.m(), false);
    for (const auto& e : g.edges()) is_source[e.from] = true;

    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < g.m(); ++i) {
        if (is_source[i] && !(drop_zero_columns && is_zero(W.col(i)))) keep.push_back(i);
    }
    RationalMatrix Y(g.n(), keep.size()), Wk(g.n(), keep.size());
    for (std::size_t c = 0; c < keep.size(); ++c) {
        for (std::size_t s = 0; s < g.n(); ++s) {
            Y(s, c) = Rational(static_cast<long>(g.vertex(keep[c])[s]));
            Wk(s, c) = W(s, keep[c]);
        }
    }
    return make_decomposition(std::move(species), std::move(Y), std::move(Wk));
}

KernelSupportCheck kernel_support_check(const EGraph& g) {
    const RationalMatrix A = kirchhoff_matrix(g);
    const auto sc = strong_components(g);

    KernelSupportCheck out;
    out.kernel_dim = kernel_basis(A).size();
    for (std::size_t c = 0; c < sc.components.size(); ++c) {
        if (sc.terminal[c]) out.terminal_components.push_back(sc.components[c]);
    }

    bool ok = out.kernel_dim == out.terminal_components.size();
    if (!ok) {
        out.detail = "kernel dimension " + std::to_string(out.kernel_dim) + " != " +
                     std::to_string(out.terminal_components.size()) + " terminal components";
    }
    for (const auto& block : out.terminal_components) {
        // A terminal block has no outflow, so its columns of A_k are supported
        // inside the block and the block kernel embeds into ker(A_k).
        RationalMatrix sub(block.size(), block.size());
        for (std::size_t r = 0; r < block.size(); ++r)
            for (std::size_t c = 0; c < block.size(); ++c) sub(r, c) = A(block[r], block[c]);
        const auto local = kernel_basis(sub);
        RationalVector e(g.m());
        if (local.size() != 1) {
            ok = false;
            out.detail += (out.detail.empty() ? "" : "; ") + std::string("terminal block kernel has dimension ") +
                          std::to_string(local.size());
        } else {
            const bool negative = local[0][0] < 0;
            for (std::size_t r = 0; r < block.size(); ++r) {
                Rational v = negative ? Rational(-local[0][r]) : local[0][r];
                if (v <= 0) ok = false;
                e[block[r]] = std::move(v);
            }
            if (!is_zero(A * e)) ok = false;
        }
        out.nonnegative_basis.push_back(std::move(e));
    }
    if (!ok && out.detail.empty()) out.detail = "terminal block kernel is not strictly positive";
    out.consistent = ok;
    return out;
}

StructureReport analyze_structure(const EGraph& g) {
    StructureReport r;
    r.linkage_classes = linkage_classes(g);
    r.strong = strong_components(g);
    r.weakly_reversible = is_weakly_reversible(g);
    r.stoich_dim = stoich_dim(g);
    r.deficiency = static_cast<long>(g.m()) - static_cast<long>(r.linkage_classes.size()) -
                   static_cast<long>(r.stoich_dim);
    return r;
}

}  // namespace wr1
