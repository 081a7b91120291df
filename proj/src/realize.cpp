#include "wr1/realize.hpp"

#include "wr1/errors.hpp"
#include "wr1/linalg.hpp"
#include "wr1/lp.hpp"

#include <algorithm>
#include <future>
#include <sstream>

namespace wr1 {

RationalMatrix build_B(const SourceDecomposition& dec, std::size_t i) {
    if (i >= dec.m()) throw std::out_of_range("build_B: vertex index out of range");
    RationalMatrix B(dec.n(), dec.m());
    for (std::size_t k = 0; k < dec.m(); ++k)
        for (std::size_t s = 0; s < dec.n(); ++s) B(s, k) = dec.Y_s(s, k) - dec.Y_s(s, i);
    return B;
}

namespace {

void merge_support(std::vector<std::size_t>& into, const RationalVector& v) {
    for (auto j : support(v)) {
        auto it = std::lower_bound(into.begin(), into.end(), j);
        if (it == into.end() || *it != j) into.insert(it, j);
    }
}

bool contains(const std::vector<std::size_t>& sorted, std::size_t j) {
    return std::binary_search(sorted.begin(), sorted.end(), j);
}

}  // namespace

std::optional<SupportProfile> saturate_support(const SourceDecomposition& dec, std::size_t i, ScanOrder order) {
    const RationalMatrix B = build_B(dec, i);
    const RationalVector w = dec.net(i);

    auto first = lp_feasible(B, w);
    if (!first) return std::nullopt;
    (*first)[i] = 1;

    SupportProfile p;
    p.vertex = i;
    merge_support(p.support, *first);
    p.witnesses.push_back(std::move(*first));

    const std::size_t m = dec.m();
    for (std::size_t step = 0; step < m; ++step) {
        const std::size_t j = order == ScanOrder::Ascending ? step : m - 1 - step;
        if (contains(p.support, j)) continue;
        auto v = lp_maximize_component(B, w, j);
        if (v && (*v)[j] > 0) {
            merge_support(p.support, *v);
            p.witnesses.push_back(std::move(*v));
        }
    }
    return p;
}

KirchhoffStructure build_kirchhoff(const std::vector<SupportProfile>& profiles) {
    const std::size_t m = profiles.size();
    KirchhoffStructure k{RationalMatrix(m, m)};
    for (std::size_t i = 0; i < m; ++i) {
        if (profiles[i].vertex != i) throw std::invalid_argument("build_kirchhoff: profiles out of order");
        long out_degree = 0;
        for (auto j : profiles[i].support) {
            if (j == i) continue;
            k.q(j, i) = 1;
            ++out_degree;
        }
        k.q(i, i) = -out_degree;
    }
    return k;
}

Wr1Decision decide_wr1(const KirchhoffStructure& k) {
    Wr1Decision d;
    auto basis = kernel_basis(k.q);
    if (basis.size() != 1) {
        d.failure = KernelDimensionFailure{basis.size()};
        return d;
    }
    std::vector<std::size_t> missing;
    for (std::size_t i = 0; i < basis[0].size(); ++i) {
        if (basis[0][i] == 0) missing.push_back(i);
    }
    // The kernel of a Kirchhoff matrix is spanned by a nonnegative vector here;
    // report it with positive orientation.
    RationalVector v = std::move(basis[0]);
    if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return x < 0; })) {
        for (auto& x : v) x = -x;
    }
    d.kernel_vector = std::move(v);
    if (!missing.empty()) {
        d.failure = KernelSupportFailure{std::move(missing)};
        return d;
    }
    d.accepted = true;
    return d;
}

std::map<Edge, Rational> extract_rates(const std::vector<SupportProfile>& profiles) {
    std::map<Edge, Rational> rates;
    for (const auto& p : profiles) {
        if (p.witnesses.empty()) throw InternalInvariantViolation("support profile without witnesses");
        RationalVector mean(p.witnesses.front().size());
        for (const auto& v : p.witnesses)
            for (std::size_t j = 0; j < v.size(); ++j) mean[j] += v[j];
        const Rational count(static_cast<long>(p.witnesses.size()));
        for (auto j : p.support) {
            if (j == p.vertex) continue;
            Rational k = mean[j] / count;
            if (k <= 0) {
                throw InternalInvariantViolation("averaged witness vanishes on support index " + std::to_string(j) +
                                                 " of vertex " + std::to_string(p.vertex));
            }
            rates.emplace(Edge{p.vertex, j}, std::move(k));
        }
    }
    return rates;
}

RealizationReport realize_wr1(const SourceDecomposition& dec, const RealizeOptions& options) {
    const std::size_t m = dec.m();
    std::vector<std::optional<SupportProfile>> found(m);
    if (options.parallel && m > 1) {
        std::vector<std::future<std::optional<SupportProfile>>> jobs;
        for (std::size_t i = 0; i < m; ++i) {
            jobs.push_back(std::async(std::launch::async, [&dec, i] { return saturate_support(dec, i); }));
        }
        for (std::size_t i = 0; i < m; ++i) found[i] = jobs[i].get();
    } else {
        for (std::size_t i = 0; i < m; ++i) {
            found[i] = saturate_support(dec, i);
            if (!found[i]) break;
        }
    }

    std::vector<SupportProfile> profiles;
    for (std::size_t i = 0; i < m; ++i) {
        if (!found[i]) return {NoRealizationReason{InfeasibleVertex{i}}, std::move(profiles)};
        profiles.push_back(std::move(*found[i]));
    }
    if (m == 1) return {NoRealizationReason{SingleVertex{}}, std::move(profiles)};

    KirchhoffStructure k = build_kirchhoff(profiles);
    Wr1Decision decision = decide_wr1(k);
    if (!decision.accepted) {
        if (auto* f = std::get_if<KernelDimensionFailure>(&decision.failure)) {
            return {NoRealizationReason{*f}, std::move(profiles)};
        }
        return {NoRealizationReason{std::get<KernelSupportFailure>(decision.failure)}, std::move(profiles)};
    }

    std::vector<EGraph::RatedEdge> edges;
    for (auto& [edge, rate] : extract_rates(profiles)) edges.push_back({edge, rate});
    std::vector<Exponent> vertices;
    for (std::size_t i = 0; i < m; ++i) vertices.push_back(dec.vertex(i));

    Realization realization{EGraph(dec.n(), std::move(vertices), std::move(edges)), profiles, std::move(k),
                            std::move(*decision.kernel_vector)};
    return {std::move(realization), std::move(profiles)};
}

std::vector<Edge> maximality_violations(const SourceDecomposition& dec, const std::vector<SupportProfile>& profiles) {
    std::vector<Edge> bad;
    for (const auto& p : profiles) {
        const RationalMatrix B = build_B(dec, p.vertex);
        const RationalVector w = dec.net(p.vertex);
        for (std::size_t j = 0; j < dec.m(); ++j) {
            if (contains(p.support, j)) continue;
            auto v = lp_maximize_component(B, w, j);
            if (v && (*v)[j] != 0) bad.push_back({p.vertex, j});
        }
    }
    return bad;
}

std::string describe(const NoRealizationReason& reason, const SourceDecomposition& dec) {
    std::ostringstream os;
    std::visit(
        [&](const auto& r) {
            using T = std::decay_t<decltype(r)>;
            if constexpr (std::is_same_v<T, InfeasibleVertex>) {
                os << "no nonnegative combination of reaction vectors from source " << to_string(dec.Y_s.col(r.vertex))
                   << " (index " << r.vertex << ") reproduces its net reaction vector " << to_string(dec.net(r.vertex));
            } else if constexpr (std::is_same_v<T, KernelDimensionFailure>) {
                os << "maximal graph splits into " << r.dimension
                   << " terminal strong components (kernel dimension " << r.dimension << ")";
            } else if constexpr (std::is_same_v<T, KernelSupportFailure>) {
                os << "maximal graph is not weakly reversible; kernel vanishes at vertices";
                for (auto i : r.missing) os << ' ' << i;
            } else {
                os << "single source vertex with zero net reaction vector; an isolated vertex is not a reaction network";
            }
        },
        reason);
    return os.str();
}

}  // namespace wr1
