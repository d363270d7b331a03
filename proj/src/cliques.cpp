#include "cliquepoly/cliques.hpp"

#include <vector>

#include "cliquepoly/checked.hpp"
#include "cliquepoly/errors.hpp"

namespace cliquepoly {

namespace {

using Counts = std::vector<Polynomial::Coefficient>;

void split(const Graph& g, VertexSet cand, int depth, Counts& counts, PivotRule rule) {
    for (;;) {
        int pivot = -1;
        int pivot_degree = 0;
        if (rule == PivotRule::MaxDegree) {
            for (std::uint64_t b = cand.bits(); b != 0; b &= b - 1) {
                const int v = std::countr_zero(b);
                const int d = (g.neighbors(v) & cand).size();
                if (d > pivot_degree) {
                    pivot = v;
                    pivot_degree = d;
                }
            }
        } else {
            for (std::uint64_t b = cand.bits(); b != 0; b &= b - 1) {
                const int v = std::countr_zero(b);
                if (!(g.neighbors(v) & cand).empty()) {
                    pivot_degree = 1;
                    break;
                }
            }
            if (pivot_degree > 0) pivot = cand.lowest();
        }

        // Edgeless candidate set: the empty clique plus one per vertex.
        if (pivot < 0) {
            auto& c0 = counts[static_cast<std::size_t>(depth)];
            auto& c1 = counts[static_cast<std::size_t>(depth) + 1];
            c0 = checked::add(c0, 1);
            c1 = checked::add(c1, cand.size());
            return;
        }

        split(g, cand & g.neighbors(pivot), depth + 1, counts, rule);
        cand = cand.without(pivot);
    }
}

} // namespace

Polynomial count_cliques_bruteforce(const Graph& g) {
    const int n = g.order();
    if (n > kBruteforceMaxOrder)
        throw ScaleError("brute-force clique oracle supports n <= " + std::to_string(kBruteforceMaxOrder));
    Counts counts(static_cast<std::size_t>(n) + 1, 0);
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        bool clique = true;
        for (int i = 0; i < n && clique; ++i) {
            if (!((mask >> i) & 1U)) continue;
            for (int j = i + 1; j < n; ++j) {
                if (((mask >> j) & 1U) && !g.adjacent(i, j)) {
                    clique = false;
                    break;
                }
            }
        }
        if (clique) ++counts[static_cast<std::size_t>(std::popcount(mask))];
    }
    return Polynomial(std::move(counts));
}

Polynomial clique_polynomial(const Graph& g, VertexSet within, PivotRule rule) {
    if (!within.subset_of(g.vertices())) throw DomainError("vertex set exceeds graph order");
    Counts counts(static_cast<std::size_t>(within.size()) + 2, 0);
    split(g, within, 0, counts, rule);
    return Polynomial(std::move(counts));
}

Polynomial clique_polynomial(const Graph& g, PivotRule rule) { return clique_polynomial(g, g.vertices(), rule); }

Polynomial::Coefficient clique_count(const Graph& g, int k) { return clique_polynomial(g).coeff(k); }

} // namespace cliquepoly
