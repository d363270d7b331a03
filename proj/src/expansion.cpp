#include "cliquepoly/expansion.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "cliquepoly/checked.hpp"
#include "cliquepoly/cliques.hpp"
#include "cliquepoly/errors.hpp"

namespace cliquepoly {

namespace {

/// x^|w| * C(G restricted to the common neighbors of w)
Polynomial anchored_clique_polynomial(const Graph& g, VertexSet w) {
    return scale_shift(clique_polynomial(g, common_neighbors(g, w)), 1, w.size());
}

void require_nonempty(const EdgeSet& m) {
    if (m.empty()) throw DomainError("edge set M must be nonempty");
}

void require_enumerable(const EdgeSet& m) {
    if (m.size() > kMaxSubsetEdges)
        throw ScaleError("subset enumeration over |M| = " + std::to_string(m.size()) + " edges exceeds the limit of " +
                         std::to_string(kMaxSubsetEdges));
}

/// Every vertex set W with |W| >= 2 whose pairs all lie in M, i.e. every S in M
/// that is the complete edge set on its support. Sorted by (|W|, edge list).
std::vector<EdgeSet> complete_subsets(const EdgeSet& m) {
    std::array<std::uint64_t, kMaxVertices> adj{};
    for (const auto& e : m) {
        adj[static_cast<std::size_t>(e.u)] |= std::uint64_t{1} << e.v;
        adj[static_cast<std::size_t>(e.v)] |= std::uint64_t{1} << e.u;
    }

    std::vector<VertexSet> found;
    auto extend = [&](auto&& self, VertexSet clique, std::uint64_t cand) -> void {
        for (std::uint64_t b = cand; b != 0; b &= b - 1) {
            const int v = std::countr_zero(b);
            const VertexSet next = clique.with(v);
            if (next.size() >= 2) found.push_back(next);
            // Only extend upward so each clique is produced once.
            const std::uint64_t above = v == 63 ? 0 : ~((std::uint64_t{2} << v) - 1);
            self(self, next, cand & adj[static_cast<std::size_t>(v)] & above);
        }
    };
    extend(extend, VertexSet{}, support_vertices(m).bits());

    std::vector<EdgeSet> out;
    out.reserve(found.size());
    for (VertexSet w : found) {
        std::vector<Edge> edges;
        const auto vs = w.to_vector();
        for (std::size_t a = 0; a < vs.size(); ++a)
            for (std::size_t b = a + 1; b < vs.size(); ++b) edges.push_back(Edge{vs[a], vs[b]});
        out.emplace_back(std::move(edges));
    }
    std::sort(out.begin(), out.end(), [](const EdgeSet& a, const EdgeSet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    });
    return out;
}

std::vector<LedgerEntry> theorem_terms(const Graph& g, const EdgeSet& m) {
    std::vector<LedgerEntry> out;
    for (auto& s : complete_subsets(m)) {
        const VertexSet w = support_vertices(s);
        const int r = w.size();
        LedgerEntry entry;
        entry.support = w;
        entry.source = TermSource::Theorem;
        entry.sign = (r % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(r - 1);
        entry.contribution = anchored_clique_polynomial(g, w);
        entry.subset = std::move(s);
        out.push_back(std::move(entry));
    }
    return out;
}

/// Walks subsets T of M in lexicographic order of their edge lists, pruning
/// once V(T) stops inducing a clique (supersets cannot recover). `visit`
/// receives (T as edge indices, V(T), |T|) for T = {} and every surviving T.
template <typename Visit>
void walk_clique_supported_subsets(const Graph& g, const EdgeSet& m, Visit&& visit) {
    std::vector<std::size_t> chosen;
    visit(chosen, VertexSet{});
    auto descend = [&](auto&& self, std::size_t start, VertexSet support) -> void {
        for (std::size_t i = start; i < m.size(); ++i) {
            const VertexSet next = support | m[i].endpoints();
            if (!vertex_induced_is_clique(g, next)) continue;
            chosen.push_back(i);
            visit(chosen, next);
            self(self, i + 1, next);
            chosen.pop_back();
        }
    };
    descend(descend, 0, VertexSet{});
}

} // namespace

Polynomial cstar(const Graph& g, const EdgeSet& s) {
    require_nonempty(s);
    require_subset_of_edges(g, s);
    if (!edge_induced_is_complete(s)) return {};
    return clique_polynomial(g, common_neighbors(g, support_vertices(s)));
}

Polynomial theorem_rhs(const Graph& g, const EdgeSet& m) {
    require_nonempty(m);
    require_subset_of_edges(g, m);
    Polynomial total = clique_polynomial(delete_edges(g, m));
    for (const auto& term : theorem_terms(g, m)) total += scale_shift(term.contribution, term.sign, 0);
    return total;
}

Polynomial inclusion_exclusion_rhs(const Graph& g, const EdgeSet& m) {
    require_subset_of_edges(g, m);
    require_enumerable(m);

    // Signed subset counts per support; each support's polynomial is computed once.
    std::unordered_map<std::uint64_t, std::int64_t> weight;
    walk_clique_supported_subsets(g, m, [&](const std::vector<std::size_t>& t, VertexSet support) {
        weight[support.bits()] += t.size() % 2 == 0 ? 1 : -1;
    });

    std::map<std::uint64_t, std::int64_t> ordered(weight.begin(), weight.end());
    Polynomial total;
    for (const auto& [bits, w] : ordered)
        if (w != 0) total += scale_shift(anchored_clique_polynomial(g, VertexSet(bits)), w, 0);
    return total;
}

IdentityCheck identity_check(const Graph& g, const EdgeSet& m) {
    IdentityCheck out;
    out.theorem = theorem_rhs(g, m);
    out.clique_poly = clique_polynomial(g);
    out.diff = out.theorem - out.clique_poly;
    out.holds = out.diff.is_zero();
    out.m_edge_complete = edge_induced_is_complete(m);
    out.support_clique = vertex_induced_is_clique(g, support_vertices(m));
    return out;
}

Polynomial TermLedger::total(TermSource source) const {
    Polynomial sum = source == TermSource::Theorem ? theorem_base : Polynomial{};
    for (const auto& e : entries)
        if (e.source == source) sum += scale_shift(e.contribution, e.sign, 0);
    return sum;
}

std::vector<SupportResidual> TermLedger::residuals() const {
    auto order = [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a.bits() < b.bits();
    };
    std::map<VertexSet, SupportResidual, decltype(order)> rows(order);
    for (const auto& e : entries) {
        if (e.subset.empty()) continue;
        auto& row = rows[e.support];
        row.support = e.support;
        auto& side = e.source == TermSource::Theorem ? row.theorem : row.inclusion_exclusion;
        side += scale_shift(e.contribution, e.sign, 0);
    }
    std::vector<SupportResidual> out;
    out.reserve(rows.size());
    for (auto& [w, row] : rows) {
        row.residual = row.inclusion_exclusion + row.theorem;
        out.push_back(std::move(row));
    }
    return out;
}

TermLedger explain_diff(const Graph& g, const EdgeSet& m) {
    require_nonempty(m);
    require_subset_of_edges(g, m);
    require_enumerable(m);

    TermLedger ledger;
    ledger.theorem_base = clique_polynomial(delete_edges(g, m));

    std::unordered_map<std::uint64_t, Polynomial> anchored;
    walk_clique_supported_subsets(g, m, [&](const std::vector<std::size_t>& t, VertexSet support) {
        auto it = anchored.find(support.bits());
        if (it == anchored.end()) it = anchored.emplace(support.bits(), anchored_clique_polynomial(g, support)).first;
        std::vector<Edge> edges;
        edges.reserve(t.size());
        for (std::size_t i : t) edges.push_back(m[i]);
        ledger.entries.push_back(LedgerEntry{EdgeSet(std::move(edges)), support, TermSource::InclusionExclusion,
                                             t.size() % 2 == 0 ? 1 : -1, it->second});
    });

    auto theorem = theorem_terms(g, m);
    std::move(theorem.begin(), theorem.end(), std::back_inserter(ledger.entries));
    return ledger;
}

std::int64_t spanning_subgraph_count(int p, int q) {
    if (p < 1 || q < 0) throw DomainError("spanning_subgraph_count needs p >= 1 and q >= 0");
    const std::int64_t pairs = checked::binomial(p, 2);
    if (q > pairs || 2 * q < p) return 0;
    std::int64_t total = 0;
    for (int j = 0; j <= p; ++j) {
        const std::int64_t term = checked::mul(checked::binomial(p, j), checked::binomial(checked::binomial(p - j, 2), q));
        total = j % 2 == 0 ? checked::add(total, term) : checked::sub(total, term);
    }
    return total;
}

std::int64_t alternating_spanning_sum(int p) {
    if (p < 2) throw DomainError("alternating_spanning_sum needs p >= 2");
    const auto pairs = static_cast<int>(checked::binomial(p, 2));
    std::int64_t total = 0;
    for (int q = 1; q <= pairs; ++q) {
        const std::int64_t f = spanning_subgraph_count(p, q);
        total = q % 2 == 0 ? checked::add(total, f) : checked::sub(total, f);
    }
    return total;
}

} // namespace cliquepoly
