#pragma once

#include <cstdint>
#include <vector>

#include "cliquepoly/graph.hpp"
#include "cliquepoly/poly.hpp"

namespace cliquepoly {

/// Upper bound on |M| for anything that walks all 2^|M| subsets.
inline constexpr std::size_t kMaxSubsetEdges = 24;

/// C*(G_S): the clique polynomial of the common neighborhood of V(S) when S
/// is the full edge set of a clique on its own endpoints, and 0 otherwise.
///
/// The guard reads S as an edge-induced subgraph: {01,02} is a path, not a
/// triangle, even inside K3. Requires S nonempty and S a subset of E(G).
Polynomial cstar(const Graph& g, const EdgeSet& s);

/// Edge-subgraph expansion:
///
///   C(G - M) + sum_{r >= 2, r(r-1)/2 <= |M|} (-1)^r (r-1) x^r  sum_{S in M, |S| = r(r-1)/2} C*(G_S)
///
/// Evaluated exactly, whether or not it equals C(G). The r range runs past
/// |M| only in the |M| = 1 case, where r = 2 gives the single-edge split.
/// Requires M nonempty and M a subset of E(G).
Polynomial theorem_rhs(const Graph& g, const EdgeSet& m);

/// Inclusion-exclusion over every T in M, T = {} included:
///
///   sum_T (-1)^|T| [V(T) is a clique of G] x^|V(T)| C(G_{V(T)})
///
/// The guard here is vertex-induced: {01,02} inside K3 passes. This always
/// equals C(G - M). Throws ScaleError when |M| > 24.
Polynomial inclusion_exclusion_rhs(const Graph& g, const EdgeSet& m);

/// Outcome of comparing C(G) against the edge-subgraph expansion.
struct IdentityCheck {
    bool holds = false;
    /// M is the complete edge set on its own endpoints.
    bool m_edge_complete = false;
    /// The endpoints of M induce a clique in G.
    bool support_clique = false;
    Polynomial clique_poly;
    Polynomial theorem;
    /// theorem - C(G)
    Polynomial diff;
};

IdentityCheck identity_check(const Graph& g, const EdgeSet& m);

enum class TermSource { InclusionExclusion, Theorem };

struct LedgerEntry {
    EdgeSet subset;
    VertexSet support;
    TermSource source = TermSource::InclusionExclusion;
    /// (-1)^|T| for inclusion-exclusion rows, (-1)^r (r-1) for expansion rows.
    std::int64_t sign = 0;
    /// x^|support| times the clique polynomial of the common neighborhood.
    Polynomial contribution;
};

/// Signed contributions of both sides grouped by support vertex set.
/// `residual` = inclusion-exclusion part (T nonempty) + expansion part; the
/// residuals sum to theorem_rhs - C(G), so nonzero rows localize the error.
struct SupportResidual {
    VertexSet support;
    Polynomial inclusion_exclusion;
    Polynomial theorem;
    Polynomial residual;
};

struct TermLedger {
    /// C(G - M), the expansion's leading term.
    Polynomial theorem_base;
    /// Contributing terms only; inclusion-exclusion rows come first, in subset order.
    std::vector<LedgerEntry> entries;

    /// inclusion_exclusion_rhs or theorem_rhs reassembled from the rows.
    Polynomial total(TermSource source) const;
    /// One row per support seen on either side, ordered by (|support|, mask).
    std::vector<SupportResidual> residuals() const;
};

/// Term-by-term breakdown of both expansions for (G, M). |M| <= 24.
TermLedger explain_diff(const Graph& g, const EdgeSet& m);

/// Number of q-edge subsets of K_p that touch every vertex, by inclusion-exclusion
/// over the uncovered vertices. p >= 1; returns 0 outside ceil(p/2) <= q <= C(p,2).
std::int64_t spanning_subgraph_count(int p, int q);

/// sum_{q >= 1} (-1)^q spanning_subgraph_count(p, q), for p >= 2.
std::int64_t alternating_spanning_sum(int p);

} // namespace cliquepoly
