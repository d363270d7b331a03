#pragma once

#include "cliquepoly/graph.hpp"
#include "cliquepoly/poly.hpp"

namespace cliquepoly {

/// Largest order accepted by the subset-enumeration oracle.
inline constexpr int kBruteforceMaxOrder = 20;

/// Vertex chosen at each step of the split C(P) = C(P - v) + x * C(P & N(v)).
/// Results do not depend on the rule; only the recursion shape does.
enum class PivotRule {
    MaxDegree,   ///< highest degree inside the candidate set, ties to the lowest index
    LowestIndex, ///< lowest-numbered candidate
};

/// Clique polynomial sum_k a_k x^k by checking all 2^n vertex subsets. a_0 = 1.
/// Throws ScaleError for n > 20.
Polynomial count_cliques_bruteforce(const Graph& g);

/// Clique polynomial by recursive vertex splitting. a_0 = 1.
Polynomial clique_polynomial(const Graph& g, PivotRule rule = PivotRule::MaxDegree);

/// Clique polynomial of the subgraph of g induced on `within`, without relabeling.
Polynomial clique_polynomial(const Graph& g, VertexSet within, PivotRule rule = PivotRule::MaxDegree);

/// Number of k-cliques of g (a_k); 0 above the clique number.
Polynomial::Coefficient clique_count(const Graph& g, int k);

} // namespace cliquepoly
