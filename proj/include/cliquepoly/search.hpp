#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "cliquepoly/graph.hpp"

namespace cliquepoly {

/// Order bound for exhaustive labeled enumeration.
inline constexpr int kMaxEnumerationOrder = 7;

/// Exhaustive sweeps with every nonempty M are limited to this order.
inline constexpr int kMaxExhaustiveSweepOrder = 5;

/// Random sweeps are limited to this order.
inline constexpr int kMaxRandomSweepOrder = 12;

/// Random sweeps over all nonempty M need C(n,2) <= this many edges.
inline constexpr int kMaxAllSubsetEdges = 15;

/// One classified (G, M) pair in serialized form.
struct ClassificationRecord {
    std::string graph; ///< graph6
    std::string m;     ///< canonical "i-j,..." list
    bool holds = false;
    bool m_edge_complete = false;
    bool support_clique = false;
    std::string diff; ///< theorem_rhs - C(G); "0" iff holds

    friend bool operator==(const ClassificationRecord&, const ClassificationRecord&) = default;
};

ClassificationRecord classify(const Graph& g, const EdgeSet& m);

/// Recomputes a record from its graph and M fields alone.
ClassificationRecord reverify(const ClassificationRecord& record);

/// Pairs (i, j), i < j, in lexicographic order; bit k of an edge mask is pair k.
std::vector<Edge> pair_order(int n);

Graph graph_from_edge_mask(int n, std::uint64_t mask);
std::uint64_t edge_mask(const Graph& g);

/// Smallest edge mask over all relabelings of the graph.
std::uint64_t canonical_edge_mask(int n, std::uint64_t mask);

/// Edge masks of every labeled graph on n vertices in increasing order, or of
/// the minimal-mask representative of each isomorphism class when `dedup`.
/// Throws ScaleError for n > 7.
std::vector<std::uint64_t> enumerate_edge_masks(int n, bool dedup = false);

void for_each_labeled_graph(int n, bool dedup, const std::function<void(const Graph&)>& fn);

/// Nonempty subsets of `edges`, in lexicographic order of their sorted edge lists.
void for_each_nonempty_subset(const EdgeSet& edges, const std::function<void(const EdgeSet&)>& fn);

/// G(n, p): each pair, in pair_order, is kept when a 53-bit uniform draw from
/// the engine is below p. The engine is mt19937_64, so samples are identical
/// across platforms.
Graph sample_gnp(int n, double p, std::mt19937_64& rng);
Graph sample_gnp(int n, double p, std::uint64_t seed);

enum class SweepMode { Exhaustive, Random };
enum class SubsetMode { AllSubsets, Sampled };

struct SweepConfig {
    int n_min = 1;
    int n_max = 5;
    SweepMode mode = SweepMode::Exhaustive;
    SubsetMode m_mode = SubsetMode::AllSubsets;
    /// Random mode: graphs drawn per order.
    int graph_samples = 100;
    /// Sampled M mode: subsets drawn per graph.
    int m_samples = 16;
    double edge_probability = 0.5;
    std::uint64_t seed = 0;
    bool dedup = false;
    int witness_cap = 10;
    /// Worker count; does not affect the report.
    int threads = 1;
};

/// One cell of the (holds, m_edge_complete) table.
struct SweepCell {
    bool holds = false;
    bool m_edge_complete = false;
    std::uint64_t count = 0;
    std::vector<ClassificationRecord> witnesses;
};

struct SweepReport {
    SweepConfig config;
    std::uint64_t graphs = 0;
    std::uint64_t total = 0;
    /// Index = 2 * holds + m_edge_complete.
    std::array<SweepCell, 4> cells;
    /// Pairs whose M is a vertex-disjoint union of complete edge sets, and how many of them fail.
    std::uint64_t clique_union_pairs = 0;
    std::uint64_t clique_union_failures = 0;

    const SweepCell& cell(bool holds, bool m_edge_complete) const {
        return cells[static_cast<std::size_t>(2 * holds + m_edge_complete)];
    }
};

/// Called for every classified pair in global order (graph order, then M order).
using RecordSink = std::function<void(const ClassificationRecord&)>;

/// Throws ScaleError on out-of-bounds configs before doing any work.
SweepReport sweep(const SweepConfig& config, const RecordSink& sink = {});

/// True iff every connected component of the edge-induced subgraph of m is complete.
bool is_clique_union(const EdgeSet& m);

std::string to_json(const SweepReport& report);
std::string csv_header();
std::string to_csv_row(const ClassificationRecord& record);

const char* to_string(SweepMode mode);
const char* to_string(SubsetMode mode);

} // namespace cliquepoly
