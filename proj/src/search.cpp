#include "cliquepoly/search.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <numeric>
#include <thread>

#include <json.hpp>

#include "cliquepoly/errors.hpp"
#include "cliquepoly/expansion.hpp"

namespace cliquepoly {

namespace {

struct WorkItem {
    int n = 0;
    std::uint64_t mask = 0;
    /// Sampled subsets; empty means every nonempty subset.
    std::vector<EdgeSet> subsets;
};

struct RangeResult {
    std::array<SweepCell, 4> cells;
    std::uint64_t clique_union_pairs = 0;
    std::uint64_t clique_union_failures = 0;
    std::vector<ClassificationRecord> records;
};

void validate(const SweepConfig& c) {
    if (c.n_min < 1 || c.n_min > c.n_max) throw DomainError("need 1 <= n_min <= n_max");
    if (c.graph_samples < 0 || c.m_samples < 0) throw DomainError("sample counts must be nonnegative");
    if (!(c.edge_probability >= 0.0 && c.edge_probability <= 1.0))
        throw DomainError("edge probability must lie in [0, 1]");
    if (c.witness_cap < 0) throw DomainError("witness cap must be nonnegative");
    if (c.threads < 1) throw DomainError("thread count must be positive");

    const bool all = c.m_mode == SubsetMode::AllSubsets;
    if (c.mode == SweepMode::Exhaustive) {
        const int bound = all ? kMaxExhaustiveSweepOrder : kMaxEnumerationOrder;
        if (c.n_max > bound)
            throw ScaleError("exhaustive sweep with " + std::string(to_string(c.m_mode)) + " supports n <= " +
                             std::to_string(bound));
    } else {
        if (c.n_max > kMaxRandomSweepOrder)
            throw ScaleError("random sweep supports n <= " + std::to_string(kMaxRandomSweepOrder));
        if (all && c.n_max * (c.n_max - 1) / 2 > kMaxAllSubsetEdges)
            throw ScaleError("random sweep over all subsets needs C(n,2) <= " + std::to_string(kMaxAllSubsetEdges));
    }
}

EdgeSet sample_subset(const EdgeSet& edges, std::mt19937_64& rng) {
    for (;;) {
        std::vector<Edge> picked;
        for (const auto& e : edges)
            if (rng() >> 63) picked.push_back(e);
        if (!picked.empty()) return EdgeSet(std::move(picked));
    }
}

std::vector<WorkItem> plan(const SweepConfig& c) {
    std::vector<WorkItem> items;
    std::mt19937_64 rng(c.seed);
    auto add_item = [&](const Graph& g) {
        WorkItem item{g.order(), edge_mask(g), {}};
        if (c.m_mode == SubsetMode::Sampled && g.edge_count() > 0) {
            const EdgeSet edges = g.edges();
            for (int j = 0; j < c.m_samples; ++j) item.subsets.push_back(sample_subset(edges, rng));
        }
        items.push_back(std::move(item));
    };
    for (int n = c.n_min; n <= c.n_max; ++n) {
        if (c.mode == SweepMode::Exhaustive) {
            for (std::uint64_t mask : enumerate_edge_masks(n, c.dedup)) add_item(graph_from_edge_mask(n, mask));
        } else {
            for (int i = 0; i < c.graph_samples; ++i) add_item(sample_gnp(n, c.edge_probability, rng));
        }
    }
    return items;
}

void process(const WorkItem& item, const SweepConfig& c, bool keep_records, RangeResult& out) {
    const Graph g = graph_from_edge_mask(item.n, item.mask);
    auto handle = [&](const EdgeSet& m) {
        ClassificationRecord rec = classify(g, m);
        auto& cell = out.cells[static_cast<std::size_t>(2 * rec.holds + rec.m_edge_complete)];
        ++cell.count;
        if (cell.witnesses.size() < static_cast<std::size_t>(c.witness_cap)) cell.witnesses.push_back(rec);
        if (is_clique_union(m)) {
            ++out.clique_union_pairs;
            if (!rec.holds) ++out.clique_union_failures;
        }
        if (keep_records) out.records.push_back(std::move(rec));
    };
    if (c.m_mode == SubsetMode::AllSubsets) {
        for_each_nonempty_subset(g.edges(), handle);
    } else {
        for (const auto& m : item.subsets) handle(m);
    }
}

} // namespace

ClassificationRecord classify(const Graph& g, const EdgeSet& m) {
    const IdentityCheck check = identity_check(g, m);
    return ClassificationRecord{encode_graph6(g), m.to_string(), check.holds, check.m_edge_complete,
                                check.support_clique, check.diff.to_string()};
}

ClassificationRecord reverify(const ClassificationRecord& record) {
    return classify(parse_graph6(record.graph), EdgeSet::parse(record.m));
}

std::vector<Edge> pair_order(int n) {
    std::vector<Edge> out;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) out.push_back(Edge{i, j});
    return out;
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    const auto pairs = pair_order(n);
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < pairs.size() && k < 64; ++k)
        if ((mask >> k) & 1U) edges.push_back(pairs[k]);
    return Graph::from_edges(n, EdgeSet(std::move(edges)));
}

std::uint64_t edge_mask(const Graph& g) {
    const auto pairs = pair_order(g.order());
    if (pairs.size() > 64) throw ScaleError("edge masks cover at most 64 vertex pairs");
    std::uint64_t mask = 0;
    for (std::size_t k = 0; k < pairs.size(); ++k)
        if (g.adjacent(pairs[k].u, pairs[k].v)) mask |= std::uint64_t{1} << k;
    return mask;
}

namespace {

/// For each permutation of 0..n-1, the image index of every pair bit.
std::vector<std::vector<int>> pair_permutations(int n) {
    std::vector<std::vector<int>> index(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    const auto pairs = pair_order(n);
    for (std::size_t k = 0; k < pairs.size(); ++k) {
        index[static_cast<std::size_t>(pairs[k].u)][static_cast<std::size_t>(pairs[k].v)] = static_cast<int>(k);
        index[static_cast<std::size_t>(pairs[k].v)][static_cast<std::size_t>(pairs[k].u)] = static_cast<int>(k);
    }
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        std::vector<int> image(pairs.size());
        for (std::size_t k = 0; k < pairs.size(); ++k)
            image[k] = index[static_cast<std::size_t>(perm[static_cast<std::size_t>(pairs[k].u)])]
                            [static_cast<std::size_t>(perm[static_cast<std::size_t>(pairs[k].v)])];
        out.push_back(std::move(image));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::uint64_t apply(const std::vector<int>& image, std::uint64_t mask) {
    std::uint64_t out = 0;
    for (; mask != 0; mask &= mask - 1) out |= std::uint64_t{1} << image[static_cast<std::size_t>(std::countr_zero(mask))];
    return out;
}

} // namespace

std::uint64_t canonical_edge_mask(int n, std::uint64_t mask) {
    if (n > kMaxEnumerationOrder) throw ScaleError("canonical form supports n <= " + std::to_string(kMaxEnumerationOrder));
    std::uint64_t best = mask;
    for (const auto& image : pair_permutations(n)) best = std::min(best, apply(image, mask));
    return best;
}

std::vector<std::uint64_t> enumerate_edge_masks(int n, bool dedup) {
    if (n < 0 || n > kMaxEnumerationOrder)
        throw ScaleError("exhaustive enumeration supports 0 <= n <= " + std::to_string(kMaxEnumerationOrder));
    const auto pair_count = static_cast<unsigned>(n * (n - 1) / 2);
    const std::uint64_t limit = std::uint64_t{1} << pair_count;
    std::vector<std::uint64_t> out;
    if (!dedup) {
        out.resize(limit);
        std::iota(out.begin(), out.end(), std::uint64_t{0});
        return out;
    }
    const auto perms = pair_permutations(n);
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        bool minimal = true;
        for (const auto& image : perms) {
            if (apply(image, mask) < mask) {
                minimal = false;
                break;
            }
        }
        if (minimal) out.push_back(mask);
    }
    return out;
}

void for_each_labeled_graph(int n, bool dedup, const std::function<void(const Graph&)>& fn) {
    for (std::uint64_t mask : enumerate_edge_masks(n, dedup)) fn(graph_from_edge_mask(n, mask));
}

void for_each_nonempty_subset(const EdgeSet& edges, const std::function<void(const EdgeSet&)>& fn) {
    std::vector<Edge> current;
    auto descend = [&](auto&& self, std::size_t start) -> void {
        for (std::size_t i = start; i < edges.size(); ++i) {
            current.push_back(edges[i]);
            fn(EdgeSet(current));
            self(self, i + 1);
            current.pop_back();
        }
    };
    descend(descend, 0);
}

Graph sample_gnp(int n, double p, std::mt19937_64& rng) {
    if (!(p >= 0.0 && p <= 1.0)) throw DomainError("edge probability must lie in [0, 1]");
    std::vector<Edge> edges;
    for (const auto& e : pair_order(n)) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        if (u < p) edges.push_back(e);
    }
    return Graph::from_edges(n, EdgeSet(std::move(edges)));
}

Graph sample_gnp(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    return sample_gnp(n, p, rng);
}

bool is_clique_union(const EdgeSet& m) {
    std::array<int, kMaxVertices> parent{};
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
        return v;
    };
    for (const auto& e : m) parent[static_cast<std::size_t>(find(e.u))] = find(e.v);
    std::array<int, kMaxVertices> vertices{};
    std::array<int, kMaxVertices> edges{};
    for (int v : support_vertices(m).to_vector()) ++vertices[static_cast<std::size_t>(find(v))];
    for (const auto& e : m) ++edges[static_cast<std::size_t>(find(e.u))];
    for (std::size_t r = 0; r < vertices.size(); ++r)
        if (vertices[r] > 0 && edges[r] != vertices[r] * (vertices[r] - 1) / 2) return false;
    return true;
}

SweepReport sweep(const SweepConfig& config, const RecordSink& sink) {
    validate(config);
    const std::vector<WorkItem> items = plan(config);
    const bool keep_records = static_cast<bool>(sink);

    const std::size_t range_count = std::max<std::size_t>(1, std::min<std::size_t>(items.size(), static_cast<std::size_t>(config.threads) * 8));
    const std::size_t per_range = (items.size() + range_count - 1) / std::max<std::size_t>(range_count, 1);
    std::vector<RangeResult> results(range_count);

    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto worker = [&] {
        for (std::size_t r; (r = next.fetch_add(1)) < range_count;) {
            try {
                const std::size_t lo = r * per_range;
                const std::size_t hi = std::min(items.size(), lo + per_range);
                for (std::size_t i = lo; i < hi; ++i) process(items[i], config, keep_records, results[r]);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        }
    };
    const int workers = std::min<int>(config.threads, static_cast<int>(range_count));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (int t = 0; t < workers; ++t) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);

    SweepReport report;
    report.config = config;
    report.graphs = items.size();
    for (std::size_t k = 0; k < 4; ++k) {
        report.cells[k].holds = k >= 2;
        report.cells[k].m_edge_complete = k % 2 == 1;
    }
    for (auto& range : results) {
        for (std::size_t k = 0; k < 4; ++k) {
            auto& cell = report.cells[k];
            cell.count += range.cells[k].count;
            for (auto& w : range.cells[k].witnesses) {
                if (cell.witnesses.size() >= static_cast<std::size_t>(config.witness_cap)) break;
                cell.witnesses.push_back(std::move(w));
            }
        }
        report.clique_union_pairs += range.clique_union_pairs;
        report.clique_union_failures += range.clique_union_failures;
        if (keep_records)
            for (const auto& rec : range.records) sink(rec);
    }
    for (const auto& cell : report.cells) report.total += cell.count;
    return report;
}

const char* to_string(SweepMode mode) { return mode == SweepMode::Exhaustive ? "exhaustive" : "random"; }

const char* to_string(SubsetMode mode) { return mode == SubsetMode::AllSubsets ? "all-subsets" : "sampled"; }

namespace {

nlohmann::ordered_json record_json(const ClassificationRecord& r) {
    return {{"graph", r.graph},
            {"m", r.m},
            {"holds", r.holds},
            {"m_edge_complete", r.m_edge_complete},
            {"support_clique", r.support_clique},
            {"diff", r.diff}};
}

} // namespace

std::string to_json(const SweepReport& report) {
    const auto& c = report.config;
    nlohmann::ordered_json doc;
    doc["config"] = {{"n_min", c.n_min},
                     {"n_max", c.n_max},
                     {"mode", to_string(c.mode)},
                     {"m_mode", to_string(c.m_mode)},
                     {"graph_samples", c.graph_samples},
                     {"m_samples", c.m_samples},
                     {"edge_probability", c.edge_probability},
                     {"seed", c.seed},
                     {"dedup", c.dedup},
                     {"witness_cap", c.witness_cap},
                     {"rng", "mt19937_64"}};
    doc["graphs"] = report.graphs;
    doc["total"] = report.total;
    auto cells = nlohmann::ordered_json::array();
    for (const auto& cell : report.cells) {
        auto witnesses = nlohmann::ordered_json::array();
        for (const auto& w : cell.witnesses) witnesses.push_back(record_json(w));
        cells.push_back({{"holds", cell.holds},
                         {"m_edge_complete", cell.m_edge_complete},
                         {"count", cell.count},
                         {"witnesses", std::move(witnesses)}});
    }
    doc["cells"] = std::move(cells);
    doc["clique_union"] = {{"pairs", report.clique_union_pairs}, {"failures", report.clique_union_failures}};
    return doc.dump(2) + "\n";
}

std::string csv_header() { return "graph,m,holds,m_edge_complete,support_clique,diff\n"; }

std::string to_csv_row(const ClassificationRecord& r) {
    auto flag = [](bool b) { return b ? "true" : "false"; };
    return r.graph + ",\"" + r.m + "\"," + flag(r.holds) + "," + flag(r.m_edge_complete) + "," +
           flag(r.support_clique) + "," + r.diff + "\n";
}

} // namespace cliquepoly
