#include "starfactor/search.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>
#include <utility>

#include "starfactor/canonical.hpp"

namespace starfactor {
namespace {

// Hard cap so level keys fit in one machine word: C(10,2) = 45 bits.
// (Memory, not the key width, is the real limit beyond this anyway.)
constexpr int kMaxLevel = 10;

int girth_floor(const Constraints& c) {
    if (c.girth_exact) return *c.girth_exact;
    if (c.girth_min) return *c.girth_min;
    return 0;
}

void validate(const Constraints& c) {
    if (c.girth_exact && c.girth_min) {
        throw std::invalid_argument("constraints: girth_exact and girth_min are mutually exclusive");
    }
    if (c.girth_exact && *c.girth_exact < 3) {
        throw std::invalid_argument("constraints: girth_exact must be at least 3");
    }
    if (c.girth_min && *c.girth_min < 1) {
        throw std::invalid_argument("constraints: girth_min must be positive");
    }
    if (c.min_degree < 0) {
        throw std::invalid_argument("constraints: min_degree must be nonnegative");
    }
}

// Adjacency bits under the given labeling, packed so that numeric order on
// keys matches lexicographic order on the canonical graph6 payloads.
std::uint64_t pack_key(const Graph& g, const std::vector<int>& labeling) {
    std::uint64_t key = 0;
    int bit = 0;
    const int n = g.vertex_count();
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (g.has_edge(labeling[i], labeling[j])) key |= std::uint64_t{1} << (63 - bit);
        }
    }
    return key;
}

Graph unpack_key(int n, std::uint64_t key) {
    Graph g(n);
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if (key & (std::uint64_t{1} << (63 - bit))) g.add_edge(i, j);
        }
    }
    return g;
}

// Run fn over [0, total) split into one contiguous block per worker.
// Exceptions from workers are rethrown on the calling thread.
template <typename F>
void run_chunked(std::size_t total, int jobs, F&& fn) {
    if (total == 0) return;
    const int workers = std::min<std::size_t>(std::max(jobs, 1), total);
    if (workers == 1) {
        fn(std::size_t{0}, total);
        return;
    }
    const std::size_t block = (total + workers - 1) / workers;
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(workers);
    for (int w = 0; w < workers; ++w) {
        const std::size_t lo = w * block;
        const std::size_t hi = std::min(total, lo + block);
        threads.emplace_back([&, w, lo, hi] {
            try {
                fn(lo, hi);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

// Concurrent dedup set for level keys, striped to keep lock contention low.
class StripeSet {
  public:
    void insert(std::uint64_t key) {
        const std::size_t s = (key * 0x9e3779b97f4a7c15ull) >> 58;
        std::lock_guard<std::mutex> lock(mutexes_[s]);
        sets_[s].insert(key);
    }

    std::vector<std::uint64_t> take_sorted() {
        std::vector<std::uint64_t> out;
        std::size_t total = 0;
        for (const auto& s : sets_) total += s.size();
        out.reserve(total);
        for (auto& s : sets_) {
            out.insert(out.end(), s.begin(), s.end());
            s.clear();
        }
        std::sort(out.begin(), out.end());
        return out;
    }

  private:
    static constexpr std::size_t kStripes = 64;
    std::array<std::mutex, kStripes> mutexes_;
    std::array<std::unordered_set<std::uint64_t>, kStripes> sets_;
};

// Sorted canonical keys for every level up to the requested vertex count,
// honoring only the constraints that are safe to apply before all vertices
// exist: connectivity shapes the augmentation subsets, and a girth floor
// above 3 prunes (short cycles never vanish under vertex addition).
class LevelEngine {
  public:
    LevelEngine(const Constraints& c, int jobs)
        : connected_(c.connected), floor_(girth_floor(c)), jobs_(std::max(jobs, 1)) {}

    const std::vector<std::uint64_t>& level(int n) {
        grow_to(n);
        return levels_[n];
    }

  private:
    void grow_to(int n) {
        if (levels_.empty()) {
            levels_.resize(1);                   // level 0 stays empty
            levels_.push_back({std::uint64_t{0}});  // level 1: the single vertex
        }
        while (static_cast<int>(levels_.size()) <= n) {
            const int child_n = static_cast<int>(levels_.size());
            const auto& parents = levels_[child_n - 1];
            StripeSet next;
            run_chunked(parents.size(), jobs_, [&](std::size_t lo, std::size_t hi) {
                for (std::size_t p = lo; p < hi; ++p) {
                    extend(unpack_key(child_n - 1, parents[p]), next);
                }
            });
            levels_.push_back(next.take_sorted());
        }
    }

    void extend(const Graph& parent, StripeSet& next) const {
        const std::uint64_t mask_end = std::uint64_t{1} << parent.vertex_count();
        const std::uint64_t mask_begin = (connected_ && parent.vertex_count() > 0) ? 1 : 0;
        for (std::uint64_t mask = mask_begin; mask < mask_end; ++mask) {
            Graph child = parent.with_vertex(mask);
            if (floor_ > 3 && !girth(child).at_least(floor_)) continue;
            next.insert(pack_key(child, canonical_labeling(child)));
        }
    }

    bool connected_;
    int floor_;
    int jobs_;
    std::vector<std::vector<std::uint64_t>> levels_;
};

// Emission-time filter: everything the level construction could not enforce.
bool admits(const Graph& g, const Constraints& c) {
    if (g.vertex_count() > 0 && min_degree(g) < c.min_degree) return false;
    if (c.connected && !is_connected(g)) return false;
    if (c.girth_exact && !girth(g).equals(*c.girth_exact)) return false;
    if (c.girth_min && !girth(g).at_least(*c.girth_min)) return false;
    return true;
}

}  // namespace

std::vector<Graph> enumerate_graphs(const Constraints& c, int jobs) {
    validate(c);
    if (c.n < 0 || c.n > kMaxLevel) {
        throw std::invalid_argument("enumerate_graphs: vertex count out of range");
    }
    if (c.n == 0) {
        std::vector<Graph> out;
        if (admits(Graph(), c)) out.push_back(Graph());
        return out;
    }
    LevelEngine engine(c, jobs);
    std::vector<Graph> out;
    for (std::uint64_t key : engine.level(c.n)) {
        Graph g = unpack_key(c.n, key);
        if (admits(g, c)) out.push_back(std::move(g));
    }
    return out;
}

std::vector<CensusEntry> census_uniform(int n_max, const Constraints& c, CensusOptions options) {
    validate(c);
    if (n_max < 1 || n_max > kMaxLevel) {
        throw std::invalid_argument("census_uniform: n_max out of range");
    }
    const int jobs = std::max(options.jobs, 1);
    LevelEngine engine(c, jobs);
    std::vector<CensusEntry> out;
    for (int n = 1; n <= n_max; ++n) {
        std::vector<Graph> candidates;
        for (std::uint64_t key : engine.level(n)) {
            Graph g = unpack_key(n, key);
            if (admits(g, c)) candidates.push_back(std::move(g));
        }
        // Reports are filled by index so the output order never depends on
        // worker scheduling.
        std::vector<std::pair<bool, UniformityReport>> results(candidates.size());
        run_chunked(candidates.size(), jobs, [&](std::size_t lo, std::size_t hi) {
            for (std::size_t i = lo; i < hi; ++i) {
                const Graph& g = candidates[i];
                if (options.prune_lemmas && (lemma2_witness(g) || lemma3_violation(g))) {
                    results[i].first = false;  // certified non-uniform
                    continue;
                }
                UniformityReport report = is_uniform(g, {.full = options.full_reports});
                results[i].first = report.factor_exists && report.uniform;
                results[i].second = std::move(report);
            }
        });
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (!results[i].first) continue;
            out.push_back({std::move(candidates[i]), std::move(results[i].second)});
        }
    }
    return out;
}

}  // namespace starfactor
