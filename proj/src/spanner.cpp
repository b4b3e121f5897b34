#include "hopspan/spanner.hpp"

#include <algorithm>
#include <limits>
#include <queue>

#include <json.hpp>

#include "hopspan/error.hpp"

namespace hopspan {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;
constexpr std::uint32_t kRoot = std::numeric_limits<std::uint32_t>::max();

void sort_unique(std::vector<std::int64_t>& xs) {
    std::sort(xs.begin(), xs.end());
    xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
}

// Largest integer weight allowed for a pair at distance d.
std::int64_t stretch_budget(std::int64_t d, const Rational& eps) {
    const __int128 num = static_cast<__int128>(eps.denominator() + eps.numerator()) * d;
    return static_cast<std::int64_t>(num / eps.denominator());
}

Spanner::Index require_terminal(const Spanner& s, std::int64_t x) {
    const auto idx = s.index_of(x);
    if (!idx || !s.is_terminal(x)) {
        throw Error(Errc::UnknownVertex, "point " + std::to_string(x) + " is not a terminal");
    }
    return *idx;
}

// Distances from one source, one hop layer at a time: after `layer()` steps
// dist[v] is the lightest walk to v with at most that many counted hops.
class SourceSweep {
public:
    SourceSweep(const Spanner& s, const HopMode& mode) : s_(s) {
        const std::size_t n = s.vertex_count();
        free_adj_.resize(n);
        for (const auto& e : s.edges()) {
            const auto u = *s.index_of(e.u);
            const auto v = *s.index_of(e.v);
            if (counts_as_hop(mode, e.u, e.v)) {
                counted_.push_back({u, v, e.weight()});
            } else {
                free_adj_[u].push_back({v, e.weight()});
                free_adj_[v].push_back({u, e.weight()});
                has_free_ = true;
            }
        }
        dist_.assign(n, kInf);
        hops_.assign(n, 0);
    }

    void start(Spanner::Index source) {
        std::fill(dist_.begin(), dist_.end(), kInf);
        std::fill(hops_.begin(), hops_.end(), 0);
        layer_ = 0;
        dist_[source] = 0;
        close_free();
    }

    // Advances one layer; false when nothing improved (fixed point).
    bool step() {
        next_ = dist_;
        for (const auto& [u, v, w] : counted_) {
            if (dist_[u] + w < next_[v]) next_[v] = dist_[u] + w;
            if (dist_[v] + w < next_[u]) next_[u] = dist_[v] + w;
        }
        std::swap(dist_, next_);
        ++layer_;
        close_free();
        bool changed = false;
        for (std::size_t v = 0; v < dist_.size(); ++v) {
            if (dist_[v] < next_[v]) {
                changed = true;
                hops_[v] = layer_;
            }
        }
        return changed;
    }

    std::int64_t dist(Spanner::Index v) const { return dist_[v]; }
    // Counted hops of the layer where dist(v) last improved.
    std::size_t hops(Spanner::Index v) const { return hops_[v]; }
    std::size_t layer() const { return layer_; }

private:
    struct Counted {
        Spanner::Index u, v;
        std::int64_t w;
    };
    struct Free {
        Spanner::Index to;
        std::int64_t w;
    };

    void close_free() {
        if (!has_free_) return;
        using Item = std::pair<std::int64_t, Spanner::Index>;
        std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
        for (Spanner::Index v = 0; v < dist_.size(); ++v) {
            if (dist_[v] < kInf) heap.push({dist_[v], v});
        }
        while (!heap.empty()) {
            const auto [d, v] = heap.top();
            heap.pop();
            if (d != dist_[v]) continue;
            for (const auto& [to, w] : free_adj_[v]) {
                if (d + w < dist_[to]) {
                    dist_[to] = d + w;
                    heap.push({dist_[to], to});
                }
            }
        }
    }

    const Spanner& s_;
    std::vector<Counted> counted_;
    std::vector<std::vector<Free>> free_adj_;
    bool has_free_ = false;
    std::vector<std::int64_t> dist_, next_;
    std::vector<std::size_t> hops_;
    std::size_t layer_ = 0;
};

Violation make_violation(const Spanner& s, const HopMode& mode, std::size_t k, std::int64_t a,
                         std::int64_t b) {
    SourceSweep sweep(s, mode);
    sweep.start(*s.index_of(a));
    for (std::size_t h = 0; h < k && sweep.step(); ++h) {
    }
    const auto ib = *s.index_of(b);
    Violation v{a, b, std::nullopt, std::nullopt};
    if (sweep.dist(ib) < kInf) {
        v.best_weight = sweep.dist(ib);
        v.best_hops = sweep.hops(ib);
    }
    return v;
}

}  // namespace

Spanner::Spanner(std::vector<std::int64_t> terminals, std::vector<std::int64_t> steiner,
                 std::vector<Edge> edges)
    : terminals_(std::move(terminals)), steiner_(std::move(steiner)), edges_(std::move(edges)) {
    sort_unique(terminals_);
    sort_unique(steiner_);
    vertices_.reserve(terminals_.size() + steiner_.size());
    std::merge(terminals_.begin(), terminals_.end(), steiner_.begin(), steiner_.end(),
               std::back_inserter(vertices_));
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
        throw Error(Errc::InvalidArgument, "a Steiner vertex coincides with a terminal");
    }

    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    std::vector<std::size_t> degree(vertices_.size(), 0);
    for (const auto& e : edges_) {
        if (e.u == e.v) {
            throw Error(Errc::InvalidArgument, "self-loop at " + std::to_string(e.u));
        }
        for (const auto x : {e.u, e.v}) {
            const auto idx = index_of(x);
            if (!idx) throw Error(Errc::UnknownVertex, "edge endpoint " + std::to_string(x) + " is not a vertex");
            ++degree[*idx];
        }
    }

    offsets_.assign(vertices_.size() + 1, 0);
    for (std::size_t v = 0; v < vertices_.size(); ++v) offsets_[v + 1] = offsets_[v] + degree[v];
    adj_.resize(offsets_.back());
    std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
    for (const auto& e : edges_) {
        const auto u = *index_of(e.u);
        const auto v = *index_of(e.v);
        adj_[fill[u]++] = v;
        adj_[fill[v]++] = u;
    }
    adj_coord_.resize(adj_.size());
    for (std::size_t v = 0; v < vertices_.size(); ++v) {
        std::sort(adj_.begin() + offsets_[v], adj_.begin() + offsets_[v + 1]);
        for (std::size_t i = offsets_[v]; i < offsets_[v + 1]; ++i) adj_coord_[i] = vertices_[adj_[i]];
    }
}

std::optional<Spanner::Index> Spanner::index_of(std::int64_t coordinate) const noexcept {
    const auto it = std::lower_bound(vertices_.begin(), vertices_.end(), coordinate);
    if (it == vertices_.end() || *it != coordinate) return std::nullopt;
    return static_cast<Index>(it - vertices_.begin());
}

bool Spanner::is_terminal(std::int64_t coordinate) const noexcept {
    return std::binary_search(terminals_.begin(), terminals_.end(), coordinate);
}

bool Spanner::has_edge(std::int64_t a, std::int64_t b) const noexcept {
    const auto ia = index_of(a);
    if (!ia) return false;
    const auto coords = neighbor_coords(*ia);
    return std::binary_search(coords.begin(), coords.end(), b);
}

bool counts_as_hop(const HopMode& mode, std::int64_t a, std::int64_t b) {
    const auto* global = std::get_if<GlobalHops>(&mode);
    if (global == nullptr) return true;
    const auto& grid = global->grid;
    if (!grid.contains_coordinate(a) || !grid.contains_coordinate(b)) return true;
    return grid.is_global_edge(a, b);
}

PairChecker::PairChecker(const Spanner& s, const Rational& eps, std::size_t k, HopMode mode)
    : s_(s), eps_(eps), k_(std::min(k, s.vertex_count())), mode_(std::move(mode)) {
    if (eps_ < 0) throw Error(Errc::InvalidArgument, "eps must be non-negative");
    const std::size_t cells = (k_ + 1) * s_.vertex_count();
    weight_.assign(cells, kInf);
    parent_.assign(cells, 0);
    stamp_.assign(cells, 0);
    best_any_.assign(s_.vertex_count(), kInf);
    best_stamp_.assign(s_.vertex_count(), 0);
}

void PairChecker::reset_layers() {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    std::fill(best_stamp_.begin(), best_stamp_.end(), 0);
    epoch_ = 0;
}

std::optional<SpannerPath> PairChecker::find(std::int64_t a, std::int64_t b) {
    const auto ia = require_terminal(s_, a);
    const auto ib = require_terminal(s_, b);
    if (a == b) return SpannerPath{{a}, 0, 0};

    if (epoch_ == std::numeric_limits<std::uint32_t>::max()) reset_layers();
    const std::uint32_t epoch = ++epoch_;
    const std::size_t n = s_.vertex_count();
    const std::int64_t d = SparseLineMetric::distance(a, b);
    const std::int64_t budget = stretch_budget(d, eps_);
    const bool global_mode = std::holds_alternative<GlobalHops>(mode_);

    std::vector<std::vector<Spanner::Index>> frontier(k_ + 1);
    const auto cell = [n](std::size_t h, Spanner::Index v) {
        return static_cast<std::uint32_t>(h * n + v);
    };
    const auto relax = [&](std::size_t h, Spanner::Index v, std::int64_t w, std::uint32_t from) {
        if (best_stamp_[v] == epoch && best_any_[v] <= w) return false;
        best_stamp_[v] = epoch;
        best_any_[v] = w;
        const auto c = cell(h, v);
        if (stamp_[c] != epoch) {
            stamp_[c] = epoch;
            frontier[h].push_back(v);
        }
        weight_[c] = w;
        parent_[c] = from;
        return true;
    };

    relax(0, ia, 0, kRoot);
    std::int64_t best = kInf;
    std::size_t best_layer = 0;

    for (std::size_t h = 0; h <= k_; ++h) {
        if (global_mode && !frontier[h].empty()) {
            using Item = std::pair<std::int64_t, Spanner::Index>;
            std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
            for (const auto v : frontier[h]) heap.push({weight_[cell(h, v)], v});
            while (!heap.empty()) {
                const auto [g, v] = heap.top();
                heap.pop();
                if (g != weight_[cell(h, v)]) continue;
                const auto cv = s_.coord(v);
                const auto nbrs = s_.neighbors(v);
                for (const auto u : nbrs) {
                    const auto cu = s_.coord(u);
                    if (counts_as_hop(mode_, cv, cu)) continue;
                    const auto w = g + SparseLineMetric::distance(cv, cu);
                    if (w + SparseLineMetric::distance(cu, b) > budget) continue;
                    if (relax(h, u, w, cell(h, v))) heap.push({w, u});
                }
            }
        }

        if (stamp_[cell(h, ib)] == epoch && weight_[cell(h, ib)] < best) {
            best = weight_[cell(h, ib)];
            best_layer = h;
        }
        if (best == d || h == k_) break;

        const bool last_hop = !global_mode && h + 1 == k_;
        for (const auto v : frontier[h]) {
            if (v == ib) continue;
            const auto g = weight_[cell(h, v)];
            const auto cv = s_.coord(v);
            const auto reach = budget - g;
            if (last_hop) {
                if (s_.has_edge(cv, b) && g + SparseLineMetric::distance(cv, b) <= budget) {
                    relax(h + 1, ib, g + SparseLineMetric::distance(cv, b), cell(h, v));
                }
                continue;
            }
            // |cv - cu| + |cu - b| <= reach  <=>  cu in [(cv + b - reach) / 2, (cv + b + reach) / 2]
            const std::int64_t lo_twice = cv + b - reach;
            const std::int64_t lo = lo_twice >= 0 ? (lo_twice + 1) / 2 : -((-lo_twice) / 2);
            const auto nbrs = s_.neighbors(v);
            const auto coords = s_.neighbor_coords(v);
            auto it = std::lower_bound(coords.begin(), coords.end(), lo);
            for (; it != coords.end(); ++it) {
                const auto cu = *it;
                const auto w = g + SparseLineMetric::distance(cv, cu);
                if (cu > b && w + (cu - b) > budget) break;
                if (w + SparseLineMetric::distance(cu, b) > budget) continue;
                if (!counts_as_hop(mode_, cv, cu)) continue;
                relax(h + 1, nbrs[it - coords.begin()], w, cell(h, v));
            }
        }
    }

    if (best == kInf) return std::nullopt;

    SpannerPath path;
    path.weight = best;
    for (auto at = cell(best_layer, ib); at != kRoot; at = parent_[at]) {
        path.vertices.push_back(s_.coord(static_cast<Spanner::Index>(at % n)));
    }
    std::reverse(path.vertices.begin(), path.vertices.end());
    for (std::size_t i = 1; i < path.vertices.size(); ++i) {
        if (counts_as_hop(mode_, path.vertices[i - 1], path.vertices[i])) ++path.hops;
    }
    return path;
}

std::optional<SpannerPath> find_stretch_path(const Spanner& s, std::int64_t a, std::int64_t b,
                                             const Rational& eps, std::size_t k,
                                             const HopMode& mode) {
    PairChecker checker(s, eps, k, mode);
    return checker.find(a, b);
}

bool stretch_path_exists(const Spanner& s, std::int64_t a, std::int64_t b, const Rational& eps,
                         std::size_t k, const HopMode& mode) {
    return find_stretch_path(s, a, b, eps, k, mode).has_value();
}

VerifyReport verify_spanner(const Spanner& s, const Rational& eps, std::size_t k,
                            const HopMode& mode) {
    if (eps < 0) throw Error(Errc::InvalidArgument, "eps must be non-negative");
    SourceSweep sweep(s, mode);
    const auto& terms = s.terminals();
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
        const auto a = terms[i];
        sweep.start(*s.index_of(a));
        for (std::size_t h = 0; h < k && sweep.step(); ++h) {
        }
        for (std::size_t j = i + 1; j < terms.size(); ++j) {
            const auto b = terms[j];
            const auto w = sweep.dist(*s.index_of(b));
            if (w < kInf && within_stretch(w, b - a, eps)) continue;
            Violation v{a, b, std::nullopt, std::nullopt};
            if (w < kInf) {
                v.best_weight = w;
                v.best_hops = sweep.hops(*s.index_of(b));
            }
            return {false, v};
        }
    }
    return {};
}

VerifyReport verify_pairs(const Spanner& s, const Rational& eps, std::size_t k,
                          std::span<const std::pair<std::int64_t, std::int64_t>> pairs,
                          const HopMode& mode) {
    PairChecker checker(s, eps, k, mode);
    for (const auto& [x, y] : pairs) {
        if (checker.find(x, y)) continue;
        return {false, make_violation(s, mode, k, std::min(x, y), std::max(x, y))};
    }
    return {};
}

std::size_t hop_diameter(const Spanner& s, const Rational& eps, const HopMode& mode) {
    if (eps < 0) throw Error(Errc::InvalidArgument, "eps must be non-negative");
    const auto& terms = s.terminals();
    if (terms.size() < 2) throw Error(Errc::InvalidArgument, "hop diameter needs two terminals");
    SourceSweep sweep(s, mode);
    std::size_t diameter = 0;
    std::vector<std::int64_t> pending;
    for (std::size_t i = 0; i + 1 < terms.size(); ++i) {
        const auto a = terms[i];
        sweep.start(*s.index_of(a));
        pending.assign(terms.begin() + static_cast<std::ptrdiff_t>(i) + 1, terms.end());
        while (true) {
            std::erase_if(pending, [&](std::int64_t b) {
                const auto w = sweep.dist(*s.index_of(b));
                return w < kInf && within_stretch(w, b - a, eps);
            });
            if (pending.empty()) break;
            if (!sweep.step()) {
                throw Error(Errc::Unspannable, "no (1+eps)-path between " + std::to_string(a) +
                                                   " and " + std::to_string(pending.front()));
            }
        }
        diameter = std::max(diameter, sweep.layer());
    }
    return diameter;
}

std::size_t count_global_edges(const Spanner& s, const SparseLineMetric& grid) {
    std::size_t count = 0;
    for (const auto& e : s.edges()) {
        if (grid.contains_coordinate(e.u) && grid.contains_coordinate(e.v) &&
            grid.is_global_edge(e.u, e.v)) {
            ++count;
        }
    }
    return count;
}

std::string spanner_to_json(const Spanner& s) {
    nlohmann::ordered_json doc;
    doc["terminals"] = s.terminals();
    doc["steiner"] = s.steiner();
    auto edges = nlohmann::ordered_json::array();
    for (const auto& e : s.edges()) edges.push_back({e.u, e.v});
    doc["edges"] = std::move(edges);
    return doc.dump();
}

Spanner spanner_from_json(const std::string& text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        std::vector<Edge> edges;
        for (const auto& pair : doc.at("edges")) {
            if (!pair.is_array() || pair.size() != 2) {
                throw Error(Errc::Parse, "each edge must be a two-element array");
            }
            edges.emplace_back(pair[0].get<std::int64_t>(), pair[1].get<std::int64_t>());
        }
        std::vector<std::int64_t> steiner;
        if (doc.contains("steiner")) steiner = doc.at("steiner").get<std::vector<std::int64_t>>();
        return Spanner(doc.at("terminals").get<std::vector<std::int64_t>>(), std::move(steiner),
                       std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::Parse, std::string("bad spanner JSON: ") + e.what());
    }
}

}  // namespace hopspan
