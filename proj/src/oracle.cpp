#include "hopspan/oracle.hpp"

#include <algorithm>
#include <bitset>
#include <limits>
#include <numeric>
#include <sstream>

#include "hopspan/error.hpp"

namespace hopspan {

namespace {

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

struct Universe {
    std::vector<std::int64_t> vertices;  // sorted
    std::vector<std::int64_t> steiner;   // candidates, sorted
    std::vector<Edge> edges;             // every vertex pair, lexicographic
};

Universe make_universe(std::span<const std::int64_t> points, const SearchConfig& cfg) {
    if (points.empty()) throw Error(Errc::InvalidArgument, "oracle needs at least one point");
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i - 1] >= points[i]) throw Error(Errc::NotSorted, "points must be strictly increasing");
    }
    if (cfg.k == 0) throw Error(Errc::InvalidArgument, "hop bound k must be at least 1");
    if (cfg.eps < 0) throw Error(Errc::InvalidArgument, "eps must be non-negative");

    Universe u;
    u.vertices.assign(points.begin(), points.end());
    if (cfg.steiner_range) {
        const auto [lo, hi] = *cfg.steiner_range;
        if (lo > points.front() || hi < points.back()) {
            throw Error(Errc::InvalidArgument, "Steiner range must contain every terminal");
        }
        if (hi - lo + 1 > static_cast<std::int64_t>(kMaxBnbVertices)) {
            throw Error(Errc::TooLarge, "Steiner range too wide for exact search");
        }
        for (auto x = lo; x <= hi; ++x) {
            if (!std::binary_search(points.begin(), points.end(), x)) u.steiner.push_back(x);
        }
        u.vertices.insert(u.vertices.end(), u.steiner.begin(), u.steiner.end());
        std::sort(u.vertices.begin(), u.vertices.end());
    }
    for (std::size_t i = 0; i < u.vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < u.vertices.size(); ++j) {
            u.edges.emplace_back(u.vertices[i], u.vertices[j]);
        }
    }
    return u;
}

Spanner make_witness(std::span<const std::int64_t> points, std::vector<Edge> edges) {
    std::vector<std::int64_t> used;
    for (const auto& e : edges) {
        for (const auto x : {e.u, e.v}) {
            if (!std::binary_search(points.begin(), points.end(), x)) used.push_back(x);
        }
    }
    return Spanner(std::vector<std::int64_t>(points.begin(), points.end()), std::move(used),
                   std::move(edges));
}

// Compact exact engine for the branch-and-bound route. Vertices and edges are
// small indices; edge sets are bitsets.
class Engine {
public:
    using Mask = std::bitset<kMaxBnbVertices * (kMaxBnbVertices - 1) / 2>;

    Engine(std::span<const std::int64_t> points, const SearchConfig& cfg, const Universe& u)
        : points_(points), u_(u), v_(u.vertices.size()), k_(std::min(cfg.k, v_)) {
        for (std::size_t i = 0; i < v_; ++i) {
            if (std::binary_search(points.begin(), points.end(), u.vertices[i])) terminals_.push_back(i);
        }
        for (std::size_t i = 0; i < v_; ++i) {
            for (std::size_t j = i + 1; j < v_; ++j) {
                const auto a = u.vertices[i];
                const auto b = u.vertices[j];
                edges_.push_back({i, j, b - a, counts_as_hop(cfg.mode, a, b)});
            }
        }
        for (std::size_t x = 0; x < terminals_.size(); ++x) {
            for (std::size_t y = x + 1; y < terminals_.size(); ++y) {
                const auto d = u.vertices[terminals_[y]] - u.vertices[terminals_[x]];
                const __int128 cap =
                    static_cast<__int128>(cfg.eps.denominator() + cfg.eps.numerator()) * d /
                    cfg.eps.denominator();
                pairs_.push_back({x, y, static_cast<std::int64_t>(cap)});
            }
        }
        for (std::size_t e = 0; e < edges_.size(); ++e) all_.set(e);
        layer_stride_ = v_;
        source_stride_ = (k_ + 1) * v_;
        optimistic_.resize(terminals_.size() * source_stride_);
        current_.resize(terminals_.size() * source_stride_);
    }

    std::size_t edge_total() const { return edges_.size(); }
    std::uint64_t nodes() const { return nodes_; }

    // Phase 1: the minimum size, by disjunctive branching on the pair with
    // the fewest candidate edges.
    std::size_t minimum() {
        best_ = edges_.size();
        minimize(Mask{}, Mask{});
        return best_;
    }

    // Phase 2: the lexicographically smallest feasible set of exactly
    // `target` edges (include-first in edge order visits sets in that order).
    Mask smallest_of_size(std::size_t target) {
        target_ = target;
        found_ = Mask{};
        if (!lex(0, Mask{}, Mask{})) throw Error(Errc::InvalidArgument, "no edge set of the stated size");
        return found_;
    }

    std::vector<Edge> to_edges(const Mask& m) const {
        std::vector<Edge> out;
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            if (m.test(e)) out.push_back(u_.edges[e]);
        }
        return out;
    }

private:
    struct E {
        std::size_t u, v;
        std::int64_t w;
        bool counted;
    };
    struct Pair {
        std::size_t x, y;  // positions in terminals_
        std::int64_t budget;
    };
    struct Analysis {
        bool infeasible = false;
        std::vector<std::size_t> unsatisfied;  // pair indices
        std::vector<Mask> needed;              // parallel to unsatisfied
        std::size_t lower_bound = 0;
    };

    std::int64_t& at(std::vector<std::int64_t>& d, std::size_t src, std::size_t h, std::size_t v) const {
        return d[src * source_stride_ + h * layer_stride_ + v];
    }

    void close_free(const Mask& m, std::int64_t* dist) const {
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t e = 0; e < edges_.size(); ++e) {
                if (!m.test(e) || edges_[e].counted) continue;
                const auto& [u, v, w, c] = edges_[e];
                if (dist[u] + w < dist[v]) dist[v] = dist[u] + w, changed = true;
                if (dist[v] + w < dist[u]) dist[u] = dist[v] + w, changed = true;
            }
        }
    }

    void distances(const Mask& m, std::vector<std::int64_t>& d) const {
        for (std::size_t src = 0; src < terminals_.size(); ++src) {
            std::int64_t* layer = &d[src * source_stride_];
            std::fill(layer, layer + v_, kInf);
            layer[terminals_[src]] = 0;
            close_free(m, layer);
            for (std::size_t h = 1; h <= k_; ++h) {
                std::int64_t* prev = layer;
                layer += layer_stride_;
                std::copy(prev, prev + v_, layer);
                for (std::size_t e = 0; e < edges_.size(); ++e) {
                    if (!m.test(e) || !edges_[e].counted) continue;
                    const auto& [u, v, w, c] = edges_[e];
                    if (prev[u] + w < layer[v]) layer[v] = prev[u] + w;
                    if (prev[v] + w < layer[u]) layer[u] = prev[v] + w;
                }
                close_free(m, layer);
            }
        }
    }

    bool pair_ok(std::vector<std::int64_t>& d, const Pair& p) const {
        return at(d, p.x, k_, terminals_[p.y]) <= p.budget;
    }

    // Terminal-holding components of `inc` minus one: edges still required
    // just to connect the terminals.
    std::size_t connectivity_gap(const Mask& inc) const {
        std::vector<std::size_t> parent(v_);
        std::iota(parent.begin(), parent.end(), 0);
        const auto find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            if (inc.test(e)) parent[find(edges_[e].u)] = find(edges_[e].v);
        }
        std::vector<std::size_t> roots;
        for (const auto t : terminals_) roots.push_back(find(t));
        std::sort(roots.begin(), roots.end());
        return static_cast<std::size_t>(std::unique(roots.begin(), roots.end()) - roots.begin()) - 1;
    }

    Analysis analyse(const Mask& inc, const Mask& exc) {
        Analysis a;
        const Mask open = all_ & ~exc;
        distances(open, optimistic_);
        for (const auto& p : pairs_) {
            if (!pair_ok(optimistic_, p)) {
                a.infeasible = true;
                return a;
            }
        }
        distances(inc, current_);
        for (std::size_t i = 0; i < pairs_.size(); ++i) {
            if (!pair_ok(current_, pairs_[i])) a.unsatisfied.push_back(i);
        }
        if (a.unsatisfied.empty()) return a;

        // An undecided edge can serve pair (x, y) only if some walk through it
        // in the optimistic graph stays within the pair's hop and weight budget.
        const Mask undecided = open & ~inc;
        for (const auto pi : a.unsatisfied) {
            const auto& p = pairs_[pi];
            Mask need;
            for (std::size_t e = 0; e < edges_.size(); ++e) {
                if (!undecided.test(e)) continue;
                const auto& [u, v, w, c] = edges_[e];
                const std::size_t spare = k_ - (c ? 1 : 0);
                bool usable = false;
                for (std::size_t h1 = 0; h1 <= spare && !usable; ++h1) {
                    const auto h2 = spare - h1;
                    const auto via_uv = at(optimistic_, p.x, h1, u) + w + at(optimistic_, p.y, h2, v);
                    const auto via_vu = at(optimistic_, p.x, h1, v) + w + at(optimistic_, p.y, h2, u);
                    usable = std::min(via_uv, via_vu) <= p.budget;
                }
                if (usable) need.set(e);
            }
            if (need.none()) {
                a.infeasible = true;
                return a;
            }
            a.needed.push_back(need);
        }

        // Pairs whose candidate sets are pairwise disjoint each cost a new edge.
        std::vector<std::size_t> order(a.needed.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) {
            return a.needed[l].count() < a.needed[r].count();
        });
        Mask taken;
        std::size_t packed = 0;
        for (const auto i : order) {
            if ((a.needed[i] & taken).none()) {
                taken |= a.needed[i];
                ++packed;
            }
        }
        a.lower_bound = inc.count() + std::max(packed, connectivity_gap(inc));
        return a;
    }

    void minimize(Mask inc, Mask exc) {
        ++nodes_;
        const auto a = analyse(inc, exc);
        if (a.infeasible) return;
        if (a.unsatisfied.empty()) {
            best_ = std::min(best_, inc.count());
            return;
        }
        if (a.lower_bound >= best_) return;

        std::size_t pick = 0;
        for (std::size_t i = 1; i < a.needed.size(); ++i) {
            if (a.needed[i].count() < a.needed[pick].count()) pick = i;
        }
        const Mask& branch = a.needed[pick];
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            if (!branch.test(e)) continue;
            Mask with = inc;
            with.set(e);
            minimize(with, exc);
            exc.set(e);
        }
    }

    bool lex(std::size_t next, Mask inc, Mask exc) {
        ++nodes_;
        const auto a = analyse(inc, exc);
        if (a.infeasible) return false;
        if (a.unsatisfied.empty()) {
            if (inc.count() != target_) return false;
            found_ = inc;
            return true;
        }
        if (inc.count() >= target_ || a.lower_bound > target_) return false;

        Mask useful;
        for (const auto& n : a.needed) useful |= n;
        for (std::size_t e = next; e < edges_.size(); ++e) {
            // With target minimal, an edge no unsatisfied pair can use never
            // appears in an optimal set.
            if (!useful.test(e)) {
                exc.set(e);
                continue;
            }
            Mask with = inc;
            with.set(e);
            if (lex(e + 1, with, exc)) return true;
            exc.set(e);
            return lex(e + 1, inc, exc);
        }
        return false;
    }

    std::span<const std::int64_t> points_;
    const Universe& u_;
    std::size_t v_;
    std::size_t k_;
    std::vector<std::size_t> terminals_;
    std::vector<E> edges_;
    std::vector<Pair> pairs_;
    Mask all_;
    std::size_t layer_stride_ = 0;
    std::size_t source_stride_ = 0;
    std::vector<std::int64_t> optimistic_;
    std::vector<std::int64_t> current_;
    std::uint64_t nodes_ = 0;
    std::size_t best_ = 0;
    std::size_t target_ = 0;
    Mask found_;
};

}  // namespace

SearchResult min_edges_exhaustive(std::span<const std::int64_t> points, const SearchConfig& cfg) {
    const std::size_t limit = cfg.steiner_range ? 6 : 7;
    if (points.size() > limit || points.size() > cfg.max_points) {
        throw Error(Errc::TooLarge, "exhaustive search is limited to " + std::to_string(limit) + " points");
    }
    const auto u = make_universe(points, cfg);
    if (u.vertices.size() > kMaxExhaustiveVertices) {
        throw Error(Errc::TooLarge, "exhaustive search is limited to " +
                                        std::to_string(kMaxExhaustiveVertices) + " vertices");
    }
    const std::vector<std::int64_t> terminals(points.begin(), points.end());
    SearchResult result;
    if (points.size() == 1) {
        result.witness = Spanner(terminals, {}, {});
        return result;
    }

    const std::size_t total = u.edges.size();
    std::vector<std::size_t> pick;
    std::vector<Edge> chosen;
    for (std::size_t m = points.size() - 1; m <= total; ++m) {
        pick.resize(m);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            ++result.nodes_explored;
            chosen.clear();
            for (const auto i : pick) chosen.push_back(u.edges[i]);
            const Spanner candidate(terminals, u.steiner, chosen);
            if (verify_spanner(candidate, cfg.eps, cfg.k, cfg.mode).ok) {
                result.minimum = m;
                result.witness = make_witness(points, chosen);
                return result;
            }
            // next m-combination of [0, total) in lexicographic order
            std::size_t i = m;
            while (i > 0 && pick[i - 1] == total - m + i - 1) --i;
            if (i == 0) break;
            ++pick[i - 1];
            for (std::size_t j = i; j < m; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    throw Error(Errc::InvalidArgument, "no spanner exists for this configuration");
}

SearchResult min_edges_bnb(std::span<const std::int64_t> points, const SearchConfig& cfg) {
    if (points.size() > cfg.max_points) {
        throw Error(Errc::TooLarge, "branch-and-bound is limited to " + std::to_string(cfg.max_points) +
                                        " points");
    }
    const auto u = make_universe(points, cfg);
    if (u.vertices.size() > kMaxBnbVertices) {
        throw Error(Errc::TooLarge, "branch-and-bound is limited to " +
                                        std::to_string(kMaxBnbVertices) + " vertices");
    }
    SearchResult result;
    if (points.size() == 1) {
        result.witness = Spanner(std::vector<std::int64_t>(points.begin(), points.end()), {}, {});
        return result;
    }
    Engine engine(points, cfg, u);
    result.minimum = engine.minimum();
    const auto best = engine.smallest_of_size(result.minimum);
    result.witness = make_witness(points, engine.to_edges(best));
    result.nodes_explored = engine.nodes();
    return result;
}

std::string golden_csv(std::span<const GoldenRow> rows) {
    std::ostringstream out;
    out << "n,k,eps,minimum\n";
    for (const auto& r : rows) {
        out << r.n << ',' << r.k << ',' << format_ratio(r.eps) << ',' << r.minimum << '\n';
    }
    return out.str();
}

std::vector<GoldenRow> parse_golden_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "n,k,eps,minimum") {
        throw Error(Errc::Parse, "golden table must start with 'n,k,eps,minimum'");
    }
    std::vector<GoldenRow> rows;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string n, k, eps, minimum;
        if (!std::getline(fields, n, ',') || !std::getline(fields, k, ',') ||
            !std::getline(fields, eps, ',') || !std::getline(fields, minimum)) {
            throw Error(Errc::Parse, "malformed golden row '" + line + "'");
        }
        try {
            rows.push_back({std::stoul(n), std::stoul(k), parse_ratio(eps), std::stoul(minimum)});
        } catch (const std::logic_error&) {
            throw Error(Errc::Parse, "malformed golden row '" + line + "'");
        }
    }
    return rows;
}

}  // namespace hopspan
