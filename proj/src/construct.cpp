#include "hopspan/construct.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "hopspan/ackermann.hpp"
#include "hopspan/error.hpp"

namespace hopspan {

namespace {

using Points = std::span<const std::int64_t>;

std::size_t ceil_log2(std::size_t n) { return n <= 1 ? 0 : std::bit_width(n - 1); }

std::size_t ceil_sqrt(std::size_t n) {
    std::size_t r = 0;
    while (r * r < n) ++r;
    return r;
}

void validate(Points points) {
    if (points.empty()) throw Error(Errc::InvalidArgument, "cannot build a spanner on no points");
    for (std::size_t i = 1; i < points.size(); ++i) {
        if (points[i - 1] >= points[i]) throw Error(Errc::NotSorted, "points must be strictly increasing");
    }
}

void complete(Points pts, std::vector<Edge>& out) {
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) out.emplace_back(pts[i], pts[j]);
    }
}

void median_star(Points pts, std::vector<Edge>& out) {
    if (pts.size() <= 1) return;
    const std::size_t mid = (pts.size() - 1) / 2;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i != mid) out.emplace_back(pts[i], pts[mid]);
    }
    median_star(pts.subspan(0, mid), out);
    median_star(pts.subspan(mid + 1), out);
}

// Splits pts into consecutive blocks of `block` points, ties every point to
// its block's two extreme points, and returns those hubs in order.
std::vector<std::int64_t> attach_to_hubs(Points pts, std::size_t block, std::vector<Edge>& out) {
    std::vector<std::int64_t> hubs;
    for (std::size_t start = 0; start < pts.size(); start += block) {
        const auto part = pts.subspan(start, std::min(block, pts.size() - start));
        const auto left = part.front();
        const auto right = part.back();
        for (const auto p : part) {
            if (p != left) out.emplace_back(p, left);
            if (p != right) out.emplace_back(p, right);
        }
        hubs.push_back(left);
        if (right != left) hubs.push_back(right);
    }
    return hubs;
}

void sqrt_blocks(Points pts, std::vector<Edge>& out) {
    if (pts.size() <= 3) {
        complete(pts, out);
        return;
    }
    const std::size_t block = ceil_sqrt(pts.size());
    const auto hubs = attach_to_hubs(pts, block, out);
    complete(hubs, out);
    for (std::size_t start = 0; start < pts.size(); start += block) {
        sqrt_blocks(pts.subspan(start, std::min(block, pts.size() - start)), out);
    }
}

void general(Points pts, std::size_t k, std::vector<Edge>& out) {
    if (k == 2) return median_star(pts, out);
    if (k == 3) return sqrt_blocks(pts, out);
    if (pts.size() <= 4) return complete(pts, out);

    const std::size_t n = pts.size();
    auto block = static_cast<std::size_t>(ackermann::alpha_k(k - 2, n));
    block = std::clamp<std::size_t>(block, 1, n - 1);

    const auto hubs = attach_to_hubs(pts, block, out);
    general(hubs, k - 2, out);
    for (std::size_t start = 0; start < n; start += block) {
        general(pts.subspan(start, std::min(block, n - start)), k, out);
    }
}

BuildResult finish(Points pts, std::size_t k, std::vector<Edge> edges) {
    std::vector<std::int64_t> terminals(pts.begin(), pts.end());
    Spanner s(std::move(terminals), {}, std::move(edges));
    BuildStats stats{pts.size(), k, s.edge_count(), edge_cap(pts.size(), k)};
    return {std::move(s), stats};
}

}  // namespace

std::size_t edge_constant(std::size_t k) {
    // Worst edge_count / (n * max(1, alpha_k(n))) seen over every n <= 4096
    // and a geometric sample up to 2^18, rounded up: 2.33, 1.16, 3.07, 1.18
    // for k = 3..6, 5.80 for odd k >= 7, at most 1.01 for even k >= 8.
    static constexpr std::size_t table[kMaxCappedK + 1] = {0, 0, 1, 3, 2, 4, 2, 7, 2, 7, 2, 7, 2};
    if (k <= kMaxCappedK) return table[k];
    return k % 2 == 1 ? 7 : 2;
}

std::size_t edge_cap(std::size_t n, std::size_t k) {
    if (k <= 2) return n * ceil_log2(n) + n;
    const auto alpha = std::max<std::uint64_t>(1, ackermann::alpha_k(k, n));
    return edge_constant(k) * n * static_cast<std::size_t>(alpha);
}

BuildResult build_k2(std::span<const std::int64_t> points) {
    validate(points);
    std::vector<Edge> edges;
    median_star(points, edges);
    return finish(points, 2, std::move(edges));
}

BuildResult build_k3(std::span<const std::int64_t> points) {
    validate(points);
    std::vector<Edge> edges;
    sqrt_blocks(points, edges);
    return finish(points, 3, std::move(edges));
}

BuildResult build_general(std::span<const std::int64_t> points, std::size_t k) {
    if (k < 2) throw Error(Errc::InvalidArgument, "hop bound k must be at least 2");
    if (k == 2) return build_k2(points);
    if (k == 3) return build_k3(points);
    validate(points);
    std::vector<Edge> edges;
    general(points, k, edges);
    return finish(points, k, std::move(edges));
}

}  // namespace hopspan
