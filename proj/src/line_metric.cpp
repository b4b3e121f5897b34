#include "hopspan/line_metric.hpp"

#include <algorithm>

#include <json.hpp>

#include "hopspan/error.hpp"

namespace hopspan {

namespace {

std::int64_t floor_div(__int128 num, __int128 den) {
    __int128 q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return static_cast<std::int64_t>(q);
}

std::int64_t ceil_div(__int128 num, __int128 den) { return -floor_div(-num, den); }

}  // namespace

std::size_t SparseLineMetric::interval_index(std::int64_t p) const {
    if (!contains_coordinate(p)) {
        throw Error(Errc::OutOfRange, "coordinate " + std::to_string(p) + " outside [" +
                                          std::to_string(l()) + ", " + std::to_string(r()) + "]");
    }
    return 1 + static_cast<std::size_t>((p - l_) / t_);
}

bool SparseLineMetric::is_global_edge(std::int64_t a, std::int64_t b) const {
    return interval_index(a) != interval_index(b);
}

SparseLineMetric uniform_metric(std::size_t n) {
    if (n == 0) throw Error(Errc::InvalidArgument, "uniform metric needs n >= 1");
    std::vector<std::int64_t> points(n);
    for (std::size_t i = 0; i < n; ++i) points[i] = static_cast<std::int64_t>(i) + 1;
    return sparse_metric(1, 1, std::move(points));
}

SparseLineMetric sparse_metric(std::int64_t l, std::int64_t t, std::vector<std::int64_t> reps) {
    if (t < 1) throw Error(Errc::InvalidArgument, "cell width t must be >= 1");
    if (reps.empty()) throw Error(Errc::InvalidArgument, "a line metric needs at least one point");
    for (std::size_t i = 1; i < reps.size(); ++i) {
        if (reps[i - 1] >= reps[i]) {
            throw Error(Errc::NotSorted, "representatives must be strictly increasing");
        }
    }
    for (std::size_t i = 0; i < reps.size(); ++i) {
        const std::int64_t lo = l + static_cast<std::int64_t>(i) * t;
        const std::int64_t hi = lo + t - 1;
        if (reps[i] < lo || reps[i] > hi) {
            throw Error(Errc::OutOfInterval, "representative " + std::to_string(reps[i]) +
                                                 " not in cell [" + std::to_string(lo) + ", " +
                                                 std::to_string(hi) + "]");
        }
    }
    return SparseLineMetric(l, t, std::move(reps));
}

Subspace::Subspace(std::shared_ptr<const SparseLineMetric> base, std::vector<std::int64_t> members)
    : base_(std::move(base)), members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    const auto& pts = base_->points();
    for (const auto m : members_) {
        if (!std::binary_search(pts.begin(), pts.end(), m)) {
            throw Error(Errc::InvalidArgument,
                        "subspace member " + std::to_string(m) + " is not a point of the base metric");
        }
    }
}

Rational Subspace::fraction() const {
    return Rational(static_cast<std::int64_t>(members_.size()),
                    static_cast<std::int64_t>(base_->n()));
}

SeparationWindow separation_window(std::int64_t l, std::int64_t r, const Rational& eps) {
    if (l > r) throw Error(Errc::InvalidArgument, "separation window needs l <= r");
    if (eps < 0) throw Error(Errc::InvalidArgument, "eps must be non-negative");
    // Scale by 2q with eps = p/q: coefficients become (2q + p) and p over 2(q + p).
    const __int128 p = eps.numerator();
    const __int128 q = eps.denominator();
    const __int128 den = 2 * (q + p);
    const std::int64_t i = ceil_div((2 * q + p) * l + p * r, den);
    const std::int64_t j = floor_div(p * l + (2 * q + p) * r, den);
    return {i, j};
}

std::string metric_to_json(const SparseLineMetric& metric) {
    nlohmann::ordered_json doc;
    doc["l"] = metric.l();
    doc["t"] = metric.t();
    doc["points"] = metric.points();
    return doc.dump();
}

SparseLineMetric metric_from_json(const std::string& text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        return sparse_metric(doc.at("l").get<std::int64_t>(), doc.at("t").get<std::int64_t>(),
                             doc.at("points").get<std::vector<std::int64_t>>());
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::Parse, std::string("bad metric JSON: ") + e.what());
    }
}

}  // namespace hopspan
