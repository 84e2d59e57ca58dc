#include "zic/regions.hpp"

#include <algorithm>
#include <stdexcept>

namespace zic::regions {

using det::DetConfig;
using det::Regime;

RateRegion capacity_region(const DetConfig& cfg) {
    if (cfg.m <= 0) throw std::invalid_argument("capacity_region: m must be positive");
    const Rational m(cfg.m);
    RateRegion region;
    switch (regime(cfg)) {
        case Regime::WeakModerate:
            region.constraints = {{1, 0, m},
                                  {0, 1, m},
                                  {1, 1, Rational(2 * cfg.m - cfg.n + cfg.C)}};
            break;
        case Regime::High:
            region.constraints = {{1, 0, m},
                                  {0, 1, Rational(2 * cfg.m - cfg.n)},
                                  {1, 1, Rational(cfg.m + cfg.C)}};
            break;
        case Regime::VeryHigh:
            region.constraints = {{1, 0, m}, {0, 1, 0}};
            break;
    }
    return region;
}

bool contains(const RateRegion& region, const RatePoint& p) {
    if (p.first < Rational(0) || p.second < Rational(0)) return false;
    for (const auto& c : region.constraints)
        if (c.a * p.first + c.b * p.second > c.c) return false;
    return true;
}

namespace {

std::vector<Constraint> with_nonnegativity(const RateRegion& region) {
    std::vector<Constraint> all = region.constraints;
    all.push_back({-1, 0, 0});  // R1 >= 0
    all.push_back({0, -1, 0});  // R2 >= 0
    return all;
}

// The region is unbounded iff its recession cone within the first
// quadrant contains a nonzero direction. Any extreme ray of that cone is
// either a quadrant axis or perpendicular to some constraint normal, so
// testing those candidate directions is exhaustive.
bool is_unbounded(const std::vector<Constraint>& all) {
    std::vector<RatePoint> candidates = {{1, 0}, {0, 1}};
    for (const auto& c : all) {
        candidates.push_back({-c.b, c.a});
        candidates.push_back({c.b, -c.a});
    }
    for (const auto& d : candidates) {
        if (d.first < Rational(0) || d.second < Rational(0)) continue;
        if (d.first == Rational(0) && d.second == Rational(0)) continue;
        bool recedes = true;
        for (const auto& c : all) {
            if (c.a * d.first + c.b * d.second > Rational(0)) {
                recedes = false;
                break;
            }
        }
        if (recedes) return true;
    }
    return false;
}

Rational cross(const RatePoint& o, const RatePoint& a, const RatePoint& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

// Andrew's monotone chain, counterclockwise, collinear points dropped.
// Collinear input degenerates to its two extreme points.
std::vector<RatePoint> hull_ccw(std::vector<RatePoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<RatePoint> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {  // lower hull
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= Rational(0)) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {  // upper hull
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= Rational(0)) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

}  // namespace

std::vector<RatePoint> vertices(const RateRegion& region) {
    const auto all = with_nonnegativity(region);
    if (is_unbounded(all)) throw std::invalid_argument("vertices: region is unbounded");

    std::vector<RatePoint> feasible;
    for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            const auto& p = all[i];
            const auto& q = all[j];
            Rational det = p.a * q.b - p.b * q.a;
            if (det == Rational(0)) continue;  // parallel
            RatePoint v{(p.c * q.b - p.b * q.c) / det, (p.a * q.c - p.c * q.a) / det};
            if (contains(region, v)) feasible.push_back(v);
        }
    }
    if (feasible.empty()) throw std::invalid_argument("vertices: region is empty");
    return hull_ccw(std::move(feasible));
}

Rational sum_capacity(const DetConfig& cfg) {
    if (cfg.m <= 0) throw std::invalid_argument("sum_capacity: m must be positive");
    switch (regime(cfg)) {
        case Regime::WeakModerate:
            return Rational(std::min(2 * cfg.m, 2 * cfg.m - cfg.n + cfg.C));
        case Regime::High:
            return Rational(cfg.m + std::min(cfg.C, 2 * cfg.m - cfg.n));
        case Regime::VeryHigh:
            return Rational(cfg.m);
    }
    throw std::logic_error("sum_capacity: unreachable");
}

std::vector<CurvePoint> sum_capacity_curve(int m, int C, const std::vector<Rational>& alpha_grid) {
    if (m <= 0) throw std::invalid_argument("sum_capacity_curve: m must be positive");
    if (C < 0) throw std::invalid_argument("sum_capacity_curve: C must be nonnegative");
    std::vector<CurvePoint> out;
    out.reserve(alpha_grid.size());
    for (const Rational& alpha : alpha_grid) {
        Rational n_exact = alpha * Rational(m);
        if (!n_exact.is_integer() || n_exact < Rational(0))
            throw std::invalid_argument("sum_capacity_curve: alpha*m = " + n_exact.str() +
                                        " is not a nonnegative integer");
        DetConfig cfg = det::make_config(m, static_cast<int>(n_exact.num()), C);
        out.push_back({alpha, sum_capacity(cfg) / Rational(m)});
    }
    return out;
}

}  // namespace zic::regions
