#pragma once

#include <utility>
#include <vector>

#include "zic/detmodel.hpp"
#include "zic/rational.hpp"

namespace zic::regions {

/// a*R1 + b*R2 <= c with rational coefficients.
struct Constraint {
    Rational a;
    Rational b;
    Rational c;
};

using RatePoint = std::pair<Rational, Rational>;

/// 2-D polytope of nonnegative rate pairs. R1 >= 0 and R2 >= 0 are
/// implicit and do not appear in the constraint list.
struct RateRegion {
    std::vector<Constraint> constraints;
};

/// Secrecy capacity region of the deterministic Z-IC:
///   weak/moderate: R1 <= m, R2 <= m,    R1+R2 <= 2m-n+C
///   high:          R1 <= m, R2 <= 2m-n, R1+R2 <= m+C
///   very high:     R1 <= m, R2 <= 0
/// Throws for m = 0.
RateRegion capacity_region(const det::DetConfig& cfg);

/// All feasible pairwise constraint intersections (nonnegativity
/// included), deduplicated and sorted counterclockwise starting from the
/// lexicographically smallest point. Degenerate (collinear) regions yield
/// their two endpoints. Throws if the region is empty or unbounded.
std::vector<RatePoint> vertices(const RateRegion& region);

bool contains(const RateRegion& region, const RatePoint& p);

/// max R1 + R2 over the region, in closed form per regime.
Rational sum_capacity(const det::DetConfig& cfg);

struct CurvePoint {
    Rational alpha;
    Rational normalized_sum;  // sum_capacity(m, alpha*m, C) / m
};

/// Sum capacity normalized by m along an alpha grid; every alpha*m must
/// be an integer.
std::vector<CurvePoint> sum_capacity_curve(int m, int C, const std::vector<Rational>& alpha_grid);

}  // namespace zic::regions
