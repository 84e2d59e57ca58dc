#include "zic/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace zic::gauss {

namespace {

constexpr double kBudgetSlack = 1e-9;

double log2_1p(double x) { return std::log2(1.0 + x); }

void check_unit(double v, const char* name) {
    if (!(v >= 0.0 && v <= 1.0))
        throw std::invalid_argument(std::string("codebook parameter ") + name +
                                    " must lie in [0,1]");
}

}  // namespace

GaussConfig make_config(double P, double hd, double hc, double CG) {
    if (!(P > 0)) throw std::invalid_argument("gauss config: P must be positive");
    if (!(CG >= 0)) throw std::invalid_argument("gauss config: CG must be nonnegative");
    if (!std::isfinite(P) || !std::isfinite(hd) || !std::isfinite(hc) || !std::isfinite(CG))
        throw std::invalid_argument("gauss config: parameters must be finite");
    return GaussConfig{P, hd, hc, CG};
}

PowerSplit power_allocation(const GaussConfig& cfg, const CodebookParams& p) {
    check_unit(p.theta1, "theta1");
    check_unit(p.theta2, "theta2");
    check_unit(p.beta1, "beta1");
    check_unit(p.beta2, "beta2");
    check_unit(p.lambda1, "lambda1");
    check_unit(p.lambda2, "lambda2");
    if (cfg.hd == 0) throw std::invalid_argument("power_allocation: hd must be nonzero");

    const double P1 = p.beta1 * cfg.P;
    const double P2 = p.beta2 * cfg.P;
    const double lsum = p.lambda1 + p.lambda2;
    const double lshare = lsum > 0 ? p.lambda2 / lsum : 0.5;
    PowerSplit ps;
    ps.Pcp2 = lshare * P2 / (cfg.hd * cfg.hd);
    ps.Pp2 = (1.0 - lshare) * P2;
    const double leftover = std::max(P1 - cfg.hc * cfg.hc * ps.Pcp2, 0.0);
    const double tsum = p.theta1 + p.theta2;
    const double tshare = tsum > 0 ? p.theta2 / tsum : 0.5;
    ps.Pa1 = tshare * leftover;
    ps.Pp1 = (1.0 - tshare) * leftover;
    return ps;
}

std::pair<double, double> rate_pair(const GaussConfig& cfg, const PowerSplit& ps) {
    const double hd2 = cfg.hd * cfg.hd;
    const double hc2 = cfg.hc * cfg.hc;
    if (ps.Pp1 < 0 || ps.Pa1 < 0 || ps.Pp2 < 0 || ps.Pcp2 < 0)
        throw std::invalid_argument("rate_pair: powers must be nonnegative");
    const double slack = kBudgetSlack * cfg.P;
    if (ps.Pp2 + hd2 * ps.Pcp2 > cfg.P + slack)
        throw std::invalid_argument("rate_pair: transmitter 2 power budget violated");
    if (ps.Pp1 + hc2 * ps.Pcp2 + ps.Pa1 > cfg.P + slack)
        throw std::invalid_argument("rate_pair: transmitter 1 power budget violated");

    const double r1 = 0.5 * log2_1p(hd2 * ps.Pp1 / (1.0 + hd2 * ps.Pa1 + hc2 * ps.Pp2));
    const double leak = 0.5 * log2_1p(hc2 * ps.Pp2 / (1.0 + hd2 * ps.Pa1));
    const double joint = 0.5 * log2_1p(hd2 * ps.Pp2 + hd2 * hd2 * ps.Pcp2);
    const double split = 0.5 * log2_1p(hd2 * ps.Pp2) +
                         std::min(cfg.CG, 0.5 * log2_1p(hd2 * hd2 * ps.Pcp2));
    const double r2 = std::max(0.0, std::min(joint, split) - leak);
    return {r1, r2};
}

namespace {

// Distinct values of b/(a+b) over the two sampling grids; (0,0) resolves
// to the even split, matching power_allocation.
std::vector<double> share_values(int n1, int n2) {
    if (n1 < 2 || n2 < 2)
        throw std::invalid_argument("achievable_region: grid counts must be >= 2");
    std::vector<double> out;
    out.reserve(static_cast<std::size_t>(n1) * n2);
    for (int i = 0; i < n1; ++i) {
        for (int j = 0; j < n2; ++j) {
            double a = static_cast<double>(i) / (n1 - 1);
            double b = static_cast<double>(j) / (n2 - 1);
            out.push_back(a + b > 0 ? b / (a + b) : 0.5);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

double cross(const std::pair<double, double>& o, const std::pair<double, double>& a,
             const std::pair<double, double>& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

std::vector<std::pair<double, double>> hull_ccw(std::vector<std::pair<double, double>> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    const std::size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<std::pair<double, double>> h(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    for (std::size_t i = n - 1, t = k + 1; i-- > 0;) {
        while (k >= t && cross(h[k - 2], h[k - 1], pts[i]) <= 0) --k;
        h[k++] = pts[i];
    }
    h.resize(k - 1);
    return h;
}

}  // namespace

std::vector<std::pair<double, double>> achievable_region(const GaussConfig& cfg,
                                                         const GridSpec& grid) {
    if (grid.beta1 < 2 || grid.beta2 < 2)
        throw std::invalid_argument("achievable_region: grid counts must be >= 2");
    const auto theta_shares = share_values(grid.theta1, grid.theta2);
    const auto lambda_shares = share_values(grid.lambda1, grid.lambda2);
    const double hd2 = cfg.hd * cfg.hd;
    const double hc2 = cfg.hc * cfg.hc;

    std::vector<std::pair<double, double>> cloud;
    cloud.reserve(1024);
    double max_r2 = 0.0;
    for (int ib1 = 0; ib1 < grid.beta1; ++ib1) {
        const double beta1 = static_cast<double>(ib1) / (grid.beta1 - 1);
        for (int ib2 = 0; ib2 < grid.beta2; ++ib2) {
            const double beta2 = static_cast<double>(ib2) / (grid.beta2 - 1);
            for (double lshare : lambda_shares) {
                PowerSplit ps;
                ps.Pcp2 = lshare * beta2 * cfg.P / hd2;
                ps.Pp2 = (1.0 - lshare) * beta2 * cfg.P;
                // Precoding must fit transmitter 1's physical budget.
                if (hc2 * ps.Pcp2 > cfg.P * (1.0 + kBudgetSlack)) continue;
                const double leftover = std::max(beta1 * cfg.P - hc2 * ps.Pcp2, 0.0);
                for (double tshare : theta_shares) {
                    ps.Pa1 = tshare * leftover;
                    ps.Pp1 = (1.0 - tshare) * leftover;
                    auto rp = rate_pair(cfg, ps);
                    cloud.push_back(rp);
                    max_r2 = std::max(max_r2, rp.second);
                }
            }
        }
    }
    cloud.push_back({0.0, 0.0});
    cloud.push_back({0.5 * log2_1p(cfg.snr()), 0.0});  // single-user R1
    cloud.push_back({0.0, max_r2});                    // single-user R2 (tx1 silent)

    auto hull = hull_ccw(std::move(cloud));
    if (hull.size() <= 2) return hull;

    // Walk the CCW cycle from the max-R1 vertex to the max-R2 vertex.
    std::size_t start = 0, stop = 0;
    for (std::size_t i = 0; i < hull.size(); ++i) {
        if (hull[i].first > hull[start].first ||
            (hull[i].first == hull[start].first && hull[i].second > hull[start].second))
            start = i;
        if (hull[i].second > hull[stop].second ||
            (hull[i].second == hull[stop].second && hull[i].first < hull[stop].first))
            stop = i;
    }
    std::vector<std::pair<double, double>> frontier;
    for (std::size_t i = start;; i = (i + 1) % hull.size()) {
        frontier.push_back(hull[i]);
        if (i == stop) break;
    }
    return frontier;
}

double frontier_value(const std::vector<std::pair<double, double>>& frontier, double r1) {
    if (frontier.empty()) return -std::numeric_limits<double>::infinity();
    // Frontier runs from (R1max, .) down to (0, R2max): R1 decreasing.
    if (r1 > frontier.front().first) return -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < frontier.size(); ++i) {
        const auto& hi = frontier[i];
        const auto& lo = frontier[i + 1];
        if (r1 >= lo.first) {
            if (hi.first == lo.first) return std::max(hi.second, lo.second);
            double t = (r1 - lo.first) / (hi.first - lo.first);
            return lo.second + t * (hi.second - lo.second);
        }
    }
    return frontier.back().second;
}

namespace {

// Gap-allocation sum-rate lower bound in (SNR, INR) form, hd normalized
// to 1: Pp1 = SNR/2, Pp2 = SNR/INR, Pcp2 = (SNR - SNR/INR)/2, Pa1 = 0.
// hc^2 Pp2 = 1 exactly, so both the stochastic-encoding penalty and R1's
// interference floor are fixed at half a bit's worth. Needs INR >= 1 for
// a nonnegative Pcp2.
double lower_from_snr_inr(double snr, double inr, double cg) {
    const double pp2 = snr / inr;
    const double pcp2 = 0.5 * (snr - pp2);
    const double i1 = 0.5 * log2_1p(pp2 + pcp2);
    const double i2 = 0.5 * log2_1p(pp2) + std::min(cg, 0.5 * log2_1p(pcp2));
    return 0.5 * log2_1p(0.25 * snr) + std::min(i1, i2) - 0.5;
}

}  // namespace

double sum_rate_lower(const GaussConfig& cfg) {
    const double snr = cfg.snr();
    const double inr = cfg.inr();
    if (!(inr > 1.0))
        throw std::invalid_argument("sum_rate_lower: requires h_c^2 P > 1 "
                                    "(the fixed power allocation is infeasible)");
    if (!(inr < snr))
        throw std::invalid_argument("sum_rate_lower: requires INR < SNR "
                                    "(weak/moderate interference)");
    return lower_from_snr_inr(snr, inr, cfg.CG);
}

double sum_rate_outer(const GaussConfig& cfg) {
    const double snr = cfg.snr();
    const double inr = cfg.inr();
    double best = std::log2(1.0 + snr);
    best = std::min(best, 0.5 * log2_1p(snr + inr + 2.0 * std::sqrt(snr * inr)) +
                              0.5 * log2_1p(snr / (1.0 + inr)) + cfg.CG);
    if (inr <= snr)
        best = std::min(best, std::log2(1.0 + snr) - 0.5 * log2_1p(inr) + cfg.CG);
    return best;
}

double gap(const GaussConfig& cfg) { return sum_rate_outer(cfg) - sum_rate_lower(cfg); }

double sum_gdof(double kappa, double gamma) {
    if (!(kappa >= 0.0 && kappa <= 1.0))
        throw std::invalid_argument("sum_gdof: kappa must lie in [0,1] "
                                    "(weak/moderate interference)");
    if (!(gamma >= 0.0)) throw std::invalid_argument("sum_gdof: gamma must be nonnegative");
    return std::min(2.0, 2.0 - kappa + std::min(gamma, 1.0));
}

double gdof_numeric(double kappa, double gamma, const std::vector<double>& snr_list,
                    std::vector<std::string>* warnings) {
    if (!(kappa >= 0.0)) throw std::invalid_argument("gdof_numeric: kappa must be nonnegative");
    if (!(gamma >= 0.0)) throw std::invalid_argument("gdof_numeric: gamma must be nonnegative");
    if (snr_list.size() < 2)
        throw std::invalid_argument("gdof_numeric: need at least two SNR points");

    std::vector<std::pair<double, double>> pts;  // (0.5 log2 SNR, lower bound)
    double prev = 0;
    for (double snr : snr_list) {
        if (!(snr > prev))
            throw std::invalid_argument("gdof_numeric: SNR list must be strictly increasing");
        prev = snr;
        const double inr = std::pow(snr, kappa);
        if (inr < 1.0) {
            if (warnings)
                warnings->push_back("skipping SNR " + std::to_string(snr) +
                                    ": h_c^2 P < 1, allocation infeasible");
            continue;
        }
        const double half_log = 0.5 * std::log2(snr);
        pts.emplace_back(half_log, lower_from_snr_inr(snr, inr, gamma * half_log));
    }
    if (pts.size() < 2)
        throw std::invalid_argument("gdof_numeric: fewer than two feasible SNR points");
    const auto& [x0, y0] = pts[pts.size() - 2];
    const auto& [x1, y1] = pts.back();
    return (y1 - y0) / (x1 - x0);
}

}  // namespace zic::gauss
