#pragma once

#include <string>
#include <utility>
#include <vector>

namespace zic::gauss {

/// Gaussian Z-IC parameters: symbol power P, direct gain hd, cross gain
/// hc, cooperative-link rate CG (bits/use). Noise variance is 1, so
/// SNR = hd^2 P and INR = hc^2 P.
struct GaussConfig {
    double P = 0;
    double hd = 0;
    double hc = 0;
    double CG = 0;

    double snr() const { return hd * hd * P; }
    double inr() const { return hc * hc * P; }
};

GaussConfig make_config(double P, double hd, double hc, double CG);

/// Codebook split parameters, each in [0,1]. beta_i scales transmitter
/// i's total power; theta splits transmitter 1 between data and
/// artificial noise; lambda splits transmitter 2 between the
/// non-cooperative and cooperative messages.
struct CodebookParams {
    double theta1 = 1;
    double theta2 = 0;
    double beta1 = 1;
    double beta2 = 1;
    double lambda1 = 1;
    double lambda2 = 0;
};

struct PowerSplit {
    double Pp1 = 0;   // tx1 data
    double Pa1 = 0;   // tx1 artificial noise
    double Pp2 = 0;   // tx2 non-cooperative message
    double Pcp2 = 0;  // tx2 cooperative message (precoded away at rx1)
};

/// P2 = beta2 P splits into Pp2 and hd^2 Pcp2 via lambda; the leftover
/// tx1 power after paying hc^2 Pcp2 for precoding splits into Pp1 and Pa1
/// via theta. Zero-sum splits (theta1+theta2 = 0 or lambda1+lambda2 = 0)
/// resolve to an even split.
PowerSplit power_allocation(const GaussConfig& cfg, const CodebookParams& p);

/// Achievable secrecy rate pair for one power split:
///   R1 = 0.5 log2(1 + hd^2 Pp1 / (1 + hd^2 Pa1 + hc^2 Pp2))
///   R2 = min{ 0.5 log2(1 + hd^2 Pp2 + hd^4 Pcp2),
///             0.5 log2(1 + hd^2 Pp2) + min(CG, 0.5 log2(1 + hd^4 Pcp2)) }
///        - 0.5 log2(1 + hc^2 Pp2 / (1 + hd^2 Pa1)),  clamped at 0.
/// Throws if the split violates the power budgets.
std::pair<double, double> rate_pair(const GaussConfig& cfg, const PowerSplit& ps);

/// Samples per codebook parameter when sweeping the achievable region.
struct GridSpec {
    int theta1 = 17;
    int theta2 = 17;
    int beta1 = 17;
    int beta2 = 17;
    int lambda1 = 17;
    int lambda2 = 17;

    static GridSpec uniform(int n) { return GridSpec{n, n, n, n, n, n}; }
};

/// Pareto frontier of the sampled achievable region after time sharing
/// (upper-right convex hull of the point cloud plus axis anchors),
/// returned counterclockwise: from (R1max, 0) up to (0, R2max).
std::vector<std::pair<double, double>> achievable_region(const GaussConfig& cfg,
                                                         const GridSpec& grid);

/// Largest R2 the frontier reaches at a given R1 (linear interpolation);
/// -inf beyond the frontier's R1 range.
double frontier_value(const std::vector<std::pair<double, double>>& frontier, double r1);

/// Secure sum-rate lower bound under the fixed gap power allocation
/// (Pp1 = P/2, Pp2 = 1/hc^2, Pcp2 = (P - 1/hc^2)/2, Pa1 = 0, after
/// normalizing hd to 1). Requires hc^2 P > 1 and INR < SNR.
double sum_rate_lower(const GaussConfig& cfg);

/// Minimum of the sum-rate outer bounds:
///   (i)   log2(1 + SNR)
///   (ii)  0.5 log2(1 + SNR + INR + 2 sqrt(SNR INR))
///           + 0.5 log2(1 + SNR/(1+INR)) + CG
///   (iii) log2(1 + SNR) - 0.5 log2(1 + INR) + CG, applied when INR <= SNR
double sum_rate_outer(const GaussConfig& cfg);

/// sum_rate_outer - sum_rate_lower; lies in [0, 2] bits/s/Hz wherever the
/// lower bound's preconditions hold.
double gap(const GaussConfig& cfg);

/// Secure sum GDOF in the weak/moderate regime: min{2, 2 - kappa +
/// min(gamma, 1)}. kappa must lie in [0,1], gamma >= 0.
double sum_gdof(double kappa, double gamma);

/// Numerical GDOF estimate: evaluates the gap-allocation lower bound at
/// INR = SNR^kappa, CG = gamma * 0.5 log2(SNR) along an increasing SNR
/// list and returns the slope against 0.5 log2(SNR) between the two
/// largest feasible points. Validation oracle for sum_gdof. Grid points
/// with INR < 1 are infeasible and skipped (reported via warnings).
double gdof_numeric(double kappa, double gamma, const std::vector<double>& snr_list,
                    std::vector<std::string>* warnings = nullptr);

struct GdofPoint {
    double kappa = 0;
    double gamma = 0;
    double dsum = 0;
};

}  // namespace zic::gauss
