#pragma once

#include <cstdint>
#include <string>

#include "zic/rational.hpp"

namespace zic::det {

/// Hard bound coming from the machine-word signal representation. Region
/// and sum-capacity computations are closed-form and do not care; anything
/// that builds level vectors or schemes does.
inline constexpr int kMaxLevels = 64;

/// Parameters of the linear deterministic Z interference channel:
/// m direct-link levels, n cross-link levels, C cooperative bits per use.
struct DetConfig {
    int m = 0;
    int n = 0;
    int C = 0;

    int q() const { return m > n ? m : n; }
    /// n/m; only defined for m > 0.
    Rational alpha() const;
};

enum class Regime { WeakModerate, High, VeryHigh };

std::string regime_name(Regime r);

/// Validates m, n, C >= 0.
DetConfig make_config(int m, int n, int C);

/// WeakModerate: n <= m.  High: m < n < 2m.  VeryHigh: n >= 2m > 0.
/// Throws when m = 0 (alpha undefined).
Regime regime(const DetConfig& cfg);

/// Fixed-length bit vector indexed by signal level; level 1 is the
/// bottom-most (weakest) entry, level len() the strongest.
class LevelVector {
public:
    LevelVector() : len_(0), bits_(0) {}
    explicit LevelVector(int len, std::uint64_t bits = 0);

    int len() const { return len_; }
    std::uint64_t bits() const { return bits_; }

    bool get(int level) const;
    void set(int level, bool value);

    LevelVector operator^(const LevelVector& other) const;
    bool operator==(const LevelVector& other) const {
        return len_ == other.len_ && bits_ == other.bits_;
    }
    bool operator!=(const LevelVector& other) const { return !(*this == other); }

    /// Levels printed top-down: "10100" has a 1 at levels 5 and 3.
    std::string str() const;
    static LevelVector from_string(const std::string& s);

private:
    void check_level(int level) const;

    int len_;
    std::uint64_t bits_;
};

/// Output level l = input level l + k; zeros enter at the top.
LevelVector downshift(const LevelVector& v, int k);

struct TransmitResult {
    LevelVector y1;  // length q
    LevelVector y2;  // length m
};

/// Channel law, receiver-level aligned (bottom-numbered levels):
///   y1[l] = x1[l] xor x2[l + (q-n)]   for l in [1:q]
///   y2[l] = x2[l + (q-m)]             for l in [1:m]
/// with out-of-range entries read as zero. Requires len(x1) = m and
/// len(x2) = q = max(m, n).
TransmitResult transmit(const DetConfig& cfg, const LevelVector& x1, const LevelVector& x2);

}  // namespace zic::det
