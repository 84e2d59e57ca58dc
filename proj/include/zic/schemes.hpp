#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zic/detmodel.hpp"
#include "zic/gf2.hpp"

namespace zic::schemes {

/// One-shot GF(2) linear encoder pair for the deterministic Z-IC.
///
/// Transmitter 2 encodes x2 = enc2 * w2 and passes v21 = coop_selector * w2
/// (at most C bits) over the cooperative link. Transmitter 1 encodes
/// x1 = enc1_w * w1  xor  enc1_v * v21  xor  enc1_r * rand,
/// where rand is a vector of r fresh uniform jamming bits.
struct LinearScheme {
    int k1 = 0;  // data bits of W1 per use
    int k2 = 0;  // data bits of W2 per use
    int r = 0;   // jamming bits at transmitter 1

    gf2::Matrix coop_selector;  // C' x k2, C' <= C
    gf2::Matrix enc1_w;         // m x k1
    gf2::Matrix enc1_v;         // m x C'
    gf2::Matrix enc1_r;         // m x r
    gf2::Matrix enc2;           // q x k2

    int m() const { return enc1_w.rows(); }
    int q() const { return enc2.rows(); }
    int coop_bits() const { return coop_selector.rows(); }

    /// Throws unless all matrix dimensions are mutually consistent.
    void check_consistent() const;
};

/// Corner points of the per-regime capacity regions. VeryHigh admits only
/// R1Max; the other regimes admit all four.
enum class Corner { R1Max, R2Max, R1MaxR2Coop, R1CoopR2Max };

std::string corner_name(Corner c);
Corner corner_from_name(const std::string& name);
std::vector<Corner> corners_for(det::Regime regime);

/// Builds the achievable scheme for one corner of cfg's regime.
///
/// Effective cooperation is clamped at C' = min(C, n) in the weak/moderate
/// regime and C' = min(C, 2m-n) in the high regime; extra cooperative bits
/// cannot raise the rate, and the clamp keeps every (m, n, C) well formed.
LinearScheme corner_scheme(const det::DetConfig& cfg, Corner corner);

struct EncodeResult {
    det::LevelVector x1;
    det::LevelVector x2;
    std::uint64_t v21 = 0;  // coop_bits() wide
};

/// Applies the scheme to one message/jamming realization. w1, w2, rand are
/// bit words of width k1, k2, r.
EncodeResult encode(const LinearScheme& s, std::uint64_t w1, std::uint64_t w2,
                    std::uint64_t rand_bits);

/// Achieved rate pair (k1, k2).
std::pair<int, int> rate(const LinearScheme& s);

/// JSON round trip; matrices serialize as arrays of 0/1 rows (row index 0
/// = level 1). Used by golden tests and the det-verify --scheme-file path.
std::string to_json(const LinearScheme& s);
LinearScheme from_json(const std::string& text);

}  // namespace zic::schemes
