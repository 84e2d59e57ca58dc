#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "zic/detmodel.hpp"
#include "zic/gf2.hpp"
#include "zic/rational.hpp"
#include "zic/schemes.hpp"

namespace zic::verifier {

/// Exhaustive verification enumerates all 2^(k1+k2+r) input realizations;
/// this is the default ceiling on that exponent (seconds-scale work).
inline constexpr int kDefaultEnumCap = 24;

/// Thrown when an exhaustive check is requested beyond the enumeration cap.
struct EnumCapExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// End-to-end GF(2) maps induced by a scheme through the channel:
///   y1 = M1 w1  xor  M2 w2  xor  Mr rand     (q rows)
///   y2 = N2 w2                               (m rows)
/// M2 combines both paths w2 takes to receiver 1: the direct one through
/// x2 and the precoding one through the cooperative link into x1.
struct ChannelMaps {
    gf2::Matrix M1;
    gf2::Matrix M2;
    gf2::Matrix Mr;
    gf2::Matrix N2;
};

ChannelMaps channel_maps(const det::DetConfig& cfg, const schemes::LinearScheme& s);

struct VerificationReport {
    bool decodable1 = false;
    bool decodable2 = false;
    /// Exact I(W2; y1) in bits; absent when the enumeration cap was
    /// exceeded and only the algebraic oracle ran.
    std::optional<Rational> mutual_info_bits;
    bool secrecy_algebraic = false;
    bool coop_budget_ok = false;
    std::pair<int, int> rate_pair{0, 0};
    std::optional<std::string> warning;

    bool all_green() const {
        bool mi_zero = !mutual_info_bits.has_value() || *mutual_info_bits == Rational(0);
        return decodable1 && decodable2 && secrecy_algebraic && coop_budget_ok && mi_zero;
    }
};

/// Component i is true iff w_i is a deterministic function of y_i over all
/// joint realizations. Decided algebraically (w_i decodable iff
/// rank([A|B]) = k_i + rank(B) for y_i = A w_i xor B rest); cross-checked
/// by exhaustive enumeration when k1+k2+r <= cap.
std::pair<bool, bool> verify_decodable(const det::DetConfig& cfg, const schemes::LinearScheme& s,
                                       int cap = kDefaultEnumCap);

/// Exact I(W2; y1) under uniform independent (w1, w2, rand), computed by
/// full enumeration of the joint distribution. All probabilities are
/// dyadic, so the result is an exact rational; 0 means perfect secrecy.
/// Throws EnumCapExceeded when k1+k2+r > cap.
Rational verify_secrecy_exhaustive(const det::DetConfig& cfg, const schemes::LinearScheme& s,
                                   int cap = kDefaultEnumCap);

/// Independent secrecy oracle: true iff colspace(M2) is contained in
/// colspace([M1 | Mr]), i.e. every shift y1 picks up from w2 is absorbed
/// by a uniform coset of the (w1, rand) randomness. Equivalent to
/// I(W2; y1) = 0.
bool verify_secrecy_algebraic(const det::DetConfig& cfg, const schemes::LinearScheme& s);

/// true iff the scheme's cooperative selector fits the link budget C.
bool verify_coop_budget(const det::DetConfig& cfg, const schemes::LinearScheme& s);

/// Runs every check once (single enumeration pass when within cap) and
/// assembles the report. Exceeding the cap downgrades to algebraic-only
/// verification and sets the warning field.
VerificationReport verify(const det::DetConfig& cfg, const schemes::LinearScheme& s,
                          int cap = kDefaultEnumCap);

}  // namespace zic::verifier
