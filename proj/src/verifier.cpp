#include "zic/verifier.hpp"

#include <bit>
#include <cstdint>
#include <unordered_map>
#include <vector>

namespace zic::verifier {

using det::DetConfig;
using det::LevelVector;
using gf2::Matrix;
using schemes::LinearScheme;

namespace {

void check_dims(const DetConfig& cfg, const LinearScheme& s) {
    s.check_consistent();
    if (s.m() != cfg.m || s.q() != cfg.q())
        throw std::invalid_argument("verifier: scheme dimensions do not match config");
    if (cfg.q() > det::kMaxLevels)
        throw std::invalid_argument("verifier: q exceeds 64 levels");
}

int total_bits(const LinearScheme& s) { return s.k1 + s.k2 + s.r; }

std::int64_t count_times_log(std::int64_t c) {
    if (c & (c - 1))
        throw std::logic_error("verifier: outcome count is not a power of two; "
                               "entropy would not be dyadic");
    return c * std::countr_zero(static_cast<std::uint64_t>(c));
}

struct ScanResult {
    bool decodable1 = true;
    bool decodable2 = true;
    Rational mutual_info;
};

// One pass over all 2^(k1+k2+r) realizations through encode + transmit
// (deliberately the signal pipeline, not the channel-map matrices, so the
// two verification routes stay independent). Produces I(W2; y1) exactly
// and the brute-force decodability of both receivers.
ScanResult exhaustive_scan(const DetConfig& cfg, const LinearScheme& s) {
    const int T = total_bits(s);
    const std::uint64_t n2 = std::uint64_t{1} << s.k2;
    const std::uint64_t nu = std::uint64_t{1} << (s.k1 + s.r);
    const std::uint64_t w1_mask = (std::uint64_t{1} << s.k1) - 1;

    // y1 histograms keyed by a dense id: identity when the output space is
    // small enough for flat arrays, hashed otherwise.
    const bool flat = cfg.q() <= 20;
    std::unordered_map<std::uint64_t, std::int64_t> ids;
    std::vector<std::int64_t> global_count, local_count, seen_w1;
    if (flat) {
        std::size_t space = std::size_t{1} << cfg.q();
        global_count.assign(space, 0);
        local_count.assign(space, 0);
        seen_w1.assign(space, -1);
    }
    auto id_of = [&](std::uint64_t y) -> std::size_t {
        if (flat) return static_cast<std::size_t>(y);
        auto [it, inserted] = ids.try_emplace(y, static_cast<std::int64_t>(global_count.size()));
        if (inserted) {
            global_count.push_back(0);
            local_count.push_back(0);
            seen_w1.push_back(-1);
        }
        return static_cast<std::size_t>(it->second);
    };

    ScanResult out;
    std::vector<std::size_t> touched;
    std::int64_t sum_cond = 0;  // sum over (w2, y) of c * log2(c)

    for (std::uint64_t w2 = 0; w2 < n2; ++w2) {
        const std::uint64_t v21 = s.coop_selector.apply(w2);
        const std::uint64_t x1_coop = s.enc1_v.apply(v21);
        const LevelVector x2(s.q(), s.enc2.apply(w2));
        touched.clear();
        for (std::uint64_t u = 0; u < nu; ++u) {
            const std::uint64_t w1 = u & w1_mask;
            const std::uint64_t rnd = u >> s.k1;
            const std::uint64_t x1_bits =
                s.enc1_w.apply(w1) ^ x1_coop ^ s.enc1_r.apply(rnd);
            const auto rx = det::transmit(cfg, LevelVector(s.m(), x1_bits), x2);
            const std::size_t id = id_of(rx.y1.bits());
            if (local_count[id]++ == 0) touched.push_back(id);
            ++global_count[id];
            const std::int64_t w1_signed = static_cast<std::int64_t>(w1);
            if (seen_w1[id] == -1)
                seen_w1[id] = w1_signed;
            else if (seen_w1[id] != w1_signed)
                out.decodable1 = false;
        }
        for (std::size_t id : touched) {
            sum_cond += count_times_log(local_count[id]);
            local_count[id] = 0;
        }
    }

    std::int64_t sum_marginal = 0;
    for (std::int64_t c : global_count)
        if (c > 0) sum_marginal += count_times_log(c);

    // 2^T * I(W2;y1) = 2^T k2 - sum_y c_y lg c_y + sum_{w2,y} c lg c,
    // all counts powers of two because the scheme is linear.
    const std::int64_t numer =
        (static_cast<std::int64_t>(s.k2) << T) - sum_marginal + sum_cond;
    if (numer < 0) throw std::logic_error("verifier: negative mutual information");
    out.mutual_info = Rational(numer, std::int64_t{1} << T);

    // Receiver 2 sees y2 = f(w2) only (Z structure); injectivity decides.
    std::unordered_map<std::uint64_t, std::uint64_t> y2_seen;
    y2_seen.reserve(static_cast<std::size_t>(n2));
    const LevelVector x1_zero(s.m(), 0);
    for (std::uint64_t w2 = 0; w2 < n2; ++w2) {
        const auto rx = det::transmit(cfg, x1_zero, LevelVector(s.q(), s.enc2.apply(w2)));
        auto [it, inserted] = y2_seen.try_emplace(rx.y2.bits(), w2);
        if (!inserted) out.decodable2 = false;
    }
    return out;
}

std::pair<bool, bool> decodable_algebraic(const ChannelMaps& maps, const LinearScheme& s) {
    Matrix rest1 = maps.M2.hstack(maps.Mr);
    bool d1 = maps.M1.hstack(rest1).rank() == s.k1 + rest1.rank();
    bool d2 = maps.N2.rank() == s.k2;
    return {d1, d2};
}

}  // namespace

ChannelMaps channel_maps(const DetConfig& cfg, const LinearScheme& s) {
    check_dims(cfg, s);
    const int q = cfg.q();
    ChannelMaps maps;
    maps.M1 = s.enc1_w.with_rows(q);
    maps.Mr = s.enc1_r.with_rows(q);
    maps.M2 = s.enc1_v.mul(s.coop_selector).with_rows(q).plus(
        s.enc2.rows_shifted_down(q - cfg.n));
    maps.N2 = s.enc2.rows_shifted_down(q - cfg.m).with_rows(cfg.m);
    return maps;
}

std::pair<bool, bool> verify_decodable(const DetConfig& cfg, const LinearScheme& s, int cap) {
    auto maps = channel_maps(cfg, s);
    auto alg = decodable_algebraic(maps, s);
    if (total_bits(s) <= cap) {
        auto scan = exhaustive_scan(cfg, s);
        if (scan.decodable1 != alg.first || scan.decodable2 != alg.second)
            throw std::logic_error("verify_decodable: algebraic and exhaustive routes disagree");
    }
    return alg;
}

Rational verify_secrecy_exhaustive(const DetConfig& cfg, const LinearScheme& s, int cap) {
    check_dims(cfg, s);
    if (total_bits(s) > cap)
        throw EnumCapExceeded("verify_secrecy_exhaustive: k1+k2+r = " +
                              std::to_string(total_bits(s)) + " exceeds enumeration cap " +
                              std::to_string(cap));
    return exhaustive_scan(cfg, s).mutual_info;
}

bool verify_secrecy_algebraic(const DetConfig& cfg, const LinearScheme& s) {
    auto maps = channel_maps(cfg, s);
    return maps.M1.hstack(maps.Mr).spans(maps.M2);
}

bool verify_coop_budget(const DetConfig& cfg, const LinearScheme& s) {
    check_dims(cfg, s);
    return s.coop_selector.rows() <= cfg.C;
}

VerificationReport verify(const DetConfig& cfg, const LinearScheme& s, int cap) {
    auto maps = channel_maps(cfg, s);
    VerificationReport rep;
    rep.rate_pair = schemes::rate(s);
    rep.coop_budget_ok = s.coop_selector.rows() <= cfg.C;
    rep.secrecy_algebraic = maps.M1.hstack(maps.Mr).spans(maps.M2);
    auto alg = decodable_algebraic(maps, s);
    rep.decodable1 = alg.first;
    rep.decodable2 = alg.second;

    if (total_bits(s) <= cap) {
        auto scan = exhaustive_scan(cfg, s);
        if (scan.decodable1 != alg.first || scan.decodable2 != alg.second)
            throw std::logic_error("verify: algebraic and exhaustive routes disagree");
        rep.mutual_info_bits = scan.mutual_info;
    } else {
        rep.warning = "enumeration cap exceeded; algebraic checks only";
    }
    return rep;
}

}  // namespace zic::verifier
