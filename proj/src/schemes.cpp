#include "zic/schemes.hpp"

#include <algorithm>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace zic::schemes {

using det::DetConfig;
using det::LevelVector;
using det::Regime;
using gf2::Matrix;

void LinearScheme::check_consistent() const {
    if (k1 < 0 || k2 < 0 || r < 0)
        throw std::invalid_argument("scheme: k1, k2, r must be nonnegative");
    if (enc1_w.cols() != k1) throw std::invalid_argument("scheme: enc1_w must have k1 columns");
    if (enc1_v.cols() != coop_selector.rows())
        throw std::invalid_argument("scheme: enc1_v columns must match coop selector rows");
    if (enc1_r.cols() != r) throw std::invalid_argument("scheme: enc1_r must have r columns");
    if (coop_selector.cols() != k2)
        throw std::invalid_argument("scheme: coop selector must have k2 columns");
    if (enc2.cols() != k2) throw std::invalid_argument("scheme: enc2 must have k2 columns");
    if (enc1_v.rows() != m() || enc1_r.rows() != m())
        throw std::invalid_argument("scheme: enc1 blocks must share row count m");
    if (q() < m()) throw std::invalid_argument("scheme: q must be at least m");
}

std::string corner_name(Corner c) {
    switch (c) {
        case Corner::R1Max: return "r1max";
        case Corner::R2Max: return "r2max";
        case Corner::R1MaxR2Coop: return "r1max_r2coop";
        case Corner::R1CoopR2Max: return "r1coop_r2max";
    }
    return "?";
}

Corner corner_from_name(const std::string& name) {
    if (name == "r1max") return Corner::R1Max;
    if (name == "r2max") return Corner::R2Max;
    if (name == "r1max_r2coop") return Corner::R1MaxR2Coop;
    if (name == "r1coop_r2max") return Corner::R1CoopR2Max;
    throw std::invalid_argument("unknown corner name: " + name);
}

std::vector<Corner> corners_for(Regime regime) {
    if (regime == Regime::VeryHigh) return {Corner::R1Max};
    return {Corner::R1Max, Corner::R2Max, Corner::R1MaxR2Coop, Corner::R1CoopR2Max};
}

namespace {

LinearScheme blank(const DetConfig& cfg, int k1, int k2, int r, int coop) {
    LinearScheme s;
    s.k1 = k1;
    s.k2 = k2;
    s.r = r;
    s.coop_selector = Matrix(coop, k2);
    s.enc1_w = Matrix(cfg.m, k1);
    s.enc1_v = Matrix(cfg.m, coop);
    s.enc1_r = Matrix(cfg.m, r);
    s.enc2 = Matrix(cfg.q(), k2);
    return s;
}

// tx1 sends m data bits on its levels [1:m]; tx2 stays silent.
LinearScheme scheme_r1max(const DetConfig& cfg) {
    LinearScheme s = blank(cfg, cfg.m, 0, 0, 0);
    for (int i = 0; i < cfg.m; ++i) s.enc1_w.set(i, i, true);
    return s;
}

// Weak/moderate (m, m-n+C') corner: tx2 puts data on its levels
// [1:m-n+C'] and shares the top C' of them; tx1 sends its m data bits and
// XORs the shared bits onto levels [1:C'], where they meet tx2's shared
// levels after the channel shift and cancel.
LinearScheme weak_r1max_r2coop(const DetConfig& cfg) {
    int cp = std::min(cfg.C, cfg.n);
    int k2 = cfg.m - cfg.n + cp;
    LinearScheme s = blank(cfg, cfg.m, k2, 0, cp);
    for (int i = 0; i < cfg.m; ++i) s.enc1_w.set(i, i, true);
    for (int j = 0; j < k2; ++j) s.enc2.set(j, j, true);  // w2 bit j -> tx2 level j+1
    for (int t = 0; t < cp; ++t) {
        s.coop_selector.set(t, cfg.m - cfg.n + t, true);  // share bits at levels [m-n+1 : m-n+C']
        s.enc1_v.set(t, t, true);                         // precode onto tx1 levels [1:C']
    }
    return s;
}

// Weak/moderate (m-n+C', m) corner: tx2 uses all m levels; tx1 precodes on
// [1:C'], jams [C'+1:n], and sends plain data on [n+1:m].
LinearScheme weak_r1coop_r2max(const DetConfig& cfg) {
    int cp = std::min(cfg.C, cfg.n);
    int k1 = cfg.m - cfg.n + cp;
    int r = cfg.n - cp;
    LinearScheme s = blank(cfg, k1, cfg.m, r, cp);
    for (int j = 0; j < cfg.m; ++j) s.enc2.set(j, j, true);
    for (int t = 0; t < cp; ++t) {
        s.coop_selector.set(t, cfg.m - cfg.n + t, true);
        s.enc1_w.set(t, t, true);   // precoded data bits on levels [1:C']
        s.enc1_v.set(t, t, true);
    }
    for (int t = 0; t < r; ++t) s.enc1_r.set(cp + t, t, true);       // jam [C'+1:n]
    for (int t = 0; t < cfg.m - cfg.n; ++t) s.enc1_w.set(cfg.n + t, cp + t, true);  // data [n+1:m]
    return s;
}

// Weak/moderate (0, m) corner: tx2 uses all m levels; tx1 jams [1:n],
// covering every tx2 level visible at receiver 1.
LinearScheme weak_r2max(const DetConfig& cfg) {
    LinearScheme s = blank(cfg, 0, cfg.m, cfg.n, 0);
    for (int j = 0; j < cfg.m; ++j) s.enc2.set(j, j, true);
    for (int t = 0; t < cfg.n; ++t) s.enc1_r.set(t, t, true);
    return s;
}

// High (m, C') corner: tx2 puts its C' data bits on levels [n-m+1 :
// n-m+C'] (the bottom of what receiver 2 sees) and shares all of them;
// tx1 sends m data bits with the shared bits XORed onto the same-numbered
// levels, which align with tx2's at receiver 1.
LinearScheme high_r1max_r2coop(const DetConfig& cfg) {
    int cp = std::min(cfg.C, 2 * cfg.m - cfg.n);
    LinearScheme s = blank(cfg, cfg.m, cp, 0, cp);
    for (int i = 0; i < cfg.m; ++i) s.enc1_w.set(i, i, true);
    for (int t = 0; t < cp; ++t) {
        s.enc2.set(cfg.n - cfg.m + t, t, true);
        s.coop_selector.set(t, t, true);
        s.enc1_v.set(cfg.n - cfg.m + t, t, true);
    }
    return s;
}

// High (C'+n-m, 2m-n) corner: tx2 fills levels [n-m+1:m]; tx1 sends clean
// data on [1:n-m] (invisible to receiver 2, interference-free at receiver
// 1), precoded data on [n-m+1 : n-m+C'], and jamming on [n-m+C'+1 : m].
LinearScheme high_r1coop_r2max(const DetConfig& cfg) {
    int cp = std::min(cfg.C, 2 * cfg.m - cfg.n);
    int free = cfg.n - cfg.m;
    int k1 = free + cp;
    int k2 = 2 * cfg.m - cfg.n;
    int r = 2 * cfg.m - cfg.n - cp;
    LinearScheme s = blank(cfg, k1, k2, r, cp);
    for (int j = 0; j < k2; ++j) s.enc2.set(free + j, j, true);  // w2 bit j -> level n-m+1+j
    for (int t = 0; t < free; ++t) s.enc1_w.set(t, t, true);
    for (int t = 0; t < cp; ++t) {
        s.coop_selector.set(t, t, true);  // shared: tx2 levels [n-m+1 : n-m+C']
        s.enc1_w.set(free + t, free + t, true);
        s.enc1_v.set(free + t, t, true);
    }
    for (int t = 0; t < r; ++t) s.enc1_r.set(free + cp + t, t, true);
    return s;
}

// High (0, 2m-n) corner: tx2 fills levels [n-m+1:m]; tx1 only jams those
// same levels. No cooperation needed.
LinearScheme high_r2max(const DetConfig& cfg) {
    int free = cfg.n - cfg.m;
    int k2 = 2 * cfg.m - cfg.n;
    LinearScheme s = blank(cfg, 0, k2, k2, 0);
    for (int j = 0; j < k2; ++j) {
        s.enc2.set(free + j, j, true);
        s.enc1_r.set(free + j, j, true);
    }
    return s;
}

}  // namespace

LinearScheme corner_scheme(const DetConfig& cfg, Corner corner) {
    if (cfg.m <= 0) throw std::invalid_argument("corner_scheme: m must be positive");
    if (cfg.q() > det::kMaxLevels)
        throw std::invalid_argument("corner_scheme: q exceeds 64 levels");
    Regime reg = regime(cfg);
    const auto valid = corners_for(reg);
    if (std::find(valid.begin(), valid.end(), corner) == valid.end())
        throw std::invalid_argument("corner_scheme: corner " + corner_name(corner) +
                                    " not defined in regime " + det::regime_name(reg));

    LinearScheme s;
    switch (reg) {
        case Regime::WeakModerate:
            switch (corner) {
                case Corner::R1Max: s = scheme_r1max(cfg); break;
                case Corner::R2Max: s = weak_r2max(cfg); break;
                case Corner::R1MaxR2Coop: s = weak_r1max_r2coop(cfg); break;
                case Corner::R1CoopR2Max: s = weak_r1coop_r2max(cfg); break;
            }
            break;
        case Regime::High:
            switch (corner) {
                case Corner::R1Max: s = scheme_r1max(cfg); break;
                case Corner::R2Max: s = high_r2max(cfg); break;
                case Corner::R1MaxR2Coop: s = high_r1max_r2coop(cfg); break;
                case Corner::R1CoopR2Max: s = high_r1coop_r2max(cfg); break;
            }
            break;
        case Regime::VeryHigh:
            s = scheme_r1max(cfg);
            break;
    }
    s.check_consistent();
    return s;
}

EncodeResult encode(const LinearScheme& s, std::uint64_t w1, std::uint64_t w2,
                    std::uint64_t rand_bits) {
    s.check_consistent();
    auto fits = [](std::uint64_t v, int bits) {
        return bits >= 64 || v < (std::uint64_t{1} << bits);
    };
    if (!fits(w1, s.k1) || !fits(w2, s.k2) || !fits(rand_bits, s.r))
        throw std::invalid_argument("encode: message wider than declared bit count");

    std::uint64_t v21 = s.coop_selector.apply(w2);
    std::uint64_t x1 = s.enc1_w.apply(w1) ^ s.enc1_v.apply(v21) ^ s.enc1_r.apply(rand_bits);
    std::uint64_t x2 = s.enc2.apply(w2);
    return EncodeResult{LevelVector(s.m(), x1), LevelVector(s.q(), x2), v21};
}

std::pair<int, int> rate(const LinearScheme& s) { return {s.k1, s.k2}; }

namespace {

nlohmann::ordered_json matrix_json(const Matrix& m) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : m.to_bit_rows()) rows.push_back(row);
    return rows;
}

Matrix matrix_from_json(const nlohmann::json& j, int rows, int cols, const char* name) {
    std::vector<std::vector<int>> bit_rows;
    for (const auto& row : j) bit_rows.push_back(row.get<std::vector<int>>());
    Matrix m = Matrix::from_bit_rows(bit_rows, cols);
    if (m.rows() != rows || m.cols() != cols)
        throw std::invalid_argument(std::string("scheme json: ") + name +
                                    " has inconsistent dimensions");
    return m;
}

}  // namespace

std::string to_json(const LinearScheme& s) {
    s.check_consistent();
    nlohmann::ordered_json j;
    j["m"] = s.m();
    j["q"] = s.q();
    j["k1"] = s.k1;
    j["k2"] = s.k2;
    j["r"] = s.r;
    j["coop_selector"] = matrix_json(s.coop_selector);
    j["enc1_w"] = matrix_json(s.enc1_w);
    j["enc1_v"] = matrix_json(s.enc1_v);
    j["enc1_r"] = matrix_json(s.enc1_r);
    j["enc2"] = matrix_json(s.enc2);
    return j.dump(2);
}

LinearScheme from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    LinearScheme s;
    int m = j.at("m").get<int>();
    int q = j.at("q").get<int>();
    s.k1 = j.at("k1").get<int>();
    s.k2 = j.at("k2").get<int>();
    s.r = j.at("r").get<int>();
    int coop = static_cast<int>(j.at("coop_selector").size());
    s.coop_selector = matrix_from_json(j.at("coop_selector"), coop, s.k2, "coop_selector");
    s.enc1_w = matrix_from_json(j.at("enc1_w"), m, s.k1, "enc1_w");
    s.enc1_v = matrix_from_json(j.at("enc1_v"), m, coop, "enc1_v");
    s.enc1_r = matrix_from_json(j.at("enc1_r"), m, s.r, "enc1_r");
    s.enc2 = matrix_from_json(j.at("enc2"), q, s.k2, "enc2");
    s.check_consistent();
    return s;
}

}  // namespace zic::schemes
