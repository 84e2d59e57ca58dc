#include "zic/detmodel.hpp"

#include <stdexcept>

namespace zic::det {

Rational DetConfig::alpha() const {
    if (m <= 0) throw std::invalid_argument("alpha undefined: m = 0");
    return Rational(n, m);
}

std::string regime_name(Regime r) {
    switch (r) {
        case Regime::WeakModerate: return "weak_moderate";
        case Regime::High: return "high";
        case Regime::VeryHigh: return "very_high";
    }
    return "?";
}

DetConfig make_config(int m, int n, int C) {
    if (m < 0 || n < 0 || C < 0)
        throw std::invalid_argument("make_config: m, n, C must be nonnegative");
    return DetConfig{m, n, C};
}

Regime regime(const DetConfig& cfg) {
    if (cfg.m <= 0) throw std::invalid_argument("regime: alpha undefined for m = 0");
    if (cfg.n >= 2 * cfg.m) return Regime::VeryHigh;
    if (cfg.n > cfg.m) return Regime::High;
    return Regime::WeakModerate;
}

LevelVector::LevelVector(int len, std::uint64_t bits) : len_(len), bits_(bits) {
    if (len < 0 || len > kMaxLevels)
        throw std::invalid_argument("LevelVector: length must be in [0,64]");
    std::uint64_t mask = len == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << len) - 1;
    if (bits & ~mask) throw std::invalid_argument("LevelVector: bits beyond declared length");
}

void LevelVector::check_level(int level) const {
    if (level < 1 || level > len_)
        throw std::out_of_range("LevelVector: level index outside [1:len]");
}

bool LevelVector::get(int level) const {
    check_level(level);
    return (bits_ >> (level - 1)) & 1u;
}

void LevelVector::set(int level, bool value) {
    check_level(level);
    if (value)
        bits_ |= std::uint64_t{1} << (level - 1);
    else
        bits_ &= ~(std::uint64_t{1} << (level - 1));
}

LevelVector LevelVector::operator^(const LevelVector& other) const {
    if (len_ != other.len_)
        throw std::invalid_argument("LevelVector xor: lengths disagree");
    return LevelVector(len_, bits_ ^ other.bits_);
}

std::string LevelVector::str() const {
    std::string s(static_cast<std::size_t>(len_), '0');
    for (int level = 1; level <= len_; ++level)
        if (get(level)) s[len_ - level] = '1';
    return s;
}

LevelVector LevelVector::from_string(const std::string& s) {
    LevelVector v(static_cast<int>(s.size()));
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] != '0' && s[i] != '1')
            throw std::invalid_argument("LevelVector: string must be 0/1");
        if (s[i] == '1') v.set(static_cast<int>(s.size() - i), true);
    }
    return v;
}

LevelVector downshift(const LevelVector& v, int k) {
    if (k < 0 || k > v.len())
        throw std::invalid_argument("downshift: k outside [0:len]");
    return LevelVector(v.len(), k >= 64 ? 0 : v.bits() >> k);
}

TransmitResult transmit(const DetConfig& cfg, const LevelVector& x1, const LevelVector& x2) {
    int q = cfg.q();
    if (q > kMaxLevels) throw std::invalid_argument("transmit: q exceeds 64 levels");
    if (x1.len() != cfg.m) throw std::invalid_argument("transmit: x1 must have length m");
    if (x2.len() != q) throw std::invalid_argument("transmit: x2 must have length q = max(m,n)");

    // y1 = D^{q-m} x1 xor D^{q-n} x2 collapses to the alignment law above:
    // x1's contribution lands unshifted on levels [1:m], x2's shifted down
    // by q-n. A downshift by k is a word shift >> k in level coordinates.
    auto shr = [](std::uint64_t w, int k) { return k >= 64 ? std::uint64_t{0} : w >> k; };
    std::uint64_t y1 = x1.bits() ^ shr(x2.bits(), q - cfg.n);
    std::uint64_t mask_m =
        cfg.m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cfg.m) - 1;
    std::uint64_t y2 = shr(x2.bits(), q - cfg.m) & mask_m;
    return TransmitResult{LevelVector(q, y1), LevelVector(cfg.m, y2)};
}

}  // namespace zic::det
