#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

namespace higgs {

// Exponent vector layout. Lane 0 holds the total degree so that plain
// lexicographic comparison of the lanes is the graded-lex order.
inline constexpr int kLanes = 16;
inline constexpr int kDegreeLane = 0;
inline constexpr int kVLane = 1;
inline constexpr int kMaxE = 8;    // e1..e8  -> lanes 2..9  (genus <= 4)
inline constexpr int kMaxZ = 6;    // z1..z6  -> lanes 10..15
inline constexpr int kFirstELane = 2;
inline constexpr int kFirstZLane = kFirstELane + kMaxE;

/// A polynomial variable, identified by its exponent lane.
class Var {
public:
    static constexpr Var v() { return Var(kVLane); }
    static Var e(int k) {
        if (k < 1 || k > kMaxE) throw std::out_of_range("curve parameter e" + std::to_string(k) + " out of range");
        return Var(kFirstELane + k - 1);
    }
    static Var z(int j) {
        if (j < 1 || j > kMaxZ) throw std::out_of_range("variable z" + std::to_string(j) + " out of range");
        return Var(kFirstZLane + j - 1);
    }
    static Var fromLane(int lane) {
        if (lane < kVLane || lane >= kLanes) throw std::out_of_range("bad variable lane");
        return Var(lane);
    }

    constexpr int lane() const { return lane_; }
    bool isV() const { return lane_ == kVLane; }
    bool isE() const { return lane_ >= kFirstELane && lane_ < kFirstZLane; }
    bool isZ() const { return lane_ >= kFirstZLane; }
    int eIndex() const { return lane_ - kFirstELane + 1; }
    int zIndex() const { return lane_ - kFirstZLane + 1; }
    std::string name() const;

    friend constexpr bool operator==(Var a, Var b) { return a.lane_ == b.lane_; }
    friend constexpr bool operator<(Var a, Var b) { return a.lane_ < b.lane_; }

private:
    constexpr explicit Var(int lane) : lane_(lane) {}
    int lane_;
};

struct alignas(32) Monomial {
    std::array<std::uint16_t, kLanes> e{};

    std::uint16_t operator[](Var x) const { return e[x.lane()]; }
    unsigned degree() const { return e[kDegreeLane]; }
    bool isOne() const { return e[kDegreeLane] == 0; }

    void set(Var x, unsigned k) {
        e[kDegreeLane] = static_cast<std::uint16_t>(e[kDegreeLane] - e[x.lane()] + k);
        e[x.lane()] = static_cast<std::uint16_t>(k);
    }

    static Monomial of(Var x, unsigned k = 1) {
        Monomial m;
        m.set(x, k);
        return m;
    }

    friend bool operator==(const Monomial& a, const Monomial& b) { return a.e == b.e; }
};

/// Graded-lex comparison: negative if a < b.
inline int compare(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < kLanes; ++i) {
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? -1 : 1;
    }
    return 0;
}

struct MonomialGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

inline Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kLanes; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] + b.e[i]);
    return r;
}

/// a / b; caller guarantees divides(b, a).
inline Monomial operator/(const Monomial& a, const Monomial& b) {
    Monomial r;
    for (int i = 0; i < kLanes; ++i) r.e[i] = static_cast<std::uint16_t>(a.e[i] - b.e[i]);
    return r;
}

/// True if d divides m.
inline bool divides(const Monomial& d, const Monomial& m) {
    for (int i = 1; i < kLanes; ++i)
        if (d.e[i] > m.e[i]) return false;
    return true;
}

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept {
        std::uint64_t h = 1469598103934665603ULL;
        for (auto x : m.e) {
            h ^= x;
            h *= 1099511628211ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

}  // namespace higgs
