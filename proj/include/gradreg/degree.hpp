#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace gradreg {

// A possibly-censored degree: an exact integer, an exact +/-infinity, or a
// one-sided bound. Every value is a truthful statement about the underlying
// quantity; comparisons read off the interval [lo, hi] it certifies.
struct ExtendedDegree {
    enum class Kind { Int, PlusInf, MinusInf, AtLeast, AtMost };
    Kind kind = Kind::Int;
    long long value = 0;  // Int / AtLeast / AtMost

    static constexpr long long kInf = 1LL << 60;

    static ExtendedDegree integer(long long v) { return {Kind::Int, v}; }
    static ExtendedDegree plusInf() { return {Kind::PlusInf, 0}; }
    static ExtendedDegree minusInf() { return {Kind::MinusInf, 0}; }
    static ExtendedDegree atLeast(long long b) { return {Kind::AtLeast, b}; }
    static ExtendedDegree atMost(long long b) { return {Kind::AtMost, b}; }

    bool exact() const {
        return kind == Kind::Int || kind == Kind::PlusInf || kind == Kind::MinusInf;
    }

    long long lo() const {
        switch (kind) {
            case Kind::Int: return value;
            case Kind::PlusInf: return kInf;
            case Kind::MinusInf: return -kInf;
            case Kind::AtLeast: return value;
            case Kind::AtMost: return -kInf;
        }
        return 0;
    }
    long long hi() const {
        switch (kind) {
            case Kind::Int: return value;
            case Kind::PlusInf: return kInf;
            case Kind::MinusInf: return -kInf;
            case Kind::AtLeast: return kInf;
            case Kind::AtMost: return value;
        }
        return 0;
    }

    // add an integer; infinities absorb
    ExtendedDegree shifted(long long k) const {
        switch (kind) {
            case Kind::Int: return integer(value + k);
            case Kind::AtLeast: return atLeast(value + k);
            case Kind::AtMost: return atMost(value + k);
            default: return *this;
        }
    }

    ExtendedDegree negated() const {
        switch (kind) {
            case Kind::Int: return integer(-value);
            case Kind::PlusInf: return minusInf();
            case Kind::MinusInf: return plusInf();
            case Kind::AtLeast: return atMost(-value);
            case Kind::AtMost: return atLeast(-value);
        }
        return *this;
    }

    bool operator==(const ExtendedDegree& o) const {
        if (kind != o.kind) return false;
        if (kind == Kind::PlusInf || kind == Kind::MinusInf) return true;
        return value == o.value;
    }

    std::string str() const {
        switch (kind) {
            case Kind::Int: return std::to_string(value);
            case Kind::PlusInf: return "+inf";
            case Kind::MinusInf: return "-inf";
            case Kind::AtLeast: return ">=" + std::to_string(value);
            case Kind::AtMost: return "<=" + std::to_string(value);
        }
        return "?";
    }
};

// rebuild a kind from interval endpoints produced by max/min
inline ExtendedDegree fromInterval(long long lo, long long hi) {
    if (lo == hi) {
        if (lo >= ExtendedDegree::kInf) return ExtendedDegree::plusInf();
        if (lo <= -ExtendedDegree::kInf) return ExtendedDegree::minusInf();
        return ExtendedDegree::integer(lo);
    }
    if (hi >= ExtendedDegree::kInf && lo > -ExtendedDegree::kInf)
        return ExtendedDegree::atLeast(lo);
    if (lo <= -ExtendedDegree::kInf && hi < ExtendedDegree::kInf)
        return ExtendedDegree::atMost(hi);
    throw std::logic_error("uninformative degree interval");
}

inline ExtendedDegree maxDegree(const ExtendedDegree& a, const ExtendedDegree& b) {
    return fromInterval(std::max(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}
inline ExtendedDegree minDegree(const ExtendedDegree& a, const ExtendedDegree& b) {
    return fromInterval(std::min(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

enum class Verdict { Holds, Fails, Inconclusive, Skipped };

// verdict for "l <= r"; censored data yields Fails only when the certified
// intervals are disjoint in the wrong order, which truthful bounds on a true
// statement can never produce
inline Verdict compareLE(const ExtendedDegree& l, const ExtendedDegree& r) {
    if (l.hi() <= r.lo()) return Verdict::Holds;
    if (l.lo() > r.hi()) return Verdict::Fails;
    return Verdict::Inconclusive;
}

inline Verdict compareEQ(const ExtendedDegree& l, const ExtendedDegree& r) {
    Verdict a = compareLE(l, r), b = compareLE(r, l);
    if (a == Verdict::Fails || b == Verdict::Fails) return Verdict::Fails;
    if (a == Verdict::Holds && b == Verdict::Holds) return Verdict::Holds;
    return Verdict::Inconclusive;
}

inline std::string verdictName(Verdict v) {
    switch (v) {
        case Verdict::Holds: return "holds";
        case Verdict::Fails: return "fails";
        case Verdict::Inconclusive: return "inconclusive-censored";
        case Verdict::Skipped: return "skipped-degenerate";
    }
    return "?";
}

}  // namespace gradreg
