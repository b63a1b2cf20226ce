#pragma once

#include <cstddef>
#include <vector>

#include "gradreg/field.hpp"

namespace gradreg {

// entry-wise copy across the F_p / rational representation split
inline void copyEntry(const Mat& src, std::size_t r, std::size_t c, Mat& dst, std::size_t dr,
                      std::size_t dc, bool negate = false) {
    if (src.entryZero(r, c)) return;
    if (src.field().rational()) {
        mpq_class v = src.getq(r, c);
        dst.addRational(dr, dc, negate ? mpq_class(-v) : v);
    } else {
        long long v = src.get(r, c);
        dst.addP(dr, dc, negate ? (long long)src.field().p - v : v);
    }
}

// column echelon of m: E is n x r with E[pivots[i], i] = 1 and zeros at the
// other pivot coordinates; span(E) = column span of m
struct Echelon {
    std::vector<std::size_t> pivots;
    Mat E;
};

inline Echelon colEchelon(const Mat& m) {
    Rref rr = rref(m.transpose());
    Echelon out;
    out.pivots = rr.pivots;
    out.E = Mat(m.field(), m.rows(), rr.rank);
    for (std::size_t i = 0; i < rr.rank; ++i)
        for (std::size_t c = 0; c < m.rows(); ++c) copyEntry(rr.R, i, c, out.E, c, i);
    return out;
}

inline std::vector<std::size_t> complementOf(const std::vector<std::size_t>& pivots,
                                             std::size_t n) {
    std::vector<char> isP(n, 0);
    for (auto p : pivots) isP[p] = 1;
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (!isP[i]) out.push_back(i);
    return out;
}

// reduction modulo span(E) read off in complement coordinates
inline Mat quotientProjection(const Echelon& ech, std::size_t n,
                              const std::vector<std::size_t>& comp, const FieldSpec& fs) {
    Mat pi(fs, comp.size(), n);
    for (std::size_t i = 0; i < comp.size(); ++i) pi.set(i, comp[i], 1);
    for (std::size_t j = 0; j < ech.pivots.size(); ++j)
        for (std::size_t i = 0; i < comp.size(); ++i)
            copyEntry(ech.E, comp[i], j, pi, i, ech.pivots[j], true);
    return pi;
}

inline std::size_t rankOf(const Mat& m) { return rref(m).rank; }

}  // namespace gradreg
