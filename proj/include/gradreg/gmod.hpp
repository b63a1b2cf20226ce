#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradreg/algebra.hpp"
#include "gradreg/degree.hpp"
#include "gradreg/field.hpp"

namespace gradreg {

// A graded left module materialized on the window [lo, N]: dims, a block
// (vertex) label per basis vector, and action tables for every algebra degree
// that stays inside the window. Degrees below lo are genuinely zero; degrees
// above N are unknown unless fdCertified.
struct GradedModule {
    AlgebraHandle alg;
    long long lo = 0, N = 0;
    std::map<long long, long long> dimsByDeg;
    std::map<long long, std::vector<std::size_t>> labels;
    // (e, d) -> dim(d+e) x (dimA_e * dim(d)), column a*dim(d)+m = coords of a.m
    std::map<std::pair<long long, long long>, Mat> actions;
    long long genBound = 0;     // generators live in degrees <= genBound
    bool fdCertified = false;   // vanishes above the window, provably
    std::optional<std::vector<std::pair<std::size_t, long long>>> freeGens;
    std::string origin;

    long long dim(long long d) const {
        auto it = dimsByDeg.find(d);
        return it == dimsByDeg.end() ? 0 : it->second;
    }
    const std::vector<std::size_t>& labelAt(long long d) const { return labels.at(d); }
    const Mat& action(long long e, long long d) const { return actions.at({e, d}); }
    // coords of a.v for the algebra basis element a of degree e
    Mat apply(long long e, std::size_t a, long long d, const Mat& v) const;
    long long topNonzero() const;  // largest d in window with dim > 0, or lo-1
};

using ModuleHandle = std::shared_ptr<const GradedModule>;

// degree-preserving map; mats cover every degree both windows reach
struct GradedMap {
    ModuleHandle X, Y;
    std::map<long long, Mat> mats;  // d -> Y_d x X_d
    const Mat& at(long long d) const { return mats.at(d); }
};

struct ModuleDegrees {
    ExtendedDegree sdeg, ideg;
    bool degenerate = false;     // no nonzero piece in the window
    bool zeroCertified = false;  // and provably none outside it
};

// F = direct sum of A e_{v_t}(-s_t), generator t in degree s_t
ModuleHandle free_module(const AlgebraHandle& a,
                         std::vector<std::pair<std::size_t, long long>> gens, long long N);
// images[t] = coordinates in Y at degree s_t of the image of generator t
GradedMap map_between_free(const ModuleHandle& x, const ModuleHandle& y,
                           const std::vector<Mat>& images);
bool validate_map(const GradedMap& f);

// f after g; the middle modules must be the same handle
GradedMap compose(const GradedMap& f, const GradedMap& g);

ModuleHandle cokernel_module(const GradedMap& f, long long N);
GradedMap cokernel_map(const GradedMap& f, long long N);  // projection Y -> coker
ModuleHandle kernel(const GradedMap& f, long long N);
GradedMap kernel_map(const GradedMap& f, long long N);  // inclusion ker -> X
ModuleHandle truncate_below(const ModuleHandle& m, long long r);
ModuleHandle shift_module(const ModuleHandle& m, long long l);
ModuleHandle matlis_dual(const ModuleHandle& m);  // over opposite(alg)
ModuleDegrees sdeg_ideg(const GradedModule& m);

// S = A/J with its canonical quotient coordinates; simple_module picks the
// block of one vertex (basic A_0 only)
ModuleHandle trivial_module(const AlgebraHandle& a, long long N);
ModuleHandle simple_module(const AlgebraHandle& a, std::size_t v, long long N);

// A as a left module over itself: free on every vertex in degree 0
ModuleHandle algebra_module(const AlgebraHandle& a, long long N);

}  // namespace gradreg
