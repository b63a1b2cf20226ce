#pragma once

#include <map>
#include <vector>

#include "gradreg/degree.hpp"
#include "gradreg/gmod.hpp"

namespace gradreg {

// Truncation of a minimal graded free resolution:
//
//   P[H] -> ... -> P[1] -> P[0] -> M -> 0
//
// exact within the degree window [*, N].  `terminated` records that a zero
// syzygy appeared at or before step H+1 (the step after P[H] is probed but
// never stored), so the truncation is the whole resolution as far as the
// window can see.
struct ResolutionTruncation {
    ModuleHandle M;
    std::vector<ModuleHandle> P;  // P[m] covers the m-th syzygy minimally
    std::vector<GradedMap> d;     // d[m]: P[m+1] -> P[m]
    GradedMap augmentation;       // P[0] -> M
    bool terminated = false;
    bool minimal = true;
    long long H = 0, N = 0;

    long long length() const;  // last m with P[m] nonzero, -1 when none
};

// beta[m][s][i] counts the summands Ae_i(-s) of P[m]
struct BettiTable {
    long long H = 0, N = 0;
    bool terminated = false;
    bool a0Semisimple = false;  // generator degrees provably climb step by step
    std::size_t nv = 0;
    std::vector<std::map<long long, std::vector<long long>>> beta;

    long long at(std::size_t m, long long s, std::size_t vertex) const;
    long long total(std::size_t m) const;
    ExtendedDegree u(std::size_t m) const;  // top generator degree, -inf on empty steps
    ExtendedDegree l(std::size_t m) const;  // bottom generator degree, +inf on empty steps
};

// free cover of M by lifts of a basis of M / JM, J = rad(A_0) + A_{>=1};
// generators taken lowest degree first, rref-canonical within a degree
GradedMap minimal_cover(const ModuleHandle& M, long long N);

ResolutionTruncation minimal_resolution(const ModuleHandle& M, long long H, long long N);

BettiTable betti(const ResolutionTruncation& R);

// every differential lands inside J * P (the augmentation is exempt)
bool check_minimality(const ResolutionTruncation& R);

// all generators on the diagonal s = m; Inconclusive when the pattern holds
// but the truncation is not terminated
Verdict is_linear(const BettiTable& B);

ExtendedDegree pdim_of(const ResolutionTruncation& R);

}  // namespace gradreg
