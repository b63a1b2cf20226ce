#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gradreg/degree.hpp"
#include "gradreg/gmod.hpp"
#include "gradreg/resolve.hpp"

namespace gradreg {

enum class RegStatus { Exact, Censored, Degenerate };
const char* regStatusName(RegStatus s);

// one regularity reading: the value is interval-shaped under censoring
// (atLeast/atMost), plain under exactness
struct RegValue {
    ExtendedDegree value = ExtendedDegree::minusInf();
    RegStatus status = RegStatus::Degenerate;
    std::optional<std::pair<long long, long long>> witness;  // cell attaining the extremum
};

// A homological table with censoring.  Cell (m, j) carries the dimension of
// the m-th (co)homology in internal degree j; its contribution to sdeg/ideg
// is j + rowSign*m.  Cells inside a censored interval are unknown; everything
// else in rows 0..H is exact.  Rows above H are zero when tailExactZero,
// otherwise unknown up to the optional proven value bounds.
struct DegreeTable {
    long long H = 0;
    int rowSign = 1;  // +1: Ext style (value m+j); -1: Tor style (value j-m)
    bool tailExactZero = false;
    std::optional<long long> tailValueLowerBound;
    std::optional<long long> tailValueUpperBound;
    std::map<std::pair<long long, long long>, long long> entries;  // exact nonzero cells
    std::map<long long, std::vector<std::pair<long long, long long>>> censored;  // row -> j intervals
    std::string note;

    bool isCensored(long long m, long long j) const;
    long long dimAt(long long m, long long j) const;  // exact cells only; 0 elsewhere
};

using GradedExtTable = DegreeTable;
using GradedTorTable = DegreeTable;

RegValue table_sdeg(const DegreeTable& t);
RegValue table_ideg(const DegreeTable& t);

// interval sum of two readings (saturating at the infinities); status is the
// worse of the two: Degenerate over Censored over Exact
RegValue reg_sum(const RegValue& a, const RegValue& b);

// first row with nonzero cohomology (censored when unknown cells come first)
RegValue depth_from_table(const GradedExtTable& t);

struct TorregResult {
    RegValue Torreg, torreg;
};

// Torreg = sup(u_m - m), torreg = -inf(l_m - m); exactness from termination,
// or for torreg from the degree-climbing certificate (semisimple A_0 forces
// l_m >= l_{m-1} + 1, so the inf sits at step 0)
TorregResult torreg_from_betti(const BettiTable& B);

// cohomology of gHom(P*, Y) for a minimal resolution P* of X; rowSupportMax
// (optional, per row) is a caller-certified bound: cells with j > bound are
// zero, shrinking the censored region
GradedExtTable ext_table(const ModuleHandle& X, const ModuleHandle& Y, long long H, long long N,
                         const std::map<long long, long long>* rowSupportMax = nullptr);

// homology of Yop (x)_A P*; Yop is a right module given as a left module
// over opposite(A)
GradedTorTable tor_table(const ModuleHandle& Yop, const ModuleHandle& X, long long H,
                         long long N);

struct ASGorensteinData {
    long long d = 0;
    std::vector<long long> ell;      // Gorenstein parameter per vertex
    std::vector<std::size_t> sigma;  // permutation of the vertices
    std::vector<long long> r;        // multiplicities
    bool verified = false;           // verified within bounds (else asserted)
    std::string warning;
};

// recompute gExt^d(S_i, Ae_w) within bounds and match the asserted shape;
// mismatch keeps the data asserted and records a warning
ASGorensteinData verify_gorenstein(const AlgebraHandle& a, ASGorensteinData g, long long H,
                                   long long N);

struct Bounds {
    long long H = 8, N = 12;
    long long nMax = -1;  // < 0 means 2N
};

enum class CmStrategy { Limit, Duality };

struct CmregResult {
    RegValue CMreg, cmreg;
    DegreeTable table;   // certified local-cohomology cells (limit) or the dual Ext table
    long long stages = 0;
    std::string note;
};

// local cohomology as the limit of gExt(A/A_{>=n}, M); cells are reported
// only under the stabilization certificate, never from bare stage
// agreement; G sharpens the certificates via the support bounds
CmregResult cmreg_limit(const ModuleHandle& M, long long n_max, long long H, long long N,
                        const ASGorensteinData* G = nullptr);

// local duality: CMreg = d - ideg, cmreg = sdeg - d of ext_table(M, R0) with
// R0 = (+) (Ae_{sigma(i)}(-ell_i))^{r_i}
CmregResult cmreg_duality(const ModuleHandle& M, const ASGorensteinData& G, long long H,
                          long long N);

struct RegularityReport {
    RegValue CMreg, cmreg, Torreg, torreg, Extreg, extreg, Exreg, exreg, depth, pdim;
};

RegularityReport regs_of_module(const ModuleHandle& M, const Bounds& b, CmStrategy strategy,
                                const ASGorensteinData* G = nullptr);

struct ASRegResult {
    RegValue ASreg, asreg;            // left-module run
    RegValue ASregRight, asregRight;  // over the opposite algebra
};

ASRegResult asreg(const AlgebraHandle& a, const Bounds& b, const ASGorensteinData* G = nullptr);

struct HomogeneityFlags {
    Verdict leftCM, rightCM, leftEx, rightEx;
};

HomogeneityFlags homogeneity_check(const AlgebraHandle& a, const Bounds& b,
                                   const ASGorensteinData* G = nullptr);

struct EqualizeResult {
    bool feasible = false;
    std::vector<long long> p;
    std::vector<long long> ellB;     // equalized parameters
    std::vector<std::size_t> cycle;  // infeasibility certificate
    std::string reason;
};

// find p with ell_i - p_i + p_{sigma(i)} = average(ell) and the p-conjugated
// degree matrix positive off the diagonal
EqualizeResult equalize_parameters(const std::vector<long long>& ell,
                                   const std::vector<std::size_t>& sigma,
                                   const std::vector<std::vector<long long>>& m);

}  // namespace gradreg
