#include "gradreg/resolve.hpp"

#include <algorithm>
#include <stdexcept>

#include "gradreg/algebra.hpp"
#include "gradreg/errors.hpp"
#include "gradreg/linalg.hpp"

namespace gradreg {

namespace {

bool windowZero(const GradedModule& m) { return m.topNonzero() < m.lo; }

// columns spanning (J M)_d = rad(A_0) M_d + sum_e A_e M_{d-e}
Mat jSpan(const GradedModule& M, long long d) {
    const TruncatedAlgebra& alg = *M.alg;
    std::size_t nd = (std::size_t)M.dim(d);
    std::vector<Mat> parts;
    std::size_t total = 0;
    for (long long e = 1; e <= alg.N && d - e >= M.lo; ++e) {
        if (alg.dim(e) == 0 || M.dim(d - e) == 0) continue;
        const Mat& t = M.action(e, d - e);
        total += t.cols();
        parts.push_back(t);
    }
    const A0Data& z = a0_structure(M.alg);
    std::size_t nr = z.radicalBasis.cols();
    if (nr > 0 && nd > 0) {
        std::size_t n0 = (std::size_t)alg.dim(0);
        Mat u(alg.field, n0 * nd, nr * nd);
        for (std::size_t r = 0; r < nr; ++r)
            for (std::size_t a = 0; a < n0; ++a)
                if (!z.radicalBasis.entryZero(a, r))
                    for (std::size_t m = 0; m < nd; ++m)
                        copyEntry(z.radicalBasis, a, r, u, a * nd + m, r * nd + m);
        parts.push_back(M.action(0, d).mul(u));
        total += nr * nd;
    }
    Mat out(alg.field, nd, total);
    std::size_t c = 0;
    for (const auto& p : parts) {
        out.paste(p, 0, c);
        c += p.cols();
    }
    return out;
}

}  // namespace

long long ResolutionTruncation::length() const {
    for (std::size_t m = P.size(); m-- > 0;)
        if (!windowZero(*P[m])) return (long long)m;
    return -1;
}

long long BettiTable::at(std::size_t m, long long s, std::size_t vertex) const {
    if (m >= beta.size()) return 0;
    auto it = beta[m].find(s);
    if (it == beta[m].end() || vertex >= it->second.size()) return 0;
    return it->second[vertex];
}

long long BettiTable::total(std::size_t m) const {
    long long n = 0;
    if (m >= beta.size()) return 0;
    for (const auto& [s, counts] : beta[m]) {
        (void)s;
        for (auto c : counts) n += c;
    }
    return n;
}

ExtendedDegree BettiTable::u(std::size_t m) const {
    if (m >= beta.size() || beta[m].empty()) return ExtendedDegree::minusInf();
    return ExtendedDegree::integer(beta[m].rbegin()->first);
}

ExtendedDegree BettiTable::l(std::size_t m) const {
    if (m >= beta.size() || beta[m].empty()) return ExtendedDegree::plusInf();
    return ExtendedDegree::integer(beta[m].begin()->first);
}

GradedMap minimal_cover(const ModuleHandle& M, long long N) {
    if (N > M->N) throw WindowTooSmall("cover window exceeds the module's window");
    std::vector<std::pair<std::size_t, long long>> gens;
    std::vector<Mat> images;
    for (long long d = M->lo; d <= N; ++d) {
        std::size_t nd = (std::size_t)M->dim(d);
        if (nd == 0) continue;
        Echelon ech = colEchelon(jSpan(*M, d));
        for (auto c : complementOf(ech.pivots, nd)) {
            gens.emplace_back(M->labelAt(d)[c], d);
            Mat img(M->alg->field, nd, 1);
            img.set(c, 0, 1);
            images.push_back(std::move(img));
        }
    }
    auto P = free_module(M->alg, gens, N);
    return map_between_free(P, M, images);
}

ResolutionTruncation minimal_resolution(const ModuleHandle& M, long long H, long long N) {
    if (H < 0) throw BadInput("resolution length bound must be nonnegative");
    if (N > M->N) throw WindowTooSmall("resolution window exceeds the module's window");
    ResolutionTruncation R;
    R.M = M;
    R.H = H;
    R.N = N;
    GradedMap cover = minimal_cover(M, N);
    R.augmentation = cover;
    R.P.push_back(cover.X);
    if (windowZero(*cover.X)) {
        R.terminated = true;
        return R;
    }
    for (long long m = 1; m <= H; ++m) {
        GradedMap inc = kernel_map(cover, N);
        GradedMap next = minimal_cover(inc.X, N);
        R.d.push_back(compose(inc, next));
        R.P.push_back(next.X);
        cover = next;
        if (windowZero(*next.X)) {
            R.terminated = true;
            return R;
        }
    }
    // probe the next syzygy so termination exactly at H is still visible
    R.terminated = windowZero(*kernel_map(cover, N).X);
    return R;
}

BettiTable betti(const ResolutionTruncation& R) {
    BettiTable B;
    B.H = R.H;
    B.N = R.N;
    B.terminated = R.terminated;
    B.a0Semisimple = a0_structure(R.M->alg).semisimple;
    B.nv = R.M->alg->nv();
    B.beta.resize(R.P.size());
    for (std::size_t m = 0; m < R.P.size(); ++m)
        for (const auto& [v, s] : *R.P[m]->freeGens) {
            auto& counts = B.beta[m][s];
            if (counts.empty()) counts.assign(B.nv, 0);
            ++counts[v];
        }
    return B;
}

bool check_minimality(const ResolutionTruncation& R) {
    for (std::size_t i = 0; i < R.d.size(); ++i)
        for (long long d = R.P[i + 1]->lo; d <= R.N; ++d) {
            if (R.P[i + 1]->dim(d) == 0) continue;
            const Mat& cols = R.d[i].at(d);
            if (cols == Mat(cols.field(), cols.rows(), cols.cols())) continue;
            if (!solveColumns(jSpan(*R.P[i], d), cols)) return false;
        }
    return true;
}

Verdict is_linear(const BettiTable& B) {
    for (std::size_t m = 0; m < B.beta.size(); ++m)
        for (const auto& [s, counts] : B.beta[m])
            for (auto c : counts)
                if (c > 0 && s != (long long)m) return Verdict::Fails;
    return B.terminated ? Verdict::Holds : Verdict::Inconclusive;
}

ExtendedDegree pdim_of(const ResolutionTruncation& R) {
    long long len = R.length();
    if (len < 0) return ExtendedDegree::minusInf();
    if (R.terminated) return ExtendedDegree::integer(len);
    return ExtendedDegree::atLeast(R.H);
}

}  // namespace gradreg
