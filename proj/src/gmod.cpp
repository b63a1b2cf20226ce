#include "gradreg/gmod.hpp"

#include <algorithm>
#include <stdexcept>

#include "gradreg/errors.hpp"
#include "gradreg/linalg.hpp"

namespace gradreg {

namespace {

// fill every (e, d) action pair of out (windows already set) via fn
template <typename F>
void fillActions(GradedModule& out, F&& fn) {
    for (long long d = out.lo; d <= out.N; ++d)
        for (long long e = 0; d + e <= out.N && e <= out.alg->N; ++e)
            out.actions[{e, d}] = fn(e, d);
}

long long bottomNonzero(const GradedModule& m) {  // or N+1 when empty
    for (long long d = m.lo; d <= m.N; ++d)
        if (m.dim(d) > 0) return d;
    return m.N + 1;
}

}  // namespace

Mat GradedModule::apply(long long e, std::size_t a, long long d, const Mat& v) const {
    const Mat& t = action(e, d);
    std::size_t nd = (std::size_t)dim(d);
    return t.sub(0, t.rows(), a * nd, (a + 1) * nd).mul(v);
}

long long GradedModule::topNonzero() const {
    for (long long d = N; d >= lo; --d)
        if (dim(d) > 0) return d;
    return lo - 1;
}

ModuleHandle free_module(const AlgebraHandle& a,
                         std::vector<std::pair<std::size_t, long long>> gens, long long N) {
    auto M = std::make_shared<GradedModule>();
    M->alg = a;
    M->lo = 0;
    for (auto& [v, s] : gens) {
        if (v >= a->nv()) throw BadInput("generator vertex out of range");
        if (s > N || N - s > a->N)
            throw WindowTooSmall("free module window cannot cover generator at degree " +
                                 std::to_string(s));
    }
    for (std::size_t t = 0; t < gens.size(); ++t)
        M->lo = t == 0 ? gens[t].second : std::min(M->lo, gens[t].second);
    if (gens.empty()) M->lo = std::min<long long>(0, N);
    M->N = N;
    M->genBound = 0;
    for (auto& [v, s] : gens) M->genBound = std::max(M->genBound, s);
    M->freeGens = gens;
    M->origin = "free";

    // per degree: basis = (t, algebra element of degree d - s_t ending at v_t)
    std::map<long long, std::vector<std::pair<std::size_t, std::size_t>>> pos;
    std::map<long long, std::vector<std::vector<long long>>> rowOf;  // [d][t][algIdx]
    for (long long d = M->lo; d <= N; ++d) {
        auto& p = pos[d];
        auto& inv = rowOf[d];
        inv.resize(gens.size());
        auto& lab = M->labels[d];
        for (std::size_t t = 0; t < gens.size(); ++t) {
            long long ad = d - gens[t].second;
            if (ad < 0 || ad > a->N) continue;
            inv[t].assign((std::size_t)a->dim(ad), -1);
            for (std::size_t i = 0; i < (std::size_t)a->dim(ad); ++i) {
                if (a->bTgt[(std::size_t)ad][i] != gens[t].first) continue;
                inv[t][i] = (long long)p.size();
                p.emplace_back(t, i);
                lab.push_back(a->bSrc[(std::size_t)ad][i]);
            }
        }
        M->dimsByDeg[d] = (long long)p.size();
    }
    fillActions(*M, [&](long long e, long long d) {
        std::size_t na = (std::size_t)a->dim(e), nd = (std::size_t)M->dim(d);
        Mat t(a->field, (std::size_t)M->dim(d + e), na * nd);
        const auto& p = pos[d];
        const auto& invHi = rowOf[d + e];
        for (std::size_t m = 0; m < nd; ++m) {
            auto [g, i] = p[m];
            long long ad = d - gens[g].second;
            const Mat& pr = a->product(e, ad);
            std::size_t nlow = (std::size_t)a->dim(ad);
            for (std::size_t x = 0; x < na; ++x)
                for (std::size_t r = 0; r < pr.rows(); ++r) {
                    if (pr.entryZero(r, x * nlow + i)) continue;
                    long long row = invHi[g][r];
                    if (row < 0) throw std::logic_error("product left its generator block");
                    copyEntry(pr, r, x * nlow + i, t, (std::size_t)row, x * nd + m);
                }
        }
        return t;
    });
    // vanishing above the window needs the algebra certificate and headroom
    // for the highest generator
    M->fdCertified = a->finiteDimensionalCertified();
    if (M->fdCertified)
        for (auto& g : gens)
            if (g.second + a->sdimTop() > N) M->fdCertified = false;
    return M;
}

GradedMap map_between_free(const ModuleHandle& x, const ModuleHandle& y,
                           const std::vector<Mat>& images) {
    if (!x->freeGens) throw BadInput("map_between_free needs a free source");
    const auto& gens = *x->freeGens;
    if (images.size() != gens.size()) throw BadInput("one image per generator required");
    for (std::size_t t = 0; t < gens.size(); ++t) {
        long long s = gens[t].second;
        if (s < y->lo || s > y->N) throw WindowTooSmall("generator degree outside target window");
        if (images[t].rows() != (std::size_t)y->dim(s) || images[t].cols() != 1)
            throw BadInput("image has the wrong shape");
    }
    GradedMap f;
    f.X = x;
    f.Y = y;
    long long lo = std::min(x->lo, y->lo), hi = std::min(x->N, y->N);
    for (long long d = lo; d <= hi; ++d) {
        Mat m(x->alg->field, (std::size_t)y->dim(d), (std::size_t)x->dim(d));
        if (d >= x->lo) {
            // reconstruct the (t, i) basis enumeration of the free module
            std::size_t col = 0;
            for (std::size_t t = 0; t < gens.size(); ++t) {
                long long ad = d - gens[t].second;
                if (ad < 0 || ad > x->alg->N) continue;
                for (std::size_t i = 0; i < (std::size_t)x->alg->dim(ad); ++i) {
                    if (x->alg->bTgt[(std::size_t)ad][i] != gens[t].first) continue;
                    Mat img = y->apply(ad, i, gens[t].second, images[t]);
                    for (std::size_t r = 0; r < img.rows(); ++r) copyEntry(img, r, 0, m, r, col);
                    ++col;
                }
            }
            if (col != (std::size_t)x->dim(d)) throw std::logic_error("free basis mismatch");
        }
        f.mats[d] = std::move(m);
    }
    return f;
}

bool validate_map(const GradedMap& f) {
    long long lo = std::max(f.X->lo, f.Y->lo), hi = std::min(f.X->N, f.Y->N);
    for (long long d = lo; d <= hi; ++d)
        for (long long e = 0; d + e <= hi && e <= f.X->alg->N; ++e) {
            std::size_t na = (std::size_t)f.X->alg->dim(e);
            std::size_t nxd = (std::size_t)f.X->dim(d);
            const Mat& ax = f.X->action(e, d);
            const Mat& ay = f.Y->action(e, d);
            for (std::size_t a = 0; a < na; ++a) {
                Mat lhs = f.at(d + e).mul(ax.sub(0, ax.rows(), a * nxd, (a + 1) * nxd));
                std::size_t nyd = (std::size_t)f.Y->dim(d);
                Mat rhs = ay.sub(0, ay.rows(), a * nyd, (a + 1) * nyd).mul(f.at(d));
                if (!(lhs == rhs)) return false;
            }
        }
    return true;
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
    if (f.X != g.Y) throw BadInput("compose needs matching middle modules");
    GradedMap h;
    h.X = g.X;
    h.Y = f.Y;
    long long lo = std::min(g.X->lo, f.Y->lo), hi = std::min(g.X->N, f.Y->N);
    for (long long d = lo; d <= hi; ++d) {
        if (g.mats.count(d) && f.mats.count(d))
            h.mats[d] = f.at(d).mul(g.at(d));
        else if (g.X->dim(d) == 0)
            h.mats[d] = Mat(f.Y->alg->field, (std::size_t)f.Y->dim(d), 0);
        else
            throw std::logic_error("compose coverage hole");
    }
    return h;
}

GradedMap cokernel_map(const GradedMap& f, long long N) {
    if (N > f.X->N || N > f.Y->N)
        throw WindowTooSmall("cokernel window exceeds the map's window");
    const auto& Y = *f.Y;
    auto M = std::make_shared<GradedModule>();
    M->alg = Y.alg;
    M->lo = Y.lo;
    M->N = N;
    M->genBound = Y.genBound;
    M->origin = "cokernel";

    std::map<long long, Mat> proj, sect;  // pi: Y -> M coords, unit sections
    for (long long d = M->lo; d <= N; ++d) {
        std::size_t n = (std::size_t)Y.dim(d);
        Mat fd = f.mats.count(d) ? f.at(d) : Mat(Y.alg->field, n, 0);
        Echelon ech = colEchelon(fd);
        auto comp = complementOf(ech.pivots, n);
        M->dimsByDeg[d] = (long long)comp.size();
        auto& lab = M->labels[d];
        for (auto c : comp) lab.push_back(Y.labelAt(d)[c]);
        proj[d] = quotientProjection(ech, n, comp, Y.alg->field);
        Mat s(Y.alg->field, n, comp.size());
        for (std::size_t i = 0; i < comp.size(); ++i) s.set(comp[i], i, 1);
        sect[d] = std::move(s);
    }
    fillActions(*M, [&](long long e, long long d) {
        std::size_t na = (std::size_t)Y.alg->dim(e), nd = (std::size_t)M->dim(d);
        std::size_t nyd = (std::size_t)Y.dim(d);
        const Mat& ay = Y.action(e, d);
        Mat t(Y.alg->field, (std::size_t)M->dim(d + e), na * nd);
        for (std::size_t a = 0; a < na; ++a) {
            Mat block = proj[d + e].mul(
                ay.sub(0, ay.rows(), a * nyd, (a + 1) * nyd).mul(sect[d]));
            t.paste(block, 0, a * nd);
        }
        return t;
    });
    long long g = std::max<long long>(Y.alg->genDegreeBound, 1);
    long long top = M->topNonzero();
    M->fdCertified =
        Y.fdCertified || (top <= N - g && M->genBound <= N - g);

    GradedMap pi;
    pi.X = f.Y;
    pi.Y = M;
    for (long long d = std::min(Y.lo, M->lo); d <= std::min(Y.N, M->N); ++d)
        pi.mats[d] = proj.count(d) ? proj[d]
                                   : Mat(Y.alg->field, (std::size_t)M->dim(d),
                                         (std::size_t)Y.dim(d));
    return pi;
}

ModuleHandle cokernel_module(const GradedMap& f, long long N) { return cokernel_map(f, N).Y; }

GradedMap kernel_map(const GradedMap& f, long long N) {
    if (N > f.X->N || N > f.Y->N) throw WindowTooSmall("kernel window exceeds the map's window");
    const auto& X = *f.X;
    auto K = std::make_shared<GradedModule>();
    K->alg = X.alg;
    K->lo = X.lo;
    K->N = N;
    K->origin = "kernel";

    std::map<long long, Mat> basis;  // d -> X_d x k_d, canonical echelon kernel
    for (long long d = K->lo; d <= N; ++d) {
        Mat b = rref(f.at(d)).kernel;
        K->dimsByDeg[d] = (long long)b.cols();
        auto& lab = K->labels[d];
        for (std::size_t c = 0; c < b.cols(); ++c) {
            std::size_t first = b.rows();
            for (std::size_t r = 0; r < b.rows(); ++r)
                if (!b.entryZero(r, c)) {
                    if (first == b.rows()) first = r;
                    if (X.labelAt(d)[r] != X.labelAt(d)[first])
                        throw std::logic_error("kernel basis vector crosses blocks");
                }
            lab.push_back(first == b.rows() ? 0 : X.labelAt(d)[first]);
        }
        basis[d] = std::move(b);
    }
    fillActions(*K, [&](long long e, long long d) {
        std::size_t na = (std::size_t)X.alg->dim(e), nd = (std::size_t)K->dim(d);
        std::size_t nxd = (std::size_t)X.dim(d);
        const Mat& ax = X.action(e, d);
        Mat w(X.alg->field, (std::size_t)X.dim(d + e), na * nd);
        for (std::size_t a = 0; a < na; ++a)
            w.paste(ax.sub(0, ax.rows(), a * nxd, (a + 1) * nxd).mul(basis[d]), 0, a * nd);
        auto sol = solveColumns(basis[d + e], w);
        if (!sol) throw std::logic_error("action left the kernel");
        return *sol;
    });
    K->genBound = N;  // no generation claim; fdCertified is the only vanishing proof
    K->fdCertified = X.fdCertified && X.topNonzero() <= N;

    GradedMap inc;
    inc.X = K;
    inc.Y = f.X;
    for (long long d = std::min(K->lo, X.lo); d <= std::min((long long)N, X.N); ++d)
        inc.mats[d] = basis.count(d)
                          ? basis[d]
                          : Mat(X.alg->field, (std::size_t)X.dim(d), (std::size_t)K->dim(d));
    return inc;
}

ModuleHandle kernel(const GradedMap& f, long long N) { return kernel_map(f, N).X; }

ModuleHandle truncate_below(const ModuleHandle& m, long long r) {
    if (r <= m->lo) return m;
    auto T = std::make_shared<GradedModule>();
    T->alg = m->alg;
    T->lo = r;  // window may be empty when r > N; the module reads as zero
    T->N = m->N;
    for (long long d = T->lo; d <= T->N; ++d) {
        T->dimsByDeg[d] = m->dim(d);
        T->labels[d] = m->labelAt(d);
    }
    fillActions(*T, [&](long long e, long long d) { return m->action(e, d); });
    long long g = std::max<long long>(m->alg->genDegreeBound, 1);
    T->genBound = std::max(m->genBound, r + g - 1);
    T->fdCertified = m->fdCertified;
    T->origin = "truncate";
    return T;
}

ModuleHandle shift_module(const ModuleHandle& m, long long l) {
    auto S = std::make_shared<GradedModule>();
    S->alg = m->alg;
    S->lo = m->lo - l;
    S->N = m->N - l;
    for (long long d = m->lo; d <= m->N; ++d) {
        S->dimsByDeg[d - l] = m->dim(d);
        S->labels[d - l] = m->labelAt(d);
    }
    for (auto& [key, mat] : m->actions) S->actions[{key.first, key.second - l}] = mat;
    S->genBound = m->genBound - l;
    S->fdCertified = m->fdCertified;
    if (m->freeGens) {
        S->freeGens.emplace();
        for (auto& [v, s] : *m->freeGens) S->freeGens->emplace_back(v, s - l);
    }
    S->origin = "shift";
    return S;
}

ModuleHandle matlis_dual(const ModuleHandle& m) {
    if (!m->fdCertified)
        throw NotFiniteDimensional("matlis_dual needs a finite-dimensional certificate");
    auto D = std::make_shared<GradedModule>();
    D->alg = opposite(m->alg);
    long long b = bottomNonzero(*m), t = m->topNonzero();
    if (t < b) {  // zero module
        D->lo = 0;
        D->N = 0;
        D->dimsByDeg[0] = 0;
        D->labels[0] = {};
        D->actions[{0, 0}] = Mat(D->alg->field, 0, 0);
        D->fdCertified = true;
        D->origin = "dual";
        return D;
    }
    D->lo = -t;
    D->N = -b;
    for (long long d = D->lo; d <= D->N; ++d) {
        D->dimsByDeg[d] = m->dim(-d);
        D->labels[d] = m->labels.at(-d);
    }
    fillActions(*D, [&](long long e, long long d) {
        std::size_t na = (std::size_t)D->alg->dim(e);
        std::size_t nd = (std::size_t)D->dim(d), nhi = (std::size_t)D->dim(d + e);
        const Mat& src = m->action(e, -d - e);  // M_{-d-e} -> M_{-d}
        std::size_t nlow = (std::size_t)m->dim(-d - e);
        Mat t2(D->alg->field, nhi, na * nd);
        for (std::size_t a = 0; a < na; ++a)
            for (std::size_t i = 0; i < nd; ++i)
                for (std::size_t r = 0; r < nlow; ++r)
                    copyEntry(src, i, a * nlow + r, t2, r, a * nd + i);
        return t2;
    });
    D->genBound = D->N;
    D->fdCertified = true;
    D->origin = "dual";
    return D;
}

ModuleDegrees sdeg_ideg(const GradedModule& m) {
    long long b = bottomNonzero(m), t = m.topNonzero();
    ModuleDegrees out;
    if (t < b) {
        out.sdeg = ExtendedDegree::minusInf();
        out.ideg = ExtendedDegree::plusInf();
        out.degenerate = true;
        out.zeroCertified = m.fdCertified;
        return out;
    }
    out.ideg = ExtendedDegree::integer(b);
    out.sdeg = m.fdCertified ? ExtendedDegree::integer(t) : ExtendedDegree::atLeast(t);
    return out;
}

ModuleHandle trivial_module(const AlgebraHandle& a, long long N) {
    const A0Data& z = a0_structure(a);
    std::size_t n = (std::size_t)a->dim(0);
    Echelon ech = colEchelon(z.radicalBasis);
    auto comp = complementOf(ech.pivots, n);
    Mat pi = quotientProjection(ech, n, comp, a->field);

    auto S = std::make_shared<GradedModule>();
    S->alg = a;
    S->lo = 0;
    S->N = N;
    S->dimsByDeg[0] = (long long)comp.size();
    for (auto c : comp) S->labels[0].push_back(a->bSrc[0][c]);
    for (long long d = 1; d <= N; ++d) {
        S->dimsByDeg[d] = 0;
        S->labels[d] = {};
    }
    fillActions(*S, [&](long long e, long long d) {
        std::size_t na = (std::size_t)a->dim(e), nd = (std::size_t)S->dim(d);
        Mat t(a->field, (std::size_t)S->dim(d + e), na * nd);
        if (e == 0 && d == 0) {
            const Mat& pr = a->product(0, 0);
            for (std::size_t x = 0; x < na; ++x) {
                // x . class(comp[i]) = pi(column of x * elt_{comp[i]})
                for (std::size_t i = 0; i < nd; ++i) {
                    Mat col(a->field, n, 1);
                    for (std::size_t r = 0; r < n; ++r)
                        copyEntry(pr, r, x * n + comp[i], col, r, 0);
                    Mat red = pi.mul(col);
                    for (std::size_t r = 0; r < red.rows(); ++r)
                        copyEntry(red, r, 0, t, r, x * nd + i);
                }
            }
        }
        return t;
    });
    S->genBound = 0;
    S->fdCertified = true;
    S->origin = "trivial";
    return S;
}

ModuleHandle simple_module(const AlgebraHandle& a, std::size_t v, long long N) {
    const A0Data& z = a0_structure(a);
    if (!z.basic) throw NotBasic("simple_module needs a basic degree-0 quotient");
    if (v >= a->nv()) throw BadInput("vertex out of range");
    auto S = trivial_module(a, N);
    std::vector<std::size_t> sel;
    for (std::size_t i = 0; i < S->labelAt(0).size(); ++i)
        if (S->labelAt(0)[i] == v) sel.push_back(i);

    auto M = std::make_shared<GradedModule>();
    M->alg = a;
    M->lo = 0;
    M->N = N;
    M->dimsByDeg[0] = (long long)sel.size();
    for (std::size_t i = 0; i < sel.size(); ++i) M->labels[0].push_back(v);
    for (long long d = 1; d <= N; ++d) {
        M->dimsByDeg[d] = 0;
        M->labels[d] = {};
    }
    fillActions(*M, [&](long long e, long long d) {
        std::size_t na = (std::size_t)a->dim(e), nd = (std::size_t)M->dim(d);
        Mat t(a->field, (std::size_t)M->dim(d + e), na * nd);
        if (e == 0 && d == 0) {
            const Mat& src = S->action(0, 0);
            std::size_t nS = (std::size_t)S->dim(0);
            for (std::size_t x = 0; x < na; ++x)
                for (std::size_t i = 0; i < nd; ++i)
                    for (std::size_t r = 0; r < sel.size(); ++r)
                        copyEntry(src, sel[r], x * nS + sel[i], t, r, x * nd + i);
        }
        return t;
    });
    M->genBound = 0;
    M->fdCertified = true;
    M->origin = "simple";
    return M;
}

ModuleHandle algebra_module(const AlgebraHandle& a, long long N) {
    std::vector<std::pair<std::size_t, long long>> gens;
    for (std::size_t v = 0; v < a->nv(); ++v) gens.emplace_back(v, 0);
    auto M = std::make_shared<GradedModule>(*free_module(a, gens, N));
    M->fdCertified = a->finiteDimensionalCertified() && a->sdimTop() <= N;
    M->origin = "algebra";
    return M;
}

}  // namespace gradreg
