#include "gradreg/algebra.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "gradreg/errors.hpp"

namespace gradreg {

namespace {

// F_p residue of an exact rational; the denominator must be a unit.
long long residue(const mpq_class& v, long long p) {
    mpz_class pm((long)p);
    mpz_class nm = v.get_num() % pm, dm = v.get_den() % pm;
    long long n = nm.get_si() % p, d = dm.get_si() % p;
    if (n < 0) n += p;
    if (d < 0) d += p;
    if (d == 0) throw std::domain_error("denominator not a unit mod p");
    return (long long)((__int128)n * invMod(d, p) % p);
}

struct Mono {
    std::size_t src = 0, tgt = 0;
    std::vector<std::size_t> word;
    bool operator<(const Mono& o) const {
        if (word.size() != o.word.size()) return word.size() < o.word.size();
        if (word != o.word) return word < o.word;
        return src < o.src;
    }
    bool operator==(const Mono&) const = default;
};

// basis element in positive degree, kept with its defining split b * a * m
struct Cand {
    Mono mono;
    std::size_t b0 = 0;     // index into basis0
    std::size_t arrow = 0;  // first positive-degree arrow
    std::size_t mIdx = 0;   // index into the basis of the remaining degree
};

struct Builder {
    const QuiverPresentation& P;
    long long N;
    std::size_t cap;
    FieldSpec fs;
    std::size_t nv;

    std::vector<Mono> basis0;
    std::vector<Mono> cands0;
    std::map<Mono, std::size_t> candIndex0;
    Mat red0;
    std::vector<std::size_t> vertexIdx0;  // basis0 position of each e_v

    // per positive degree: basis as candidate triples
    std::vector<std::vector<Cand>> basisPos;  // index d, entry list (d >= 1)
    std::vector<long long> dims;
    // leftOp[a][d]: coords at degree d -> degree d + deg(a)
    std::vector<std::vector<Mat>> leftOp;

    Builder(const QuiverPresentation& pres, long long n, std::size_t c)
        : P(pres), N(n), cap(c), fs(pres.field), nv(pres.vertices.size()) {}

    void setq(Mat& m, std::size_t r, std::size_t c, const mpq_class& v) {
        if (fs.rational())
            m.addRational(r, c, v);
        else
            m.addP(r, c, residue(v, (long long)fs.p));
    }

    // ---- degree 0 ----

    void buildDegree0() {
        std::vector<std::size_t> zarrows;
        for (std::size_t i = 0; i < P.arrows.size(); ++i)
            if (P.arrows[i].deg == 0) zarrows.push_back(i);
        std::vector<const Relation*> zrels;
        std::size_t maxRelLen0 = 0;
        for (auto& r : P.relations)
            if (r.deg == 0) {
                zrels.push_back(&r);
                for (auto& t : r.terms) maxRelLen0 = std::max(maxRelLen0, t.path.size());
            }
        // the only red0 lookups beyond products are b * (leading degree-0 run
        // of a relation term), so saturation length must cover those too
        std::size_t maxZeroPrefix = 0;
        for (auto& r : P.relations)
            for (auto& t : r.terms) {
                std::size_t k = 0;
                while (k < t.path.size() && P.arrows[t.path[k]].deg == 0) ++k;
                maxZeroPrefix = std::max(maxZeroPrefix, k + 1);
            }

        std::vector<std::vector<Mono>> byLen(1);
        for (std::size_t v = 0; v < nv; ++v) byLen[0].push_back(Mono{v, v, {}});
        if (zarrows.empty()) {
            basis0 = byLen[0];
            cands0 = byLen[0];
            finish0();
            return;
        }
        if (zrels.empty())
            throw Degree0Blowup("degree-0 arrows with no degree-0 relations give an "
                                "infinite-dimensional A_0");

        std::vector<Mono> prevBasis;
        for (std::size_t L = 1;; ++L) {
            if (L > 64)
                throw Degree0Blowup("degree-0 saturation did not stabilize within length 64");
            byLen.emplace_back();
            for (const Mono& w : byLen[L - 1])
                for (auto a : zarrows)
                    if (w.tgt == P.arrows[a].from) {
                        Mono m = w;
                        m.word.push_back(a);
                        m.tgt = P.arrows[a].to;
                        byLen[L].push_back(m);
                    }
            cands0.clear();
            for (auto& lev : byLen) cands0.insert(cands0.end(), lev.begin(), lev.end());
            if (cands0.size() > cap)
                throw Degree0Blowup("degree-0 saturation exceeded the cap; the degree-0 part is "
                                    "not finite-dimensional or the cap is too small");
            candIndex0.clear();
            for (std::size_t i = 0; i < cands0.size(); ++i) candIndex0[cands0[i]] = i;

            // relation instances u * r * v with every term inside the table
            std::vector<std::vector<std::pair<std::size_t, mpq_class>>> rows;
            for (auto* r : zrels) {
                std::size_t tlen = 0;
                for (auto& t : r->terms) tlen = std::max(tlen, t.path.size());
                for (auto& ulev : byLen)
                    for (const Mono& u : ulev) {
                        if (u.tgt != r->src) continue;
                        if (u.word.size() + tlen > L) continue;
                        for (auto& vlev : byLen)
                            for (const Mono& v : vlev) {
                                if (v.src != r->tgt) continue;
                                if (u.word.size() + tlen + v.word.size() > L) continue;
                                std::vector<std::pair<std::size_t, mpq_class>> row;
                                for (auto& t : r->terms) {
                                    Mono w = u;
                                    w.word.insert(w.word.end(), t.path.begin(), t.path.end());
                                    w.word.insert(w.word.end(), v.word.begin(), v.word.end());
                                    w.tgt = v.tgt;
                                    row.emplace_back(candIndex0.at(w), t.coef);
                                }
                                rows.push_back(std::move(row));
                            }
                    }
            }
            auto [basis, red] = quotient(cands0, rows, true);
            std::size_t mb = 0;
            for (auto& b : basis) mb = std::max(mb, b.word.size());
            std::size_t need =
                std::max({2 * mb, mb + maxRelLen0, mb + maxZeroPrefix, (std::size_t)1});
            if (L >= need && basis == prevBasis) {
                basis0 = basis;
                red0 = red;
                finish0();
                return;
            }
            prevBasis = basis;
        }
    }

    void finish0() {
        if (basis0.size() == cands0.size() && red0.rows() == 0)
            red0 = Mat::identity(fs, basis0.size());
        candIndex0.clear();
        for (std::size_t i = 0; i < cands0.size(); ++i) candIndex0[cands0[i]] = i;
        vertexIdx0.assign(nv, 0);
        for (std::size_t v = 0; v < nv; ++v) {
            Mono e{v, v, {}};
            auto it = std::find(basis0.begin(), basis0.end(), e);
            if (it == basis0.end())
                throw std::logic_error("vertex idempotent eliminated from the degree-0 basis");
            vertexIdx0[v] = (std::size_t)(it - basis0.begin());
        }
    }

    // quotient of span(cands) by span(rows); pivots eliminate the largest
    // monomials, so the basis keeps the smallest representatives
    std::pair<std::vector<Mono>, Mat> quotient(
        const std::vector<Mono>& cands,
        const std::vector<std::vector<std::pair<std::size_t, mpq_class>>>& rows,
        bool degreeZero) {
        std::size_t K = cands.size();
        Mat m(fs, rows.size(), K);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (auto& [c, coef] : rows[r]) setq(m, r, K - 1 - c, coef);  // descending columns
        Rref rr = rref(m);
        std::vector<char> isPivot(K, 0);
        for (auto pc : rr.pivots) isPivot[pc] = 1;
        std::vector<Mono> basis;
        std::vector<std::size_t> basisPosOf(K, SIZE_MAX);
        for (std::size_t c = 0; c < K; ++c)
            if (!isPivot[K - 1 - c]) {
                basisPosOf[c] = basis.size();
                basis.push_back(cands[c]);
            }
        if (basis.size() > std::min<std::size_t>(cap, 4096)) {
            if (degreeZero)
                throw Degree0Blowup("degree-0 dimension exceeds the cap");
            throw CapExceeded("dimension exceeds the cap");
        }
        Mat red(fs, basis.size(), K);
        for (std::size_t c = 0; c < K; ++c) {
            std::size_t dc = K - 1 - c;
            if (!isPivot[dc]) {
                red.set(basisPosOf[c], c, 1);
                continue;
            }
            std::size_t rw =
                (std::size_t)(std::find(rr.pivots.begin(), rr.pivots.end(), dc) - rr.pivots.begin());
            for (std::size_t dc2 = dc + 1; dc2 < K; ++dc2) {
                if (rr.R.entryZero(rw, dc2)) continue;
                std::size_t c2 = K - 1 - dc2;
                if (fs.rational())
                    red.addRational(basisPosOf[c2], c, -rr.R.getq(rw, dc2));
                else
                    red.addP(basisPosOf[c2], c, (long long)fs.p - rr.R.get(rw, dc2));
            }
        }
        return {basis, red};
    }

    // overload for positive degrees, tracking candidate triples
    std::pair<std::vector<Cand>, Mat> quotientPos(
        const std::vector<Cand>& cands,
        const std::vector<std::vector<std::pair<std::size_t, mpq_class>>>& rows) {
        std::vector<Mono> monos;
        monos.reserve(cands.size());
        for (auto& c : cands) monos.push_back(c.mono);
        auto [basisM, red] = quotient(monos, rows, false);
        std::vector<Cand> basis;
        for (auto& bm : basisM) {
            auto it = std::find_if(cands.begin(), cands.end(),
                                   [&](const Cand& c) { return c.mono == bm; });
            basis.push_back(*it);
        }
        return {basis, red};
    }

    long long arrowDeg(std::size_t a) const { return P.arrows[a].deg; }

    long long dimAt(long long d) const {
        if (d == 0) return (long long)basis0.size();
        return (long long)basisPos[(std::size_t)d].size();
    }

    Mat applyWord(const std::vector<std::size_t>& word, long long startDeg, Mat cur) const {
        long long deg = startDeg;
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            cur = leftOp[*it][(std::size_t)deg].mul(cur);
            deg += arrowDeg(*it);
        }
        return cur;
    }

    // ---- positive degrees ----

    void buildPositive() {
        basisPos.assign((std::size_t)N + 1, {});
        leftOp.assign(P.arrows.size(), std::vector<Mat>((std::size_t)N + 1));
        dims.assign((std::size_t)N + 1, 0);
        dims[0] = (long long)basis0.size();
        fillOpsInto(0, Mat::identity(fs, basis0.size()), {});

        for (long long d = 1; d <= N; ++d) {
            std::vector<Cand> cands;
            for (std::size_t a = 0; a < P.arrows.size(); ++a) {
                long long da = arrowDeg(a);
                if (da < 1 || da > d) continue;
                std::size_t lowDim = (std::size_t)dimAt(d - da);
                for (std::size_t b = 0; b < basis0.size(); ++b) {
                    if (basis0[b].tgt != P.arrows[a].from) continue;
                    for (std::size_t m = 0; m < lowDim; ++m) {
                        const Mono& mm = monoAt(d - da, m);
                        if (mm.src != P.arrows[a].to) continue;
                        Cand c;
                        c.b0 = b;
                        c.arrow = a;
                        c.mIdx = m;
                        c.mono.src = basis0[b].src;
                        c.mono.tgt = mm.tgt;
                        c.mono.word = basis0[b].word;
                        c.mono.word.push_back(a);
                        c.mono.word.insert(c.mono.word.end(), mm.word.begin(), mm.word.end());
                        cands.push_back(std::move(c));
                    }
                }
            }
            std::sort(cands.begin(), cands.end(),
                      [](const Cand& x, const Cand& y) { return x.mono < y.mono; });
            if (cands.size() > cap)
                throw CapExceeded("candidate count exceeds cap in degree " + std::to_string(d));
            std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t> cidx;
            for (std::size_t i = 0; i < cands.size(); ++i)
                cidx[{cands[i].b0, cands[i].arrow, cands[i].mIdx}] = i;

            std::vector<std::vector<std::pair<std::size_t, mpq_class>>> rows;
            for (auto& r : P.relations) {
                if (r.deg < 1 || r.deg > d) continue;
                std::size_t lowDim = (std::size_t)dimAt(d - r.deg);
                for (std::size_t b = 0; b < basis0.size(); ++b) {
                    if (basis0[b].tgt != r.src) continue;
                    for (std::size_t m = 0; m < lowDim; ++m) {
                        if (monoAt(d - r.deg, m).src != r.tgt) continue;
                        auto row = expandInstance(r, b, d - r.deg, m, cidx);
                        rows.push_back(std::move(row));
                    }
                }
            }
            auto [basis, red] = quotientPos(cands, rows);
            basisPos[(std::size_t)d] = basis;
            dims[(std::size_t)d] = (long long)basis.size();
            if (basis.size() > cap)
                throw CapExceeded("basis dimension exceeds cap in degree " + std::to_string(d));
            fillOpsAt(d, red, cands, cidx);
        }
    }

    const Mono& monoAt(long long d, std::size_t i) const {
        if (d == 0) return basis0[i];
        return basisPos[(std::size_t)d][i].mono;
    }

    std::vector<std::pair<std::size_t, mpq_class>> expandInstance(
        const Relation& r, std::size_t b, long long md, std::size_t m,
        const std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t>& cidx) {
        std::vector<std::pair<std::size_t, mpq_class>> row;
        for (auto& t : r.terms) {
            std::size_t k = 0;
            while (k < t.path.size() && arrowDeg(t.path[k]) == 0) ++k;
            // relations of positive degree: every term has a positive arrow
            std::size_t a1 = t.path[k];
            // beta: A_0 coords of b * (leading zero run)
            Mono bp = basis0[b];
            for (std::size_t q = 0; q < k; ++q) {
                bp.word.push_back(t.path[q]);
                bp.tgt = P.arrows[t.path[q]].to;
            }
            std::size_t bpc = candIndex0.at(bp);
            // gamma: coords of tail * m at degree d - deg(a1)
            std::vector<std::size_t> tail(t.path.begin() + (long)k + 1, t.path.end());
            Mat mcol(fs, (std::size_t)dimAt(md), 1);
            mcol.set(m, 0, 1);
            Mat gamma = applyWord(tail, md, mcol);
            for (std::size_t j = 0; j < basis0.size(); ++j) {
                if (red0.entryZero(j, bpc)) continue;
                mpq_class beta =
                    fs.rational() ? red0.getq(j, bpc) : mpq_class((long)red0.get(j, bpc));
                for (std::size_t i = 0; i < gamma.rows(); ++i) {
                    if (gamma.entryZero(i, 0)) continue;
                    mpq_class g =
                        fs.rational() ? gamma.getq(i, 0) : mpq_class((long)gamma.get(i, 0));
                    auto it = cidx.find({j, a1, i});
                    if (it == cidx.end())
                        throw std::logic_error("missing candidate during instance expansion");
                    row.emplace_back(it->second, t.coef * beta * g);
                }
            }
        }
        return row;
    }

    // left-multiplication operators whose target is degree d
    void fillOpsAt(long long d, const Mat& red, const std::vector<Cand>& cands,
                   const std::map<std::tuple<std::size_t, std::size_t, std::size_t>, std::size_t>&
                       cidx) {
        for (std::size_t a = 0; a < P.arrows.size(); ++a) {
            long long da = arrowDeg(a);
            if (da >= 1 && d - da >= 0) {
                std::size_t low = (std::size_t)dimAt(d - da);
                Mat op(fs, (std::size_t)dims[(std::size_t)d], low);
                for (std::size_t m = 0; m < low; ++m) {
                    if (monoAt(d - da, m).src != P.arrows[a].to) continue;
                    auto it = cidx.find({vertexIdx0[P.arrows[a].from], a, m});
                    if (it == cidx.end()) continue;
                    for (std::size_t r = 0; r < op.rows(); ++r)
                        if (!red.entryZero(r, it->second)) {
                            if (fs.rational())
                                op.addRational(r, m, red.getq(r, it->second));
                            else
                                op.addP(r, m, red.get(r, it->second));
                        }
                }
                leftOp[a][(std::size_t)(d - da)] = std::move(op);
            }
            if (da == 0 && d >= 1) {
                // prefix trick: a * (b, a1, m) = sum NF_A0(a*b)_j * (b_j, a1, m)
                std::size_t n = (std::size_t)dims[(std::size_t)d];
                Mat op(fs, n, n);
                for (std::size_t m = 0; m < n; ++m) {
                    const Cand& c = basisPos[(std::size_t)d][m];
                    if (basis0[c.b0].src != P.arrows[a].to) continue;
                    Mono ab{P.arrows[a].from, basis0[c.b0].tgt, {}};
                    ab.word.push_back(a);
                    ab.word.insert(ab.word.end(), basis0[c.b0].word.begin(),
                                   basis0[c.b0].word.end());
                    std::size_t abc = candIndex0.at(ab);
                    for (std::size_t j = 0; j < basis0.size(); ++j) {
                        if (red0.entryZero(j, abc)) continue;
                        auto it = cidx.find({j, c.arrow, c.mIdx});
                        if (it == cidx.end())
                            throw std::logic_error("missing candidate in prefix reduction");
                        for (std::size_t r = 0; r < n; ++r)
                            if (!red.entryZero(r, it->second)) {
                                mpq_class v =
                                    (fs.rational() ? red0.getq(j, abc)
                                                   : mpq_class((long)red0.get(j, abc))) *
                                    (fs.rational() ? red.getq(r, it->second)
                                                   : mpq_class((long)red.get(r, it->second)));
                                setq(op, r, m, v);
                            }
                    }
                }
                leftOp[a][(std::size_t)d] = std::move(op);
            }
        }
    }

    // degree-0 operators (target degree 0) from red0
    void fillOpsInto(long long, const Mat&, const std::vector<std::size_t>&) {
        for (std::size_t a = 0; a < P.arrows.size(); ++a) {
            if (arrowDeg(a) != 0) continue;
            Mat op(fs, basis0.size(), basis0.size());
            for (std::size_t m = 0; m < basis0.size(); ++m) {
                if (basis0[m].src != P.arrows[a].to) continue;
                Mono am{P.arrows[a].from, basis0[m].tgt, {}};
                am.word.push_back(a);
                am.word.insert(am.word.end(), basis0[m].word.begin(), basis0[m].word.end());
                std::size_t c = candIndex0.at(am);
                for (std::size_t r = 0; r < basis0.size(); ++r)
                    if (!red0.entryZero(r, c)) {
                        if (fs.rational())
                            op.addRational(r, m, red0.getq(r, c));
                        else
                            op.addP(r, m, red0.get(r, c));
                    }
            }
            leftOp[a][0] = std::move(op);
        }
    }

    std::shared_ptr<TruncatedAlgebra> finish() {
        auto A = std::make_shared<TruncatedAlgebra>();
        A->field = fs;
        A->N = N;
        A->vertexNames = P.vertices;
        A->dims = dims;
        A->bSrc.resize((std::size_t)N + 1);
        A->bTgt.resize((std::size_t)N + 1);
        A->bName.resize((std::size_t)N + 1);
        for (long long d = 0; d <= N; ++d)
            for (std::size_t i = 0; i < (std::size_t)dims[(std::size_t)d]; ++i) {
                const Mono& m = monoAt(d, i);
                A->bSrc[(std::size_t)d].push_back(m.src);
                A->bTgt[(std::size_t)d].push_back(m.tgt);
                std::string nm;
                if (m.word.empty())
                    nm = P.vertices[m.src];
                else
                    for (std::size_t k = 0; k < m.word.size(); ++k) {
                        if (k) nm += "*";
                        nm += P.arrows[m.word[k]].name;
                    }
                A->bName[(std::size_t)d].push_back(nm);
            }
        A->idem = Mat(fs, (std::size_t)dims[0], nv);
        for (std::size_t v = 0; v < nv; ++v) A->idem.set(vertexIdx0[v], v, 1);
        long long g = 1;
        for (auto& a : P.arrows) g = std::max(g, a.deg);
        A->genDegreeBound = g;
        A->origin = "presentation";
        A->presentation = P;
        A->prod.resize((std::size_t)N + 1);
        for (long long d1 = 0; d1 <= N; ++d1) {
            A->prod[(std::size_t)d1].resize((std::size_t)(N - d1) + 1);
            for (long long d2 = 0; d1 + d2 <= N; ++d2) {
                std::size_t n1 = (std::size_t)dims[(std::size_t)d1],
                            n2 = (std::size_t)dims[(std::size_t)d2];
                Mat t(fs, (std::size_t)dims[(std::size_t)(d1 + d2)], n1 * n2);
                for (std::size_t i = 0; i < n1; ++i) {
                    const Mono& mi = monoAt(d1, i);
                    // e_v selects the block with matching source
                    Mat start(fs, n2, n2);
                    for (std::size_t j = 0; j < n2; ++j)
                        if (monoAt(d2, j).src == mi.tgt) start.set(j, j, 1);
                    Mat block = applyWord(mi.word, d2, std::move(start));
                    t.paste(block, 0, i * n2);
                }
                A->prod[(std::size_t)d1][(std::size_t)d2] = std::move(t);
            }
        }
        return A;
    }
};

std::string reversedName(const std::string& s) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        std::size_t q = s.find('*', pos);
        if (q == std::string::npos) {
            parts.push_back(s.substr(pos));
            break;
        }
        parts.push_back(s.substr(pos, q - pos));
        pos = q + 1;
    }
    std::string out;
    for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
        if (!out.empty()) out += "*";
        out += *it;
    }
    return out;
}

}  // namespace

const Mat& TruncatedAlgebra::product(long long d1, long long d2) const {
    if (d1 < 0 || d2 < 0 || d1 + d2 > N) throw std::out_of_range("product degrees out of range");
    return prod[(std::size_t)d1][(std::size_t)d2];
}

bool TruncatedAlgebra::finiteDimensionalCertified() const {
    long long g = std::max<long long>(genDegreeBound, 1);
    if (N < g) return false;
    for (long long d = N - g + 1; d <= N; ++d)
        if (dims[(std::size_t)d] != 0) return false;
    return true;
}

long long TruncatedAlgebra::sdimTop() const {
    for (long long d = N; d >= 0; --d)
        if (dims[(std::size_t)d] != 0) return d;
    return -1;
}

AlgebraHandle build_truncated(const QuiverPresentation& pres, long long N, std::size_t cap) {
    if (N < 0) throw BadInput("window bound must be nonnegative");
    Builder b(pres, N, cap);
    b.buildDegree0();
    b.buildPositive();
    return b.finish();
}

AlgebraHandle opposite(const AlgebraHandle& a) {
    auto B = std::make_shared<TruncatedAlgebra>();
    B->field = a->field;
    B->N = a->N;
    B->vertexNames = a->vertexNames;
    B->dims = a->dims;
    B->bSrc = a->bTgt;
    B->bTgt = a->bSrc;
    B->bName.resize(a->bName.size());
    for (std::size_t d = 0; d < a->bName.size(); ++d)
        for (auto& nm : a->bName[d]) B->bName[d].push_back(reversedName(nm));
    B->idem = a->idem;
    B->genDegreeBound = a->genDegreeBound;
    B->origin = "opposite";
    B->prod.resize((std::size_t)B->N + 1);
    for (long long d1 = 0; d1 <= B->N; ++d1) {
        B->prod[(std::size_t)d1].resize((std::size_t)(B->N - d1) + 1);
        for (long long d2 = 0; d1 + d2 <= B->N; ++d2) {
            std::size_t n1 = (std::size_t)B->dims[(std::size_t)d1],
                        n2 = (std::size_t)B->dims[(std::size_t)d2];
            const Mat& src = a->product(d2, d1);
            Mat t(a->field, src.rows(), n1 * n2);
            for (std::size_t i = 0; i < n1; ++i)
                for (std::size_t j = 0; j < n2; ++j) {
                    std::size_t from = j * n1 + i, to = i * n2 + j;
                    for (std::size_t r = 0; r < src.rows(); ++r)
                        if (!src.entryZero(r, from)) {
                            if (a->field.rational())
                                t.addRational(r, to, src.getq(r, from));
                            else
                                t.addP(r, to, src.get(r, from));
                        }
                }
            B->prod[(std::size_t)d1][(std::size_t)d2] = std::move(t);
        }
    }
    return B;
}

const A0Data& a0_structure(const AlgebraHandle& a) {
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (a->a0) return *a->a0;
    std::size_t n = (std::size_t)a->dims[0];
    long long p = (long long)a->field.p;
    if (p != 0 && p <= (long long)n)
        throw RadicalUnsupported("trace-form radical needs char 0 or p > dim A_0");
    const Mat& t00 = a->product(0, 0);
    // left multiplication operators
    std::vector<Mat> L;
    for (std::size_t u = 0; u < n; ++u) {
        Mat lu(a->field, n, n);
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t r = 0; r < n; ++r) {
                if (t00.entryZero(r, u * n + j)) continue;
                if (a->field.rational())
                    lu.addRational(r, j, t00.getq(r, u * n + j));
                else
                    lu.addP(r, j, t00.get(r, u * n + j));
            }
        L.push_back(std::move(lu));
    }
    Mat gram(a->field, n, n);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = 0; v < n; ++v) {
            Mat m = L[u].mul(L[v]);
            if (a->field.rational()) {
                mpq_class tr = 0;
                for (std::size_t r = 0; r < n; ++r) tr += m.getq(r, r);
                gram.setRational(u, v, tr);
            } else {
                long long tr = 0;
                for (std::size_t r = 0; r < n; ++r) tr = (tr + m.get(r, r)) % p;
                gram.set(u, v, tr);
            }
        }
    auto data = std::make_shared<A0Data>();
    data->radicalBasis = rref(gram).kernel;
    data->semisimple = data->radicalBasis.cols() == 0;
    long long quotientDim = (long long)n - (long long)data->radicalBasis.cols();
    data->basic = quotientDim == (long long)a->nv();
    data->multiplicity.assign(a->nv(), 0);
    for (std::size_t v = 0; v < a->nv(); ++v) {
        long long blockDim = 0;
        std::vector<std::size_t> blockRows;
        for (std::size_t i = 0; i < n; ++i)
            if (a->bSrc[0][i] == v && a->bTgt[0][i] == v) {
                ++blockDim;
                blockRows.push_back(i);
            }
        Mat sub(a->field, blockRows.size(), data->radicalBasis.cols());
        for (std::size_t r = 0; r < blockRows.size(); ++r)
            for (std::size_t c = 0; c < data->radicalBasis.cols(); ++c)
                if (!data->radicalBasis.entryZero(blockRows[r], c)) {
                    if (a->field.rational())
                        sub.addRational(r, c, data->radicalBasis.getq(blockRows[r], c));
                    else
                        sub.addP(r, c, data->radicalBasis.get(blockRows[r], c));
                }
        long long simpleDim = blockDim - (long long)rref(sub).rank;
        long long root = 0;
        while (root * root < simpleDim) ++root;
        data->multiplicity[v] = root * root == simpleDim ? root : 0;
    }
    a->a0 = data;
    return *a->a0;
}

AlgebraHandle endo_twist(const AlgebraHandle& a, std::vector<long long> p) {
    if (p.size() != a->nv()) throw BadInput("twist vector length must match the vertex count");
    const A0Data& z = a0_structure(a);
    if (!z.basic || !z.semisimple)
        throw NotBasic("endo_twist requires a basic algebra with semisimple degree-0 part");
    long long pmin = p[0], pmax = p[0];
    for (auto v : p) {
        pmin = std::min(pmin, v);
        pmax = std::max(pmax, v);
    }
    long long spread = pmax - pmin;
    long long bn = a->N - spread;
    // twisted degree of e_i A_d e_j is d + p[i] - p[j]
    for (long long d = 0; d <= a->N; ++d)
        for (std::size_t i = 0; i < (std::size_t)a->dims[(std::size_t)d]; ++i) {
            long long nd = d + p[a->bSrc[(std::size_t)d][i]] - p[a->bTgt[(std::size_t)d][i]];
            if (nd < 0)
                throw NotNNGraded("twist sends a nonzero block to negative degree");
        }
    if (bn < 0) throw NotNNGraded("twist spread exceeds the window");

    auto B = std::make_shared<TruncatedAlgebra>();
    B->field = a->field;
    B->N = bn;
    B->vertexNames = a->vertexNames;
    B->dims.assign((std::size_t)bn + 1, 0);
    B->bSrc.resize((std::size_t)bn + 1);
    B->bTgt.resize((std::size_t)bn + 1);
    B->bName.resize((std::size_t)bn + 1);
    // mapping (a-degree, a-index) -> b-index, and the reverse per b-degree
    std::map<std::pair<long long, std::size_t>, std::pair<long long, std::size_t>> fwd;
    std::vector<std::vector<std::pair<long long, std::size_t>>> back((std::size_t)bn + 1);
    for (long long d = 0; d <= a->N; ++d)
        for (std::size_t i = 0; i < (std::size_t)a->dims[(std::size_t)d]; ++i) {
            long long nd = d + p[a->bSrc[(std::size_t)d][i]] - p[a->bTgt[(std::size_t)d][i]];
            if (nd > bn) continue;  // falls outside the shrunken window
            fwd[{d, i}] = {nd, (std::size_t)B->dims[(std::size_t)nd]};
            back[(std::size_t)nd].emplace_back(d, i);
            B->bSrc[(std::size_t)nd].push_back(a->bSrc[(std::size_t)d][i]);
            B->bTgt[(std::size_t)nd].push_back(a->bTgt[(std::size_t)d][i]);
            B->bName[(std::size_t)nd].push_back(a->bName[(std::size_t)d][i]);
            ++B->dims[(std::size_t)nd];
        }
    B->idem = Mat(a->field, (std::size_t)B->dims[0], a->nv());
    for (std::size_t v = 0; v < a->nv(); ++v)
        for (std::size_t i = 0; i < a->idem.rows(); ++i)
            if (!a->idem.entryZero(i, v)) {
                auto it = fwd.find({0, i});
                if (it == fwd.end() || it->second.first != 0)
                    throw std::logic_error("degree-0 idempotent moved by the twist");
                if (a->field.rational())
                    B->idem.addRational(it->second.second, v, a->idem.getq(i, v));
                else
                    B->idem.addP(it->second.second, v, a->idem.get(i, v));
            }
    B->genDegreeBound = a->genDegreeBound + spread;
    B->origin = "twist";
    B->prod.resize((std::size_t)bn + 1);
    for (long long d1 = 0; d1 <= bn; ++d1) {
        B->prod[(std::size_t)d1].resize((std::size_t)(bn - d1) + 1);
        for (long long d2 = 0; d1 + d2 <= bn; ++d2) {
            std::size_t n1 = (std::size_t)B->dims[(std::size_t)d1],
                        n2 = (std::size_t)B->dims[(std::size_t)d2];
            Mat t(a->field, (std::size_t)B->dims[(std::size_t)(d1 + d2)], n1 * n2);
            for (std::size_t i = 0; i < n1; ++i) {
                auto [ad1, ai] = back[(std::size_t)d1][i];
                for (std::size_t j = 0; j < n2; ++j) {
                    auto [ad2, aj] = back[(std::size_t)d2][j];
                    if (a->bTgt[(std::size_t)ad1][ai] != a->bSrc[(std::size_t)ad2][aj]) continue;
                    if (ad1 + ad2 > a->N)
                        throw std::logic_error("twist product escapes the source window");
                    const Mat& src = a->product(ad1, ad2);
                    std::size_t col = ai * (std::size_t)a->dims[(std::size_t)ad2] + aj;
                    for (std::size_t r = 0; r < src.rows(); ++r) {
                        if (src.entryZero(r, col)) continue;
                        auto it = fwd.find({ad1 + ad2, r});
                        if (it == fwd.end() || it->second.first != d1 + d2)
                            throw std::logic_error("twist product lands outside its degree");
                        if (a->field.rational())
                            t.addRational(it->second.second, i * n2 + j, src.getq(r, col));
                        else
                            t.addP(it->second.second, i * n2 + j, src.get(r, col));
                    }
                }
            }
            B->prod[(std::size_t)d1][(std::size_t)d2] = std::move(t);
        }
    }
    return B;
}

std::vector<std::vector<std::vector<long long>>> hilbert(const TruncatedAlgebra& a) {
    std::vector<std::vector<std::vector<long long>>> h(
        (std::size_t)a.N + 1,
        std::vector<std::vector<long long>>(a.nv(), std::vector<long long>(a.nv(), 0)));
    for (long long d = 0; d <= a.N; ++d)
        for (std::size_t i = 0; i < (std::size_t)a.dims[(std::size_t)d]; ++i)
            ++h[(std::size_t)d][a.bSrc[(std::size_t)d][i]][a.bTgt[(std::size_t)d][i]];
    return h;
}

}  // namespace gradreg
