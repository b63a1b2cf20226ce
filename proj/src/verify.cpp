#include "gradreg/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gradreg/errors.hpp"

namespace gradreg {

namespace {

constexpr long long kBig = ExtendedDegree::kInf;

// splitmix64; the whole suite must replay identically from the master seed,
// so no std:: engines (their streams are implementation-defined)
struct Rng {
    std::uint64_t s;
    explicit Rng(std::uint64_t seed) : s(seed) {}
    std::uint64_t next() {
        s += 0x9e3779b97f4a7c15ULL;
        std::uint64_t z = s;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d49bd1f3999db3ULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
    long long range(long long a, long long b) {  // inclusive
        return a + (long long)below((std::uint64_t)(b - a + 1));
    }
};

// per-(check, index) seed; independent of which checks are enabled
std::uint64_t instanceSeed(std::uint64_t master, int check, long long i) {
    Rng r(master + 0x100000001b3ULL * (std::uint64_t)check +
          0x9e3779b97f4a7c15ULL * (std::uint64_t)i);
    return r.next();
}

long long satAdd(long long a, long long b) {
    if (a >= kBig || b >= kBig) return kBig;
    if (a <= -kBig || b <= -kBig) return -kBig;
    return a + b;
}

// a censored infinity means "ran off the window", not a proven infinity:
// widen it to the uninformative interval before comparing
ExtendedDegree widened(const RegValue& v) {
    if (v.status == RegStatus::Censored &&
        (v.value.kind == ExtendedDegree::Kind::PlusInf ||
         v.value.kind == ExtendedDegree::Kind::MinusInf))
        return ExtendedDegree::atLeast(-kBig);
    return v.value;
}

// degenerate readings are exact (sup/inf of an empty support); only
// censoring blocks a fails verdict
bool exactish(const RegValue& v) { return v.status != RegStatus::Censored; }

Verdict vle(const RegValue& l, const RegValue& r) {
    Verdict v = compareLE(widened(l), widened(r));
    if (v == Verdict::Fails && !(exactish(l) && exactish(r))) return Verdict::Inconclusive;
    return v;
}

Verdict veq(const RegValue& l, const RegValue& r) {
    Verdict v = compareEQ(widened(l), widened(r));
    if (v == Verdict::Fails && !(exactish(l) && exactish(r))) return Verdict::Inconclusive;
    return v;
}

RegValue exactVal(ExtendedDegree d) { return {d, RegStatus::Exact, std::nullopt}; }

RegValue negOf(RegValue v) {
    v.value = v.value.negated();
    return v;
}

// raw interval triple for the triangle legs, where max() of readings leaves
// the representable kinds
struct Iv {
    long long lo, hi;
    bool cens;
};

Iv ivOf(const RegValue& v) {
    ExtendedDegree w = widened(v);
    return {w.lo(), w.hi(), v.status == RegStatus::Censored};
}

Iv ivMax(const Iv& a, const Iv& b) {
    return {std::max(a.lo, b.lo), std::max(a.hi, b.hi), a.cens || b.cens};
}

Iv ivShift(const Iv& a, long long k) { return {satAdd(a.lo, k), satAdd(a.hi, k), a.cens}; }

Verdict ivLE(const Iv& l, const Iv& r) {
    if (l.hi <= r.lo) return Verdict::Holds;
    if (l.lo > r.hi) return (l.cens || r.cens) ? Verdict::Inconclusive : Verdict::Fails;
    return Verdict::Inconclusive;
}

// best representable summary of an endpoint pair (reporting only; verdicts
// are computed on the raw endpoints)
ExtendedDegree encodeIv(long long lo, long long hi) {
    if (lo <= -kBig && hi >= kBig) return ExtendedDegree::atLeast(-kBig);
    if (lo < hi && lo > -kBig && hi < kBig) return ExtendedDegree::atLeast(lo);
    return fromInterval(lo, hi);
}

long long coefFor(Rng& r, const FieldSpec& f) {
    return f.rational() ? r.range(-3, 3) : (long long)r.below(f.p);
}

}  // namespace

ModuleHandle random_module(const AlgebraHandle& a, std::uint64_t seed,
                           const RandomModuleParams& p, long long N) {
    if (p.gens < 0 || p.rels < 0 || p.genLo > p.genHi || p.relLo > p.relHi)
        throw BadInput("random_module: malformed parameter ranges");
    Rng r(seed);
    std::size_t nv = a->nv();

    std::vector<std::pair<std::size_t, long long>> gens;
    for (long long t = 0; t < p.gens; ++t) {
        std::size_t v = (std::size_t)r.below(nv);
        long long d = r.range(p.genLo, p.genHi);
        gens.push_back({v, d});
    }
    ModuleHandle F0 = free_module(a, gens, N);
    if (p.gens == 0 || p.rels == 0) return F0;

    // a relation below every generator (or above the window) is the zero
    // relation; drop it rather than move it, keeping the draw stream fixed
    std::vector<std::pair<std::size_t, long long>> rels;
    for (long long t = 0; t < p.rels; ++t) {
        std::size_t v = (std::size_t)r.below(nv);
        long long d = r.range(p.relLo, p.relHi);
        if (d >= F0->lo && d <= F0->N) rels.push_back({v, d});
    }
    if (rels.empty()) return F0;
    ModuleHandle F1 = free_module(a, rels, N);

    // a relation at (v, d) is a random element of e_v F0_d: coefficients on
    // the rows labeled v, zero elsewhere
    std::vector<Mat> images;
    for (auto& [v, d] : rels) {
        Mat col(a->field, (std::size_t)F0->dim(d), 1);
        if (d >= F0->lo && d <= F0->N) {
            const auto& lab = F0->labelAt(d);
            for (std::size_t i = 0; i < lab.size(); ++i)
                if (lab[i] == v) col.set(i, 0, coefFor(r, a->field));
        }
        images.push_back(col);
    }
    GradedMap f = map_between_free(F1, F0, images);
    if (!validate_map(f)) throw std::logic_error("random_module: invalid relation map");
    return cokernel_module(f, N);
}

SuiteFacts facts_for(const CatalogEntry& e) {
    SuiteFacts f;
    f.name = e.name;
    f.noetherian = e.noetherian;
    f.bdc = e.bdc;
    f.gorenstein = e.gorenstein;
    return f;
}

SuiteReport run_theorem_suite(const AlgebraHandle& a, const SuiteConfig& cfg) {
    const Bounds& b = cfg.bounds;
    if (b.H < 0 || b.N < 1 || b.N > a->N) throw BadInput("suite bounds exceed the algebra window");

    SuiteReport rep;
    rep.algebra = cfg.facts.name;
    rep.masterSeed = cfg.masterSeed;
    rep.instances = cfg.instances;
    rep.bounds = b;

    bool a0ss = false;
    try {
        const A0Data& z = a0_structure(a);
        a0ss = z.semisimple && z.basic;
    } catch (const GradregError&) {
        a0ss = false;
    }
    const bool noeth = cfg.facts.noetherian;
    const bool bdc = cfg.facts.bdc;

    std::optional<ASGorensteinData> G;
    if (cfg.facts.gorenstein) {
        try {
            G = verify_gorenstein(a, *cfg.facts.gorenstein, b.H, b.N);
        } catch (const GradregError&) {
            G.reset();
        }
    }
    const ASGorensteinData* Gp = G ? &*G : nullptr;
    AlgebraHandle aop = opposite(a);

    RandomModuleParams prm;
    RegValue zero = exactVal(ExtendedDegree::integer(0));

    auto enabled = [&](const std::string& id) {
        return cfg.only.empty() ||
               std::find(cfg.only.begin(), cfg.only.end(), id) != cfg.only.end();
    };

    auto emit = [&](std::string check, std::string inst, std::uint64_t seed, ExtendedDegree l,
                    ExtendedDegree r, Verdict v, std::string wit) {
        rep.outcomes.push_back(
            {std::move(check), std::move(inst), seed, l, r, v, std::move(wit)});
    };
    auto gateOff = [&](const char* check, const char* why) {
        emit(check, "gate", 0, ExtendedDegree::minusInf(), ExtendedDegree::minusInf(),
             Verdict::Skipped, why);
    };

    // shared algebra-level readings, computed once on first gated-in use
    std::optional<RegularityReport> cmACache;
    auto cmA = [&]() -> const RegularityReport& {
        if (!cmACache)
            cmACache = regs_of_module(algebra_module(a, b.N), b, CmStrategy::Limit, Gp);
        return *cmACache;
    };
    std::optional<TorregResult> torSCache;
    auto torS = [&]() -> const TorregResult& {
        if (!torSCache)
            torSCache = torreg_from_betti(
                betti(minimal_resolution(trivial_module(a, b.N), b.H, b.N)));
        return *torSCache;
    };
    std::optional<ASRegResult> asrCache;
    auto asr = [&]() -> const ASRegResult& {
        if (!asrCache) asrCache = asreg(a, b, Gp);
        return *asrCache;
    };

    // one outcome per thrown instance; logic_error is a bug and propagates
    auto forInstances = [&](int check, const char* instPrefix, auto&& body) {
        for (long long i = 0; i < cfg.instances; ++i) {
            std::uint64_t seed = instanceSeed(cfg.masterSeed, check, i);
            std::string inst = std::string(instPrefix) + "#" + std::to_string(i);
            try {
                body(seed, inst);
            } catch (const GradregError& e) {
                emit("C" + std::to_string(check), inst, seed, ExtendedDegree::minusInf(),
                     ExtendedDegree::minusInf(), Verdict::Skipped,
                     std::string("error [") + e.kind + "]: " + e.what());
            }
        }
    };

    auto torregOf = [&](const ModuleHandle& M) {
        return torreg_from_betti(betti(minimal_resolution(M, b.H, b.N)));
    };

    // ---- C1: extreg(M) = -ideg(M) (semisimple degree-zero part) ----
    if (enabled("C1")) {
        if (!a0ss)
            gateOff("C1", "needs semisimple A_0");
        else
            forInstances(1, "M", [&](std::uint64_t seed, const std::string& inst) {
                ModuleHandle M = random_module(a, seed, prm, b.N);
                ModuleDegrees md = sdeg_ideg(*M);
                if (md.degenerate) {
                    emit("C1", inst, seed, ExtendedDegree::minusInf(),
                         ExtendedDegree::minusInf(), Verdict::Skipped, "zero module");
                    return;
                }
                TorregResult t = torregOf(M);
                RegValue nid = exactVal(md.ideg.negated());
                emit("C1", inst, seed, t.torreg.value, nid.value, veq(t.torreg, nid),
                     "extreg(M) == -ideg(M)");
            });
    }

    // ---- C2: extreg(M) >= -ideg(M), unconditional ----
    if (enabled("C2")) {
        forInstances(2, "M", [&](std::uint64_t seed, const std::string& inst) {
            ModuleHandle M = random_module(a, seed, prm, b.N);
            ModuleDegrees md = sdeg_ideg(*M);
            if (md.degenerate) {
                emit("C2", inst, seed, ExtendedDegree::minusInf(), ExtendedDegree::minusInf(),
                     Verdict::Skipped, "zero module");
                return;
            }
            TorregResult t = torregOf(M);
            RegValue nid = exactVal(md.ideg.negated());
            emit("C2", inst, seed, t.torreg.value, nid.value, vle(nid, t.torreg),
                 "extreg(M) >= -ideg(M)");
        });
    }

    // ---- C3: Extreg(M) vs -ideg of gExt(M, A) ----
    if (enabled("C3")) {
        forInstances(3, "M", [&](std::uint64_t seed, const std::string& inst) {
            ModuleHandle M = random_module(a, seed, prm, b.N);
            ModuleDegrees md = sdeg_ideg(*M);
            if (md.degenerate) {
                emit("C3", inst, seed, ExtendedDegree::minusInf(), ExtendedDegree::minusInf(),
                     Verdict::Skipped, "zero module");
                return;
            }
            BettiTable B = betti(minimal_resolution(M, b.H, b.N));
            TorregResult t = torreg_from_betti(B);
            GradedExtTable E = ext_table(M, algebra_module(a, b.N), b.H, b.N);
            RegValue nid = negOf(table_ideg(E));
            emit("C3", inst, seed, t.Torreg.value, nid.value, vle(nid, t.Torreg),
                 "Extreg(M) >= -ideg(gExt(M, A))");
            if (B.terminated && a0ss)
                emit("C3", inst, seed, t.Torreg.value, nid.value, veq(t.Torreg, nid),
                     "equality at finite pdim");
        });
    }

    // ---- C4: CMreg(M) = Exreg(M) under a balanced dualizing complex ----
    if (enabled("C4")) {
        if (!(bdc && a0ss))
            gateOff("C4", "needs a balanced dualizing complex and semisimple A_0");
        else
            forInstances(4, "M", [&](std::uint64_t seed, const std::string& inst) {
                ModuleHandle M = random_module(a, seed, prm, b.N);
                if (sdeg_ideg(*M).degenerate) {
                    emit("C4", inst, seed, ExtendedDegree::minusInf(),
                         ExtendedDegree::minusInf(), Verdict::Skipped, "zero module");
                    return;
                }
                RegularityReport rm = regs_of_module(M, b, CmStrategy::Limit, Gp);
                emit("C4", inst, seed, rm.CMreg.value, rm.Exreg.value,
                     vle(rm.CMreg, rm.Exreg), "Exreg(M) >= CMreg(M)");
                emit("C4", inst, seed, rm.CMreg.value, rm.Exreg.value,
                     veq(rm.CMreg, rm.Exreg), "CMreg(M) == Exreg(M)");
            });
    }

    // ---- C5: CMreg(M) <= Torreg(M) + CMreg(A), Torreg(M) <= CMreg(M) +
    //          Torreg(S), ASreg(A) >= 0 (noetherian + bdc) ----
    if (enabled("C5")) {
        if (!(noeth && bdc))
            gateOff("C5", "needs noetherian and a balanced dualizing complex");
        else {
            try {
                emit("C5", "A", 0, asr().ASreg.value, ExtendedDegree::integer(0),
                     vle(zero, asr().ASreg), "ASreg(A) >= 0");
            } catch (const GradregError& e) {
                emit("C5", "A", 0, ExtendedDegree::minusInf(), ExtendedDegree::minusInf(),
                     Verdict::Skipped, std::string("error [") + e.kind + "]: " + e.what());
            }
            forInstances(5, "M", [&](std::uint64_t seed, const std::string& inst) {
                ModuleHandle M = random_module(a, seed, prm, b.N);
                if (sdeg_ideg(*M).degenerate) {
                    emit("C5", inst, seed, ExtendedDegree::minusInf(),
                         ExtendedDegree::minusInf(), Verdict::Skipped, "zero module");
                    return;
                }
                RegularityReport rm = regs_of_module(M, b, CmStrategy::Limit, Gp);
                RegValue r1 = reg_sum(rm.Torreg, cmA().CMreg);
                emit("C5", inst, seed, rm.CMreg.value, r1.value, vle(rm.CMreg, r1),
                     "CMreg(M) <= Torreg(M) + CMreg(A)");
                RegValue r2 = reg_sum(rm.CMreg, torS().Torreg);
                emit("C5", inst, seed, rm.Torreg.value, r2.value, vle(rm.Torreg, r2),
                     "Torreg(M) <= CMreg(M) + Torreg(S)");
            });
        }
    }

    // ---- C6: the truncation M_{>=r}(r + p), r = CMreg(M), p = Torreg(S),
    //          has Torreg <= 0 and a linear resolution ----
    if (enabled("C6")) {
        if (!(bdc && a0ss && Gp))
            gateOff("C6", "needs a balanced dualizing complex, semisimple A_0, and "
                          "Gorenstein data");
        else {
            RegValue pS;
            bool pOk = false;
            try {
                pS = torS().Torreg;
                pOk = pS.status == RegStatus::Exact &&
                      pS.value.kind == ExtendedDegree::Kind::Int;
            } catch (const GradregError&) {
            }
            if (!pOk)
                emit("C6", "S", 0, pS.value, ExtendedDegree::minusInf(), Verdict::Inconclusive,
                     "Torreg(S) not exact within the window");
            else
                forInstances(6, "M", [&](std::uint64_t seed, const std::string& inst) {
                    ModuleHandle M = random_module(a, seed, prm, b.N);
                    if (sdeg_ideg(*M).degenerate) {
                        emit("C6", inst, seed, ExtendedDegree::minusInf(),
                             ExtendedDegree::minusInf(), Verdict::Skipped, "zero module");
                        return;
                    }
                    RegularityReport rm = regs_of_module(M, b, CmStrategy::Limit, Gp);
                    if (rm.CMreg.status != RegStatus::Exact ||
                        rm.CMreg.value.kind != ExtendedDegree::Kind::Int) {
                        emit("C6", inst, seed, rm.CMreg.value, ExtendedDegree::minusInf(),
                             Verdict::Inconclusive, "CMreg(M) not exact within the window");
                        return;
                    }
                    long long r = rm.CMreg.value.value;
                    long long p = pS.value.value;
                    if (r > M->N || M->N - r - p < 1) {
                        emit("C6", inst, seed, rm.CMreg.value, ExtendedDegree::minusInf(),
                             Verdict::Skipped, "truncation leaves no usable window");
                        return;
                    }
                    ModuleHandle Mr = shift_module(truncate_below(M, r), r + p);
                    if (sdeg_ideg(*Mr).degenerate) {
                        emit("C6", inst, seed, rm.CMreg.value, ExtendedDegree::minusInf(),
                             Verdict::Skipped, "empty truncation");
                        return;
                    }
                    BettiTable Br = betti(minimal_resolution(Mr, b.H, Mr->N));
                    TorregResult tr = torreg_from_betti(Br);
                    emit("C6", inst, seed, tr.Torreg.value, ExtendedDegree::integer(0),
                         vle(tr.Torreg, zero), "Torreg(M_{>=r}(r+p)) <= 0");
                    emit("C6", inst, seed, tr.Torreg.value, ExtendedDegree::integer(0),
                         is_linear(Br), "M_{>=r}(r+p) has a linear resolution");
                });
        }
    }

    // ---- C7: triangle bounds over 0 -> K -> F -> M -> 0, all eight
    //          regularities, unconditional ----
    if (enabled("C7")) {
        forInstances(7, "ses", [&](std::uint64_t seed, const std::string& inst) {
            ModuleHandle M = random_module(a, seed, prm, b.N);
            if (sdeg_ideg(*M).degenerate) {
                emit("C7", inst, seed, ExtendedDegree::minusInf(), ExtendedDegree::minusInf(),
                     Verdict::Skipped, "zero module");
                return;
            }
            GradedMap cover = minimal_cover(M, b.N);
            ModuleHandle F = cover.X;
            ModuleHandle K = kernel(cover, b.N);
            RegularityReport rK = regs_of_module(K, b, CmStrategy::Limit, Gp);
            RegularityReport rF = regs_of_module(F, b, CmStrategy::Limit, Gp);
            RegularityReport rM = regs_of_module(M, b, CmStrategy::Limit, Gp);

            struct Leg {
                const char* name;
                RegValue RegularityReport::*field;
                long long s;  // sub-leg shift on the quotient term
            };
            static const Leg legs[] = {
                {"CMreg", &RegularityReport::CMreg, 1},
                {"cmreg", &RegularityReport::cmreg, -1},
                {"Torreg", &RegularityReport::Torreg, 1},
                {"torreg", &RegularityReport::torreg, -1},
                {"Extreg", &RegularityReport::Extreg, 1},
                {"extreg", &RegularityReport::extreg, -1},
                {"Exreg", &RegularityReport::Exreg, 1},
                {"exreg", &RegularityReport::exreg, -1},
            };
            for (const Leg& lg : legs) {
                Iv k = ivOf(rK.*lg.field), f = ivOf(rF.*lg.field), m = ivOf(rM.*lg.field);
                std::string n(lg.name);
                const char* off = lg.s > 0 ? "+1" : "-1";
                Iv r1 = ivMax(k, m);
                emit("C7", inst, seed, encodeIv(f.lo, f.hi), encodeIv(r1.lo, r1.hi),
                     ivLE(f, r1), n + "(mid) <= max(sub, quot)");
                Iv r2 = ivMax(f, ivShift(m, lg.s));
                emit("C7", inst, seed, encodeIv(k.lo, k.hi), encodeIv(r2.lo, r2.hi),
                     ivLE(k, r2), n + "(sub) <= max(mid, quot" + off + ")");
                Iv r3 = ivMax(f, ivShift(k, -lg.s));
                emit("C7", inst, seed, encodeIv(m.lo, m.hi), encodeIv(r3.lo, r3.hi),
                     ivLE(m, r3), n + "(quot) <= max(mid, sub" + (lg.s > 0 ? "-1" : "+1") +
                                      ")");
            }
        });
    }

    // ---- C8: ideg of the derived tensor; equality needs every vertex
    //          component of Y to sit at ideg(Y) ----
    if (enabled("C8")) {
        if (!a0ss)
            gateOff("C8", "needs semisimple A_0");
        else
            forInstances(8, "pair", [&](std::uint64_t seed, const std::string& inst) {
                ModuleHandle X = random_module(a, seed, prm, b.N);
                ModuleHandle Y = random_module(aop, seed ^ 0x5851f42d4c957f2dULL, prm, b.N);
                ModuleDegrees mx = sdeg_ideg(*X), my = sdeg_ideg(*Y);
                if (mx.degenerate || my.degenerate) {
                    emit("C8", inst, seed, ExtendedDegree::minusInf(),
                         ExtendedDegree::minusInf(), Verdict::Skipped, "zero factor");
                    return;
                }
                GradedTorTable T = tor_table(Y, X, b.H, b.N);
                RegValue it = table_ideg(T);
                RegValue sum = reg_sum(exactVal(mx.ideg), exactVal(my.ideg));
                emit("C8", inst, seed, it.value, sum.value, vle(sum, it),
                     "ideg(Y tensor X) >= ideg(X) + ideg(Y)");
                std::vector<long long> bot(a->nv(), kBig);
                for (auto& [d, lab] : Y->labels)
                    for (std::size_t rr = 0; rr < lab.size(); ++rr)
                        bot[lab[rr]] = std::min(bot[lab[rr]], d);
                bool even = std::all_of(bot.begin(), bot.end(), [&](long long v) {
                    return v == my.ideg.value;
                });
                if (even)
                    emit("C8", inst, seed, it.value, sum.value, veq(it, sum),
                         "equality when every ideg(Y e_i) = ideg(Y)");
                else
                    emit("C8", inst, seed, it.value, sum.value, Verdict::Skipped,
                         "vertex components of Y bottom out unevenly");
            });
    }

    // ---- C9: -ideg(gExt(X, Y)) <= Extreg(X) - ideg(Y), unconditional ----
    if (enabled("C9")) {
        forInstances(9, "pair", [&](std::uint64_t seed, const std::string& inst) {
            ModuleHandle X = random_module(a, seed, prm, b.N);
            ModuleHandle Y = random_module(a, seed ^ 0xda3e39cb94b95bdbULL, prm, b.N);
            ModuleDegrees mx = sdeg_ideg(*X), my = sdeg_ideg(*Y);
            if (mx.degenerate || my.degenerate) {
                emit("C9", inst, seed, ExtendedDegree::minusInf(), ExtendedDegree::minusInf(),
                     Verdict::Skipped, "zero factor");
                return;
            }
            TorregResult t = torregOf(X);
            GradedExtTable E = ext_table(X, Y, b.H, b.N);
            RegValue nid = negOf(table_ideg(E));
            RegValue rhs = reg_sum(t.Torreg, exactVal(my.ideg.negated()));
            emit("C9", inst, seed, nid.value, rhs.value, vle(nid, rhs),
                 "-ideg(gExt(X, Y)) <= Extreg(X) - ideg(Y)");
        });
    }

    // ---- C10: the bottom generator is a cocycle: beta_0(M, ideg M) > 0,
    //           and minimality lands d_1 inside J P_0, so it survives to
    //           gHom(P_0, S) ----
    if (enabled("C10")) {
        if (!a0ss)
            gateOff("C10", "needs semisimple A_0");
        else
            forInstances(10, "M", [&](std::uint64_t seed, const std::string& inst) {
                ModuleHandle M = random_module(a, seed, prm, b.N);
                ModuleDegrees md = sdeg_ideg(*M);
                if (md.degenerate) {
                    emit("C10", inst, seed, ExtendedDegree::minusInf(),
                         ExtendedDegree::minusInf(), Verdict::Skipped, "zero module");
                    return;
                }
                BettiTable B = betti(minimal_resolution(M, 0, b.N));
                long long cnt = 0;
                for (std::size_t v = 0; v < B.nv; ++v) cnt += B.at(0, md.ideg.value, v);
                emit("C10", inst, seed, ExtendedDegree::integer(cnt),
                     ExtendedDegree::integer(1),
                     cnt >= 1 ? Verdict::Holds : Verdict::Fails,
                     "generator at (0, ideg M) realizes extreg = -ideg");
            });
    }

    // ---- C11: when ASreg(A) = 0, CMreg(M) = Torreg(M) + CMreg(A) ----
    if (enabled("C11")) {
        if (!(bdc && a0ss && Gp))
            gateOff("C11", "needs a balanced dualizing complex, semisimple A_0, and "
                           "Gorenstein data");
        else {
            RegValue as;
            bool zeroAs = false;
            try {
                as = asr().ASreg;
                zeroAs = as.status == RegStatus::Exact && as.value == ExtendedDegree::integer(0);
            } catch (const GradregError&) {
            }
            if (!zeroAs)
                emit("C11", "A", 0, as.value, ExtendedDegree::integer(0), Verdict::Skipped,
                     "ASreg(A) != 0 within the window; equivalence not applicable");
            else
                forInstances(11, "M", [&](std::uint64_t seed, const std::string& inst) {
                    ModuleHandle M = random_module(a, seed, prm, b.N);
                    if (sdeg_ideg(*M).degenerate) {
                        emit("C11", inst, seed, ExtendedDegree::minusInf(),
                             ExtendedDegree::minusInf(), Verdict::Skipped, "zero module");
                        return;
                    }
                    RegularityReport rm = regs_of_module(M, b, CmStrategy::Limit, Gp);
                    RegValue rhs = reg_sum(rm.Torreg, cmA().CMreg);
                    emit("C11", inst, seed, rm.CMreg.value, rhs.value, veq(rm.CMreg, rhs),
                         "CMreg(M) == Torreg(M) + CMreg(A) at ASreg(A) = 0");
                });
        }
    }

    // ---- C12: the lower-variant bounds (noetherian + bdc) ----
    if (enabled("C12")) {
        if (!(noeth && bdc))
            gateOff("C12", "needs noetherian and a balanced dualizing complex");
        else {
            try {
                emit("C12", "A", 0, asr().asreg.value, ExtendedDegree::integer(0),
                     vle(zero, asr().asreg), "asreg(A) >= 0");
            } catch (const GradregError& e) {
                emit("C12", "A", 0, ExtendedDegree::minusInf(), ExtendedDegree::minusInf(),
                     Verdict::Skipped, std::string("error [") + e.kind + "]: " + e.what());
            }
            forInstances(12, "M", [&](std::uint64_t seed, const std::string& inst) {
                ModuleHandle M = random_module(a, seed, prm, b.N);
                if (sdeg_ideg(*M).degenerate) {
                    emit("C12", inst, seed, ExtendedDegree::minusInf(),
                         ExtendedDegree::minusInf(), Verdict::Skipped, "zero module");
                    return;
                }
                RegularityReport rm = regs_of_module(M, b, CmStrategy::Limit, Gp);
                RegValue r1 = reg_sum(rm.cmreg, torS().torreg);
                emit("C12", inst, seed, rm.extreg.value, r1.value, vle(rm.extreg, r1),
                     "extreg(M) <= cmreg(M) + extreg(S)");
                RegValue r2 = reg_sum(rm.extreg, cmA().cmreg);
                emit("C12", inst, seed, rm.cmreg.value, r2.value, vle(rm.cmreg, r2),
                     "cmreg(M) <= extreg(M) + cmreg(A)");
            });
        }
    }

    // ---- C13: pdim M + depth M = depth A on finite-pdim samples ----
    if (enabled("C13")) {
        if (!(noeth && a0ss))
            gateOff("C13", "needs noetherian and semisimple A_0");
        else
            forInstances(13, "M", [&](std::uint64_t seed, const std::string& inst) {
                ModuleHandle M = random_module(a, seed, prm, b.N);
                if (sdeg_ideg(*M).degenerate) {
                    emit("C13", inst, seed, ExtendedDegree::minusInf(),
                         ExtendedDegree::minusInf(), Verdict::Skipped, "zero module");
                    return;
                }
                RegularityReport rm = regs_of_module(M, b, CmStrategy::Limit, Gp);
                if (rm.pdim.status != RegStatus::Exact ||
                    rm.pdim.value.kind != ExtendedDegree::Kind::Int) {
                    emit("C13", inst, seed, rm.pdim.value, ExtendedDegree::minusInf(),
                         Verdict::Skipped, "pdim not resolved finite within the window");
                    return;
                }
                RegValue lhs = reg_sum(rm.pdim, rm.depth);
                RegValue dA = cmA().depth;
                emit("C13", inst, seed, lhs.value, dA.value, veq(lhs, dA),
                     "pdim(M) + depth(M) == depth(A)");
            });
    }

    auto num = [](const CheckOutcome& o) { return std::stoi(o.check.substr(1)); };
    std::stable_sort(rep.outcomes.begin(), rep.outcomes.end(),
                     [&](const CheckOutcome& x, const CheckOutcome& y) {
                         int nx = num(x), ny = num(y);
                         if (nx != ny) return nx < ny;
                         return x.seed < y.seed;
                     });
    for (const CheckOutcome& o : rep.outcomes) switch (o.verdict) {
            case Verdict::Holds: ++rep.holds; break;
            case Verdict::Fails: ++rep.fails; break;
            case Verdict::Inconclusive: ++rep.inconclusive; break;
            case Verdict::Skipped: ++rep.skipped; break;
        }
    return rep;
}

}  // namespace gradreg
