#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gradreg/algebra.hpp"
#include "gradreg/errors.hpp"
#include "gradreg/gmod.hpp"
#include "gradreg/presentation.hpp"
#include "gradreg/regularity.hpp"
#include "gradreg/resolve.hpp"
#include "presets.hpp"

using namespace gradreg;
namespace tp = gradreg::testing;

namespace {

AlgebraHandle build(const std::string& text, long long n) {
    return build_truncated(parse_presentation(text), n);
}

Mat unitCol(const GradedModule& m, long long d, std::size_t i) {
    Mat v(m.alg->field, (std::size_t)m.dim(d), 1);
    v.set(i, 0, 1);
    return v;
}

// cokernel of A(-2)^2 -> A on the monomials x*y and y*y; betti rows are
// (1), (2 in degree 2), (1 in degree 3)
ModuleHandle twoMonomialQuotient(const AlgebraHandle& a, long long n) {
    auto F = free_module(a, {{0, 0}}, n);
    auto G = free_module(a, {{0, 2}, {0, 2}}, n);
    std::size_t xy = 1, yy = 2;  // degree-2 words are x*x, x*y, y*y
    GradedMap f = map_between_free(G, F, {unitCol(*F, 2, xy), unitCol(*F, 2, yy)});
    return cokernel_module(f, n);
}

ModuleHandle zeroModule(const AlgebraHandle& a, long long n) {
    auto F = free_module(a, {{0, 0}}, n);
    GradedMap id = map_between_free(F, F, {unitCol(*F, 0, 0)});
    return cokernel_module(id, n);
}

bool entriesAre(const DegreeTable& t,
                const std::map<std::pair<long long, long long>, long long>& want) {
    return t.entries == want;
}

}  // namespace

TEST_CASE("betti readings recover the regularities of the residue field") {
    auto a = build(tp::poly2(), 8);
    auto k = trivial_module(a, 8);
    TorregResult t = torreg_from_betti(betti(minimal_resolution(k, 4, 8)));
    CHECK(t.Torreg.value == ExtendedDegree::integer(0));
    CHECK(t.Torreg.status == RegStatus::Exact);
    CHECK(t.torreg.value == ExtendedDegree::integer(0));
    CHECK(t.torreg.status == RegStatus::Exact);

    auto free = algebra_module(a, 8);
    TorregResult tf = torreg_from_betti(betti(minimal_resolution(free, 4, 8)));
    CHECK(tf.Torreg.value == ExtendedDegree::integer(0));
    CHECK(tf.Torreg.status == RegStatus::Exact);
    CHECK(tf.torreg.status == RegStatus::Exact);
}

TEST_CASE("an endless syzygy chain censors the sup side but not the inf side") {
    auto a = build(tp::dualnum(), 8);
    auto k = trivial_module(a, 8);
    TorregResult t = torreg_from_betti(betti(minimal_resolution(k, 6, 8)));
    // observed sup of u_m - m is 0 but later steps stay unseen
    CHECK(t.Torreg.value == ExtendedDegree::atLeast(0));
    CHECK(t.Torreg.status == RegStatus::Censored);
    // semisimple degree zero forces generator degrees to climb, pinning the inf
    CHECK(t.torreg.value == ExtendedDegree::integer(0));
    CHECK(t.torreg.status == RegStatus::Exact);
}

TEST_CASE("a radical in degree zero blocks the generator-climbing certificate") {
    auto a = build(tp::a0loop(), 6);
    auto k = trivial_module(a, 6);
    TorregResult t = torreg_from_betti(betti(minimal_resolution(k, 4, 6)));
    CHECK(t.Torreg.value == ExtendedDegree::atLeast(0));
    CHECK(t.Torreg.status == RegStatus::Censored);
    // l_m - m keeps dropping: the observed inf is -4 and nothing pins it
    CHECK(t.torreg.value == ExtendedDegree::atLeast(4));
    CHECK(t.torreg.status == RegStatus::Censored);
}

TEST_CASE("the zero module reads as degenerate") {
    auto a = build(tp::poly2(), 6);
    auto z = zeroModule(a, 6);
    TorregResult t = torreg_from_betti(betti(minimal_resolution(z, 3, 6)));
    CHECK(t.Torreg.value == ExtendedDegree::minusInf());
    CHECK(t.Torreg.status == RegStatus::Degenerate);
    CHECK(t.torreg.status == RegStatus::Degenerate);

    GradedExtTable e = ext_table(z, algebra_module(a, 6), 3, 6);
    CHECK(e.entries.empty());
    CHECK(e.tailExactZero);
    CHECK(table_sdeg(e).status == RegStatus::Degenerate);
    CHECK(table_ideg(e).value == ExtendedDegree::plusInf());
    CHECK(depth_from_table(e).value == ExtendedDegree::plusInf());
    CHECK(depth_from_table(e).status == RegStatus::Degenerate);
}

TEST_CASE("homs of the residue field into the dual numbers see only the socle") {
    auto a = build(tp::dualnum(), 8);
    auto k = trivial_module(a, 8);
    auto A = algebra_module(a, 8);
    REQUIRE(A->fdCertified);
    GradedExtTable t = ext_table(k, A, 4, 8);
    CHECK(entriesAre(t, {{{0, 1}, 1}}));  // gExt^0(k, A) = k(-1)
    CHECK(t.censored.empty());
    CHECK_FALSE(t.tailExactZero);
    // the finite-dimensional cap pins the sup even though the chain never ends
    RegValue s = table_sdeg(t);
    CHECK(s.value == ExtendedDegree::integer(1));
    CHECK(s.status == RegStatus::Exact);
    // rows beyond the window could still dip lower
    RegValue i = table_ideg(t);
    CHECK(i.value == ExtendedDegree::atMost(1));
    CHECK(i.status == RegStatus::Censored);
}

TEST_CASE("homs of the residue field into the polynomial line sit in row one") {
    auto a = build(tp::poly1(), 8);
    auto k = trivial_module(a, 8);
    auto A = algebra_module(a, 8);
    GradedExtTable t = ext_table(k, A, 4, 8);
    CHECK(entriesAre(t, {{{1, -1}, 1}}));  // gExt^1(k, A) = k(1)
    CHECK(t.tailExactZero);
    // the algebra is not certified finite, so large internal degrees censor
    CHECK_FALSE(t.censored.empty());
    RegValue i = table_ideg(t);
    CHECK(i.value == ExtendedDegree::integer(0));
    CHECK(i.status == RegStatus::Exact);
    RegValue s = table_sdeg(t);
    CHECK(s.value == ExtendedDegree::atLeast(0));
    CHECK(s.status == RegStatus::Censored);
}

TEST_CASE("a free source collapses the hom table to row zero") {
    auto a = build(tp::dualnum(), 8);
    auto A = algebra_module(a, 8);
    auto k = trivial_module(a, 8);
    GradedExtTable t = ext_table(A, k, 4, 8);
    CHECK(entriesAre(t, {{{0, 0}, 1}}));
    CHECK(t.tailExactZero);
    CHECK(table_sdeg(t).value == ExtendedDegree::integer(0));
    CHECK(table_sdeg(t).status == RegStatus::Exact);
    CHECK(table_ideg(t).value == ExtendedDegree::integer(0));
    CHECK(depth_from_table(t).value == ExtendedDegree::integer(0));
    CHECK(depth_from_table(t).status == RegStatus::Exact);
}

TEST_CASE("the hom table into the trivial module mirrors the betti numbers") {
    auto a = build(tp::poly2(), 6);
    auto M = twoMonomialQuotient(a, 6);
    auto S = trivial_module(a, 6);
    GradedExtTable t = ext_table(M, S, 3, 6);
    CHECK(entriesAre(t, {{{0, 0}, 1}, {{1, -2}, 2}, {{2, -3}, 1}}));
    CHECK(t.tailExactZero);
    CHECK(t.censored.empty());
    // Extreg = -ideg = 1 agrees with Torreg = sup(u_m - m)
    RegValue i = table_ideg(t);
    CHECK(i.value == ExtendedDegree::integer(-1));
    CHECK(i.status == RegStatus::Exact);
    TorregResult tb = torreg_from_betti(betti(minimal_resolution(M, 3, 6)));
    CHECK(tb.Torreg.value == i.value.negated());
    // extreg = sdeg agrees with torreg
    CHECK(table_sdeg(t).value == ExtendedDegree::integer(0));
    CHECK(tb.torreg.value == table_sdeg(t).value);
}

TEST_CASE("a caller-certified support bound turns censored homs into exact depth") {
    auto a = build(tp::poly2(), 8);
    auto k = trivial_module(a, 8);
    auto A = algebra_module(a, 8);
    long long none = -(1LL << 60);
    // homs of k into the algebra vanish above u_{d-i} - min(ell): rows 0 and 1
    // are zero outright, row 2 dies above -2
    std::map<long long, long long> clip{{0, none}, {1, none}, {2, -2}, {3, none}, {4, none}};
    GradedExtTable t = ext_table(k, A, 4, 8, &clip);
    CHECK(entriesAre(t, {{{2, -2}, 1}}));
    CHECK(t.censored.empty());
    CHECK(table_sdeg(t).value == ExtendedDegree::integer(0));
    CHECK(table_sdeg(t).status == RegStatus::Exact);
    RegValue d = depth_from_table(t);
    CHECK(d.value == ExtendedDegree::integer(2));
    CHECK(d.status == RegStatus::Exact);

    // without the bound the socle rows stay unknowable and depth is censored
    GradedExtTable u = ext_table(k, A, 4, 8);
    RegValue du = depth_from_table(u);
    CHECK(du.value == ExtendedDegree::atLeast(0));
    CHECK(du.status == RegStatus::Censored);
}

TEST_CASE("tensoring with the free right module recovers the argument") {
    auto a = build(tp::poly2(), 6);
    auto k = trivial_module(a, 6);
    auto Aop = algebra_module(opposite(a), 6);
    GradedTorTable t = tor_table(Aop, k, 2, 6);
    CHECK(entriesAre(t, {{{0, 0}, 1}}));
    CHECK(t.tailExactZero);
    RegValue i = table_ideg(t);
    CHECK(i.value == ExtendedDegree::integer(0));
    CHECK(i.status == RegStatus::Exact);
}

TEST_CASE("tor of the residue field with itself over the line") {
    auto a = build(tp::poly1(), 6);
    auto k = trivial_module(a, 6);
    auto kop = trivial_module(opposite(a), 6);
    GradedTorTable t = tor_table(kop, k, 3, 6);
    CHECK(entriesAre(t, {{{0, 0}, 1}, {{1, 1}, 1}}));  // Tor_1 = k(-1)
    CHECK(t.tailExactZero);
    CHECK(t.censored.empty());
    CHECK(table_sdeg(t).value == ExtendedDegree::integer(0));
    CHECK(table_sdeg(t).status == RegStatus::Exact);
    CHECK(table_ideg(t).value == ExtendedDegree::integer(0));
}

TEST_CASE("the dual numbers tor chain stays exact on the inf side") {
    auto a = build(tp::dualnum(), 8);
    auto k = trivial_module(a, 8);
    auto kop = trivial_module(opposite(a), 8);
    GradedTorTable t = tor_table(kop, k, 4, 8);
    std::map<std::pair<long long, long long>, long long> want;
    for (long long m = 0; m <= 4; ++m) want[{m, m}] = 1;  // Tor_m = k(-m)
    CHECK(entriesAre(t, want));
    CHECK_FALSE(t.tailExactZero);
    CHECK(t.censored.empty());
    // generator degrees climb, so unseen rows cannot dip below 0
    RegValue i = table_ideg(t);
    CHECK(i.value == ExtendedDegree::integer(0));
    CHECK(i.status == RegStatus::Exact);
    RegValue s = table_sdeg(t);
    CHECK(s.value == ExtendedDegree::atLeast(0));
    CHECK(s.status == RegStatus::Censored);

    // the same chain matches the betti numbers cellwise
    BettiTable B = betti(minimal_resolution(k, 4, 8));
    for (long long m = 0; m <= 4; ++m) CHECK(t.dimAt(m, m) == B.at((std::size_t)m, m, 0));
}

TEST_CASE("table windows gate like the resolution windows") {
    auto a = build(tp::poly2(), 4);
    auto k = trivial_module(a, 4);
    auto A = algebra_module(a, 4);
    CHECK_THROWS_AS((void)ext_table(k, A, 2, 9), const WindowTooSmall&);
    CHECK_THROWS_AS((void)ext_table(k, A, -1, 4), const BadInput&);
    auto b = build(tp::poly1(), 4);
    auto wrong = trivial_module(b, 4);  // not a module over the opposite algebra
    CHECK_THROWS_AS((void)tor_table(wrong, k, 2, 4), const BadInput&);
}

namespace {

// cokernel of A(-d) -> A on a single degree-d word
ModuleHandle wordQuotient(const AlgebraHandle& a, long long d, std::size_t word, long long n) {
    auto F = free_module(a, {{0, 0}}, n);
    auto G = free_module(a, {{0, d}}, n);
    GradedMap f = map_between_free(G, F, {unitCol(*F, d, word)});
    return cokernel_module(f, n);
}

ASGorensteinData planeData() {
    ASGorensteinData g;
    g.d = 2;
    g.ell = {2};
    g.sigma = {0};
    g.r = {1};
    g.verified = true;
    return g;
}

}  // namespace

TEST_CASE("local cohomology of a torsion module is the module itself") {
    auto a = build(tp::dualnum(), 8);
    CmregResult r = cmreg_limit(algebra_module(a, 8), 16, 4, 8);
    CHECK(r.CMreg.value == ExtendedDegree::integer(1));
    CHECK(r.CMreg.status == RegStatus::Exact);
    CHECK(r.cmreg.value == ExtendedDegree::integer(0));
    CHECK(r.cmreg.status == RegStatus::Exact);
    CHECK(r.stages == 0);
    CHECK(r.table.tailExactZero);
    CHECK(entriesAre(r.table, {{{0, 0}, 1}, {{0, 1}, 1}}));

    auto b = build(tp::poly2(), 8);
    CmregResult rk = cmreg_limit(trivial_module(b, 8), 16, 4, 8);
    CHECK(rk.CMreg.value == ExtendedDegree::integer(0));
    CHECK(rk.CMreg.status == RegStatus::Exact);
    CHECK(rk.cmreg.value == ExtendedDegree::integer(0));
    CHECK(rk.cmreg.status == RegStatus::Exact);
}

TEST_CASE("the limit strategy certifies the top local cohomology of the plane") {
    auto a = build(tp::poly2(), 8);
    ASGorensteinData g = planeData();
    CmregResult r = cmreg_limit(algebra_module(a, 8), 6, 4, 8, &g);
    CHECK(r.CMreg.value == ExtendedDegree::integer(0));
    CHECK(r.CMreg.status == RegStatus::Exact);
    REQUIRE(r.CMreg.witness.has_value());
    CHECK(*r.CMreg.witness == std::pair<long long, long long>{2, -2});
    // the true table keeps going down forever, so the inf side stays open
    CHECK(r.cmreg.status == RegStatus::Censored);
    CHECK(r.cmreg.value.kind == ExtendedDegree::Kind::AtLeast);
    // H^2_m(A)_j has dimension -j-1 = dim A_{-j-2}
    CHECK(r.table.dimAt(2, -2) == 1);
    CHECK(r.table.dimAt(2, -3) == 2);
    CHECK(r.table.dimAt(2, -4) == 3);
    for (const auto& [cell, dim] : r.table.entries) CHECK(cell.first == 2);
    CHECK(r.stages >= 2);
    CHECK(r.table.tailExactZero);
}

TEST_CASE("the limit strategy stays censored without a duality certificate") {
    auto a = build(tp::poly2(), 8);
    auto M = algebra_module(a, 8);
    CmregResult r = cmreg_limit(M, 6, 4, 8);
    CHECK(r.CMreg.status == RegStatus::Censored);
    CHECK(r.CMreg.value.kind == ExtendedDegree::Kind::MinusInf);
    CHECK(r.stages == 0);
    CHECK(!r.note.empty());
    CHECK_THROWS_AS((void)cmreg_limit(M, 0, 4, 8), const BadInput&);
}

TEST_CASE("duality reproduces a torsion module's local cohomology") {
    auto a = build(tp::poly1(), 8);
    auto M = wordQuotient(a, 2, 0, 8);  // A/(x^2)
    ASGorensteinData g;
    g.d = 1;
    g.ell = {1};
    g.sigma = {0};
    g.r = {1};
    g.verified = true;
    CmregResult r = cmreg_duality(M, g, 4, 8);
    CHECK(r.CMreg.value == ExtendedDegree::integer(1));
    CHECK(r.CMreg.status == RegStatus::Exact);
    CHECK(r.cmreg.value == ExtendedDegree::integer(0));
    CHECK(r.cmreg.status == RegStatus::Exact);
    CHECK(entriesAre(r.table, {{{0, 0}, 1}, {{0, 1}, 1}}));
}

TEST_CASE("duality reads the plane's local cohomology from an ext table") {
    auto a = build(tp::poly2(), 8);
    ASGorensteinData g = planeData();
    CmregResult r = cmreg_duality(algebra_module(a, 8), g, 4, 8);
    CHECK(r.CMreg.value == ExtendedDegree::integer(0));
    CHECK(r.CMreg.status == RegStatus::Exact);
    CHECK(r.cmreg.status == RegStatus::Censored);
    CHECK(r.cmreg.value.kind == ExtendedDegree::Kind::AtLeast);
    CHECK(r.table.dimAt(2, -2) == 1);
    CHECK(r.table.dimAt(2, -3) == 2);
    CHECK_THROWS_AS((void)cmreg_duality(algebra_module(a, 8), g, 1, 8), const WindowTooSmall&);
}

TEST_CASE("both strategies agree on the plane") {
    auto a = build(tp::poly2(), 8);
    ASGorensteinData g = planeData();
    std::vector<ModuleHandle> mods = {algebra_module(a, 8), trivial_module(a, 8),
                                      wordQuotient(a, 1, 0, 8)};  // A, k, A/(x)
    for (const auto& M : mods) {
        CmregResult lim = cmreg_limit(M, 8, 4, 8, &g);
        CmregResult dua = cmreg_duality(M, g, 4, 8);
        CHECK(lim.CMreg.status == RegStatus::Exact);
        CHECK(dua.CMreg.status == RegStatus::Exact);
        CHECK(lim.CMreg.value == dua.CMreg.value);
    }
    CHECK(cmreg_duality(mods[2], g, 4, 8).CMreg.value == ExtendedDegree::integer(0));
}

TEST_CASE("gorenstein data is verified within the window") {
    auto a = build(tp::poly2(), 8);
    ASGorensteinData ok = verify_gorenstein(a, planeData(), 4, 8);
    CHECK(ok.verified);
    CHECK(ok.warning.empty());

    ASGorensteinData wrong = planeData();
    wrong.ell = {3};
    ASGorensteinData bad = verify_gorenstein(a, wrong, 4, 8);
    CHECK(!bad.verified);
    CHECK(!bad.warning.empty());

    auto d = build(tp::dualnum(), 8);
    ASGorensteinData gd;
    gd.d = 0;
    gd.ell = {-1};
    gd.sigma = {0};
    gd.r = {1};
    CHECK(verify_gorenstein(d, gd, 4, 8).verified);

    auto kr = build(tp::kron2(), 8);
    ASGorensteinData gk;
    gk.d = 0;
    gk.ell = {0, 0};
    gk.sigma = {0, 1};
    gk.r = {1, 1};
    CHECK(!verify_gorenstein(kr, gk, 4, 8).verified);
}

TEST_CASE("asreg separates the finite-dimensional case") {
    auto a = build(tp::dualnum(), 8);
    ASGorensteinData gd;
    gd.d = 0;
    gd.ell = {-1};
    gd.sigma = {0};
    gd.r = {1};
    gd.verified = true;
    Bounds b{6, 8, 16};
    ASRegResult r = asreg(a, b, &gd);
    // CMreg(A) = 1 is exact but Torreg(S) never terminates
    CHECK(r.ASreg.status == RegStatus::Censored);
    CHECK(r.ASreg.value.kind == ExtendedDegree::Kind::AtLeast);
    CHECK(r.ASreg.value.value == 1);
    CHECK(r.asreg.value == ExtendedDegree::integer(0));
    CHECK(r.asreg.status == RegStatus::Exact);
    CHECK(r.asregRight.value == ExtendedDegree::integer(0));
    CHECK(r.asregRight.status == RegStatus::Exact);

    auto p = build(tp::poly2(), 8);
    ASGorensteinData g2 = planeData();
    ASRegResult rp = asreg(p, Bounds{4, 8, 10}, &g2);
    CHECK(rp.ASreg.value == ExtendedDegree::integer(0));
    CHECK(rp.ASreg.status == RegStatus::Exact);
    CHECK(rp.asreg.status == RegStatus::Censored);
    CHECK(rp.asreg.value.kind == ExtendedDegree::Kind::AtLeast);
    CHECK(rp.ASregRight.value == ExtendedDegree::integer(0));
}

TEST_CASE("the residue field of the plane has every regularity zero") {
    auto a = build(tp::poly2(), 8);
    ASGorensteinData g = planeData();
    RegularityReport rep =
        regs_of_module(trivial_module(a, 8), Bounds{4, 8, 10}, CmStrategy::Limit, &g);
    const RegValue* all[] = {&rep.CMreg, &rep.cmreg, &rep.Torreg, &rep.torreg,
                             &rep.Extreg, &rep.extreg, &rep.Exreg, &rep.exreg};
    for (const RegValue* v : all) {
        CHECK(v->value == ExtendedDegree::integer(0));
        CHECK(v->status == RegStatus::Exact);
    }
    CHECK(rep.depth.value == ExtendedDegree::integer(0));
    CHECK(rep.depth.status == RegStatus::Exact);
    CHECK(rep.pdim.value == ExtendedDegree::integer(2));
    CHECK(rep.pdim.status == RegStatus::Exact);
}

TEST_CASE("the plane as a module over itself reads like a dualizing module") {
    auto a = build(tp::poly2(), 8);
    ASGorensteinData g = planeData();
    RegularityReport rep =
        regs_of_module(algebra_module(a, 8), Bounds{4, 8, 10}, CmStrategy::Duality, &g);
    const RegValue* zeros[] = {&rep.Torreg, &rep.torreg, &rep.Extreg,
                               &rep.extreg, &rep.Exreg,  &rep.exreg};
    for (const RegValue* v : zeros) {
        CHECK(v->value == ExtendedDegree::integer(0));
        CHECK(v->status == RegStatus::Exact);
    }
    CHECK(rep.depth.value == ExtendedDegree::integer(2));
    CHECK(rep.depth.status == RegStatus::Exact);
    CHECK(rep.pdim.value == ExtendedDegree::integer(0));
    CHECK(rep.pdim.status == RegStatus::Exact);
    CHECK(rep.CMreg.value == ExtendedDegree::integer(0));
    CHECK(rep.CMreg.status == RegStatus::Exact);
    CHECK(rep.cmreg.status == RegStatus::Censored);
}

TEST_CASE("a zero module reports every regularity as degenerate") {
    auto a = build(tp::poly2(), 8);
    RegularityReport rep =
        regs_of_module(zeroModule(a, 8), Bounds{4, 8, 10}, CmStrategy::Limit);
    const RegValue* all[] = {&rep.CMreg, &rep.cmreg, &rep.Torreg, &rep.torreg, &rep.Extreg,
                             &rep.extreg, &rep.Exreg, &rep.exreg, &rep.depth, &rep.pdim};
    for (const RegValue* v : all) CHECK(v->status == RegStatus::Degenerate);
    CHECK(rep.depth.value == ExtendedDegree::plusInf());
    CHECK(rep.pdim.value == ExtendedDegree::minusInf());
    CHECK(rep.CMreg.value == ExtendedDegree::minusInf());
}

TEST_CASE("per-vertex regularities flag the kronecker quiver as one-sided") {
    auto kr = build(tp::kron2(), 8);
    HomogeneityFlags h = homogeneity_check(kr, Bounds{4, 8, 10});
    CHECK(h.leftCM == Verdict::Fails);
    CHECK(h.leftCM != Verdict::Inconclusive);
    CHECK(h.rightCM != Verdict::Inconclusive);
    CHECK(h.leftEx != Verdict::Inconclusive);
    CHECK(h.rightEx != Verdict::Inconclusive);

    auto p = build(tp::poly2(), 8);
    ASGorensteinData g = planeData();
    HomogeneityFlags hp = homogeneity_check(p, Bounds{4, 8, 10}, &g);
    CHECK(hp.leftCM == Verdict::Holds);
    CHECK(hp.rightCM == Verdict::Holds);
    CHECK(hp.leftEx == Verdict::Holds);
    CHECK(hp.rightEx == Verdict::Holds);

    auto bad = build(tp::a0loop(), 4);
    CHECK_THROWS_AS((void)homogeneity_check(bad, Bounds{2, 4, 4}), const NotBasic&);
}

TEST_CASE("gorenstein parameters equalize along sigma orbits") {
    EqualizeResult one = equalize_parameters({5}, {0}, {{1}});
    CHECK(one.feasible);
    CHECK(one.p == std::vector<long long>{0});
    CHECK(one.ellB == std::vector<long long>{5});

    EqualizeResult swap2 = equalize_parameters({1, 3}, {1, 0}, {{1, 2}, {2, 1}});
    CHECK(swap2.feasible);
    CHECK(swap2.p == std::vector<long long>{0, 1});
    CHECK(swap2.ellB == std::vector<long long>{2, 2});
    std::vector<std::size_t> sigma = {1, 0};
    std::vector<long long> ell = {1, 3};
    for (std::size_t i = 0; i < 2; ++i)
        CHECK(ell[i] - swap2.p[i] + swap2.p[sigma[i]] == swap2.ellB[i]);

    // identity sigma cannot move unequal parameters: the orbit {0} certifies it
    EqualizeResult fixed = equalize_parameters({1, 3}, {0, 1}, {{1, 2}, {2, 1}});
    CHECK(!fixed.feasible);
    CHECK(fixed.cycle == std::vector<std::size_t>{0});
    CHECK(!fixed.reason.empty());

    // the shift that equalizes the parameters drives m(0,1) to zero
    EqualizeResult tight = equalize_parameters({1, 3}, {1, 0}, {{1, 1}, {1, 1}});
    CHECK(!tight.feasible);
    CHECK(!tight.reason.empty());

    EqualizeResult half = equalize_parameters({1, 2}, {1, 0}, {{1, 5}, {5, 1}});
    CHECK(!half.feasible);
    CHECK(half.cycle.empty());
    CHECK(!half.reason.empty());

    CHECK_THROWS_AS((void)equalize_parameters({1, 3}, {0, 0}, {{1, 1}, {1, 1}}),
                    const BadInput&);
    CHECK_THROWS_AS((void)equalize_parameters({1, 3}, {1, 0}, {{-1, 1}, {1, 1}}),
                    const BadInput&);
    CHECK_THROWS_AS((void)equalize_parameters({1}, {0}, {{1, 1}, {1, 1}}), const BadInput&);
}
