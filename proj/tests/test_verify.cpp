#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include <gradreg/catalog.hpp>
#include <gradreg/gmod.hpp>
#include <gradreg/resolve.hpp>
#include <gradreg/verify.hpp>

using namespace gradreg;

namespace {

long long checkNumber(const std::string& id) { return std::stoll(id.substr(1)); }

long long countWhere(const SuiteReport& r, const std::string& id, Verdict v) {
    long long n = 0;
    for (const CheckOutcome& o : r.outcomes)
        if (o.check == id && o.verdict == v) ++n;
    return n;
}

long long countCheck(const SuiteReport& r, const std::string& id) {
    long long n = 0;
    for (const CheckOutcome& o : r.outcomes)
        if (o.check == id) ++n;
    return n;
}

}  // namespace

TEST_CASE("catalog: entries build and carry the advertised facts") {
    const auto& entries = catalog();
    REQUIRE(entries.size() == 10);
    const char* order[] = {"poly1", "poly2", "poly3", "qplane", "jordan",
                           "ext2",  "dualnum", "kron2", "tri2",  "a0loop"};
    for (std::size_t i = 0; i < 10; ++i) CHECK(entries[i].name == order[i]);
    CHECK(catalog_find("qplane") != nullptr);
    CHECK(catalog_find("nope") == nullptr);

    AlgebraHandle p2 = catalog_build(*catalog_find("poly2"), 6);
    CHECK(p2->field.p == 32003);
    CHECK(p2->dim(0) == 1);
    CHECK(p2->dim(4) == 5);

    AlgebraHandle q = catalog_build(*catalog_find("qplane"), 4);
    CHECK(q->dim(4) == 5);

    AlgebraHandle kr = catalog_build(*catalog_find("kron2"), 6);
    CHECK(kr->dim(0) == 2);
    CHECK(kr->dim(1) == 2);
    CHECK(kr->dim(2) == 0);

    AlgebraHandle t2 = catalog_build(*catalog_find("tri2"), 6);
    CHECK(t2->dim(0) == 2);
    CHECK(t2->dim(1) == 3);
    CHECK(t2->dim(2) == 3);

    AlgebraHandle e2 = catalog_build(*catalog_find("ext2"), 6);
    CHECK(e2->dim(1) == 2);
    CHECK(e2->dim(2) == 1);
    CHECK(e2->dim(3) == 0);

    AlgebraHandle j = catalog_build(*catalog_find("jordan"), 5);
    CHECK(j->dim(3) == 4);

    for (const char* n : {"poly1", "poly2", "poly3", "qplane", "jordan", "ext2", "dualnum"})
        CHECK(catalog_find(n)->gorenstein.has_value());
    for (const char* n : {"kron2", "tri2", "a0loop"})
        CHECK(!catalog_find(n)->gorenstein.has_value());
    CHECK(!catalog_find("a0loop")->a0Semisimple);
    CHECK(!catalog_find("tri2")->bdc);
    CHECK(catalog_find("tri2")->noetherian);
}

TEST_CASE("catalog: asserted gorenstein data re-verifies inside the window") {
    for (const char* n : {"poly2", "ext2", "dualnum", "jordan"}) {
        const CatalogEntry* e = catalog_find(n);
        AlgebraHandle a = catalog_build(*e, 8);
        ASGorensteinData g = verify_gorenstein(a, *e->gorenstein, 5, 8);
        CHECK_MESSAGE(g.verified, n, ": ", g.warning);
    }
}

TEST_CASE("random_module: deterministic, with the two degenerate corners") {
    AlgebraHandle a = catalog_build(*catalog_find("poly2"), 8);
    RandomModuleParams p;

    ModuleHandle m1 = random_module(a, 7, p, 8);
    ModuleHandle m2 = random_module(a, 7, p, 8);
    CHECK(m1->dimsByDeg == m2->dimsByDeg);
    BettiTable b1 = betti(minimal_resolution(m1, 4, 8));
    BettiTable b2 = betti(minimal_resolution(m2, 4, 8));
    CHECK(b1.beta == b2.beta);

    RandomModuleParams freep = p;
    freep.rels = 0;
    ModuleHandle f = random_module(a, 3, freep, 8);
    BettiTable bf = betti(minimal_resolution(f, 3, 8));
    CHECK(bf.terminated);
    CHECK(bf.total(0) == 2);
    CHECK(bf.total(1) == 0);

    RandomModuleParams zp = p;
    zp.gens = 0;
    CHECK(sdeg_ideg(*random_module(a, 3, zp, 8)).degenerate);

    std::set<std::map<long long, long long>> shapes;
    for (std::uint64_t s = 0; s < 8; ++s) shapes.insert(random_module(a, s, p, 8)->dimsByDeg);
    CHECK(shapes.size() >= 2);
}

TEST_CASE("suite: poly2 runs clean, in canonical order, deterministically") {
    AlgebraHandle a = catalog_build(*catalog_find("poly2"), 8);
    SuiteConfig cfg;
    cfg.masterSeed = 42;
    cfg.instances = 4;
    cfg.bounds = {6, 8, 16};
    cfg.facts = facts_for(*catalog_find("poly2"));

    SuiteReport rep = run_theorem_suite(a, cfg);
    CHECK(rep.fails == 0);
    CHECK(rep.holds > 0);
    CHECK(rep.holds + rep.fails + rep.inconclusive + rep.skipped ==
          (long long)rep.outcomes.size());
    CHECK(rep.algebra == "poly2");

    for (int c = 1; c <= 13; ++c) {
        std::string id = "C" + std::to_string(c);
        CHECK_MESSAGE(countCheck(rep, id) > 0, id, " missing from the report");
    }

    // poly2 satisfies every hypothesis: each check must decide something
    for (int c = 1; c <= 13; ++c) {
        std::string id = "C" + std::to_string(c);
        CHECK_MESSAGE(countWhere(rep, id, Verdict::Holds) > 0, id, " never holds");
    }

    CHECK(std::is_sorted(rep.outcomes.begin(), rep.outcomes.end(),
                         [](const CheckOutcome& x, const CheckOutcome& y) {
                             if (checkNumber(x.check) != checkNumber(y.check))
                                 return checkNumber(x.check) < checkNumber(y.check);
                             return x.seed < y.seed;
                         }));

    SuiteReport rep2 = run_theorem_suite(a, cfg);
    REQUIRE(rep2.outcomes.size() == rep.outcomes.size());
    for (std::size_t i = 0; i < rep.outcomes.size(); ++i) CHECK(rep2.outcomes[i] == rep.outcomes[i]);
}

TEST_CASE("suite: dualnum pins the paper's ASreg reading and C4 applies") {
    AlgebraHandle a = catalog_build(*catalog_find("dualnum"), 8);
    SuiteConfig cfg;
    cfg.masterSeed = 42;
    cfg.instances = 3;
    cfg.bounds = {6, 8, 16};
    cfg.facts = facts_for(*catalog_find("dualnum"));

    SuiteReport rep = run_theorem_suite(a, cfg);
    CHECK(rep.fails == 0);

    bool sawASreg = false;
    for (const CheckOutcome& o : rep.outcomes)
        if (o.check == "C5" && o.witness.find("ASreg") != std::string::npos) {
            sawASreg = true;
            CHECK(o.verdict == Verdict::Holds);
            // window reading: every visible diagonal reaches 1, nothing refutes more
            CHECK(o.left.kind == ExtendedDegree::Kind::AtLeast);
            CHECK(o.left.value == 1);
        }
    CHECK(sawASreg);

    CHECK(countWhere(rep, "C4", Verdict::Holds) > 0);
    CHECK(countWhere(rep, "C4", Verdict::Fails) == 0);
}

TEST_CASE("suite: a0loop runs only the unconditional checks") {
    AlgebraHandle a = catalog_build(*catalog_find("a0loop"), 8);
    SuiteConfig cfg;
    cfg.masterSeed = 7;
    cfg.instances = 3;
    cfg.bounds = {5, 8, 10};
    cfg.facts = facts_for(*catalog_find("a0loop"));

    SuiteReport rep = run_theorem_suite(a, cfg);
    CHECK(rep.fails == 0);
    CHECK(countCheck(rep, "C1") == countWhere(rep, "C1", Verdict::Skipped));
    CHECK(countCheck(rep, "C4") == countWhere(rep, "C4", Verdict::Skipped));
    CHECK(countCheck(rep, "C8") == countWhere(rep, "C8", Verdict::Skipped));
    CHECK(countCheck(rep, "C2") > 0);
    CHECK(countWhere(rep, "C2", Verdict::Fails) == 0);
}

TEST_CASE("suite: a censored window can never manufacture a fails") {
    AlgebraHandle a = catalog_build(*catalog_find("poly2"), 3);
    SuiteConfig cfg;
    cfg.masterSeed = 11;
    cfg.instances = 3;
    cfg.bounds = {2, 3, 4};
    cfg.facts = facts_for(*catalog_find("poly2"));

    SuiteReport rep = run_theorem_suite(a, cfg);
    CHECK(rep.fails == 0);
}

TEST_CASE("suite: the check filter narrows the run") {
    AlgebraHandle a = catalog_build(*catalog_find("poly2"), 8);
    SuiteConfig cfg;
    cfg.masterSeed = 42;
    cfg.instances = 3;
    cfg.bounds = {5, 8, 10};
    cfg.facts = facts_for(*catalog_find("poly2"));
    cfg.only = {"C2"};

    SuiteReport rep = run_theorem_suite(a, cfg);
    CHECK(!rep.outcomes.empty());
    for (const CheckOutcome& o : rep.outcomes) CHECK(o.check == "C2");
}
