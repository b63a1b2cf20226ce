#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gradreg/catalog.hpp"
#include "gradreg/gmod.hpp"
#include "gradreg/regularity.hpp"

namespace gradreg {

struct RandomModuleParams {
    long long gens = 2, genLo = 0, genHi = 2;  // generator count / degree range
    long long rels = 2, relLo = 1, relHi = 3;  // relation count / degree range
};

// cokernel of a seeded random generator-image map between free modules;
// fully determined by (a, seed, p, N), identical across platforms
ModuleHandle random_module(const AlgebraHandle& a, std::uint64_t seed,
                           const RandomModuleParams& p, long long N);

// assertions the suite gates on; computable properties (semisimple A_0) are
// always re-derived from the algebra, never trusted from here
struct SuiteFacts {
    std::string name = "adhoc";
    bool noetherian = false;
    bool bdc = false;  // balanced dualizing complex asserted
    std::optional<ASGorensteinData> gorenstein;
};

SuiteFacts facts_for(const CatalogEntry& e);

struct SuiteConfig {
    std::uint64_t masterSeed = 42;
    long long instances = 25;
    Bounds bounds;
    SuiteFacts facts;
    std::vector<std::string> only;  // check ids to run; empty = all
};

// One assertion instance.  The meta-invariant: a fails verdict is only ever
// produced from two exact readings; censored comparisons stop at
// inconclusive, degenerate modules at skipped.
struct CheckOutcome {
    std::string check;     // "C1".."C13"
    std::string instance;  // "M#3", "A", "ses#7", ...
    std::uint64_t seed = 0;
    ExtendedDegree left = ExtendedDegree::minusInf();
    ExtendedDegree right = ExtendedDegree::minusInf();
    Verdict verdict = Verdict::Skipped;
    std::string witness;

    bool operator==(const CheckOutcome&) const = default;
};

struct SuiteReport {
    std::string algebra;
    std::uint64_t masterSeed = 0;
    long long instances = 0;
    Bounds bounds;
    std::vector<CheckOutcome> outcomes;  // canonical: by check number, then seed
    long long holds = 0, fails = 0, inconclusive = 0, skipped = 0;
};

SuiteReport run_theorem_suite(const AlgebraHandle& a, const SuiteConfig& cfg);

}  // namespace gradreg
