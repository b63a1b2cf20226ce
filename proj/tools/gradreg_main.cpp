#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "gradreg/catalog.hpp"
#include "gradreg/errors.hpp"
#include "gradreg/presentation.hpp"
#include "gradreg/regularity.hpp"
#include "gradreg/resolve.hpp"
#include "gradreg/verify.hpp"

using json = nlohmann::ordered_json;
using namespace gradreg;

namespace {

// exit codes: 0 ok, 1 verify found fails, 2 input/usage, 3 computation
int exitCodeFor(const GradregError& e) {
    static const char* usage[] = {"SyntaxError",       "InhomogeneousRelation",
                                  "UnknownSymbol",     "NonComposablePath",
                                  "NotNNGraded",       "BadInput",
                                  "MissingGorensteinData", "NotBasic",
                                  "RadicalUnsupported"};
    for (const char* k : usage)
        if (e.kind == k) return 2;
    return 3;
}

json edJson(const ExtendedDegree& d) {
    json j;
    switch (d.kind) {
        case ExtendedDegree::Kind::Int: j["kind"] = "int"; j["value"] = d.value; break;
        case ExtendedDegree::Kind::PlusInf: j["kind"] = "+inf"; break;
        case ExtendedDegree::Kind::MinusInf: j["kind"] = "-inf"; break;
        case ExtendedDegree::Kind::AtLeast: j["kind"] = "atLeast"; j["value"] = d.value; break;
        case ExtendedDegree::Kind::AtMost: j["kind"] = "atMost"; j["value"] = d.value; break;
    }
    return j;
}

json regJson(const RegValue& v) {
    json j = edJson(v.value);
    j["status"] = regStatusName(v.status);
    if (v.witness) j["witness"] = {v.witness->first, v.witness->second};
    return j;
}

// censored-interval endpoints saturate at the representable infinity
json degEnd(long long v) {
    if (v >= ExtendedDegree::kInf) return json("+inf");
    if (v <= -ExtendedDegree::kInf) return json("-inf");
    return json(v);
}

json boundsJson(const Bounds& b) {
    return json{{"H", b.H}, {"N", b.N}, {"nMax", b.nMax < 0 ? 2 * b.N : b.nMax}};
}

json baseReport(const std::string& algebra, const Bounds& b) {
    json j;
    j["tool"] = "gradreg";
    j["version"] = "0.1.0";
    j["algebra"] = algebra;
    j["bounds"] = boundsJson(b);
    j["results"] = json::object();
    j["checks"] = json::array();
    return j;
}

json tableJson(const DegreeTable& t) {
    json j;
    j["rowSign"] = t.rowSign;
    j["H"] = t.H;
    j["tailExactZero"] = t.tailExactZero;
    if (t.tailValueLowerBound) j["tailValueLowerBound"] = *t.tailValueLowerBound;
    if (t.tailValueUpperBound) j["tailValueUpperBound"] = *t.tailValueUpperBound;
    json cells = json::array();
    for (auto& [mj, dim] : t.entries)
        cells.push_back({{"m", mj.first}, {"j", mj.second}, {"dim", dim}});
    j["entries"] = cells;
    json cens = json::array();
    for (auto& [m, spans] : t.censored)
        for (auto& [from, to] : spans)
            cens.push_back({{"m", m}, {"from", degEnd(from)}, {"to", degEnd(to)}});
    j["censored"] = cens;
    j["sdeg"] = regJson(table_sdeg(t));
    j["ideg"] = regJson(table_ideg(t));
    if (!t.note.empty()) j["note"] = t.note;
    return j;
}

json bettiJson(const BettiTable& B) {
    json j;
    j["H"] = B.H;
    j["N"] = B.N;
    j["terminated"] = B.terminated;
    j["a0Semisimple"] = B.a0Semisimple;
    json rows = json::array();
    for (std::size_t m = 0; m < B.beta.size(); ++m)
        for (auto& [s, counts] : B.beta[m]) {
            long long tot = 0;
            for (long long c : counts) tot += c;
            if (tot) rows.push_back({{"m", m}, {"s", s}, {"counts", counts}});
        }
    j["beta"] = rows;
    return j;
}

json regsJson(const RegularityReport& r) {
    json j;
    j["CMreg"] = regJson(r.CMreg);
    j["cmreg"] = regJson(r.cmreg);
    j["Torreg"] = regJson(r.Torreg);
    j["torreg"] = regJson(r.torreg);
    j["Extreg"] = regJson(r.Extreg);
    j["extreg"] = regJson(r.extreg);
    j["Exreg"] = regJson(r.Exreg);
    j["exreg"] = regJson(r.exreg);
    j["depth"] = regJson(r.depth);
    j["pdim"] = regJson(r.pdim);
    return j;
}

struct AlgebraPick {
    std::string catalogName;
    std::string presFile;
    const CatalogEntry* entry = nullptr;  // set when catalogName resolves

    std::string name() const {
        return !catalogName.empty() ? catalogName : presFile.empty() ? "adhoc" : presFile;
    }
    AlgebraHandle build(long long N) {
        if (!catalogName.empty()) {
            entry = catalog_find(catalogName);
            if (!entry) throw BadInput("unknown catalog algebra: " + catalogName);
            return catalog_build(*entry, N);
        }
        if (presFile.empty()) throw BadInput("either --catalog or --presentation is required");
        std::ifstream in(presFile);
        if (!in) throw BadInput("cannot open presentation file: " + presFile);
        std::stringstream ss;
        ss << in.rdbuf();
        return build_truncated(parse_presentation(ss.str()), N);
    }
    const ASGorensteinData* gorenstein() const {
        return entry && entry->gorenstein ? &*entry->gorenstein : nullptr;
    }
};

// module grammar: trivial | A | simple:IDX | random:SEED
ModuleHandle moduleFor(const AlgebraHandle& a, const std::string& spec, long long N) {
    if (spec == "trivial") return trivial_module(a, N);
    if (spec == "A") return algebra_module(a, N);
    auto starts = [&](const char* p) { return spec.rfind(p, 0) == 0; };
    try {
        if (starts("simple:")) return simple_module(a, (std::size_t)std::stoull(spec.substr(7)), N);
        if (starts("random:"))
            return random_module(a, std::stoull(spec.substr(7)), RandomModuleParams{}, N);
    } catch (const std::logic_error&) {
        throw BadInput("malformed module index in: " + spec);
    }
    throw BadInput("unknown module spec: " + spec + " (trivial | A | simple:IDX | random:SEED)");
}

void writeOut(const json& j, const std::string& outPath) {
    std::string body = j.dump(2) + "\n";
    if (outPath.empty()) {
        std::cout << body;
        return;
    }
    std::ofstream out(outPath);
    if (!out) throw BadInput("cannot open --out file: " + outPath);
    out << body;
}

std::vector<long long> parseIntList(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stoll(tok));
    return out;
}

json suiteJson(const SuiteReport& rep, const Bounds& b) {
    json j = baseReport(rep.algebra, b);
    j["results"] = {{"masterSeed", rep.masterSeed},
                    {"instances", rep.instances},
                    {"holds", rep.holds},
                    {"fails", rep.fails},
                    {"inconclusive", rep.inconclusive},
                    {"skipped", rep.skipped}};
    for (const CheckOutcome& o : rep.outcomes)
        j["checks"].push_back({{"check", o.check},
                               {"instance", o.instance},
                               {"seed", o.seed},
                               {"left", edJson(o.left)},
                               {"right", edJson(o.right)},
                               {"verdict", verdictName(o.verdict)},
                               {"witness", o.witness}});
    return j;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic workbench for graded-module regularities"};
    app.require_subcommand(1);

    std::string catalogName, presFile, outPath, moduleSpec = "trivial";
    std::string xSpec = "trivial", ySpec = "A", cmStrategy = "limit", dumpName;
    long long N = 12, H = 8, nMax = -1, instances = 25;
    std::uint64_t seed = 42;
    std::vector<std::string> only;
    std::string pList, ellList, sigmaList, mRows;

    auto addAlgebraOpts = [&](CLI::App* c) {
        c->add_option("--catalog", catalogName, "catalog algebra name");
        c->add_option("--presentation", presFile, "presentation JSON file");
        c->add_option("--N", N, "truncation window");
    };

    CLI::App* cAlg = app.add_subcommand("algebra", "build an algebra and report its structure");
    addAlgebraOpts(cAlg);
    bool wantHilbert = false, wantA0 = false;
    cAlg->add_flag("--hilbert", wantHilbert, "vertex-block dimension table");
    cAlg->add_flag("--a0", wantA0, "degree-zero structure");
    cAlg->add_option("--out", outPath, "write the report here instead of stdout");

    CLI::App* cRes = app.add_subcommand("resolve", "minimal resolution and Betti table");
    addAlgebraOpts(cRes);
    cRes->add_option("--module", moduleSpec, "trivial | A | simple:IDX | random:SEED");
    cRes->add_option("--H", H, "homological depth");
    cRes->add_option("--out", outPath, "write the report here instead of stdout");

    CLI::App* cReg = app.add_subcommand("reg", "all regularity readings for a module");
    addAlgebraOpts(cReg);
    cReg->add_option("--module", moduleSpec, "trivial | A | simple:IDX | random:SEED");
    cReg->add_option("--H", H, "homological depth");
    cReg->add_option("--n-max", nMax, "stage cap for the limit strategy (default 2N)");
    cReg->add_option("--cm", cmStrategy, "limit | duality")
        ->check(CLI::IsMember({"limit", "duality"}));
    cReg->add_option("--out", outPath, "write the report here instead of stdout");

    CLI::App* cTor = app.add_subcommand("tor", "graded Tor table (Y over the opposite algebra)");
    addAlgebraOpts(cTor);
    cTor->add_option("--X", xSpec, "left module");
    cTor->add_option("--Y", ySpec, "right module, specified over opposite(A)");
    cTor->add_option("--H", H, "homological depth");
    cTor->add_option("--out", outPath, "write the report here instead of stdout");

    CLI::App* cExt = app.add_subcommand("ext", "graded Ext table");
    addAlgebraOpts(cExt);
    cExt->add_option("--X", xSpec, "source module");
    cExt->add_option("--Y", ySpec, "target module");
    cExt->add_option("--H", H, "homological depth");
    cExt->add_option("--out", outPath, "write the report here instead of stdout");

    CLI::App* cTwist = app.add_subcommand("twist", "endomorphism twist / parameter equalization");
    addAlgebraOpts(cTwist);
    cTwist->add_option("--p", pList, "comma-separated twist offsets, one per vertex");
    cTwist->add_option("--ell", ellList, "Gorenstein parameters for --equalize");
    cTwist->add_option("--sigma", sigmaList, "permutation (images, 0-based) for --equalize");
    cTwist->add_option("--m", mRows, "degree matrix rows 'a,b;c,d' for --equalize");
    bool wantEqualize = false;
    cTwist->add_flag("--equalize", wantEqualize, "solve the parameter-equalization system");
    cTwist->add_option("--out", outPath, "write the report here instead of stdout");

    CLI::App* cVer = app.add_subcommand("verify", "run the theorem suite");
    addAlgebraOpts(cVer);
    cVer->add_option("--seed", seed, "master seed");
    cVer->add_option("--instances", instances, "random modules per check");
    cVer->add_option("--H", H, "homological depth");
    cVer->add_option("--only", only, "restrict to these check ids (repeatable)");
    cVer->add_option("--out", outPath, "write the report here instead of stdout");

    CLI::App* cCat = app.add_subcommand("catalog", "list the built-in algebras");
    cCat->add_option("--dump", dumpName, "emit one entry's presentation JSON");
    cCat->add_option("--out", outPath, "write the report here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Bounds b{H, N, nMax};
        AlgebraPick pick{catalogName, presFile};

        if (cCat->parsed()) {
            if (!dumpName.empty()) {
                const CatalogEntry* e = catalog_find(dumpName);
                if (!e) throw BadInput("unknown catalog algebra: " + dumpName);
                writeOut(json::parse(e->presentation), outPath);
                return 0;
            }
            json j = json::array();
            for (const CatalogEntry& e : catalog()) {
                json row{{"name", e.name},
                         {"summary", e.summary},
                         {"noetherian", e.noetherian},
                         {"balancedDualizing", e.bdc},
                         {"a0Semisimple", e.a0Semisimple}};
                if (e.gorenstein) {
                    row["gorenstein"] = {{"d", e.gorenstein->d},
                                         {"ell", e.gorenstein->ell},
                                         {"sigma", e.gorenstein->sigma},
                                         {"r", e.gorenstein->r}};
                }
                j.push_back(row);
            }
            writeOut(j, outPath);
            return 0;
        }

        if (cAlg->parsed()) {
            AlgebraHandle a = pick.build(N);
            json j = baseReport(pick.name(), b);
            json& res = j["results"];
            res["field"] = a->field.rational() ? json("Q") : json(a->field.p);
            res["vertices"] = a->vertexNames;
            res["dims"] = a->dims;
            res["genDegreeBound"] = a->genDegreeBound;
            if (wantHilbert) {
                auto hb = hilbert(*a);
                json blocks = json::array();
                for (std::size_t d = 0; d < hb.size(); ++d)
                    blocks.push_back({{"d", d}, {"blocks", hb[d]}});
                res["hilbert"] = blocks;
            }
            if (wantA0) {
                const A0Data& z = a0_structure(a);
                res["a0"] = {{"semisimple", z.semisimple},
                             {"basic", z.basic},
                             {"radicalRank", z.radicalBasis.cols()},
                             {"multiplicity", z.multiplicity}};
            }
            writeOut(j, outPath);
            return 0;
        }

        if (cRes->parsed()) {
            AlgebraHandle a = pick.build(N);
            ModuleHandle M = moduleFor(a, moduleSpec, N);
            ResolutionTruncation R = minimal_resolution(M, H, N);
            BettiTable B = betti(R);
            json j = baseReport(pick.name(), b);
            json& res = j["results"];
            res["module"] = moduleSpec;
            res["betti"] = bettiJson(B);
            res["minimal"] = check_minimality(R);
            res["pdim"] = edJson(pdim_of(R));
            res["linear"] = verdictName(is_linear(B));
            TorregResult t = torreg_from_betti(B);
            res["Torreg"] = regJson(t.Torreg);
            res["torreg"] = regJson(t.torreg);
            writeOut(j, outPath);
            return 0;
        }

        if (cReg->parsed()) {
            AlgebraHandle a = pick.build(N);
            ModuleHandle M = moduleFor(a, moduleSpec, N);
            CmStrategy strat =
                cmStrategy == "duality" ? CmStrategy::Duality : CmStrategy::Limit;
            const ASGorensteinData* Gp = pick.gorenstein();
            std::optional<ASGorensteinData> Gv;
            if (Gp) {
                Gv = verify_gorenstein(a, *Gp, H, N);
                Gp = &*Gv;
            }
            json j = baseReport(pick.name(), b);
            json& res = j["results"];
            res["strategy"] = cmStrategy;
            res["module"] = moduleSpec;
            res["moduleRegs"] = regsJson(regs_of_module(M, b, strat, Gp));
            res["algebra"] = regsJson(regs_of_module(algebra_module(a, N), b, strat, Gp));
            ASRegResult as = asreg(a, b, Gp);
            res["ASreg"] = regJson(as.ASreg);
            res["asreg"] = regJson(as.asreg);
            if (Gv && !Gv->warning.empty()) res["gorensteinWarning"] = Gv->warning;
            writeOut(j, outPath);
            return 0;
        }

        if (cTor->parsed() || cExt->parsed()) {
            AlgebraHandle a = pick.build(N);
            json j = baseReport(pick.name(), b);
            json& res = j["results"];
            ModuleHandle X = moduleFor(a, xSpec, N);
            if (cTor->parsed()) {
                ModuleHandle Y = moduleFor(opposite(a), ySpec, N);
                res["table"] = tableJson(tor_table(Y, X, H, N));
            } else {
                ModuleHandle Y = moduleFor(a, ySpec, N);
                res["table"] = tableJson(ext_table(X, Y, H, N));
            }
            res["X"] = xSpec;
            res["Y"] = ySpec;
            writeOut(j, outPath);
            return 0;
        }

        if (cTwist->parsed()) {
            json j = baseReport(pick.name(), b);
            json& res = j["results"];
            if (wantEqualize) {
                std::vector<long long> ell = parseIntList(ellList);
                std::vector<long long> sig = parseIntList(sigmaList);
                std::vector<std::size_t> sigma(sig.begin(), sig.end());
                std::vector<std::vector<long long>> m;
                std::stringstream ss(mRows);
                std::string row;
                while (std::getline(ss, row, ';')) m.push_back(parseIntList(row));
                EqualizeResult eq = equalize_parameters(ell, sigma, m);
                res["feasible"] = eq.feasible;
                res["p"] = eq.p;
                res["ellB"] = eq.ellB;
                res["cycle"] = eq.cycle;
                res["reason"] = eq.reason;
            } else {
                if (pList.empty()) throw BadInput("twist needs --p offsets or --equalize");
                AlgebraHandle a = pick.build(N);
                AlgebraHandle t = endo_twist(a, parseIntList(pList));
                res["p"] = parseIntList(pList);
                res["dims"] = t->dims;
                auto hb = hilbert(*t);
                json blocks = json::array();
                for (std::size_t d = 0; d < hb.size(); ++d)
                    blocks.push_back({{"d", d}, {"blocks", hb[d]}});
                res["hilbert"] = blocks;
            }
            writeOut(j, outPath);
            return 0;
        }

        if (cVer->parsed()) {
            AlgebraHandle a = pick.build(N);
            SuiteConfig cfg;
            cfg.masterSeed = seed;
            cfg.instances = instances;
            cfg.bounds = b;
            cfg.facts = pick.entry ? facts_for(*pick.entry) : SuiteFacts{};
            cfg.only = only;
            SuiteReport rep = run_theorem_suite(a, cfg);
            writeOut(suiteJson(rep, b), outPath);
            return rep.fails > 0 ? 1 : 0;
        }
    } catch (const GradregError& e) {
        std::cerr << json{{"error", e.kind}, {"message", e.what()}}.dump() << "\n";
        return exitCodeFor(e);
    } catch (const std::exception& e) {
        std::cerr << json{{"error", "internal"}, {"message", e.what()}}.dump() << "\n";
        return 3;
    }
    return 2;
}
