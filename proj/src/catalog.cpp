#include "gradreg/catalog.hpp"

#include "gradreg/presentation.hpp"

namespace gradreg {

namespace {

// The suite's default field. 32003 is prime and large enough that random
// desk-scale ranks don't collide with the characteristic.
constexpr const char* kFp = R"("field":{"Fp":32003})";

ASGorensteinData gor(long long d, long long ell) {
    ASGorensteinData g;
    g.d = d;
    g.ell = {ell};
    g.sigma = {0};
    g.r = {1};
    return g;
}

std::vector<CatalogEntry> makeCatalog() {
    std::vector<CatalogEntry> c;

    c.push_back({"poly1", "k[x], one degree-1 variable",
                 std::string("{") + kFp + R"(,"vertices":["v"],
        "arrows":[{"name":"x","from":"v","to":"v","deg":1}],
        "relations":[]})",
                 true, true, true, gor(1, 1)});

    c.push_back({"poly2", "k[x,y], the commutative plane",
                 std::string("{") + kFp + R"(,"vertices":["v"],
        "arrows":[{"name":"x","from":"v","to":"v","deg":1},
                  {"name":"y","from":"v","to":"v","deg":1}],
        "relations":[[{"coef":1,"path":["y","x"]},{"coef":-1,"path":["x","y"]}]]})",
                 true, true, true, gor(2, 2)});

    c.push_back({"poly3", "k[x,y,z]",
                 std::string("{") + kFp + R"(,"vertices":["v"],
        "arrows":[{"name":"x","from":"v","to":"v","deg":1},
                  {"name":"y","from":"v","to":"v","deg":1},
                  {"name":"z","from":"v","to":"v","deg":1}],
        "relations":[[{"coef":1,"path":["y","x"]},{"coef":-1,"path":["x","y"]}],
                     [{"coef":1,"path":["z","x"]},{"coef":-1,"path":["x","z"]}],
                     [{"coef":1,"path":["z","y"]},{"coef":-1,"path":["y","z"]}]]})",
                 true, true, true, gor(3, 3)});

    c.push_back({"qplane", "quantum plane, yx = 2xy",
                 std::string("{") + kFp + R"(,"vertices":["v"],
        "arrows":[{"name":"x","from":"v","to":"v","deg":1},
                  {"name":"y","from":"v","to":"v","deg":1}],
        "relations":[[{"coef":1,"path":["y","x"]},{"coef":-2,"path":["x","y"]}]]})",
                 true, true, true, gor(2, 2)});

    c.push_back({"jordan", "Jordan plane, yx = xy + x^2",
                 std::string("{") + kFp + R"(,"vertices":["v"],
        "arrows":[{"name":"x","from":"v","to":"v","deg":1},
                  {"name":"y","from":"v","to":"v","deg":1}],
        "relations":[[{"coef":1,"path":["y","x"]},{"coef":-1,"path":["x","y"]},
                      {"coef":-1,"path":["x","x"]}]]})",
                 true, true, true, gor(2, 2)});

    c.push_back({"ext2", "exterior algebra on x, y",
                 std::string("{") + kFp + R"(,"vertices":["v"],
        "arrows":[{"name":"x","from":"v","to":"v","deg":1},
                  {"name":"y","from":"v","to":"v","deg":1}],
        "relations":[[{"coef":1,"path":["x","x"]}],
                     [{"coef":1,"path":["y","y"]}],
                     [{"coef":1,"path":["y","x"]},{"coef":1,"path":["x","y"]}]]})",
                 true, true, true, gor(0, -2)});

    c.push_back({"dualnum", "dual numbers k[x]/(x^2)",
                 std::string("{") + kFp + R"(,"vertices":["v"],
        "arrows":[{"name":"x","from":"v","to":"v","deg":1}],
        "relations":[[{"coef":1,"path":["x","x"]}]]})",
                 true, true, true, gor(0, -1)});

    c.push_back({"kron2", "Kronecker quiver: two arrows u -> w",
                 std::string("{") + kFp + R"(,"vertices":["u","w"],
        "arrows":[{"name":"a","from":"u","to":"w","deg":1},
                  {"name":"b","from":"u","to":"w","deg":1}],
        "relations":[]})",
                 true, true, true, std::nullopt});

    c.push_back({"tri2", "lower-triangular k[t]: loops x, y and a bridge a",
                 std::string("{") + kFp + R"(,"vertices":["1","2"],
        "arrows":[{"name":"x","from":"1","to":"1","deg":1},
                  {"name":"y","from":"2","to":"2","deg":1},
                  {"name":"a","from":"1","to":"2","deg":1}],
        "relations":[[{"coef":1,"path":["x","a"]},{"coef":-1,"path":["a","y"]}]]})",
                 true, false, true, std::nullopt});

    c.push_back({"a0loop", "degree-0 nilpotent loop: non-semisimple A_0",
                 std::string("{") + kFp + R"(,"vertices":["v"],
        "arrows":[{"name":"eps","from":"v","to":"v","deg":0}],
        "relations":[[{"coef":1,"path":["eps","eps"]}]]})",
                 true, true, false, std::nullopt});

    return c;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
    static const std::vector<CatalogEntry> c = makeCatalog();
    return c;
}

const CatalogEntry* catalog_find(const std::string& name) {
    for (const CatalogEntry& e : catalog())
        if (e.name == name) return &e;
    return nullptr;
}

AlgebraHandle catalog_build(const CatalogEntry& e, long long N) {
    return build_truncated(parse_presentation(e.presentation), N);
}

}  // namespace gradreg
