#pragma once

// Presentation fixtures shared by the unit tests. The CLI catalog carries its
// own authoritative copies; these exist so layer tests don't depend on it.

#include <string>

namespace gradreg::testing {

inline std::string poly1() {
    return R"({"field":"Q","vertices":["v"],
      "arrows":[{"name":"x","from":"v","to":"v","deg":1}],
      "relations":[]})";
}

inline std::string poly2() {
    return R"({"field":"Q","vertices":["v"],
      "arrows":[{"name":"x","from":"v","to":"v","deg":1},
                {"name":"y","from":"v","to":"v","deg":1}],
      "relations":[[{"coef":1,"path":["y","x"]},{"coef":-1,"path":["x","y"]}]]})";
}

inline std::string poly3() {
    return R"({"field":"Q","vertices":["v"],
      "arrows":[{"name":"x","from":"v","to":"v","deg":1},
                {"name":"y","from":"v","to":"v","deg":1},
                {"name":"z","from":"v","to":"v","deg":1}],
      "relations":[[{"coef":1,"path":["y","x"]},{"coef":-1,"path":["x","y"]}],
                   [{"coef":1,"path":["z","x"]},{"coef":-1,"path":["x","z"]}],
                   [{"coef":1,"path":["z","y"]},{"coef":-1,"path":["y","z"]}]]})";
}

// yx = q*xy; field F_p unless p == 0.
inline std::string qplane(long long q, unsigned long long p) {
    std::string field = p == 0 ? std::string("\"Q\"") : "{\"Fp\":" + std::to_string(p) + "}";
    return "{\"field\":" + field + R"(,"vertices":["v"],
      "arrows":[{"name":"x","from":"v","to":"v","deg":1},
                {"name":"y","from":"v","to":"v","deg":1}],
      "relations":[[{"coef":1,"path":["y","x"]},{"coef":)" +
           std::to_string(-q) + R"(,"path":["x","y"]}]]})";
}

inline std::string jordan() {
    return R"({"field":"Q","vertices":["v"],
      "arrows":[{"name":"x","from":"v","to":"v","deg":1},
                {"name":"y","from":"v","to":"v","deg":1}],
      "relations":[[{"coef":1,"path":["y","x"]},{"coef":-1,"path":["x","y"]},
                    {"coef":-1,"path":["x","x"]}]]})";
}

inline std::string ext2() {
    return R"({"field":"Q","vertices":["v"],
      "arrows":[{"name":"x","from":"v","to":"v","deg":1},
                {"name":"y","from":"v","to":"v","deg":1}],
      "relations":[[{"coef":1,"path":["x","x"]}],
                   [{"coef":1,"path":["y","y"]}],
                   [{"coef":1,"path":["y","x"]},{"coef":1,"path":["x","y"]}]]})";
}

inline std::string dualnum() {
    return R"({"field":"Q","vertices":["v"],
      "arrows":[{"name":"x","from":"v","to":"v","deg":1}],
      "relations":[[{"coef":1,"path":["x","x"]}]]})";
}

inline std::string kron2() {
    return R"({"field":"Q","vertices":["u","w"],
      "arrows":[{"name":"a","from":"u","to":"w","deg":1},
                {"name":"b","from":"u","to":"w","deg":1}],
      "relations":[]})";
}

inline std::string tri2() {
    return R"({"field":"Q","vertices":["1","2"],
      "arrows":[{"name":"x","from":"1","to":"1","deg":1},
                {"name":"y","from":"2","to":"2","deg":1},
                {"name":"t","from":"1","to":"2","deg":1}],
      "relations":[[{"coef":1,"path":["x","t"]},{"coef":-1,"path":["t","y"]}]]})";
}

inline std::string a0loop() {
    return R"({"field":"Q","vertices":["v"],
      "arrows":[{"name":"eps","from":"v","to":"v","deg":0}],
      "relations":[[{"coef":1,"path":["eps","eps"]}]]})";
}

// Free degree-0 loop: not locally finite, must be rejected at build time.
inline std::string a0free() {
    return R"({"field":"Q","vertices":["v"],
      "arrows":[{"name":"eps","from":"v","to":"v","deg":0}],
      "relations":[]})";
}

}  // namespace gradreg::testing
