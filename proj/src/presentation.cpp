#include <gradreg/presentation.hpp>

#include <gradreg/errors.hpp>

#include <json.hpp>

#include <algorithm>
#include <map>

namespace gradreg {

using nlohmann::ordered_json;

bool isPrime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull}) {
        if (n == d) return true;
        if (n % d == 0) return false;
    }
    // deterministic Miller-Rabin for 64-bit inputs
    auto mulmod = [](std::uint64_t a, std::uint64_t b, std::uint64_t m) {
        return (std::uint64_t)((unsigned __int128)a * b % m);
    };
    auto powmod = [&](std::uint64_t a, std::uint64_t e, std::uint64_t m) {
        std::uint64_t r = 1;
        a %= m;
        for (; e; e >>= 1) {
            if (e & 1) r = mulmod(r, a, m);
            a = mulmod(a, a, m);
        }
        return r;
    };
    std::uint64_t d = n - 1;
    int s = 0;
    while (!(d & 1)) d >>= 1, ++s;
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (a % n == 0) continue;
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

mpq_class parseCoef(const ordered_json& j) {
    if (j.is_number_integer()) return mpq_class((long)j.get<long long>());
    if (!j.is_string()) throw SyntaxError("coef must be a string or integer");
    std::string s = j.get<std::string>();
    if (s.empty()) throw SyntaxError("empty coef");
    // validate: optional sign, digits, optional /digits
    std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool sawDigit = false, sawSlash = false;
    for (; i < s.size(); ++i) {
        if (s[i] == '/' && sawDigit && !sawSlash) {
            sawSlash = true;
            sawDigit = false;
        } else if (s[i] >= '0' && s[i] <= '9') {
            sawDigit = true;
        } else {
            throw SyntaxError("bad coefficient '" + s + "'");
        }
    }
    if (!sawDigit) throw SyntaxError("bad coefficient '" + s + "'");
    mpq_class q(s);
    q.canonicalize();
    return q;
}

}  // namespace

QuiverPresentation parse_presentation(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
    } catch (const std::exception& e) {
        throw SyntaxError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw SyntaxError("top level must be an object");
    for (const char* key : {"field", "vertices", "arrows", "relations"})
        if (!doc.contains(key)) throw SyntaxError(std::string("missing key '") + key + "'");

    QuiverPresentation p;

    const auto& f = doc["field"];
    if (f.is_string() && f.get<std::string>() == "Q") {
        p.field = FieldSpec{0};
    } else if (f.is_object() && f.contains("Fp") && f["Fp"].is_number_integer()) {
        long long v = f["Fp"].get<long long>();
        if (v < 2 || v >= (1ll << 31) || !isPrime((std::uint64_t)v))
            throw SyntaxError("Fp modulus must be a prime below 2^31");
        p.field = FieldSpec{(std::uint64_t)v};
    } else {
        throw SyntaxError("field must be \"Q\" or {\"Fp\": p}");
    }

    if (!doc["vertices"].is_array() || doc["vertices"].empty())
        throw SyntaxError("need at least one vertex");
    std::map<std::string, std::size_t> vIndex;
    for (const auto& v : doc["vertices"]) {
        if (!v.is_string()) throw SyntaxError("vertex names must be strings");
        std::string name = v.get<std::string>();
        if (name.empty()) throw SyntaxError("empty vertex name");
        if (!vIndex.emplace(name, p.vertices.size()).second)
            throw SyntaxError("duplicate vertex '" + name + "'");
        p.vertices.push_back(name);
    }

    if (!doc["arrows"].is_array()) throw SyntaxError("arrows must be an array");
    std::map<std::string, std::size_t> aIndex;
    for (const auto& a : doc["arrows"]) {
        if (!a.is_object() || !a.contains("name") || !a.contains("from") || !a.contains("to") ||
            !a.contains("deg"))
            throw SyntaxError("arrow needs name/from/to/deg");
        Arrow arr;
        arr.name = a["name"].get<std::string>();
        if (arr.name.empty()) throw SyntaxError("empty arrow name");
        auto from = vIndex.find(a["from"].get<std::string>());
        auto to = vIndex.find(a["to"].get<std::string>());
        if (from == vIndex.end()) throw UnknownSymbol("vertex '" + a["from"].get<std::string>() + "'");
        if (to == vIndex.end()) throw UnknownSymbol("vertex '" + a["to"].get<std::string>() + "'");
        arr.from = from->second;
        arr.to = to->second;
        if (!a["deg"].is_number_integer() || a["deg"].get<long long>() < 0)
            throw SyntaxError("arrow degree must be a nonnegative integer");
        arr.deg = a["deg"].get<long long>();
        if (!aIndex.emplace(arr.name, p.arrows.size()).second)
            throw SyntaxError("duplicate arrow '" + arr.name + "'");
        p.arrows.push_back(arr);
    }

    if (!doc["relations"].is_array()) throw SyntaxError("relations must be an array");
    for (const auto& rel : doc["relations"]) {
        if (!rel.is_array() || rel.empty()) throw SyntaxError("relation must be a nonempty term array");
        Relation r;
        bool first = true;
        for (const auto& term : rel) {
            if (!term.is_object() || !term.contains("coef") || !term.contains("path"))
                throw SyntaxError("relation term needs coef and path");
            PathTerm t;
            t.coef = parseCoef(term["coef"]);
            if (!term["path"].is_array() || term["path"].empty())
                throw SyntaxError("relation path must be a nonempty arrow list");
            for (const auto& an : term["path"]) {
                auto it = aIndex.find(an.get<std::string>());
                if (it == aIndex.end()) throw UnknownSymbol("arrow '" + an.get<std::string>() + "'");
                t.path.push_back(it->second);
            }
            for (std::size_t i = 0; i + 1 < t.path.size(); ++i)
                if (p.arrows[t.path[i]].to != p.arrows[t.path[i + 1]].from)
                    throw NonComposablePath("'" + p.arrows[t.path[i]].name + "' then '" +
                                            p.arrows[t.path[i + 1]].name + "'");
            std::size_t src = p.pathSource(t.path), tgt = p.pathTarget(t.path);
            long long deg = p.pathDegree(t.path);
            if (first) {
                r.src = src;
                r.tgt = tgt;
                r.deg = deg;
                first = false;
            } else if (src != r.src || tgt != r.tgt || deg != r.deg) {
                throw InhomogeneousRelation("terms differ in source/target/degree");
            }
            r.terms.push_back(std::move(t));
        }
        p.relations.push_back(std::move(r));
    }
    return p;
}

std::string serialize_presentation(const QuiverPresentation& p) {
    ordered_json doc;
    if (p.field.rational())
        doc["field"] = "Q";
    else
        doc["field"] = ordered_json{{"Fp", p.field.p}};
    doc["vertices"] = p.vertices;
    doc["arrows"] = ordered_json::array();
    for (const auto& a : p.arrows)
        doc["arrows"].push_back(ordered_json{
            {"name", a.name}, {"from", p.vertices[a.from]}, {"to", p.vertices[a.to]}, {"deg", a.deg}});
    doc["relations"] = ordered_json::array();
    for (const auto& r : p.relations) {
        ordered_json rel = ordered_json::array();
        for (const auto& t : r.terms) {
            ordered_json paths = ordered_json::array();
            for (auto ai : t.path) paths.push_back(p.arrows[ai].name);
            rel.push_back(ordered_json{{"coef", t.coef.get_str()}, {"path", paths}});
        }
        doc["relations"].push_back(rel);
    }
    return doc.dump(2);
}

}  // namespace gradreg
