#pragma once

#include <gradreg/field.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace gradreg {

struct Arrow {
    std::string name;
    std::size_t from = 0, to = 0;  // vertex indices
    long long deg = 0;             // >= 0
};

struct PathTerm {
    mpq_class coef;
    std::vector<std::size_t> path;  // arrow indices, composition order source->target
};

struct Relation {
    std::vector<PathTerm> terms;  // homogeneous: shared src, tgt, deg
    std::size_t src = 0, tgt = 0;
    long long deg = 0;
};

struct QuiverPresentation {
    FieldSpec field;
    std::vector<std::string> vertices;
    std::vector<Arrow> arrows;
    std::vector<Relation> relations;

    std::size_t pathSource(const std::vector<std::size_t>& path) const {
        return arrows[path.front()].from;
    }
    std::size_t pathTarget(const std::vector<std::size_t>& path) const {
        return arrows[path.back()].to;
    }
    long long pathDegree(const std::vector<std::size_t>& path) const {
        long long d = 0;
        for (auto a : path) d += arrows[a].deg;
        return d;
    }
};

QuiverPresentation parse_presentation(const std::string& text);
std::string serialize_presentation(const QuiverPresentation& p);

bool isPrime(std::uint64_t n);

}  // namespace gradreg
