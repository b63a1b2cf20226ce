#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gradreg/field.hpp"
#include "gradreg/presentation.hpp"

namespace gradreg {

// Degree-0 structure. The radical comes from the trace form, so it is valid in
// characteristic 0 or when p > dim A_0; a0_structure throws otherwise.
struct A0Data {
    Mat radicalBasis;  // dim A_0 x r, echelon columns
    bool semisimple = false;
    bool basic = false;
    // simple-block multiplicity per vertex when the block dimension is a
    // perfect square, 0 when unrecognized (then basic is false anyway)
    std::vector<long long> multiplicity;
};

/// A graded algebra truncated at degree N: indexed bases per degree with
// source/target block labels, plus complete multiplication tables. Everything
// downstream consumes only this data, never the presentation, so table-given
// algebras (opposite, endo_twist) flow through the same code paths.
struct TruncatedAlgebra {
    FieldSpec field;
    long long N = 0;
    std::vector<std::string> vertexNames;

    std::vector<long long> dims;                       // d = 0..N
    std::vector<std::vector<std::size_t>> bSrc, bTgt;  // block labels per degree
    std::vector<std::vector<std::string>> bName;       // display names
    // prod[d1][d2]: dims[d1+d2] x dims[d1]*dims[d2]; column i*dims[d2]+j holds
    // the coordinates of basis(d1,i)*basis(d2,j)
    std::vector<std::vector<Mat>> prod;
    Mat idem;                      // dims[0] x nv, column v = coords of e_v
    long long genDegreeBound = 1;  // generated in degrees <= this
    std::string origin;            // "presentation" | "opposite" | "twist"
    std::optional<QuiverPresentation> presentation;

    mutable std::shared_ptr<const A0Data> a0;  // filled by a0_structure

    std::size_t nv() const { return vertexNames.size(); }
    long long dim(long long d) const { return (d < 0 || d > N) ? 0 : dims[(std::size_t)d]; }
    const Mat& product(long long d1, long long d2) const;

    // A zero window of width genDegreeBound certifies that the algebra
    // vanishes above it; then sdimTop() is the true top degree.
    bool finiteDimensionalCertified() const;
    long long sdimTop() const;
};

using AlgebraHandle = std::shared_ptr<const TruncatedAlgebra>;

AlgebraHandle build_truncated(const QuiverPresentation& pres, long long N,
                              std::size_t cap = 100000);
AlgebraHandle opposite(const AlgebraHandle& a);
/// New grading: an element of e_i A e_j in degree a sits in twisted degree
// a + p[i] - p[j]; requires basic semisimple A_0 and a nonnegative result.
AlgebraHandle endo_twist(const AlgebraHandle& a, std::vector<long long> p);
const A0Data& a0_structure(const AlgebraHandle& a);
// dims of e_i A_d e_j, indexed [d][i][j]
std::vector<std::vector<std::vector<long long>>> hilbert(const TruncatedAlgebra& a);

}  // namespace gradreg
