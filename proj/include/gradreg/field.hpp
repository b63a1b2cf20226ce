#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace gradreg {

// p == 0 means the rationals; otherwise F_p with p an odd machine-word prime.
struct FieldSpec {
    std::uint64_t p = 0;
    bool rational() const { return p == 0; }
    bool operator==(const FieldSpec&) const = default;
};

struct Rref;

// Dense exact matrix. Storage is tagged by field: canonical residues in
// int64 for F_p, mpq_class for Q. All ops are deterministic.
class Mat {
  public:
    Mat() : Mat(FieldSpec{0}, 0, 0) {}
    Mat(FieldSpec fs, std::size_t rows, std::size_t cols);
    static Mat identity(FieldSpec fs, std::size_t n);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    FieldSpec field() const { return fs_; }

    void set(std::size_t r, std::size_t c, long long v);
    void setRational(std::size_t r, std::size_t c, const mpq_class& v);
    void addRational(std::size_t r, std::size_t c, const mpq_class& v);
    void addP(std::size_t r, std::size_t c, long long v);  // F_p only

    long long get(std::size_t r, std::size_t c) const;        // F_p only, in [0, p)
    const mpq_class& getq(std::size_t r, std::size_t c) const;  // Q only
    bool entryZero(std::size_t r, std::size_t c) const;
    bool zero() const;

    Mat mul(const Mat& rhs) const;
    Mat transpose() const;
    void paste(const Mat& src, std::size_t r0, std::size_t c0);
    Mat sub(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const;
    Mat selectCols(const std::vector<std::size_t>& cols) const;

    bool operator==(const Mat& o) const;

  private:
    friend Rref rref(const Mat&);
    FieldSpec fs_;
    std::size_t r_ = 0, c_ = 0;
    std::vector<long long> ip_;    // F_p storage
    std::vector<mpq_class> q_;     // Q storage
    std::size_t idx(std::size_t r, std::size_t c) const { return r * c_ + c; }
    void check(std::size_t r, std::size_t c) const {
        if (r >= r_ || c >= c_) throw std::out_of_range("Mat index");
    }
};

struct Rref {
    std::size_t rank = 0;
    std::vector<std::size_t> pivots;  // pivot column of row i, strictly increasing
    Mat R;                             // reduced row echelon form
    Mat kernel;                        // columns form the canonical right-null basis
};

Rref rref(const Mat& m);

// Solves a * X = b exactly; nullopt if any column of b is outside the column
// space of a. Free coordinates of X are zero, so the answer is canonical.
std::optional<Mat> solveColumns(const Mat& a, const Mat& b);

long long invMod(long long a, long long p);

}  // namespace gradreg
