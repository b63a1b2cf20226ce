#include <gradreg/field.hpp>

namespace gradreg {

long long invMod(long long a, long long p) {
    long long t = 0, newt = 1, r = p, newr = a % p;
    if (newr < 0) newr += p;
    while (newr != 0) {
        long long q = r / newr;
        t -= q * newt;
        std::swap(t, newt);
        r -= q * newr;
        std::swap(r, newr);
    }
    if (r != 1) throw std::domain_error("not invertible mod p");
    return t < 0 ? t + p : t;
}

Mat::Mat(FieldSpec fs, std::size_t rows, std::size_t cols) : fs_(fs), r_(rows), c_(cols) {
    if (fs_.rational())
        q_.assign(r_ * c_, mpq_class(0));
    else
        ip_.assign(r_ * c_, 0);
}

Mat Mat::identity(FieldSpec fs, std::size_t n) {
    Mat m(fs, n, n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, 1);
    return m;
}

void Mat::set(std::size_t r, std::size_t c, long long v) {
    check(r, c);
    if (fs_.rational()) {
        q_[idx(r, c)] = mpq_class((long)v);
    } else {
        long long p = (long long)fs_.p;
        long long x = v % p;
        ip_[idx(r, c)] = x < 0 ? x + p : x;
    }
}

void Mat::setRational(std::size_t r, std::size_t c, const mpq_class& v) {
    check(r, c);
    if (fs_.rational()) {
        q_[idx(r, c)] = v;
        return;
    }
    long long p = (long long)fs_.p;
    mpz_class pm((long)p);
    mpz_class nm = v.get_num() % pm, dm = v.get_den() % pm;
    long long n = nm.get_si(), d = dm.get_si();
    if (n < 0) n += p;
    if (d < 0) d += p;
    if (d == 0) throw std::domain_error("denominator divisible by p");
    ip_[idx(r, c)] = n * invMod(d, p) % p;
}

void Mat::addRational(std::size_t r, std::size_t c, const mpq_class& v) {
    if (fs_.rational()) {
        check(r, c);
        q_[idx(r, c)] += v;
    } else {
        Mat tmp(fs_, 1, 1);
        tmp.setRational(0, 0, v);
        addP(r, c, tmp.ip_[0]);
    }
}

void Mat::addP(std::size_t r, std::size_t c, long long v) {
    check(r, c);
    long long p = (long long)fs_.p;
    long long x = (ip_[idx(r, c)] + v % p) % p;
    ip_[idx(r, c)] = x < 0 ? x + p : x;
}

long long Mat::get(std::size_t r, std::size_t c) const {
    check(r, c);
    return ip_[idx(r, c)];
}

const mpq_class& Mat::getq(std::size_t r, std::size_t c) const {
    check(r, c);
    return q_[idx(r, c)];
}

bool Mat::entryZero(std::size_t r, std::size_t c) const {
    check(r, c);
    return fs_.rational() ? q_[idx(r, c)] == 0 : ip_[idx(r, c)] == 0;
}

bool Mat::zero() const {
    if (fs_.rational()) {
        for (const auto& v : q_)
            if (v != 0) return false;
    } else {
        for (auto v : ip_)
            if (v) return false;
    }
    return true;
}

Mat Mat::mul(const Mat& rhs) const {
    if (c_ != rhs.r_ || !(fs_ == rhs.fs_)) throw std::invalid_argument("Mat::mul shape/field");
    Mat out(fs_, r_, rhs.c_);
    if (fs_.rational()) {
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t k = 0; k < c_; ++k) {
                const mpq_class& a = q_[idx(i, k)];
                if (a == 0) continue;
                for (std::size_t j = 0; j < rhs.c_; ++j) {
                    const mpq_class& b = rhs.q_[rhs.idx(k, j)];
                    if (b != 0) out.q_[out.idx(i, j)] += a * b;
                }
            }
        for (auto& v : out.q_) v.canonicalize();
    } else {
        long long p = (long long)fs_.p;
        for (std::size_t i = 0; i < r_; ++i)
            for (std::size_t k = 0; k < c_; ++k) {
                long long a = ip_[idx(i, k)];
                if (!a) continue;
                for (std::size_t j = 0; j < rhs.c_; ++j) {
                    long long b = rhs.ip_[rhs.idx(k, j)];
                    if (b) out.ip_[out.idx(i, j)] = (out.ip_[out.idx(i, j)] + a * b) % p;
                }
            }
    }
    return out;
}

Mat Mat::transpose() const {
    Mat out(fs_, c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) {
            if (fs_.rational())
                out.q_[out.idx(j, i)] = q_[idx(i, j)];
            else
                out.ip_[out.idx(j, i)] = ip_[idx(i, j)];
        }
    return out;
}

void Mat::paste(const Mat& src, std::size_t r0, std::size_t c0) {
    if (!(fs_ == src.fs_)) throw std::invalid_argument("Mat::paste field");
    if (r0 + src.r_ > r_ || c0 + src.c_ > c_) throw std::out_of_range("Mat::paste bounds");
    for (std::size_t i = 0; i < src.r_; ++i)
        for (std::size_t j = 0; j < src.c_; ++j) {
            if (fs_.rational())
                q_[idx(r0 + i, c0 + j)] = src.q_[src.idx(i, j)];
            else
                ip_[idx(r0 + i, c0 + j)] = src.ip_[src.idx(i, j)];
        }
}

Mat Mat::sub(std::size_t r0, std::size_t r1, std::size_t c0, std::size_t c1) const {
    if (r1 < r0 || c1 < c0 || r1 > r_ || c1 > c_) throw std::out_of_range("Mat::sub bounds");
    Mat out(fs_, r1 - r0, c1 - c0);
    for (std::size_t i = r0; i < r1; ++i)
        for (std::size_t j = c0; j < c1; ++j) {
            if (fs_.rational())
                out.q_[out.idx(i - r0, j - c0)] = q_[idx(i, j)];
            else
                out.ip_[out.idx(i - r0, j - c0)] = ip_[idx(i, j)];
        }
    return out;
}

Mat Mat::selectCols(const std::vector<std::size_t>& cols) const {
    Mat out(fs_, r_, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j] >= c_) throw std::out_of_range("Mat::selectCols");
        for (std::size_t i = 0; i < r_; ++i) {
            if (fs_.rational())
                out.q_[out.idx(i, j)] = q_[idx(i, cols[j])];
            else
                out.ip_[out.idx(i, j)] = ip_[idx(i, cols[j])];
        }
    }
    return out;
}

bool Mat::operator==(const Mat& o) const {
    if (!(fs_ == o.fs_) || r_ != o.r_ || c_ != o.c_) return false;
    return fs_.rational() ? q_ == o.q_ : ip_ == o.ip_;
}

Rref rref(const Mat& m) {
    Rref out;
    out.R = m;
    Mat& w = out.R;
    std::size_t rows = w.r_, cols = w.c_;
    std::size_t pr = 0;
    if (w.fs_.rational()) {
        auto* a = w.q_.data();
        for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
            std::size_t sel = rows;
            for (std::size_t i = pr; i < rows; ++i)
                if (a[i * cols + pc] != 0) {
                    sel = i;
                    break;
                }
            if (sel == rows) continue;
            if (sel != pr)
                for (std::size_t j = 0; j < cols; ++j) std::swap(a[pr * cols + j], a[sel * cols + j]);
            mpq_class inv = 1 / a[pr * cols + pc];
            for (std::size_t j = pc; j < cols; ++j)
                if (a[pr * cols + j] != 0) a[pr * cols + j] *= inv;
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == pr || a[i * cols + pc] == 0) continue;
                mpq_class f = a[i * cols + pc];
                for (std::size_t j = pc; j < cols; ++j)
                    if (a[pr * cols + j] != 0) a[i * cols + j] -= f * a[pr * cols + j];
            }
            out.pivots.push_back(pc);
            ++pr;
        }
    } else {
        long long p = (long long)w.fs_.p;
        auto* a = w.ip_.data();
        for (std::size_t pc = 0; pc < cols && pr < rows; ++pc) {
            std::size_t sel = rows;
            for (std::size_t i = pr; i < rows; ++i)
                if (a[i * cols + pc]) {
                    sel = i;
                    break;
                }
            if (sel == rows) continue;
            if (sel != pr)
                for (std::size_t j = 0; j < cols; ++j) std::swap(a[pr * cols + j], a[sel * cols + j]);
            long long inv = invMod(a[pr * cols + pc], p);
            for (std::size_t j = pc; j < cols; ++j) a[pr * cols + j] = a[pr * cols + j] * inv % p;
            for (std::size_t i = 0; i < rows; ++i) {
                if (i == pr) continue;
                long long f = a[i * cols + pc];
                if (!f) continue;
                for (std::size_t j = pc; j < cols; ++j) {
                    long long v = (a[i * cols + j] - f * a[pr * cols + j]) % p;
                    a[i * cols + j] = v < 0 ? v + p : v;
                }
            }
            out.pivots.push_back(pc);
            ++pr;
        }
    }
    out.rank = out.pivots.size();

    std::vector<bool> isPivot(m.cols(), false);
    for (auto pc : out.pivots) isPivot[pc] = true;
    std::vector<std::size_t> freeCols;
    for (std::size_t j = 0; j < m.cols(); ++j)
        if (!isPivot[j]) freeCols.push_back(j);

    out.kernel = Mat(m.field(), m.cols(), freeCols.size());
    for (std::size_t k = 0; k < freeCols.size(); ++k) {
        std::size_t j = freeCols[k];
        out.kernel.set(j, k, 1);
        for (std::size_t i = 0; i < out.rank; ++i) {
            if (m.field().rational())
                out.kernel.setRational(out.pivots[i], k, -out.R.getq(i, j));
            else
                out.kernel.set(out.pivots[i], k, -out.R.get(i, j));
        }
    }
    return out;
}

std::optional<Mat> solveColumns(const Mat& a, const Mat& b) {
    if (a.rows() != b.rows() || !(a.field() == b.field()))
        throw std::invalid_argument("solveColumns shape/field");
    Mat aug(a.field(), a.rows(), a.cols() + b.cols());
    aug.paste(a, 0, 0);
    aug.paste(b, 0, a.cols());
    auto r = rref(aug);
    for (auto pc : r.pivots)
        if (pc >= a.cols()) return std::nullopt;
    Mat x(a.field(), a.cols(), b.cols());
    for (std::size_t i = 0; i < r.rank; ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            if (a.field().rational())
                x.setRational(r.pivots[i], j, r.R.getq(i, a.cols() + j));
            else
                x.set(r.pivots[i], j, r.R.get(i, a.cols() + j));
        }
    return x;
}

}  // namespace gradreg
