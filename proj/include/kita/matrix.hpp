#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "field.hpp"

namespace kita {

/// Coordinate vector over a field, raw canonical values.
using Vec = std::vector<FieldSpec::value_type>;

/// Dense matrix over GF(p^e), row major.
class Mat {
public:
    Mat() : f_(nullptr), rows_(0), cols_(0) {}
    Mat(const FieldSpec* f, std::size_t rows, std::size_t cols)
        : f_(f), rows_(rows), cols_(cols), a_(rows * cols, 0) {}

    static Mat identity(const FieldSpec* f, std::size_t n) {
        Mat m(f, n, n);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static Mat from_rows(const FieldSpec* f, const std::vector<Vec>& rows, std::size_t cols) {
        Mat m(f, rows.size(), cols);
        for (std::size_t r = 0; r < rows.size(); ++r)
            for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
        return m;
    }

    const FieldSpec* field() const { return f_; }
    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    FieldSpec::value_type& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    FieldSpec::value_type at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    Vec row(std::size_t r) const { return Vec(a_.begin() + r * cols_, a_.begin() + (r + 1) * cols_); }
    void set_row(std::size_t r, const Vec& v) {
        for (std::size_t c = 0; c < cols_; ++c) at(r, c) = v[c];
    }

    bool is_zero() const {
        for (auto v : a_)
            if (v) return false;
        return true;
    }

    friend bool operator==(const Mat& a, const Mat& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Mat& a, const Mat& b) { return !(a == b); }

    Mat transpose() const {
        Mat t(f_, cols_, rows_);
        for (std::size_t r = 0; r < rows_; ++r)
            for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
        return t;
    }

    friend Mat operator+(const Mat& a, const Mat& b) {
        Mat r(a.f_, a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.f_->add(a.a_[i], b.a_[i]);
        return r;
    }
    friend Mat operator-(const Mat& a, const Mat& b) {
        Mat r(a.f_, a.rows_, a.cols_);
        for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.f_->sub(a.a_[i], b.a_[i]);
        return r;
    }
    friend Mat operator*(const Mat& a, const Mat& b) {
        Mat r(a.f_, a.rows_, b.cols_);
        for (std::size_t i = 0; i < a.rows_; ++i)
            for (std::size_t k = 0; k < a.cols_; ++k) {
                auto aik = a.at(i, k);
                if (!aik) continue;
                for (std::size_t j = 0; j < b.cols_; ++j) {
                    auto t = a.f_->mul(aik, b.at(k, j));
                    if (t) r.at(i, j) = a.f_->add(r.at(i, j), t);
                }
            }
        return r;
    }

    Vec apply(const Vec& v) const {
        Vec r(rows_, 0);
        for (std::size_t i = 0; i < rows_; ++i) {
            FieldSpec::value_type acc = 0;
            for (std::size_t j = 0; j < cols_; ++j) {
                auto m = at(i, j);
                if (m && v[j]) acc = f_->add(acc, f_->mul(m, v[j]));
            }
            r[i] = acc;
        }
        return r;
    }

    /// Entrywise Frobenius iterate.
    Mat frobenius(long k) const {
        Mat r(f_, rows_, cols_);
        for (std::size_t i = 0; i < a_.size(); ++i) r.a_[i] = f_->frobenius(a_[i], k);
        return r;
    }

    std::optional<Mat> inverse() const;

    std::string str() const {
        std::string s;
        for (std::size_t r = 0; r < rows_; ++r) {
            s += r ? "\n[" : "[";
            for (std::size_t c = 0; c < cols_; ++c) {
                if (c) s += ' ';
                s += f_->to_string(at(r, c));
            }
            s += ']';
        }
        return s;
    }

private:
    const FieldSpec* f_;
    std::size_t rows_, cols_;
    std::vector<FieldSpec::value_type> a_;
};

// vector helpers

inline Vec vec_zero(std::size_t n) { return Vec(n, 0); }

inline Vec vec_unit(std::size_t n, std::size_t i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

inline bool vec_is_zero(const Vec& v) {
    for (auto x : v)
        if (x) return false;
    return true;
}

inline void vec_add_scaled(const FieldSpec* f, Vec& dst, const Vec& src, FieldSpec::value_type c) {
    if (!c) return;
    for (std::size_t i = 0; i < dst.size(); ++i)
        if (src[i]) dst[i] = f->add(dst[i], f->mul(c, src[i]));
}

inline Vec vec_frobenius(const FieldSpec* f, const Vec& v, long k) {
    Vec r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = f->frobenius(v[i], k);
    return r;
}

inline FieldSpec::value_type vec_dot(const FieldSpec* f, const Vec& a, const Vec& b) {
    FieldSpec::value_type acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] && b[i]) acc = f->add(acc, f->mul(a[i], b[i]));
    return acc;
}

} // namespace kita
