#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <sstream>
#include <string>
#include <vector>

#include "errors.hpp"

namespace kita {

/// Exact arithmetic in GF(p^e).
///
/// Elements are stored as canonical indices in [0, p^e): the element with
/// coordinate vector (c_0, ..., c_{e-1}) relative to the power basis
/// 1, X, ..., X^{e-1} of GF(p)[X]/(modulus) has index sum c_i p^i.
/// Field specs are interned: pointer equality coincides with field equality,
/// and the returned pointers stay valid for the lifetime of the process.
class FieldSpec {
public:
    using value_type = std::uint32_t;

    static const FieldSpec* get(std::uint64_t p, unsigned e, std::vector<value_type> modulus);

    /// Built-in modulus for e == 1 (X) and for p^e in {4, 8, 9, 16, 25, 27}.
    static const FieldSpec* get(std::uint64_t p, unsigned e = 1);

    std::uint64_t p() const { return p_; }
    unsigned e() const { return e_; }
    std::uint64_t size() const { return q_; }
    const std::vector<value_type>& modulus() const { return modulus_; }

    value_type zero() const { return 0; }
    value_type one() const { return 1; }

    value_type from_int(long long n) const {
        long long r = n % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<value_type>(r);
    }

    std::vector<value_type> coords(value_type a) const {
        std::vector<value_type> c(e_);
        for (unsigned i = 0; i < e_; ++i) {
            c[i] = static_cast<value_type>(a % p_);
            a = static_cast<value_type>(a / p_);
        }
        return c;
    }

    value_type from_coords(const std::vector<value_type>& c) const {
        if (c.size() > e_) {
            for (std::size_t i = e_; i < c.size(); ++i)
                if (c[i] % p_ != 0) throw BadInput("scalar coordinate list longer than extension degree");
        }
        std::uint64_t a = 0;
        for (std::size_t i = std::min<std::size_t>(c.size(), e_); i-- > 0;)
            a = a * p_ + (c[i] % p_);
        return static_cast<value_type>(a);
    }

    value_type add(value_type a, value_type b) const {
        if (e_ == 1) { std::uint64_t s = std::uint64_t(a) + b; return value_type(s >= p_ ? s - p_ : s); }
        if (add_table_) return (*add_table_)[std::size_t(a) * q_ + b];
        return add_slow(a, b);
    }
    value_type neg(value_type a) const {
        if (e_ == 1) return a == 0 ? 0 : value_type(p_ - a);
        return neg_slow(a);
    }
    value_type sub(value_type a, value_type b) const { return add(a, neg(b)); }
    value_type mul(value_type a, value_type b) const {
        if (e_ == 1) return value_type((std::uint64_t(a) * b) % p_);
        if (mul_table_) return (*mul_table_)[std::size_t(a) * q_ + b];
        return mul_slow(a, b);
    }
    value_type inv(value_type a) const {
        if (a == 0) throw DegenerateInput("division by zero in GF(" + std::to_string(q_) + ")");
        if (inv_table_) return (*inv_table_)[a];
        return pow(a, q_ - 2);
    }
    value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

    value_type pow(value_type a, std::uint64_t n) const {
        value_type r = 1, base = a;
        while (n) {
            if (n & 1) r = mul(r, base);
            base = mul(base, base);
            n >>= 1;
        }
        return r;
    }

    /// a^(p^k); k is taken modulo e (Frobenius has order e).
    value_type frobenius(value_type a, long k = 1) const {
        long kk = k % long(e_);
        if (kk < 0) kk += long(e_);
        if (kk == 0 || a == 0 || e_ == 1) return a;
        if (frob_table_) return (*frob_table_)[std::size_t(kk) * q_ + a];
        std::uint64_t exp = 1;
        for (long i = 0; i < kk; ++i) exp *= p_;
        return pow(a, exp);
    }

    /// The unique b with b^p = a (the field is perfect).
    value_type inv_frobenius(value_type a) const { return frobenius(a, long(e_) - 1); }

    /// Coefficient list, low degree first, e.g. "0,1" for the power-basis generator of GF(4).
    std::string to_string(value_type a) const {
        if (e_ == 1) return std::to_string(a);
        auto c = coords(a);
        std::string s;
        for (unsigned i = 0; i < e_; ++i) {
            if (i) s += ',';
            s += std::to_string(c[i]);
        }
        return s;
    }

    /// Accepts an integer literal, a coefficient list "c0,c1,...", or "w"/"w<k>"
    /// for the k-th power of the power-basis generator.
    value_type parse(const std::string& text) const;

    std::string name() const {
        return "GF(" + std::to_string(q_) + ")";
    }

private:
    FieldSpec(std::uint64_t p, unsigned e, std::vector<value_type> modulus);

    value_type add_slow(value_type a, value_type b) const;
    value_type neg_slow(value_type a) const;
    value_type mul_slow(value_type a, value_type b) const;

    std::uint64_t p_;
    unsigned e_;
    std::uint64_t q_;
    std::vector<value_type> modulus_; // length e+1, monic, low degree first

    // lookup tables for small fields
    std::unique_ptr<std::vector<value_type>> add_table_;
    std::unique_ptr<std::vector<value_type>> mul_table_;
    std::unique_ptr<std::vector<value_type>> inv_table_;
    std::unique_ptr<std::vector<value_type>> frob_table_;
};

namespace detail {

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// remainder of a by b over GF(p); b monic, coefficients low degree first
inline std::vector<std::uint32_t> poly_mod(std::vector<std::uint32_t> a,
                                           const std::vector<std::uint32_t>& b,
                                           std::uint64_t p) {
    const std::size_t db = b.size() - 1;
    while (a.size() > db) {
        std::uint64_t lead = a.back();
        if (lead != 0) {
            std::size_t shift = a.size() - 1 - db;
            for (std::size_t i = 0; i <= db; ++i) {
                std::uint64_t t = (a[shift + i] + (p - (lead * b[i]) % p)) % p;
                a[shift + i] = std::uint32_t(t);
            }
        }
        a.pop_back();
    }
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

} // namespace detail

inline FieldSpec::FieldSpec(std::uint64_t p, unsigned e, std::vector<value_type> modulus)
    : p_(p), e_(e), modulus_(std::move(modulus)) {
    if (!detail::is_prime(p_)) throw BadField("characteristic " + std::to_string(p_) + " is not prime");
    if (e_ < 1) throw BadField("extension degree must be >= 1");
    if (modulus_.size() != e_ + 1 || modulus_.back() != 1)
        throw BadField("modulus must be monic of degree e (coefficients low to high)");
    for (auto c : modulus_)
        if (c >= p_) throw BadField("modulus coefficient out of range");
    if (e_ == 1 && (modulus_[0] != 0))
        throw BadField("prime field modulus must be X");
    q_ = 1;
    for (unsigned i = 0; i < e_; ++i) {
        q_ *= p_;
        if (q_ > (1ull << 31)) throw BadField("field too large");
    }
    // irreducibility: trial division by every monic polynomial of degree <= e/2
    for (unsigned d = 1; 2 * d <= e_; ++d) {
        std::uint64_t count = 1;
        for (unsigned i = 0; i < d; ++i) count *= p_;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            std::vector<value_type> divisor(d + 1);
            std::uint64_t t = idx;
            for (unsigned i = 0; i < d; ++i) { divisor[i] = value_type(t % p_); t /= p_; }
            divisor[d] = 1;
            if (detail::poly_mod(modulus_, divisor, p_).empty())
                throw BadField("modulus is reducible over GF(" + std::to_string(p_) + ")");
        }
    }
    // tables
    if (e_ > 1 && q_ <= 512) {
        add_table_ = std::make_unique<std::vector<value_type>>(q_ * q_);
        mul_table_ = std::make_unique<std::vector<value_type>>(q_ * q_);
        inv_table_ = std::make_unique<std::vector<value_type>>(q_);
        for (std::uint64_t a = 0; a < q_; ++a)
            for (std::uint64_t b = 0; b < q_; ++b) {
                (*add_table_)[a * q_ + b] = add_slow(value_type(a), value_type(b));
                (*mul_table_)[a * q_ + b] = mul_slow(value_type(a), value_type(b));
            }
        for (std::uint64_t a = 1; a < q_; ++a) {
            value_type r = 1, base = value_type(a);
            std::uint64_t n = q_ - 2;
            while (n) {
                if (n & 1) r = (*mul_table_)[std::size_t(r) * q_ + base];
                base = (*mul_table_)[std::size_t(base) * q_ + base];
                n >>= 1;
            }
            (*inv_table_)[a] = r;
        }
        frob_table_ = std::make_unique<std::vector<value_type>>(std::size_t(e_) * q_);
        for (std::uint64_t a = 0; a < q_; ++a) (*frob_table_)[a] = value_type(a); // k = 0
        for (unsigned k = 1; k < e_; ++k)
            for (std::uint64_t a = 0; a < q_; ++a) {
                value_type prev = (*frob_table_)[std::size_t(k - 1) * q_ + a];
                value_type r = 1;
                for (std::uint64_t i = 0; i < p_; ++i) r = (*mul_table_)[std::size_t(r) * q_ + prev];
                (*frob_table_)[std::size_t(k) * q_ + a] = r;
            }
    }
}

inline FieldSpec::value_type FieldSpec::add_slow(value_type a, value_type b) const {
    value_type r = 0;
    std::uint64_t mult = 1;
    for (unsigned i = 0; i < e_; ++i) {
        std::uint64_t ca = (a / mult) % p_, cb = (b / mult) % p_;
        r = value_type(r + mult * ((ca + cb) % p_));
        mult *= p_;
    }
    return r;
}

inline FieldSpec::value_type FieldSpec::neg_slow(value_type a) const {
    value_type r = 0;
    std::uint64_t mult = 1;
    for (unsigned i = 0; i < e_; ++i) {
        std::uint64_t ca = (a / mult) % p_;
        r = value_type(r + mult * ((p_ - ca) % p_));
        mult *= p_;
    }
    return r;
}

inline FieldSpec::value_type FieldSpec::mul_slow(value_type a, value_type b) const {
    // polynomial product followed by reduction modulo the monic modulus
    std::vector<std::uint64_t> prod(2 * e_ - 1, 0);
    auto ca = coords(a), cb = coords(b);
    for (unsigned i = 0; i < e_; ++i) {
        if (!ca[i]) continue;
        for (unsigned j = 0; j < e_; ++j)
            prod[i + j] = (prod[i + j] + std::uint64_t(ca[i]) * cb[j]) % p_;
    }
    for (std::size_t d = prod.size(); d-- > e_;) {
        std::uint64_t lead = prod[d];
        if (!lead) continue;
        prod[d] = 0;
        for (unsigned i = 0; i < e_; ++i)
            prod[d - e_ + i] = (prod[d - e_ + i] + (p_ - (lead * modulus_[i]) % p_)) % p_;
    }
    std::uint64_t r = 0;
    for (unsigned i = e_; i-- > 0;) r = r * p_ + prod[i];
    return value_type(r);
}

inline const FieldSpec* FieldSpec::get(std::uint64_t p, unsigned e, std::vector<value_type> modulus) {
    static std::mutex mx;
    static std::vector<std::unique_ptr<FieldSpec>> pool;
    std::lock_guard<std::mutex> lock(mx);
    for (const auto& f : pool)
        if (f->p_ == p && f->e_ == e && f->modulus_ == modulus) return f.get();
    pool.emplace_back(new FieldSpec(p, e, std::move(modulus)));
    return pool.back().get();
}

inline const FieldSpec* FieldSpec::get(std::uint64_t p, unsigned e) {
    if (e == 1) return get(p, 1, {0, 1});
    // shipped defaults, low degree first
    if (p == 2 && e == 2) return get(2, 2, {1, 1, 1});          // X^2+X+1
    if (p == 2 && e == 3) return get(2, 3, {1, 1, 0, 1});       // X^3+X+1
    if (p == 2 && e == 4) return get(2, 4, {1, 1, 0, 0, 1});    // X^4+X+1
    if (p == 3 && e == 2) return get(3, 2, {1, 0, 1});          // X^2+1
    if (p == 3 && e == 3) return get(3, 3, {1, 2, 0, 1});       // X^3+2X+1
    if (p == 5 && e == 2) return get(5, 2, {1, 1, 1});          // X^2+X+1
    throw BadField("no default modulus for p=" + std::to_string(p) + ", e=" + std::to_string(e) +
                   "; supply one explicitly");
}

inline FieldSpec::value_type FieldSpec::parse(const std::string& text) const {
    if (text.empty()) throw BadInput("empty scalar literal");
    if (text[0] == 'w') {
        if (e_ < 2) throw BadInput("'w' scalar literal requires an extension field");
        std::uint64_t k = 1;
        if (text.size() > 1) k = std::stoull(text.substr(1));
        return pow(value_type(p_), k); // index p encodes the class of X
    }
    if (text.find(',') != std::string::npos) {
        std::vector<value_type> c;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ','))
            c.push_back(from_int(std::stoll(item)));
        return from_coords(c);
    }
    return from_int(std::stoll(text));
}

/// A field element carrying its field; cross-field arithmetic raises FieldMismatch.
class Scalar {
public:
    Scalar() : f_(nullptr), v_(0) {}
    Scalar(const FieldSpec* f, FieldSpec::value_type v) : f_(f), v_(v) {}

    const FieldSpec* field() const { return f_; }
    FieldSpec::value_type raw() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    static void require_same(const Scalar& a, const Scalar& b) {
        if (a.f_ == b.f_) return;
        if (a.f_ && b.f_ && a.f_->p() == b.f_->p() && a.f_->e() == b.f_->e() &&
            a.f_->modulus() == b.f_->modulus())
            return; // same field constructed twice; interning normally prevents this
        throw FieldMismatch("operands live in different fields");
    }

    friend Scalar operator+(const Scalar& a, const Scalar& b) {
        require_same(a, b);
        return {a.f_, a.f_->add(a.v_, b.v_)};
    }
    friend Scalar operator-(const Scalar& a, const Scalar& b) {
        require_same(a, b);
        return {a.f_, a.f_->sub(a.v_, b.v_)};
    }
    friend Scalar operator*(const Scalar& a, const Scalar& b) {
        require_same(a, b);
        return {a.f_, a.f_->mul(a.v_, b.v_)};
    }
    friend Scalar operator/(const Scalar& a, const Scalar& b) {
        require_same(a, b);
        return {a.f_, a.f_->div(a.v_, b.v_)};
    }
    Scalar operator-() const { return {f_, f_->neg(v_)}; }

    Scalar frobenius(long k = 1) const { return {f_, f_->frobenius(v_, k)}; }
    Scalar inv_frobenius() const { return {f_, f_->inv_frobenius(v_)}; }

    friend bool operator==(const Scalar& a, const Scalar& b) {
        require_same(a, b);
        return a.v_ == b.v_;
    }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    std::string str() const { return f_->to_string(v_); }

private:
    const FieldSpec* f_;
    FieldSpec::value_type v_;
};

} // namespace kita
