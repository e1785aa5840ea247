#ifndef RACAH_POLYNOMIAL_HPP
#define RACAH_POLYNOMIAL_HPP

#include <utility>
#include <vector>

#include "racah/errors.hpp"
#include "racah/rational.hpp"

namespace racah {

/// Shifted factorial prod_{j=0}^{k-1} (a + j); empty product for k = 0.
/// Works over any exact field constructible from long.
template <class K>
K pochhammer(const K& a, long k) {
    if (k < 0) throw Error("pochhammer: negative length");
    K r(1);
    for (long j = 0; j < k; ++j) r = r * (a + K(j));
    return r;
}

inline Rational factorial(long n) {
    if (n < 0) throw Error("factorial: negative argument");
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return Rational(f);
}

/// Dense univariate polynomial over an exact field K. Coefficient vector is
/// trimmed: no stored leading zeros; the zero polynomial has empty storage.
template <class K>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(const K& constant) { // NOLINT: implicit by design
        if (!constant.is_zero()) c_.push_back(constant);
    }
    Poly(long constant) : Poly(K(constant)) {}

    static Poly indeterminate() { return Poly(std::vector<K>{K(0), K(1)}); }

    long degree() const { return static_cast<long>(c_.size()) - 1; } // -1 for zero
    bool is_zero() const { return c_.empty(); }
    const K& lead() const { return c_.back(); }
    const std::vector<K>& coeffs() const { return c_; }
    K coeff(std::size_t i) const { return i < c_.size() ? c_[i] : K(0); }

    friend Poly operator+(const Poly& a, const Poly& b) {
        std::vector<K> out(std::max(a.c_.size(), b.c_.size()), K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] = out[i] + a.c_[i];
        for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] = out[i] + b.c_[i];
        return Poly(std::move(out));
    }
    friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
    Poly operator-() const {
        std::vector<K> out(c_);
        for (auto& v : out) v = -v;
        Poly r;
        r.c_ = std::move(out);
        return r;
    }
    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return Poly();
        std::vector<K> out(a.c_.size() + b.c_.size() - 1, K(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                out[i + j] = out[i + j] + a.c_[i] * b.c_[j];
        return Poly(std::move(out));
    }
    Poly scaled(const K& s) const {
        std::vector<K> out(c_);
        for (auto& v : out) v = v * s;
        return Poly(std::move(out));
    }

    /// Euclidean division; remainder has degree < deg(divisor).
    std::pair<Poly, Poly> divrem(const Poly& divisor) const {
        if (divisor.is_zero()) throw Error("Poly: division by zero polynomial");
        std::vector<K> rem(c_);
        std::vector<K> quo;
        if (rem.size() >= divisor.c_.size())
            quo.assign(rem.size() - divisor.c_.size() + 1, K(0));
        while (rem.size() >= divisor.c_.size()) {
            const K f = rem.back() / divisor.lead();
            const std::size_t k = rem.size() - divisor.c_.size();
            quo[k] = f;
            for (std::size_t i = 0; i < divisor.c_.size(); ++i)
                rem[k + i] = rem[k + i] - f * divisor.c_[i];
            while (!rem.empty() && rem.back().is_zero()) rem.pop_back();
        }
        return {Poly(std::move(quo)), Poly(std::move(rem))};
    }

    template <class T>
    T eval(const T& t) const {
        T acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * t + lift_to<T>(c_[i]);
        return acc;
    }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

private:
    template <class T>
    static T lift_to(const K& v) {
        if constexpr (std::is_same_v<T, K>) return v;
        else return T(v);
    }
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

template <class K>
Poly<K> monic(const Poly<K>& a) {
    if (a.is_zero()) return a;
    return a.scaled(K(1) / a.lead());
}

template <class K>
Poly<K> poly_gcd(Poly<K> a, Poly<K> b) {
    while (!b.is_zero()) {
        auto [q, r] = a.divrem(b);
        (void)q;
        a = std::move(b);
        b = std::move(r);
        if (!b.is_zero()) b = monic(b); // keeps intermediate growth down
    }
    return monic(a);
}

/// Univariate rational function over K in one indeterminate t, stored reduced
/// (gcd(num, den) = 1) with monic denominator. Field operations are exact.
template <class K>
class UniRatFun {
public:
    UniRatFun() : num_(), den_(Poly<K>(1L)) {}
    UniRatFun(long v) : num_(Poly<K>(v)), den_(Poly<K>(1L)) {}
    UniRatFun(const K& v) : num_(Poly<K>(v)), den_(Poly<K>(1L)) {}
    UniRatFun(Poly<K> num, Poly<K> den = Poly<K>(1L)) : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw Error("UniRatFun: zero denominator");
        reduce();
    }

    static UniRatFun indeterminate() { return UniRatFun(Poly<K>::indeterminate()); }

    const Poly<K>& num() const { return num_; }
    const Poly<K>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    friend UniRatFun operator+(const UniRatFun& a, const UniRatFun& b) {
        return UniRatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend UniRatFun operator-(const UniRatFun& a, const UniRatFun& b) {
        return UniRatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    UniRatFun operator-() const {
        UniRatFun r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    friend UniRatFun operator*(const UniRatFun& a, const UniRatFun& b) {
        return UniRatFun(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend UniRatFun operator/(const UniRatFun& a, const UniRatFun& b) {
        if (b.is_zero()) throw PoleAtPoint("UniRatFun: division by zero");
        return UniRatFun(a.num_ * b.den_, a.den_ * b.num_);
    }
    UniRatFun& operator+=(const UniRatFun& b) { *this = *this + b; return *this; }
    UniRatFun& operator-=(const UniRatFun& b) { *this = *this - b; return *this; }
    UniRatFun& operator*=(const UniRatFun& b) { *this = *this * b; return *this; }
    UniRatFun& operator/=(const UniRatFun& b) { *this = *this / b; return *this; }

    friend bool operator==(const UniRatFun& a, const UniRatFun& b) {
        return a.num_ == b.num_ && a.den_ == b.den_; // canonical form
    }
    friend bool operator!=(const UniRatFun& a, const UniRatFun& b) { return !(a == b); }

    /// Evaluate at t = t0; the point must not be a pole.
    K eval(const K& t0) const {
        const K d = den_.eval(t0);
        if (d.is_zero()) throw PoleAtPoint("UniRatFun: evaluation at a pole");
        return num_.eval(t0) / d;
    }

private:
    void reduce() {
        if (num_.is_zero()) {
            den_ = Poly<K>(1L);
            return;
        }
        const Poly<K> g = poly_gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = num_.divrem(g).first;
            den_ = den_.divrem(g).first;
        }
        const K lead = den_.lead();
        if (!(lead == K(1))) {
            const K inv = K(1) / lead;
            num_ = num_.scaled(inv);
            den_ = den_.scaled(inv);
        }
    }
    Poly<K> num_, den_;
};

/// lim_{t->inf} f(t) / t^order. Zero when the numerator degree falls short,
/// ratio of leading coefficients when the degrees match exactly.
/// Throws DegreeOverflow when the limit is infinite.
template <class K>
K limit_coeff_at_infinity(const UniRatFun<K>& f, long order) {
    if (f.is_zero()) return K(0);
    const long gap = f.num().degree() - f.den().degree();
    if (gap > order)
        throw DegreeOverflow("limit_coeff_at_infinity: degree gap " + std::to_string(gap) +
                             " exceeds order " + std::to_string(order));
    if (gap < order) return K(0);
    return f.num().lead() / f.den().lead();
}

} // namespace racah

#endif
