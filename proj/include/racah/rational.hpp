#ifndef RACAH_RATIONAL_HPP
#define RACAH_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "racah/errors.hpp"

namespace racah {

/// Arbitrary-precision rational, always in lowest terms with positive
/// denominator. Ground field for everything in the library; no floating
/// point anywhere.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}
    Rational(int n) : v_(static_cast<long>(n)) {}
    Rational(long num, long den) : v_(num, den) {
        if (den == 0) throw Error("Rational: zero denominator");
        v_.canonicalize();
    }
    explicit Rational(const mpz_class& z) : v_(z) {}
    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    Rational(const mpz_class& num, const mpz_class& den) : v_(num, den) {
        if (den == 0) throw Error("Rational: zero denominator");
        v_.canonicalize();
    }

    /// Parse "p", "-p", "p/q". Throws on malformed input.
    static Rational from_string(std::string_view s);

    const mpq_class& raw() const { return v_; }
    mpz_class num() const { return v_.get_num(); }
    mpz_class den() const { return v_.get_den(); }

    bool is_zero() const { return sgn(v_) == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    /// Exact long value; requires an integer that fits.
    long to_long() const;

    /// Canonical fraction string "p/q" (or "p" for integers).
    std::string str() const;

    friend Rational operator+(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ + b.v_), canonical_tag{}); }
    friend Rational operator-(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ - b.v_), canonical_tag{}); }
    friend Rational operator*(const Rational& a, const Rational& b) { return Rational(mpq_class(a.v_ * b.v_), canonical_tag{}); }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.is_zero()) throw PoleAtPoint("Rational: division by zero");
        return Rational(mpq_class(a.v_ / b.v_), canonical_tag{});
    }
    Rational operator-() const { return Rational(mpq_class(-v_), canonical_tag{}); }

    Rational& operator+=(const Rational& b) { v_ += b.v_; return *this; }
    Rational& operator-=(const Rational& b) { v_ -= b.v_; return *this; }
    Rational& operator*=(const Rational& b) { v_ *= b.v_; return *this; }
    Rational& operator/=(const Rational& b) { *this = *this / b; return *this; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
    friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
    friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

    friend std::ostream& operator<<(std::ostream& os, const Rational& q);

    friend Rational abs(const Rational& q) { return Rational(mpq_class(abs(q.v_)), canonical_tag{}); }

    std::size_t hash() const;

private:
    struct canonical_tag {};
    Rational(mpq_class q, canonical_tag) : v_(std::move(q)) {}
    mpq_class v_; // canonical: gmp keeps results of canonical operands canonical
};

Rational pow(const Rational& base, long e);

/// Complex number with rational real and imaginary parts. Exact carrier for
/// the a +/- iy arguments of the Wilson family.
class GaussianRational {
public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {}
    GaussianRational(int n) : re_(n) {}
    GaussianRational(Rational re) : re_(std::move(re)) {}
    GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

    const Rational& re() const { return re_; }
    const Rational& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussianRational conj() const { return {re_, -im_}; }
    Rational norm() const { return re_ * re_ + im_ * im_; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ + b.re_, a.im_ + b.im_};
    }
    friend GaussianRational operator-(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ - b.re_, a.im_ - b.im_};
    }
    GaussianRational operator-() const { return {-re_, -im_}; }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend GaussianRational operator/(const GaussianRational& a, const GaussianRational& b) {
        if (b.is_zero()) throw PoleAtPoint("GaussianRational: division by zero");
        const Rational n = b.norm();
        return {(a.re_ * b.re_ + a.im_ * b.im_) / n, (a.im_ * b.re_ - a.re_ * b.im_) / n};
    }
    GaussianRational& operator+=(const GaussianRational& b) { *this = *this + b; return *this; }
    GaussianRational& operator-=(const GaussianRational& b) { *this = *this - b; return *this; }
    GaussianRational& operator*=(const GaussianRational& b) { *this = *this * b; return *this; }
    GaussianRational& operator/=(const GaussianRational& b) { *this = *this / b; return *this; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }
    friend bool operator!=(const GaussianRational& a, const GaussianRational& b) { return !(a == b); }

    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const GaussianRational& q);

private:
    Rational re_, im_;
};

inline GaussianRational imaginary_unit() { return {Rational(0), Rational(1)}; }

} // namespace racah

#endif
