#ifndef RACAH_HYPER_HPP
#define RACAH_HYPER_HPP

#include <span>
#include <vector>

#include "racah/polynomial.hpp"
#include "racah/rational.hpp"

namespace racah {

/// Terminating hypergeometric sum
///   sum_{k=0}^{n} (-n)_k prod_j (upper_j)_k / (k! prod_j (lower_j)_k) z^k
/// by forward accumulation of term ratios. The sum stops early once a term
/// vanishes (an upper parameter hit a nonpositive integer), which keeps
/// lattice evaluations clear of poles that lie beyond the effective range.
/// Throws PoleInDenominator when a live term divides by zero.
template <class K>
K hyp_terminating(long n, std::span<const K> upper, std::span<const K> lower, const K& z) {
    if (n < 0) throw Error("hyp_terminating: negative degree");
    K sum(1);
    K term(1);
    for (long k = 0; k < n; ++k) {
        K num(-n + k);
        for (const K& u : upper) num = num * (u + K(k));
        K den(k + 1);
        for (const K& l : lower) den = den * (l + K(k));
        if (num.is_zero()) break; // series terminated early
        if (den.is_zero()) throw PoleInDenominator("hyp_terminating: lower parameter pole at k=" + std::to_string(k + 1));
        term = term * num / den * z;
        sum = sum + term;
    }
    return sum;
}

template <class K>
K hyp_terminating(long n, std::initializer_list<K> upper, std::initializer_list<K> lower, const K& z) {
    return hyp_terminating<K>(n, std::span<const K>(upper.begin(), upper.size()),
                              std::span<const K>(lower.begin(), lower.size()), z);
}

/// One-variable Racah polynomial
///   r_n(a, b, g, d; x) = (a+1)_n (b+d+1)_n (g+1)_n
///       4F3[-n, n+a+b+1, -x, x+g+d+1; a+1, b+d+1, g+1; 1].
/// The (g+1) slot is integer-degenerate on lattices and for the truncated
/// limit polynomials, so its Pochhammer is folded into the sum
/// ((g+1)_n / (g+1)_k = (g+1+k)_{n-k}) instead of being divided out; the
/// other two slots keep one multiply-divide per term.
template <class K>
K racah_r(long n, const K& a, const K& b, const K& g, const K& d, const K& x) {
    if (n < 0) throw Error("racah_r: negative degree");
    K pre = pochhammer(a + K(1), n) * pochhammer(b + d + K(1), n);
    K sum(0);
    K term(1);
    for (long k = 0;; ++k) {
        sum = sum + term * pochhammer(g + K(1 + k), n - k);
        if (k == n) break;
        const K num = K(-n + k) * (a + b + K(n + 1 + k)) * (K(k) - x) * (x + g + d + K(1 + k));
        const K den = K(k + 1) * (a + K(1 + k)) * (b + d + K(1 + k));
        if (num.is_zero()) break;
        if (den.is_zero()) throw PoleInDenominator("racah_r: parameter pole at k=" + std::to_string(k + 1));
        term = term * num / den;
    }
    return pre * sum;
}

/// Wilson polynomial w_n(y; a, b, c, d) over the Gaussian rationals:
///   (a+b)_n (a+c)_n (a+d)_n 4F3[-n, n+a+b+c+d-1, a+iy, a-iy; a+b, a+c, a+d; 1].
/// Always real for rational y; callers may check is_real().
GaussianRational wilson_w(long n, const Rational& y, const Rational& a, const Rational& b,
                          const Rational& c, const Rational& d);

/// Hahn polynomial h_n(x; a, b, M) = (a+1)_n (-M)_n 3F2[-n, n+a+b+1, -x; a+1, -M; 1]
/// with the (-M) slot folded (robust when M is a small nonnegative integer).
template <class K>
K hahn_h(long n, const K& x, const K& a, const K& b, const K& M) {
    if (n < 0) throw Error("hahn_h: negative degree");
    K pre = pochhammer(a + K(1), n);
    K sum(0);
    K term(1);
    for (long k = 0;; ++k) {
        sum = sum + term * pochhammer(-M + K(k), n - k);
        if (k == n) break;
        const K num = K(-n + k) * (a + b + K(n + 1 + k)) * (K(k) - x);
        const K den = K(k + 1) * (a + K(1 + k));
        if (num.is_zero()) break;
        if (den.is_zero()) throw PoleInDenominator("hahn_h: parameter pole at k=" + std::to_string(k + 1));
        term = term * num / den;
    }
    return pre * sum;
}

/// Jacobi polynomial P_n(x; a, b) = ((a+1)_n / n!) 2F1[-n, n+a+b+1; a+1; (1-x)/2].
template <class K>
K jacobi_P(long n, const K& x, const K& a, const K& b) {
    const K z = (K(1) - x) / K(2);
    const K series = hyp_terminating<K>(n, {a + b + K(n + 1)}, {a + K(1)}, z);
    return pochhammer(a + K(1), n) / K(factorial(n)) * series;
}

/// Krawtchouk polynomial k_n(x; q, M) = (-M)_n 2F1[-n, -x; -M; 1/q]
/// with the (-M) slot folded (robust for integer M).
template <class K>
K krawtchouk_k(long n, const K& x, const K& q, const K& M) {
    if (n < 0) throw Error("krawtchouk_k: negative degree");
    if (q.is_zero()) throw PoleInDenominator("krawtchouk_k: zero success parameter");
    K sum(0);
    K term(1);
    for (long k = 0;; ++k) {
        sum = sum + term * pochhammer(-M + K(k), n - k);
        if (k == n) break;
        const K num = K(-n + k) * (K(k) - x);
        const K den = K(k + 1) * q;
        if (num.is_zero()) break;
        term = term * num / den;
    }
    return sum;
}

/// Meixner polynomial via the Krawtchouk substitution q = c/(c-1), M = -s.
template <class K>
K meixner_m(long n, const K& x, const K& c, const K& s) {
    if ((c - K(1)).is_zero()) throw PoleInDenominator("meixner_m: c = 1");
    return krawtchouk_k<K>(n, x, c / (c - K(1)), -s);
}

/// The two chained transformations of a terminating balanced (Saalschuetzian)
/// 4F3[-n, x, y, z; u, v, w; 1]. Balance condition (classical):
///   u + v + w = x + y + z - n + 1.
/// Values returned are of the Pochhammer-weighted products; under the balance
/// precondition all three agree.
template <class K>
struct WhippleValues {
    K base;        // (u)_n (v)_n (w)_n 4F3[-n, x, y, z; u, v, w]
    K transformed; // one application of the transformation
    K iterated;    // two applications
    bool all_equal;
};

template <class K>
bool whipple_balanced(long n, const K& x, const K& y, const K& z, const K& u, const K& v, const K& w) {
    return (u + v + w) == (x + y + z - K(n) + K(1));
}

template <class K>
WhippleValues<K> whipple_check(long n, const K& x, const K& y, const K& z, const K& u, const K& v,
                               const K& w) {
    if (!whipple_balanced(n, x, y, z, u, v, w))
        throw NotBalanced("whipple_check: balance condition u+v+w = x+y+z-n+1 fails");
    const K one(1), kn(n);
    WhippleValues<K> out{K(0), K(0), K(0), false};
    out.base = pochhammer(u, n) * pochhammer(v, n) * pochhammer(w, n) *
               hyp_terminating<K>(n, {x, y, z}, {u, v, w}, one);
    out.transformed = pochhammer(one - v + z - kn, n) * pochhammer(one - w + z - kn, n) *
                      pochhammer(u, n) *
                      hyp_terminating<K>(n, {u - x, u - y, z}, {one - v + z - kn, one - w + z - kn, u}, one);
    out.iterated = pochhammer(one - x - kn, n) * pochhammer(one - v + y - kn, n) *
                   pochhammer(one - v + z - kn, n) *
                   hyp_terminating<K>(n, {w - x, u - x, one - v - kn},
                                      {one - x - kn, one - v + y - kn, one - v + z - kn}, one);
    out.all_equal = (out.base == out.transformed) && (out.base == out.iterated);
    return out;
}

} // namespace racah

#endif
