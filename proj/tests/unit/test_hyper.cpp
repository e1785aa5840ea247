#include "doctest.h"

#include "racah/hyper.hpp"
#include "racah/prng.hpp"

using namespace racah;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

// Independent oracle: naive Pochhammer-recomputation sum, a genuinely
// different evaluation path from the forward-ratio accumulation under test.
template <class K>
K hyp_naive(long n, std::vector<K> upper, std::vector<K> lower, const K& z) {
    K sum(0);
    for (long k = 0; k <= n; ++k) {
        K num = pochhammer(K(-n), k);
        for (const K& u : upper) num = num * pochhammer(u, k);
        K den = K(factorial(k));
        for (const K& l : lower) den = den * pochhammer(l, k);
        if (den.is_zero()) throw PoleInDenominator("hyp_naive");
        K zp(1);
        for (long i = 0; i < k; ++i) zp = zp * z;
        sum = sum + num / den * zp;
    }
    return sum;
}

Rational racah_r_naive(long n, Rational a, Rational b, Rational g, Rational d, Rational x) {
    const Rational pre = pochhammer(a + q(1), n) * pochhammer(b + d + q(1), n) * pochhammer(g + q(1), n);
    return pre * hyp_naive<Rational>(n, {a + b + q(n + 1), -x, x + g + d + q(1)},
                                     {a + q(1), b + d + q(1), g + q(1)}, q(1));
}

} // namespace

TEST_CASE("terminating series basics") {
    CHECK(hyp_terminating<Rational>(0, {q(3), q(4)}, {q(5)}, q(1)) == q(1));
    // 2F1(-1, a; b; 1) = 1 - a/b
    RationalSampler s(3);
    for (int i = 0; i < 20; ++i) {
        const Rational a = s.rational(), b = s.rational();
        if (b.is_zero()) continue;
        CHECK(hyp_terminating<Rational>(1, {a}, {b}, q(1)) == q(1) - a / b);
    }
    // the (-x) slot kills everything at x = 0
    CHECK(hyp_terminating<Rational>(2, {q(0)}, {q(-7)}, q(1, 3)) == q(1));
}

TEST_CASE("terminating series equals the naive sum") {
    RationalSampler s(1234);
    int done = 0;
    while (done < 30) {
        const long n = s.integer(0, 5);
        std::vector<Rational> up{s.rational(), s.rational()};
        std::vector<Rational> lo{s.rational(), s.rational()};
        const Rational z = s.rational();
        try {
            const Rational a = hyp_terminating<Rational>(n, std::span<const Rational>(up),
                                                         std::span<const Rational>(lo), z);
            CHECK(a == hyp_naive<Rational>(n, up, lo, z));
            ++done;
        } catch (const PoleInDenominator&) {
            continue;
        }
    }
}

TEST_CASE("series pole detection") {
    // lower parameter -1 is hit at k = 2
    CHECK_THROWS_AS((void)hyp_terminating<Rational>(3, {q(5)}, {q(-1)}, q(1)), PoleInDenominator);
}

TEST_CASE("one-variable racah values") {
    CHECK(racah_r<Rational>(0, q(9), q(-3), q(2, 7), q(1), q(11)) == q(1));
    // the -x slot removes the k = 1 term
    CHECK(racah_r<Rational>(1, q(0), q(0), q(0), q(0), q(0)) == q(1));
    // frozen from the independent two-term summation
    CHECK(racah_r_naive(1, q(1), q(1), q(-4), q(0), q(1)) == q(-20));
    CHECK(racah_r<Rational>(1, q(1), q(1), q(-4), q(0), q(1)) == q(-20));
}

TEST_CASE("one-variable racah equals the naive form where both are defined") {
    RationalSampler s(77);
    int done = 0;
    while (done < 40) {
        const long n = s.integer(0, 4);
        const Rational a = s.rational(), b = s.rational(), g = s.rational(), d = s.rational(),
                       x = s.rational();
        try {
            const Rational ref = racah_r_naive(n, a, b, g, d, x);
            CHECK(racah_r<Rational>(n, a, b, g, d, x) == ref);
            ++done;
        } catch (const PoleInDenominator&) {
            continue;
        }
    }
}

TEST_CASE("folded slot handles integer-degenerate third parameter") {
    // g = -2: (g+1)_n vanishes for n >= 2 but the folded form still evaluates
    const Rational a = q(1, 2), b = q(1, 3), g = q(-2), d = q(1, 5), x = q(4, 7);
    const Rational v = racah_r<Rational>(3, a, b, g, d, x);
    // oracle: sum_k (-n)_k (n+a+b+1)_k (-x)_k (x+g+d+1)_k / (k!(a+1)_k(b+d+1)_k) * (g+1+k)_{n-k}
    Rational sum(0);
    for (long k = 0; k <= 3; ++k) {
        const Rational num = pochhammer(q(-3), k) * pochhammer(a + b + q(4), k) * pochhammer(-x, k) *
                             pochhammer(x + g + d + q(1), k);
        const Rational den = factorial(k) * pochhammer(a + q(1), k) * pochhammer(b + d + q(1), k);
        sum += num / den * pochhammer(g + q(1 + k), 3 - k);
    }
    CHECK(v == pochhammer(a + q(1), 3) * pochhammer(b + d + q(1), 3) * sum);
}

TEST_CASE("whipple transformation chain") {
    SUBCASE("degree zero: all sides are 1") {
        const auto r = whipple_check<Rational>(0, q(2), q(3), q(4), q(5), q(6), q(-1));
        CHECK(r.base == q(1));
        CHECK(r.transformed == q(1));
        CHECK(r.iterated == q(1));
        CHECK(r.all_equal);
    }
    SUBCASE("balanced random instances agree on all three forms") {
        RationalSampler s(4096);
        int done = 0;
        while (done < 50) {
            const long n = s.integer(1, 4);
            const Rational x = s.rational(), y = s.rational(), z = s.rational(), u = s.rational(),
                           v = s.rational();
            const Rational w = x + y + z + q(1 - n) - u - v; // balance
            try {
                const auto r = whipple_check<Rational>(n, x, y, z, u, v, w);
                CHECK(r.all_equal);
                // cross-check the base value against the naive oracle
                const Rational ref = pochhammer(u, n) * pochhammer(v, n) * pochhammer(w, n) *
                                     hyp_naive<Rational>(n, {x, y, z}, {u, v, w}, q(1));
                CHECK(r.base == ref);
                ++done;
            } catch (const PoleInDenominator&) {
                continue;
            }
        }
    }
    SUBCASE("unbalanced data is rejected") {
        CHECK_THROWS_AS((void)whipple_check<Rational>(2, q(1), q(2), q(3), q(4), q(5), q(6)),
                        NotBalanced);
    }
}

TEST_CASE("wilson polynomial is real at rational points") {
    RationalSampler s(31);
    for (int i = 0; i < 25; ++i) {
        const Rational a = s.rational(), b = s.rational(), c = s.rational(), d = s.rational(),
                       y = s.rational();
        const long n = s.integer(0, 3);
        try {
            const GaussianRational w = wilson_w(n, y, a, b, c, d);
            CHECK(w.is_real());
        } catch (const PoleInDenominator&) {
            continue;
        }
    }
    CHECK(wilson_w(1, q(2), q(1, 2), q(1, 3), q(1, 5), q(1, 7)).is_real());
}

TEST_CASE("one-variable family special values") {
    // krawtchouk at x = 0 collapses to (-M)_n
    RationalSampler s(8);
    for (int i = 0; i < 15; ++i) {
        const long n = s.integer(0, 4);
        const Rational fp = s.rational(), M = s.rational();
        if (fp.is_zero()) continue;
        CHECK(krawtchouk_k<Rational>(n, q(0), fp, M) == pochhammer(-M, n));
    }
    CHECK(jacobi_P<Rational>(0, q(3, 4), q(1, 2), q(2)) == q(1));
    // jacobi against the classical n = 1 closed form P_1 = (a - b)/2 + (a + b + 2)/2 x
    for (int i = 0; i < 15; ++i) {
        const Rational a = s.rational(), b = s.rational(), x = s.rational();
        if ((a + q(1)).is_zero()) continue;
        CHECK(jacobi_P<Rational>(1, x, a, b) == (a - b) / q(2) + (a + b + q(2)) / q(2) * x);
    }
    // meixner = krawtchouk under the parameter substitution
    for (int i = 0; i < 15; ++i) {
        const Rational c = s.rational(), sp = s.rational(), x = s.rational();
        if ((c - q(1)).is_zero() || c.is_zero()) continue;
        const long n = s.integer(0, 3);
        CHECK(meixner_m<Rational>(n, x, c, sp) == krawtchouk_k<Rational>(n, x, c / (c - q(1)), -sp));
    }
}

TEST_CASE("hahn robust slot at small integer M") {
    // M = 0 with n = 2: the (-M) slot would divide by zero in the plain form;
    // compare against the explicitly folded oracle
    const Rational a = q(1, 2), b = q(1, 3), x = q(3), M = q(0);
    Rational sum(0);
    for (long k = 0; k <= 2; ++k) {
        const Rational num = pochhammer(q(-2), k) * pochhammer(a + b + q(3), k) * pochhammer(-x, k);
        const Rational den = factorial(k) * pochhammer(a + q(1), k);
        sum += num / den * pochhammer(-M + q(k), 2 - k);
    }
    CHECK(hahn_h<Rational>(2, x, a, b, M) == pochhammer(a + q(1), 2) * sum);
    // and against the unfolded closed product where that is defined
    const Rational M2 = q(9, 2);
    const Rational plain = pochhammer(a + q(1), 2) * pochhammer(-M2, 2) *
                           hyp_naive<Rational>(2, {a + b + q(3), -x}, {a + q(1), -M2}, q(1));
    CHECK(hahn_h<Rational>(2, x, a, b, M2) == plain);
}
