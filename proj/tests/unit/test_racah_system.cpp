#include "doctest.h"

#include "racah/prng.hpp"
#include "racah/racah_system.hpp"

using namespace racah;

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

std::vector<Rational> rvec(std::initializer_list<Rational> v) { return std::vector<Rational>(v); }

// rejection sampling per the generic-parameter policy: no integer beta
// differences or integer beta_0 (keeps every Pochhammer and denominator that
// the checks touch away from the integer resonances)
RacahParams sample_params(int p, RationalSampler& s, Rational N = Rational(0), bool with_N = false) {
    for (;;) {
        std::vector<Rational> beta;
        for (int i = 0; i < p + 2; ++i) beta.push_back(s.rational());
        bool ok = !beta[0].is_integer();
        for (int i = 0; ok && i <= p; ++i)
            if ((beta[static_cast<std::size_t>(i) + 1] - beta[static_cast<std::size_t>(i)]).is_integer()) ok = false;
        if (!ok) continue;
        const Rational Nv = with_N ? N : s.rational();
        if (!with_N && Nv.is_integer()) continue;
        return RacahParams(p, std::move(beta), Nv);
    }
}

Rational eval_coeff(const Expr& e, std::span<const Rational> x, const RacahParams& params) {
    const auto pv = params.symbol_values();
    return eval_expr<Rational>(e, x, std::span<const Rational>(pv));
}

} // namespace

TEST_CASE("raising coefficient closed form (one variable)") {
    RationalSampler s(100);
    const Expr A = racah_coeff_A(1, MultiIndex(std::vector<int>{1}));
    const Expr Am = racah_coeff_A(1, MultiIndex(std::vector<int>{-1}));
    for (int i = 0; i < 20; ++i) {
        const RacahParams pr = sample_params(1, s);
        const Rational x1 = s.rational();
        const Rational b0 = pr.beta[0], b1 = pr.beta[1], b2 = pr.beta[2], N = pr.N;
        std::vector<Rational> x{x1};
        const Rational up = (x1 + b1 - b0) * (x1 + b1) * (x1 + b2 + N) * (N - x1) /
                            ((q(2) * x1 + b1) * (q(2) * x1 + b1 + q(1)));
        const Rational down = x1 * (x1 + b0) * (N - x1 - b1 + b2) * (N + x1 + b1) /
                              ((q(2) * x1 + b1) * (q(2) * x1 + b1 - q(1)));
        CHECK(eval_coeff(A, x, pr) == up);
        CHECK(eval_coeff(Am, x, pr) == down);
    }
}

TEST_CASE("raising coefficient hand value at p = 2") {
    // nu = (1,1), x = (1,2), beta = (0,1,2,3), N = 5: direct product of the
    // closed form, computed independently below
    const RacahParams pr(2, rvec({q(0), q(1), q(2), q(3)}), q(5));
    std::vector<Rational> x{q(1), q(2)};
    const Rational oracle = (q(1) + q(1) - q(0)) * (q(1) + q(1)) * (q(2) + q(1) + q(2)) *
                            (q(2) + q(1) + q(2) + q(1)) * (q(2) + q(3) + q(5)) * (q(5) - q(2)) /
                            ((q(2) + q(1)) * (q(2) + q(2)) * (q(4) + q(2)) * (q(4) + q(3)));
    CHECK(oracle == q(50, 7));
    CHECK(eval_coeff(racah_coeff_A(2, MultiIndex(std::vector<int>{1, 1})), x, pr) == q(50, 7));
}

TEST_CASE("shift coefficient hand value at p = 2") {
    // nu = (0,0), x = (0,0), beta = (1,2,3,4), N = 2
    const RacahParams pr(2, rvec({q(1), q(2), q(3), q(4)}), q(2));
    std::vector<Rational> x{q(0), q(0)};
    CHECK(eval_coeff(racah_coeff_C(2, MultiIndex(std::vector<int>{0, 0})), x, pr) == q(9));
}

TEST_CASE("one-variable shift coefficients equal the difference-form ones") {
    RationalSampler s(200);
    const Expr C1 = racah_coeff_C(1, MultiIndex(std::vector<int>{1}));
    const Expr A1 = racah_coeff_A(1, MultiIndex(std::vector<int>{1}));
    const Expr Cm = racah_coeff_C(1, MultiIndex(std::vector<int>{-1}));
    const Expr Am = racah_coeff_A(1, MultiIndex(std::vector<int>{-1}));
    for (int i = 0; i < 20; ++i) {
        const RacahParams pr = sample_params(1, s);
        std::vector<Rational> x{s.rational()};
        CHECK(eval_coeff(C1, x, pr) == eval_coeff(A1, x, pr));
        CHECK(eval_coeff(Cm, x, pr) == eval_coeff(Am, x, pr));
    }
}

TEST_CASE("appendix golden: two-variable shift coefficients") {
    RationalSampler s(300);
    // hard-coded closed forms for the generated C^(2) coefficients
    const auto C11 = [](std::span<const Rational> x, const RacahParams& pr) {
        const Rational x1 = x[0], x2 = x[1], b0 = pr.beta[0], b1 = pr.beta[1], b2 = pr.beta[2],
                       b3 = pr.beta[3], N = pr.N;
        return (x1 + b1) * (x1 + b1 - b0) * (x2 + x1 + b2) * (x2 + x1 + b2 + q(1)) * (N - x2) *
               (N + x2 + b3) /
               ((q(2) * x1 + b1) * (q(2) * x1 + b1 + q(1)) * (q(2) * x2 + b2) * (q(2) * x2 + b2 + q(1)));
    };
    const auto C10 = [](std::span<const Rational> x, const RacahParams& pr) {
        const Rational x1 = x[0], x2 = x[1], b0 = pr.beta[0], b1 = pr.beta[1], b2 = pr.beta[2],
                       b3 = pr.beta[3], N = pr.N;
        const Rational l2 = x2 * (x2 + b2), l3 = N * (N + b3);
        return (x1 + b1) * (x1 + b1 - b0) * (x2 - x1) * (x2 + x1 + b2) *
               (q(2) * l2 + q(2) * l3 + (b2 + q(1)) * (b3 - q(1))) /
               ((q(2) * x1 + b1) * (q(2) * x1 + b1 + q(1)) * (q(2) * x2 + b2 + q(1)) *
                (q(2) * x2 + b2 - q(1)));
    };
    const auto C01 = [](std::span<const Rational> x, const RacahParams& pr) {
        const Rational x1 = x[0], x2 = x[1], b0 = pr.beta[0], b1 = pr.beta[1], b2 = pr.beta[2],
                       b3 = pr.beta[3], N = pr.N;
        const Rational l1 = x1 * (x1 + b1);
        return (q(2) * l1 + (b0 + q(1)) * (b1 - q(1))) * (x2 + x1 + b2) * (x2 - x1 + b2 - b1) *
               (N - x2) * (N + x2 + b3) /
               ((q(2) * x1 + b1 + q(1)) * (q(2) * x1 + b1 - q(1)) * (q(2) * x2 + b2) *
                (q(2) * x2 + b2 + q(1)));
    };

    const Expr g11 = racah_coeff_C(2, MultiIndex(std::vector<int>{1, 1}));
    const Expr g10 = racah_coeff_C(2, MultiIndex(std::vector<int>{1, 0}));
    const Expr g01 = racah_coeff_C(2, MultiIndex(std::vector<int>{0, 1}));
    // involution images
    const Expr gm11 = racah_coeff_C(2, MultiIndex(std::vector<int>{-1, 1}));
    const Expr g1m1 = racah_coeff_C(2, MultiIndex(std::vector<int>{1, -1}));
    const Expr gm1m1 = racah_coeff_C(2, MultiIndex(std::vector<int>{-1, -1}));

    for (int i = 0; i < 20; ++i) {
        const RacahParams pr = sample_params(2, s);
        std::vector<Rational> x{s.rational(), s.rational()};
        CHECK(eval_coeff(g11, x, pr) == C11(x, pr));
        CHECK(eval_coeff(g10, x, pr) == C10(x, pr));
        CHECK(eval_coeff(g01, x, pr) == C01(x, pr));
        // I_1 image: x1 -> -x1-b1 ; I_2 image: x2 -> -x2-b2
        std::vector<Rational> xi1{-x[0] - pr.beta[1], x[1]};
        std::vector<Rational> xi2{x[0], -x[1] - pr.beta[2]};
        std::vector<Rational> xi12{-x[0] - pr.beta[1], -x[1] - pr.beta[2]};
        CHECK(eval_coeff(gm11, x, pr) == C11(xi1, pr));
        CHECK(eval_coeff(g1m1, x, pr) == C11(xi2, pr));
        CHECK(eval_coeff(gm1m1, x, pr) == C11(xi12, pr));
    }
}

TEST_CASE("full operator forms agree") {
    for (int p = 1; p <= 3; ++p) {
        const DiffOperator tri = build_Lp(p, OperatorForm::Triangle);
        const DiffOperator shf = build_Lp(p, OperatorForm::Shift);
        CHECK(is_zero_operator(tri - shf, 12, 90 + static_cast<std::uint64_t>(p)));
    }
}

TEST_CASE("shift form support") {
    CHECK(build_Lp(1, OperatorForm::Shift).support_size() == 3);
    CHECK(build_Lp(2, OperatorForm::Shift).support_size() == 9);
    const DiffOperator lxp = build_Lx(2, 2) - build_Lp(2, OperatorForm::Shift);
    CHECK(is_zero_operator(lxp, 6, 91)); // same operator at j = p
}

TEST_CASE("partial generator leaves trailing variables alone") {
    const DiffOperator lx1 = build_Lx(2, 1);
    for (const auto& [nu, c] : lx1.terms()) CHECK(nu[1] == 0);
    // appendix golden: its raising coefficient
    RationalSampler s(55);
    const Expr c1 = lx1.coeff(MultiIndex(std::vector<int>{1, 0}));
    for (int i = 0; i < 20; ++i) {
        const RacahParams pr = sample_params(2, s);
        std::vector<Rational> x{s.rational(), s.rational()};
        const Rational x1 = x[0], x2 = x[1], b0 = pr.beta[0], b1 = pr.beta[1], b2 = pr.beta[2];
        const Rational ref = (x1 + b1 - b0) * (x1 + b1) * (x2 + x1 + b2) * (x2 - x1) /
                             ((q(2) * x1 + b1) * (q(2) * x1 + b1 + q(1)));
        CHECK(eval_coeff(c1, x, pr) == ref);
    }
}

TEST_CASE("I-invariance of the generators") {
    for (int p = 1; p <= 3; ++p) {
        for (int j = 1; j <= p; ++j) {
            const DiffOperator L = build_Lx(p, j);
            for (int i = 1; i <= p; ++i) {
                const DiffOperator img = involution(L, i, RacahSymbols::beta(i));
                CHECK(is_zero_operator(L - img, 8,
                                       1000 + static_cast<std::uint64_t>(100 * p + 10 * j + i)));
            }
        }
        // invariance under N -> -N - beta_{p+1}
        const DiffOperator L = build_Lp(p, OperatorForm::Shift);
        Substitution flip;
        flip.map_param(p + 2, -RacahSymbols::cap_n(p) - RacahSymbols::beta(p + 1));
        CHECK(is_zero_operator(L - L.map_coeffs(flip), 8, 2000 + static_cast<std::uint64_t>(p)));
    }
}

TEST_CASE("triangularity on the quadratic-variable monomials") {
    RationalSampler s(404);
    for (int p = 1; p <= 2; ++p) {
        const RacahParams pr = sample_params(p, s);
        const DiffOperator L = build_Lp(p, OperatorForm::Shift);
        const auto pv = pr.symbol_values();
        for (long d = 1; d <= 3; ++d) {
            std::vector<std::vector<long>> monos;
            if (p == 1) monos.push_back({d});
            else
                for (long a = 0; a <= d; ++a) monos.push_back({a, d - a});
            for (const auto& m : monos) {
                const auto f = [&](std::span<const Rational> xx) {
                    Rational v(1);
                    for (int i = 0; i < p; ++i) {
                        const Rational lam = xx[static_cast<std::size_t>(i)] *
                                             (xx[static_cast<std::size_t>(i)] + pr.beta[static_cast<std::size_t>(i) + 1]);
                        v = v * pow(lam, m[static_cast<std::size_t>(i)]);
                    }
                    return v;
                };
                // residual g = L(f) + d(d-1+b_{p+1}-b_0) f interpolated in lambda
                const Rational cd =
                    Rational(d) * (Rational(d - 1) + pr.beta[static_cast<std::size_t>(p) + 1] - pr.beta[0]);
                std::vector<std::vector<Rational>> lam_nodes(static_cast<std::size_t>(p));
                std::vector<std::vector<Rational>> x_nodes(static_cast<std::size_t>(p));
                const long n_nodes = 2 * d + 3;
                for (int i = 0; i < p; ++i)
                    for (long k = 0; k < n_nodes; ++k) {
                        const Rational xv(k);
                        x_nodes[static_cast<std::size_t>(i)].push_back(xv);
                        lam_nodes[static_cast<std::size_t>(i)].push_back(
                            xv * (xv + pr.beta[static_cast<std::size_t>(i) + 1]));
                    }
                std::vector<Rational> values;
                std::vector<long> idx(static_cast<std::size_t>(p), 0);
                const std::function<void(int)> sweep = [&](int axis) {
                    if (axis == p) {
                        std::vector<Rational> x;
                        for (int i = 0; i < p; ++i)
                            x.push_back(x_nodes[static_cast<std::size_t>(i)]
                                               [static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
                        values.push_back(L.apply<Rational>(f, x, pv) + cd * f(x));
                        return;
                    }
                    for (idx[static_cast<std::size_t>(axis)] = 0;
                         idx[static_cast<std::size_t>(axis)] < n_nodes; ++idx[static_cast<std::size_t>(axis)])
                        sweep(axis + 1);
                };
                sweep(0);
                const MultiPoly residual = interpolate_on_grid(lam_nodes, values);
                CHECK(residual.total_degree() <= d - 1);
            }
        }
    }
}

TEST_CASE("lattice enumeration") {
    const auto v22 = enumerate_VN(2, 2);
    REQUIRE(v22.size() == 6);
    CHECK(v22[0] == rvec({q(0), q(0)}));
    CHECK(v22[1] == rvec({q(0), q(1)}));
    CHECK(v22[2] == rvec({q(0), q(2)}));
    CHECK(v22[3] == rvec({q(1), q(1)}));
    CHECK(v22[4] == rvec({q(1), q(2)}));
    CHECK(v22[5] == rvec({q(2), q(2)}));
    CHECK(enumerate_VN(1, 0) == std::vector<std::vector<Rational>>{{q(0)}});
    CHECK(enumerate_VN(3, 4).size() == 35); // C(7,3)
}

TEST_CASE("weight values and positivity") {
    SUBCASE("hand value at p = 1") {
        const RacahParams pr(1, rvec({q(0), q(1), q(3)}), q(1));
        std::vector<Rational> x{q(0)};
        // independent product: k=0 block is an empty pochhammer ratio = 1;
        // k=1 block (b2-b1)_1 (b2)_1 / (1! (b1+1)_1) = 2*3/2 = 3; times (b1+2x1) = 1
        CHECK(weight_rho(x, pr) == q(3));
    }
    SUBCASE("positivity on the sampled regime") {
        const RacahParams pr(2, rvec({q(0), q(1), q(2), q(3)}), q(3));
        for (const auto& pt : enumerate_VN(2, 3)) CHECK(weight_rho(pt, pr) > q(0));
    }
    SUBCASE("outside the simplex") {
        const RacahParams pr(2, rvec({q(0), q(1), q(2), q(3)}), q(3));
        std::vector<Rational> bad{q(2), q(1)};
        CHECK_THROWS_AS((void)weight_rho(bad, pr), InvalidPoint);
        std::vector<Rational> frac{q(1, 2), q(1)};
        CHECK_THROWS_AS((void)weight_rho(frac, pr), InvalidPoint);
    }
}

TEST_CASE("cascade polynomial basics") {
    RationalSampler s(500);
    SUBCASE("degree zero is one") {
        const RacahParams pr = sample_params(2, s);
        std::vector<long> n{0, 0};
        std::vector<Rational> x{s.rational(), s.rational()};
        CHECK(racah_R(n, x, pr) == q(1));
        CHECK(racah_Rhat(n, x, pr) == q(1));
    }
    SUBCASE("p = 1 reduction to the one-variable polynomial") {
        for (int i = 0; i < 10; ++i) {
            const RacahParams pr = sample_params(1, s);
            const long n = s.integer(0, 4);
            const Rational x1 = s.rational();
            std::vector<long> nn{n};
            std::vector<Rational> x{x1};
            const Rational direct = racah_r<Rational>(n, pr.beta[1] - pr.beta[0] - q(1),
                                                      pr.beta[2] - pr.beta[1] - q(1), -pr.N - q(1),
                                                      pr.beta[1] + pr.N, x1);
            CHECK(racah_R(nn, x, pr) == direct);
        }
    }
    SUBCASE("two-variable value against the cascade written out by hand") {
        const RacahParams pr(2, rvec({q(1, 3), q(5, 2), q(9, 2), q(15, 2)}), q(17, 5));
        std::vector<long> n{1, 0};
        std::vector<Rational> x{q(3, 7), q(11, 4)};
        const Rational f1 = racah_r<Rational>(1, pr.beta[1] - pr.beta[0] - q(1),
                                              pr.beta[2] - pr.beta[1] - q(1), -x[1] - q(1),
                                              pr.beta[1] + x[1], x[0]);
        const Rational f2 = racah_r<Rational>(0, q(2) + pr.beta[2] - pr.beta[0] - q(1),
                                              pr.beta[3] - pr.beta[2] - q(1), q(1) - pr.N - q(1),
                                              q(1) + pr.beta[2] + pr.N, -q(1) + x[1]);
        CHECK(racah_R(n, x, pr) == f1 * f2);
    }
    SUBCASE("normalization failure raises") {
        const RacahParams pr(2, rvec({q(1, 3), q(5, 2), q(9, 2), q(15, 2)}), q(2));
        std::vector<long> n{2, 1}; // |n| = 3 > N = 2
        std::vector<Rational> x{q(1), q(2)};
        CHECK_THROWS_AS((void)racah_Rhat(n, x, pr), ZeroNormalization);
    }
}

TEST_CASE("spectral equations on rational grids") {
    RationalSampler s(600);
    const int p = 2;
    for (int rep = 0; rep < 2; ++rep) {
        const bool integer_N = rep == 1;
        const RacahParams pr = integer_N ? sample_params(p, s, q(7), true) : sample_params(p, s);
        for (long n1 = 0; n1 <= 2; ++n1)
            for (long n2 = 0; n2 + n1 <= 2; ++n2) {
                std::vector<long> n{n1, n2};
                const auto f = [&](std::span<const Rational> xx) { return racah_R(n, xx, pr); };
                for (int j = 1; j <= p; ++j) {
                    const DiffOperator L = build_Lx(p, j);
                    const Rational mu = mu_eigenvalue(j, n, pr);
                    const Rational o1 = s.rational(), o2 = s.rational();
                    for (long g1 = 0; g1 < 2; ++g1)
                        for (long g2 = 0; g2 < 2; ++g2) {
                            std::vector<Rational> x{o1 + q(g1), o2 + q(g2)};
                            CHECK(apply_racah_operator(L, f, x, pr) == mu * f(x));
                        }
                }
            }
    }
}

TEST_CASE("self-adjointness and the pointwise balance") {
    RationalSampler s(700);
    const int p = 2;
    const long N = 3;
    const RacahParams pr = sample_params(p, s, q(N), true);
    const auto lattice = enumerate_VN(p, N);

    SUBCASE("pointwise conditions") {
        const auto pv = pr.symbol_values();
        for (const auto& x : lattice) {
            Evaluator<Rational> ev(x, pv);
            for (int c1 = -1; c1 <= 1; ++c1)
                for (int c2 = -1; c2 <= 1; ++c2) {
                    if (c1 == 0 && c2 == 0) continue;
                    const MultiIndex nu(std::vector<int>{c1, c2});
                    const Expr Cnu = racah_coeff_C(p, nu);
                    std::vector<Rational> xs{x[0] + q(c1), x[1] + q(c2)};
                    const bool inside = in_VN(xs, N);
                    const Rational cv = ev(Cnu);
                    if (!inside) {
                        CHECK(cv == q(0)); // boundary vanishing
                    } else {
                        const Expr Cminus = racah_coeff_C(p, nu.negated());
                        Evaluator<Rational> ev2(xs, pv);
                        CHECK(weight_rho(x, pr) * cv == weight_rho(xs, pr) * ev2(Cminus));
                    }
                }
        }
    }

    SUBCASE("bilinear form symmetry on the quadratic-variable monomials") {
        const DiffOperator L = build_Lp(p, OperatorForm::Shift);
        const auto lam_mono = [&](long m1, long m2) {
            return [&pr, m1, m2](std::span<const Rational> xx) {
                const Rational l1 = xx[0] * (xx[0] + pr.beta[1]);
                const Rational l2 = xx[1] * (xx[1] + pr.beta[2]);
                return pow(l1, m1) * pow(l2, m2);
            };
        };
        std::vector<std::pair<long, long>> basis;
        for (long a = 0; a <= N; ++a)
            for (long b = 0; a + b <= N; ++b) basis.emplace_back(a, b);
        for (std::size_t i = 0; i < basis.size(); ++i)
            for (std::size_t j = i; j < basis.size(); ++j) {
                const auto f = lam_mono(basis[i].first, basis[i].second);
                const auto g = lam_mono(basis[j].first, basis[j].second);
                const auto Lf = [&](std::span<const Rational> xx) {
                    return apply_racah_operator(L, f, xx, pr);
                };
                const auto Lg = [&](std::span<const Rational> xx) {
                    return apply_racah_operator(L, g, xx, pr);
                };
                CHECK(inner_product(Lf, g, pr) == inner_product(f, Lg, pr));
            }
    }
}

TEST_CASE("orthogonality of the cascade basis") {
    RationalSampler s(800);
    const int p = 2;
    const long N = 2;
    const RacahParams pr = sample_params(p, s, q(N), true);
    std::vector<std::vector<long>> degs;
    for (long a = 0; a <= N; ++a)
        for (long b = 0; a + b <= N; ++b) degs.push_back({a, b});
    for (std::size_t i = 0; i < degs.size(); ++i)
        for (std::size_t j = 0; j < degs.size(); ++j) {
            const auto f = [&](std::span<const Rational> xx) { return racah_R(degs[i], xx, pr); };
            const auto g = [&](std::span<const Rational> xx) { return racah_R(degs[j], xx, pr); };
            const Rational ip = inner_product(f, g, pr);
            if (i == j) CHECK(ip != q(0));
            else CHECK(ip == q(0));
        }
    // and <1, R(n)> = 0 for |n| = 1 explicitly
    const auto one = [](std::span<const Rational>) { return Rational(1); };
    for (const auto& n : {std::vector<long>{1, 0}, std::vector<long>{0, 1}}) {
        const auto f = [&](std::span<const Rational> xx) { return racah_R(n, xx, pr); };
        CHECK(inner_product(one, f, pr) == q(0));
    }
}

TEST_CASE("binomial determinant identity") {
    SUBCASE("hand instance p = 1, M = 2") {
        const auto r = det_binomial_identity(1, 2);
        CHECK(r.determinant == q(8));
        CHECK(r.predicted == q(8));
        CHECK(r.equal);
    }
    SUBCASE("degenerate M = 0") {
        const auto r = det_binomial_identity(1, 0);
        CHECK(r.determinant == q(1));
        CHECK(r.equal);
    }
    SUBCASE("p = 2, M = 2") {
        const auto r = det_binomial_identity(2, 2);
        CHECK(r.determinant == q(256));
        CHECK(r.equal);
    }
}

TEST_CASE("generator family commutes (small sample)") {
    const DiffOperator c = commutator(build_Lx(2, 1), build_Lx(2, 2));
    CHECK(is_zero_operator(c, 4, 3012));
}
