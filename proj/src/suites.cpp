#include "racah/suites.hpp"

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "racah/askey.hpp"
#include "racah/duality.hpp"
#include "racah/hyper.hpp"
#include "racah/prng.hpp"
#include "racah/racah_system.hpp"

namespace racah {

namespace {

Rational q(long n, long d = 1) { return Rational(n, d); }

struct Bounds {
    int trials;      // randomized-sample counts
    long degree_cap; // |n| caps
    int draws;       // parameter redraws
    int pmax;        // largest dimension exercised
};

Bounds tier_bounds(const std::string& tier, int trials_override) {
    Bounds b{};
    if (tier == "smoke") b = {10, 1, 2, 2};
    else if (tier == "desk") b = {100, 3, 10, 3};
    else if (tier == "deep") b = {150, 4, 12, 3};
    else throw ConfigInvalid("unknown tier '" + tier + "'");
    if (trials_override > 0) b.trials = trials_override;
    return b;
}

class Recorder {
public:
    explicit Recorder(SuiteReport& rep) : rep_(rep) {}

    void record(std::string id, std::string anchor, std::string inputs, bool pass,
                std::string witness = "") {
        rep_.checks.push_back(
            {std::move(id), std::move(anchor), std::move(inputs), pass, pass ? "" : std::move(witness)});
    }

    template <class Fn>
    void guarded(const std::string& id, const std::string& anchor, const std::string& inputs,
                 Fn&& fn) {
        try {
            fn();
        } catch (const std::exception& e) {
            record(id, anchor, inputs, false, std::string("exception: ") + e.what());
        }
    }

private:
    SuiteReport& rep_;
};

RacahParams sample_racah_params(int p, RationalSampler& s, const Rational* fixed_N = nullptr,
                                long cap = 8) {
    for (;;) {
        std::vector<Rational> beta;
        for (int i = 0; i < p + 2; ++i) beta.push_back(s.rational());
        bool ok = !beta[0].is_integer();
        for (int i = 0; ok && i <= p; ++i) {
            const Rational d = beta[static_cast<std::size_t>(i) + 1] - beta[static_cast<std::size_t>(i)];
            if (d.is_integer()) ok = false;
        }
        (void)cap;
        if (!ok) continue;
        Rational N = fixed_N ? *fixed_N : s.rational();
        if (!fixed_N && N.is_integer()) continue;
        return RacahParams(p, std::move(beta), std::move(N));
    }
}

std::vector<std::vector<long>> degrees_up_to(int p, long cap) {
    std::vector<std::vector<long>> out;
    std::vector<long> cur(static_cast<std::size_t>(p), 0);
    const std::function<void(int, long)> rec = [&](int i, long left) {
        if (i == p) {
            out.push_back(cur);
            return;
        }
        for (long v = 0; v <= left; ++v) {
            cur[static_cast<std::size_t>(i)] = v;
            rec(i + 1, left - v);
        }
    };
    rec(0, cap);
    return out;
}

std::string vec_str(std::span<const long> v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

std::string vec_str(std::span<const Rational> v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].str();
    os << ")";
    return os.str();
}

// ------------------------------------------------------------ suites ----

void suite_form_equivalence(const Bounds& b, std::uint64_t seed, Recorder& rec) {
    for (int p = 1; p <= std::min(3, b.pmax + 1); ++p) {
        const DiffOperator diff =
            build_Lp(p, OperatorForm::Triangle) - build_Lp(p, OperatorForm::Shift);
        bool ok = false;
        std::string witness;
        try {
            ok = is_zero_operator(diff, b.trials, seed + static_cast<std::uint64_t>(p));
        } catch (const std::exception& e) {
            witness = e.what();
        }
        rec.record("form-equivalence/p" + std::to_string(p),
                   "difference-involution form equals the shift form", "p=" + std::to_string(p),
                   ok, witness.empty() ? "nonzero coefficient found" : witness);
    }
}

void suite_triangularity(const Bounds& b, std::uint64_t seed, Recorder& rec) {
    RationalSampler s(seed);
    const long dmax = std::min<long>(4, b.degree_cap + 1);
    for (int p = 1; p <= std::min(3, b.pmax); ++p) {
        const RacahParams pr = sample_racah_params(p, s);
        const DiffOperator L = build_Lp(p, OperatorForm::Shift);
        const auto pv = pr.symbol_values();
        for (long d = 1; d <= dmax; ++d) {
            const Rational cd =
                Rational(d) * (Rational(d - 1) + pr.beta[static_cast<std::size_t>(p) + 1] - pr.beta[0]);
            const long n_nodes = 2 * d + 3;
            std::vector<std::vector<Rational>> lam_nodes(static_cast<std::size_t>(p));
            std::vector<std::vector<Rational>> x_nodes(static_cast<std::size_t>(p));
            for (int i = 0; i < p; ++i)
                for (long k = 0; k < n_nodes; ++k) {
                    const Rational xv(k);
                    x_nodes[static_cast<std::size_t>(i)].push_back(xv);
                    lam_nodes[static_cast<std::size_t>(i)].push_back(
                        xv * (xv + pr.beta[static_cast<std::size_t>(i) + 1]));
                }
            // evaluate the operator coefficients once per grid point and reuse
            // them for every monomial of this degree
            struct PointData {
                std::vector<Rational> x;
                std::vector<std::pair<MultiIndex, Rational>> coeffs;
            };
            std::vector<PointData> grid;
            {
                std::vector<long> idx(static_cast<std::size_t>(p), 0);
                const std::function<void(int)> sweep = [&](int axis) {
                    if (axis == p) {
                        PointData pd;
                        for (int i = 0; i < p; ++i)
                            pd.x.push_back(x_nodes[static_cast<std::size_t>(i)]
                                                  [static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])]);
                        Evaluator<Rational> ev(pd.x, pv);
                        for (const auto& [nu, c] : L.terms()) pd.coeffs.emplace_back(nu, ev(c));
                        grid.push_back(std::move(pd));
                        return;
                    }
                    for (idx[static_cast<std::size_t>(axis)] = 0;
                         idx[static_cast<std::size_t>(axis)] < n_nodes; ++idx[static_cast<std::size_t>(axis)])
                        sweep(axis + 1);
                };
                sweep(0);
            }
            for (const auto& m : degrees_up_to(p, d)) {
                long tot = 0;
                for (long v : m) tot += v;
                if (tot != d) continue;
                const auto f = [&](std::span<const Rational> xx) {
                    Rational v(1);
                    for (int i = 0; i < p; ++i)
                        v = v * pow(xx[static_cast<std::size_t>(i)] *
                                        (xx[static_cast<std::size_t>(i)] +
                                         pr.beta[static_cast<std::size_t>(i) + 1]),
                                    m[static_cast<std::size_t>(i)]);
                    return v;
                };
                std::vector<Rational> values;
                values.reserve(grid.size());
                std::vector<Rational> shifted(static_cast<std::size_t>(p));
                for (const auto& pd : grid) {
                    Rational acc = cd * f(pd.x);
                    for (const auto& [nu, cv] : pd.coeffs) {
                        if (cv.is_zero()) continue;
                        for (int i = 0; i < p; ++i)
                            shifted[static_cast<std::size_t>(i)] =
                                pd.x[static_cast<std::size_t>(i)] + q(nu[i]);
                        acc += cv * f(shifted);
                    }
                    values.push_back(acc);
                }
                const MultiPoly residual = interpolate_on_grid(lam_nodes, values);
                const bool ok = residual.total_degree() <= d - 1;
                rec.record("triangularity/p" + std::to_string(p) + "/m" + vec_str(m),
                           "degree drop of the shifted operator on quadratic-variable monomials",
                           "p=" + std::to_string(p) + " deg=" + std::to_string(d), ok,
                           "residual degree " + std::to_string(residual.total_degree()));
            }
        }
    }
}

void suite_self_adjointness(const Bounds& b, std::uint64_t seed, Recorder& rec) {
    RationalSampler s(seed);
    const int p = 2;
    const int configs = std::max(1, b.draws / 2);
    for (long N = 2; N <= 4; ++N) {
        for (int cfg = 0; cfg < configs; ++cfg) {
            const Rational Nq(N);
            const RacahParams pr = sample_racah_params(p, s, &Nq);
            const auto lattice = enumerate_VN(p, N);
            const auto pv = pr.symbol_values();
            bool balance_ok = true, vanish_ok = true;
            std::string witness;
            for (const auto& x : lattice) {
                Evaluator<Rational> ev(x, pv);
                for (int c1 = -1; c1 <= 1 && balance_ok && vanish_ok; ++c1)
                    for (int c2 = -1; c2 <= 1; ++c2) {
                        if (c1 == 0 && c2 == 0) continue;
                        const MultiIndex nu(std::vector<int>{c1, c2});
                        const Rational cv = ev(racah_coeff_C(p, nu));
                        std::vector<Rational> xs{x[0] + q(c1), x[1] + q(c2)};
                        if (!in_VN(xs, N)) {
                            if (!cv.is_zero()) {
                                vanish_ok = false;
                                witness = "edge coefficient nonzero at x=" + vec_str(x) + " nu=" + nu.str();
                                break;
                            }
                        } else {
                            Evaluator<Rational> ev2(xs, pv);
                            if (weight_rho(x, pr) * cv !=
                                weight_rho(xs, pr) * ev2(racah_coeff_C(p, nu.negated()))) {
                                balance_ok = false;
                                witness = "weight balance fails at x=" + vec_str(x) + " nu=" + nu.str();
                                break;
                            }
                        }
                    }
            }
            rec.record("self-adjointness/pointwise/N" + std::to_string(N) + "/c" + std::to_string(cfg),
                       "weight-coefficient balance and edge vanishing on the simplex lattice",
                       "N=" + std::to_string(N), balance_ok && vanish_ok, witness);

            const DiffOperator L = build_Lp(p, OperatorForm::Shift);
            bool sym_ok = true;
            std::string sym_witness;
            const auto lam_mono = [&](long m1, long m2) {
                return [&pr, m1, m2](std::span<const Rational> xx) {
                    return pow(xx[0] * (xx[0] + pr.beta[1]), m1) *
                           pow(xx[1] * (xx[1] + pr.beta[2]), m2);
                };
            };
            std::vector<std::pair<long, long>> basis;
            for (long a = 0; a <= N; ++a)
                for (long bb = 0; a + bb <= N; ++bb) basis.emplace_back(a, bb);
            for (std::size_t i = 0; i < basis.size() && sym_ok; ++i)
                for (std::size_t j = i; j < basis.size(); ++j) {
                    const auto f = lam_mono(basis[i].first, basis[i].second);
                    const auto g = lam_mono(basis[j].first, basis[j].second);
                    const auto Lf = [&](std::span<const Rational> xx) {
                        return apply_racah_operator(L, f, xx, pr);
                    };
                    const auto Lg = [&](std::span<const Rational> xx) {
                        return apply_racah_operator(L, g, xx, pr);
                    };
                    if (inner_product(Lf, g, pr) != inner_product(f, Lg, pr)) {
                        sym_ok = false;
                        sym_witness = "asymmetric pair (" + std::to_string(basis[i].first) + "," +
                                      std::to_string(basis[i].second) + ")x(" +
                                      std::to_string(basis[j].first) + "," +
                                      std::to_string(basis[j].second) + ")";
                        break;
                    }
                }
            rec.record("self-adjointness/bilinear/N" + std::to_string(N) + "/c" + std::to_string(cfg),
                       "the operator is symmetric for the weighted lattice pairing",
                       "N=" + std::to_string(N), sym_ok, sym_witness);
        }
    }
}

void suite_orthogonality(const Bounds& b, std::uint64_t seed, Recorder& rec) {
    RationalSampler s(seed);
    const int p = 2;
    const long N = (b.degree_cap >= 3) ? 3 : 2;
    const Rational Nq(N);
    const RacahParams pr = sample_racah_params(p, s, &Nq);
    const auto degs = degrees_up_to(p, N);
    bool diag_ok = true, offdiag_ok = true;
    std::string witness;
    for (std::size_t i = 0; i < degs.size(); ++i)
        for (std::size_t j = i; j < degs.size(); ++j) {
            const auto f = [&](std::span<const Rational> xx) { return racah_R(degs[i], xx, pr); };
            const auto g = [&](std::span<const Rational> xx) { return racah_R(degs[j], xx, pr); };
            const Rational ip = inner_product(f, g, pr);
            if (i == j && ip.is_zero()) {
                diag_ok = false;
                witness = "vanishing norm at n=" + vec_str(degs[i]);
            }
            if (i != j && !ip.is_zero()) {
                offdiag_ok = false;
                witness = "nonzero pairing " + vec_str(degs[i]) + "x" + vec_str(degs[j]);
            }
        }
    rec.record("orthogonality/gram", "the cascade basis has a diagonal lattice pairing matrix",
               "p=2 N=" + std::to_string(N), diag_ok && offdiag_ok, witness);
}

void suite_spectral_x(const Bounds& b, std::uint64_t seed, Recorder& rec) {
    RationalSampler s(seed);
    const int p = 2;
    for (int rep = 0; rep < 2; ++rep) {
        const bool intN = rep == 1;
        const Rational Nfix(3);
        const RacahParams pr = intN ? sample_racah_params(p, s, &Nfix) : sample_racah_params(p, s);
        for (const auto& n : degrees_up_to(p, b.degree_cap)) {
            long tot = 0;
            for (long v : n) tot += v;
            if (intN && tot > 3) continue;
            const auto f = [&](std::span<const Rational> xx) { return racah_R(n, xx, pr); };
            for (int j = 1; j <= p; ++j) {
                const DiffOperator L = build_Lx(p, j);
                const Rational mu = mu_eigenvalue(j, n, pr);
                bool ok = true;
                std::string witness;
                const Rational o1 = s.rational(), o2 = s.rational();
                const long side = 2 * tot + 3;
                for (long g1 = 0; g1 < side && ok; ++g1)
                    for (long g2 = 0; g2 < side; ++g2) {
                        std::vector<Rational> x{o1 + q(g1), o2 + q(g2)};
                        if (apply_racah_operator(L, f, x, pr) != mu * f(x)) {
                            ok = false;
                            witness = "mismatch at x=" + vec_str(x);
                            break;
                        }
                    }
                rec.record("spectral-x/" + std::string(intN ? "intN" : "genN") + "/j" +
                               std::to_string(j) + "/n" + vec_str(n),
                           "variable-side generators have the cascade polynomials as eigenfunctions",
                           "n=" + vec_str(n) + " j=" + std::to_string(j), ok, witness);
            }
        }
    }
}

void suite_spectral_n(const Bounds& b, std::uint64_t seed, Recorder& rec) {
    RationalSampler s(seed);
    struct Case {
        int p;
        long cap;
        bool intN;
        long N;
    };
    std::vector<Case> cases{{2, b.degree_cap, false, 0}, {2, 3, true, 3}};
    if (b.pmax >= 3) cases.push_back({3, std::min<long>(2, b.degree_cap), false, 0});
    for (const auto& c : cases) {
        const Rational Nfix(c.N);
        const RacahParams pr =
            c.intN ? sample_racah_params(c.p, s, &Nfix) : sample_racah_params(c.p, s);
        for (int j = 1; j <= c.p; ++j) {
            const DualGenerator gen = build_Ln_parts(c.p, j);
            for (const auto& n : degrees_up_to(c.p, c.cap)) {
                bool ok = true;
                std::string witness;
                for (int pt = 0; pt < 3 && ok; ++pt) {
                    std::vector<Rational> x;
                    for (int i = 0; i < c.p; ++i) x.push_back(s.rational());
                    try {
                        const Rational lhs = apply_Ln_rhat(gen, n, x, pr);
                        const Rational rhs = kappa_eigenvalue(j, x, pr) * racah_Rhat(n, x, pr);
                        if (lhs != rhs) {
                            ok = false;
                            witness = "mismatch at x=" + vec_str(x);
                        }
                    } catch (const BoundaryLeak& e) {
                        ok = false;
                        witness = e.what();
                    }
                }
                // boundary vanishing record for the small indices
                if (ok) ok = boundary_vanishing_check(gen, n, pr);
                rec.record("spectral-n/" + std::string(c.intN ? "intN" : "genN") + "/p" +
                               std::to_string(c.p) + "/j" + std::to_string(j) + "/n" + vec_str(n),
                           "index-side generators have the normalized polynomials as eigenfunctions",
                           "p=" + std::to_string(c.p) + " n=" + vec_str(n) + " j=" + std::to_string(j),
                           ok, witness.empty() ? "boundary coefficient nonzero" : witness);
            }
        }
    }
}

void suite_commutativity(const Bounds& b, std::uint64_t seed, Recorder& rec, bool dual) {
    for (int p = 2; p <= b.pmax; ++p)
        for (int i = 1; i <= p; ++i)
            for (int j = i + 1; j <= p; ++j) {
                const DiffOperator A = dual ? build_Ln(p, i) : build_Lx(p, i);
                const DiffOperator B = dual ? build_Ln(p, j) : build_Lx(p, j);
                bool ok = false;
                std::string witness;
                try {
                    ok = is_zero_operator(commutator(A, B), b.trials,
                                          seed + static_cast<std::uint64_t>(100 * p + 10 * i + j));
                } catch (const std::exception& e) {
                    witness = e.what();
                }
                rec.record(std::string("commutativity-") + (dual ? "n" : "x") + "/p" +
                               std::to_string(p) + "/" + std::to_string(i) + std::to_string(j),
                           dual ? "index-side generators commute" : "variable-side generators commute",
                           "p=" + std::to_string(p) + " pair=(" + std::to_string(i) + "," +
                               std::to_string(j) + ")",
                           ok, witness.empty() ? "nonzero commutator coefficient" : witness);
            }
}

void suite_duality(const Bounds& b, std::uint64_t seed, Recorder& rec) {
    RationalSampler s(seed);
    for (int p = 2; p <= b.pmax; ++p) {
        int draws = 0;
        int attempts = 0;
        while (draws < b.draws && attempts < 100 * b.draws) {
            ++attempts;
            std::vector<Rational> tbeta;
            for (int k = 0; k < p + 2; ++k) tbeta.push_back(s.rational());
            bool okp = !tbeta[0].is_integer();
            for (int i = 0; okp && i <= p; ++i)
                if ((tbeta[static_cast<std::size_t>(i) + 1] - tbeta[static_cast<std::size_t>(i)]).is_integer())
                    okp = false;
            const Rational N = s.rational();
            if (!okp || N.is_integer()) continue;
            ++draws;
            bool ok = true;
            std::string witness;
            const auto degs = degrees_up_to(p, b.degree_cap);
            for (const auto& n : degs) {
                for (const auto& nt : degs) {
                    DualTriple td;
                    td.N = N;
                    td.beta = tbeta;
                    for (long v : nt) td.n.push_back(Rational(v));
                    td.x.resize(static_cast<std::size_t>(p));
                    for (int i = 1; i <= p; ++i) {
                        Rational ps(0);
                        for (int k2 = 0; k2 < i; ++k2) ps += Rational(n[static_cast<std::size_t>(k2)]);
                        td.x[static_cast<std::size_t>(p - i)] =
                            ps - tbeta[static_cast<std::size_t>(p + 1 - i)] - N;
                    }
                    const DualTriple tp = duality_f(td);
                    const RacahParams primal(p, tp.beta, N);
                    const RacahParams dual(p, tbeta, N);
                    if (racah_Rhat(n, tp.x, primal) != racah_Rhat(nt, td.x, dual)) {
                        ok = false;
                        witness = "value mismatch at n=" + vec_str(n) + " ntilde=" + vec_str(nt);
                        break;
                    }
                }
                if (!ok) break;
            }
            rec.record("duality/p" + std::to_string(p) + "/draw" + std::to_string(draws),
                       "normalized polynomials are invariant under the variable-index swap",
                       "p=" + std::to_string(p) + " draw=" + std::to_string(draws), ok, witness);
        }
    }
}

void suite_whipple(const Bounds& b, std::uint64_t seed, Recorder& rec) {
    RationalSampler s(seed);
    const int half = std::max(5, b.trials / 2);
    int done = 0, attempts = 0;
    bool ok = true;
    std::string witness;
    while (done < half && attempts < 100 * half) {
        ++attempts;
        const long n = s.integer(1, 4);
        const Rational x = s.rational(), y = s.rational(), z = s.rational(), u = s.rational(),
                       v = s.rational();
        const Rational w = x + y + z + q(1 - n) - u - v;
        try {
            const auto r = whipple_check<Rational>(n, x, y, z, u, v, w);
            ++done;
            if (!r.all_equal) {
                ok = false;
                witness = "transformed values differ at n=" + std::to_string(n);
                break;
            }
        } catch (const PoleInDenominator&) {
            continue;
        }
    }
    rec.record("whipple/chain", "both balanced-series transformations preserve the value",
               std::to_string(done) + " instances", ok && done == half,
               ok ? "not enough pole-free instances" : witness);

    // the rewritten cascade-factor forms at random points
    int done2 = 0, attempts2 = 0;
    bool ok2 = true;
    std::string witness2;
    const int p = 3;
    while (done2 < half && attempts2 < 100 * half) {
        ++attempts2;
        const RacahParams pr = sample_racah_params(p, s);
        std::vector<long> n{s.integer(0, 3), s.integer(0, 3), s.integer(0, 3)};
        std::vector<Rational> x{s.rational(), s.rational(), s.rational()};
        // factor k of the cascade in its plain form...
        std::vector<Rational> xx(x.begin(), x.end());
        xx.push_back(pr.N); // x_{p+1}
        const auto plain_factor = [&](int k) {
            long Nk = 0;
            for (int i = 0; i + 1 < k; ++i) Nk += n[static_cast<std::size_t>(i)];
            return racah_r<Rational>(n[static_cast<std::size_t>(k - 1)],
                                     q(2 * Nk) + pr.beta[static_cast<std::size_t>(k)] - pr.beta[0] - q(1),
                                     pr.beta[static_cast<std::size_t>(k + 1)] -
                                         pr.beta[static_cast<std::size_t>(k)] - q(1),
                                     q(Nk) - xx[static_cast<std::size_t>(k)] - q(1),
                                     q(Nk) + pr.beta[static_cast<std::size_t>(k)] + xx[static_cast<std::size_t>(k)],
                                     q(-Nk) + x[static_cast<std::size_t>(k - 1)]);
        };
        // ...and in the two rewritten forms (outer labels and the interior one)
        const auto rewritten_factor = [&](int k) {
            long Nkm1 = 0;
            for (int i = 0; i + 1 < k; ++i) Nkm1 += n[static_cast<std::size_t>(i)];
            const long nk = n[static_cast<std::size_t>(k - 1)];
            const long Nk = Nkm1 + nk;
            const Rational xk = x[static_cast<std::size_t>(k - 1)];
            const Rational xk1 = xx[static_cast<std::size_t>(k)];
            const Rational bk = pr.beta[static_cast<std::size_t>(k)];
            const Rational bk1 = pr.beta[static_cast<std::size_t>(k + 1)];
            const Rational b0 = pr.beta[0];
            if (k == 1 || k == p) {
                return pochhammer(q(1 - Nk) - xk - bk, nk) * pochhammer(bk1 - bk, nk) *
                       pochhammer(q(-Nk) - bk + b0 + q(1) - xk, nk) *
                       hyp_terminating<Rational>(
                           nk,
                           {-xk1 - xk - bk, xk1 - xk + bk1 - bk, q(1 - 2 * Nkm1 - nk) - bk + b0},
                           {q(1 - Nk) - xk - bk, bk1 - bk, q(-Nk) - bk + b0 + q(1) - xk}, q(1));
            }
            return pochhammer(q(1 - Nk) - xk - bk, nk) * pochhammer(q(Nkm1) + xk1 + bk1 - b0, nk) *
                   pochhammer(xk1 - xk - q(nk) + q(1), nk) *
                   hyp_terminating<Rational>(
                       nk, {xk1 - xk + bk1 - bk, q(Nkm1) - b0 - xk, q(1 - Nk) + xk1},
                       {q(1 - Nk) - xk - bk, q(Nkm1) + xk1 + bk1 - b0, xk1 - xk - q(nk) + q(1)},
                       q(1));
        };
        try {
            bool good = true;
            for (int k = 1; k <= p; ++k)
                if (plain_factor(k) != rewritten_factor(k)) good = false;
            ++done2;
            if (!good) {
                ok2 = false;
                witness2 = "factor forms differ at n=" + vec_str(n);
                break;
            }
        } catch (const PoleInDenominator&) {
            continue;
        }
    }
    rec.record("whipple/cascade-forms",
               "the cascade factors agree with their transformed closed forms",
               std::to_string(done2) + " instances", ok2 && done2 == half,
               ok2 ? "not enough pole-free instances" : witness2);
}

void suite_determinant(const Bounds& b, std::uint64_t seed, Recorder& rec) {
    (void)seed;
    std::vector<std::pair<int, int>> cases;
    const int m1 = b.degree_cap >= 3 ? 4 : 2;
    for (int M = 0; M <= m1; ++M) cases.emplace_back(1, M);
    const int m2 = b.degree_cap >= 3 ? 3 : 2;
    for (int M = 0; M <= m2; ++M) cases.emplace_back(2, M);
    if (b.pmax >= 3) cases.emplace_back(3, 2);
    for (const auto& [p, M] : cases) {
        const auto r = det_binomial_identity(p, M);
        rec.record("determinant/p" + std::to_string(p) + "M" + std::to_string(M),
                   "the binomial-matrix determinant is the predicted power of two",
                   "p=" + std::to_string(p) + " M=" + std::to_string(M), r.equal,
                   "det=" + r.determinant.str() + " expected=" + r.predicted.str());
    }
}

// golden closed forms for the appendix cross-checks; kept separate from the
// operator builders on purpose
namespace golden {

Rational C11(std::span<const Rational> x, const RacahParams& pr) {
    const Rational x1 = x[0], x2 = x[1], b0 = pr.beta[0], b1 = pr.beta[1], b2 = pr.beta[2],
                   b3 = pr.beta[3], N = pr.N;
    return (x1 + b1) * (x1 + b1 - b0) * (x2 + x1 + b2) * (x2 + x1 + b2 + q(1)) * (N - x2) *
           (N + x2 + b3) /
           ((q(2) * x1 + b1) * (q(2) * x1 + b1 + q(1)) * (q(2) * x2 + b2) * (q(2) * x2 + b2 + q(1)));
}

Rational C10(std::span<const Rational> x, const RacahParams& pr) {
    const Rational x1 = x[0], x2 = x[1], b0 = pr.beta[0], b1 = pr.beta[1], b2 = pr.beta[2],
                   b3 = pr.beta[3], N = pr.N;
    const Rational l2 = x2 * (x2 + b2), l3 = N * (N + b3);
    return (x1 + b1) * (x1 + b1 - b0) * (x2 - x1) * (x2 + x1 + b2) *
           (q(2) * l2 + q(2) * l3 + (b2 + q(1)) * (b3 - q(1))) /
           ((q(2) * x1 + b1) * (q(2) * x1 + b1 + q(1)) * (q(2) * x2 + b2 + q(1)) *
            (q(2) * x2 + b2 - q(1)));
}

Rational C01(std::span<const Rational> x, const RacahParams& pr) {
    const Rational x1 = x[0], x2 = x[1], b0 = pr.beta[0], b1 = pr.beta[1], b2 = pr.beta[2],
                   b3 = pr.beta[3], N = pr.N;
    const Rational l1 = x1 * (x1 + b1);
    return (q(2) * l1 + (b0 + q(1)) * (b1 - q(1))) * (x2 + x1 + b2) * (x2 - x1 + b2 - b1) *
           (N - x2) * (N + x2 + b3) /
           ((q(2) * x1 + b1 + q(1)) * (q(2) * x1 + b1 - q(1)) * (q(2) * x2 + b2) *
            (q(2) * x2 + b2 + q(1)));
}

Rational C1_first(std::span<const Rational> x, const RacahParams& pr) {
    const Rational x1 = x[0], x2 = x[1], b0 = pr.beta[0], b1 = pr.beta[1], b2 = pr.beta[2];
    return (x1 + b1 - b0) * (x1 + b1) * (x2 + x1 + b2) * (x2 - x1) /
           ((q(2) * x1 + b1) * (q(2) * x1 + b1 + q(1)));
}

Rational T0(std::span<const Rational> nv, const RacahParams& pr) {
    const Rational S = nv[0] + nv[1];
    const Rational mu2 = -(S * (S - q(1) + pr.beta[3] - pr.beta[0]));
    return -q(2) * mu2 + (pr.beta[0] + q(1)) * (pr.beta[0] - pr.beta[3]) -
           q(2) * pr.N * (pr.N + pr.beta[3]);
}

Rational T2(std::span<const Rational> nv, const RacahParams& pr) {
    const Rational mu1 = -(nv[0] * (nv[0] - q(1) + pr.beta[2] - pr.beta[0]));
    return -q(2) * mu1 + (pr.beta[0] - pr.beta[1]) * (pr.beta[0] - pr.beta[2] + q(2));
}

Rational D2(const std::vector<int>& tag, std::span<const Rational> nv, const RacahParams& pr) {
    const Rational n1 = nv[0], n2 = nv[1], b0 = pr.beta[0], b1 = pr.beta[1], b2 = pr.beta[2],
                   b3 = pr.beta[3], N = pr.N;
    const Rational S = n1 + n2;
    if (tag == std::vector<int>{1, 0})
        return (S - N) * (S - N - b0) * (q(2) * n1 + n2 + b3 - b0 - q(1)) *
               (q(2) * n1 + n2 + b3 - b0) / ((q(2) * S + b3 - b0 - q(1)) * (q(2) * S + b3 - b0)) *
               (-n1 - b2 + b0 + q(1)) * (n1 + b2 - b1) /
               ((q(2) * n1 + b2 - b0 - q(1)) * (q(2) * n1 + b2 - b0));
    if (tag == std::vector<int>{0, 1})
        return (S - N) * (S - N - b0) * (-n2 + b2 - b3) * (q(2) * n1 + n2 + b3 - b0 - q(1)) *
               T2(nv, pr) /
               ((q(2) * S + b3 - b0 - q(1)) * (q(2) * S + b3 - b0) * (q(2) * n1 + b2 - b0) *
                (q(2) * n1 + b2 - b0 - q(2)));
    if (tag == std::vector<int>{-1, 2})
        return (S - N) * (S - N - b0) * (-n2 + b2 - b3) /
               ((q(2) * S + b3 - b0 - q(1)) * (q(2) * S + b3 - b0)) * (-n2 + b2 - b3 - q(1)) * n1 *
               (-n1 + b0 - b1 + q(1)) / ((q(2) * n1 + b2 - b0 - q(1)) * (q(2) * n1 + b2 - b0 - q(2)));
    if (tag == std::vector<int>{1, -1})
        return T0(nv, pr) * (q(2) * n1 + n2 + b3 - b0 - q(1)) * n2 * (n1 + b2 - b0 - q(1)) *
               (n1 + b2 - b1) /
               ((q(2) * S + b3 - b0) * (q(2) * S + b3 - b0 - q(2)) * (q(2) * n1 + b2 - b0 - q(1)) *
                (q(2) * n1 + b2 - b0));
    if (tag == std::vector<int>{-1, 1})
        return T0(nv, pr) * (-n2 + b2 - b3) * (q(2) * n1 + n2 + b2 - b0 - q(1)) * n1 *
               (-n1 + b0 - b1 + q(1)) /
               ((q(2) * S + b3 - b0) * (q(2) * S + b3 - b0 - q(2)) * (q(2) * n1 + b2 - b0 - q(1)) *
                (q(2) * n1 + b2 - b0 - q(2)));
    if (tag == std::vector<int>{0, -1})
        return -((S + b3 - b0 + N - q(1)) * (S + b3 + N - q(1)) * (q(2) * n1 + n2 + b2 - b0 - q(1)) *
                 n2 * T2(nv, pr)) /
               ((q(2) * S + b3 - b0 - q(1)) * (q(2) * S + b3 - b0 - q(2)) * (q(2) * n1 + b2 - b0) *
                (q(2) * n1 + b2 - b0 - q(2)));
    if (tag == std::vector<int>{1, -2})
        return (S + b3 - b0 + N - q(1)) * (S + b3 + N - q(1)) * n2 * (n2 - q(1)) *
               (-n1 - b2 + b0 + q(1)) * (n1 + b2 - b1) /
               ((q(2) * S + b3 - b0 - q(1)) * (q(2) * S + b3 - b0 - q(2)) *
                (q(2) * n1 + b2 - b0 - q(1)) * (q(2) * n1 + b2 - b0));
    if (tag == std::vector<int>{-1, 0})
        return (S + b3 - b0 + N - q(1)) * (S + b3 + N - q(1)) * (q(2) * n1 + n2 + b2 - b0 - q(1)) /
               ((q(2) * S + b3 - b0 - q(1)) * (q(2) * S + b3 - b0 - q(2))) *
               (q(2) * n1 + n2 + b2 - b0 - q(2)) * n1 * (-n1 + b0 - b1 + q(1)) /
               ((q(2) * n1 + b2 - b0 - q(1)) * (q(2) * n1 + b2 - b0 - q(2)));
    throw Error("unknown tag");
}

Rational D1(int dir, std::span<const Rational> nv, const RacahParams& pr) {
    const Rational n1 = nv[0], n2 = nv[1], b0 = pr.beta[0], b2 = pr.beta[2], b3 = pr.beta[3],
                   N = pr.N;
    const Rational S = n1 + n2;
    if (dir > 0)
        return (S - N - b0) * (S - N) * (q(2) * n1 + n2 + b3 - b0 - q(1)) * (-n2 + b2 - b3) /
               ((q(2) * S + b3 - b0 - q(1)) * (q(2) * S + b3 - b0));
    return -((S + b3 + N - q(1)) * (S + b3 - b0 + N - q(1)) * n2 *
             (q(2) * n1 + n2 + b2 - b0 - q(1))) /
           ((q(2) * S + b3 - b0 - q(1)) * (q(2) * S + b3 - b0 - q(2)));
}

Rational jacobi_D2(const std::vector<int>& tag, const Rational& n1, const Rational& n2,
                   std::span<const Rational> g) {
    const Rational G = g[0] + g[1] + g[2];
    const Rational S2 = q(2) * n1 + q(2) * n2 + G;
    const Rational T = q(2) * n1 + g[0] + g[1];
    if (tag == std::vector<int>{1, 0})
        return -(q(2) * n1 + n2 + G + q(2)) * (q(2) * n1 + n2 + G + q(3)) /
               ((S2 + q(2)) * (S2 + q(3))) * (n1 + g[0] + g[1] + q(1)) * (n1 + g[1] + q(1)) /
               ((T + q(1)) * (T + q(2)));
    if (tag == std::vector<int>{0, 1})
        return -(n2 + g[2] + q(1)) * (q(2) * n1 + n2 + G + q(2)) / ((S2 + q(2)) * (S2 + q(3))) *
               (q(2) * n1 * (n1 + q(1) + g[0] + g[1]) + (g[0] + q(1)) * (g[0] + g[1])) /
               ((T + q(2)) * T);
    if (tag == std::vector<int>{-1, 2})
        return -(n2 + g[2] + q(1)) * (n2 + g[2] + q(2)) / ((S2 + q(2)) * (S2 + q(3))) * n1 *
               (n1 + g[0]) / ((T + q(1)) * T);
    if (tag == std::vector<int>{1, -1})
        return -q(2) * (q(2) * n1 + n2 + G + q(2)) * n2 / ((S2 + q(3)) * (S2 + q(1))) *
               (n1 + q(1) + g[0] + g[1]) * (n1 + g[1] + q(1)) / ((T + q(1)) * (T + q(2)));
    if (tag == std::vector<int>{-1, 1})
        return -q(2) * (n2 + g[2] + q(1)) * (q(2) * n1 + n2 + g[0] + g[1] + q(1)) /
               ((S2 + q(3)) * (S2 + q(1))) * n1 * (n1 + g[0]) / ((T + q(1)) * T);
    if (tag == std::vector<int>{0, -1})
        return -(q(2) * n1 + n2 + g[0] + g[1] + q(1)) * n2 / ((S2 + q(2)) * (S2 + q(1))) *
               (q(2) * n1 * (n1 + q(1) + g[0] + g[1]) + (g[0] + q(1)) * (g[0] + g[1])) /
               ((T + q(2)) * T);
    if (tag == std::vector<int>{1, -2})
        return -n2 * (n2 - q(1)) / ((S2 + q(2)) * (S2 + q(1))) * (n1 + g[0] + g[1] + q(1)) *
               (n1 + g[1] + q(1)) / ((T + q(1)) * (T + q(2)));
    if (tag == std::vector<int>{-1, 0})
        return -(q(2) * n1 + n2 + g[0] + g[1] + q(1)) * (q(2) * n1 + n2 + g[0] + g[1]) /
               ((S2 + q(2)) * (S2 + q(1))) * n1 * (n1 + g[0]) / ((T + q(1)) * T);
    throw Error("unknown tag");
}

Rational jacobi_D1(int dir, const Rational& n1, const Rational& n2, std::span<const Rational> g) {
    const Rational G = g[0] + g[1] + g[2];
    const Rational S2 = q(2) * n1 + q(2) * n2 + G;
    if (dir > 0)
        return -(q(2) * n1 + n2 + G + q(2)) * (n2 + g[2] + q(1)) / ((S2 + q(2)) * (S2 + q(3)));
    return -n2 * (q(2) * n1 + n2 + g[0] + g[1] + q(1)) / ((S2 + q(2)) * (S2 + q(1)));
}

} // namespace golden

void suite_appendix_golden(const Bounds& b, std::uint64_t seed, Recorder& rec) {
    RationalSampler s(seed);
    const int p = 2;
    const int points = std::max(4, std::min(20, b.trials / 5));

    // variable-side shift coefficients
    {
        const Expr g11 = racah_coeff_C(p, MultiIndex(std::vector<int>{1, 1}));
        const Expr g10 = racah_coeff_C(p, MultiIndex(std::vector<int>{1, 0}));
        const Expr g01 = racah_coeff_C(p, MultiIndex(std::vector<int>{0, 1}));
        const Expr c1 = build_Lx(p, 1).coeff(MultiIndex(std::vector<int>{1, 0}));
        bool ok = true;
        std::string witness;
        for (int i = 0; i < points && ok; ++i) {
            const RacahParams pr = sample_racah_params(p, s);
            std::vector<Rational> x{s.rational(), s.rational()};
            const auto pv = pr.symbol_values();
            Evaluator<Rational> ev(x, pv);
            if (ev(g11) != golden::C11(x, pr) || ev(g10) != golden::C10(x, pr) ||
                ev(g01) != golden::C01(x, pr) || ev(c1) != golden::C1_first(x, pr)) {
                ok = false;
                witness = "shift coefficient mismatch at x=" + vec_str(x);
            }
        }
        rec.record("appendix/shift-coefficients",
                   "generated variable-side coefficients match the closed two-variable formulas",
                   std::to_string(points) + " points", ok, witness);
    }

    // index-side coefficients
    {
        const DiffOperator ln2 = build_Ln(p, 2);
        const DiffOperator ln1 = build_Ln(p, 1);
        bool ok = true;
        std::string witness;
        for (int i = 0; i < points && ok; ++i) {
            const RacahParams pr = sample_racah_params(p, s);
            std::vector<Rational> nv{s.rational(), s.rational()};
            const auto pv = pr.symbol_values();
            Evaluator<Rational> ev(nv, pv);
            Rational offsum(0);
            for (const auto& [nu, c] : ln2.terms()) {
                if (nu.is_zero()) continue;
                const Rational ref = golden::D2(nu.values(), nv, pr);
                if (ev(c) != ref) {
                    ok = false;
                    witness = "index coefficient mismatch at shift " + nu.str();
                    break;
                }
                offsum += ref;
            }
            if (ok && ev(ln2.coeff(MultiIndex::zeros(p))) != -offsum) {
                ok = false;
                witness = "identity-slot mismatch";
            }
            if (ok && (ev(ln1.coeff(MultiIndex(std::vector<int>{0, 1}))) != golden::D1(1, nv, pr) ||
                       ev(ln1.coeff(MultiIndex(std::vector<int>{0, -1}))) != golden::D1(-1, nv, pr))) {
                ok = false;
                witness = "first-generator coefficient mismatch";
            }
        }
        rec.record("appendix/index-coefficients",
                   "generated index-side coefficients match the closed two-variable formulas",
                   std::to_string(points) + " points", ok, witness);
    }

    // simplex-family operators
    {
        std::vector<Rational> g{q(1, 3), q(2, 5), q(3, 7)};
        const auto canon = [p](const JacobiDiffOp& op) {
            std::map<std::vector<unsigned>, MultiPoly> m;
            for (const auto& [c, o] : op.terms) {
                auto it = m.find(o);
                if (it == m.end()) m.emplace(o, c);
                else it->second = it->second + c;
            }
            for (auto it = m.begin(); it != m.end();)
                it = it->second.is_zero() ? m.erase(it) : std::next(it);
            return m;
        };
        const MultiPoly z1 = MultiPoly::variable(p, 0), z2 = MultiPoly::variable(p, 1);
        const MultiPoly one = MultiPoly::constant(p, q(1));
        const Rational G = g[0] + g[1] + g[2];
        JacobiDiffOp ref2{p, {}};
        ref2.terms.emplace_back((z1 * z2).scaled(q(-2)), std::vector<unsigned>{1, 1});
        ref2.terms.emplace_back(z1 * (one - z1), std::vector<unsigned>{2, 0});
        ref2.terms.emplace_back(z2 * (one - z2), std::vector<unsigned>{0, 2});
        ref2.terms.emplace_back(one.scaled(g[0] + q(1)) - z1.scaled(G + q(3)),
                                std::vector<unsigned>{1, 0});
        ref2.terms.emplace_back(one.scaled(g[1] + q(1)) - z2.scaled(G + q(3)),
                                std::vector<unsigned>{0, 1});
        JacobiDiffOp ref1{p, {}};
        ref1.terms.emplace_back((z1 * z2).scaled(q(-2)), std::vector<unsigned>{1, 1});
        ref1.terms.emplace_back(z1 * z2, std::vector<unsigned>{2, 0});
        ref1.terms.emplace_back(z1 * z2, std::vector<unsigned>{0, 2});
        ref1.terms.emplace_back(z2.scaled(g[0] + q(1)) - z1.scaled(g[1] + q(1)),
                                std::vector<unsigned>{1, 0});
        ref1.terms.emplace_back(z1.scaled(g[1] + q(1)) - z2.scaled(g[0] + q(1)),
                                std::vector<unsigned>{0, 1});
        const bool ok = canon(build_jacobi_Lz(p, 2, g)) == canon(ref2) &&
                        canon(build_jacobi_Lz(p, 1, g)) == canon(ref1);
        rec.record("appendix/simplex-differential",
                   "generated simplex differential operators match the closed two-variable forms",
                   "p=2", ok, "coefficient polynomial mismatch");
    }

    // simplex-family index-side coefficients via the double limit
    {
        const DiffOperator raw2 = build_hahn_Ln_raw(p, 2);
        const DiffOperator raw1 = build_hahn_Ln_raw(p, 1);
        bool ok = true;
        std::string witness;
        int done = 0, attempts = 0;
        while (done < points && attempts < 50 * points && ok) {
            ++attempts;
            std::vector<Rational> g{s.rational(), s.rational(), s.rational()};
            std::vector<Rational> nv{s.rational(), s.rational()};
            std::vector<Rational> pv = g;
            pv.emplace_back(0);
            try {
                for (const auto& [nu, c] : raw2.terms()) {
                    if (nu.is_zero()) continue;
                    if (eval_double_limit_coeff(c, nv, pv, p + 1, 1, 1) !=
                        golden::jacobi_D2(nu.values(), nv[0], nv[1], g)) {
                        ok = false;
                        witness = "double-limit coefficient mismatch at " + nu.str();
                        break;
                    }
                }
                if (ok) {
                    if (eval_double_limit_coeff(raw1.coeff(MultiIndex(std::vector<int>{0, 1})), nv,
                                                pv, p + 1, 1, 1) != golden::jacobi_D1(1, nv[0], nv[1], g) ||
                        eval_double_limit_coeff(raw1.coeff(MultiIndex(std::vector<int>{0, -1})), nv,
                                                pv, p + 1, 1, 1) != golden::jacobi_D1(-1, nv[0], nv[1], g)) {
                        ok = false;
                        witness = "first-generator double-limit mismatch";
                    }
                }
                ++done;
            } catch (const PoleAtPoint&) {
                continue;
            }
        }
        rec.record("appendix/simplex-index-coefficients",
                   "double-limit index-side coefficients match the closed two-variable formulas",
                   std::to_string(done) + " points", ok && done == points, witness);
    }
}

void suite_hahn(const Bounds& b, std::uint64_t seed, Recorder& rec) {
    (void)seed;
    const int p = 2;
    const HahnParams hp(p, {q(1), q(2), q(3)}, q(4));
    const long cap = std::min<long>(2, b.degree_cap);
    const auto pv = hp.symbol_values();

    // term count of the top variable-side generator
    {
        const DiffOperator top = build_hahn_Ly(p, p);
        std::size_t nonzero = 0;
        for (const auto& [nu, c] : top.terms())
            if (!nu.is_zero()) ++nonzero;
        rec.record("hahn/term-count", "the top variable-side generator has p(p+1) shift terms",
                   "p=2", nonzero == static_cast<std::size_t>(p * (p + 1)),
                   std::to_string(nonzero) + " terms");
    }

    bool ok = true;
    std::string witness;
    for (int j = 1; j <= p && ok; ++j) {
        const DiffOperator Ly = build_hahn_Ly(p, j);
        const DiffOperator Ln = build_hahn_Ln_raw(p, j);
        for (const auto& n : degrees_up_to(p, cap)) {
            const auto H = [&](std::span<const Rational> yy) { return hahn_H(n, yy, hp); };
            const Rational mu = hahn_mu(j, n, hp);
            for (long y1 = 0; y1 <= 4 && ok; ++y1)
                for (long y2 = 0; y1 + y2 <= 4; ++y2) {
                    std::vector<Rational> y{q(y1), q(y2)};
                    if (Ly.apply<Rational>(H, y, pv) != mu * H(y)) {
                        ok = false;
                        witness = "variable-side mismatch at y=" + vec_str(y) + " n=" + vec_str(n);
                        break;
                    }
                    if (hahn_apply_Ln(Ln, n, y, hp) != hahn_kappa(j, y, hp) * hahn_H(n, y, hp)) {
                        ok = false;
                        witness = "index-side mismatch at y=" + vec_str(y) + " n=" + vec_str(n);
                        break;
                    }
                }
        }
    }
    rec.record("hahn/spectral-pair", "both spectral equations hold on the full lattice",
               "p=2 N=4", ok, witness);

    bool lim_ok = true;
    std::string lim_witness;
    const HahnParams hp2(p, {q(1, 2), q(2, 3), q(3, 5)}, q(4));
    for (const auto& n : degrees_up_to(p, cap)) {
        for (long y1 = 0; y1 <= 2 && lim_ok; ++y1)
            for (long y2 = 0; y2 <= 2; ++y2) {
                std::vector<Rational> y{q(y1), q(y2)};
                if (hahn_limit_of_rhat(n, y, hp2) != hahn_H(n, y, hp2)) {
                    lim_ok = false;
                    lim_witness = "limit mismatch at y=" + vec_str(y) + " n=" + vec_str(n);
                    break;
                }
            }
    }
    rec.record("hahn/limit-consistency",
               "the normalized cascade polynomial tends exactly to the product form",
               "p=2", lim_ok, lim_witness);
}

void suite_jacobi(const Bounds& b, std::uint64_t seed, Recorder& rec) {
    RationalSampler s(seed);
    const int p = 2;
    std::vector<Rational> gamma{q(1, 3), q(2, 5), q(3, 7)};
    const long cap = std::min<long>(2, b.degree_cap);

    bool ok = true;
    std::string witness;
    for (int j = 1; j <= p && ok; ++j) {
        const JacobiDiffOp Lz = build_jacobi_Lz(p, j, gamma);
        const DiffOperator Ln = build_hahn_Ln_raw(p, j);
        for (const auto& n : degrees_up_to(p, cap)) {
            const MultiPoly J = jacobi_J_poly(n, gamma);
            if (!(Lz.apply(J) == J.scaled(jacobi_mu(j, n, gamma)))) {
                ok = false;
                witness = "differential side fails at n=" + vec_str(n);
                break;
            }
            std::vector<Rational> z{q(1, 5), q(2, 7)};
            if (jacobi_apply_Ln(Ln, n, z, gamma) != jacobi_kappa(j, z) * jacobi_J(n, z, gamma)) {
                ok = false;
                witness = "index side fails at n=" + vec_str(n);
                break;
            }
        }
    }
    rec.record("jacobi/spectral-pair",
               "differential and index-side spectral equations hold exactly", "p=2", ok, witness);

    // one-variable truncation limit
    using RF = UniRatFun<Rational>;
    bool lim_ok = true;
    std::string lim_witness;
    for (int trial = 0; trial < 8 && lim_ok; ++trial) {
        const long nk = s.integer(0, 3);
        const Rational a = s.rational(), bb = s.rational();
        const Rational z1 = q(1, 7), z2 = q(2, 5);
        const RF N = RF::indeterminate();
        try {
            const RF h = hahn_h<RF>(nk, N * RF(z1), RF(a), RF(bb), N * RF(z2));
            Rational zpow(1);
            for (long i = 0; i < nk; ++i) zpow = zpow * (-z2);
            const Rational ref =
                zpow * pochhammer(a + q(1), nk) *
                hyp_terminating<Rational>(nk, {a + bb + q(nk + 1)}, {a + q(1)}, z1 / z2);
            if (limit_coeff_at_infinity(h, nk) != ref) {
                lim_ok = false;
                lim_witness = "scaled one-variable limit mismatch at degree " + std::to_string(nk);
            }
        } catch (const PoleInDenominator&) {
            continue;
        }
    }
    rec.record("jacobi/limit-consistency",
               "scaled one-variable polynomials tend exactly to the Gauss-series form", "", lim_ok,
               lim_witness);
}

void suite_krawtchouk_meixner(const Bounds& b, std::uint64_t seed, Recorder& rec) {
    RationalSampler s(seed);
    const long cap = std::min<long>(2, b.degree_cap);

    // duality: involution plus value equality
    {
        bool ok = true;
        std::string witness;
        for (int p = 2; p <= b.pmax && ok; ++p) {
            for (int i = 0; i < 30; ++i) {
                KrawTriple t;
                for (int k = 0; k < p; ++k) {
                    t.x.push_back(s.rational());
                    t.n.push_back(s.rational());
                    t.fp.push_back(Rational(s.integer(1, 5), s.integer(17, 40)));
                }
                t.N = s.rational();
                const KrawTriple u = kraw_duality(kraw_duality(t));
                if (u.x != t.x || u.n != t.n || u.fp != t.fp || u.N != t.N) {
                    ok = false;
                    witness = "double application is not the identity (p=" + std::to_string(p) + ")";
                    break;
                }
            }
            int done = 0, attempts = 0;
            while (done < 2 && attempts < 100 && ok) {
                ++attempts;
                std::vector<Rational> fp;
                for (int k = 0; k < p; ++k) fp.push_back(Rational(s.integer(1, 4), s.integer(15, 40)));
                const Rational N = s.rational();
                if (N.is_integer()) continue;
                ++done;
                for (const auto& n : degrees_up_to(p, b.degree_cap)) {
                    for (const auto& xn : degrees_up_to(p, b.degree_cap)) {
                        KrawTriple t;
                        t.fp = fp;
                        t.N = N;
                        for (int k = 0; k < p; ++k) {
                            t.n.push_back(Rational(n[static_cast<std::size_t>(k)]));
                            t.x.push_back(Rational(xn[static_cast<std::size_t>(k)]));
                        }
                        const KrawTriple d = kraw_duality(t);
                        std::vector<long> nl, dl;
                        std::vector<Rational> xv, dxv;
                        for (int k = 0; k < p; ++k) {
                            nl.push_back(t.n[static_cast<std::size_t>(k)].to_long());
                            dl.push_back(d.n[static_cast<std::size_t>(k)].to_long());
                            xv.push_back(t.x[static_cast<std::size_t>(k)]);
                            dxv.push_back(d.x[static_cast<std::size_t>(k)]);
                        }
                        if (kraw_K(nl, xv, KrawParams(p, t.fp, t.N)) !=
                            kraw_K(dl, dxv, KrawParams(p, d.fp, d.N))) {
                            ok = false;
                            witness = "value duality fails at n=" + vec_str(nl);
                            break;
                        }
                    }
                    if (!ok) break;
                }
            }
        }
        rec.record("krawtchouk/duality",
                   "the index-variable swap is a self-inverse value-preserving bijection",
                   "p<=" + std::to_string(b.pmax), ok, witness);
    }

    // spectral pair at the stated configuration
    {
        const int p = 2;
        const KrawParams kp(p, {q(1, 4), q(1, 3)}, q(4));
        const auto pv = kp.symbol_values();
        bool ok = true;
        std::string witness;
        for (int j = 1; j <= p && ok; ++j) {
            const DiffOperator Lx = build_kraw_Lx(p, j);
            const DiffOperator Ln = build_kraw_Ln(p, j);
            for (const auto& n : degrees_up_to(p, cap)) {
                const auto K = [&](std::span<const Rational> xx) { return kraw_K(n, xx, kp); };
                for (long x1 = 0; x1 <= 3 && ok; ++x1)
                    for (long x2 = 0; x2 <= 3; ++x2) {
                        std::vector<Rational> x{q(x1), q(x2)};
                        if (Lx.apply<Rational>(K, x, pv) != kraw_mu(j, n) * K(x)) {
                            ok = false;
                            witness = "variable side fails at x=" + vec_str(x) + " n=" + vec_str(n);
                            break;
                        }
                        if (kraw_apply_Ln(Ln, n, x, kp) != kraw_kappa(j, x, kp) * kraw_K(n, x, kp)) {
                            ok = false;
                            witness = "index side fails at x=" + vec_str(x) + " n=" + vec_str(n);
                            break;
                        }
                    }
            }
        }
        rec.record("krawtchouk/spectral-pair", "both spectral equations hold on the lattice",
                   "p=2 N=4", ok, witness);
    }

    // substituted family inherits everything
    {
        const int p = 2;
        std::vector<Rational> c{q(1, 5), q(1, 7)};
        const Rational sp = q(3, 2);
        const KrawParams kp = meixner_params(c, sp);
        const auto pv = kp.symbol_values();
        bool ok = true;
        std::string witness;
        for (int j = 1; j <= p && ok; ++j) {
            const DiffOperator Lx = build_kraw_Lx(p, j);
            const DiffOperator Ln = build_kraw_Ln(p, j);
            for (const auto& n : degrees_up_to(p, cap)) {
                const auto M = [&](std::span<const Rational> xx) { return meixner_M(n, xx, c, sp); };
                for (long x1 = 0; x1 <= 2 && ok; ++x1)
                    for (long x2 = 0; x2 <= 2; ++x2) {
                        std::vector<Rational> x{q(x1), q(x2)};
                        if (Lx.apply<Rational>(M, x, pv) != kraw_mu(j, n) * M(x) ||
                            kraw_apply_Ln(Ln, n, x, kp) != kraw_kappa(j, x, kp) * kraw_K(n, x, kp)) {
                            ok = false;
                            witness = "substituted family fails at x=" + vec_str(x) + " n=" + vec_str(n);
                            break;
                        }
                    }
            }
        }
        rec.record("meixner/substitution",
                   "the substituted parameters inherit the spectral equations verbatim", "p=2", ok,
                   witness);
    }
}

void suite_wilson(const Bounds& b, std::uint64_t seed, Recorder& rec) {
    RationalSampler s(seed);
    // one-variable bridge
    {
        bool ok = true;
        std::string witness;
        int done = 0, attempts = 0;
        while (done < 30 && attempts < 600 && ok) {
            ++attempts;
            const Rational a = s.rational(), bb = s.rational(), c = s.rational(), d = s.rational(),
                           y = s.rational();
            const long n = s.integer(0, 3);
            WilsonParams wp{a, bb, c, d, {}};
            std::vector<long> nn{n};
            std::vector<Rational> yy{y};
            try {
                const Rational mine = wilson_W(nn, yy, wp);
                const GaussianRational ref = wilson_w(n, y, a, bb, c, d);
                if (!ref.is_real() || mine != ref.re()) {
                    ok = false;
                    witness = "bridge mismatch at degree " + std::to_string(n);
                }
                ++done;
            } catch (const PoleInDenominator&) {
                continue;
            }
        }
        rec.record("wilson/one-variable-bridge",
                   "the substituted cascade reduces to the classical polynomial",
                   std::to_string(done) + " instances", ok && done == 30, witness);
    }
    // real-valuedness in two variables
    {
        bool ok = true;
        std::string witness;
        int done = 0, attempts = 0;
        const int count = std::max(10, b.trials / 2);
        while (done < count && attempts < 20 * count && ok) {
            ++attempts;
            WilsonParams wp{s.rational(), s.rational(), s.rational(), s.rational(), {s.rational()}};
            std::vector<Rational> y{s.rational(), s.rational()};
            std::vector<long> n{s.integer(0, 2), s.integer(0, 2)};
            try {
                (void)wilson_W(n, y, wp);
                ++done;
            } catch (const PoleInDenominator&) {
                continue;
            } catch (const NonRealResult& e) {
                ok = false;
                witness = e.what();
            }
        }
        rec.record("wilson/real-valuedness", "evaluations carry exactly zero imaginary part",
                   std::to_string(done) + " instances", ok && done == count, witness);
    }
}

using SuiteFn = void (*)(const Bounds&, std::uint64_t, Recorder&);

struct SuiteEntry {
    const char* name;
    SuiteFn fn;
};

void suite_commutativity_x(const Bounds& b, std::uint64_t seed, Recorder& rec) {
    suite_commutativity(b, seed, rec, false);
}
void suite_commutativity_n(const Bounds& b, std::uint64_t seed, Recorder& rec) {
    suite_commutativity(b, seed, rec, true);
}

const std::vector<SuiteEntry>& registry() {
    static const std::vector<SuiteEntry> entries{
        {"form-equivalence", suite_form_equivalence},
        {"triangularity", suite_triangularity},
        {"self-adjointness", suite_self_adjointness},
        {"orthogonality", suite_orthogonality},
        {"spectral-x", suite_spectral_x},
        {"spectral-n", suite_spectral_n},
        {"commutativity-x", suite_commutativity_x},
        {"commutativity-n", suite_commutativity_n},
        {"duality-racah", suite_duality},
        {"whipple", suite_whipple},
        {"determinant", suite_determinant},
        {"appendix-golden", suite_appendix_golden},
        {"hahn", suite_hahn},
        {"jacobi", suite_jacobi},
        {"krawtchouk-meixner", suite_krawtchouk_meixner},
        {"wilson", suite_wilson},
    };
    return entries;
}

} // namespace

std::size_t SuiteReport::failed() const {
    std::size_t n = 0;
    for (const auto& c : checks)
        if (!c.pass) ++n;
    return n;
}

std::string SuiteReport::to_json() const {
    nlohmann::json j;
    j["schema"] = 1;
    j["suite"] = suite;
    j["tier"] = tier;
    j["seed"] = seed;
    j["config"] = {{"p", p}, {"trials", trials}};
    nlohmann::json checks_json = nlohmann::json::array();
    for (const auto& c : checks) {
        nlohmann::json cj;
        cj["id"] = c.id;
        cj["anchor"] = c.anchor;
        cj["inputs"] = c.inputs;
        cj["pass"] = c.pass;
        if (!c.pass) cj["witness"] = c.witness;
        checks_json.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks_json);
    j["counts"] = {{"total", checks.size()}, {"failed", failed()}};
    if (!error.empty()) j["error"] = error;
    return j.dump(2);
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& e : registry()) out.emplace_back(e.name);
        return out;
    }();
    return names;
}

SuiteReport run_suite(const SuiteConfig& config) {
    const SuiteEntry* entry = nullptr;
    for (const auto& e : registry())
        if (config.suite == e.name) entry = &e;
    if (!entry) throw UnknownSuite("unknown suite '" + config.suite + "'");
    const Bounds bounds = tier_bounds(config.tier, config.trials);

    SuiteReport rep;
    rep.suite = config.suite;
    rep.tier = config.tier;
    rep.seed = config.seed;
    rep.p = config.p;
    rep.trials = bounds.trials;
    Recorder rec(rep);

    const std::uint64_t suite_seed = config.seed ^ fnv1a(config.suite);
    const auto start = std::chrono::steady_clock::now();
    try {
        entry->fn(bounds, suite_seed, rec);
    } catch (const std::exception& e) {
        rep.error = e.what();
    }
    rep.wall_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                        std::chrono::steady_clock::now() - start)
                                        .count());
    return rep;
}

std::vector<SuiteReport> run_all(std::uint64_t seed, const std::string& tier, int workers) {
    (void)tier_bounds(tier, 0); // validate early
    const auto& names = suite_names();
    std::vector<SuiteReport> reports(names.size());

    if (workers <= 0) {
        if (const char* env = std::getenv("RACAH_VERIFY_WORKERS")) workers = std::atoi(env);
        if (workers <= 0) workers = static_cast<int>(std::thread::hardware_concurrency());
        if (workers <= 0) workers = 1;
    }
    workers = std::min<int>(workers, static_cast<int>(names.size()));

    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= names.size()) return;
            SuiteConfig cfg;
            cfg.suite = names[i];
            cfg.seed = seed;
            cfg.tier = tier;
            try {
                reports[i] = run_suite(cfg);
            } catch (const std::exception& e) {
                reports[i].suite = names[i];
                reports[i].tier = tier;
                reports[i].seed = seed;
                reports[i].error = e.what();
            }
        }
    };
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    return reports;
}

std::string batch_index_json(const std::vector<SuiteReport>& reports, std::uint64_t seed,
                             const std::string& tier) {
    nlohmann::json j;
    j["schema"] = 1;
    j["seed"] = seed;
    j["tier"] = tier;
    bool all = true;
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        all = all && r.passed();
        arr.push_back({{"suite", r.suite},
                       {"passed", r.passed()},
                       {"checks", r.checks.size()},
                       {"failed", r.failed()}});
    }
    j["suites"] = std::move(arr);
    j["all_passed"] = all;
    return j.dump(2);
}

} // namespace racah
