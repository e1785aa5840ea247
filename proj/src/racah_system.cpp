#include "racah/racah_system.hpp"

#include <algorithm>

#include "racah/perturb.hpp"

namespace racah {

RacahParams::RacahParams(int p_, std::vector<Rational> beta_, Rational N_)
    : p(p_), beta(std::move(beta_)), N(std::move(N_)) {
    if (p < 1) throw Error("RacahParams: p must be >= 1");
    if (beta.size() != static_cast<std::size_t>(p) + 2)
        throw Error("RacahParams: beta must have p + 2 entries");
}

std::vector<Rational> RacahParams::symbol_values() const {
    std::vector<Rational> out = beta;
    out.push_back(N);
    return out;
}

namespace {

/// Symbol context of one operator instance: active variables x_1..x_j plus
/// the boundary symbol standing for x_{j+1} (the parameter N for the full
/// operator, the next variable for the partial ones).
struct OpContext {
    int j;
    std::vector<Expr> x;    // x_0 .. x_{j+1}
    std::vector<Expr> beta; // beta_0 .. beta_{j+1}

    static OpContext make(int j, Expr boundary) {
        OpContext c;
        c.j = j;
        c.x.reserve(static_cast<std::size_t>(j) + 2);
        c.x.push_back(Expr(0));
        for (int i = 0; i < j; ++i) c.x.push_back(Expr::var(i));
        c.x.push_back(std::move(boundary));
        for (int i = 0; i <= j + 1; ++i) c.beta.push_back(RacahSymbols::beta(i));
        return c;
    }

    Expr lambda(int i) const { return x[static_cast<std::size_t>(i)] * (x[static_cast<std::size_t>(i)] + beta[static_cast<std::size_t>(i)]); }

    Expr involute(int i, const Expr& e) const { // 1 <= i <= j
        return involute_expr(e, i, beta[static_cast<std::size_t>(i)]);
    }
};

Expr half(const Expr& e) { return e * Expr::constant(Rational(1, 2)); }

/// B factor blocks of the shift form.
Expr B_factor(const OpContext& c, int i, int ji, int ki) {
    const Expr& xi = c.x[static_cast<std::size_t>(i)];
    const Expr& xi1 = c.x[static_cast<std::size_t>(i) + 1];
    const Expr& bi = c.beta[static_cast<std::size_t>(i)];
    const Expr& bi1 = c.beta[static_cast<std::size_t>(i) + 1];
    if (ji == 0 && ki == 0)
        return c.lambda(i) + c.lambda(i + 1) +
               perturb::bump(half((bi + Expr(1)) * (bi1 - Expr(1))), "B00-const");
    if (ji == 0 && ki == 1)
        return (xi1 + xi + bi1) * perturb::bump(xi1 - xi + bi1 - bi, "B01-factor");
    if (ji == 1 && ki == 0) return (xi1 - xi) * (xi1 + xi + bi1);
    if (ji == 1 && ki == 1) return (xi1 + xi + bi1) * (xi1 + xi + bi1 + Expr(1));
    if (ji == -1) return c.involute(i, B_factor(c, i, 1, ki));
    // ki == -1, ji in {0, 1}
    return c.involute(i + 1, B_factor(c, i, ji, 1));
}

Expr b_factor(const OpContext& c, int i, int ji) {
    const Expr& xi = c.x[static_cast<std::size_t>(i)];
    const Expr& bi = c.beta[static_cast<std::size_t>(i)];
    const Expr two_x = Expr(2) * xi + bi;
    if (ji == 0) return (two_x + Expr(1)) * (two_x - Expr(1));
    if (ji == 1) return (two_x + Expr(1)) * perturb::bump(two_x, "b1-factor");
    return c.involute(i, b_factor(c, i, 1));
}

Expr A_coeff(const OpContext& c, const MultiIndex& nu) {
    const MultiIndex neg = nu.negative_part();
    const MultiIndex abs = nu.positive_part() + neg;
    std::vector<int> idx; // 1-based positions of the nonzero entries
    for (int i = 0; i < abs.size(); ++i)
        if (abs[i] == 1) idx.push_back(i + 1);
    if (idx.empty()) throw Error("A coefficient requires nu != 0");

    const auto X = [&](int i) { return c.x[static_cast<std::size_t>(i)]; };
    const auto Be = [&](int i) { return c.beta[static_cast<std::size_t>(i)]; };

    Expr num = perturb::bump(X(idx[0]) + Be(idx[0]) - Be(0), "A-shift-factor") * (X(idx[0]) + Be(idx[0]));
    for (std::size_t k = 1; k < idx.size(); ++k) {
        const Expr s = X(idx[k]) + X(idx[k - 1]) + Be(idx[k]);
        num = num * s * (s + Expr(1));
    }
    const int last = idx.back();
    num = num * (X(last) + Be(c.j + 1) + c.x[static_cast<std::size_t>(c.j) + 1]) *
          (c.x[static_cast<std::size_t>(c.j) + 1] - X(last));
    Expr den(1);
    for (const int i : idx) {
        const Expr two_x = Expr(2) * X(i) + Be(i);
        den = den * two_x * (two_x + Expr(1));
    }
    Expr a = num / den;
    for (int i = 0; i < nu.size(); ++i)
        if (nu[i] < 0) a = c.involute(i + 1, a);
    return a;
}

Expr C_coeff(const OpContext& c, const MultiIndex& nu, bool raising_reduced) {
    const int j = c.j;
    std::vector<int> ext(static_cast<std::size_t>(j) + 2, 0); // nu_0 .. nu_{j+1}
    for (int i = 0; i < j; ++i) ext[static_cast<std::size_t>(i) + 1] = nu[i];
    Expr val = Expr::constant(pow(Rational(2), j - nu.abs_weight()));
    for (int k = 0; k <= j; ++k) {
        if (raising_reduced && k == 0) {
            // replaces B_0^{0,1} = (x_1 + beta_1)(x_1 + beta_1 - beta_0)
            if (ext[1] != 1) throw Error("raising-reduced C requires nu_1 = +1");
            val = val * (c.x[1] + c.beta[1] - c.beta[0]);
            continue;
        }
        val = val * B_factor(c, k, ext[static_cast<std::size_t>(k)], ext[static_cast<std::size_t>(k) + 1]);
    }
    for (int k = 1; k <= j; ++k) val = val / b_factor(c, k, ext[static_cast<std::size_t>(k)]);
    return val;
}

void enumerate_signed(int j, const std::function<void(const MultiIndex&)>& visit) {
    MultiIndex nu = MultiIndex::zeros(j);
    const long total = 1;
    long count = total;
    for (int i = 0; i < j; ++i) count *= 3;
    for (long code = 0; code < count; ++code) {
        long rest = code;
        for (int i = 0; i < j; ++i) {
            nu[i] = static_cast<int>(rest % 3) - 1;
            rest /= 3;
        }
        visit(nu);
    }
}

DiffOperator build_triangle(const OpContext& c) {
    const int j = c.j;
    DiffOperator op(j);
    enumerate_signed(j, [&](const MultiIndex& nu) {
        if (nu.is_zero()) return;
        const long neg = nu.negative_part().weight();
        Expr a = A_coeff(c, nu);
        if (neg % 2 == 1) a = -a;
        // expand Delta^{nu+} Nabla^{nu-} over the shift basis
        std::vector<int> active;
        for (int i = 0; i < j; ++i)
            if (nu[i] != 0) active.push_back(i);
        const std::size_t m = active.size();
        for (std::size_t mask = 0; mask < (1ULL << m); ++mask) {
            MultiIndex sh = MultiIndex::zeros(j);
            int sign = 1;
            for (std::size_t b = 0; b < m; ++b) {
                const int i = active[b];
                const bool take_shift = (mask >> b) & 1U;
                if (nu[i] > 0) { // E - 1
                    if (take_shift) sh[i] = 1;
                    else sign = -sign;
                } else { // 1 - E^{-1}
                    if (take_shift) {
                        sh[i] = -1;
                        sign = -sign;
                    }
                }
            }
            op.add_term(sh, sign > 0 ? a : -a);
        }
    });
    return op;
}

DiffOperator build_shift(const OpContext& c) {
    const int j = c.j;
    DiffOperator op(j);
    enumerate_signed(j, [&](const MultiIndex& nu) { op.add_term(nu, C_coeff(c, nu, false)); });
    const Expr lam_top = c.x[static_cast<std::size_t>(j) + 1] *
                         (c.x[static_cast<std::size_t>(j) + 1] + c.beta[static_cast<std::size_t>(j) + 1]);
    const Expr constant = lam_top + half((c.beta[0] + Expr(1)) * (c.beta[static_cast<std::size_t>(j) + 1] - Expr(1)));
    op.add_term(MultiIndex::zeros(j), -constant);
    return op;
}

OpContext full_context(int p) { return OpContext::make(p, RacahSymbols::cap_n(p)); }

OpContext partial_context(int p, int j) {
    return OpContext::make(j, j < p ? Expr::var(j) : RacahSymbols::cap_n(p));
}

} // namespace

Expr racah_coeff_A(int p, const MultiIndex& nu) {
    if (nu.size() != p) throw Error("racah_coeff_A: arity mismatch");
    if (nu.is_zero()) throw Error("racah_coeff_A: nu must be nonzero");
    return A_coeff(full_context(p), nu);
}

Expr racah_coeff_C(int p, const MultiIndex& nu) {
    if (nu.size() != p) throw Error("racah_coeff_C: arity mismatch");
    return C_coeff(full_context(p), nu, false);
}

Expr racah_coeff_C_raising_reduced(int p, const MultiIndex& nu) {
    if (nu.size() != p) throw Error("racah_coeff_C_raising_reduced: arity mismatch");
    return C_coeff(full_context(p), nu, true);
}

Expr racah_lx_raising_reduced(int p, int j, const MultiIndex& nu_sub) {
    if (j < 1 || j > p) throw Error("racah_lx_raising_reduced: j out of range");
    if (nu_sub.size() != j) throw Error("racah_lx_raising_reduced: sub-shift arity mismatch");
    return C_coeff(partial_context(p, j), nu_sub, true);
}

DiffOperator build_Lp(int p, OperatorForm form) {
    const OpContext c = full_context(p);
    return form == OperatorForm::Triangle ? build_triangle(c) : build_shift(c);
}

DiffOperator build_Lx(int p, int j) {
    if (j < 1 || j > p) throw Error("build_Lx: j out of range");
    return build_shift(partial_context(p, j)).embedded(p);
}

Rational mu_eigenvalue(int j, std::span<const long> n, const RacahParams& params) {
    long s = 0;
    for (int i = 0; i < j; ++i) s += n[static_cast<std::size_t>(i)];
    const Rational S(s);
    return -(S * (S - Rational(1) + params.beta[static_cast<std::size_t>(j) + 1] - params.beta[0]));
}

Rational racah_R(std::span<const long> n, std::span<const Rational> x, const RacahParams& params) {
    return racah_R<Rational>(n, x, std::span<const Rational>(params.beta), params.N);
}

Rational racah_Rhat(std::span<const long> n, std::span<const Rational> x, const RacahParams& params) {
    return racah_Rhat<Rational>(n, x, std::span<const Rational>(params.beta), params.N);
}

Rational rhat_edge_limit(std::span<const long> k, std::span<const Rational> x,
                         const RacahParams& params) {
    if (!params.integer_N()) throw Error("rhat_edge_limit: needs integer N");
    const long N = params.N.to_long();
    long tot = 0;
    for (long v : k) tot += v;
    if (tot != N + 1) throw Error("rhat_edge_limit: |k| must equal N + 1");
    Rational den = pochhammer(-params.N, N) * pochhammer(-params.N - params.beta[0], tot);
    for (std::size_t i = 1; i <= k.size(); ++i)
        den = den * pochhammer(params.beta[i + 1] - params.beta[i], k[i - 1]);
    if (den.is_zero()) throw ZeroNormalization("rhat_edge_limit: truncated normalization vanishes");
    return racah_R(k, x, params) / den;
}

std::vector<std::vector<Rational>> enumerate_VN(int p, long N) {
    if (N < 0) throw Error("enumerate_VN: N must be a nonnegative integer");
    std::vector<std::vector<Rational>> out;
    std::vector<long> cur(static_cast<std::size_t>(p), 0);
    const std::function<void(int, long)> rec = [&](int i, long lo) {
        if (i == p) {
            std::vector<Rational> pt;
            pt.reserve(static_cast<std::size_t>(p));
            for (long v : cur) pt.emplace_back(v);
            out.push_back(std::move(pt));
            return;
        }
        for (long v = lo; v <= N; ++v) {
            cur[static_cast<std::size_t>(i)] = v;
            rec(i + 1, v);
        }
    };
    rec(0, 0);
    return out;
}

bool in_VN(std::span<const Rational> x, long N) {
    Rational prev(0);
    for (const Rational& v : x) {
        if (!v.is_integer() || v < prev) return false;
        prev = v;
    }
    return prev <= Rational(N);
}

Rational weight_rho(std::span<const Rational> x, const RacahParams& params) {
    if (!params.integer_N()) throw Error("weight_rho: needs integer N");
    const long N = params.N.to_long();
    if (!in_VN(x, N)) throw InvalidPoint("weight_rho: point outside V_N");
    const auto& beta = params.beta;
    const auto X = [&](int i) -> Rational {
        if (i == 0) return Rational(0);
        if (i == params.p + 1) return params.N;
        return x[static_cast<std::size_t>(i - 1)];
    };
    Rational val(1);
    for (int k = 0; k <= params.p; ++k) {
        const long diff = (X(k + 1) - X(k)).to_long();
        const long tot = (X(k + 1) + X(k)).to_long();
        const Rational num = pochhammer(beta[static_cast<std::size_t>(k) + 1] - beta[static_cast<std::size_t>(k)], diff) *
                             pochhammer(beta[static_cast<std::size_t>(k) + 1], tot);
        const Rational den = factorial(diff) * pochhammer(beta[static_cast<std::size_t>(k)] + Rational(1), tot);
        if (den.is_zero()) throw PoleAtPoint("weight_rho: factor pole");
        val = val * num / den;
    }
    for (int k = 1; k <= params.p; ++k)
        val = val * (beta[static_cast<std::size_t>(k)] + Rational(2) * X(k));
    return val;
}

Rational inner_product(const std::function<Rational(std::span<const Rational>)>& f,
                       const std::function<Rational(std::span<const Rational>)>& g,
                       const RacahParams& params) {
    if (!params.integer_N()) throw Error("inner_product: needs integer N");
    Rational acc(0);
    for (const auto& pt : enumerate_VN(params.p, params.N.to_long())) {
        const std::span<const Rational> sp(pt);
        acc += f(sp) * g(sp) * weight_rho(sp, params);
    }
    return acc;
}

namespace {

std::vector<std::vector<unsigned>> index_set_SM(int p, int M) {
    // graded lexicographic over |nu| <= M
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur(static_cast<std::size_t>(p), 0);
    for (int d = 0; d <= M; ++d) {
        const std::function<void(int, int)> rec_exact = [&](int i, int left) {
            if (i == p - 1) {
                cur[static_cast<std::size_t>(i)] = static_cast<unsigned>(left);
                out.push_back(cur);
                return;
            }
            for (int v = 0; v <= left; ++v) {
                cur[static_cast<std::size_t>(i)] = static_cast<unsigned>(v);
                rec_exact(i + 1, left - v);
            }
        };
        rec_exact(0, d);
    }
    return out;
}

mpz_class binom_ui(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Rational pow_prediction(int p, int M) {
    mpz_class c;
    mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(M + p), static_cast<unsigned long>(p + 1));
    const mpz_class e = c * p;
    if (!e.fits_ulong_p()) throw Error("det prediction exponent too large");
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2UL, e.get_ui());
    return Rational(r);
}

} // namespace

DetIdentity det_binomial_identity(int p, int M) {
    if (p < 1 || M < 0) throw Error("det_binomial_identity: bad arguments");
    const auto S = index_set_SM(p, M);
    const std::size_t n = S.size();
    std::vector<std::vector<mpz_class>> a(n, std::vector<mpz_class>(n));
    for (std::size_t r = 0; r < n; ++r)     // row = nu
        for (std::size_t c = 0; c < n; ++c) { // col = m
            mpz_class v(1);
            for (int i = 0; i < p; ++i)
                v *= binom_ui(2UL * S[c][static_cast<std::size_t>(i)], S[r][static_cast<std::size_t>(i)]);
            a[r][c] = v;
        }

    // fraction-free Bareiss elimination
    mpz_class prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && a[swap_row][k] == 0) ++swap_row;
            if (swap_row == n) return {Rational(0), pow_prediction(p, M), false};
            std::swap(a[k], a[swap_row]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                mpz_class t = a[k][k] * a[i][j] - a[i][k] * a[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    Rational det(a[n - 1][n - 1]);
    if (sign < 0) det = -det;
    const Rational predicted = pow_prediction(p, M);
    return {det, predicted, det == predicted};
}

Rational apply_racah_operator(const DiffOperator& op,
                              const std::function<Rational(std::span<const Rational>)>& f,
                              std::span<const Rational> x, const RacahParams& params) {
    const auto paramv = params.symbol_values();
    return op.apply<Rational>(f, x, std::span<const Rational>(paramv));
}

} // namespace racah
