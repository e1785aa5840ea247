#include "racah/askey.hpp"

namespace racah {

// ---------------------------------------------------------------- Hahn ----

HahnParams::HahnParams(int p_, std::vector<Rational> gamma_, Rational N_)
    : p(p_), gamma(std::move(gamma_)), N(std::move(N_)) {
    if (p < 1) throw Error("HahnParams: p must be >= 1");
    if (gamma.size() != static_cast<std::size_t>(p) + 1)
        throw Error("HahnParams: gamma must have p + 1 entries");
}

std::vector<Rational> HahnParams::symbol_values() const {
    std::vector<Rational> out = gamma;
    out.push_back(N);
    return out;
}

Rational HahnParams::gamma_prefix(int upto) const {
    Rational s(0);
    for (int i = 0; i < upto; ++i) s += gamma[static_cast<std::size_t>(i)];
    return s;
}

Rational hahn_H(std::span<const long> n, std::span<const Rational> y, const HahnParams& params) {
    const int p = params.p;
    if (n.size() != static_cast<std::size_t>(p) || y.size() != static_cast<std::size_t>(p))
        throw Error("hahn_H: arity mismatch");
    long tot = 0;
    for (long v : n) tot += v;
    Rational den = pochhammer(-params.N, tot);
    for (int k = 1; k <= p; ++k)
        den = den * pochhammer(params.gamma[static_cast<std::size_t>(k)] + Rational(1),
                               n[static_cast<std::size_t>(k - 1)]);
    if (den.is_zero()) throw ZeroNormalization("hahn_H: normalization vanishes");
    Rational val = (tot % 2 == 0) ? Rational(1) : Rational(-1);
    val = val / den;

    Rational Ysum(0);
    std::vector<Rational> Y{Rational(0)}; // Y[k] = y_1 + .. + y_k
    for (const Rational& v : y) {
        Ysum += v;
        Y.push_back(Ysum);
    }
    long Nk = 0;
    for (int k = 1; k <= p; ++k) {
        const Rational a = Rational(2 * Nk) + params.gamma_prefix(k) + Rational(k - 1);
        const Rational& b = params.gamma[static_cast<std::size_t>(k)];
        const Rational xk = Y[static_cast<std::size_t>(k)] - Rational(Nk);
        const Rational Mk = (k < p ? Y[static_cast<std::size_t>(k + 1)] : params.N) - Rational(Nk);
        val = val * hahn_h<Rational>(n[static_cast<std::size_t>(k - 1)], xk, a, b, Mk);
        Nk += n[static_cast<std::size_t>(k - 1)];
    }
    return val;
}

namespace {

// Hahn symbol helpers: gamma_k -> param(k-1), N -> param(p+1)
Expr hahn_gamma(int k) { return Expr::param(k - 1); }
Expr hahn_N(int p) { return Expr::param(p + 1); }

Expr hahn_y(int p, int i) { // y_i as an Expr, including the derived last label
    if (i <= p) return Expr::var(i - 1);
    Expr s = hahn_N(p);
    for (int k = 0; k < p; ++k) s = s - Expr::var(k);
    return s;
}

} // namespace

DiffOperator build_hahn_Ly(int p, int j) {
    if (j < 1 || j > p) throw Error("build_hahn_Ly: j out of range");
    DiffOperator op(p);
    for (int l = 1; l <= j + 1; ++l)
        for (int m = 1; m <= j + 1; ++m) {
            if (l == m) continue;
            const Expr c = (hahn_y(p, l) + hahn_gamma(l) + Expr(1)) * hahn_y(p, m);
            MultiIndex sh = MultiIndex::zeros(p);
            if (l <= p) sh[l - 1] += 1;
            if (m <= p) sh[m - 1] -= 1;
            op.add_term(sh, c);
            op.add_term(MultiIndex::zeros(p), -c);
        }
    return op;
}

DiffOperator build_hahn_Ln_raw(int p, int j) {
    const DiffOperator racah = build_Ln(p, j);
    // beta_0 -> t, beta_k -> t + g_1^k + k, N(id p+2) -> param(p+1)
    Substitution s;
    s.map_param(0, Expr::limit_var());
    for (int k = 1; k <= p + 1; ++k) {
        Expr g(0);
        for (int i = 1; i <= k; ++i) g = g + hahn_gamma(i);
        s.map_param(k, Expr::limit_var() + g + Expr(k));
    }
    s.map_param(p + 2, hahn_N(p));
    return racah.map_coeffs(s);
}

Rational hahn_mu(int j, std::span<const long> n, const HahnParams& params) {
    long s = 0;
    for (int i = 0; i < j; ++i) s += n[static_cast<std::size_t>(i)];
    return -(Rational(s) * (Rational(s + j) + params.gamma_prefix(j + 1)));
}

Rational hahn_kappa(int j, std::span<const Rational> y, const HahnParams& params) {
    Rational s(0);
    for (int i = 0; i < params.p + 1 - j; ++i) s += y[static_cast<std::size_t>(i)];
    return params.N - s;
}

Rational eval_limit_coeff(const Expr& e, std::span<const Rational> vars,
                          std::span<const Rational> params, long order) {
    using K = UniRatFun<Rational>;
    std::vector<K> v, pv;
    v.reserve(vars.size());
    pv.reserve(params.size());
    for (const Rational& r : vars) v.emplace_back(r);
    for (const Rational& r : params) pv.emplace_back(r);
    Evaluator<K> ev(v, pv, K::indeterminate());
    return limit_coeff_at_infinity(ev(e), order);
}

Rational hahn_apply_Ln(const DiffOperator& raw, std::span<const long> n,
                       std::span<const Rational> y, const HahnParams& params) {
    const bool intN = params.N.is_integer() && params.N.sign() >= 0;
    const long N = intN ? params.N.to_long() : -1;
    std::vector<Rational> nvals;
    for (long v : n) nvals.emplace_back(v);
    const auto pv = params.symbol_values();
    std::vector<long> target(n.size());
    Rational acc(0);
    for (const auto& [sh, c] : raw.terms()) {
        const Rational cv = eval_limit_coeff(c, nvals, pv, 1);
        if (cv.is_zero()) continue;
        long tot = 0;
        bool neg = false;
        for (std::size_t i = 0; i < n.size(); ++i) {
            target[i] = n[i] + sh[static_cast<int>(i)];
            neg = neg || target[i] < 0;
            tot += target[i];
        }
        if (neg || (intN && tot > N))
            throw BoundaryLeak("hahn index-side operator: nonzero coefficient leaves the domain");
        acc += cv * hahn_H(target, y, params);
    }
    return acc;
}

Rational hahn_limit_of_rhat(std::span<const long> n, std::span<const Rational> y,
                            const HahnParams& params) {
    using K = UniRatFun<Rational>;
    const int p = params.p;
    const K t = K::indeterminate();
    std::vector<K> beta;
    beta.push_back(t);
    for (int k = 1; k <= p + 1; ++k) beta.push_back(t + K(params.gamma_prefix(k) + Rational(k)));
    std::vector<K> x;
    Rational Ysum(0);
    for (const Rational& v : y) {
        Ysum += v;
        x.emplace_back(Ysum); // x_k = Y_1^k
    }
    const K val = racah_Rhat<K>(n, x, beta, K(params.N));
    return limit_coeff_at_infinity(val, 0);
}

// -------------------------------------------------------------- Jacobi ----

MultiPoly JacobiDiffOp::apply(const MultiPoly& f) const {
    MultiPoly out(nvars);
    for (const auto& [coeff, order] : terms) {
        MultiPoly g = f;
        for (int i = 0; i < nvars; ++i)
            for (unsigned k = 0; k < order[static_cast<std::size_t>(i)]; ++k) g = g.derivative(i);
        out = out + coeff * g;
    }
    return out;
}

Rational jacobi_J(std::span<const long> n, std::span<const Rational> z,
                  std::span<const Rational> gamma) {
    std::vector<Rational> zpt(z.begin(), z.end());
    return jacobi_J_poly(n, gamma).eval<Rational>(zpt);
}

MultiPoly jacobi_J_poly(std::span<const long> n, std::span<const Rational> gamma) {
    const int p = static_cast<int>(n.size());
    if (gamma.size() != static_cast<std::size_t>(p) + 1) throw Error("jacobi_J_poly: gamma arity");
    long tot = 0;
    for (long v : n) tot += v;
    MultiPoly val = MultiPoly::constant(p, (tot % 2 == 0) ? Rational(1) : Rational(-1));
    std::vector<MultiPoly> Z{MultiPoly::constant(p, Rational(0))};
    for (int i = 0; i < p; ++i) Z.push_back(Z.back() + MultiPoly::variable(p, i));
    const auto Zfull = [&](int k) {
        return k <= p ? Z[static_cast<std::size_t>(k)] : MultiPoly::constant(p, Rational(1));
    };
    long Nk = 0;
    Rational gpref(0);
    for (int k = 1; k <= p; ++k) {
        const long nk = n[static_cast<std::size_t>(k - 1)];
        gpref += gamma[static_cast<std::size_t>(k - 1)];
        const Rational a = Rational(2 * Nk) + gpref + Rational(k - 1);
        const Rational b = gamma[static_cast<std::size_t>(k)];
        // (Z_1^{k+1})^{nk} P_{nk}(1 - 2 Z_1^k / Z_1^{k+1}) expanded without division:
        // (a+1)_{nk}/nk! sum_i r_i (Z_1^k)^i (Z_1^{k+1})^{nk-i}
        MultiPoly acc = MultiPoly::constant(p, Rational(0));
        Rational term(1);
        for (long i = 0;; ++i) {
            MultiPoly m = MultiPoly::constant(p, term);
            for (long s2 = 0; s2 < i; ++s2) m = m * Z[static_cast<std::size_t>(k)];
            for (long s2 = 0; s2 < nk - i; ++s2) m = m * Zfull(k + 1);
            acc = acc + m;
            if (i == nk) break;
            const Rational num = Rational(-nk + i) * (a + b + Rational(nk + 1 + i));
            const Rational den = Rational(i + 1) * (a + Rational(1 + i));
            if (den.is_zero()) throw PoleInDenominator("jacobi_J_poly: parameter pole");
            term = term * num / den;
        }
        const Rational pre = pochhammer(a + Rational(1), nk) /
                             pochhammer(gamma[static_cast<std::size_t>(k)] + Rational(1), nk);
        val = val * acc.scaled(pre);
        Nk += nk;
    }
    return val;
}

JacobiDiffOp build_jacobi_Lz(int p, int j, std::span<const Rational> gamma) {
    if (j < 1 || j > p) throw Error("build_jacobi_Lz: j out of range");
    if (gamma.size() != static_cast<std::size_t>(p) + 1) throw Error("build_jacobi_Lz: gamma arity");
    JacobiDiffOp op{p, {}};
    const int top = std::min(j + 1, p);
    std::vector<MultiPoly> Z{MultiPoly::constant(p, Rational(0))};
    for (int i = 0; i < p; ++i) Z.push_back(Z.back() + MultiPoly::variable(p, i));
    const MultiPoly Zj1 =
        (j + 1 <= p) ? Z[static_cast<std::size_t>(j + 1)] : MultiPoly::constant(p, Rational(1));
    Rational gsum(0);
    for (int i = 0; i <= j; ++i) gsum += gamma[static_cast<std::size_t>(i)];

    for (int l = 1; l <= top; ++l)
        for (int m = l + 1; m <= top; ++m) {
            std::vector<unsigned> o(static_cast<std::size_t>(p), 0);
            o[static_cast<std::size_t>(l - 1)] = 1;
            o[static_cast<std::size_t>(m - 1)] = 1;
            op.terms.emplace_back(
                (MultiPoly::variable(p, l - 1) * MultiPoly::variable(p, m - 1)).scaled(Rational(-2)),
                o);
        }
    for (int m = 1; m <= top; ++m) {
        const MultiPoly zm = MultiPoly::variable(p, m - 1);
        std::vector<unsigned> o2(static_cast<std::size_t>(p), 0);
        o2[static_cast<std::size_t>(m - 1)] = 2;
        op.terms.emplace_back(zm * (Zj1 - zm), o2);
        std::vector<unsigned> o1(static_cast<std::size_t>(p), 0);
        o1[static_cast<std::size_t>(m - 1)] = 1;
        op.terms.emplace_back(Zj1.scaled(gamma[static_cast<std::size_t>(m - 1)] + Rational(1)) -
                                  zm.scaled(gsum + Rational(j + 1)),
                              o1);
    }
    return op;
}

Rational jacobi_mu(int j, std::span<const long> n, std::span<const Rational> gamma) {
    long s = 0;
    for (int i = 0; i < j; ++i) s += n[static_cast<std::size_t>(i)];
    Rational g(0);
    for (int i = 0; i <= j; ++i) g += gamma[static_cast<std::size_t>(i)];
    return -(Rational(s) * (Rational(s + j) + g));
}

Rational jacobi_kappa(int j, std::span<const Rational> z) {
    const int p = static_cast<int>(z.size());
    Rational s(0);
    for (int i = 0; i < p + 1 - j; ++i) s += z[static_cast<std::size_t>(i)];
    return Rational(1) - s;
}

Rational eval_double_limit_coeff(const Expr& e, std::span<const Rational> vars,
                                 std::span<const Rational> params, int inner_param,
                                 long outer_order, long inner_order) {
    using K1 = UniRatFun<Rational>;
    using K2 = UniRatFun<K1>;
    std::vector<K2> v, pv;
    v.reserve(vars.size());
    pv.reserve(params.size());
    for (const Rational& r : vars) v.emplace_back(K1(r));
    for (std::size_t i = 0; i < params.size(); ++i) {
        if (static_cast<int>(i) == inner_param) pv.emplace_back(K1::indeterminate());
        else pv.emplace_back(K1(params[i]));
    }
    Evaluator<K2> ev(v, pv, K2::indeterminate());
    const K1 after_outer = limit_coeff_at_infinity(ev(e), outer_order);
    return limit_coeff_at_infinity(after_outer, inner_order);
}

Rational jacobi_apply_Ln(const DiffOperator& raw, std::span<const long> n,
                         std::span<const Rational> z, std::span<const Rational> gamma) {
    const int p = static_cast<int>(n.size());
    std::vector<Rational> nvals;
    for (long v : n) nvals.emplace_back(v);
    std::vector<Rational> pv(gamma.begin(), gamma.end());
    pv.emplace_back(0); // slot of the inner limit parameter; value unused
    std::vector<long> target(n.size());
    Rational acc(0);
    for (const auto& [sh, c] : raw.terms()) {
        const Rational cv = eval_double_limit_coeff(c, nvals, pv, p + 1, 1, 1);
        if (cv.is_zero()) continue;
        bool neg = false;
        for (std::size_t i = 0; i < n.size(); ++i) {
            target[i] = n[i] + sh[static_cast<int>(i)];
            neg = neg || target[i] < 0;
        }
        if (neg)
            throw BoundaryLeak("jacobi index-side operator: nonzero coefficient leaves the domain");
        acc += cv * jacobi_J(target, z, gamma);
    }
    return acc;
}

// ---------------------------------------------------- Krawtchouk/Meixner ----

KrawParams::KrawParams(int p_, std::vector<Rational> fp_, Rational N_)
    : p(p_), fp(std::move(fp_)), N(std::move(N_)) {
    if (p < 1) throw Error("KrawParams: p must be >= 1");
    if (fp.size() != static_cast<std::size_t>(p)) throw Error("KrawParams: fp must have p entries");
}

std::vector<Rational> KrawParams::symbol_values() const {
    std::vector<Rational> out = fp;
    out.push_back(N);
    return out;
}

Rational KrawParams::prefix(int upto) const {
    Rational s(0);
    for (int i = 0; i < upto; ++i) s += fp[static_cast<std::size_t>(i)];
    return s;
}

Rational kraw_K(std::span<const long> n, std::span<const Rational> x, const KrawParams& params) {
    const int p = params.p;
    if (n.size() != static_cast<std::size_t>(p) || x.size() != static_cast<std::size_t>(p))
        throw Error("kraw_K: arity mismatch");
    long tot = 0;
    for (long v : n) tot += v;
    const Rational den = pochhammer(-params.N, tot);
    if (den.is_zero()) throw ZeroNormalization("kraw_K: normalization vanishes");
    Rational val = Rational(1) / den;
    long Nk = 0;
    Rational X(0);
    for (int j = 1; j <= p; ++j) {
        const long nj = n[static_cast<std::size_t>(j - 1)];
        Nk += nj;
        const Rational denom = Rational(1) - params.prefix(j - 1);
        if (denom.is_zero()) throw PoleInDenominator("kraw_K: degenerate success parameters");
        const Rational qj = params.fp[static_cast<std::size_t>(j - 1)] / denom;
        const Rational Mj = params.N - Rational(tot) + Rational(Nk) - X;
        val = val * krawtchouk_k<Rational>(nj, x[static_cast<std::size_t>(j - 1)], qj, Mj);
        X += x[static_cast<std::size_t>(j - 1)];
    }
    return val;
}

namespace {

Expr kraw_fp(int k) { return Expr::param(k - 1); }
Expr kraw_N(int p) { return Expr::param(p); }

} // namespace

DiffOperator build_kraw_Lx(int p, int j) {
    if (j < 1 || j > p) throw Error("build_kraw_Lx: j out of range");
    DiffOperator op(p);
    Expr Q(1);
    for (int i = 1; i < j; ++i) Q = Q - kraw_fp(i);
    Expr M = kraw_N(p);
    for (int i = 1; i < j; ++i) M = M - Expr::var(i - 1);
    const auto qi = [&](int i) { return kraw_fp(i) / Q; };

    for (int i = j; i <= p; ++i)
        for (int k = j; k <= p; ++k) {
            if (i == k) continue;
            // q_i x_k (E_i - 1)(1 - E_k^{-1})
            const Expr c = qi(i) * Expr::var(k - 1);
            MultiIndex sh = MultiIndex::zeros(p);
            sh[i - 1] = 1;
            op.add_term(sh, c);
            sh[k - 1] = -1;
            op.add_term(sh, -c);
            op.add_term(MultiIndex::zeros(p), -c);
            op.add_term(MultiIndex::unit(p, k - 1, -1), c);
        }
    for (int i = j; i <= p; ++i) {
        const Expr up = qi(i) * (Expr::var(i - 1) - M);
        op.add_term(MultiIndex::unit(p, i - 1, 1), up);
        op.add_term(MultiIndex::zeros(p), -up);
        const Expr dn = (Expr(1) - qi(i)) * Expr::var(i - 1);
        op.add_term(MultiIndex::zeros(p), dn);
        op.add_term(MultiIndex::unit(p, i - 1, -1), -dn);
    }
    return op;
}

DiffOperator build_kraw_Ln(int p, int j) {
    const DiffOperator lx = build_kraw_Lx(p, j);
    Substitution s;
    // x_k -> n_{p+1-k}
    for (int k = 1; k <= p; ++k) s.map_var(k - 1, Expr::var(p - k));
    // p_k -> p_{p+1-k} (1 - |p|) / ((1 - P_1^{p+1-k})(1 - P_1^{p-k}))
    Expr total(1);
    for (int i = 1; i <= p; ++i) total = total - kraw_fp(i);
    const auto tail = [&](int upto) { // 1 - P_1^{upto}
        Expr e(1);
        for (int i = 1; i <= upto; ++i) e = e - kraw_fp(i);
        return e;
    };
    for (int k = 1; k <= p; ++k)
        s.map_param(k - 1, kraw_fp(p + 1 - k) * total / (tail(p + 1 - k) * tail(p - k)));
    DiffOperator out(p);
    for (const auto& [nu, c] : lx.terms()) {
        std::vector<int> rev(static_cast<std::size_t>(p));
        for (int k = 1; k <= p; ++k) rev[static_cast<std::size_t>(p - k)] = nu[k - 1];
        out.add_term(MultiIndex(std::move(rev)), s(c));
    }
    return out;
}

KrawTriple kraw_duality(const KrawTriple& t) {
    const int p = static_cast<int>(t.x.size());
    if (t.n.size() != t.x.size() || t.fp.size() != t.x.size())
        throw Error("kraw_duality: inconsistent triple");
    KrawTriple out;
    out.N = t.N;
    out.x.resize(static_cast<std::size_t>(p));
    out.n.resize(static_cast<std::size_t>(p));
    out.fp.resize(static_cast<std::size_t>(p));
    Rational total(0);
    std::vector<Rational> pref{Rational(0)}; // P_1^k
    for (const Rational& v : t.fp) {
        total += v;
        pref.push_back(total);
    }
    for (int k = 1; k <= p; ++k) {
        out.x[static_cast<std::size_t>(k - 1)] = t.n[static_cast<std::size_t>(p - k)];
        out.n[static_cast<std::size_t>(k - 1)] = t.x[static_cast<std::size_t>(p - k)];
        const Rational d1 = Rational(1) - pref[static_cast<std::size_t>(p + 1 - k)];
        const Rational d2 = Rational(1) - pref[static_cast<std::size_t>(p - k)];
        if (d1.is_zero() || d2.is_zero())
            throw PoleInDenominator("kraw_duality: degenerate success parameters");
        out.fp[static_cast<std::size_t>(k - 1)] =
            t.fp[static_cast<std::size_t>(p - k)] * (Rational(1) - total) / (d1 * d2);
    }
    return out;
}

Rational kraw_mu(int j, std::span<const long> n) {
    long s = 0;
    for (std::size_t i = static_cast<std::size_t>(j - 1); i < n.size(); ++i) s += n[i];
    return Rational(s);
}

Rational kraw_kappa(int j, std::span<const Rational> x, const KrawParams& params) {
    Rational s(0);
    for (int i = 0; i < params.p + 1 - j; ++i) s += x[static_cast<std::size_t>(i)];
    return s;
}

Rational kraw_apply_Ln(const DiffOperator& op, std::span<const long> n,
                       std::span<const Rational> x, const KrawParams& params) {
    const bool intN = params.N.is_integer() && params.N.sign() >= 0;
    const long N = intN ? params.N.to_long() : -1;
    std::vector<Rational> nvals;
    for (long v : n) nvals.emplace_back(v);
    const auto pv = params.symbol_values();
    Evaluator<Rational> ev(nvals, pv);
    std::vector<long> target(n.size());
    Rational acc(0);
    for (const auto& [sh, c] : op.terms()) {
        const Rational cv = ev(c);
        if (cv.is_zero()) continue;
        long tot = 0;
        bool neg = false;
        for (std::size_t i = 0; i < n.size(); ++i) {
            target[i] = n[i] + sh[static_cast<int>(i)];
            neg = neg || target[i] < 0;
            tot += target[i];
        }
        if (neg || (intN && tot > N))
            throw BoundaryLeak("krawtchouk index-side operator: nonzero coefficient leaves the domain");
        acc += cv * kraw_K(target, x, params);
    }
    return acc;
}

KrawParams meixner_params(std::span<const Rational> c, const Rational& s) {
    Rational total(0);
    for (const Rational& v : c) total += v;
    if ((total - Rational(1)).is_zero()) throw PoleInDenominator("meixner: |c| = 1");
    std::vector<Rational> fp;
    fp.reserve(c.size());
    for (const Rational& v : c) fp.push_back(v / (total - Rational(1)));
    return KrawParams(static_cast<int>(c.size()), std::move(fp), -s);
}

Rational meixner_M(std::span<const long> n, std::span<const Rational> x,
                   std::span<const Rational> c, const Rational& s) {
    return kraw_K(n, x, meixner_params(c, s));
}

// -------------------------------------------------------------- Wilson ----

Rational WilsonParams::eps_prefix(int k) const {
    Rational s(0);
    for (int i = 2; i <= k; ++i) s += eps[static_cast<std::size_t>(i - 2)];
    return s;
}

WilsonData wilson_substitution(const WilsonParams& params, std::span<const Rational> y) {
    const int p = params.p();
    if (y.size() != static_cast<std::size_t>(p)) throw Error("wilson_substitution: arity mismatch");
    WilsonData out;
    out.beta.reserve(static_cast<std::size_t>(p) + 2);
    out.beta.emplace_back(params.a - params.b);
    for (int k = 1; k <= p; ++k)
        out.beta.emplace_back(Rational(2) * params.eps_prefix(k) + Rational(2) * params.a);
    out.beta.emplace_back(Rational(2) * params.eps_prefix(p) + Rational(2) * params.a + params.c +
                          params.d);
    for (int k = 1; k <= p; ++k)
        out.x.emplace_back(-params.eps_prefix(k) - params.a, -y[static_cast<std::size_t>(k - 1)]);
    out.N = GaussianRational(-params.eps_prefix(p) - params.a - params.d);
    return out;
}

Rational wilson_W(std::span<const long> n, std::span<const Rational> y,
                  const WilsonParams& params) {
    const WilsonData data = wilson_substitution(params, y);
    const GaussianRational val = racah_R<GaussianRational>(
        n, std::span<const GaussianRational>(data.x), std::span<const GaussianRational>(data.beta),
        data.N);
    if (!val.is_real()) throw NonRealResult("wilson_W: nonzero imaginary part");
    return val.re();
}

} // namespace racah
