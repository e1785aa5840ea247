#include "racah/duality.hpp"

#include "racah/perturb.hpp"

namespace racah {

namespace {

Rational partial_sum(std::span<const Rational> v, int count) {
    Rational s(0);
    for (int i = 0; i < count; ++i) s += v[static_cast<std::size_t>(i)];
    return s;
}

} // namespace

DualTriple duality_f(const DualTriple& t) {
    const int p = static_cast<int>(t.x.size());
    if (t.n.size() != t.x.size() || t.beta.size() != t.x.size() + 2)
        throw Error("duality_f: inconsistent triple");
    DualTriple out;
    out.N = t.N;
    out.beta.resize(static_cast<std::size_t>(p) + 2);
    out.beta[0] = t.beta[0];
    for (int i = 1; i <= p + 1; ++i)
        out.beta[static_cast<std::size_t>(i)] =
            t.beta[0] - t.beta[static_cast<std::size_t>(p + 2 - i)] - Rational(2) * t.N + Rational(1);
    out.x.resize(static_cast<std::size_t>(p));
    for (int i = 1; i <= p; ++i)
        out.x[static_cast<std::size_t>(i - 1)] =
            partial_sum(t.n, p + 1 - i) + t.beta[static_cast<std::size_t>(p + 2 - i)] - t.beta[0] + t.N - Rational(1);
    out.n.resize(static_cast<std::size_t>(p));
    out.n[0] = t.x[static_cast<std::size_t>(p - 1)] + t.beta[static_cast<std::size_t>(p)] + t.N;
    for (int i = 2; i <= p; ++i)
        out.n[static_cast<std::size_t>(i - 1)] =
            t.x[static_cast<std::size_t>(p + 1 - i - 1)] - t.x[static_cast<std::size_t>(p + 2 - i - 1)] +
            t.beta[static_cast<std::size_t>(p + 1 - i)] - t.beta[static_cast<std::size_t>(p + 2 - i)];
    return out;
}

namespace {

Substitution bmap_substitution(int p) {
    Substitution s;
    const Expr N = RacahSymbols::cap_n(p);
    const Expr b0 = RacahSymbols::beta(0);
    for (int k = 1; k <= p + 1; ++k)
        s.map_param(k, b0 - RacahSymbols::beta(p + 2 - k) - Expr(2) * N + Expr(1));
    for (int k = 1; k <= p; ++k) {
        Expr sum(0);
        for (int i = 0; i < p + 1 - k; ++i) sum = sum + Expr::var(i);
        s.map_var(k - 1, sum + RacahSymbols::beta(p + 2 - k) - b0 + N -
                             perturb::bump(Expr(1), "bmap-offset"));
    }
    return s;
}

} // namespace

Expr bmap_expr(const Expr& e, int p) { return bmap_substitution(p)(e); }

MultiIndex bmap_shift(const MultiIndex& nu) {
    const int p = nu.size();
    MultiIndex out = MultiIndex::zeros(p);
    for (int k = 1; k <= p; ++k) {
        if (nu[k - 1] == 0) continue;
        out[p + 1 - k - 1] += nu[k - 1];
        if (p + 2 - k <= p) out[p + 2 - k - 1] -= nu[k - 1];
    }
    return out;
}

DiffOperator bmap(const DiffOperator& L, int p) {
    if (L.arity() != p) throw Error("bmap: arity mismatch");
    const Substitution s = bmap_substitution(p);
    DiffOperator out(p);
    for (const auto& [nu, c] : L.terms()) out.add_term(bmap_shift(nu), s(c));
    return out;
}

DiffOperator build_Ln(int p, int j) { return bmap(build_Lx(p, j), p); }

Rational kappa_eigenvalue(int j, std::span<const Rational> x, const RacahParams& params) {
    const Rational& xi = x[static_cast<std::size_t>(params.p - j)]; // x_{p+1-j}
    const Rational& bi = params.beta[static_cast<std::size_t>(params.p + 1 - j)];
    return -(xi * (xi + bi)) + params.N * (params.N + bi);
}

DualGenerator build_Ln_parts(int p, int j) {
    DualGenerator gen{p, j, build_Ln(p, j), {}};
    // raising shifts come from sub-operator indices nu with nu_1 = +1
    MultiIndex nu = MultiIndex::zeros(j);
    long count = 1;
    for (int i = 0; i < j; ++i) count *= 3;
    for (long code = 0; code < count; ++code) {
        long rest = code;
        for (int i = 0; i < j; ++i) {
            nu[i] = static_cast<int>(rest % 3) - 1;
            rest /= 3;
        }
        if (nu[0] != 1) continue;
        MultiIndex full = MultiIndex::zeros(p);
        for (int i = 0; i < j; ++i) full[i] = nu[i];
        const Expr reduced = racah_lx_raising_reduced(p, j, nu);
        gen.raising.emplace_back(bmap_shift(full), bmap_expr(reduced, p));
    }
    return gen;
}

namespace {

bool out_of_domain(std::span<const long> n, const MultiIndex& sh, bool integer_N, long N) {
    long tot = 0;
    for (std::size_t i = 0; i < n.size(); ++i) {
        const long v = n[i] + sh[static_cast<int>(i)];
        if (v < 0) return true;
        tot += v;
    }
    return integer_N && tot > N;
}

bool negative_target(std::span<const long> n, const MultiIndex& sh) {
    for (std::size_t i = 0; i < n.size(); ++i)
        if (n[i] + sh[static_cast<int>(i)] < 0) return true;
    return false;
}

} // namespace

Rational apply_Ln_rhat(const DualGenerator& gen, std::span<const long> n,
                       std::span<const Rational> x, const RacahParams& params) {
    const bool intN = params.integer_N();
    const long N = intN ? params.N.to_long() : -1;
    long tot = 0;
    for (long v : n) tot += v;
    const bool at_edge = intN && tot == N;

    std::vector<Rational> nvals;
    nvals.reserve(n.size());
    for (long v : n) nvals.emplace_back(v);
    const auto paramv = params.symbol_values();
    Evaluator<Rational> ev(nvals, paramv);

    std::vector<long> target(n.size());
    Rational acc(0);
    for (const auto& [sh, c] : gen.op.terms()) {
        const bool raising = sh.weight() == 1;
        if (at_edge && raising) continue; // handled below via the reduced form
        const Rational cv = ev(c);
        if (cv.is_zero()) continue;
        if (out_of_domain(n, sh, intN, N)) {
            throw BoundaryLeak("index-side operator: nonzero coefficient leaves the domain at n=" +
                               sh.str());
        }
        for (std::size_t i = 0; i < n.size(); ++i) target[i] = n[i] + sh[static_cast<int>(i)];
        acc += cv * racah_Rhat(target, x, params);
    }
    if (at_edge) {
        for (const auto& [sh, reduced] : gen.raising) {
            const Rational g = ev(reduced);
            if (g.is_zero()) continue;
            if (negative_target(n, sh))
                throw BoundaryLeak("index-side operator: raising term leaves the domain at the edge");
            for (std::size_t i = 0; i < n.size(); ++i) target[i] = n[i] + sh[static_cast<int>(i)];
            acc += g * rhat_edge_limit(target, x, params);
        }
    }
    return acc;
}

bool boundary_vanishing_check(const DualGenerator& gen, std::span<const long> n,
                              const RacahParams& params) {
    std::vector<Rational> nvals;
    nvals.reserve(n.size());
    for (long v : n) nvals.emplace_back(v);
    const auto paramv = params.symbol_values();
    Evaluator<Rational> ev(nvals, paramv);
    for (const auto& [sh, c] : gen.op.terms()) {
        if (!negative_target(n, sh)) continue;
        if (!ev(c).is_zero()) return false;
    }
    return true;
}

} // namespace racah
