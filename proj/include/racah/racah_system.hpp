#ifndef RACAH_RACAH_SYSTEM_HPP
#define RACAH_RACAH_SYSTEM_HPP

#include <functional>
#include <span>
#include <vector>

#include "racah/diff_op.hpp"
#include "racah/hyper.hpp"
#include "racah/multipoly.hpp"

namespace racah {

/// Parameters of the p-variable Racah system: beta_0..beta_{p+1} and N.
/// Conventions used throughout: x_0 = 0, x_{p+1} = N, lambda_i = x_i (x_i + beta_i),
/// lambda_{p+1} = N (N + beta_{p+1}).
struct RacahParams {
    int p;
    std::vector<Rational> beta; // size p + 2
    Rational N;

    RacahParams(int p_, std::vector<Rational> beta_, Rational N_);

    /// Parameter vector in the symbol layout of the operator builders:
    /// slot i = beta_i for i <= p+1, slot p+2 = N.
    std::vector<Rational> symbol_values() const;

    bool integer_N() const { return N.is_integer() && N.sign() >= 0; }
};

/// Symbol layout of the Racah operator algebra. Variables x_1..x_p are
/// Expr::var(0..p-1); beta_i is Expr::param(i); N is Expr::param(p+2).
struct RacahSymbols {
    static Expr beta(int i) { return Expr::param(i); }
    static Expr cap_n(int p) { return Expr::param(p + 2); }
    static int param_count(int p) { return p + 3; }
};

enum class OperatorForm { Triangle, Shift };

/// Coefficient A_nu of the difference/involution form, nu in {-1,0,1}^p \ {0}:
/// the closed product for nonnegative nu, transported by the involutions for
/// the mixed-sign ones.
Expr racah_coeff_A(int p, const MultiIndex& nu);

/// Shift-form coefficient C_nu, nu in {-1,0,1}^p, built from the B and b
/// factor products with the nu_0 = nu_{p+1} = 0 conventions.
Expr racah_coeff_C(int p, const MultiIndex& nu);

/// C_nu for degree-raising nu (nu_1 = +1) with the boundary factor product
/// (x_1 + beta_1)(x_1 + beta_1 - beta_0) replaced by (x_1 + beta_1 - beta_0):
/// the exact cofactor used by the integer-N edge evaluation on the dual side.
Expr racah_coeff_C_raising_reduced(int p, const MultiIndex& nu);

/// Same reduced coefficient for the partial generator build_Lx(p, j); nu_sub
/// ranges over the sub-operator shifts (arity j, first entry +1). Ambient
/// symbols (x_{j+1} as a variable when j < p).
Expr racah_lx_raising_reduced(int p, int j, const MultiIndex& nu_sub);

/// The full operator in either form; both are extensionally equal.
DiffOperator build_Lp(int p, OperatorForm form);

/// Generator j of the x-side commutative algebra: the j-variable operator
/// with x_{j+1} entering the coefficients as a variable (as N when j = p),
/// embedded into arity p.
DiffOperator build_Lx(int p, int j);

/// Eigenvalue of build_Lx(p, j) on the degree-n basis element.
Rational mu_eigenvalue(int j, std::span<const long> n, const RacahParams& params);

/// Multivariable Racah polynomial: the cascade product of one-variable
/// racah_r factors with partial-sum shifted parameters.
template <class K>
K racah_R(std::span<const long> n, std::span<const K> x, std::span<const K> beta, const K& N) {
    const int p = static_cast<int>(n.size());
    K val(1);
    long Nk = 0; // N_1^{k-1}
    for (int k = 1; k <= p; ++k) {
        const K xk1 = (k < p) ? x[static_cast<std::size_t>(k)] : N; // x_{k+1}
        const K a = K(2 * Nk) + beta[static_cast<std::size_t>(k)] - beta[0] - K(1);
        const K b = beta[static_cast<std::size_t>(k + 1)] - beta[static_cast<std::size_t>(k)] - K(1);
        const K g = K(Nk) - xk1 - K(1);
        const K d = K(Nk) + beta[static_cast<std::size_t>(k)] + xk1;
        const K arg = K(-Nk) + x[static_cast<std::size_t>(k - 1)];
        val = val * racah_r<K>(n[static_cast<std::size_t>(k - 1)], a, b, g, d, arg);
        Nk += n[static_cast<std::size_t>(k - 1)];
    }
    return val;
}

/// Normalization denominator (-N)_{|n|} (-N - beta_0)_{|n|} prod_k (beta_{k+1} - beta_k)_{n_k}.
template <class K>
K rhat_normalization(std::span<const long> n, std::span<const K> beta, const K& N) {
    long tot = 0;
    for (long v : n) tot += v;
    K den = pochhammer(-N, tot) * pochhammer(-N - beta[0], tot);
    for (std::size_t k = 1; k <= n.size(); ++k)
        den = den * pochhammer(beta[k + 1] - beta[k], n[k - 1]);
    return den;
}

/// Normalized polynomial; throws ZeroNormalization when the denominator
/// vanishes (e.g. integer N with |n| > N).
template <class K>
K racah_Rhat(std::span<const long> n, std::span<const K> x, std::span<const K> beta, const K& N) {
    const K den = rhat_normalization(n, beta, N);
    if (den.is_zero()) throw ZeroNormalization("racah_Rhat: normalization vanishes");
    return racah_R(n, x, beta, N) / den;
}

// Rational-argument conveniences.
Rational racah_R(std::span<const long> n, std::span<const Rational> x, const RacahParams& params);
Rational racah_Rhat(std::span<const long> n, std::span<const Rational> x, const RacahParams& params);

/// exact limit of (|n| - N') * Rhat(k; x; N') as N' -> N for integer N and
/// |k| = N + 1; finite because the normalization pole cancels the factor.
Rational rhat_edge_limit(std::span<const long> k, std::span<const Rational> x, const RacahParams& params);

/// Lattice simplex V_N = { 0 <= x_1 <= ... <= x_p <= N } in lexicographic order.
std::vector<std::vector<Rational>> enumerate_VN(int p, long N);
bool in_VN(std::span<const Rational> x, long N);

/// Weight on V_N in the rational shifted-factorial form (scale-equivalent to
/// the Gamma-ratio form; the global constant is dropped).
Rational weight_rho(std::span<const Rational> x, const RacahParams& params);

/// <f, g> = sum_{V_N} f g rho. Functions are arbitrary lattice evaluables.
Rational inner_product(const std::function<Rational(std::span<const Rational>)>& f,
                       const std::function<Rational(std::span<const Rational>)>& g,
                       const RacahParams& params);

/// Exact determinant of the multinomial-binomial matrix [binom(2m, nu)] over
/// the index set {|nu| <= M} (fraction-free Bareiss elimination over the
/// integers) together with the predicted power 2^{p * binom(M+p, p+1)}.
struct DetIdentity {
    Rational determinant;
    Rational predicted;
    bool equal;
};
DetIdentity det_binomial_identity(int p, int M);

/// Apply an operator over the Racah symbol layout to a lattice function at a
/// rational point.
Rational apply_racah_operator(const DiffOperator& op,
                              const std::function<Rational(std::span<const Rational>)>& f,
                              std::span<const Rational> x, const RacahParams& params);

} // namespace racah

#endif
