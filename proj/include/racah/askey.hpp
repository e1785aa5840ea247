#ifndef RACAH_ASKEY_HPP
#define RACAH_ASKEY_HPP

#include "racah/duality.hpp"
#include "racah/multipoly.hpp"
#include "racah/racah_system.hpp"

namespace racah {

// ---------------------------------------------------------------------------
// Hahn family. Obtained from the Racah system by the reparameterization
// beta_k = beta_0 + (g_1 + .. + g_k) + k and variables y_k = x_k - x_{k-1};
// the auxiliary parameter beta_0 is carried exactly as the limit
// indeterminate and removed with limit_coeff_at_infinity (its degree
// bookkeeping is exact: the normalized cascade polynomial is degree-balanced
// in beta_0, so its limit is taken at order 0, the index-side generator at
// order 1). Symbol layout: g_1..g_{p+1} are params 0..p, N is param p+1;
// y_{p+1} = N - |y| is a derived expression, never stored.
// ---------------------------------------------------------------------------

struct HahnParams {
    int p;
    std::vector<Rational> gamma; // g_1 .. g_{p+1}
    Rational N;

    HahnParams(int p_, std::vector<Rational> gamma_, Rational N_);
    std::vector<Rational> symbol_values() const; // g..., N
    Rational gamma_prefix(int upto) const;       // g_1 + ... + g_{upto}
};

/// Product-form Hahn polynomial of p variables.
Rational hahn_H(std::span<const long> n, std::span<const Rational> y, const HahnParams& params);

/// Variable-side generator: quadratic-coefficient difference operator acting
/// on the first min(j+1, p) lattice directions with the derived last label.
DiffOperator build_hahn_Ly(int p, int j);

/// Index-side generator before the limit: the b-mapped Racah generator with
/// the reparameterized betas, coefficients carrying the limit indeterminate.
DiffOperator build_hahn_Ln_raw(int p, int j);

Rational hahn_mu(int j, std::span<const long> n, const HahnParams& params);
Rational hahn_kappa(int j, std::span<const Rational> y, const HahnParams& params);

/// Evaluate a limit-carrying coefficient at rational data: lift everything to
/// univariate rational functions of t and take lim f(t)/t^order.
Rational eval_limit_coeff(const Expr& e, std::span<const Rational> vars,
                          std::span<const Rational> params, long order);

/// Guarded application of the limited index-side generator to hahn_H at n.
Rational hahn_apply_Ln(const DiffOperator& raw, std::span<const long> n,
                       std::span<const Rational> y, const HahnParams& params);

/// Exact limit of the normalized cascade polynomial under the
/// reparameterization; equals hahn_H identically (order-0 limit).
Rational hahn_limit_of_rhat(std::span<const long> n, std::span<const Rational> y,
                            const HahnParams& params);

// ---------------------------------------------------------------------------
// Jacobi family on the simplex: second limit N -> infinity with y = N z.
// The variable side becomes an exact differential operator on multivariate
// polynomials; the index side keeps the Hahn supports with coefficients
// obtained by the two-stage limit (t = auxiliary parameter, then N), both
// carried as nested rational-function indeterminates.
// ---------------------------------------------------------------------------

/// Differential operator with polynomial coefficients: sum of
/// coeff * d^{o_1 + ... + o_p} / dz^o terms, applied exactly.
struct JacobiDiffOp {
    int nvars;
    std::vector<std::pair<MultiPoly, std::vector<unsigned>>> terms;
    MultiPoly apply(const MultiPoly& f) const;
};

Rational jacobi_J(std::span<const long> n, std::span<const Rational> z,
                  std::span<const Rational> gamma);
MultiPoly jacobi_J_poly(std::span<const long> n, std::span<const Rational> gamma);

JacobiDiffOp build_jacobi_Lz(int p, int j, std::span<const Rational> gamma);

Rational jacobi_mu(int j, std::span<const long> n, std::span<const Rational> gamma);
Rational jacobi_kappa(int j, std::span<const Rational> z);

/// Two-stage limit of an index-side coefficient: the auxiliary parameter at
/// `outer_order`, then the parameter in slot `inner_param` at `inner_order`.
Rational eval_double_limit_coeff(const Expr& e, std::span<const Rational> vars,
                                 std::span<const Rational> params, int inner_param,
                                 long outer_order, long inner_order);

/// Guarded application of the fully limited index-side generator to jacobi_J.
Rational jacobi_apply_Ln(const DiffOperator& raw, std::span<const long> n,
                         std::span<const Rational> z, std::span<const Rational> gamma);

// ---------------------------------------------------------------------------
// Krawtchouk / Meixner family. Symbol layout: p_1..p_p are params 0..p-1,
// N is param p.
// ---------------------------------------------------------------------------

struct KrawParams {
    int p;
    std::vector<Rational> fp; // success parameters p_1 .. p_p
    Rational N;

    KrawParams(int p_, std::vector<Rational> fp_, Rational N_);
    std::vector<Rational> symbol_values() const;
    Rational prefix(int upto) const; // p_1 + ... + p_{upto}
};

Rational kraw_K(std::span<const long> n, std::span<const Rational> x, const KrawParams& params);

/// Variable-side generator j: shifts the trailing variables x_j..x_p, with
/// the leading ones entering through the rescaled parameters and the
/// truncated size.
DiffOperator build_kraw_Lx(int p, int j);

/// Index-side generator via the variable/index swap isomorphism.
DiffOperator build_kraw_Ln(int p, int j);

struct KrawTriple {
    std::vector<Rational> x, n, fp;
    Rational N;
};

/// The self-inverse bijection exchanging indices with variables and mapping
/// the success parameters through their partial-sum rescaling.
KrawTriple kraw_duality(const KrawTriple& t);

Rational kraw_mu(int j, std::span<const long> n);                          // n_j + ... + n_p
Rational kraw_kappa(int j, std::span<const Rational> x, const KrawParams&); // x_1 + ... + x_{p+1-j}

/// Guarded application of the index-side generator to kraw_K at n.
Rational kraw_apply_Ln(const DiffOperator& op, std::span<const long> n,
                       std::span<const Rational> x, const KrawParams& params);

/// Meixner substitution p_k = c_k / (|c| - 1), N = -s.
KrawParams meixner_params(std::span<const Rational> c, const Rational& s);
Rational meixner_M(std::span<const long> n, std::span<const Rational> x,
                   std::span<const Rational> c, const Rational& s);

// ---------------------------------------------------------------------------
// Wilson family: a change of variables and parameters over the Gaussian
// rationals; evaluation only (the variable-side operators are the Racah ones
// under the substitution, with lattice shifts acting as imaginary shifts).
// ---------------------------------------------------------------------------

struct WilsonParams {
    Rational a, b, c, d;
    std::vector<Rational> eps; // eps_2 .. eps_p (empty when p = 1)

    int p() const { return static_cast<int>(eps.size()) + 1; }
    Rational eps_prefix(int k) const; // eps_2 + ... + eps_k (zero for k <= 1)
};

struct WilsonData {
    std::vector<GaussianRational> x, beta;
    GaussianRational N;
};

/// The substituted Racah data for evaluation at the point y.
WilsonData wilson_substitution(const WilsonParams& params, std::span<const Rational> y);

/// Multivariable Wilson polynomial; exact, with a hard zero-imaginary-part
/// check (NonRealResult signals an implementation bug).
Rational wilson_W(std::span<const long> n, std::span<const Rational> y,
                  const WilsonParams& params);

} // namespace racah

#endif
