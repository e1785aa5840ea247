#ifndef RACAH_DUALITY_HPP
#define RACAH_DUALITY_HPP

#include <span>
#include <vector>

#include "racah/racah_system.hpp"

namespace racah {

/// A point of the duality: lattice variables, degree indices, parameters.
/// Degree entries are rational so the involution can be checked on generic
/// triples; integral entries are required only when used as polynomial
/// indices.
struct DualTriple {
    std::vector<Rational> x;
    std::vector<Rational> n;
    std::vector<Rational> beta; // beta_0 .. beta_{p+1}
    Rational N;
};

/// The affine bijection exchanging (x, n, beta) with its dual; applying it
/// twice is the identity.
DualTriple duality_f(const DualTriple& t);

/// The operator-algebra isomorphism onto the index side: substitutes the
/// dual images of x_k, beta_k and rewrites each shift E_{x_k} as
/// E_{n_{p+1-k}} E_{n_{p+2-k}}^{-1} (the last index shift being absent).
Expr bmap_expr(const Expr& e, int p);
MultiIndex bmap_shift(const MultiIndex& nu);
DiffOperator bmap(const DiffOperator& L, int p);

/// Generator j of the index-side algebra and its eigenvalue.
DiffOperator build_Ln(int p, int j);
Rational kappa_eigenvalue(int j, std::span<const Rational> x, const RacahParams& params);

/// Index-side generator with the raising terms kept separately in the
/// reduced form needed at the integer-N edge.
struct DualGenerator {
    int p, j;
    DiffOperator op;                                  // full b-mapped generator
    std::vector<std::pair<MultiIndex, Expr>> raising; // dual shift -> reduced coefficient
};
DualGenerator build_Ln_parts(int p, int j);

/// Exact application of the index-side generator to Rhat(.; x) at the index
/// point n. Out-of-domain shifts are only ever skipped after their
/// coefficient is confirmed zero; a nonzero coefficient addressing a negative
/// index raises BoundaryLeak. For integer N at |n| = N the degree-raising
/// terms contribute their exact limit value (reduced coefficient times the
/// truncated-normalization polynomial); nothing is evaluated at |n| = N + 1.
Rational apply_Ln_rhat(const DualGenerator& gen, std::span<const long> n,
                       std::span<const Rational> x, const RacahParams& params);

/// True iff every coefficient of the generator whose shift would leave the
/// nonnegative index domain evaluates to zero at this n.
bool boundary_vanishing_check(const DualGenerator& gen, std::span<const long> n,
                              const RacahParams& params);

} // namespace racah

#endif
