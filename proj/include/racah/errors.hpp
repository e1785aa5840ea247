#ifndef RACAH_ERRORS_HPP
#define RACAH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace racah {

/// Base class for all library errors.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// limit_coeff_at_infinity: numerator degree exceeds denominator degree + order.
struct DegreeOverflow : Error {
    using Error::Error;
};

/// A lower parameter of a terminating hypergeometric sum hit a nonpositive
/// integer inside the truncated summation range.
struct PoleInDenominator : Error {
    using Error::Error;
};

/// An operator coefficient denominator vanished at the evaluation point.
struct PoleAtPoint : Error {
    using Error::Error;
};

/// Saalschuetz balance condition failed; the Whipple transformation is not
/// asserted for unbalanced data.
struct NotBalanced : Error {
    using Error::Error;
};

/// The normalization denominator of a normalized Racah polynomial vanished.
struct ZeroNormalization : Error {
    using Error::Error;
};

/// A lattice point lies outside the simplex V_N.
struct InvalidPoint : Error {
    using Error::Error;
};

/// A dual-side operator produced a nonzero coefficient for a shift leaving
/// the index domain.
struct BoundaryLeak : Error {
    using Error::Error;
};

/// Randomized zero testing could not find a pole-free sample.
struct AllPointsPoles : Error {
    using Error::Error;
};

/// A value expected to be real had a nonzero imaginary part.
struct NonRealResult : Error {
    using Error::Error;
};

/// Unknown verification suite name.
struct UnknownSuite : Error {
    using Error::Error;
};

/// Invalid suite configuration.
struct ConfigInvalid : Error {
    using Error::Error;
};

} // namespace racah

#endif
