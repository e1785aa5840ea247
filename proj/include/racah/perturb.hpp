#ifndef RACAH_PERTURB_HPP
#define RACAH_PERTURB_HPP

#include <string>
#include <vector>

#include "racah/expr.hpp"

namespace racah::perturb {

/// Single-constant perturbation fixtures. When a tag is armed, the matching
/// coefficient constructor adds +1 to one named constant; the
/// fault-sensitivity suite arms each tag in turn and requires at least one
/// check to fail, demonstrating that the suites actually constrain the
/// formulas. Thread-local so concurrent suites stay isolated.
void arm(const std::string& tag);
void disarm();
bool armed(const char* tag);

/// e + 1 when `tag` is armed, e otherwise.
Expr bump(const Expr& e, const char* tag);

/// All known tags, for the fault suite.
const std::vector<std::string>& known_tags();

/// RAII guard.
struct Scope {
    explicit Scope(const std::string& tag) { arm(tag); }
    ~Scope() { disarm(); }
    Scope(const Scope&) = delete;
    Scope& operator=(const Scope&) = delete;
};

} // namespace racah::perturb

#endif
