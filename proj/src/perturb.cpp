#include "racah/perturb.hpp"

namespace racah::perturb {

namespace {
thread_local std::string g_tag;
}

void arm(const std::string& tag) { g_tag = tag; }
void disarm() { g_tag.clear(); }
bool armed(const char* tag) { return !g_tag.empty() && g_tag == tag; }

Expr bump(const Expr& e, const char* tag) { return armed(tag) ? e + Expr(1) : e; }

const std::vector<std::string>& known_tags() {
    static const std::vector<std::string> tags = {
        "A-shift-factor",  // first linear factor of the raising coefficient A
        "B00-const",       // the half-integer constant inside B_i^{0,0}
        "B01-factor",      // second factor of B_i^{0,1}
        "b1-factor",       // second factor of the denominator block b_i^1
        "bmap-offset",     // the additive constant in the dual image of x_k
    };
    return tags;
}

} // namespace racah::perturb
