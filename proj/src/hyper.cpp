#include "racah/hyper.hpp"

namespace racah {

GaussianRational wilson_w(long n, const Rational& y, const Rational& a, const Rational& b,
                          const Rational& c, const Rational& d) {
    using G = GaussianRational;
    const G iy(Rational(0), y);
    const G ga(a), gb(b), gc(c), gd(d);
    const G pre = pochhammer(ga + gb, n) * pochhammer(ga + gc, n) * pochhammer(ga + gd, n);
    const G series = hyp_terminating<G>(
        n, {ga + gb + gc + gd + G(n) - G(1), ga + iy, ga - iy}, {ga + gb, ga + gc, ga + gd}, G(1));
    return pre * series;
}

} // namespace racah
