#include "racah/rational.hpp"

#include <ostream>

namespace racah {

Rational Rational::from_string(std::string_view s) {
    const auto slash = s.find('/');
    try {
        if (slash == std::string_view::npos) {
            mpz_class n(std::string(s), 10);
            return Rational(n);
        }
        mpz_class n(std::string(s.substr(0, slash)), 10);
        mpz_class d(std::string(s.substr(slash + 1)), 10);
        if (d == 0) throw Error("Rational: zero denominator");
        return Rational(n, d);
    } catch (const std::invalid_argument&) {
        throw Error("Rational: malformed literal '" + std::string(s) + "'");
    }
}

long Rational::to_long() const {
    if (!is_integer()) throw Error("Rational: " + str() + " is not an integer");
    if (!v_.get_num().fits_slong_p()) throw Error("Rational: integer out of long range");
    return v_.get_num().get_si();
}

std::string Rational::str() const {
    if (is_integer()) return v_.get_num().get_str();
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

std::size_t Rational::hash() const {
    // cheap mix of limb-truncated num/den; only used for dedup containers
    const std::size_t a = static_cast<std::size_t>(mpz_get_ui(v_.get_num().get_mpz_t()));
    const std::size_t b = static_cast<std::size_t>(mpz_get_ui(v_.get_den().get_mpz_t()));
    std::size_t h = a * 0x9e3779b97f4a7c15ULL + 0x517cc1b727220a95ULL;
    h ^= b + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    if (sgn(v_) < 0) h = ~h;
    return h;
}

Rational pow(const Rational& base, long e) {
    if (e < 0) {
        if (base.is_zero()) throw PoleAtPoint("pow: zero to negative power");
        return Rational(1) / pow(base, -e);
    }
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), static_cast<unsigned long>(e));
    return Rational(n, d);
}

std::string GaussianRational::str() const {
    if (im_.is_zero()) return re_.str();
    std::string s = re_.str();
    s += (im_.sign() < 0) ? " - " : " + ";
    s += abs(im_).str();
    s += "*i";
    return s;
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& q) { return os << q.str(); }

} // namespace racah
