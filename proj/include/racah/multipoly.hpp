#ifndef RACAH_MULTIPOLY_HPP
#define RACAH_MULTIPOLY_HPP

#include <map>
#include <span>
#include <string>
#include <vector>

#include "racah/errors.hpp"
#include "racah/rational.hpp"

namespace racah {

/// Sparse exact multivariate polynomial over Rational in a fixed number of
/// variables. Canonical form: no zero coefficients stored.
class MultiPoly {
public:
    using Monomial = std::vector<unsigned>;

    explicit MultiPoly(int nvars) : nvars_(nvars) {}

    static MultiPoly constant(int nvars, const Rational& c) {
        MultiPoly p(nvars);
        p.add_term(Monomial(static_cast<std::size_t>(nvars), 0), c);
        return p;
    }
    static MultiPoly variable(int nvars, int i) {
        MultiPoly p(nvars);
        Monomial m(static_cast<std::size_t>(nvars), 0);
        m[static_cast<std::size_t>(i)] = 1;
        p.add_term(m, Rational(1));
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Monomial, Rational>& terms() const { return terms_; }

    long total_degree() const { // -1 for the zero polynomial
        long d = -1;
        for (const auto& [m, c] : terms_) {
            long s = 0;
            for (unsigned e : m) s += e;
            d = std::max(d, s);
        }
        return d;
    }

    void add_term(const Monomial& m, const Rational& c) {
        if (m.size() != static_cast<std::size_t>(nvars_)) throw Error("MultiPoly: monomial arity mismatch");
        if (c.is_zero()) return;
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_.emplace(m, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
        check(a, b);
        MultiPoly out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, c);
        return out;
    }
    friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
        check(a, b);
        MultiPoly out = a;
        for (const auto& [m, c] : b.terms_) out.add_term(m, -c);
        return out;
    }
    MultiPoly operator-() const {
        MultiPoly out(nvars_);
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
        return out;
    }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
        check(a, b);
        MultiPoly out(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial m(ma);
                for (std::size_t i = 0; i < m.size(); ++i) m[i] += mb[i];
                out.add_term(m, ca * cb);
            }
        return out;
    }
    MultiPoly scaled(const Rational& s) const {
        MultiPoly out(nvars_);
        if (s.is_zero()) return out;
        for (const auto& [m, c] : terms_) out.terms_.emplace(m, c * s);
        return out;
    }

    /// Exact partial derivative d/dx_i.
    MultiPoly derivative(int i) const {
        MultiPoly out(nvars_);
        for (const auto& [m, c] : terms_) {
            const unsigned e = m[static_cast<std::size_t>(i)];
            if (e == 0) continue;
            Monomial m2(m);
            m2[static_cast<std::size_t>(i)] = e - 1;
            out.add_term(m2, c * Rational(static_cast<long>(e)));
        }
        return out;
    }

    template <class K>
    K eval(std::span<const K> point) const {
        if (point.size() != static_cast<std::size_t>(nvars_)) throw Error("MultiPoly: point arity mismatch");
        K acc(0);
        for (const auto& [m, c] : terms_) {
            K t{K(c)};
            for (std::size_t i = 0; i < m.size(); ++i)
                for (unsigned e = 0; e < m[i]; ++e) t = t * point[i];
            acc = acc + t;
        }
        return acc;
    }

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

    std::string str() const;

private:
    static void check(const MultiPoly& a, const MultiPoly& b) {
        if (a.nvars_ != b.nvars_) throw Error("MultiPoly: arity mismatch");
    }
    int nvars_;
    std::map<Monomial, Rational> terms_;
};

/// Exact polynomial interpolation on a tensor grid: values[flat index] over
/// nodes[d][i_d] (flat index = row-major over the per-axis node lists, last
/// axis fastest). Nodes must be pairwise distinct per axis; the result is the
/// unique polynomial of per-axis degree < nodes[d].size() through the data.
MultiPoly interpolate_on_grid(const std::vector<std::vector<Rational>>& nodes,
                              std::span<const Rational> values);

} // namespace racah

#endif
