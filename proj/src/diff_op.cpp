#include "racah/diff_op.hpp"

#include <sstream>

#include "json.hpp"

namespace racah {

std::string MultiIndex::str() const {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i) os << ",";
        os << v_[i];
    }
    os << ")";
    return os.str();
}

DiffOperator operator+(const DiffOperator& a, const DiffOperator& b) {
    if (a.arity() != b.arity()) throw Error("DiffOperator: arity mismatch");
    DiffOperator out = a;
    for (const auto& [nu, c] : b.terms_) out.add_term(nu, c);
    return out;
}

DiffOperator operator-(const DiffOperator& a, const DiffOperator& b) {
    if (a.arity() != b.arity()) throw Error("DiffOperator: arity mismatch");
    DiffOperator out = a;
    for (const auto& [nu, c] : b.terms_) out.add_term(nu, -c);
    return out;
}

DiffOperator DiffOperator::scaled(const Expr& f) const {
    DiffOperator out(arity_);
    for (const auto& [nu, c] : terms_) out.add_term(nu, f * c);
    return out;
}

DiffOperator DiffOperator::map_coeffs(const Substitution& s) const {
    DiffOperator out(arity_);
    for (const auto& [nu, c] : terms_) out.add_term(nu, s(c));
    return out;
}

DiffOperator DiffOperator::embedded(int new_arity) const {
    if (new_arity < arity_) throw Error("DiffOperator: cannot shrink arity");
    DiffOperator out(new_arity);
    for (const auto& [nu, c] : terms_) {
        std::vector<int> v = nu.values();
        v.resize(static_cast<std::size_t>(new_arity), 0);
        out.add_term(MultiIndex(std::move(v)), c);
    }
    return out;
}

std::string DiffOperator::to_json() const {
    nlohmann::json j;
    j["arity"] = arity_;
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [nu, c] : terms_) { // std::map order = canonical
        nlohmann::json t;
        t["shift"] = nu.values();
        t["coeff"] = c.str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j.dump();
}

DiffOperator compose(const DiffOperator& L, const DiffOperator& M) {
    if (L.arity() != M.arity()) throw Error("compose: arity mismatch");
    const int p = L.arity();
    DiffOperator out(p);
    // coefficient of E^{nu+mu} collects c_L(x) * c_M(x + nu)
    for (const auto& [nu, cl] : L.terms()) {
        Substitution shift;
        for (int i = 0; i < p; ++i)
            if (nu[i] != 0) shift.map_var(i, Expr::var(i) + Expr::constant(Rational(nu[i])));
        for (const auto& [mu, cm] : M.terms()) {
            out.add_term(nu + mu, cl * shift(cm));
        }
    }
    return out;
}

DiffOperator commutator(const DiffOperator& L, const DiffOperator& M) {
    return compose(L, M) - compose(M, L);
}

Expr involute_expr(const Expr& e, int i, const Expr& beta_i) {
    Substitution s;
    s.map_var(i - 1, -Expr::var(i - 1) - beta_i);
    return s(e);
}

DiffOperator involution(const DiffOperator& L, int i, const Expr& beta_i) {
    Substitution s;
    s.map_var(i - 1, -Expr::var(i - 1) - beta_i);
    DiffOperator out(L.arity());
    for (const auto& [nu, c] : L.terms()) out.add_term(nu.flipped(i - 1), s(c));
    return out;
}

bool is_zero_operator(const DiffOperator& L, int trials, std::uint64_t seed) {
    if (trials < 1) throw Error("is_zero_operator: trials must be >= 1");
    if (L.empty()) return true;
    const int p = L.arity();
    const int nparams = L.max_param_index() + 1;
    RationalSampler sampler(seed);

    int done = 0;
    bool all_zero = true;
    for (int attempt = 0; attempt < 10 * trials && done < trials; ++attempt) {
        std::vector<Rational> vars;
        vars.reserve(static_cast<std::size_t>(p));
        for (int i = 0; i < p; ++i) vars.push_back(sampler.rational());
        std::vector<Rational> params;
        params.reserve(static_cast<std::size_t>(nparams));
        for (int i = 0; i < nparams; ++i) params.push_back(sampler.rational());
        try {
            Evaluator<Rational> ev(vars, params);
            bool zero_here = true;
            for (const auto& [nu, c] : L.terms()) {
                if (!ev(c).is_zero()) {
                    zero_here = false;
                    break;
                }
            }
            ++done;
            if (!zero_here) {
                all_zero = false;
                break;
            }
        } catch (const PoleAtPoint&) {
            continue; // resample
        }
    }
    if (done == 0) throw AllPointsPoles("is_zero_operator: no pole-free sample found");
    if (done < trials && all_zero)
        throw AllPointsPoles("is_zero_operator: only " + std::to_string(done) + " pole-free samples");
    return all_zero;
}

} // namespace racah
