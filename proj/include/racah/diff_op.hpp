#ifndef RACAH_DIFF_OP_HPP
#define RACAH_DIFF_OP_HPP

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "racah/expr.hpp"
#include "racah/prng.hpp"

namespace racah {

/// Integer shift multi-index nu in Z^p with the nu = nu+ - nu- decomposition.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> v) : v_(std::move(v)) {}
    static MultiIndex zeros(int p) { return MultiIndex(std::vector<int>(static_cast<std::size_t>(p), 0)); }
    static MultiIndex unit(int p, int i, int value = 1) {
        auto m = zeros(p);
        m.v_[static_cast<std::size_t>(i)] = value;
        return m;
    }

    int size() const { return static_cast<int>(v_.size()); }
    int operator[](int i) const { return v_[static_cast<std::size_t>(i)]; }
    int& operator[](int i) { return v_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& values() const { return v_; }

    bool is_zero() const {
        for (int x : v_)
            if (x != 0) return false;
        return true;
    }
    long weight() const { // |nu| = sum of entries
        long s = 0;
        for (int x : v_) s += x;
        return s;
    }
    MultiIndex positive_part() const {
        auto r = v_;
        for (int& x : r) x = x > 0 ? x : 0;
        return MultiIndex(std::move(r));
    }
    MultiIndex negative_part() const {
        auto r = v_;
        for (int& x : r) x = x < 0 ? -x : 0;
        return MultiIndex(std::move(r));
    }
    long abs_weight() const {
        long s = 0;
        for (int x : v_) s += x > 0 ? x : -x;
        return s;
    }
    friend MultiIndex operator+(const MultiIndex& a, const MultiIndex& b) {
        auto r = a.v_;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += b.v_[i];
        return MultiIndex(std::move(r));
    }
    MultiIndex negated() const {
        auto r = v_;
        for (int& x : r) x = -x;
        return MultiIndex(std::move(r));
    }
    MultiIndex flipped(int i) const {
        auto r = v_;
        r[static_cast<std::size_t>(i)] = -r[static_cast<std::size_t>(i)];
        return MultiIndex(std::move(r));
    }

    friend bool operator<(const MultiIndex& a, const MultiIndex& b) { return a.v_ < b.v_; }
    friend bool operator==(const MultiIndex& a, const MultiIndex& b) { return a.v_ == b.v_; }
    friend bool operator!=(const MultiIndex& a, const MultiIndex& b) { return a.v_ != b.v_; }

    std::string str() const;

private:
    std::vector<int> v_;
};

/// Finite-support difference operator sum_nu c_nu(x) E^nu with Expr
/// coefficients. Structurally zero coefficients are dropped on insertion;
/// extensional zero detection is is_zero_operator.
class DiffOperator {
public:
    explicit DiffOperator(int arity) : arity_(arity) {}

    int arity() const { return arity_; }
    const std::map<MultiIndex, Expr>& terms() const { return terms_; }
    std::size_t support_size() const { return terms_.size(); }
    bool empty() const { return terms_.empty(); }

    static DiffOperator identity(int arity) {
        DiffOperator op(arity);
        op.add_term(MultiIndex::zeros(arity), Expr(1));
        return op;
    }
    static DiffOperator shift(int arity, int i, int direction = 1) {
        DiffOperator op(arity);
        op.add_term(MultiIndex::unit(arity, i, direction), Expr(1));
        return op;
    }
    static DiffOperator multiplication(int arity, Expr f) {
        DiffOperator op(arity);
        op.add_term(MultiIndex::zeros(arity), std::move(f));
        return op;
    }

    /// Accumulates into the coefficient of E^nu.
    void add_term(const MultiIndex& nu, const Expr& coeff) {
        if (nu.size() != arity_) throw Error("DiffOperator: shift arity mismatch");
        if (coeff.is_constant_zero()) return;
        auto it = terms_.find(nu);
        if (it == terms_.end()) {
            terms_.emplace(nu, coeff);
        } else {
            Expr sum = it->second + coeff;
            if (sum.is_constant_zero())
                terms_.erase(it);
            else
                it->second = sum;
        }
    }

    Expr coeff(const MultiIndex& nu) const {
        auto it = terms_.find(nu);
        return it == terms_.end() ? Expr() : it->second;
    }

    friend DiffOperator operator+(const DiffOperator& a, const DiffOperator& b);
    friend DiffOperator operator-(const DiffOperator& a, const DiffOperator& b);
    DiffOperator scaled(const Expr& f) const;

    /// Apply a substitution to every coefficient (shift structure untouched).
    DiffOperator map_coeffs(const Substitution& s) const;

    /// Pad the shift vectors to a larger arity (new trailing coordinates
    /// never shifted); coefficients are unchanged.
    DiffOperator embedded(int new_arity) const;

    /// sum_nu c_nu(x) f(x + nu); f is any callable K(span<const K>).
    template <class K, class Fn>
    K apply(Fn&& f, std::span<const K> point, std::span<const K> params) const {
        Evaluator<K> ev(point, params);
        K acc(0);
        std::vector<K> shifted(point.begin(), point.end());
        for (const auto& [nu, c] : terms_) {
            const K cv = ev(c);
            if (cv.is_zero()) continue;
            for (int i = 0; i < arity_; ++i) shifted[static_cast<std::size_t>(i)] = point[static_cast<std::size_t>(i)] + K(nu[i]);
            acc = acc + cv * f(std::span<const K>(shifted));
        }
        return acc;
    }

    /// Largest parameter index used by any coefficient (-1 if none).
    int max_param_index() const {
        int m = -1;
        for (const auto& [nu, c] : terms_) m = std::max(m, c.max_param_index());
        return m;
    }

    /// Canonical JSON text: arity plus terms sorted by shift vector, each
    /// coefficient as its parenthesized infix string.
    std::string to_json() const;

private:
    int arity_;
    std::map<MultiIndex, Expr> terms_;
};

/// Operator product via E^nu g(x) = g(x + nu) E^nu.
DiffOperator compose(const DiffOperator& L, const DiffOperator& M);

/// LM - ML.
DiffOperator commutator(const DiffOperator& L, const DiffOperator& M);

/// The involution determined by x_i -> -x_i - beta_i and E_i <-> E_i^{-1};
/// beta_i is passed as the expression standing for that parameter. `i` is
/// 1-based to match the usual indexing of the variables.
Expr involute_expr(const Expr& e, int i, const Expr& beta_i);
DiffOperator involution(const DiffOperator& L, int i, const Expr& beta_i);

/// Randomized extensional zero test: draws `trials` pole-free rational
/// points (variables and parameters both randomized, documented SplitMix64
/// sampler) and checks every coefficient vanishes at each. Probabilistic: a
/// nonzero rational function vanishing on all samples is overwhelmingly
/// unlikely, but no degree-bound certificate is claimed. Throws
/// AllPointsPoles when 10 x trials draws all hit poles.
bool is_zero_operator(const DiffOperator& L, int trials, std::uint64_t seed);

} // namespace racah

#endif
