#ifndef RACAH_EXPR_HPP
#define RACAH_EXPR_HPP

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

#include "racah/errors.hpp"
#include "racah/rational.hpp"

namespace racah {

/// Immutable expression tree over lattice variables, parameter symbols and an
/// optional limit indeterminate t. This is the coefficient language of the
/// difference operators. Nodes beyond constant folding are never simplified;
/// extensional equality is decided by randomized evaluation elsewhere.
class Expr {
public:
    enum class Kind : std::uint8_t { Constant, Var, Param, LimitVar, Sum, Product, Quotient, Negate };

    struct Node {
        Kind kind;
        int index = -1;   // Var / Param slot
        Rational value;   // Constant payload
        std::shared_ptr<const Node> a, b;
    };

    Expr() : node_(zero_node()) {}
    Expr(long v) : Expr(constant(Rational(v))) {}

    static Expr constant(Rational v);
    static Expr var(int i);
    static Expr param(int i);
    static Expr limit_var();

    Kind kind() const { return node_->kind; }
    const Node* node() const { return node_.get(); }
    const std::shared_ptr<const Node>& node_ref() const { return node_; }
    bool is_constant() const { return node_->kind == Kind::Constant; }
    bool is_constant_zero() const { return is_constant() && node_->value.is_zero(); }
    const Rational& constant_value() const { return node_->value; }

    friend Expr operator+(const Expr& a, const Expr& b);
    friend Expr operator-(const Expr& a, const Expr& b);
    friend Expr operator*(const Expr& a, const Expr& b);
    friend Expr operator/(const Expr& a, const Expr& b);
    Expr operator-() const;

    /// Largest var / param index appearing (-1 when none); whether t appears.
    int max_var_index() const;
    int max_param_index() const;
    bool uses_limit_var() const;

    /// Canonical fully parenthesized infix form, stable across runs.
    std::string str() const;

private:
    explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    static const std::shared_ptr<const Node>& zero_node();
    static std::shared_ptr<const Node> make(Kind k, int index, Rational value,
                                            std::shared_ptr<const Node> a,
                                            std::shared_ptr<const Node> b);
    friend class Substitution;
    std::shared_ptr<const Node> node_;
};

/// Structural substitution var/param/limit -> Expr; unmapped symbols pass
/// through. Shares untouched subtrees with the input.
class Substitution {
public:
    Substitution& map_var(int i, Expr e);
    Substitution& map_param(int i, Expr e);
    Substitution& map_limit(Expr e);

    /// x_i -> x_i + c for one variable.
    static Substitution shift_var(int i, const Rational& c);

    Expr operator()(const Expr& e) const;

private:
    Expr apply(const std::shared_ptr<const Expr::Node>& n,
               std::unordered_map<const Expr::Node*, Expr>& memo) const;
    std::unordered_map<int, Expr> vars_;
    std::unordered_map<int, Expr> params_;
    std::optional<Expr> limit_;
};

/// Evaluation context: values for variables and parameters over an exact
/// field K, plus the value standing for the limit indeterminate (usually the
/// indeterminate of a UniRatFun tower). Evaluation is memoized over the node
/// DAG so shared subtrees are computed once per point.
template <class K>
class Evaluator {
public:
    Evaluator(std::span<const K> vars, std::span<const K> params)
        : vars_(vars), params_(params) {}
    Evaluator(std::span<const K> vars, std::span<const K> params, K limit_value)
        : vars_(vars), params_(params), limit_(std::move(limit_value)) {}

    K operator()(const Expr& e) { return eval(e.node_ref()); }

    /// Reuses the memo across coefficients of one operator at one point.
    void reset() { memo_.clear(); }

private:
    using NodePtr = std::shared_ptr<const Expr::Node>;

    // The memo holds shared ownership of every visited node: expression trees
    // handed in may be dropped by the caller between calls, and keying on a
    // dangling address would silently return stale values otherwise.
    const K& eval(const NodePtr& n) {
        if (auto it = memo_.find(n); it != memo_.end()) return it->second;
        K v = compute(*n);
        return memo_.emplace(n, std::move(v)).first->second;
    }

    K compute(const Expr::Node& n) {
        switch (n.kind) {
            case Expr::Kind::Constant:
                return K(n.value);
            case Expr::Kind::Var:
                if (n.index < 0 || static_cast<std::size_t>(n.index) >= vars_.size())
                    throw Error("Expr: variable x" + std::to_string(n.index + 1) + " has no value");
                return vars_[static_cast<std::size_t>(n.index)];
            case Expr::Kind::Param:
                if (n.index < 0 || static_cast<std::size_t>(n.index) >= params_.size())
                    throw Error("Expr: parameter #" + std::to_string(n.index) + " has no value");
                return params_[static_cast<std::size_t>(n.index)];
            case Expr::Kind::LimitVar:
                if (!limit_) throw Error("Expr: limit indeterminate has no value in this context");
                return *limit_;
            case Expr::Kind::Sum:
                return eval(n.a) + eval(n.b);
            case Expr::Kind::Product:
                return eval(n.a) * eval(n.b);
            case Expr::Kind::Quotient: {
                const K den = eval(n.b);
                if (den.is_zero()) throw PoleAtPoint("Expr: coefficient denominator vanished");
                return eval(n.a) / den;
            }
            case Expr::Kind::Negate:
                return -eval(n.a);
        }
        throw Error("Expr: corrupt node");
    }

    std::span<const K> vars_;
    std::span<const K> params_;
    std::optional<K> limit_;
    std::unordered_map<NodePtr, K> memo_;
};

/// One-shot evaluation helper.
template <class K>
K eval_expr(const Expr& e, std::span<const K> vars, std::span<const K> params) {
    Evaluator<K> ev(vars, params);
    return ev(e);
}

} // namespace racah

#endif
