#include "racah/expr.hpp"

#include <functional>
#include <sstream>
#include <unordered_set>

namespace racah {

const std::shared_ptr<const Expr::Node>& Expr::zero_node() {
    static const std::shared_ptr<const Node> z =
        std::make_shared<Node>(Node{Kind::Constant, -1, Rational(0), nullptr, nullptr});
    return z;
}

std::shared_ptr<const Expr::Node> Expr::make(Kind k, int index, Rational value,
                                             std::shared_ptr<const Node> a,
                                             std::shared_ptr<const Node> b) {
    return std::make_shared<Node>(Node{k, index, std::move(value), std::move(a), std::move(b)});
}

Expr Expr::constant(Rational v) {
    if (v.is_zero()) return Expr(zero_node());
    return Expr(make(Kind::Constant, -1, std::move(v), nullptr, nullptr));
}

Expr Expr::var(int i) {
    if (i < 0) throw Error("Expr: negative variable index");
    return Expr(make(Kind::Var, i, Rational(0), nullptr, nullptr));
}

Expr Expr::param(int i) {
    if (i < 0) throw Error("Expr: negative parameter index");
    return Expr(make(Kind::Param, i, Rational(0), nullptr, nullptr));
}

Expr Expr::limit_var() { return Expr(make(Kind::LimitVar, -1, Rational(0), nullptr, nullptr)); }

// constant folding only; no other rewriting
Expr operator+(const Expr& a, const Expr& b) {
    if (a.is_constant() && b.is_constant()) return Expr::constant(a.constant_value() + b.constant_value());
    if (a.is_constant_zero()) return b;
    if (b.is_constant_zero()) return a;
    return Expr(Expr::make(Expr::Kind::Sum, -1, Rational(0), a.node_, b.node_));
}

Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

Expr operator*(const Expr& a, const Expr& b) {
    if (a.is_constant() && b.is_constant()) return Expr::constant(a.constant_value() * b.constant_value());
    if (a.is_constant_zero() || b.is_constant_zero()) return Expr();
    if (a.is_constant() && a.constant_value().is_one()) return b;
    if (b.is_constant() && b.constant_value().is_one()) return a;
    return Expr(Expr::make(Expr::Kind::Product, -1, Rational(0), a.node_, b.node_));
}

Expr operator/(const Expr& a, const Expr& b) {
    if (b.is_constant()) {
        if (b.constant_value().is_zero()) throw Error("Expr: structural division by zero");
        if (a.is_constant()) return Expr::constant(a.constant_value() / b.constant_value());
        if (b.constant_value().is_one()) return a;
    }
    if (a.is_constant_zero()) return Expr();
    return Expr(Expr::make(Expr::Kind::Quotient, -1, Rational(0), a.node_, b.node_));
}

Expr Expr::operator-() const {
    if (is_constant()) return constant(-constant_value());
    if (node_->kind == Kind::Negate) return Expr(node_->a);
    return Expr(make(Kind::Negate, -1, Rational(0), node_, nullptr));
}

namespace {

void scan(const Expr::Node* n, std::unordered_set<const Expr::Node*>& seen, int& max_var,
          int& max_param, bool& uses_t) {
    if (!n || !seen.insert(n).second) return;
    switch (n->kind) {
        case Expr::Kind::Var: max_var = std::max(max_var, n->index); break;
        case Expr::Kind::Param: max_param = std::max(max_param, n->index); break;
        case Expr::Kind::LimitVar: uses_t = true; break;
        default: break;
    }
    scan(n->a.get(), seen, max_var, max_param, uses_t);
    scan(n->b.get(), seen, max_var, max_param, uses_t);
}

struct ScanResult {
    int max_var = -1, max_param = -1;
    bool uses_t = false;
};

ScanResult scan_all(const Expr::Node* n) {
    ScanResult r;
    std::unordered_set<const Expr::Node*> seen;
    scan(n, seen, r.max_var, r.max_param, r.uses_t);
    return r;
}

void print(const Expr::Node* n, std::ostringstream& os) {
    switch (n->kind) {
        case Expr::Kind::Constant: os << n->value.str(); return;
        case Expr::Kind::Var: os << "x" << (n->index + 1); return;
        case Expr::Kind::Param: os << "a" << n->index; return;
        case Expr::Kind::LimitVar: os << "t"; return;
        case Expr::Kind::Sum:
            os << "(";
            print(n->a.get(), os);
            os << " + ";
            print(n->b.get(), os);
            os << ")";
            return;
        case Expr::Kind::Product:
            os << "(";
            print(n->a.get(), os);
            os << " * ";
            print(n->b.get(), os);
            os << ")";
            return;
        case Expr::Kind::Quotient:
            os << "(";
            print(n->a.get(), os);
            os << " / ";
            print(n->b.get(), os);
            os << ")";
            return;
        case Expr::Kind::Negate:
            os << "(-";
            print(n->a.get(), os);
            os << ")";
            return;
    }
}

} // namespace

int Expr::max_var_index() const { return scan_all(node_.get()).max_var; }
int Expr::max_param_index() const { return scan_all(node_.get()).max_param; }
bool Expr::uses_limit_var() const { return scan_all(node_.get()).uses_t; }

std::string Expr::str() const {
    std::ostringstream os;
    print(node_.get(), os);
    return os.str();
}

Substitution& Substitution::map_var(int i, Expr e) {
    vars_.insert_or_assign(i, std::move(e));
    return *this;
}

Substitution& Substitution::map_param(int i, Expr e) {
    params_.insert_or_assign(i, std::move(e));
    return *this;
}

Substitution& Substitution::map_limit(Expr e) {
    limit_ = std::move(e);
    return *this;
}

Substitution Substitution::shift_var(int i, const Rational& c) {
    Substitution s;
    s.map_var(i, Expr::var(i) + Expr::constant(c));
    return s;
}

Expr Substitution::operator()(const Expr& e) const {
    std::unordered_map<const Expr::Node*, Expr> memo;
    return apply(e.node_, memo);
}

Expr Substitution::apply(const std::shared_ptr<const Expr::Node>& n,
                         std::unordered_map<const Expr::Node*, Expr>& memo) const {
    if (auto it = memo.find(n.get()); it != memo.end()) return it->second;
    Expr out = Expr(n);
    switch (n->kind) {
        case Expr::Kind::Constant: break;
        case Expr::Kind::Var:
            if (auto it = vars_.find(n->index); it != vars_.end()) out = it->second;
            break;
        case Expr::Kind::Param:
            if (auto it = params_.find(n->index); it != params_.end()) out = it->second;
            break;
        case Expr::Kind::LimitVar:
            if (limit_) out = *limit_;
            break;
        case Expr::Kind::Negate: {
            const Expr a = apply(n->a, memo);
            if (a.node_ != n->a) out = -a;
            break;
        }
        case Expr::Kind::Sum:
        case Expr::Kind::Product:
        case Expr::Kind::Quotient: {
            const Expr a = apply(n->a, memo);
            const Expr b = apply(n->b, memo);
            if (a.node_ != n->a || b.node_ != n->b) {
                if (n->kind == Expr::Kind::Sum) out = a + b;
                else if (n->kind == Expr::Kind::Product) out = a * b;
                else out = a / b;
            }
            break;
        }
    }
    memo.emplace(n.get(), out);
    return out;
}

} // namespace racah
