#include "racah/multipoly.hpp"

#include <sstream>

namespace racah {

std::string MultiPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")";
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i]) os << "*x" << (i + 1) << "^" << m[i];
    }
    return os.str();
}

namespace {

/// Newton divided differences -> monomial coefficients, one axis.
std::vector<Rational> univariate_coeffs(const std::vector<Rational>& nodes,
                                        std::vector<Rational> values) {
    const std::size_t n = nodes.size();
    // divided-difference table in place
    for (std::size_t level = 1; level < n; ++level)
        for (std::size_t i = n - 1; i >= level; --i) {
            values[i] = (values[i] - values[i - 1]) / (nodes[i] - nodes[i - level]);
            if (i == level) break;
        }
    // expand Newton form to monomial coefficients
    std::vector<Rational> coeffs(n, Rational(0));
    std::vector<Rational> basis{Rational(1)}; // prod (x - nodes[j])
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t j = 0; j < basis.size(); ++j) coeffs[j] += values[k] * basis[j];
        if (k + 1 < n) {
            basis.push_back(Rational(0));
            for (std::size_t j = basis.size() - 1; j > 0; --j)
                basis[j] = basis[j - 1] - nodes[k] * basis[j];
            basis[0] = -nodes[k] * basis[0];
            // note: basis now = previous * (x - nodes[k])
        }
    }
    return coeffs;
}

} // namespace

MultiPoly interpolate_on_grid(const std::vector<std::vector<Rational>>& nodes,
                              std::span<const Rational> values) {
    const int d = static_cast<int>(nodes.size());
    std::size_t total = 1;
    for (const auto& ax : nodes) total *= ax.size();
    if (values.size() != total) throw Error("interpolate_on_grid: value count mismatch");

    // Axis by axis (last axis first): replace node-indexed slots by monomial
    // coefficients in that axis.
    std::vector<Rational> work(values.begin(), values.end());
    std::size_t block = 1; // elements per fixed prefix in already-processed axes
    for (int axis = d - 1; axis >= 0; --axis) {
        const auto& ax = nodes[static_cast<std::size_t>(axis)];
        const std::size_t n = ax.size();
        const std::size_t stride = block;
        const std::size_t group = n * stride;
        for (std::size_t base = 0; base < work.size(); base += group)
            for (std::size_t off = 0; off < stride; ++off) {
                std::vector<Rational> vals(n);
                for (std::size_t i = 0; i < n; ++i) vals[i] = work[base + i * stride + off];
                auto coeffs = univariate_coeffs(ax, std::move(vals));
                for (std::size_t i = 0; i < n; ++i) work[base + i * stride + off] = coeffs[i];
            }
        block = group;
    }

    MultiPoly out(d);
    std::vector<unsigned> mono(static_cast<std::size_t>(d), 0);
    for (std::size_t flat = 0; flat < work.size(); ++flat) {
        if (work[flat].is_zero()) continue;
        std::size_t rest = flat;
        for (int axis = d - 1; axis >= 0; --axis) {
            const std::size_t n = nodes[static_cast<std::size_t>(axis)].size();
            mono[static_cast<std::size_t>(axis)] = static_cast<unsigned>(rest % n);
            rest /= n;
        }
        out.add_term(mono, work[flat]);
    }
    return out;
}

} // namespace racah
