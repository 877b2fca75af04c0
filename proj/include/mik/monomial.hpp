#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mik {

/// Exponents are arbitrary-precision so long power/colon chains can never
/// overflow silently.
using Exponent = boost::multiprecision::cpp_int;

/// A monomial in a fixed ambient polynomial ring K[x_1..x_n], stored as its
/// exponent vector. Variable indices are 1-based throughout.
class Monomial {
public:
    explicit Monomial(std::size_t ambient)
        : exps_(ambient, Exponent(0)) {
        if (ambient == 0) throw std::invalid_argument("ambient must be positive");
    }

    explicit Monomial(std::vector<Exponent> exps)
        : exps_(std::move(exps)) {
        if (exps_.empty()) throw std::invalid_argument("ambient must be positive");
        for (const auto& e : exps_)
            if (e < 0) throw std::invalid_argument("negative exponent");
    }

    static Monomial unit(std::size_t ambient) { return Monomial(ambient); }

    static Monomial variable(std::size_t ambient, std::size_t i, const Exponent& e = 1) {
        Monomial m(ambient);
        m.check_index(i);
        m.exps_[i - 1] = e;
        return m;
    }

    std::size_t ambient() const { return exps_.size(); }

    const Exponent& exponent(std::size_t i) const {
        check_index(i);
        return exps_[i - 1];
    }

    const std::vector<Exponent>& exponents() const { return exps_; }

    Exponent degree() const {
        return std::accumulate(exps_.begin(), exps_.end(), Exponent(0));
    }

    bool is_unit() const {
        return std::all_of(exps_.begin(), exps_.end(),
                           [](const Exponent& e) { return e == 0; });
    }

    bool is_squarefree() const {
        return std::all_of(exps_.begin(), exps_.end(),
                           [](const Exponent& e) { return e <= 1; });
    }

    /// Indices (1-based) of the variables dividing this monomial.
    std::vector<std::size_t> support() const {
        std::vector<std::size_t> s;
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > 0) s.push_back(i + 1);
        return s;
    }

    bool divides(const Monomial& other) const {
        check_same_ambient(other);
        for (std::size_t i = 0; i < exps_.size(); ++i)
            if (exps_[i] > other.exps_[i]) return false;
        return true;
    }

    Monomial lcm(const Monomial& other) const {
        check_same_ambient(other);
        std::vector<Exponent> e(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i)
            e[i] = std::max(exps_[i], other.exps_[i]);
        return Monomial(std::move(e));
    }

    Monomial gcd(const Monomial& other) const {
        check_same_ambient(other);
        std::vector<Exponent> e(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i)
            e[i] = std::min(exps_[i], other.exps_[i]);
        return Monomial(std::move(e));
    }

    Monomial operator*(const Monomial& other) const {
        check_same_ambient(other);
        std::vector<Exponent> e(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i)
            e[i] = exps_[i] + other.exps_[i];
        return Monomial(std::move(e));
    }

    /// Exact quotient; `other` must divide this monomial.
    Monomial operator/(const Monomial& other) const {
        check_same_ambient(other);
        std::vector<Exponent> e(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (other.exps_[i] > exps_[i])
                throw std::invalid_argument("quotient is not a monomial");
            e[i] = exps_[i] - other.exps_[i];
        }
        return Monomial(std::move(e));
    }

    /// this / gcd(this, other), the generator-wise colon quotient.
    Monomial colon_by(const Monomial& other) const {
        check_same_ambient(other);
        std::vector<Exponent> e(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i)
            e[i] = exps_[i] > other.exps_[i] ? exps_[i] - other.exps_[i] : Exponent(0);
        return Monomial(std::move(e));
    }

    /// Radical: every positive exponent clipped to 1.
    Monomial radical() const {
        std::vector<Exponent> e(exps_.size());
        for (std::size_t i = 0; i < exps_.size(); ++i)
            e[i] = exps_[i] > 0 ? 1 : 0;
        return Monomial(std::move(e));
    }

    /// Set the exponent of x_i to zero (the contraction x_i = 1).
    Monomial without_variable(std::size_t i) const {
        check_index(i);
        std::vector<Exponent> e = exps_;
        e[i - 1] = 0;
        return Monomial(std::move(e));
    }

    bool operator==(const Monomial& other) const { return exps_ == other.exps_; }
    bool operator!=(const Monomial& other) const { return exps_ != other.exps_; }

    /// Canonical order: total degree first, ties by lexicographic comparison
    /// of exponent vectors.
    bool operator<(const Monomial& other) const {
        check_same_ambient(other);
        Exponent d1 = degree(), d2 = other.degree();
        if (d1 != d2) return d1 < d2;
        return exps_ < other.exps_;
    }

    std::string str() const {
        if (is_unit()) return "1";
        std::ostringstream os;
        bool first = true;
        for (std::size_t i = 0; i < exps_.size(); ++i) {
            if (exps_[i] == 0) continue;
            if (!first) os << "*";
            first = false;
            os << "x" << (i + 1);
            if (exps_[i] > 1) os << "^" << exps_[i];
        }
        return os.str();
    }

private:
    void check_index(std::size_t i) const {
        if (i < 1 || i > exps_.size())
            throw std::out_of_range("variable index out of range");
    }

    void check_same_ambient(const Monomial& other) const {
        if (exps_.size() != other.exps_.size())
            throw std::invalid_argument("ambient mismatch");
    }

    std::vector<Exponent> exps_;
};

/// deg_M(u): sum of the exponents of u over the support of the square-free
/// monomial M.
inline Exponent weighted_degree(const Monomial& M, const Monomial& u) {
    if (!M.is_squarefree())
        throw std::invalid_argument("weighted_degree: M must be square-free");
    if (M.ambient() != u.ambient())
        throw std::invalid_argument("ambient mismatch");
    Exponent d = 0;
    for (std::size_t i = 1; i <= M.ambient(); ++i)
        if (M.exponent(i) > 0) d += u.exponent(i);
    return d;
}

}  // namespace mik
