#pragma once

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "mik/ideal.hpp"

namespace mik {

/// A monomial prime ideal, i.e. an ideal generated by a nonempty subset of
/// the variables.  Height equals the number of variables.
class VarPrime {
public:
    VarPrime(std::size_t ambient, std::vector<std::size_t> vars)
        : ambient_(ambient), vars_(std::move(vars)) {
        if (vars_.empty())
            throw std::invalid_argument("VarPrime: the zero prime is excluded");
        std::sort(vars_.begin(), vars_.end());
        vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
        for (auto v : vars_)
            if (v < 1 || v > ambient_)
                throw std::out_of_range("variable index out of range");
    }

    std::size_t ambient() const { return ambient_; }
    const std::vector<std::size_t>& vars() const { return vars_; }
    std::size_t height() const { return vars_.size(); }

    bool contains_var(std::size_t i) const {
        return std::binary_search(vars_.begin(), vars_.end(), i);
    }

    /// Membership of a monomial in p^k: the total degree of m over the
    /// variables of p must be at least k.
    bool power_contains(unsigned k, const Monomial& m) const {
        Exponent d = 0;
        for (auto v : vars_) {
            d += m.exponent(v);
            if (d >= k) return true;
        }
        return d >= k;
    }

    MonomialIdeal to_ideal() const {
        std::vector<Monomial> gens;
        gens.reserve(vars_.size());
        for (auto v : vars_) gens.push_back(Monomial::variable(ambient_, v));
        return MonomialIdeal::make(ambient_, std::move(gens));
    }

    /// p^k as a canonical ideal: all degree-k monomials in the variables of p.
    MonomialIdeal power_ideal(unsigned k) const {
        if (k == 0) return MonomialIdeal::whole_ring(ambient_);
        std::vector<Monomial> gens;
        std::vector<Exponent> exps(ambient_, Exponent(0));
        build_power(0, k, exps, gens);
        return MonomialIdeal::make(ambient_, std::move(gens));
    }

    bool operator==(const VarPrime& other) const {
        return ambient_ == other.ambient_ && vars_ == other.vars_;
    }
    bool operator!=(const VarPrime& other) const { return !(*this == other); }

    /// Canonical order: height first, then lexicographic on variable sets.
    bool operator<(const VarPrime& other) const {
        if (vars_.size() != other.vars_.size())
            return vars_.size() < other.vars_.size();
        return vars_ < other.vars_;
    }

    bool strictly_contains(const VarPrime& other) const {
        return vars_.size() > other.vars_.size() &&
               std::includes(vars_.begin(), vars_.end(),
                             other.vars_.begin(), other.vars_.end());
    }

    bool contains_prime(const VarPrime& other) const {
        return std::includes(vars_.begin(), vars_.end(),
                             other.vars_.begin(), other.vars_.end());
    }

    std::string str() const {
        std::ostringstream os;
        os << "(";
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            if (i) os << ",";
            os << "x" << vars_[i];
        }
        os << ")";
        return os.str();
    }

private:
    void build_power(std::size_t pos, unsigned remaining,
                     std::vector<Exponent>& exps,
                     std::vector<Monomial>& out) const {
        if (pos + 1 == vars_.size()) {
            exps[vars_[pos] - 1] = remaining;
            out.push_back(Monomial(exps));
            exps[vars_[pos] - 1] = 0;
            return;
        }
        for (unsigned e = 0; e <= remaining; ++e) {
            exps[vars_[pos] - 1] = e;
            build_power(pos + 1, remaining - e, exps, out);
        }
        exps[vars_[pos] - 1] = 0;
    }

    std::size_t ambient_;
    std::vector<std::size_t> vars_;
};

/// A duplicate-free, canonically ordered set of monomial primes.
class PrimeSet {
public:
    PrimeSet() = default;

    explicit PrimeSet(std::vector<VarPrime> primes) : primes_(std::move(primes)) {
        std::sort(primes_.begin(), primes_.end());
        primes_.erase(std::unique(primes_.begin(), primes_.end()), primes_.end());
    }

    const std::vector<VarPrime>& primes() const { return primes_; }
    std::size_t size() const { return primes_.size(); }
    bool empty() const { return primes_.empty(); }

    bool contains(const VarPrime& p) const {
        return std::binary_search(primes_.begin(), primes_.end(), p);
    }

    bool subset_of(const PrimeSet& other) const {
        return std::all_of(primes_.begin(), primes_.end(),
                           [&](const VarPrime& p) { return other.contains(p); });
    }

    /// Primes of this set absent from `other`, in canonical order.
    std::vector<VarPrime> difference(const PrimeSet& other) const {
        std::vector<VarPrime> out;
        for (const auto& p : primes_)
            if (!other.contains(p)) out.push_back(p);
        return out;
    }

    /// Inclusion-minimal members.
    PrimeSet minimal_elements() const {
        std::vector<VarPrime> out;
        for (const auto& p : primes_) {
            bool minimal = std::none_of(primes_.begin(), primes_.end(),
                                        [&](const VarPrime& q) {
                                            return p.strictly_contains(q);
                                        });
            if (minimal) out.push_back(p);
        }
        return PrimeSet(std::move(out));
    }

    bool operator==(const PrimeSet& other) const { return primes_ == other.primes_; }
    bool operator!=(const PrimeSet& other) const { return primes_ != other.primes_; }

    std::string str() const {
        std::ostringstream os;
        os << "{";
        for (std::size_t i = 0; i < primes_.size(); ++i) {
            if (i) os << ", ";
            os << primes_[i].str();
        }
        os << "}";
        return os.str();
    }

private:
    std::vector<VarPrime> primes_;
};

}  // namespace mik
