#pragma once

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "mik/monomial.hpp"

namespace mik {

/// A monomial ideal held in canonical form: the unique minimal generating
/// set, sorted by total degree then lexicographically.  The zero ideal has no
/// generators; the unit ideal is generated by 1.  Values are immutable.
class MonomialIdeal {
public:
    static MonomialIdeal zero(std::size_t ambient) {
        return MonomialIdeal(ambient, {});
    }

    static MonomialIdeal whole_ring(std::size_t ambient) {
        return MonomialIdeal(ambient, {Monomial::unit(ambient)});
    }

    /// Canonicalize an arbitrary generating set: drop duplicates and every
    /// monomial divisible by another, then sort.
    static MonomialIdeal make(std::size_t ambient, std::vector<Monomial> gens) {
        for (const auto& g : gens)
            if (g.ambient() != ambient)
                throw std::invalid_argument("ambient mismatch");
        return MonomialIdeal(ambient, minimalize_list(std::move(gens)));
    }

    std::size_t ambient() const { return ambient_; }
    const std::vector<Monomial>& generators() const { return gens_; }

    bool is_zero() const { return gens_.empty(); }
    bool is_whole_ring() const { return gens_.size() == 1 && gens_[0].is_unit(); }
    bool is_proper() const { return !is_whole_ring(); }

    bool is_squarefree() const {
        return std::all_of(gens_.begin(), gens_.end(),
                           [](const Monomial& g) { return g.is_squarefree(); });
    }

    /// Membership: some generator divides v.  The zero ideal contains
    /// nothing; the unit ideal contains everything.
    bool contains(const Monomial& v) const {
        if (v.ambient() != ambient_)
            throw std::invalid_argument("ambient mismatch");
        return std::any_of(gens_.begin(), gens_.end(),
                           [&](const Monomial& g) { return g.divides(v); });
    }

    bool contains(const MonomialIdeal& other) const {
        if (other.ambient() != ambient_)
            throw std::invalid_argument("ambient mismatch");
        return std::all_of(other.gens_.begin(), other.gens_.end(),
                           [&](const Monomial& g) { return contains(g); });
    }

    /// Equality of canonical forms.
    bool operator==(const MonomialIdeal& other) const {
        if (ambient_ != other.ambient_)
            throw std::invalid_argument("ambient mismatch");
        return gens_ == other.gens_;
    }
    bool operator!=(const MonomialIdeal& other) const { return !(*this == other); }

    /// Componentwise lcm of all generators (unit for the zero ideal).
    Monomial generator_lcm() const {
        Monomial l = Monomial::unit(ambient_);
        for (const auto& g : gens_) l = l.lcm(g);
        return l;
    }

    /// Variables occurring in some generator.
    std::vector<std::size_t> support() const {
        return generator_lcm().support();
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::ostringstream os;
        for (std::size_t i = 0; i < gens_.size(); ++i) {
            if (i) os << ", ";
            os << gens_[i].str();
        }
        return os.str();
    }

    static std::vector<Monomial> minimalize_list(std::vector<Monomial> ms) {
        std::sort(ms.begin(), ms.end());
        ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
        // Sorted by degree, so a proper divisor always precedes its multiples.
        std::vector<Monomial> kept;
        for (const auto& m : ms) {
            bool divisible = std::any_of(kept.begin(), kept.end(),
                                         [&](const Monomial& k) { return k.divides(m); });
            if (!divisible) kept.push_back(m);
        }
        return kept;
    }

private:
    MonomialIdeal(std::size_t ambient, std::vector<Monomial> gens)
        : ambient_(ambient), gens_(std::move(gens)) {
        if (ambient_ == 0) throw std::invalid_argument("ambient must be positive");
    }

    std::size_t ambient_;
    std::vector<Monomial> gens_;
};

inline MonomialIdeal ideal_sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.ambient() != J.ambient())
        throw std::invalid_argument("ambient mismatch");
    std::vector<Monomial> gens = I.generators();
    gens.insert(gens.end(), J.generators().begin(), J.generators().end());
    return MonomialIdeal::make(I.ambient(), std::move(gens));
}

inline MonomialIdeal ideal_product(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.ambient() != J.ambient())
        throw std::invalid_argument("ambient mismatch");
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size() * J.generators().size());
    for (const auto& a : I.generators())
        for (const auto& b : J.generators())
            gens.push_back(a * b);
    return MonomialIdeal::make(I.ambient(), std::move(gens));
}

inline MonomialIdeal scale(const Monomial& h, const MonomialIdeal& I) {
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(h * g);
    return MonomialIdeal::make(I.ambient(), std::move(gens));
}

inline MonomialIdeal ideal_power(const MonomialIdeal& I, unsigned k) {
    MonomialIdeal result = MonomialIdeal::whole_ring(I.ambient());
    for (unsigned step = 0; step < k; ++step) result = ideal_product(result, I);
    return result;
}

inline MonomialIdeal ideal_intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.ambient() != J.ambient())
        throw std::invalid_argument("ambient mismatch");
    if (I.is_whole_ring()) return J;
    if (J.is_whole_ring()) return I;
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size() * J.generators().size());
    for (const auto& a : I.generators())
        for (const auto& b : J.generators())
            gens.push_back(a.lcm(b));
    return MonomialIdeal::make(I.ambient(), std::move(gens));
}

inline MonomialIdeal colon(const MonomialIdeal& I, const Monomial& v) {
    if (I.ambient() != v.ambient())
        throw std::invalid_argument("ambient mismatch");
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(g.colon_by(v));
    return MonomialIdeal::make(I.ambient(), std::move(gens));
}

inline MonomialIdeal colon(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.ambient() != J.ambient())
        throw std::invalid_argument("ambient mismatch");
    if (J.is_zero())
        throw std::invalid_argument("colon by the zero ideal is undefined");
    MonomialIdeal result = MonomialIdeal::whole_ring(I.ambient());
    for (const auto& v : J.generators())
        result = ideal_intersect(result, colon(I, v));
    return result;
}

/// Set x_i = 0: drop every generator divisible by x_i.  Ambient unchanged;
/// the result may be the zero ideal.
inline MonomialIdeal deletion(const MonomialIdeal& I, std::size_t i) {
    if (i < 1 || i > I.ambient())
        throw std::out_of_range("variable index out of range");
    std::vector<Monomial> gens;
    for (const auto& g : I.generators())
        if (g.exponent(i) == 0) gens.push_back(g);
    return MonomialIdeal::make(I.ambient(), std::move(gens));
}

/// Set x_i = 1 in every generator, then minimalize.
inline MonomialIdeal contraction(const MonomialIdeal& I, std::size_t i) {
    if (i < 1 || i > I.ambient())
        throw std::out_of_range("variable index out of range");
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(g.without_variable(i));
    return MonomialIdeal::make(I.ambient(), std::move(gens));
}

/// Factor out the gcd h of all generators: I = h * I' with gcd(G(I')) = 1.
inline std::pair<Monomial, MonomialIdeal> strip_common_factor(const MonomialIdeal& I) {
    if (I.is_zero())
        throw std::invalid_argument("strip_common_factor: zero ideal");
    Monomial h = I.generators()[0];
    for (const auto& g : I.generators()) h = h.gcd(g);
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(g / h);
    return {h, MonomialIdeal::make(I.ambient(), std::move(gens))};
}

}  // namespace mik
