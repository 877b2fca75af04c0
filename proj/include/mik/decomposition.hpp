#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "mik/ideal.hpp"
#include "mik/prime.hpp"

namespace mik {

/// An irreducible monomial ideal (x_{i1}^{a1}, ..., x_{ir}^{ar}), one pure
/// power per variable, at least one entry.
class IrreducibleComponent {
public:
    IrreducibleComponent(std::size_t ambient,
                         std::vector<std::pair<std::size_t, Exponent>> powers)
        : ambient_(ambient), powers_(std::move(powers)) {
        if (powers_.empty())
            throw std::invalid_argument("component needs at least one entry");
        std::sort(powers_.begin(), powers_.end());
        for (std::size_t i = 1; i < powers_.size(); ++i)
            if (powers_[i].first == powers_[i - 1].first)
                throw std::invalid_argument("duplicate variable in component");
        for (const auto& [v, a] : powers_) {
            if (v < 1 || v > ambient_) throw std::out_of_range("variable index");
            if (a < 1) throw std::invalid_argument("exponent must be positive");
        }
    }

    std::size_t ambient() const { return ambient_; }
    const std::vector<std::pair<std::size_t, Exponent>>& powers() const {
        return powers_;
    }

    bool contains(const Monomial& m) const {
        for (const auto& [v, a] : powers_)
            if (m.exponent(v) >= a) return true;
        return false;
    }

    bool contains(const MonomialIdeal& K) const {
        return std::all_of(K.generators().begin(), K.generators().end(),
                           [&](const Monomial& g) { return contains(g); });
    }

    /// C1 <= C2 (as ideals) iff every generator x_v^a of C1 lies in C2,
    /// i.e. C2 has an entry (v, b) with b <= a.
    bool subset_of(const IrreducibleComponent& other) const {
        for (const auto& [v, a] : powers_) {
            auto it = std::lower_bound(
                other.powers_.begin(), other.powers_.end(), v,
                [](const auto& entry, std::size_t var) { return entry.first < var; });
            if (it == other.powers_.end() || it->first != v || it->second > a)
                return false;
        }
        return true;
    }

    MonomialIdeal to_ideal() const {
        std::vector<Monomial> gens;
        gens.reserve(powers_.size());
        for (const auto& [v, a] : powers_)
            gens.push_back(Monomial::variable(ambient_, v, a));
        return MonomialIdeal::make(ambient_, std::move(gens));
    }

    VarPrime radical() const {
        std::vector<std::size_t> vars;
        vars.reserve(powers_.size());
        for (const auto& [v, a] : powers_) vars.push_back(v);
        return VarPrime(ambient_, std::move(vars));
    }

    bool operator==(const IrreducibleComponent& other) const {
        return ambient_ == other.ambient_ && powers_ == other.powers_;
    }

    bool operator<(const IrreducibleComponent& other) const {
        return powers_ < other.powers_;
    }

private:
    std::size_t ambient_;
    std::vector<std::pair<std::size_t, Exponent>> powers_;
};

namespace detail {

inline void decompose_split(const MonomialIdeal& J,
                            std::unordered_map<std::string,
                                               std::vector<IrreducibleComponent>>& memo,
                            std::vector<IrreducibleComponent>& out) {
    const std::string key = J.str();
    if (auto it = memo.find(key); it != memo.end()) {
        out.insert(out.end(), it->second.begin(), it->second.end());
        return;
    }

    // First mixed generator, in canonical order.
    const Monomial* mixed = nullptr;
    for (const auto& g : J.generators()) {
        if (g.support().size() >= 2) {
            mixed = &g;
            break;
        }
    }

    std::vector<IrreducibleComponent> result;
    if (mixed == nullptr) {
        // Every generator is a pure power: the ideal is itself irreducible.
        std::vector<std::pair<std::size_t, Exponent>> powers;
        for (const auto& g : J.generators()) {
            auto supp = g.support();
            powers.emplace_back(supp[0], g.exponent(supp[0]));
        }
        result.emplace_back(J.ambient(), std::move(powers));
    } else {
        // Split x_i^b * w into the branches (..., x_i^b, ...) and (..., w, ...),
        // choosing the highest-exponent variable of the generator.
        auto supp = mixed->support();
        std::size_t var = supp[0];
        for (auto v : supp)
            if (mixed->exponent(v) > mixed->exponent(var)) var = v;
        const Exponent& b = mixed->exponent(var);

        std::vector<Monomial> gens1, gens2;
        for (const auto& g : J.generators()) {
            if (g == *mixed) continue;
            gens1.push_back(g);
            gens2.push_back(g);
        }
        gens1.push_back(Monomial::variable(J.ambient(), var, b));
        gens2.push_back(mixed->without_variable(var));

        decompose_split(MonomialIdeal::make(J.ambient(), std::move(gens1)), memo, result);
        decompose_split(MonomialIdeal::make(J.ambient(), std::move(gens2)), memo, result);
        std::sort(result.begin(), result.end());
        result.erase(std::unique(result.begin(), result.end()), result.end());
    }

    out.insert(out.end(), result.begin(), result.end());
    memo.emplace(key, std::move(result));
}

// Assumes comps is duplicate-free: a component containing another is
// always redundant.
inline void drop_comparable(std::vector<IrreducibleComponent>& comps) {
    std::vector<IrreducibleComponent> kept;
    for (std::size_t i = 0; i < comps.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < comps.size() && !redundant; ++j)
            if (i != j && comps[j].subset_of(comps[i])) redundant = true;
        if (!redundant) kept.push_back(comps[i]);
    }
    comps.swap(kept);
}

}  // namespace detail

/// Irredundant irreducible decomposition: components intersect to J exactly
/// and none can be dropped.
inline std::vector<IrreducibleComponent> irreducible_decomposition(
    const MonomialIdeal& J) {
    if (J.is_zero() || J.is_whole_ring())
        throw std::invalid_argument("decomposition needs a nonzero proper ideal");

    std::unordered_map<std::string, std::vector<IrreducibleComponent>> memo;
    std::vector<IrreducibleComponent> comps;
    detail::decompose_split(J, memo, comps);
    std::sort(comps.begin(), comps.end());
    comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
    detail::drop_comparable(comps);

    // Exact irredundancy: drop any component containing the intersection of
    // the others.  Removing one at a time keeps the check sound.
    bool changed = true;
    while (changed && comps.size() > 1) {
        changed = false;
        std::size_t m = comps.size();
        std::vector<MonomialIdeal> prefix, suffix;
        prefix.reserve(m + 1);
        suffix.assign(m + 1, MonomialIdeal::whole_ring(J.ambient()));
        prefix.push_back(MonomialIdeal::whole_ring(J.ambient()));
        for (std::size_t i = 0; i < m; ++i)
            prefix.push_back(ideal_intersect(prefix[i], comps[i].to_ideal()));
        for (std::size_t i = m; i-- > 0;)
            suffix[i] = ideal_intersect(suffix[i + 1], comps[i].to_ideal());
        for (std::size_t i = 0; i < m; ++i) {
            MonomialIdeal others = ideal_intersect(prefix[i], suffix[i + 1]);
            if (comps[i].contains(others)) {
                comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
                changed = true;
                break;
            }
        }
    }
    return comps;
}

/// Ass(R/J) as radicals of the irredundant irreducible components.
inline PrimeSet associated_primes(const MonomialIdeal& J) {
    auto comps = irreducible_decomposition(J);
    std::vector<VarPrime> primes;
    primes.reserve(comps.size());
    for (const auto& c : comps) primes.push_back(c.radical());
    return PrimeSet(std::move(primes));
}

/// Independent second algorithm for Ass, used for cross-validation: a subset
/// S of variables is associated iff, after contracting everything outside S,
/// some monomial v over S has v not in J_S but v*x_i in J_S for all i in S.
/// Witnesses are searched among divisors of lcm(G(J_S)).
inline PrimeSet ass_witness_oracle(const MonomialIdeal& J) {
    if (J.is_zero() || J.is_whole_ring())
        throw std::invalid_argument("ass_witness_oracle needs a nonzero proper ideal");
    const std::size_t n = J.ambient();
    if (n > 20) throw std::invalid_argument("ambient too large for subset sweep");

    std::vector<VarPrime> found;
    for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
        std::vector<std::size_t> vars;
        for (std::size_t i = 1; i <= n; ++i)
            if (mask & (std::size_t{1} << (i - 1))) vars.push_back(i);

        MonomialIdeal JS = J;
        for (std::size_t i = 1; i <= n; ++i)
            if (!(mask & (std::size_t{1} << (i - 1)))) JS = contraction(JS, i);
        if (JS.is_zero() || JS.is_whole_ring()) continue;

        Monomial bound = JS.generator_lcm();
        // Enumerate v dividing the lcm, supported on S.
        std::vector<Exponent> exps(n, Exponent(0));
        bool witness = false;
        std::function<void(std::size_t)> search = [&](std::size_t pos) {
            if (witness) return;
            if (pos == vars.size()) {
                Monomial v{exps};
                if (JS.contains(v)) return;
                for (auto i : vars)
                    if (!JS.contains(v * Monomial::variable(n, i))) return;
                witness = true;
                return;
            }
            std::size_t var = vars[pos];
            for (Exponent e = 0; e <= bound.exponent(var) && !witness; ++e) {
                exps[var - 1] = e;
                search(pos + 1);
            }
            exps[var - 1] = 0;
        };
        search(0);
        if (witness) found.emplace_back(n, vars);
    }
    return PrimeSet(std::move(found));
}

inline MonomialIdeal radical(const MonomialIdeal& I) {
    std::vector<Monomial> gens;
    gens.reserve(I.generators().size());
    for (const auto& g : I.generators()) gens.push_back(g.radical());
    return MonomialIdeal::make(I.ambient(), std::move(gens));
}

inline PrimeSet minimal_primes(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_whole_ring())
        throw std::invalid_argument("minimal_primes needs a nonzero proper ideal");
    return associated_primes(radical(I)).minimal_elements();
}

/// I^(k) for square-free I: the intersection of p^k over the minimal primes.
inline MonomialIdeal symbolic_power(const MonomialIdeal& I, unsigned k) {
    if (!I.is_squarefree())
        throw std::invalid_argument("symbolic_power needs a square-free ideal");
    if (I.is_zero() || I.is_whole_ring())
        throw std::invalid_argument("symbolic_power needs a nonzero proper ideal");
    if (k < 1) throw std::invalid_argument("power must be positive");
    MonomialIdeal result = MonomialIdeal::whole_ring(I.ambient());
    PrimeSet min_primes = minimal_primes(I);
    for (const auto& p : min_primes.primes())
        result = ideal_intersect(result, p.power_ideal(k));
    return result;
}

/// The cover ideal: one square-free generator per minimal prime.
inline MonomialIdeal alexander_dual(const MonomialIdeal& I) {
    if (!I.is_squarefree())
        throw std::invalid_argument("alexander_dual needs a square-free ideal");
    if (I.is_zero() || I.is_whole_ring())
        throw std::invalid_argument("alexander_dual needs a nonzero proper ideal");
    std::vector<Monomial> gens;
    PrimeSet min_primes = minimal_primes(I);
    for (const auto& p : min_primes.primes()) {
        Monomial m = Monomial::unit(I.ambient());
        for (auto v : p.vars()) m = m * Monomial::variable(I.ambient(), v);
        gens.push_back(m);
    }
    return MonomialIdeal::make(I.ambient(), std::move(gens));
}

struct HeightProfile {
    std::vector<std::size_t> heights;  // sorted, one per minimal prime
    bool unmixed = false;
};

inline HeightProfile height_and_unmixed(const MonomialIdeal& I) {
    HeightProfile hp;
    PrimeSet min_primes = minimal_primes(I);
    for (const auto& p : min_primes.primes())
        hp.heights.push_back(p.height());
    std::sort(hp.heights.begin(), hp.heights.end());
    hp.unmixed = std::adjacent_find(hp.heights.begin(), hp.heights.end(),
                                    std::not_equal_to<>()) == hp.heights.end();
    return hp;
}

struct IndependenceResult {
    std::size_t value = 0;
    std::vector<Monomial> witness;  // pairwise-coprime generators
};

/// beta_1: maximum set of pairwise-coprime minimal generators, by exhaustive
/// backtracking.
inline IndependenceResult beta1(const MonomialIdeal& I) {
    if (!I.is_squarefree())
        throw std::invalid_argument("beta1 needs a square-free ideal");
    if (I.is_zero() || I.is_whole_ring())
        throw std::invalid_argument("beta1 needs a nonzero proper ideal");

    const auto& gens = I.generators();
    IndependenceResult best;
    std::vector<Monomial> current;
    std::function<void(std::size_t)> extend = [&](std::size_t from) {
        if (current.size() > best.value) {
            best.value = current.size();
            best.witness = current;
        }
        for (std::size_t i = from; i < gens.size(); ++i) {
            bool coprime = std::all_of(current.begin(), current.end(),
                                       [&](const Monomial& c) {
                                           return c.gcd(gens[i]).is_unit();
                                       });
            if (!coprime) continue;
            current.push_back(gens[i]);
            extend(i + 1);
            current.pop_back();
        }
    };
    extend(0);
    return best;
}

}  // namespace mik
