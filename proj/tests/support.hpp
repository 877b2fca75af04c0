#pragma once

// Shared deterministic generators and independent brute-force oracles for the
// unit and property suites.  Everything is seeded explicitly so failures are
// reproducible by rerunning the same suite.

#include <functional>
#include <random>
#include <vector>

#include "mik/mik.hpp"

namespace miktest {

using Rng = std::mt19937;

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline mik::Monomial random_monomial(Rng& rng, std::size_t ambient,
                                     unsigned max_exp, bool allow_unit = true) {
    std::vector<mik::Exponent> exps(ambient, mik::Exponent(0));
    do {
        for (auto& e : exps) e = mik::Exponent(pick(rng, 0, max_exp));
    } while (!allow_unit &&
             std::all_of(exps.begin(), exps.end(),
                         [](const mik::Exponent& e) { return e == 0; }));
    return mik::Monomial(exps);
}

/// Random nonzero proper ideal.
inline mik::MonomialIdeal random_ideal(Rng& rng, std::size_t ambient,
                                       std::size_t max_gens, unsigned max_exp) {
    std::vector<mik::Monomial> gens;
    std::size_t count = pick(rng, 1, max_gens);
    for (std::size_t i = 0; i < count; ++i)
        gens.push_back(random_monomial(rng, ambient, max_exp, false));
    return mik::MonomialIdeal::make(ambient, std::move(gens));
}

inline mik::MonomialIdeal random_squarefree_ideal(Rng& rng, std::size_t ambient,
                                                  std::size_t max_gens) {
    std::vector<mik::Monomial> gens;
    std::size_t count = pick(rng, 1, max_gens);
    for (std::size_t i = 0; i < count; ++i)
        gens.push_back(random_monomial(rng, ambient, 1, false));
    return mik::MonomialIdeal::make(ambient, std::move(gens));
}

inline mik::Clutter random_clutter(Rng& rng, std::size_t vertices,
                                   std::size_t max_edges) {
    std::vector<mik::Edge> edges;
    std::size_t count = pick(rng, 1, max_edges);
    for (std::size_t i = 0; i < count; ++i) {
        mik::Edge e;
        for (std::size_t v = 1; v <= vertices; ++v)
            if (pick(rng, 0, 1)) e.push_back(v);
        if (e.empty()) e.push_back(pick(rng, 1, vertices));
        edges.push_back(std::move(e));
    }
    return mik::Clutter(vertices, std::move(edges));
}

/// All monomials in the box with exponents bounded componentwise.
inline void for_each_in_box(const mik::Monomial& bound,
                            const std::function<void(const mik::Monomial&)>& fn) {
    const std::size_t n = bound.ambient();
    std::vector<mik::Exponent> exps(n, mik::Exponent(0));
    std::function<void(std::size_t)> walk = [&](std::size_t pos) {
        if (pos == n) {
            fn(mik::Monomial(exps));
            return;
        }
        for (mik::Exponent e = 0; e <= bound.exponent(pos + 1); ++e) {
            exps[pos] = e;
            walk(pos + 1);
        }
        exps[pos] = 0;
    };
    walk(0);
}

/// Definitional membership in I^k: peel off one generator at a time.
inline bool power_member_oracle(const mik::MonomialIdeal& I, unsigned k,
                                const mik::Monomial& m) {
    if (k == 0) return true;
    for (const auto& g : I.generators())
        if (g.divides(m) && power_member_oracle(I, k - 1, m / g)) return true;
    return false;
}

/// Edge ideals of every clutter on 1..n vertices: exactly the nonzero proper
/// square-free monomial ideals in n variables, up to dead variables.
inline std::vector<mik::MonomialIdeal> all_squarefree_ideals(std::size_t n) {
    std::vector<mik::MonomialIdeal> out;
    mik::for_each_clutter(n, [&](const mik::Clutter& C) {
        out.push_back(mik::edge_ideal(C));
    });
    return out;
}

}  // namespace miktest
