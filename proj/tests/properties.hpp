#pragma once

// Randomized and exhaustive property suites shared by the unit tests and the
// acceptance gate.  Each suite returns pass/fail plus a short description of
// the first violation, if any.

#include <sstream>
#include <string>

#include "support.hpp"

namespace miktest {

struct SuiteResult {
    bool passed = true;
    std::string detail;

    void fail(const std::string& what) {
        if (passed) {
            passed = false;
            detail = what;
        }
    }
};

/// Membership in sum/product/power/intersect/colon agrees with brute-force
/// enumeration over the exponent box lcm(generators) + 1.
inline SuiteResult membership_oracle_suite(std::size_t instances = 200) {
    Rng rng(20240801);
    SuiteResult result;
    for (std::size_t trial = 0; trial < instances && result.passed; ++trial) {
        std::size_t n = pick(rng, 1, 4);
        auto I = random_ideal(rng, n, 3, 3);
        auto J = random_ideal(rng, n, 3, 3);
        unsigned k = static_cast<unsigned>(pick(rng, 1, 3));

        auto sum = mik::ideal_sum(I, J);
        auto product = mik::ideal_product(I, J);
        auto power = mik::ideal_power(I, k);
        auto inter = mik::ideal_intersect(I, J);
        auto quot = mik::colon(I, J);

        mik::Monomial one = mik::Monomial::unit(n);
        mik::Monomial box = one;
        for (const auto& g : I.generators()) box = box.lcm(g);
        for (const auto& g : J.generators()) box = box.lcm(g);
        for (std::size_t v = 1; v <= n; ++v)
            box = box * mik::Monomial::variable(n, v);  // lcm + 1 in each slot
        for (unsigned extra = 1; extra < k; ++extra) box = box * box.radical();

        for_each_in_box(box, [&](const mik::Monomial& m) {
            if (!result.passed) return;
            if (sum.contains(m) != (I.contains(m) || J.contains(m)))
                result.fail("sum membership mismatch at " + m.str());
            bool in_product = false;
            for (const auto& a : I.generators())
                for (const auto& b : J.generators())
                    in_product = in_product || (a * b).divides(m);
            if (product.contains(m) != in_product)
                result.fail("product membership mismatch at " + m.str());
            if (power.contains(m) != power_member_oracle(I, k, m))
                result.fail("power membership mismatch at " + m.str());
            if (inter.contains(m) != (I.contains(m) && J.contains(m)))
                result.fail("intersection membership mismatch at " + m.str());
            bool in_colon = true;
            for (const auto& g : J.generators())
                in_colon = in_colon && I.contains(m * g);
            if (quot.contains(m) != in_colon)
                result.fail("colon membership mismatch at " + m.str());
        });
    }
    return result;
}

/// I cap (J + L) = (I cap J) + (I cap L) and its dual.
inline SuiteResult modular_laws_suite(std::size_t instances = 200) {
    Rng rng(20240802);
    SuiteResult result;
    for (std::size_t trial = 0; trial < instances && result.passed; ++trial) {
        std::size_t n = pick(rng, 1, 4);
        auto I = random_ideal(rng, n, 3, 3);
        auto J = random_ideal(rng, n, 3, 3);
        auto L = random_ideal(rng, n, 3, 3);
        if (mik::ideal_intersect(I, mik::ideal_sum(J, L)) !=
            mik::ideal_sum(mik::ideal_intersect(I, J), mik::ideal_intersect(I, L)))
            result.fail("distributivity of intersection over sum failed");
        if (mik::ideal_sum(I, mik::ideal_intersect(J, L)) !=
            mik::ideal_intersect(mik::ideal_sum(I, J), mik::ideal_sum(I, L)))
            result.fail("distributivity of sum over intersection failed");
    }
    return result;
}

/// If no generator of J involves x_i then (J : x_i^k) = J.
inline SuiteResult kaplansky_suite(std::size_t instances = 200) {
    Rng rng(20240803);
    SuiteResult result;
    for (std::size_t trial = 0; trial < instances && result.passed; ++trial) {
        std::size_t n = pick(rng, 2, 5);
        std::size_t avoid = pick(rng, 1, n);
        std::vector<mik::Monomial> gens;
        std::size_t count = pick(rng, 1, 4);
        for (std::size_t g = 0; g < count; ++g) {
            auto m = random_monomial(rng, n, 3, false).without_variable(avoid);
            if (!m.is_unit()) gens.push_back(m);
        }
        if (gens.empty()) continue;
        auto J = mik::MonomialIdeal::make(n, gens);
        for (unsigned k = 1; k <= 3; ++k) {
            auto xk = mik::Monomial::variable(n, avoid, k);
            if (mik::colon(J, xk) != J)
                result.fail("colon by an uninvolved variable changed the ideal");
        }
    }
    return result;
}

/// For irreducible Q = (x^{a_1}_{i_1},...,x^{a_r}_{i_r}):
/// (Q^k : prod_{j<=s} x^{a_j}_{i_j}) = Q^{k-s} for k > s, s <= r.
inline SuiteResult pro5_colon_suite(std::size_t instances = 200) {
    Rng rng(20240804);
    SuiteResult result;
    for (std::size_t trial = 0; trial < instances && result.passed; ++trial) {
        std::size_t n = pick(rng, 2, 5);
        std::size_t r = pick(rng, 1, std::min<std::size_t>(n, 3));
        std::vector<std::size_t> vars;
        while (vars.size() < r) {
            std::size_t v = pick(rng, 1, n);
            if (std::find(vars.begin(), vars.end(), v) == vars.end())
                vars.push_back(v);
        }
        std::vector<unsigned> alphas;
        std::vector<mik::Monomial> gens;
        for (auto v : vars) {
            alphas.push_back(static_cast<unsigned>(pick(rng, 1, 3)));
            gens.push_back(mik::Monomial::variable(n, v, alphas.back()));
        }
        auto Q = mik::MonomialIdeal::make(n, gens);
        for (std::size_t s = 1; s <= r; ++s) {
            mik::Monomial prod = mik::Monomial::unit(n);
            for (std::size_t j = 0; j < s; ++j)
                prod = prod * mik::Monomial::variable(n, vars[j], alphas[j]);
            for (unsigned k = static_cast<unsigned>(s) + 1;
                 k <= static_cast<unsigned>(s) + 2; ++k) {
                if (mik::colon(mik::ideal_power(Q, k), prod) !=
                    mik::ideal_power(Q, k - static_cast<unsigned>(s)))
                    result.fail("irreducible colon identity failed");
            }
        }
    }
    return result;
}

/// The decomposition-based Ass and the contraction/witness oracle agree, both
/// on arbitrary small ideals and on powers of square-free ideals.
inline SuiteResult dual_ass_agreement_suite(std::size_t instances = 200) {
    Rng rng(20240805);
    SuiteResult result;
    for (std::size_t trial = 0; trial < instances && result.passed; ++trial) {
        std::size_t n = pick(rng, 1, 4);
        auto I = random_ideal(rng, n, 4, 3);
        if (I.is_whole_ring()) continue;
        if (mik::associated_primes(I) != mik::ass_witness_oracle(I))
            result.fail("Ass algorithms disagree on " + I.str());
    }
    for (std::size_t trial = 0; trial < 30 && result.passed; ++trial) {
        std::size_t n = pick(rng, 2, 5);
        auto I = random_squarefree_ideal(rng, n, 4);
        if (I.is_whole_ring()) continue;
        for (unsigned s = 1; s <= 3 && result.passed; ++s) {
            auto Is = mik::ideal_power(I, s);
            if (mik::associated_primes(Is) != mik::ass_witness_oracle(Is))
                result.fail("Ass algorithms disagree on a power of " + I.str());
        }
    }
    return result;
}

/// (I cap J)^(k) = I^(k) cap J^(k) for square-free I, J and k <= 3.
inline SuiteResult symbolic_intersection_suite(std::size_t instances = 200) {
    Rng rng(20240806);
    SuiteResult result;
    for (std::size_t trial = 0; trial < instances && result.passed; ++trial) {
        std::size_t n = pick(rng, 2, 5);
        auto I = random_squarefree_ideal(rng, n, 3);
        auto J = random_squarefree_ideal(rng, n, 3);
        auto meet = mik::ideal_intersect(I, J);
        if (I.is_whole_ring() || J.is_whole_ring() || meet.is_zero() ||
            meet.is_whole_ring())
            continue;
        for (unsigned k = 1; k <= 3; ++k) {
            if (mik::symbolic_power(meet, k) !=
                mik::ideal_intersect(mik::symbolic_power(I, k),
                                     mik::symbolic_power(J, k)))
                result.fail("symbolic power of an intersection mismatched");
        }
    }
    return result;
}

/// For every square-free ideal with ambient <= 4 and every embedded prime p
/// of I^s (s <= 3) and x_i in p there is q in Min(I) with x_i in q, q
/// strictly inside p.
inline SuiteResult min_existence_suite() {
    SuiteResult result;
    for (std::size_t n = 2; n <= 4 && result.passed; ++n) {
        for (const auto& I : all_squarefree_ideals(n)) {
            if (!result.passed) break;
            auto min_primes = mik::minimal_primes(I);
            for (unsigned s = 1; s <= 3; ++s) {
                for (const auto& p :
                     mik::embedded_primes(mik::ideal_power(I, s), min_primes)) {
                    for (auto i : p.vars()) {
                        bool found = false;
                        for (const auto& q : min_primes.primes())
                            found = found || (q.contains_var(i) &&
                                              p.strictly_contains(q));
                        if (!found)
                            result.fail("no minimal prime below an embedded "
                                        "prime through x" + std::to_string(i) +
                                        " for " + I.str());
                    }
                }
            }
        }
    }
    return result;
}

/// Deletion-hypothesis colon transfer: if p \ y_i is not associated to
/// (I \ y_i)^t for each chosen variable, then p is associated to I^t exactly
/// when it is associated to (I^t : prod y_i).
inline SuiteResult pro1_consistency_suite(std::size_t instances = 200) {
    Rng rng(20240807);
    SuiteResult result;

    auto ass_contains = [](const mik::MonomialIdeal& J,
                           const std::vector<std::size_t>& vars) {
        // The empty variable set plays the role of the zero prime: associated
        // only to the zero ideal.
        if (J.is_zero()) return vars.empty();
        if (J.is_whole_ring() || vars.empty()) return false;
        return mik::associated_primes(J).contains(
            mik::VarPrime(J.ambient(), vars));
    };

    for (std::size_t trial = 0; trial < instances && result.passed; ++trial) {
        std::size_t n = pick(rng, 2, 4);
        auto I = random_ideal(rng, n, 3, 2);
        if (I.is_whole_ring()) continue;
        unsigned t = static_cast<unsigned>(pick(rng, 1, 2));
        auto It = mik::ideal_power(I, t);
        if (It.is_zero() || It.is_whole_ring()) continue;

        // Sample p from Ass(I^t) or as a random variable subset.
        std::vector<std::size_t> pvars;
        auto ass = mik::associated_primes(It);
        if (!ass.empty() && pick(rng, 0, 1))
            pvars = ass.primes()[pick(rng, 0, ass.size() - 1)].vars();
        else
            for (std::size_t v = 1; v <= n; ++v)
                if (pick(rng, 0, 1)) pvars.push_back(v);
        if (pvars.empty()) continue;

        std::size_t s = pick(rng, 1, 2);
        std::vector<std::size_t> ys;
        while (ys.size() < s) {
            std::size_t y = pick(rng, 1, n);
            if (std::find(ys.begin(), ys.end(), y) == ys.end()) ys.push_back(y);
        }

        bool hypotheses = true;
        for (auto y : ys) {
            std::vector<std::size_t> reduced;
            for (auto v : pvars)
                if (v != y) reduced.push_back(v);
            auto Iy = mik::deletion(I, y);
            auto Iyt = Iy.is_zero() ? Iy : mik::ideal_power(Iy, t);
            hypotheses = hypotheses && !ass_contains(Iyt, reduced);
        }
        if (!hypotheses) continue;

        mik::Monomial prod = mik::Monomial::unit(n);
        for (auto y : ys) prod = prod * mik::Monomial::variable(n, y);
        bool lhs = ass_contains(It, pvars);
        bool rhs = ass_contains(mik::colon(It, prod), pvars);
        if (lhs != rhs)
            result.fail("colon transfer of associated primes failed on " +
                        I.str());
    }
    return result;
}

/// Bounded SPP verdicts agree between a clutter and its cone.
inline SuiteResult cone_spp_suite(std::size_t instances = 100) {
    Rng rng(20240808);
    SuiteResult result;
    for (std::size_t trial = 0; trial < instances && result.passed; ++trial) {
        std::size_t n = pick(rng, 2, 4);
        auto C = random_clutter(rng, n, 4);
        auto coned = mik::cone(C, n + 1);
        auto base = mik::check_spp(mik::edge_ideal(C), 2).status;
        auto lifted = mik::check_spp(mik::edge_ideal(coned), 2).status;
        if (base != lifted)
            result.fail("cone changed the bounded SPP verdict of " + C.str());
    }
    return result;
}

/// Deletions and contractions of ideals with a Proven certificate never fail
/// the bounded NTF check.
inline SuiteResult ntf_stability_suite(std::size_t instances = 200) {
    Rng rng(20240809);
    SuiteResult result;
    for (std::size_t trial = 0; trial < instances && result.passed; ++trial) {
        std::size_t n = pick(rng, 2, 5);
        auto I = random_squarefree_ideal(rng, n, 4);
        if (I.is_whole_ring()) continue;
        auto [verdict, cert] = mik::certify_ntf(I);
        if (verdict.status != mik::Verdict::Status::Holds) continue;
        for (std::size_t v = 1; v <= n && result.passed; ++v) {
            auto del = mik::deletion(I, v);
            if (!del.is_zero() && !del.is_whole_ring() &&
                mik::check_ntf_bounded(del, 2).status ==
                    mik::Verdict::Status::Fails)
                result.fail("deletion of a proven ideal failed bounded NTF: " +
                            I.str());
            auto con = mik::contraction(I, v);
            if (!con.is_zero() && !con.is_whole_ring() &&
                mik::check_ntf_bounded(con, 2).status ==
                    mik::Verdict::Status::Fails)
                result.fail("contraction of a proven ideal failed bounded NTF: " +
                            I.str());
        }
    }
    return result;
}

/// On every square-free ideal with ambient <= 4, a Proven certificate is
/// never contradicted by the bounded check at S = 3, and every certificate
/// replays.
inline SuiteResult exhaustive_soundness_suite() {
    SuiteResult result;
    for (std::size_t n = 2; n <= 4 && result.passed; ++n) {
        for (const auto& I : all_squarefree_ideals(n)) {
            if (!result.passed) break;
            auto [verdict, cert] = mik::certify_ntf(I);
            if (!mik::replay_certificate(cert))
                result.fail("certificate failed to replay for " + I.str());
            auto bounded = mik::check_ntf_bounded(I, 3);
            if (verdict.status == mik::Verdict::Status::Holds &&
                bounded.status == mik::Verdict::Status::Fails)
                result.fail("Proven contradicted by bounded check on " + I.str());
            if (verdict.status == mik::Verdict::Status::Fails &&
                bounded.status != mik::Verdict::Status::Fails &&
                verdict.witness_power && *verdict.witness_power <= 3)
                result.fail("refutation not reproduced by bounded check on " +
                            I.str());
        }
    }
    return result;
}

/// Both directions of the linear-combination theorem at a fixed power bound:
/// on constructed split ideals, L is bounded-NTF iff both branches are.
inline SuiteResult linear_split_equivalence_suite(std::size_t instances = 200) {
    Rng rng(20240810);
    SuiteResult result;
    for (std::size_t trial = 0; trial < instances && result.passed; ++trial) {
        std::size_t n = pick(rng, 4, 6);
        std::size_t i = 1, j = 2;
        auto strip_ij = [&](mik::Monomial m) {
            return m.without_variable(i).without_variable(j);
        };
        std::vector<mik::Monomial> gi, gj;
        std::size_t ci = pick(rng, 1, 3), cj = pick(rng, 1, 3);
        for (std::size_t g = 0; g < ci; ++g) {
            auto m = strip_ij(random_monomial(rng, n, 1, false));
            if (!m.is_unit()) gi.push_back(m);
        }
        for (std::size_t g = 0; g < cj; ++g) {
            auto m = strip_ij(random_monomial(rng, n, 1, false));
            if (!m.is_unit()) gj.push_back(m);
        }
        if (gi.empty() || gj.empty()) continue;
        auto I = mik::MonomialIdeal::make(n, gi);
        auto J = mik::MonomialIdeal::make(n, gj);
        auto xi = mik::Monomial::variable(n, i);
        auto xj = mik::Monomial::variable(n, j);
        auto L = mik::ideal_sum(mik::scale(xi, I), mik::scale(xj, J));
        auto b1 = mik::ideal_sum(mik::scale(xi, I), J);
        auto b2 = mik::ideal_sum(I, mik::scale(xj, J));
        // The split requires each generator to carry exactly one of x_i, x_j;
        // minimalization across the two sides can break that.
        bool valid = true;
        for (const auto& g : L.generators())
            valid = valid && ((g.exponent(i) > 0) != (g.exponent(j) > 0));
        if (!valid || L.is_whole_ring()) continue;

        bool whole = mik::check_ntf_bounded(L, 2).status ==
                     mik::Verdict::Status::Holds;
        bool branches =
            mik::check_ntf_bounded(b1, 2).status == mik::Verdict::Status::Holds &&
            mik::check_ntf_bounded(b2, 2).status == mik::Verdict::Status::Holds;
        if (whole != branches)
            result.fail("bounded linear-split equivalence failed on " + L.str());
    }
    return result;
}

/// Bounded SPP implies bounded persistence on every tested ideal.
inline SuiteResult spp_implies_persistence_suite(std::size_t instances = 60) {
    Rng rng(20240811);
    SuiteResult result;
    for (std::size_t trial = 0; trial < instances && result.passed; ++trial) {
        std::size_t n = pick(rng, 2, 4);
        auto I = random_ideal(rng, n, 3, 2);
        if (I.is_whole_ring()) continue;
        if (mik::check_spp(I, 2).status == mik::Verdict::Status::Holds &&
            mik::check_persistence(I, 2).status != mik::Verdict::Status::Holds)
            result.fail("SPP held but persistence failed on " + I.str());
    }
    return result;
}

}  // namespace miktest
