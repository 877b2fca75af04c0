#pragma once

#include <algorithm>
#include <stdexcept>

#include "mik/certify.hpp"
#include "mik/text.hpp"

namespace mik {

namespace detail {

/// Re-check the side conditions of one certificate node.  No searches are
/// re-run: each rule's payload pins down everything to verify.
inline bool replay_node(const Certificate& cert) {
    MonomialIdeal I = parse_ideal(cert.ideal, cert.ambient);

    auto premise_ideal = [&](std::size_t k) {
        return parse_ideal(cert.premises[k].ideal, cert.premises[k].ambient);
    };
    auto premises_ok = [&] {
        return std::all_of(cert.premises.begin(), cert.premises.end(),
                           replay_node);
    };

    switch (cert.rule) {
        case Rule::Principal:
            return cert.premises.empty() && I.generators().size() <= 1;

        case Rule::PrimeIdeal:
            return cert.premises.empty() && !I.is_zero() &&
                   std::all_of(I.generators().begin(), I.generators().end(),
                               [](const Monomial& g) { return g.degree() == 1; });

        case Rule::StripFactor: {
            if (cert.premises.size() != 1 || !cert.monomial) return false;
            auto [h, stripped] = strip_common_factor(I);
            return !h.is_unit() && h.str() == *cert.monomial &&
                   premise_ideal(0) == stripped && premises_ok();
        }

        case Rule::DisjointSplit: {
            if (cert.premises.size() < 2) return false;
            MonomialIdeal sum = MonomialIdeal::zero(I.ambient());
            Monomial used = Monomial::unit(I.ambient());
            for (std::size_t k = 0; k < cert.premises.size(); ++k) {
                MonomialIdeal block = premise_ideal(k);
                if (!used.gcd(block.generator_lcm()).is_unit()) return false;
                used = used.lcm(block.generator_lcm());
                sum = ideal_sum(sum, block);
            }
            return sum == I && premises_ok();
        }

        case Rule::BipartiteBase:
            return cert.premises.empty() && I.is_squarefree() && !I.is_zero() &&
                   I.is_proper() && clutter_of(I).is_uniform(2) &&
                   is_bipartite(clutter_of(I));

        case Rule::WhiskerBase:
            return cert.premises.empty() &&
                   detail::match_whisker(I).has_value();

        case Rule::LinearSplit: {
            if (!cert.var_i || !cert.var_j || *cert.var_i >= *cert.var_j)
                return false;
            std::size_t a = *cert.var_i, b = *cert.var_j;
            std::vector<Monomial> side_i, side_j;
            for (const auto& g : I.generators()) {
                bool da = g.exponent(a) > 0, db = g.exponent(b) > 0;
                if (da == db) return false;
                if (da)
                    side_i.push_back(g / Monomial::variable(I.ambient(), a));
                else
                    side_j.push_back(g / Monomial::variable(I.ambient(), b));
            }
            if (side_i.empty() || side_j.empty()) return false;
            MonomialIdeal Ia = MonomialIdeal::make(I.ambient(), side_i);
            MonomialIdeal Jb = MonomialIdeal::make(I.ambient(), side_j);
            MonomialIdeal branch1 =
                ideal_sum(scale(Monomial::variable(I.ambient(), a), Ia), Jb);
            MonomialIdeal branch2 =
                ideal_sum(Ia, scale(Monomial::variable(I.ambient(), b), Jb));
            // A proving node carries both branches; a refuting node carries
            // the refuted branch only.
            if (cert.premises.size() == 2)
                return premise_ideal(0) == branch1 &&
                       premise_ideal(1) == branch2 && premises_ok();
            if (cert.premises.size() == 1)
                return (premise_ideal(0) == branch1 ||
                        premise_ideal(0) == branch2) &&
                       premises_ok();
            return false;
        }

        case Rule::Th43Recursion: {
            if (!cert.monomial || !cert.ell || *cert.ell < 1) return false;
            Monomial v = [&] {
                MonomialIdeal parsed = parse_ideal(*cert.monomial, I.ambient());
                if (parsed.generators().size() != 1)
                    throw ParseError("expected one monomial", 0);
                return parsed.generators()[0];
            }();
            if (!v.is_squarefree()) return false;
            if (!ideal_power(I, *cert.ell).contains(v)) return false;
            if (!detail::th43_condition(v, *cert.ell, minimal_primes(I)))
                return false;
            auto supp = v.support();
            if (cert.premises.size() != supp.size()) return false;
            for (std::size_t k = 0; k < supp.size(); ++k)
                if (premise_ideal(k) != deletion(I, supp[k])) return false;
            return premises_ok();
        }

        case Rule::BoundedRefutation: {
            if (cert.premises.empty() && cert.witness_prime &&
                cert.witness_power && *cert.witness_power >= 1) {
                VarPrime p(I.ambient(), *cert.witness_prime);
                return !minimal_primes(I).contains(p) &&
                       associated_primes(ideal_power(I, *cert.witness_power))
                           .contains(p);
            }
            return false;
        }

        case Rule::BoundedInconclusive:
            return cert.premises.empty();
    }
    return false;
}

}  // namespace detail

/// Validate a deserialized certificate tree: every node's side conditions
/// must re-check against the ideal text it carries.
inline bool replay_certificate(const Certificate& cert) {
    try {
        return detail::replay_node(cert);
    } catch (const std::exception&) {
        return false;
    }
}

/// A replayed certificate proves its root ideal normally torsion-free iff it
/// is valid and every leaf is a proving rule.
inline bool replay_proves(const Certificate& cert) {
    return cert.proven() && replay_certificate(cert);
}

}  // namespace mik
