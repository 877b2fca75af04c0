#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "mik/clutter.hpp"
#include "mik/decomposition.hpp"
#include "mik/ideal.hpp"
#include "mik/prime.hpp"

namespace mik {

struct Verdict {
    enum class Status { Holds, Fails, Unknown };

    Status status = Status::Unknown;
    unsigned power_bound = 0;
    // Fails always carries a witness; the prime part is absent for checks
    // whose counterexample is just a power (SPP).
    std::optional<VarPrime> witness_prime;
    std::optional<unsigned> witness_power;
    std::string notes;

    static Verdict holds(unsigned bound, std::string notes = {}) {
        Verdict v;
        v.status = Status::Holds;
        v.power_bound = bound;
        v.notes = std::move(notes);
        return v;
    }

    static Verdict fails(unsigned bound, unsigned power,
                         std::optional<VarPrime> prime = std::nullopt,
                         std::string notes = {}) {
        Verdict v;
        v.status = Status::Fails;
        v.power_bound = bound;
        v.witness_power = power;
        v.witness_prime = std::move(prime);
        v.notes = std::move(notes);
        return v;
    }

    static Verdict unknown(unsigned bound, std::string notes = {}) {
        Verdict v;
        v.power_bound = bound;
        v.notes = std::move(notes);
        return v;
    }
};

inline const char* to_string(Verdict::Status s) {
    switch (s) {
        case Verdict::Status::Holds: return "Holds";
        case Verdict::Status::Fails: return "Fails";
        default: return "Unknown";
    }
}

enum class Rule {
    StripFactor,
    DisjointSplit,
    Principal,
    PrimeIdeal,
    BipartiteBase,
    WhiskerBase,
    Th43Recursion,
    LinearSplit,
    BoundedRefutation,
    BoundedInconclusive,
};

inline const char* to_string(Rule r) {
    switch (r) {
        case Rule::StripFactor: return "StripFactor";
        case Rule::DisjointSplit: return "DisjointSplit";
        case Rule::Principal: return "Principal";
        case Rule::PrimeIdeal: return "PrimeIdeal";
        case Rule::BipartiteBase: return "BipartiteBase";
        case Rule::WhiskerBase: return "WhiskerBase";
        case Rule::Th43Recursion: return "Th43Recursion";
        case Rule::LinearSplit: return "LinearSplit";
        case Rule::BoundedRefutation: return "BoundedRefutation";
        default: return "BoundedInconclusive";
    }
}

inline std::optional<Rule> rule_from_string(const std::string& s) {
    for (Rule r : {Rule::StripFactor, Rule::DisjointSplit, Rule::Principal,
                   Rule::PrimeIdeal, Rule::BipartiteBase, Rule::WhiskerBase,
                   Rule::Th43Recursion, Rule::LinearSplit,
                   Rule::BoundedRefutation, Rule::BoundedInconclusive})
        if (s == to_string(r)) return r;
    return std::nullopt;
}

/// A proof tree.  Each node records the certified ideal in canonical text
/// form plus the rule-specific payload, so a deserialized tree can be
/// re-validated without re-running any search.
struct Certificate {
    Rule rule = Rule::BoundedInconclusive;
    std::string ideal;                  // canonical text of the certified ideal
    std::size_t ambient = 0;
    std::vector<Certificate> premises;

    std::optional<std::string> monomial;  // h for StripFactor, v for Th43Recursion
    std::optional<unsigned> ell;          // Th43Recursion
    std::optional<std::size_t> var_i, var_j;  // LinearSplit
    std::optional<std::vector<std::size_t>> witness_prime;  // BoundedRefutation
    std::optional<unsigned> witness_power;
    std::optional<unsigned> power_bound;  // Bounded* leaves

    bool proven() const {
        if (rule == Rule::BoundedRefutation || rule == Rule::BoundedInconclusive)
            return false;
        return std::all_of(premises.begin(), premises.end(),
                           [](const Certificate& c) { return c.proven(); });
    }
};

/// Strong persistence up to a bound: (I^{k+1} : I) = I^k for 1 <= k <= K.
inline Verdict check_spp(const MonomialIdeal& I, unsigned K) {
    if (I.is_zero() || I.is_whole_ring())
        throw std::invalid_argument("check_spp needs a nonzero proper ideal");
    if (K < 1) throw std::invalid_argument("power bound must be positive");
    MonomialIdeal Ik = I;
    for (unsigned k = 1; k <= K; ++k) {
        MonomialIdeal Inext = ideal_product(Ik, I);
        if (colon(Inext, I) != Ik)
            return Verdict::fails(K, k);
        Ik = std::move(Inext);
    }
    return Verdict::holds(K);
}

/// Persistence up to a bound: Ass(I^k) subset of Ass(I^{k+1}) for k <= K.
inline Verdict check_persistence(const MonomialIdeal& I, unsigned K) {
    if (I.is_zero() || I.is_whole_ring())
        throw std::invalid_argument("check_persistence needs a nonzero proper ideal");
    if (K < 1) throw std::invalid_argument("power bound must be positive");
    MonomialIdeal Ik = I;
    PrimeSet ass_k = associated_primes(Ik);
    for (unsigned k = 1; k <= K; ++k) {
        MonomialIdeal Inext = ideal_product(Ik, I);
        PrimeSet ass_next = associated_primes(Inext);
        if (!ass_k.subset_of(ass_next)) {
            auto lost = ass_k.difference(ass_next);
            return Verdict::fails(K, k, lost.front());
        }
        Ik = std::move(Inext);
        ass_k = std::move(ass_next);
    }
    return Verdict::holds(K);
}

/// Embedded primes of I^s relative to Min(I).
inline std::vector<VarPrime> embedded_primes(const MonomialIdeal& power,
                                             const PrimeSet& min_primes) {
    return associated_primes(power).difference(min_primes);
}

/// Bounded normal torsion-freeness: Ass(I^s) must stay inside Min(I) for
/// s <= S.  Each step is cross-checked against the symbolic-power equality
/// I^s = I^(s); a disagreement between the two routes is a hard bug.
inline Verdict check_ntf_bounded(const MonomialIdeal& I, unsigned S) {
    if (!I.is_squarefree())
        throw std::invalid_argument("check_ntf_bounded needs a square-free ideal");
    if (I.is_zero() || I.is_whole_ring())
        throw std::invalid_argument("check_ntf_bounded needs a nonzero proper ideal");
    if (S < 1) throw std::invalid_argument("power bound must be positive");

    PrimeSet min_primes = minimal_primes(I);
    MonomialIdeal Is = I;
    for (unsigned s = 1; s <= S; ++s) {
        if (s > 1) Is = ideal_product(Is, I);
        auto embedded = embedded_primes(Is, min_primes);
        bool symbolic_equal = (Is == symbolic_power(I, s));
        if (embedded.empty() != symbolic_equal)
            throw std::logic_error(
                "Ass computation and symbolic-power equality disagree");
        if (!embedded.empty())
            return Verdict::fails(S, s, embedded.front());
    }
    return Verdict::holds(S);
}

struct Th43Witness {
    unsigned ell = 0;
    Monomial v;
};

namespace detail {

/// Side condition of the deletion-recursion rule: for square-free v, exactly
/// ell support variables of v lie in every minimal prime.
inline bool th43_condition(const Monomial& v, unsigned ell,
                           const PrimeSet& min_primes) {
    for (const auto& p : min_primes.primes()) {
        std::size_t hits = 0;
        for (auto i : v.support())
            if (p.contains_var(i)) ++hits;
        if (hits != ell) return false;
    }
    return true;
}

}  // namespace detail

/// Search for (ell, v): a square-free v in I^ell lying in p^ell \ p^{ell+1}
/// for every minimal prime p.  Search order: ell ascending; at each ell,
/// single generators / products of pairwise-coprime generators first, then
/// all square-free monomials by ascending support size.  First hit wins.
inline std::optional<Th43Witness> th43_witness_search(const MonomialIdeal& I,
                                                      unsigned ell_max) {
    if (!I.is_squarefree())
        throw std::invalid_argument("th43_witness_search needs a square-free ideal");
    if (I.is_zero() || I.is_whole_ring())
        throw std::invalid_argument("th43_witness_search needs a nonzero proper ideal");

    const std::size_t n = I.ambient();
    PrimeSet min_primes = minimal_primes(I);
    const auto& gens = I.generators();

    MonomialIdeal Iell = MonomialIdeal::whole_ring(n);
    for (unsigned ell = 1; ell <= ell_max; ++ell) {
        Iell = ideal_product(Iell, I);

        // Products of ell pairwise-coprime generators come first.
        std::optional<Th43Witness> hit;
        std::vector<std::size_t> chosen;
        std::function<void(std::size_t, const Monomial&)> pick =
            [&](std::size_t from, const Monomial& acc) {
                if (hit) return;
                if (chosen.size() == ell) {
                    if (detail::th43_condition(acc, ell, min_primes))
                        hit = Th43Witness{ell, acc};
                    return;
                }
                for (std::size_t g = from; g < gens.size() && !hit; ++g) {
                    if (!acc.gcd(gens[g]).is_unit()) continue;
                    chosen.push_back(g);
                    pick(g + 1, acc * gens[g]);
                    chosen.pop_back();
                }
            };
        pick(0, Monomial::unit(n));
        if (hit) return hit;

        // Then any square-free monomial in I^ell, by ascending support size.
        if (n <= 24) {
            std::vector<std::uint32_t> masks;
            for (std::uint32_t m = 1; m < (std::uint32_t{1} << n); ++m)
                masks.push_back(m);
            std::stable_sort(masks.begin(), masks.end(),
                             [](std::uint32_t a, std::uint32_t b) {
                                 return std::popcount(a) < std::popcount(b);
                             });
            for (auto mask : masks) {
                std::vector<Exponent> exps(n, Exponent(0));
                for (std::size_t i = 0; i < n; ++i)
                    if (mask & (std::uint32_t{1} << i)) exps[i] = 1;
                Monomial v{exps};
                if (!Iell.contains(v)) continue;
                if (detail::th43_condition(v, ell, min_primes))
                    return Th43Witness{ell, v};
            }
        }
    }
    return std::nullopt;
}

struct LinearSplit {
    std::size_t var_i = 0, var_j = 0;  // var_i < var_j
    MonomialIdeal side_i, side_j;      // L = x_i * side_i + x_j * side_j
};

/// Find variables i != j such that every generator of L is divisible by
/// exactly one of x_i, x_j, with generators on both sides.  Pairs are tried
/// in descending lexicographic order; the returned pair is normalized as
/// (min, max).
inline std::optional<LinearSplit> linear_split_search(const MonomialIdeal& L) {
    if (!L.is_squarefree())
        throw std::invalid_argument("linear_split_search needs a square-free ideal");
    if (L.is_zero() || L.is_whole_ring())
        throw std::invalid_argument("linear_split_search needs a nonzero proper ideal");

    const std::size_t n = L.ambient();
    for (std::size_t a = n; a >= 2; --a) {
        for (std::size_t b = a - 1; b >= 1; --b) {
            std::vector<Monomial> with_a, with_b;
            bool ok = true;
            for (const auto& g : L.generators()) {
                bool da = g.exponent(a) > 0, db = g.exponent(b) > 0;
                if (da == db) {
                    ok = false;
                    break;
                }
                if (da)
                    with_a.push_back(g / Monomial::variable(n, a));
                else
                    with_b.push_back(g / Monomial::variable(n, b));
            }
            if (ok && !with_a.empty() && !with_b.empty()) {
                LinearSplit split{
                    std::min(a, b), std::max(a, b),
                    MonomialIdeal::make(n, a < b ? with_a : with_b),
                    MonomialIdeal::make(n, a < b ? with_b : with_a)};
                return split;
            }
            if (b == 1) break;
        }
    }
    return std::nullopt;
}

struct CertifyBudget {
    unsigned depth = 0;        // 0 means "use the ambient"
    unsigned power_bound = 4;  // bound for the fallback refutation search
    std::optional<unsigned> ell_max;  // default: beta_1(I)
};

namespace detail {

struct WhiskerPattern {
    std::size_t fresh_var = 0;
    Clutter graph;  // the underlying bipartite graph, whisker edge included
};

/// Pattern of Proposition-style whiskering: one cubic generator x_f * (edge)
/// with x_f fresh, all other generators quadratic, and the full edge set
/// bipartite.
inline std::optional<WhiskerPattern> match_whisker(const MonomialIdeal& I) {
    const Monomial* cubic = nullptr;
    for (const auto& g : I.generators()) {
        auto sz = g.support().size();
        if (sz == 2) continue;
        if (sz == 3 && cubic == nullptr) {
            cubic = &g;
            continue;
        }
        return std::nullopt;
    }
    if (cubic == nullptr || I.generators().size() < 2) return std::nullopt;

    for (auto f : cubic->support()) {
        bool fresh = std::all_of(I.generators().begin(), I.generators().end(),
                                 [&](const Monomial& g) {
                                     return g == *cubic || g.exponent(f) == 0;
                                 });
        if (!fresh) continue;
        std::vector<Edge> edges;
        for (const auto& g : I.generators())
            edges.push_back(g == *cubic ? cubic->without_variable(f).support()
                                        : g.support());
        Clutter graph(I.ambient(), std::move(edges));
        if (!graph.is_uniform(2)) continue;  // whisker edge collided
        if (is_bipartite(graph)) return WhiskerPattern{f, std::move(graph)};
    }
    return std::nullopt;
}

inline std::pair<Verdict, Certificate> bounded_leaf(const MonomialIdeal& I,
                                                    unsigned power_bound) {
    Certificate cert;
    cert.ideal = I.str();
    cert.ambient = I.ambient();
    cert.power_bound = power_bound;
    Verdict bounded = check_ntf_bounded(I, power_bound);
    if (bounded.status == Verdict::Status::Fails) {
        cert.rule = Rule::BoundedRefutation;
        cert.witness_prime = bounded.witness_prime->vars();
        cert.witness_power = bounded.witness_power;
        Verdict v = Verdict::fails(power_bound, *bounded.witness_power,
                                   bounded.witness_prime, "embedded prime found");
        return {v, cert};
    }
    cert.rule = Rule::BoundedInconclusive;
    return {Verdict::unknown(power_bound, "structural rules exhausted"), cert};
}

inline std::pair<Verdict, Certificate> certify_impl(const MonomialIdeal& I,
                                                    unsigned depth,
                                                    const CertifyBudget& budget) {
    Certificate cert;
    cert.ideal = I.str();
    cert.ambient = I.ambient();

    // Zero and unit ideals are normally torsion-free by convention: they can
    // appear through deletions even though no theorem needs the case.
    if (I.is_zero() || I.is_whole_ring()) {
        cert.rule = Rule::Principal;
        return {Verdict::holds(0, "trivial ideal"), cert};
    }
    if (!I.is_squarefree())
        throw std::invalid_argument("certify_ntf needs a square-free ideal");

    // Rule 1: strip the common factor of all generators.
    auto [h, stripped] = strip_common_factor(I);
    if (!h.is_unit()) {
        auto [v, premise] = certify_impl(stripped, depth, budget);
        if (v.status == Verdict::Status::Holds ||
            v.status == Verdict::Status::Fails) {
            cert.rule = Rule::StripFactor;
            cert.monomial = h.str();
            cert.premises.push_back(std::move(premise));
            return {v, cert};
        }
        return {v, premise};  // inconclusive either way
    }

    // Rule 2: base cases.
    if (I.generators().size() == 1) {
        cert.rule = Rule::Principal;
        return {Verdict::holds(0, "principal ideal"), cert};
    }
    if (std::all_of(I.generators().begin(), I.generators().end(),
                    [](const Monomial& g) { return g.degree() == 1; })) {
        cert.rule = Rule::PrimeIdeal;
        return {Verdict::holds(0, "monomial prime"), cert};
    }

    // Rule 3: variable-disjoint blocks.
    {
        const auto& gens = I.generators();
        std::vector<std::size_t> parent(gens.size());
        for (std::size_t g = 0; g < gens.size(); ++g) parent[g] = g;
        std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::size_t a = 0; a < gens.size(); ++a)
            for (std::size_t b = a + 1; b < gens.size(); ++b)
                if (!gens[a].gcd(gens[b]).is_unit()) parent[find(a)] = find(b);

        std::vector<std::vector<Monomial>> blocks;
        std::vector<std::size_t> roots;
        for (std::size_t g = 0; g < gens.size(); ++g) {
            std::size_t r = find(g);
            auto it = std::find(roots.begin(), roots.end(), r);
            if (it == roots.end()) {
                roots.push_back(r);
                blocks.emplace_back();
                it = roots.end() - 1;
            }
            blocks[static_cast<std::size_t>(it - roots.begin())].push_back(gens[g]);
        }
        if (blocks.size() >= 2) {
            bool all_proven = true;
            std::vector<Certificate> premises;
            for (auto& block : blocks) {
                auto [v, premise] = certify_impl(
                    MonomialIdeal::make(I.ambient(), std::move(block)), depth, budget);
                premises.push_back(std::move(premise));
                if (v.status != Verdict::Status::Holds) {
                    all_proven = false;
                    break;
                }
            }
            if (all_proven) {
                cert.rule = Rule::DisjointSplit;
                cert.premises = std::move(premises);
                return {Verdict::holds(0, "variable-disjoint blocks"), cert};
            }
        }
    }

    // Rule 4: graphs are decided by bipartiteness.
    if (std::all_of(I.generators().begin(), I.generators().end(),
                    [](const Monomial& g) { return g.degree() == 2; })) {
        Clutter graph = clutter_of(I);
        if (is_bipartite(graph)) {
            cert.rule = Rule::BipartiteBase;
            return {Verdict::holds(0, "bipartite edge ideal"), cert};
        }
        return bounded_leaf(I, budget.power_bound);
    }

    // Rule 5: bipartite edge ideal with one whiskered edge.
    if (auto whisker = match_whisker(I)) {
        cert.rule = Rule::WhiskerBase;
        cert.var_i = whisker->fresh_var;
        return {Verdict::holds(0, "whiskered bipartite edge ideal"), cert};
    }

    // Rule 6: linear combination split (an equivalence, so a refuted branch
    // refutes the split ideal).
    if (depth > 0) {
        if (auto split = linear_split_search(I)) {
            Monomial xi = Monomial::variable(I.ambient(), split->var_i);
            Monomial xj = Monomial::variable(I.ambient(), split->var_j);
            MonomialIdeal branch1 = ideal_sum(scale(xi, split->side_i), split->side_j);
            MonomialIdeal branch2 = ideal_sum(split->side_i, scale(xj, split->side_j));
            auto [v1, p1] = certify_impl(branch1, depth - 1, budget);
            if (v1.status == Verdict::Status::Fails) {
                cert.rule = Rule::LinearSplit;
                cert.var_i = split->var_i;
                cert.var_j = split->var_j;
                cert.premises.push_back(std::move(p1));
                v1.notes = "refuted through a linear-split branch";
                return {v1, cert};
            }
            auto [v2, p2] = certify_impl(branch2, depth - 1, budget);
            if (v2.status == Verdict::Status::Fails) {
                cert.rule = Rule::LinearSplit;
                cert.var_i = split->var_i;
                cert.var_j = split->var_j;
                cert.premises.push_back(std::move(p2));
                v2.notes = "refuted through a linear-split branch";
                return {v2, cert};
            }
            if (v1.status == Verdict::Status::Holds &&
                v2.status == Verdict::Status::Holds) {
                cert.rule = Rule::LinearSplit;
                cert.var_i = split->var_i;
                cert.var_j = split->var_j;
                cert.premises.push_back(std::move(p1));
                cert.premises.push_back(std::move(p2));
                return {Verdict::holds(0, "linear-combination split"), cert};
            }
        }
    }

    // Rule 7: deletion recursion on a witness monomial.
    if (depth > 0) {
        unsigned ell_max = budget.ell_max ? *budget.ell_max
                                          : static_cast<unsigned>(beta1(I).value);
        if (auto witness = th43_witness_search(I, ell_max)) {
            bool all_proven = true;
            std::vector<Certificate> premises;
            for (auto i : witness->v.support()) {
                auto [v, premise] =
                    certify_impl(deletion(I, i), depth - 1, budget);
                premises.push_back(std::move(premise));
                if (v.status != Verdict::Status::Holds) {
                    all_proven = false;
                    break;
                }
            }
            if (all_proven) {
                cert.rule = Rule::Th43Recursion;
                cert.monomial = witness->v.str();
                cert.ell = witness->ell;
                cert.premises = std::move(premises);
                return {Verdict::holds(0, "deletion recursion"), cert};
            }
        }
    }

    // Rule 8: bounded refutation / inconclusive.
    return bounded_leaf(I, budget.power_bound);
}

}  // namespace detail

/// Rule-based normally-torsion-free prover/refuter.  Proven certificates
/// rest only on the reduction theorems; refutations come from the sound
/// bounded embedded-prime search.
inline std::pair<Verdict, Certificate> certify_ntf(const MonomialIdeal& I,
                                                   CertifyBudget budget = {}) {
    if (budget.depth == 0)
        budget.depth = static_cast<unsigned>(I.ambient());
    return detail::certify_impl(I, budget.depth, budget);
}

struct CcResult {
    enum class Kind { NoPacking, Unmixed, Cor43, NtfProved, Candidate };

    Kind kind = Kind::Candidate;
    bool conjecture_relevant = false;  // packs but bounded search refuted NTF
    std::string reason;
    std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
        failing_minor;
    std::optional<Th43Witness> cor43_witness;
    std::optional<Certificate> certificate;
    std::optional<Verdict> ntf_verdict;

    bool candidate() const { return kind == Kind::Candidate; }
};

inline const char* to_string(CcResult::Kind k) {
    switch (k) {
        case CcResult::Kind::NoPacking: return "NotCandidate(no-packing)";
        case CcResult::Kind::Unmixed: return "NotCandidate(unmixed)";
        case CcResult::Kind::Cor43: return "NotCandidate(cor43)";
        case CcResult::Kind::NtfProved: return "NotCandidate(ntf-proved)";
        default: return "Candidate";
    }
}

/// Minimal-counterexample filter for the packing-vs-MFMC conjecture: a
/// candidate must pack, cannot be unmixed, and cannot admit a witness
/// monomial avoiding the squares of all minimal primes.
inline CcResult cc_filter(const Clutter& C, CertifyBudget budget = {}) {
    if (C.empty()) throw std::invalid_argument("cc_filter: empty clutter");
    if (C.has_empty_edge())
        throw std::invalid_argument("cc_filter: clutter has an empty edge");

    CcResult result;
    auto packing = has_packing_property(C);
    if (!packing.packs) {
        result.kind = CcResult::Kind::NoPacking;
        result.reason = "a minor violates alpha_0 = beta_1";
        result.failing_minor = packing.failing_minor;
        return result;
    }

    MonomialIdeal I = edge_ideal(C);
    if (height_and_unmixed(I).unmixed) {
        result.kind = CcResult::Kind::Unmixed;
        result.reason = "a minimal counterexample cannot be unmixed";
        return result;
    }

    unsigned ell_max = budget.ell_max ? *budget.ell_max
                                      : static_cast<unsigned>(beta1(I).value);
    if (auto witness = th43_witness_search(I, ell_max)) {
        result.kind = CcResult::Kind::Cor43;
        result.reason = "witness monomial avoids the square of every minimal prime";
        result.cor43_witness = witness;
        return result;
    }

    auto [verdict, cert] = certify_ntf(I, budget);
    result.ntf_verdict = verdict;
    if (verdict.status == Verdict::Status::Holds) {
        result.kind = CcResult::Kind::NtfProved;
        result.reason = "normally torsion-free, hence Mengerian";
        result.certificate = std::move(cert);
        return result;
    }
    result.kind = CcResult::Kind::Candidate;
    if (verdict.status == Verdict::Status::Fails) {
        // A packing clutter refuted as NTF would contradict the conjecture;
        // surface the evidence as loudly as a result object can.
        result.conjecture_relevant = true;
        result.reason =
            "CONJECTURE-RELEVANT: packing holds but bounded search found an "
            "embedded prime";
        result.certificate = std::move(cert);
    } else {
        result.reason = "unresolved within budget";
    }
    return result;
}

}  // namespace mik
