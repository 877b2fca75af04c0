#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "mik/decomposition.hpp"
#include "mik/ideal.hpp"

namespace mik {

using Edge = std::vector<std::size_t>;  // sorted 1-based vertex indices

/// A clutter: an antichain of nonempty edges over vertices {1..n}.  Canonical
/// edge order is by cardinality then lexicographic.  A contraction can shrink
/// an edge to the empty set; that degenerate clutter is represented by a
/// single empty edge and reported by has_empty_edge().
class Clutter {
public:
    Clutter(std::size_t vertices, std::vector<Edge> edges)
        : vertices_(vertices), edges_(std::move(edges)) {
        if (vertices_ == 0) throw std::invalid_argument("vertex count must be positive");
        for (auto& e : edges_) {
            std::sort(e.begin(), e.end());
            e.erase(std::unique(e.begin(), e.end()), e.end());
            for (auto v : e)
                if (v < 1 || v > vertices_)
                    throw std::out_of_range("vertex index out of range");
        }
        minimalize_edges();
    }

    std::size_t vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    bool empty() const { return edges_.empty(); }
    bool has_empty_edge() const {
        return !edges_.empty() && edges_[0].empty();
    }

    bool is_uniform(std::size_t d) const {
        return std::all_of(edges_.begin(), edges_.end(),
                           [&](const Edge& e) { return e.size() == d; });
    }

    bool operator==(const Clutter& other) const {
        return vertices_ == other.vertices_ && edges_ == other.edges_;
    }
    bool operator!=(const Clutter& other) const { return !(*this == other); }

    std::string str() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < edges_.size(); ++i) {
            if (i) os << ",";
            os << "{";
            for (std::size_t j = 0; j < edges_[i].size(); ++j) {
                if (j) os << ",";
                os << edges_[i][j];
            }
            os << "}";
        }
        return os.str();
    }

private:
    void minimalize_edges() {
        std::sort(edges_.begin(), edges_.end(), edge_less);
        edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
        std::vector<Edge> kept;
        for (const auto& e : edges_) {
            bool superset = std::any_of(kept.begin(), kept.end(), [&](const Edge& k) {
                return std::includes(e.begin(), e.end(), k.begin(), k.end());
            });
            if (!superset) kept.push_back(e);
        }
        edges_.swap(kept);
    }

    static bool edge_less(const Edge& a, const Edge& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }

    std::size_t vertices_;
    std::vector<Edge> edges_;
};

inline MonomialIdeal edge_ideal(const Clutter& C) {
    std::vector<Monomial> gens;
    gens.reserve(C.edges().size());
    for (const auto& e : C.edges()) {
        Monomial m = Monomial::unit(C.vertices());
        for (auto v : e) m = m * Monomial::variable(C.vertices(), v);
        gens.push_back(m);
    }
    return MonomialIdeal::make(C.vertices(), std::move(gens));
}

inline Clutter clutter_of(const MonomialIdeal& I) {
    if (!I.is_squarefree())
        throw std::invalid_argument("clutter_of needs a square-free ideal");
    if (I.is_zero() || I.is_whole_ring())
        throw std::invalid_argument("clutter_of needs a nonzero proper ideal");
    std::vector<Edge> edges;
    edges.reserve(I.generators().size());
    for (const auto& g : I.generators()) edges.push_back(g.support());
    return Clutter(I.ambient(), std::move(edges));
}

/// Minor: delete the vertices of D (drop their edges), contract the vertices
/// of T (shrink edges past them).  Order-independent; the vertex count is
/// unchanged and dead vertices are allowed.
inline Clutter minor(const Clutter& C, const std::vector<std::size_t>& del,
                     const std::vector<std::size_t>& contract) {
    for (auto d : del)
        for (auto t : contract)
            if (d == t)
                throw std::invalid_argument("deletion and contraction sets overlap");
    std::vector<Edge> edges;
    for (const auto& e : C.edges()) {
        bool deleted = std::any_of(e.begin(), e.end(), [&](std::size_t v) {
            return std::find(del.begin(), del.end(), v) != del.end();
        });
        if (deleted) continue;
        Edge shrunk;
        for (auto v : e)
            if (std::find(contract.begin(), contract.end(), v) == contract.end())
                shrunk.push_back(v);
        edges.push_back(std::move(shrunk));
    }
    return Clutter(C.vertices(), std::move(edges));
}

/// alpha_0: minimum cardinality of a transversal, by exhaustive search over
/// vertex subsets in ascending size.
inline std::size_t cover_number(const Clutter& C) {
    if (C.empty()) throw std::invalid_argument("cover_number: empty clutter");
    if (C.has_empty_edge())
        throw std::invalid_argument("cover_number: clutter has an empty edge");
    const std::size_t n = C.vertices();
    if (n > 14) throw std::invalid_argument("vertex count exceeds the search cap");

    std::vector<std::uint32_t> edge_masks;
    for (const auto& e : C.edges()) {
        std::uint32_t m = 0;
        for (auto v : e) m |= std::uint32_t{1} << (v - 1);
        edge_masks.push_back(m);
    }
    for (std::size_t size = 1; size <= n; ++size) {
        for (std::uint32_t s = 0; s < (std::uint32_t{1} << n); ++s) {
            if (static_cast<std::size_t>(std::popcount(s)) != size) continue;
            bool covers = std::all_of(edge_masks.begin(), edge_masks.end(),
                                      [&](std::uint32_t em) { return em & s; });
            if (covers) return size;
        }
    }
    return n;  // unreachable: the full vertex set always covers
}

/// beta_1 at a = 1: maximum number of pairwise disjoint edges.
inline std::size_t matching_number(const Clutter& C) {
    if (C.empty()) throw std::invalid_argument("matching_number: empty clutter");
    if (C.has_empty_edge())
        throw std::invalid_argument("matching_number: clutter has an empty edge");

    std::vector<std::uint32_t> edge_masks;
    for (const auto& e : C.edges()) {
        std::uint32_t m = 0;
        for (auto v : e) m |= std::uint32_t{1} << (v - 1);
        edge_masks.push_back(m);
    }
    std::size_t best = 0;
    std::function<void(std::size_t, std::uint32_t, std::size_t)> extend =
        [&](std::size_t from, std::uint32_t used, std::size_t count) {
            best = std::max(best, count);
            for (std::size_t i = from; i < edge_masks.size(); ++i)
                if (!(edge_masks[i] & used))
                    extend(i + 1, used | edge_masks[i], count + 1);
        };
    extend(0, 0, 0);
    return best;
}

struct PackingResult {
    bool packs = false;
    // Witness minor (delete set, contract set) violating alpha_0 == beta_1.
    std::optional<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>>
        failing_minor;
};

/// The packing property: every minor with a nonempty edge set (and no empty
/// edge) satisfies the Koenig property alpha_0 == beta_1.
inline PackingResult has_packing_property(const Clutter& C) {
    if (C.empty()) throw std::invalid_argument("has_packing_property: empty clutter");
    const std::size_t n = C.vertices();
    if (n > 14) throw std::invalid_argument("vertex count exceeds the minor sweep cap");

    PackingResult result;
    // Ternary sweep: each vertex is kept, deleted, or contracted; stop at the
    // first violating minor.
    std::vector<std::size_t> del, contract;
    std::function<bool(std::size_t)> find = [&](std::size_t v) -> bool {
        if (v == n) {
            Clutter M = minor(C, del, contract);
            if (M.empty() || M.has_empty_edge()) return false;
            return cover_number(M) != matching_number(M);
        }
        if (find(v + 1)) return true;
        del.push_back(v + 1);
        if (find(v + 1)) return true;
        del.pop_back();
        contract.push_back(v + 1);
        if (find(v + 1)) return true;
        contract.pop_back();
        return false;
    };
    if (find(0)) {
        result.packs = false;
        result.failing_minor = {del, contract};
    } else {
        result.packs = true;
    }
    return result;
}

/// Cone: one fresh vertex added to every edge.  The ambient grows by one.
inline Clutter cone(const Clutter& C, std::size_t new_vertex) {
    if (new_vertex <= C.vertices())
        throw std::invalid_argument("cone vertex must be fresh");
    std::vector<Edge> edges;
    edges.reserve(C.edges().size());
    for (auto e : C.edges()) {
        e.push_back(new_vertex);
        edges.push_back(std::move(e));
    }
    return Clutter(std::max(C.vertices() + 1, new_vertex), std::move(edges));
}

/// Two-coloring test for 2-uniform clutters.
inline bool is_bipartite(const Clutter& C) {
    if (!C.is_uniform(2))
        throw std::invalid_argument("is_bipartite needs a 2-uniform clutter");
    const std::size_t n = C.vertices();
    std::vector<std::vector<std::size_t>> adj(n + 1);
    for (const auto& e : C.edges()) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    std::vector<int> color(n + 1, -1);
    for (std::size_t start = 1; start <= n; ++start) {
        if (color[start] != -1 || adj[start].empty()) continue;
        color[start] = 0;
        std::queue<std::size_t> q;
        q.push(start);
        while (!q.empty()) {
            std::size_t u = q.front();
            q.pop();
            for (auto w : adj[u]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    q.push(w);
                } else if (color[w] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace mik
