#pragma once

// Named input ideals reused across the test files.

#include "mik/mik.hpp"

namespace miktest {

/// Six-variable ideal whose strong persistence fails at k = 2.
inline mik::MonomialIdeal six_var_ideal() {
    return mik::parse_ideal(
        "x1*x2*x3, x1*x2*x4, x1*x3*x5, x1*x4*x6, x1*x5*x6, x2*x3*x6, x2*x4*x5, "
        "x2*x5*x6, x3*x4*x5, x3*x4*x6");
}

inline mik::MonomialIdeal triangle_ideal() {
    return mik::parse_ideal("x1*x2, x2*x3, x1*x3");
}

inline mik::Clutter triangle_clutter() {
    return mik::Clutter(3, {{1, 2}, {2, 3}, {1, 3}});
}

inline mik::Clutter c4_clutter() {
    return mik::Clutter(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
}

/// Normally torsion-free 6-variable ideal certified by deletion recursion.
inline mik::MonomialIdeal ntf1_ideal() {
    return mik::parse_ideal(
        "x3*x6, x2*x5, x1*x4, x1*x5*x6, x2*x4*x6, x3*x4*x5, x1*x2*x3");
}

/// The same ideal with x3*x6 replaced by x3*x6*x7: an embedded prime appears
/// at the second power.
inline mik::MonomialIdeal ntf1_perturbed() {
    return mik::parse_ideal(
        "x3*x6*x7, x2*x5, x1*x4, x1*x5*x6, x2*x4*x6, x3*x4*x5, x1*x2*x3", 7);
}

/// Mixed-height ideal with eleven minimal primes and witness x6*x7*x8.
inline mik::MonomialIdeal mixed_height_ideal() {
    return mik::parse_ideal(
        "x6*x7*x8, x5*x6*x7, x1*x2*x7, x1*x2*x3, x3*x4*x5*x6, x2*x3*x4*x5");
}

/// Cubic ideal that splits linearly on (x3, x6) but is not torsion-free.
inline mik::MonomialIdeal split36_ideal() {
    return mik::parse_ideal(
        "x1*x2*x3, x2*x3*x4, x3*x4*x5, x3*x7*x8, x1*x3*x8, x5*x3*x7, x2*x6*x7, "
        "x4*x5*x6, x5*x6*x7, x6*x7*x8, x1*x2*x6");
}

inline mik::MonomialIdeal split36_side_i() {
    return mik::parse_ideal("x1*x2, x2*x4, x4*x5, x7*x8, x1*x8, x5*x7", 8);
}

inline mik::MonomialIdeal split36_side_j() {
    return mik::parse_ideal("x4*x5, x5*x7, x7*x8, x1*x2, x2*x7", 8);
}

/// Edge ideal of the 4-uniform interval hypergraph of the 8-cycle.
inline mik::MonomialIdeal c8_interval_ideal() {
    return mik::parse_ideal(
        "x1*x2*x3*x4, x2*x3*x4*x5, x3*x4*x5*x6, x4*x5*x6*x7, x5*x6*x7*x8, "
        "x6*x7*x8*x1, x7*x8*x1*x2, x8*x1*x2*x3");
}

}  // namespace miktest
