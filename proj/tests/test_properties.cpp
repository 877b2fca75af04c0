#include <catch2/catch_amalgamated.hpp>

#include "properties.hpp"

#define RUN_SUITE(fn)                    \
    TEST_CASE(#fn) {                     \
        auto r = miktest::fn();          \
        INFO(r.detail);                  \
        CHECK(r.passed);                 \
    }

RUN_SUITE(membership_oracle_suite)
RUN_SUITE(modular_laws_suite)
RUN_SUITE(kaplansky_suite)
RUN_SUITE(pro5_colon_suite)
RUN_SUITE(dual_ass_agreement_suite)
RUN_SUITE(symbolic_intersection_suite)
RUN_SUITE(min_existence_suite)
RUN_SUITE(pro1_consistency_suite)
RUN_SUITE(cone_spp_suite)
RUN_SUITE(ntf_stability_suite)
RUN_SUITE(exhaustive_soundness_suite)
RUN_SUITE(linear_split_equivalence_suite)
RUN_SUITE(spp_implies_persistence_suite)
