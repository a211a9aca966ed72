#pragma once

#include <cstdint>
#include <vector>

#include "cyclekit/cycle_space.hpp"
#include "cyclekit/decompose.hpp"
#include "cyclekit/graph.hpp"
#include "cyclekit/vfamilies.hpp"

namespace cyclekit {

/*
 * Brute-force reference implementations used as ground truth in tests.
 * Everything here enumerates the full 2^nu cycle space and is capped to
 * small graphs; nothing in the main pipeline calls into this header.
 */

struct OracleCycle {
    EdgeCycle edges;
    CycleVec vec;
    bool simple;
};

/* All nonzero cycle-space elements, sorted by (size, edge set). */
std::vector<OracleCycle> enumerate_cycles(const Graph& g, const SpanningForest& f,
                                          bool override_cap = false);

/* Indices of cycles outside the span of strictly shorter cycles. */
std::vector<size_t> relevant_oracle(const std::vector<OracleCycle>& cycles);

/* Every minimum-cost independent nu-subset, each sorted, list sorted. */
std::vector<std::vector<size_t>> enumerate_mcbs(const std::vector<OracleCycle>& cycles,
                                                std::uint32_t nu, bool override_cap = false);

/* Partition of `relevant` by transitive closure of single-swap tests. */
std::vector<std::vector<size_t>> pi_oracle(const std::vector<OracleCycle>& cycles,
                                           const std::vector<size_t>& relevant,
                                           const std::vector<std::vector<size_t>>& mcbs);

/* Partition of `relevant` by xor-in-shorter-span tests. */
std::vector<std::vector<size_t>> sli_oracle(const std::vector<OracleCycle>& cycles,
                                            const std::vector<size_t>& relevant);

struct OracleReport {
    std::vector<OracleCycle> cycles;
    std::vector<size_t> relevant;
    std::vector<std::vector<size_t>> mcbs;
    std::vector<std::vector<size_t>> pi_classes;
    std::vector<std::vector<size_t>> sli_classes;
    std::uint64_t min_cost = 0;
};

OracleReport oracle_report(const Graph& g, bool override_cap = false);

/* Exhaustive family membership (exponential; test support only). */
std::vector<EdgeCycle> enumerate_family_members(const Graph& g, const PathDag& dag,
                                                const VFamily& fam);

/*
 * Outcome of checking a pipeline decomposition against the brute-force
 * reference on the same graph.  All comparisons are over concrete cycles
 * (sorted parent-graph edge sets), so they do not depend on basis choices.
 * Polyhedra are compared per matched class as counts, the only part of them
 * that is independent of which minimum cycle basis was selected.
 */
struct OracleComparison {
    bool relevant_ok = false;
    bool mcb_count_ok = false;
    bool cost_ok = false;
    bool pi_ok = false;
    bool sli_ok = false;
    bool polyhedra_ok = false;
    bigint pipeline_mcbs;
    bigint oracle_mcbs;
    std::uint64_t pipeline_cost = 0;
    std::uint64_t oracle_cost = 0;
    bigint pipeline_relevant;
    std::uint64_t oracle_relevant = 0;
    bool ok() const {
        return relevant_ok && mcb_count_ok && cost_ok && pi_ok && sli_ok && polyhedra_ok;
    }
};

/* The decomposition must have been built with dags kept. */
OracleComparison compare_with_oracle(const Decomposition& d, const OracleReport& rep);

/* Times enumerate_cycles has run; lets tests prove a path never enumerates. */
std::uint64_t oracle_enumeration_calls();

} // namespace cyclekit
