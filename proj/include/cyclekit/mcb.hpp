#pragma once

#include <cstdint>
#include <vector>

#include "cyclekit/cycle_space.hpp"
#include "cyclekit/vfamilies.hpp"

namespace cyclekit {

struct McbCycle {
    std::uint32_t family; // index into the family list
    std::uint32_t length;
    CycleVec vec;
    EdgeCycle edges; // the family prototype
};

/*
 * A minimum cycle basis plus the dual witnesses needed to expand arbitrary
 * cycles over it: bit j of the expansion of c is <c, dual[j]>.
 */
struct McbBasis {
    std::vector<McbCycle> cycles;          // selection order, nu entries
    std::vector<Gf2V> dual;                // nu dense vectors over nu coordinates
    std::vector<std::uint32_t> basis_rows; // positions in the candidate row order
    std::uint64_t cost = 0;                // total basis length
};

/*
 * Greedy exchange over the length-sorted candidate rows: maintain witness
 * vectors, pick for each the first candidate with odd inner product, then
 * post-process the witnesses into the dual set used for expansion.
 */
McbBasis compute_mcb(const std::vector<VFamily>& families, const R0Matrix& r0, std::uint32_t nu);

/* Coordinates (basis positions, ascending) of c's expansion over the basis. */
std::vector<std::uint32_t> expand_in_mcb(const McbBasis& basis, const CycleVec& c);

} // namespace cyclekit
