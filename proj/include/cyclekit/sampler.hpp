#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "cyclekit/decompose.hpp"

namespace cyclekit {

/*
 * Markov chain over the minimum cycle bases of one component.  States are
 * basis-forming sets of merged rows; one step swaps a non-basis row against an
 * equal-length basis slot it covers, with move weights chosen so that the
 * stationary law, combined with per-row member sampling in realize(), is
 * uniform over concrete minimum cycle bases.
 */
class McbSampler {
public:
    McbSampler(const ComponentDecomposition& comp, std::uint64_t seed);

    void step();
    void run(std::uint64_t steps);
    std::uint64_t default_steps() const; // 10x the merged-row count

    std::uint64_t steps_done() const { return steps_done_; }
    std::uint32_t num_slots() const { return static_cast<std::uint32_t>(owner_.size()); }

    /* Merged row currently occupying each basis slot. */
    const std::vector<std::uint32_t>& slot_owners() const { return owner_; }
    /* Current coordinates of a merged row over the evolving basis. */
    const CycleVec& row_vector(std::uint32_t sli) const { return rows_[sli]; }
    /* Sorted owner list: canonical key of the current state. */
    std::vector<std::uint32_t> state_key() const;

    /* Draw concrete member cycles for the current basis, one per slot. */
    std::vector<EdgeCycle> realize();

    /*
     * Verification hooks: the exchange candidates for a proposed incoming row
     * in the current state, with their selection weights, and a deterministic
     * swap.  step() is exactly one uniform proposal plus one weighted pick
     * through these.
     */
    const std::vector<std::uint32_t>& nonbasis_rows() const { return nonbasis_; }
    std::vector<std::pair<std::uint32_t, bigint>> move_weights(std::uint32_t incoming) const;
    void apply_swap(std::uint32_t incoming, std::uint32_t outgoing);

    std::mt19937_64& rng() { return rng_; }

private:
    const ComponentDecomposition* comp_;
    std::vector<CycleVec> rows_;        // per merged row
    std::vector<std::uint32_t> owner_;  // slot -> merged row
    std::vector<long> slot_of_;         // merged row -> slot, -1 outside
    std::vector<std::uint32_t> nonbasis_;
    std::mt19937_64 rng_;
    std::uint64_t steps_done_ = 0;
};

} // namespace cyclekit
