#include "cyclekit/sampler.hpp"

#include <algorithm>

#include "cyclekit/bigint.hpp"
#include "cyclekit/errors.hpp"

namespace cyclekit {

McbSampler::McbSampler(const ComponentDecomposition& comp, std::uint64_t seed)
    : comp_(&comp), rng_(seed) {
    const auto& cd = comp.classes;
    const std::uint32_t nu = static_cast<std::uint32_t>(comp.mcb.cycles.size());
    rows_.resize(cd.sli.size());
    slot_of_.assign(cd.sli.size(), -1);
    owner_.resize(nu);
    for (std::uint32_t i = 0; i < cd.sli.size(); ++i) {
        rows_[i].bits = cd.sli[i].expansion;
        if (cd.sli[i].in_basis) {
            owner_[cd.sli[i].basis_pos] = i;
            slot_of_[i] = cd.sli[i].basis_pos;
        } else {
            nonbasis_.push_back(i);
        }
    }
}

std::vector<std::pair<std::uint32_t, bigint>> McbSampler::move_weights(
    std::uint32_t incoming) const {
    const auto& cd = comp_->classes;
    if (slot_of_[incoming] >= 0)
        fail(errc::invalid_argument, "incoming row already owns a slot");
    const std::uint32_t len = cd.sli[incoming].length;

    // Candidates: the row itself plus the owners of its equal-length slots,
    // drawn with weight inverse to their member counts.
    std::vector<std::uint32_t> cand{incoming};
    for (std::uint32_t s : rows_[incoming].bits)
        if (comp_->mcb.cycles[s].length == len) cand.push_back(owner_[s]);
    bigint prod = 1;
    for (std::uint32_t c : cand) prod *= cd.sli[c].count;
    std::vector<std::pair<std::uint32_t, bigint>> out;
    out.reserve(cand.size());
    for (std::uint32_t c : cand) out.emplace_back(c, prod / cd.sli[c].count);
    return out;
}

void McbSampler::apply_swap(std::uint32_t incoming, std::uint32_t outgoing) {
    if (slot_of_[outgoing] < 0) fail(errc::invalid_argument, "outgoing row owns no slot");
    const std::uint32_t s = static_cast<std::uint32_t>(slot_of_[outgoing]);
    if (!rows_[incoming].test(s) ||
        comp_->classes.sli[incoming].length != comp_->classes.sli[outgoing].length)
        fail(errc::invalid_argument, "rows are not exchangeable");

    const CycleVec entering = rows_[incoming]; // copy: mutated below
    CycleVec delta = vec_xor(entering, unit_vec(s));
    for (auto& row : rows_)
        if (row.test(s)) row = vec_xor(row, delta);

    owner_[s] = incoming;
    slot_of_[incoming] = static_cast<long>(s);
    slot_of_[outgoing] = -1;
    *std::find(nonbasis_.begin(), nonbasis_.end(), incoming) = outgoing;
}

void McbSampler::step() {
    ++steps_done_;
    if (nonbasis_.empty()) return; // single-state chain

    const std::uint32_t incoming = nonbasis_[uniform_u64(nonbasis_.size(), rng_)];
    auto cand = move_weights(incoming);
    std::vector<bigint> weights;
    weights.reserve(cand.size());
    for (const auto& [c, w] : cand) weights.push_back(w);
    const std::uint32_t outgoing = cand[weighted_pick(weights, rng_)].first;
    if (outgoing != incoming) apply_swap(incoming, outgoing);
}

void McbSampler::run(std::uint64_t steps) {
    for (std::uint64_t i = 0; i < steps; ++i) step();
}

std::uint64_t McbSampler::default_steps() const {
    return 10 * std::max<std::uint64_t>(1, comp_->classes.sli.size());
}

std::vector<std::uint32_t> McbSampler::state_key() const {
    std::vector<std::uint32_t> key = owner_;
    std::sort(key.begin(), key.end());
    return key;
}

std::vector<EdgeCycle> McbSampler::realize() {
    const auto& cd = comp_->classes;
    if (comp_->vres.dags.empty() && !owner_.empty())
        fail(errc::invalid_argument, "path data was dropped; rebuild with keep_dags");
    std::vector<EdgeCycle> out;
    out.reserve(owner_.size());
    for (std::uint32_t sli : owner_) {
        const SliClass& sc = cd.sli[sli];
        std::vector<bigint> weights;
        weights.reserve(sc.members.size());
        for (std::uint32_t row : sc.members)
            weights.push_back(comp_->vres.families[cd.rows[row].family].count);
        const std::uint32_t fam_id =
            cd.rows[sc.members[weighted_pick(weights, rng_)]].family;
        const VFamily& fam = comp_->vres.families[fam_id];
        out.push_back(sample_family_cycle(comp_->sub.graph, comp_->vres.dags[fam.root], fam, rng_));
    }
    return out;
}

} // namespace cyclekit
