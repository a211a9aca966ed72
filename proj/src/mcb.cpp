#include "cyclekit/mcb.hpp"

#include "cyclekit/errors.hpp"

namespace cyclekit {

McbBasis compute_mcb(const std::vector<VFamily>& families, const R0Matrix& r0, std::uint32_t nu) {
    McbBasis b;
    if (nu == 0) return b;

    std::vector<Gf2V> witness(nu, Gf2V(nu));
    for (std::uint32_t j = 0; j < nu; ++j) witness[j].set(j);

    b.cycles.reserve(nu);
    b.basis_rows.reserve(nu);
    for (std::uint32_t j = 0; j < nu; ++j) {
        long pick = -1;
        for (size_t pos = 0; pos < r0.rows.size(); ++pos) {
            if (sparse_dense_dot(families[r0.rows[pos]].vec, witness[j])) {
                pick = static_cast<long>(pos);
                break;
            }
        }
        if (pick < 0) fail(errc::rank_deficient, "candidate rows do not span the cycle space");
        const VFamily& fam = families[r0.rows[pick]];
        for (std::uint32_t k = j + 1; k < nu; ++k)
            if (sparse_dense_dot(fam.vec, witness[k])) witness[k] ^= witness[j];
        b.basis_rows.push_back(static_cast<std::uint32_t>(pick));
        b.cycles.push_back({r0.rows[static_cast<size_t>(pick)], fam.length, fam.vec, fam.prototype});
        b.cost += fam.length;
    }

    // Turn the witnesses into a dual set: <cycles[i].vec, dual[j]> == (i == j).
    // Sweep high to low, testing against the untouched witnesses.
    b.dual = witness;
    for (std::uint32_t k = nu; k-- > 1;)
        for (std::uint32_t j = 0; j < k; ++j)
            if (sparse_dense_dot(b.cycles[k].vec, witness[j])) b.dual[j] ^= b.dual[k];

    return b;
}

std::vector<std::uint32_t> expand_in_mcb(const McbBasis& basis, const CycleVec& c) {
    std::vector<std::uint32_t> coords;
    for (std::uint32_t j = 0; j < basis.dual.size(); ++j)
        if (sparse_dense_dot(c, basis.dual[j])) coords.push_back(j);
    return coords;
}

} // namespace cyclekit
