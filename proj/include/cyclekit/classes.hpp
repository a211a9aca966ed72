#pragma once

#include <cstdint>
#include <vector>

#include "cyclekit/bigint.hpp"
#include "cyclekit/mcb.hpp"
#include "cyclekit/vfamilies.hpp"

namespace cyclekit {

/*
 * One relevant family row expressed over basis coordinates.  `diag` holds the
 * expansion coordinates whose basis cycle has the same length as the row; a
 * family is relevant exactly when that set is nonempty, and all members of a
 * family share it.
 */
struct RRow {
    std::uint32_t family;
    std::uint32_t length;
    bool in_basis = false;
    std::uint32_t basis_pos = 0; // valid when in_basis
    std::vector<std::uint32_t> expansion; // ascending basis positions
    std::vector<std::uint32_t> diag;      // equal-length subset of expansion
};

/*
 * Rows merged by identical diagonal bits: interchangeable as basis members.
 * `count` totals the member families' cycle counts.
 */
struct SliClass {
    std::uint32_t pi_class;
    std::uint32_t length;
    bool in_basis = false;
    std::uint32_t basis_pos = 0;
    std::uint32_t representative;      // canonically-first member row
    std::vector<std::uint32_t> members; // row indices, canonical order
    std::vector<std::uint32_t> diag;
    std::vector<std::uint32_t> expansion; // representative's expansion
    bigint count;
};

/*
 * Closed surface attached to a non-basis merged row: the representative cycle
 * together with the basis cycles of its expansion xors to zero.  `unique` is
 * set when every face's merged row holds a single cycle.
 */
struct Polyhedron {
    std::uint32_t sli_row;
    std::uint32_t rep_family;
    std::vector<std::uint32_t> faces_basis; // basis positions
    std::uint32_t num_faces;                // faces_basis.size() + 1
    bool unique = false;
};

/* Maximal set of relevant rows coupled through equal-length basis cycles. */
struct PiClass {
    std::uint32_t length;
    std::vector<std::uint32_t> basis_cols; // ascending basis positions
    std::vector<std::uint32_t> rows;       // row indices, canonical order
    std::vector<std::uint32_t> sli_rows;   // indices into `sli`
};

struct ClassDecomposition {
    std::vector<RRow> rows;        // relevant rows, canonical order
    std::vector<PiClass> pi_classes;
    std::vector<SliClass> sli;     // grouped by pi class, canonical order
    std::vector<Polyhedron> polyhedra;
    std::vector<std::uint32_t> sli_of_basis; // basis position -> sli index
    bigint relevant_count;         // total relevant cycles across families
};

ClassDecomposition build_classes(const std::vector<VFamily>& families, const R0Matrix& r0,
                                 const McbBasis& basis);

/*
 * Exact number of minimum cycle bases: product over classes of the weighted
 * count of linearly independent row selections.  Exponential in class size,
 * so guarded by a work cap.
 */
bigint count_mcbs(const ClassDecomposition& cd, std::uint64_t work_cap = 1000000);

} // namespace cyclekit
