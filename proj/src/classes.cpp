#include "cyclekit/classes.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

#include "cyclekit/errors.hpp"

namespace cyclekit {

namespace {

void ck_check(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::uint32_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0u);
    }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

/* Descending-coordinate comparison: the row owning the highest differing
 * coordinate is the larger one. */
bool revlex_less(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
    auto ia = a.rbegin(), ib = b.rbegin();
    while (ia != a.rend() && ib != b.rend()) {
        if (*ia != *ib) return *ia < *ib;
        ++ia;
        ++ib;
    }
    return ib != b.rend(); // a exhausted first: b owns the remaining lower bits
}

} // namespace

ClassDecomposition build_classes(const std::vector<VFamily>& families, const R0Matrix& r0,
                                 const McbBasis& basis) {
    const std::uint32_t nu = static_cast<std::uint32_t>(basis.cycles.size());
    ClassDecomposition cd;
    cd.relevant_count = 0;
    if (nu == 0) return cd;

    std::vector<char> is_basis_pos(r0.rows.size(), 0);
    std::vector<std::uint32_t> basis_pos_of(r0.rows.size(), 0);
    for (std::uint32_t j = 0; j < nu; ++j) {
        is_basis_pos[basis.basis_rows[j]] = 1;
        basis_pos_of[basis.basis_rows[j]] = j;
    }

    // Expand every candidate row and keep the ones with equal-length support.
    std::vector<RRow> kept;
    for (size_t pos = 0; pos < r0.rows.size(); ++pos) {
        const VFamily& fam = families[r0.rows[pos]];
        RRow row;
        row.family = r0.rows[pos];
        row.length = fam.length;
        row.expansion = expand_in_mcb(basis, fam.vec);
        if (is_basis_pos[pos]) {
            row.in_basis = true;
            row.basis_pos = basis_pos_of[pos];
            ck_check(row.expansion.size() == 1 && row.expansion[0] == row.basis_pos,
                     "basis row does not expand to its own unit vector");
        }
        for (std::uint32_t j : row.expansion) {
            ck_check(basis.cycles[j].length <= row.length,
                     "expansion reaches past the row's length");
            if (basis.cycles[j].length == row.length) row.diag.push_back(j);
        }
        if (row.diag.empty()) continue; // spanned by strictly shorter cycles
        cd.relevant_count += fam.count;
        kept.push_back(std::move(row));
    }

    // Couple rows through their equal-length basis cycles.
    std::vector<std::uint32_t> row_of_basis(nu);
    for (std::uint32_t i = 0; i < kept.size(); ++i)
        if (kept[i].in_basis) row_of_basis[kept[i].basis_pos] = i;
    UnionFind uf(static_cast<std::uint32_t>(kept.size()));
    for (std::uint32_t i = 0; i < kept.size(); ++i)
        for (std::uint32_t j : kept[i].diag) uf.unite(i, row_of_basis[j]);

    std::map<std::uint32_t, std::vector<std::uint32_t>> groups;
    for (std::uint32_t i = 0; i < kept.size(); ++i) groups[uf.find(i)].push_back(i);

    struct RawClass {
        std::uint32_t length;
        std::vector<std::uint32_t> basis_cols;
        std::vector<std::uint32_t> members; // indices into `kept`
    };
    std::vector<RawClass> classes;
    for (auto& [root, members] : groups) {
        RawClass rc;
        rc.length = kept[members.front()].length;
        for (std::uint32_t i : members) {
            ck_check(kept[i].length == rc.length, "mixed lengths inside one class");
            if (kept[i].in_basis) rc.basis_cols.push_back(kept[i].basis_pos);
        }
        std::sort(rc.basis_cols.begin(), rc.basis_cols.end());
        ck_check(!rc.basis_cols.empty(), "class without a basis cycle");
        rc.members = std::move(members);
        classes.push_back(std::move(rc));
    }
    std::sort(classes.begin(), classes.end(), [](const RawClass& a, const RawClass& b) {
        if (a.length != b.length) return a.length < b.length;
        return a.basis_cols.front() < b.basis_cols.front();
    });

    // Canonical order inside a class: basis rows by column, then the rest by
    // (diagonal popcount, descending-coordinate comparison of the expansion).
    for (auto& rc : classes) {
        std::sort(rc.members.begin(), rc.members.end(), [&](std::uint32_t a, std::uint32_t b) {
            const RRow& ra = kept[a];
            const RRow& rb = kept[b];
            if (ra.in_basis != rb.in_basis) return ra.in_basis;
            if (ra.in_basis) return ra.basis_pos < rb.basis_pos;
            if (ra.diag.size() != rb.diag.size()) return ra.diag.size() < rb.diag.size();
            return revlex_less(ra.expansion, rb.expansion);
        });
    }

    cd.sli_of_basis.assign(nu, 0);
    for (std::uint32_t ci = 0; ci < classes.size(); ++ci) {
        RawClass& rc = classes[ci];
        PiClass pc;
        pc.length = rc.length;
        pc.basis_cols = rc.basis_cols;

        std::vector<std::uint32_t> new_ids;
        for (std::uint32_t i : rc.members) {
            std::uint32_t id = static_cast<std::uint32_t>(cd.rows.size());
            pc.rows.push_back(id);
            new_ids.push_back(id);
            cd.rows.push_back(kept[i]);
        }

        // Merge rows with identical diagonal bits, keeping first-seen order.
        std::vector<std::vector<std::uint32_t>> keys;
        std::vector<std::uint32_t> key_of;
        for (std::uint32_t id : pc.rows) {
            const auto& d = cd.rows[id].diag;
            std::uint32_t k = 0;
            while (k < keys.size() && keys[k] != d) ++k;
            if (k == keys.size()) keys.push_back(d);
            key_of.push_back(k);
        }
        std::vector<std::uint32_t> sli_ids(keys.size(), 0);
        for (std::uint32_t k = 0; k < keys.size(); ++k) {
            SliClass sc;
            sc.pi_class = ci;
            sc.length = rc.length;
            sc.diag = keys[k];
            for (size_t t = 0; t < pc.rows.size(); ++t)
                if (key_of[t] == k) sc.members.push_back(pc.rows[t]);
            sc.representative = sc.members.front();
            const RRow& rep = cd.rows[sc.representative];
            sc.in_basis = rep.in_basis;
            sc.basis_pos = rep.basis_pos;
            sc.expansion = rep.expansion;
            sc.count = 0;
            for (std::uint32_t id : sc.members) sc.count += families[cd.rows[id].family].count;
            std::uint32_t sid = static_cast<std::uint32_t>(cd.sli.size());
            sli_ids[k] = sid;
            pc.sli_rows.push_back(sid);
            if (sc.in_basis) cd.sli_of_basis[sc.basis_pos] = sid;
            cd.sli.push_back(std::move(sc));
        }
        cd.pi_classes.push_back(std::move(pc));
    }

    // A merged row can hold at most one basis row, and its canonical first
    // member is that basis row when present.
    for (const SliClass& sc : cd.sli)
        for (size_t t = 1; t < sc.members.size(); ++t)
            ck_check(!cd.rows[sc.members[t]].in_basis, "basis row merged behind another row");

    for (std::uint32_t sid = 0; sid < cd.sli.size(); ++sid) {
        const SliClass& sc = cd.sli[sid];
        if (sc.in_basis) continue;
        Polyhedron poly;
        poly.sli_row = sid;
        poly.rep_family = cd.rows[sc.representative].family;
        poly.faces_basis = sc.expansion;
        poly.num_faces = static_cast<std::uint32_t>(sc.expansion.size()) + 1;

        CycleVec closure = families[poly.rep_family].vec;
        poly.unique = (sc.count == 1);
        for (std::uint32_t j : poly.faces_basis) {
            closure = vec_xor(closure, basis.cycles[j].vec);
            if (cd.sli[cd.sli_of_basis[j]].count != 1) poly.unique = false;
        }
        ck_check(closure.empty(), "polyhedron faces do not close up");
        cd.polyhedra.push_back(std::move(poly));
    }

    return cd;
}

namespace {

struct ClassCounter {
    const std::vector<std::uint64_t>& masks;
    const std::vector<bigint>& weights;
    std::uint32_t need;
    std::uint64_t budget;
    std::uint64_t pivot[64] = {};

    bigint run(size_t idx, std::uint32_t chosen) {
        if (chosen == need) return 1;
        if (masks.size() - idx < need - chosen) return 0;
        if (budget == 0) fail(errc::too_large, "basis count exceeds the work cap");
        --budget;
        bigint total = run(idx + 1, chosen);
        std::uint64_t m = masks[idx];
        int slot = -1;
        while (m) {
            int b = 63 - std::countl_zero(m);
            if (!pivot[b]) {
                pivot[b] = m;
                slot = b;
                break;
            }
            m ^= pivot[b];
        }
        if (slot >= 0) {
            total += weights[idx] * run(idx + 1, chosen + 1);
            pivot[slot] = 0;
        }
        return total;
    }
};

} // namespace

bigint count_mcbs(const ClassDecomposition& cd, std::uint64_t work_cap) {
    bigint total = 1;
    std::uint64_t budget = work_cap;
    for (const PiClass& pc : cd.pi_classes) {
        const std::uint32_t r = static_cast<std::uint32_t>(pc.basis_cols.size());
        if (r > 64) fail(errc::too_large, "class rank exceeds 64");
        std::vector<std::uint64_t> masks;
        std::vector<bigint> weights;
        for (std::uint32_t sid : pc.sli_rows) {
            const SliClass& sc = cd.sli[sid];
            std::uint64_t m = 0;
            for (std::uint32_t j : sc.diag) {
                auto it = std::lower_bound(pc.basis_cols.begin(), pc.basis_cols.end(), j);
                m |= std::uint64_t{1} << (it - pc.basis_cols.begin());
            }
            masks.push_back(m);
            weights.push_back(sc.count);
        }
        ClassCounter counter{masks, weights, r, budget};
        total *= counter.run(0, 0);
        budget = counter.budget;
    }
    return total;
}

} // namespace cyclekit
