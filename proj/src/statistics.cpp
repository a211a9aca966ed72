#include "cyclekit/statistics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

#include "cyclekit/errors.hpp"

namespace cyclekit {

RateDistribution ring_rates_from_lengths(const std::vector<std::uint32_t>& lengths,
                                         std::uint64_t node_count, RateSource source) {
    if (node_count == 0) fail(errc::invalid_argument, "node count must be positive");
    RateDistribution dist;
    dist.node_count = node_count;
    dist.source = source;
    for (std::uint32_t len : lengths) dist.rates[len] += 1.0 / static_cast<double>(node_count);
    return dist;
}

RateDistribution ring_rates_from_decomposition(const Decomposition& d, RateSource source) {
    const std::uint64_t n = d.graph.num_nodes();
    if (n == 0) fail(errc::invalid_argument, "node count must be positive");
    RateDistribution dist;
    dist.node_count = n;
    dist.source = source;
    for (const ComponentDecomposition& comp : d.components) {
        if (source == RateSource::mcb) {
            for (const McbCycle& c : comp.mcb.cycles)
                dist.rates[c.length] += 1.0 / static_cast<double>(n);
        } else {
            std::map<std::uint32_t, bigint> counts;
            for (const RRow& row : comp.classes.rows)
                counts[row.length] += comp.vres.families[row.family].count;
            for (const auto& [len, cnt] : counts)
                dist.rates[len] += cnt.convert_to<double>() / static_cast<double>(n);
        }
    }
    return dist;
}

RateDistribution average_rates(const std::vector<RateDistribution>& frames) {
    if (frames.empty()) fail(errc::insufficient_data, "no frames to average");
    RateDistribution out;
    out.source = frames.front().source;
    out.node_count = frames.front().node_count;
    for (const RateDistribution& f : frames)
        for (const auto& [len, rate] : f.rates) out.rates[len] += rate / frames.size();
    return out;
}

PowerLawFit fit_power_law(const RateDistribution& dist, std::uint32_t k_min,
                          std::uint32_t k_max) {
    std::vector<double> xs, ys;
    for (const auto& [len, rate] : dist.rates) {
        if (len < k_min || len > k_max || rate <= 0.0) continue;
        xs.push_back(std::log(static_cast<double>(len)));
        ys.push_back(std::log(rate));
    }
    if (xs.size() < 2) fail(errc::insufficient_data, "need at least two nonzero bins to fit");
    double mx = 0, my = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= xs.size();
    my /= ys.size();
    double sxy = 0, sxx = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sxy += (xs[i] - mx) * (ys[i] - my);
        sxx += (xs[i] - mx) * (xs[i] - mx);
    }
    const double slope = sxy / sxx;
    return {-slope, std::exp(my - slope * mx)};
}

ClassSummary class_statistics(const Decomposition& d) {
    ClassSummary s;
    std::uint32_t single = 0, total = 0;
    for (const ComponentDecomposition& comp : d.components) {
        const ClassDecomposition& cd = comp.classes;
        for (const SliClass& sc : cd.sli) s.sli.push_back({sc.length, sc.count});
        for (const PiClass& pc : cd.pi_classes) {
            std::uint32_t polys = 0;
            for (std::uint32_t sid : pc.sli_rows)
                if (!cd.sli[sid].in_basis) ++polys;
            s.pi.push_back({pc.length, static_cast<std::uint32_t>(pc.basis_cols.size()),
                            static_cast<std::uint32_t>(pc.sli_rows.size()), polys});
            ++total;
            if (pc.sli_rows.size() == 1) ++single;
        }
    }
    s.single_sli_fraction = total ? static_cast<double>(single) / total : 0.0;
    return s;
}

double rgg_radius(const RggSpec& spec) {
    const double pi = std::acos(-1.0);
    return std::cbrt(3.0 * spec.mean_degree /
                     (4.0 * pi * static_cast<double>(spec.n - 1)));
}

Graph generate_rgg(const RggSpec& spec, std::mt19937_64& rng) {
    if (spec.n < 2) fail(errc::invalid_argument, "need at least two nodes");
    const double r = rgg_radius(spec);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<std::array<double, 3>> pos(spec.n);
    for (auto& p : pos) p = {unit(rng), unit(rng), unit(rng)};

    auto dist2 = [&](std::uint32_t a, std::uint32_t b) {
        double s = 0;
        for (int d = 0; d < 3; ++d) {
            double diff = std::fabs(pos[a][d] - pos[b][d]);
            if (spec.periodic) diff = std::min(diff, 1.0 - diff);
            s += diff * diff;
        }
        return s;
    };

    // Bucket grid of side >= r; with wrap-around, neighbor buckets may repeat
    // at tiny grid sizes, so edges are deduplicated through a set.
    const int cells = std::max(1, static_cast<int>(std::floor(1.0 / r)));
    std::vector<std::vector<std::uint32_t>> grid(
        static_cast<size_t>(cells) * cells * cells);
    auto cell_of = [&](std::uint32_t i) {
        int c[3];
        for (int d = 0; d < 3; ++d)
            c[d] = std::min(cells - 1, static_cast<int>(pos[i][d] * cells));
        return (c[0] * cells + c[1]) * cells + c[2];
    };
    auto cell_index = [&](int x, int y, int z) {
        auto wrap = [&](int v) { return ((v % cells) + cells) % cells; };
        return (wrap(x) * cells + wrap(y)) * cells + wrap(z);
    };
    for (std::uint32_t i = 0; i < spec.n; ++i) grid[cell_of(i)].push_back(i);

    std::set<Edge> edges;
    const double r2 = r * r;
    for (int x = 0; x < cells; ++x)
        for (int y = 0; y < cells; ++y)
            for (int z = 0; z < cells; ++z) {
                const auto& here = grid[cell_index(x, y, z)];
                if (here.empty()) continue;
                for (int dx = -1; dx <= 1; ++dx)
                    for (int dy = -1; dy <= 1; ++dy)
                        for (int dz = -1; dz <= 1; ++dz) {
                            if (!spec.periodic &&
                                (x + dx < 0 || x + dx >= cells || y + dy < 0 ||
                                 y + dy >= cells || z + dz < 0 || z + dz >= cells))
                                continue;
                            const auto& there = grid[cell_index(x + dx, y + dy, z + dz)];
                            for (std::uint32_t a : here)
                                for (std::uint32_t b : there) {
                                    if (a >= b) continue;
                                    if (dist2(a, b) <= r2)
                                        edges.insert({std::min(a, b), std::max(a, b)});
                                }
                        }
            }
    return Graph(spec.n, std::vector<Edge>(edges.begin(), edges.end()));
}

Graph generate_rgg(const RggSpec& spec) {
    std::mt19937_64 rng(spec.seed);
    return generate_rgg(spec, rng);
}

} // namespace cyclekit
