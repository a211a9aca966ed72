#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "cyclekit/bigint.hpp"
#include "cyclekit/decompose.hpp"
#include "cyclekit/graph.hpp"

namespace cyclekit {

enum class RateSource { mcb, relevant };

/* Rings per node, binned by ring length. */
struct RateDistribution {
    std::map<std::uint32_t, double> rates;
    std::uint64_t node_count = 0;
    RateSource source = RateSource::mcb;
};

RateDistribution ring_rates_from_lengths(const std::vector<std::uint32_t>& lengths,
                                         std::uint64_t node_count, RateSource source);

/* Relevant-cycle rates from family cycle counts; never enumerates members. */
RateDistribution ring_rates_from_decomposition(const Decomposition& d, RateSource source);

/* Per-frame average of equally weighted distributions. */
RateDistribution average_rates(const std::vector<RateDistribution>& frames);

struct PowerLawFit {
    double alpha; // decay exponent: rate ~ C * k^(-alpha)
    double c;
};

/* Least squares on log-log over nonzero bins with k_min <= k <= k_max. */
PowerLawFit fit_power_law(const RateDistribution& dist, std::uint32_t k_min,
                          std::uint32_t k_max);

struct SliStat {
    std::uint32_t length;
    bigint count;
};

struct PiStat {
    std::uint32_t length;
    std::uint32_t rank;      // basis columns in the class
    std::uint32_t sli_rows;
    std::uint32_t polyhedra; // non-basis merged rows
};

struct ClassSummary {
    std::vector<SliStat> sli;
    std::vector<PiStat> pi;
    double single_sli_fraction = 0.0; // classes that merge into one row
};

ClassSummary class_statistics(const Decomposition& d);

struct RggSpec {
    std::uint32_t n = 0;
    double mean_degree = 3.0;
    bool periodic = true;
    std::uint64_t seed = 0;
};

/* Radius chosen so (n-1) * (4/3) pi r^3 = mean_degree on the unit torus. */
double rgg_radius(const RggSpec& spec);

Graph generate_rgg(const RggSpec& spec, std::mt19937_64& rng);
Graph generate_rgg(const RggSpec& spec); // seeds a fresh generator from spec.seed

} // namespace cyclekit
