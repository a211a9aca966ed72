#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <functional>

#include "cyclekit/decompose.hpp"
#include "cyclekit/errors.hpp"
#include "cyclekit/fixtures.hpp"
#include "cyclekit/statistics.hpp"

using namespace cyclekit;

namespace {

errc code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const error& e) {
        return e.code();
    }
    return errc{-1};
}

double rate_at(const RateDistribution& d, std::uint32_t len) {
    auto it = d.rates.find(len);
    return it == d.rates.end() ? 0.0 : it->second;
}

} // namespace

TEST_CASE("rates from raw lengths") {
    RateDistribution d = ring_rates_from_lengths({4, 4, 6}, 8, RateSource::relevant);
    CHECK(d.node_count == 8);
    CHECK(d.source == RateSource::relevant);
    CHECK(rate_at(d, 4) == doctest::Approx(0.25));
    CHECK(rate_at(d, 6) == doctest::Approx(0.125));
    CHECK(code_of([] { ring_rates_from_lengths({3}, 0, RateSource::mcb); }) ==
          errc::invalid_argument);
}

TEST_CASE("triangle: one ring per three nodes either way") {
    Decomposition d = decompose(fixture_graph("triangle"));
    for (auto src : {RateSource::mcb, RateSource::relevant}) {
        RateDistribution dist = ring_rates_from_decomposition(d, src);
        CHECK(dist.rates.size() == 1);
        CHECK(rate_at(dist, 3) == doctest::Approx(1.0 / 3.0));
    }
}

TEST_CASE("cube: six relevant squares but only five basis slots") {
    Decomposition d = decompose(fixture_graph("cube"));
    RateDistribution mcb = ring_rates_from_decomposition(d, RateSource::mcb);
    RateDistribution rel = ring_rates_from_decomposition(d, RateSource::relevant);
    CHECK(rate_at(mcb, 4) == doctest::Approx(5.0 / 8.0));
    CHECK(rate_at(rel, 4) == doctest::Approx(6.0 / 8.0));
}

TEST_CASE("bracelet rates come from family counts, not enumeration") {
    // 2^k interchangeable long loops are tallied through their shared count.
    for (unsigned k : {3u, 6u}) {
        CAPTURE(k);
        Decomposition d = decompose(bracelet_graph(k));
        RateDistribution rel = ring_rates_from_decomposition(d, RateSource::relevant);
        const double n = 4.0 * k;
        CHECK(rate_at(rel, 4) == doctest::Approx(k / n));
        CHECK(rate_at(rel, 3 * k) == doctest::Approx(std::pow(2.0, k) / n));
        CHECK(rel.rates.size() == 2);
    }
}

TEST_CASE("frame averaging weights frames equally") {
    RateDistribution a = ring_rates_from_lengths({4, 4}, 4, RateSource::mcb);    // {4: 0.5}
    RateDistribution b = ring_rates_from_lengths({4, 6, 6}, 8, RateSource::mcb); // {4: .125, 6: .25}
    RateDistribution avg = average_rates({a, b});
    CHECK(rate_at(avg, 4) == doctest::Approx(0.3125));
    CHECK(rate_at(avg, 6) == doctest::Approx(0.125));
    CHECK(code_of([] { average_rates({}); }) == errc::insufficient_data);
}

TEST_CASE("power-law fit recovers synthetic exponents exactly") {
    RateDistribution d;
    d.node_count = 1;
    for (std::uint32_t k = 3; k <= 30; ++k)
        d.rates[k] = 2.5 * std::pow(static_cast<double>(k), -1.7);
    PowerLawFit fit = fit_power_law(d, 3, 30);
    CHECK(fit.alpha == doctest::Approx(1.7).epsilon(1e-9));
    CHECK(fit.c == doctest::Approx(2.5).epsilon(1e-9));

    // Bins outside the window must not disturb the fit.
    d.rates[2] = 99.0;
    d.rates[31] = 1e-12;
    PowerLawFit fit2 = fit_power_law(d, 3, 30);
    CHECK(fit2.alpha == doctest::Approx(fit.alpha).epsilon(1e-12));

    CHECK(code_of([&] { fit_power_law(d, 100, 200); }) == errc::insufficient_data);
    CHECK(code_of([&] { fit_power_law(d, 5, 5); }) == errc::insufficient_data);
}

TEST_CASE("class summary: prism-hex and hex-prism") {
    ClassSummary s = class_statistics(decompose(fixture_graph("prism-hex")));
    CHECK(s.sli.size() == 7);
    CHECK(s.pi.size() == 5);
    CHECK(s.single_sli_fraction == doctest::Approx(0.8)); // 4 of 5 classes stay single
    auto big = std::find_if(s.pi.begin(), s.pi.end(),
                            [](const PiStat& p) { return p.sli_rows > 1; });
    REQUIRE(big != s.pi.end());
    CHECK(big->length == 6);
    CHECK(big->rank == 2);
    CHECK(big->sli_rows == 3);
    CHECK(big->polyhedra == 1);

    ClassSummary t = class_statistics(decompose(fixture_graph("hex-prism")));
    CHECK(t.pi.size() == 7);
    CHECK(t.single_sli_fraction == doctest::Approx(1.0)); // hexagon pair merges fully
}

TEST_CASE("geometric radius matches the target mean degree") {
    RggSpec spec{101, 3.0, true, 0};
    double r = rgg_radius(spec);
    const double pi = std::acos(-1.0);
    CHECK(100.0 * (4.0 / 3.0) * pi * r * r * r == doctest::Approx(3.0).epsilon(1e-12));
}

TEST_CASE("random geometric graphs: determinism and degree calibration") {
    RggSpec spec{500, 3.0, true, 99};
    Graph a = generate_rgg(spec);
    Graph b = generate_rgg(spec);
    REQUIRE(a.num_edges() == b.num_edges());
    CHECK(a.edges() == b.edges());

    // Dropping the wrap-around can only lose edges for the same point set.
    RggSpec open = spec;
    open.periodic = false;
    CHECK(generate_rgg(open).num_edges() <= a.num_edges());

    double total = 0;
    const unsigned seeds = 20;
    for (unsigned s = 0; s < seeds; ++s) {
        RggSpec sp{1000, 3.0, true, 1000 + s};
        Graph g = generate_rgg(sp);
        total += 2.0 * g.num_edges() / sp.n;
    }
    double mean = total / seeds;
    CHECK(mean > 2.8);
    CHECK(mean < 3.2);
}
