#include "oracles.hpp"
#include "qloss/witness.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace qloss;

namespace {

const double pi = std::numbers::pi;

double loss_at(const Trajectory& traj, double t) { return evaluate_at(traj, t).quantum_loss; }

}  // namespace

TEST_CASE("constant-rate dephasing is Markovian") {
    const auto ch = ChannelModel::dephasing(RateFunction::constant(1.0));
    const auto traj = sample_trajectory(ch, 5.0, 1001);
    for (std::size_t i = 1; i < traj.times.size(); ++i)
        CHECK(traj.snapshots[i].quantum_loss >= traj.snapshots[i - 1].quantum_loss);
    CHECK(traj.snapshots.back().quantum_loss == doctest::Approx(0.99996725062543).epsilon(1e-10));
    CHECK(traj.snapshots.back().quantum_loss ==
          doctest::Approx(oracle::dephasing_loss(std::exp(-5.0))).epsilon(1e-12));

    const auto report = measure(traj);
    CHECK(report.intervals.empty());
    CHECK(report.measure == 0.0);
    CHECK(report.markovian);
    CHECK(report.analytic == Verdict::markovian);
}

TEST_CASE("zero rate keeps the loss at zero") {
    const auto traj = sample_trajectory(ChannelModel::dephasing(RateFunction::constant(0.0)), 3.0, 301);
    for (const auto& s : traj.snapshots) CHECK(std::abs(s.quantum_loss) < 1e-12);
    const auto report = measure(traj);
    CHECK(report.intervals.empty());
    CHECK(report.magnitude == 0.0);
}

TEST_CASE("sinusoidal dephasing recovers on the negative half periods") {
    const auto ch = ChannelModel::dephasing(RateFunction::sinusoid(1.0, 1.0));
    const auto traj = sample_trajectory(ch, 4 * pi, 4001);
    const auto report = measure(traj);
    REQUIRE(report.intervals.size() == 2);
    for (std::size_t k = 0; k < 2; ++k) {
        CHECK(report.intervals[k].start == doctest::Approx((2 * k + 1) * pi).epsilon(1e-5));
        CHECK(report.intervals[k].end == doctest::Approx((2 * k + 2) * pi).epsilon(1e-5));
        // Gamma goes from 2 back to 0 over the half period.
        const double expect = oracle::dephasing_loss(1.0) - oracle::dephasing_loss(std::exp(-2.0));
        CHECK(report.intervals[k].drop == doctest::Approx(expect).epsilon(1e-8));
        CHECK(report.intervals[k].drop == doctest::Approx(-0.986747430039656).epsilon(1e-8));
    }
    CHECK(report.measure == doctest::Approx(-2 * 0.986747430039656).epsilon(1e-8));
    CHECK(report.magnitude == doctest::Approx(-report.measure));
    CHECK_FALSE(report.markovian);
    CHECK(report.analytic == Verdict::non_markovian);
}

TEST_CASE("strong-coupling amplitude damping") {
    const double lambda = 0.2, gamma0 = 2.0;
    const auto ch = ChannelModel::amplitude_damping({lambda, gamma0});
    const auto traj = sample_trajectory(ch, 30.0, 3001);
    const auto intervals = detect_intervals(traj);
    REQUIRE(intervals.size() == 4);
    for (int k = 0; k < 4; ++k) {
        const double zero = oracle::lorentzian_zero(lambda, gamma0, k);
        CHECK(std::abs(intervals[k].start - zero) < 1e-2);
        CHECK(std::abs(intervals[k].end - oracle::lorentzian_extremum(lambda, gamma0, k + 1)) < 1e-2);
        CHECK(loss_at(traj, zero) == doctest::Approx(2.0).epsilon(1e-6));
    }
    CHECK(analytic_verdict(ch, 30.0) == Verdict::non_markovian);
    CHECK(analytic_verdict(ch, 4.0) == Verdict::markovian);
}

TEST_CASE("weak-coupling amplitude damping is Markovian") {
    const auto ch = ChannelModel::amplitude_damping({4.0, 1.0});
    const auto report = measure(sample_trajectory(ch, 30.0, 3001));
    CHECK(report.intervals.empty());
    CHECK(report.analytic == Verdict::markovian);
}

TEST_CASE("mutual information witness mirrors the loss witness") {
    const std::vector<std::pair<ChannelModel, double>> cases = {
        {ChannelModel::dephasing(RateFunction::sinusoid(1.0, 1.0)), 4 * pi},
        {ChannelModel::amplitude_damping({0.2, 2.0}), 30.0},
        {ChannelModel::pauli(RateFunction::constant(0.2), RateFunction::constant(0.2),
                             RateFunction::sinusoid(1.0, 1.0)),
         10.0},
    };
    for (const auto& [ch, t_max] : cases) {
        const auto traj = sample_trajectory(ch, t_max, 2001);
        const auto a = detect_intervals(traj);
        const auto b = mutual_info_witness(traj);
        REQUIRE(a.size() == b.size());
        for (std::size_t k = 0; k < a.size(); ++k) {
            CHECK(std::abs(a[k].start - b[k].start) <= 2e-3 * traj.spacing);
            CHECK(std::abs(a[k].end - b[k].end) <= 2e-3 * traj.spacing);
        }
    }
}

TEST_CASE("analytic verdicts") {
    const auto one = RateFunction::constant(1.0);
    CHECK(analytic_verdict(ChannelModel::dephasing(one), 10.0) == Verdict::markovian);
    CHECK(analytic_verdict(ChannelModel::dephasing(RateFunction::sinusoid(1.0, 1.0)), 3.0) == Verdict::markovian);
    CHECK(analytic_verdict(ChannelModel::dephasing(RateFunction::sinusoid(1.0, 1.0)), 4.0) == Verdict::non_markovian);
    CHECK(analytic_verdict(ChannelModel::pauli(one, one, one), 5.0) == Verdict::markovian);
    // One negative rate is fine while every pairwise sum stays non-negative.
    CHECK(analytic_verdict(ChannelModel::pauli(one, one, RateFunction::constant(-0.5)), 5.0) == Verdict::markovian);
    CHECK(analytic_verdict(ChannelModel::pauli(one, one, RateFunction::constant(-1.5)), 5.0) == Verdict::non_markovian);
    CHECK(analytic_verdict(ChannelModel::generic({}), 5.0) == Verdict::unavailable);

    CHECK(to_string(Verdict::markovian) == "markovian");
    CHECK(to_string(Verdict::non_markovian) == "non-markovian");
    CHECK(to_string(Verdict::unavailable) == "unavailable");
}

TEST_CASE("generic channels go through the integrator") {
    GenericModel model;
    model.terms.push_back({RateFunction::sinusoid(0.5, 1.0), pauli::sigma_z()});
    model.step = 2e-3;
    const auto generic = sample_trajectory(ChannelModel::generic(model), 2 * pi, 801);
    const auto closed = sample_trajectory(ChannelModel::dephasing(RateFunction::sinusoid(1.0, 1.0)), 2 * pi, 801);
    for (std::size_t i = 0; i < generic.times.size(); i += 20)
        CHECK(std::abs(generic.snapshots[i].quantum_loss - closed.snapshots[i].quantum_loss) < 1e-6);
    CHECK(std::abs(loss_at(generic, 4.321) - loss_at(closed, 4.321)) < 1e-6);

    const auto report = measure(generic);
    REQUIRE(report.intervals.size() == 1);
    CHECK(report.intervals[0].start == doctest::Approx(pi).epsilon(1e-4));
    CHECK(report.analytic == Verdict::unavailable);
}

TEST_CASE("sampling errors") {
    const auto ch = ChannelModel::dephasing(RateFunction::constant(1.0));
    CHECK_THROWS_AS(sample_trajectory(ch, 0.0, 100), std::invalid_argument);
    CHECK_THROWS_AS(sample_trajectory(ch, -1.0, 100), std::invalid_argument);
    CHECK_THROWS_AS(sample_trajectory(ch, 1.0, 2), std::invalid_argument);

    const auto table = ChannelModel::dephasing(RateFunction::tabulated({{0.0, 1.0}, {2.0, 1.0}}));
    CHECK_THROWS_AS(sample_trajectory(table, 3.0, 100), std::invalid_argument);
    CHECK_NOTHROW(sample_trajectory(table, 2.0, 100));

    const auto one = RateFunction::constant(1.0);
    CHECK_THROWS_AS(sample_trajectory(ChannelModel::pauli(one, one, RateFunction::constant(-1.5)), 5.0, 101),
                    std::domain_error);
}

// Invariants over a spread of channels.

namespace {

std::vector<std::pair<ChannelModel, double>> invariant_cases() {
    const auto one = RateFunction::constant(1.0);
    return {
        {ChannelModel::dephasing(one), 5.0},
        {ChannelModel::dephasing(RateFunction::sinusoid(1.0, 1.0)), 4 * pi},
        {ChannelModel::dephasing(RateFunction::damped_cosine(1.5, 0.4, 1.0)), 12.0},
        {ChannelModel::amplitude_damping({4.0, 1.0}), 20.0},
        {ChannelModel::amplitude_damping({0.2, 2.0}), 30.0},
        {ChannelModel::amplitude_damping({2.0, 1.0}), 10.0},
        {ChannelModel::pauli(one, one, one), 5.0},
        {ChannelModel::pauli(RateFunction::constant(1.0), RateFunction::constant(0.5),
                             RateFunction::damped_cosine(0.8, 0.3, 2.0)),
         6.0},
    };
}

}  // namespace

TEST_CASE("property: loss and mutual information are dual") {
    for (const auto& [ch, t_max] : invariant_cases()) {
        const auto traj = sample_trajectory(ch, t_max, 1001);
        for (const auto& s : traj.snapshots) {
            CHECK(std::abs(s.mutual_info + s.quantum_loss - 2.0) < 1e-7);
            CHECK(std::abs(s.quantum_noise - (2 * s.s_exchange - s.quantum_loss)) < 1e-9);
            CHECK(s.quantum_loss >= -1e-9);
            CHECK(s.quantum_loss <= 2 * std::min(1.0, s.s_exchange) + 1e-9);
        }
        for (std::size_t i = 0; i < traj.times.size(); ++i)
            CHECK(std::abs(traj.loss_derivative[i] + traj.mutual_info_derivative[i]) < 1e-6);
    }
}

TEST_CASE("property: measure is non-positive and vanishes without intervals") {
    for (const auto& [ch, t_max] : invariant_cases()) {
        const auto report = measure(sample_trajectory(ch, t_max, 1001));
        CHECK(report.measure <= 0.0);
        CHECK((report.measure == 0.0) == report.intervals.empty());
        CHECK(report.markovian == report.intervals.empty());
        double sum = 0.0;
        for (const auto& d : report.intervals) {
            CHECK(d.drop < 0.0);
            CHECK(d.start < d.end);
            sum += d.drop;
        }
        CHECK(report.measure == doctest::Approx(sum));
    }
}

// A loss decrease always implies a violated rate condition. The converse
// holds for dephasing and amplitude damping, where the loss is a monotone
// function of a single decoherence factor, but not for the Pauli channel: a
// brief dip of one pairwise sum can be hidden by the other two rates.
TEST_CASE("property: numeric witness agrees with the analytic verdict") {
    for (const auto& [ch, t_max] : invariant_cases()) {
        CAPTURE(ch.name());
        const auto report = measure(sample_trajectory(ch, t_max, 2001));
        if (report.analytic == Verdict::markovian) CHECK(report.markovian);
        if (report.analytic == Verdict::non_markovian && ch.family() != ChannelModel::Family::pauli)
            CHECK_FALSE(report.markovian);
    }
}

TEST_CASE("a short negative pairwise sum can stay invisible to the loss") {
    const auto ch = ChannelModel::pauli(RateFunction::constant(1.0), RateFunction::constant(0.5),
                                        RateFunction::damped_cosine(0.8, 0.3, 2.0));
    const auto report = measure(sample_trajectory(ch, 6.0, 2001));
    CHECK(report.analytic == Verdict::non_markovian);
    CHECK(report.markovian);
}

TEST_CASE("property: measure is stable under grid refinement") {
    for (const auto& [ch, t_max] : invariant_cases()) {
        const auto coarse = measure(sample_trajectory(ch, t_max, 1001));
        const auto fine = measure(sample_trajectory(ch, t_max, 4001));
        CHECK(coarse.intervals.size() == fine.intervals.size());
        CHECK(std::abs(coarse.measure - fine.measure) < 1e-6);
    }
}

TEST_CASE("property: continuous evaluation matches the grid") {
    const auto traj = sample_trajectory(ChannelModel::amplitude_damping({0.2, 2.0}), 30.0, 3001);
    for (std::size_t i = 0; i < traj.times.size(); i += 37) {
        const auto s = evaluate_at(traj, traj.times[i]);
        CHECK(s.quantum_loss == doctest::Approx(traj.snapshots[i].quantum_loss).epsilon(1e-14));
    }
    CHECK_THROWS_AS(evaluate_at(traj, 31.0), std::invalid_argument);
}
