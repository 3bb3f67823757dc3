#include "qloss/witness.hpp"

#include <doctest.h>

#include <cstring>
#include <numbers>

using namespace qloss;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

void check_identical(const Trajectory& a, const Trajectory& b) {
    REQUIRE(a.times.size() == b.times.size());
    for (std::size_t i = 0; i < a.times.size(); ++i) {
        CHECK(same_bits(a.times[i], b.times[i]));
        CHECK(a.states[i] == b.states[i]);
        const auto& x = a.snapshots[i];
        const auto& y = b.snapshots[i];
        CHECK(same_bits(x.quantum_loss, y.quantum_loss));
        CHECK(same_bits(x.mutual_info, y.mutual_info));
        CHECK(same_bits(x.s_exchange, y.s_exchange));
        CHECK(same_bits(x.coherent_info, y.coherent_info));
        CHECK(same_bits(x.quantum_noise, y.quantum_noise));
        CHECK(same_bits(a.loss_derivative[i], b.loss_derivative[i]));
        CHECK(same_bits(a.mutual_info_derivative[i], b.mutual_info_derivative[i]));
    }
}

}  // namespace

TEST_CASE("parallel sampling is bit-identical to the serial reference") {
    GenericModel generic;
    generic.terms.push_back({RateFunction::sinusoid(0.5, 1.0), pauli::sigma_z()});
    generic.terms.push_back({RateFunction::constant(0.1), pauli::sigma_minus()});
    generic.step = 5e-3;

    const std::vector<std::pair<ChannelModel, double>> cases = {
        {ChannelModel::dephasing(RateFunction::sinusoid(1.0, 1.0)), 4 * std::numbers::pi},
        {ChannelModel::amplitude_damping({0.2, 2.0}), 30.0},
        {ChannelModel::pauli(RateFunction::constant(1.0), RateFunction::constant(0.5),
                             RateFunction::damped_cosine(0.8, 0.3, 2.0)),
         5.0},
        {ChannelModel::generic(generic), 5.0},
    };
    for (const auto& [ch, t_max] : cases) {
        CAPTURE(ch.name());
        const auto serial = sample_trajectory_serial(ch, t_max, 1501);
        const auto parallel = sample_trajectory(ch, t_max, 1501);
        check_identical(serial, parallel);

        const auto a = measure(serial);
        const auto b = measure(parallel);
        REQUIRE(a.intervals.size() == b.intervals.size());
        CHECK(same_bits(a.measure, b.measure));
    }
}

TEST_CASE("both kernels report the same failure") {
    const auto one = RateFunction::constant(1.0);
    const auto ch = ChannelModel::pauli(one, one, RateFunction::constant(-1.5));
    std::string serial_msg, parallel_msg;
    try {
        sample_trajectory_serial(ch, 5.0, 1001);
    } catch (const std::domain_error& e) {
        serial_msg = e.what();
    }
    try {
        sample_trajectory(ch, 5.0, 1001);
    } catch (const std::domain_error& e) {
        parallel_msg = e.what();
    }
    CHECK_FALSE(serial_msg.empty());
    CHECK(serial_msg == parallel_msg);
}
