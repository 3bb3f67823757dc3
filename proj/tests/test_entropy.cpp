#include "oracles.hpp"
#include "qloss/channels.hpp"
#include "qloss/entropy.hpp"

#include <doctest.h>

#include <cmath>

using namespace qloss;

namespace {

DensityMatrix product_of_halves() {
    const auto half = ComplexMatrix::identity(2) * complex{0.5};
    return DensityMatrix(kron(half, half));
}

DensityMatrix ad_pair(double g) { return DensityMatrix(amplitude_damped_bell_matrix(std::sqrt(g))); }
DensityMatrix dephased_pair(double c) { return DensityMatrix(dephased_bell_matrix(c)); }

}  // namespace

TEST_CASE("von Neumann entropy") {
    CHECK(von_neumann_entropy(DensityMatrix(ComplexMatrix::identity(2) * complex{0.5})) == doctest::Approx(1.0));
    CHECK(von_neumann_entropy(bell_state().projector()) == doctest::Approx(0.0));
    const double d[] = {0.75, 0.25};
    CHECK(von_neumann_entropy(DensityMatrix(ComplexMatrix::diagonal(d))) ==
          doctest::Approx(0.8112781244591328).epsilon(1e-12));
    CHECK(von_neumann_entropy(DensityMatrix(ComplexMatrix::identity(4) * complex{0.25})) == doctest::Approx(2.0));

    const double bad[] = {0.5, -1e-6, 0.5};
    CHECK_THROWS_AS(spectrum_entropy(bad), std::domain_error);
}

TEST_CASE("conditional entropy") {
    CHECK(conditional_entropy(bell_state().projector(), Subsystem::second) == doctest::Approx(-1.0));
    CHECK(conditional_entropy(product_of_halves(), Subsystem::second) == doctest::Approx(1.0));
    CHECK(conditional_entropy(ad_pair(0.5), Subsystem::second) == doctest::Approx(-0.18872187554086714).epsilon(1e-12));
    CHECK_THROWS_AS(conditional_entropy(DensityMatrix(ComplexMatrix::identity(2) * complex{0.5}), Subsystem::first),
                    std::invalid_argument);
}

TEST_CASE("mutual information") {
    CHECK(mutual_information(bell_state().projector()) == doctest::Approx(2.0));
    CHECK(mutual_information(product_of_halves()) == doctest::Approx(0.0));
    CHECK(mutual_information(dephased_pair(0.5)) == doctest::Approx(1.1887218755408671).epsilon(1e-12));
}

TEST_CASE("entropy exchange") {
    CHECK(entropy_exchange(bell_state().projector()) == doctest::Approx(0.0));
    for (double g : {0.0, 0.2, 0.5, 0.9}) CHECK(entropy_exchange(ad_pair(g)) == doctest::Approx(oracle::h2((1 + g) / 2)));
    CHECK(entropy_exchange(DensityMatrix(pauli_bell_matrix(0, 0, 0))) == doctest::Approx(2.0));
}

TEST_CASE("coherent information") {
    CHECK(coherent_information(bell_state().projector()) == doctest::Approx(1.0));
    CHECK(coherent_information(ad_pair(0.0)) == doctest::Approx(-1.0));
    CHECK(std::abs(coherent_information(dephased_pair(0.0))) < 1e-12);
}

TEST_CASE("quantum loss") {
    CHECK(quantum_loss(bell_state().projector(), 1.0) == doctest::Approx(0.0));
    CHECK(quantum_loss(dephased_pair(0.5), 1.0) == doctest::Approx(0.8112781244591328).epsilon(1e-12));
    CHECK(quantum_loss(ad_pair(0.5), 1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(quantum_loss(ad_pair(0.3), 1.0) == doctest::Approx(1.3242277506590906).epsilon(1e-12));
    CHECK(quantum_loss(ad_pair(0.0), 1.0) == doctest::Approx(2.0));

    // With an initial entropy of zero the bound forces L_Q <= 0, which the
    // evolved pair violates.
    CHECK_THROWS_AS(quantum_loss(ad_pair(0.3), 0.0), std::runtime_error);
}

TEST_CASE("quantum noise") {
    CHECK(quantum_noise(bell_state().projector(), 0.0) == doctest::Approx(0.0));
    for (double c : {0.1, 0.5, 0.9}) {
        const auto rho = dephased_pair(c);
        const double loss = quantum_loss(rho, 1.0);
        CHECK(quantum_noise(rho, loss) == doctest::Approx(loss));
    }
    CHECK(quantum_noise(ad_pair(0.0), quantum_loss(ad_pair(0.0), 1.0)) == doctest::Approx(0.0));
}

TEST_CASE("mutual entanglement of pure states") {
    CHECK(mutual_entanglement_initial(bell_state()) == doctest::Approx(2.0));
    CHECK(mutual_entanglement_initial(PureState({1.0, 0.0, 0.0, 0.0})) == doctest::Approx(0.0));
    const double d[] = {0.75, 0.25};
    CHECK(mutual_entanglement_initial(purify(DensityMatrix(ComplexMatrix::diagonal(d)))) ==
          doctest::Approx(1.6225562489182657).epsilon(1e-12));
}

TEST_CASE("snapshot agrees with the individual operations") {
    const auto rho = ad_pair(0.42);
    const auto s = take_snapshot(1.5, rho, 1.0);
    CHECK(s.t == 1.5);
    CHECK(s.s_exchange == doctest::Approx(entropy_exchange(rho)));
    CHECK(s.coherent_info == doctest::Approx(coherent_information(rho)));
    CHECK(s.quantum_loss == doctest::Approx(quantum_loss(rho, 1.0)));
    CHECK(s.mutual_info == doctest::Approx(mutual_information(rho)));
    CHECK(s.quantum_noise == doctest::Approx(quantum_noise(rho, s.quantum_loss)));
    CHECK(s.s_ancilla == doctest::Approx(1.0));
}

TEST_CASE("property: closed-form losses equal the eigen path") {
    std::mt19937_64 rng(23);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int i = 0; i < 100; ++i) {
        const double c = u(rng);
        CHECK(std::abs(quantum_loss(dephased_pair(c), 1.0) - oracle::dephasing_loss(c)) < 1e-10);
        const double g = u(rng);
        CHECK(std::abs(quantum_loss(ad_pair(g), 1.0) - oracle::amplitude_damping_loss(g)) < 1e-10);

        // Pauli: F, G, H from non-negative integrated rates, so the state is valid.
        const double a = 3 * u(rng), b = 3 * u(rng), e = 3 * u(rng);
        const double f = std::exp(-(a + b)), gg = std::exp(-(b + e)), h = std::exp(-(a + e));
        const double expect = oracle::shannon(oracle::pauli_block_eigenvalues(f, gg, h));
        CHECK(std::abs(quantum_loss(DensityMatrix(pauli_bell_matrix(f, gg, h)), 1.0) - expect) < 1e-10);
    }
}

TEST_CASE("property: mutual information bound on random states") {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 300; ++i) {
        const DensityMatrix rho(oracle::random_density(4, rng, 1 + i % 4));
        const double info = mutual_information(rho);
        const double bound = 2.0 * std::min(von_neumann_entropy(rho.marginal(Subsystem::first)),
                                            von_neumann_entropy(rho.marginal(Subsystem::second)));
        CHECK(info >= -1e-9);
        CHECK(info <= bound + 1e-9);
    }
}

TEST_CASE("property: entropy is unitarily invariant") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 200; ++i) {
        const auto m = oracle::random_density(4, rng, 1 + i % 4);
        const auto u = oracle::random_unitary(4, rng);
        const auto rotated = hermitian_part(u * m * u.adjoint());
        CHECK(std::abs(von_neumann_entropy(DensityMatrix(m)) - von_neumann_entropy(DensityMatrix(rotated))) < 1e-9);
    }
}
