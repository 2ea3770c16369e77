#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "spinga/bell.hpp"
#include "spinga/pauli_oracle.hpp"
#include "spinga/rng.hpp"

using namespace spinga;

namespace {

const Vec3 kX{1.0, 0.0, 0.0};
const Vec3 kZ{0.0, 0.0, 1.0};

}  // namespace

TEST_CASE("bell state construction invariants") {
    for (int mu = 0; mu <= 3; ++mu) {
        const auto b = bell_state(mu);
        // one shared phase variable
        CHECK(b.pair_a[0].phase.id == b.phase.id);
        CHECK(b.pair_a[1].phase.id == b.phase.id);
        CHECK(b.pair_b[0].phase.id == b.phase.id);
        // partner is the improper image of the spin within each pair
        CHECK((b.pair_a[1].mv() - improper_map(b.pair_a[0], mu).mv()).max_abs() < 1e-15);
        // the second configuration is the swap of the first
        CHECK((b.pair_b[0].mv() - b.pair_a[1].mv()).max_abs() < 1e-15);
        CHECK((b.pair_b[1].mv() - b.pair_a[0].mv()).max_abs() < 1e-15);
        // opposite handedness of the partners
        CHECK(b.pair_a[0].hand != b.pair_a[1].hand);
    }
    CHECK_THROWS_AS((void)bell_state(4), std::out_of_range);
    CHECK_THROWS_AS((void)bell_state(0, BellVariant::y_double_prime), std::invalid_argument);
    CHECK_NOTHROW((void)bell_state(2, BellVariant::y_double_prime));
}

TEST_CASE("orthogonal-state table rows at phase zero") {
    // rows of the explicit sign table, spins scaled by 1/2
    const double rows[4][2][3] = {
        {{+1, +1, +1}, {-1, -1, -1}},  // singlet: mutual inversions
        {{+1, +1, +1}, {+1, -1, +1}},  // s1 reflection negates the s1 component
        {{-1, -1, -1}, {-1, -1, +1}},  // base sign flips for mu = 2, 3
        {{-1, -1, -1}, {+1, -1, -1}},
    };
    // components listed in the order (s3, s1, s2)
    for (int mu = 0; mu <= 3; ++mu) {
        const auto b = bell_state(mu);
        for (int slot = 0; slot < 2; ++slot) {
            const auto at0 = eval(b.pair_a[static_cast<std::size_t>(slot)].mv(),
                                  {{b.phase.id, 0.0}});
            const auto expected =
                to_sigma({0.5 * rows[mu][slot][1], 0.5 * rows[mu][slot][2],
                          0.5 * rows[mu][slot][0]});
            CHECK((at0 - expected).max_abs() < 1e-15);
        }
    }
}

TEST_CASE("total spin") {
    const auto singlet = total_spin(bell_state(0));
    CHECK(singlet.vector_sum.is_zero(0.0));
    CHECK(singlet.square_expected == 0.0);
    CHECK(singlet.mean_square == 0.0);

    for (int mu = 1; mu <= 3; ++mu) {
        const auto t = total_spin(bell_state(mu));
        CHECK(t.square_expected == 2.0);
        CHECK(t.mean_square == (mu == 3 ? 0.0 : 1.0));
    }
    // mu = 3 needs no phase averaging: the square is already constant
    const auto b3 = bell_state(3);
    const auto tot3 = b3.pair_a[0].mv() + b3.pair_a[1].mv();
    CHECK((tot3 * tot3).scalar_part().is_constant(1e-15));
}

TEST_CASE("intrinsic correlations and closure") {
    CHECK(intrinsic_correlation(bell_state(0)) == -1.5);
    for (int mu = 1; mu <= 3; ++mu)
        CHECK(intrinsic_correlation(bell_state(mu)) == 0.5);
    double closure = 0.0;
    for (int mu = 0; mu <= 3; ++mu) closure += intrinsic_correlation(bell_state(mu));
    CHECK(closure == 0.0);
    // mu = 3 is exact without averaging; mu = 1 has the phase-bearing cross term
    const auto b1 = bell_state(1);
    const auto prod = (b1.pair_a[0].mv() * b1.pair_a[1].mv()).scalar_part();
    CHECK_FALSE(prod.is_constant(1e-3));
}

TEST_CASE("bipartite expectation values") {
    Rng rng(51);

    SUBCASE("closed form and oracle agreement") {
        for (int mu = 0; mu <= 3; ++mu) {
            const auto b = bell_state(mu);
            for (int i = 0; i < 200; ++i) {
                const auto u = rng.unit_vector();
                const auto v = rng.unit_vector();
                const double model = bipartite_expectation(b, u, v);
                CHECK(std::abs(model - bipartite_closed_form(mu, u, v)) < 1e-12);
                CHECK(std::abs(model - oracle::oracle_bipartite(oracle::bell_for_mu(mu), u, v)) <
                      1e-12);
            }
        }
    }

    SUBCASE("quoted values") {
        const auto b0 = bell_state(0);
        for (int i = 0; i < 20; ++i) {
            const auto u = rng.unit_vector();
            CHECK(bipartite_expectation(b0, u, u) == doctest::Approx(-1.0).epsilon(1e-12));
        }
        const auto b3 = bell_state(3);
        CHECK(bipartite_expectation(b3, kZ, kZ) == -1.0);
        CHECK(bipartite_expectation(b3, kX, kX) == 1.0);
    }

    SUBCASE("both superposition terms contribute equally") {
        for (int mu = 0; mu <= 3; ++mu) {
            const auto b = bell_state(mu);
            for (int i = 0; i < 50; ++i) {
                const auto u = rng.unit_vector();
                const auto v = rng.unit_vector();
                const Vec3 vv = improper_image(mu, v);
                const Vec3 vu = improper_image(mu, u);
                const double term_a = (to_sigma(u) * to_sigma(vv)).scalar_part();
                const double term_b = (to_sigma(vu) * to_sigma(v)).scalar_part();
                CHECK(term_a == doctest::Approx(term_b).epsilon(1e-12));
            }
        }
    }

    SUBCASE("bivector route and sum-of-products route agree") {
        for (int mu = 0; mu <= 3; ++mu) {
            const auto b = bell_state(mu);
            for (int i = 0; i < 100; ++i) {
                const auto u = rng.unit_vector();
                const auto v = rng.unit_vector();
                const double main = bipartite_expectation(b, u, v);
                CHECK(std::abs(main - bipartite_expectation_bivector(b, u, v)) < 1e-12);
                CHECK(std::abs(main - bipartite_expectation_alt(b, u, v)) < 1e-15);
            }
        }
    }

    SUBCASE("variants share the bipartite values") {
        for (int mu = 0; mu <= 3; ++mu) {
            const auto u = rng.unit_vector();
            const auto v = rng.unit_vector();
            const double base = bipartite_expectation(bell_state(mu), u, v);
            CHECK(bipartite_expectation(bell_state(mu, BellVariant::y_prime), u, v) == base);
            if (mu == 1 || mu == 2)
                CHECK(bipartite_expectation(bell_state(mu, BellVariant::y_double_prime), u, v) == base);
        }
    }

    SUBCASE("bipartite closure") {
        for (int i = 0; i < 50; ++i) {
            const auto u = rng.unit_vector();
            const auto v = rng.unit_vector();
            double total = 0.0;
            for (int mu = 0; mu <= 3; ++mu)
                total += bipartite_expectation(bell_state(mu), u, v);
            CHECK(std::abs(total) < 1e-14);
        }
    }

    SUBCASE("triplet values are frame components") {
        // rotating the detectors and the reflection axis together recovers the
        // same number
        for (int i = 0; i < 50; ++i) {
            const auto axis = rng.unit_vector();
            const double angle = rng.uniform(0.0, 6.28);
            const auto r = rotor(to_sigma(axis), angle);
            for (int mu = 1; mu <= 3; ++mu) {
                const auto u = rng.unit_vector();
                const auto v = rng.unit_vector();
                const double plain = bipartite_expectation(bell_state(mu), u, v);
                const auto ur = sandwich(r, to_sigma(u));
                const auto vr = sandwich(r, to_sigma(v));
                const auto nr = sandwich(r, sigma_vector(mu));
                const double rotated = -(ur * nr * vr * nr).scalar_part();
                CHECK(rotated == doctest::Approx(plain).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("partial expectations") {
    Rng rng(52);

    SUBCASE("zero for the singlet and the s3 triplet") {
        for (int mu : {0, 3}) {
            const auto b = bell_state(mu);
            for (int i = 0; i < 50; ++i) {
                const auto u = rng.unit_vector();
                CHECK(partial_expectation(b, u, 1) == 0.0);
                CHECK(partial_expectation(b, u, 2) == 0.0);
            }
        }
    }

    SUBCASE("prime form carries the s3 component with signs (+1, -1)") {
        const auto b1 = bell_state(1, BellVariant::y_prime);
        const auto b2 = bell_state(2, BellVariant::y_prime);
        CHECK(partial_expectation(b1, kZ, 1) == 1.0);
        CHECK(partial_expectation(b2, kZ, 2) == -1.0);
        for (int i = 0; i < 50; ++i) {
            const auto u = rng.unit_vector();
            CHECK(partial_expectation(b1, u, 1) == u[2]);
            CHECK(partial_expectation(b1, u, 2) == u[2]);
            CHECK(partial_expectation(b2, u, 1) == -u[2]);
            CHECK(partial_expectation(b2, u, 2) == -u[2]);
        }
    }

    SUBCASE("double-prime form vanishes identically") {
        for (int mu : {1, 2}) {
            const auto b = bell_state(mu, BellVariant::y_double_prime);
            for (int i = 0; i < 50; ++i) {
                const auto u = rng.unit_vector();
                CHECK(partial_expectation(b, u, 1) == 0.0);
                CHECK(partial_expectation(b, u, 2) == 0.0);
            }
        }
    }
}

TEST_CASE("separable states") {
    Rng rng(53);

    SUBCASE("quoted values") {
        const auto ud = separable_expectation(SeparableKind::up_down, kZ, kZ);
        CHECK(ud.bipartite == -1.0);
        CHECK(ud.partial_1 == 1.0);
        CHECK(ud.partial_2 == -1.0);
        const auto uu = separable_expectation(SeparableKind::up_up, kZ, kZ);
        CHECK(uu.bipartite == 1.0);
        CHECK(uu.partial_1 == 1.0);
        CHECK(uu.partial_2 == 1.0);
        CHECK(separable_expectation(SeparableKind::up_down, kX, kZ).bipartite == 0.0);
    }

    SUBCASE("partials factorize the bipartite value") {
        const SeparableKind kinds[] = {SeparableKind::up_down, SeparableKind::down_up,
                                       SeparableKind::up_up, SeparableKind::down_down};
        for (const auto kind : kinds) {
            for (int i = 0; i < 100; ++i) {
                const auto u = rng.unit_vector();
                const auto v = rng.unit_vector();
                const auto e = separable_expectation(kind, u, v);
                CHECK(std::abs(e.partial_1 * e.partial_2 - e.bipartite) < 1e-15);
                const double sign = (kind == SeparableKind::up_up ||
                                     kind == SeparableKind::down_down)
                                        ? 1.0
                                        : -1.0;
                CHECK(std::abs(e.bipartite - sign * u[2] * v[2]) < 1e-15);
            }
        }
    }

    SUBCASE("equals the product of two independent single-spin measurements") {
        const PhaseVar phi = fresh_phase();
        const auto up = make_spin(SpinDirection::up, phi);
        const auto down = make_spin(SpinDirection::down, phi);
        for (int i = 0; i < 50; ++i) {
            const auto u = rng.unit_vector();
            const auto v = rng.unit_vector();
            const double product =
                sg_measure(up, u).correlation * sg_measure(down, v).correlation;
            const auto e = separable_expectation(SeparableKind::up_down, u, v);
            CHECK(std::abs(e.bipartite - product) < 1e-15);
        }
    }
}

TEST_CASE("spinor Gram matrices") {
    for (const bool full : {true, false}) {
        const auto g = spinor_bell_gram(full);
        for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu) {
                const double entry = g[static_cast<std::size_t>(mu)][static_cast<std::size_t>(nu)];
                if (mu == nu)
                    CHECK(std::abs(entry) > 0.1);
                else
                    CHECK(std::abs(entry) < 1e-12);
            }
    }
    // singlet-triplet entries vanish by grade parity before any averaging
    const auto g = spinor_bell_gram(true);
    for (int j = 1; j <= 3; ++j) {
        CHECK(std::abs(g[0][static_cast<std::size_t>(j)]) < 1e-15);
        CHECK(std::abs(g[static_cast<std::size_t>(j)][0]) < 1e-15);
    }
}
