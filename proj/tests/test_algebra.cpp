#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <numbers>

#include "spinga/algebra.hpp"
#include "spinga/rng.hpp"
#include "spinga/spin.hpp"

#include "oracles.hpp"

using namespace spinga;
using namespace spinga::sigma_blades;

namespace {

Multivector<double> random_vector(Rng& rng) {
    return to_sigma({rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0), rng.uniform(-1.0, 1.0)});
}

Multivector<double> random_mv(const Algebra& alg, Rng& rng) {
    Multivector<double> m(alg);
    for (unsigned i = 0; i < alg.size(); ++i) m[i] = rng.uniform(-1.0, 1.0);
    return m;
}

// Independent component-wise oracle for the vector product: u.v + u^v.
Multivector<double> dot_wedge_oracle(const Vec3& u, const Vec3& v) {
    auto out = Multivector<double>(Algebra::sigma());
    out[k1] = u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
    out[kS23] = u[1] * v[2] - u[2] * v[1];
    out[kS13] = u[0] * v[2] - u[2] * v[0];
    out[kS12] = u[0] * v[1] - u[1] * v[0];
    return out;
}

}  // namespace

TEST_CASE("metric squares and basic blade products") {
    for (int j = 1; j <= 3; ++j) {
        const auto s = sigma_vector(j);
        const auto sq = s * s;
        CHECK(sq.scalar_part() == 1.0);
        CHECK((sq - Multivector<double>::scalar(Algebra::sigma(), 1.0)).is_zero());
    }
    // s1 s2 is the pseudoscalar times s3
    const auto prod = sigma_vector(1) * sigma_vector(2);
    const auto expected = sigma_pseudoscalar() * sigma_vector(3);
    CHECK((prod - expected).is_zero());
}

TEST_CASE("vector product matches the dot/wedge oracle") {
    const Vec3 u{1.0, 2.0, 3.0};
    const Vec3 v{4.0, 5.0, 6.0};
    const auto gp = to_sigma(u) * to_sigma(v);
    CHECK(gp.scalar_part() == 32.0);
    CHECK(gp[kS23] == -3.0);
    CHECK(gp[kS13] == -6.0);  // +6 s3s1 in canonical order
    CHECK(gp[kS12] == -3.0);
    CHECK((gp - dot_wedge_oracle(u, v)).is_zero());

    Rng rng(11);
    for (int i = 0; i < 200; ++i) {
        const auto a = rng.unit_vector();
        const auto b = rng.unit_vector();
        CHECK((to_sigma(a) * to_sigma(b) - dot_wedge_oracle(a, b)).max_abs() < 1e-12);
    }
}

TEST_CASE("brackets split the vector product") {
    const auto s1 = sigma_vector(1);
    const auto s2 = sigma_vector(2);
    CHECK(bracket(s1, s2, BracketKind::anticommutator).is_zero());
    const auto comm = bracket(s1, s2, BracketKind::commutator);
    CHECK((comm - (sigma_pseudoscalar() * sigma_vector(3)).scaled(2.0)).is_zero());

    Rng rng(12);
    for (int i = 0; i < 100; ++i) {
        const auto u = random_vector(rng);
        const auto v = random_vector(rng);
        const auto anti = bracket(u, v, BracketKind::anticommutator);
        const auto com = bracket(u, v, BracketKind::commutator);
        // anticommutator is pure scalar, commutator pure bivector
        CHECK((anti - anti.grade_projected(0)).max_abs() < 1e-12);
        CHECK((com - com.grade_projected(2)).max_abs() < 1e-12);
        const auto self = bracket(u, u, BracketKind::anticommutator);
        CHECK(self.scalar_part() == doctest::Approx(2.0 * (u * u).scalar_part()));
        CHECK((u * v - (anti + com).scaled(0.5)).max_abs() < 1e-12);
    }
}

TEST_CASE("grade projection") {
    auto m = Multivector<double>::scalar(Algebra::sigma(), 3.0);
    m[kS1] = 2.0;
    m[kI] = 1.0;
    CHECK(m.grade_projected(0).scalar_part() == 3.0);
    CHECK((m.grade_projected(0) - Multivector<double>::scalar(Algebra::sigma(), 3.0)).is_zero());
    const auto biv = sigma_vector(1) * sigma_vector(2);
    CHECK((biv.grade_projected(2) - biv).is_zero());
    CHECK_THROWS_AS((void)m.grade_projected(4), std::out_of_range);

    Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        const auto u = rng.unit_vector();
        const auto v = rng.unit_vector();
        CHECK((to_sigma(u) * to_sigma(v)).grade_projected(0).scalar_part() ==
              doctest::Approx(dot(u, v)).epsilon(1e-12));
    }
}

TEST_CASE("reversion") {
    CHECK((sigma_vector(1).reversed() - sigma_vector(1)).is_zero());
    const auto biv = sigma_vector(1) * sigma_vector(2);
    CHECK((biv.reversed() + biv).is_zero());
    for (double theta : {0.0, 0.3, 1.0, 2.5, 3.14, 5.9}) {
        const auto r = rotor(sigma_vector(3), theta);
        const auto prod = r.reversed() * r;
        CHECK(std::abs(prod.scalar_part() - 1.0) < 1e-12);
        CHECK((prod - Multivector<double>::scalar(Algebra::sigma(), 1.0)).max_abs() < 1e-12);
    }
    Rng rng(14);
    for (int i = 0; i < 200; ++i) {
        const auto a = random_mv(Algebra::spacetime(), rng);
        const auto b = random_mv(Algebra::spacetime(), rng);
        CHECK(((a * b).reversed() - b.reversed() * a.reversed()).max_abs() < 1e-12);
    }
}

TEST_CASE("versor inverse") {
    CHECK((versor_inverse(sigma_vector(1)) - sigma_vector(1)).is_zero());
    const auto biv = sigma_vector(1) * sigma_vector(2);
    CHECK((versor_inverse(biv) - sigma_vector(2) * sigma_vector(1)).is_zero());
    Rng rng(15);
    for (int i = 0; i < 50; ++i) {
        const auto axis = rng.unit_vector();
        const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const auto r = rotor(to_sigma(axis), theta);
        CHECK((versor_inverse(r) - rotor(to_sigma(axis), -theta)).max_abs() < 1e-12);
        CHECK((versor_inverse(r) * r - Multivector<double>::scalar(Algebra::sigma(), 1.0))
                  .max_abs() < 1e-12);
    }
    CHECK_THROWS_AS((void)versor_inverse(Multivector<double>(Algebra::sigma())),
                    std::domain_error);
    // scalar + vector: v * reverse(v) keeps a vector part, so not a versor
    auto bad = Multivector<double>::scalar(Algebra::sigma(), 1.0) + sigma_vector(1);
    CHECK_FALSE(is_versor(bad));
    CHECK_THROWS_AS((void)versor_inverse(bad), std::domain_error);
}

TEST_CASE("rotor construction and action") {
    CHECK((rotor(sigma_vector(3), 0.0) - Multivector<double>::scalar(Algebra::sigma(), 1.0))
              .is_zero());
    const auto quarter = rotor(sigma_vector(3), std::numbers::pi / 2.0);
    CHECK((sandwich(quarter, sigma_vector(1)) - sigma_vector(2)).max_abs() < 1e-12);
    // spinorial sign: a full turn is -1
    CHECK((rotor(sigma_vector(3), 2.0 * std::numbers::pi) +
           Multivector<double>::scalar(Algebra::sigma(), 1.0))
              .max_abs() < 1e-12);
    CHECK_THROWS_AS((void)rotor(to_sigma({0.5, 0.0, 0.0}), 1.0), std::invalid_argument);

    SUBCASE("sandwich matches the rotation-matrix oracle") {
        Rng rng(16);
        for (int i = 0; i < 200; ++i) {
            const auto axis = rng.unit_vector();
            const double theta = rng.uniform(-6.3, 6.3);
            const auto v = rng.unit_vector();
            const auto rotated = sandwich(rotor(to_sigma(axis), theta), to_sigma(v));
            CHECK((rotated - to_sigma(testing::rodrigues(v, axis, theta))).max_abs() < 1e-12);
        }
        const auto r2 = rotor(sigma_vector(2), 0.7);
        const auto img = sandwich(r2, sigma_vector(3));
        CHECK(img[kS3] == doctest::Approx(std::cos(0.7)).epsilon(1e-12));
        CHECK(img[kS1] == doctest::Approx(std::sin(0.7)).epsilon(1e-12));
    }
}

TEST_CASE("improper sandwiches") {
    // inversion negates the whole frame
    for (int j = 1; j <= 3; ++j)
        CHECK((sandwich(improper_reflector(0), sigma_vector(j), true) + sigma_vector(j))
                  .is_zero());
    // plane reflection negates exactly the matching component: I s_mu A I s_mu
    // equals -s_mu A s_mu, a reflection through the bivector plane of I s_mu
    CHECK((sandwich(improper_reflector(3), sigma_vector(3), true) + sigma_vector(3)).is_zero());
    CHECK((sandwich(improper_reflector(3), sigma_vector(1), true) - sigma_vector(1)).is_zero());
    CHECK((sandwich(improper_reflector(3), sigma_vector(2), true) - sigma_vector(2)).is_zero());
}

TEST_CASE("orientation sign") {
    CHECK(orientation(sigma_vector(3), sigma_vector(1), sigma_vector(2)) == 1);
    CHECK(orientation(-sigma_vector(3), -sigma_vector(1), sigma_vector(2)) == 1);
    CHECK(orientation(-sigma_vector(3), -sigma_vector(1), -sigma_vector(2)) == -1);
    CHECK(orientation(sigma_vector(1), sigma_vector(2), sigma_vector(1) + sigma_vector(2)) == 0);
}

TEST_CASE("rotor unitarity and handedness behavior") {
    Rng rng(17);
    for (int i = 0; i < 200; ++i) {
        const auto axis = rng.unit_vector();
        const double theta = rng.uniform(0.0, 2.0 * std::numbers::pi);
        const auto r = rotor(to_sigma(axis), theta);
        const auto a = rng.unit_vector();
        const auto b = rng.unit_vector();
        const auto ra = sandwich(r, to_sigma(a));
        const auto rb = sandwich(r, to_sigma(b));
        CHECK((ra * ra).scalar_part() == doctest::Approx(1.0).epsilon(1e-12));
        CHECK((ra * rb).scalar_part() == doctest::Approx(dot(a, b)).epsilon(1e-12));
        // proper rotations preserve orientation
        const auto c = cross(a, b);
        if (norm(c) > 0.1) {
            const auto rc = sandwich(r, to_sigma(c));
            CHECK(orientation(ra, rb, rc) == orientation(to_sigma(a), to_sigma(b), to_sigma(c)));
        }
    }
    // each improper map flips orientation
    for (int mu = 0; mu <= 3; ++mu) {
        const auto refl = improper_reflector(mu);
        const auto i1 = sandwich(refl, sigma_vector(1), true);
        const auto i2 = sandwich(refl, sigma_vector(2), true);
        const auto i3 = sandwich(refl, sigma_vector(3), true);
        CHECK(orientation(i1, i2, i3) == -1);
    }
}

TEST_CASE("pseudoscalar centrality in both algebras") {
    for (const Algebra* alg : {&Algebra::sigma(), &Algebra::spacetime()}) {
        const auto pseudo = Multivector<double>::blade(*alg, alg->pseudoscalar_mask(), 1.0);
        for (unsigned b = 0; b < alg->size(); ++b) {
            const auto blade = Multivector<double>::blade(*alg, b, 1.0);
            CHECK((pseudo * blade - blade * pseudo).is_zero());
        }
    }
}

TEST_CASE("associativity over random triples") {
    Rng rng(18);
    for (const Algebra* alg : {&Algebra::sigma(), &Algebra::spacetime()}) {
        for (int i = 0; i < 200; ++i) {
            const auto a = random_mv(*alg, rng);
            const auto b = random_mv(*alg, rng);
            const auto c = random_mv(*alg, rng);
            CHECK(((a * b) * c - a * (b * c)).max_abs() < 1e-12);
        }
    }
}

TEST_CASE("signature mismatch is rejected") {
    const auto a = sigma_vector(1);
    const auto b = Multivector<double>::blade(Algebra::spacetime(), 1u, 1.0);
    CHECK_THROWS_AS((void)(a * b), std::invalid_argument);
    CHECK_THROWS_AS((void)(a + b), std::invalid_argument);
}
