#include <gtest/gtest.h>

#include <cmath>

#include "ds4/algebra.hpp"
#include "ds4/random.hpp"
#include "oracles.hpp"

using namespace ds4;

namespace {

UnitQuaternion half_angle(double theta, int k) {
    return UnitQuaternion(Quaternion{std::cos(theta / 2), std::sin(theta / 2) * Quaternion::basis(k).v});
}

AmbientVector apply(const SO14Matrix& k, const AmbientVector& x) {
    AmbientVector out;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j)
            out[i] += k[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * x[j];
    return out;
}

}  // namespace

TEST(Generators, Examples) {
    const Quaternion e1 = Quaternion::basis(1);
    EXPECT_EQ(generator_matrix(Generator::X1), 0.5 * QMat2::diag(e1, -e1));
    EXPECT_EQ(generator_matrix(Generator::Y1), 0.5 * QMat2::diag(e1, e1));
    EXPECT_EQ(generator_matrix(Generator::Z1), 0.5 * QMat2::offdiag(e1, -e1));
    EXPECT_EQ(generator_matrix(Generator::X0), 0.5 * QMat2::offdiag(Quaternion::one(), Quaternion::one()));
    for (Generator g : kAllGenerators) {
        EXPECT_EQ(parse_generator(name(g)), g);
        EXPECT_NO_THROW(generator(g));
    }
    EXPECT_THROW(parse_generator("W1"), std::invalid_argument);
}

TEST(Generators, KLabels) {
    EXPECT_EQ(k_generator_matrix(0, 4), generator_matrix(Generator::X0));
    EXPECT_EQ(k_generator_matrix(1, 2), generator_matrix(Generator::Y3));
    EXPECT_EQ(k_generator_matrix(2, 1), -generator_matrix(Generator::Y3));
    EXPECT_EQ(k_generator_matrix(3, 1), generator_matrix(Generator::Y2));
    EXPECT_EQ(k_generator_matrix(4, 1), generator_matrix(Generator::X1));
    EXPECT_EQ(k_generator_matrix(1, 4), -generator_matrix(Generator::X1));
    EXPECT_EQ(k_generator_matrix(0, 3), generator_matrix(Generator::Z3));
    EXPECT_THROW(k_generator_matrix(2, 2), std::invalid_argument);
    EXPECT_THROW(k_generator_matrix(0, 5), std::out_of_range);
}

TEST(Brackets, Examples) {
    const auto br = [](Generator a, Generator b) { return bracket(generator(a), generator(b)).matrix(); };
    EXPECT_EQ(br(Generator::X1, Generator::Y1), QMat2::zero());
    EXPECT_EQ(br(Generator::Y1, Generator::Y2), generator_matrix(Generator::Y3));
    for (int k = 1; k <= 3; ++k)
        EXPECT_EQ(br(Generator::X0, z_generator(k)), -generator_matrix(x_generator(k))) << k;
    // block-multiplication oracle on 4x4 Pauli matrices
    const Mat4c y1 = embed4(generator_matrix(Generator::Y1)), y2 = embed4(generator_matrix(Generator::Y2));
    EXPECT_EQ(max_abs(y1 * y2 - y2 * y1 - embed4(generator_matrix(Generator::Y3))), 0.0);
}

TEST(Brackets, FullTableBothRepresentations) {
    EXPECT_LE(quaternion_bracket_table_residual(), 1e-15);
    EXPECT_EQ(so14_bracket_table_residual(), 0);
}

TEST(Coordinates, Examples) {
    const AlgebraElement x0 = from_coords(AlgebraCoords{{}, {}, 1.0, {}});
    EXPECT_EQ(x0.matrix(), QMat2::offdiag(Quaternion::one(), Quaternion::one()));
    EXPECT_EQ(x0.matrix(), 2.0 * generator_matrix(Generator::X0));
    // 2 a^1 X_1 has coordinate a = (1,0,0)
    const AlgebraCoords c = to_coords(2.0 * generator(Generator::X1));
    EXPECT_EQ(c.a, (Vec3{1, 0, 0}));
    EXPECT_EQ(c.j, (Vec3{0, 0, 0}));
    EXPECT_EQ(to_coords(2.0 * generator(Generator::Z2)).d, (Vec3{0, 1, 0}));
    EXPECT_EQ(to_coords(2.0 * generator(Generator::Y3)).j, (Vec3{0, 0, 1}));
}

TEST(Coordinates, RejectOffShape) {
    EXPECT_THROW(AlgebraElement(QMat2::identity()), std::domain_error);
    QMat2 m = generator_matrix(Generator::Z1);
    m.c.v[0] += 1e-6;
    EXPECT_THROW(AlgebraElement{m}, std::domain_error);
}

TEST(CoordinatesProperty, RoundTripAndLinearity) {
    Rng rng(51);
    std::uniform_real_distribution<double> u(-5, 5);
    for (int t = 0; t < 1000; ++t) {
        std::array<double, 10> arr{};
        for (double& v : arr) v = u(rng);
        const AlgebraCoords c = AlgebraCoords::from_array(arr);
        const auto back = to_coords(from_coords(c)).to_array();
        for (std::size_t i = 0; i < 10; ++i) EXPECT_NEAR(back[i], arr[i], 1e-14);
        const AlgebraElement x = random_algebra_element(rng), y = random_algebra_element(rng);
        const double s = u(rng);
        const auto lhs = to_coords(x + s * y).to_array();
        const auto a = to_coords(x).to_array(), b = to_coords(y).to_array();
        for (std::size_t i = 0; i < 10; ++i) EXPECT_NEAR(lhs[i], a[i] + s * b[i], 1e-13);
    }
}

TEST(BracketProperty, ClosureAndJacobi) {
    Rng rng(52);
    for (int t = 0; t < 1000; ++t) {
        const AlgebraElement x = random_algebra_element(rng), y = random_algebra_element(rng),
                             z = random_algebra_element(rng);
        EXPECT_LE(shape_defect(bracket(x, y).matrix()), 1e-14);
        const QMat2 jac = bracket(x, bracket(y, z)).matrix() + bracket(y, bracket(z, x)).matrix() +
                          bracket(z, bracket(x, y)).matrix();
        EXPECT_LE(max_abs(jac), 1e-13);
    }
}

TEST(SO14, EtaAntisymmetryAndOriginImage) {
    for (const auto& [a, b] : index_pairs()) EXPECT_TRUE(is_eta_antisymmetric(so14_matrix(a, b))) << a << b;
    const double r = 2.0;
    const AmbientVector img = apply(so14_matrix(0, 4), DSPoint::origin(r).x());
    EXPECT_EQ(img, (AmbientVector{{-r, 0, 0, 0, 0}}));
    EXPECT_EQ(so14_matrix(1, 0), -so14_matrix(0, 1));
    EXPECT_THROW(so14_matrix(3, 3), std::invalid_argument);
}

TEST(Homomorphism, InducedMatchesSO14OnEveryGenerator) {
    for (const auto& [a, b] : index_pairs()) EXPECT_LE(homomorphism_residual(a, b), 1e-15) << a << b;
}

TEST(HomomorphismProperty, InducedMapIsLinearAndIntertwinesBrackets) {
    Rng rng(53);
    for (int t = 0; t < 200; ++t) {
        const AlgebraElement x = random_algebra_element(rng), y = random_algebra_element(rng);
        const Mat5<double> fx = induced_so14(x.matrix()), fy = induced_so14(y.matrix());
        const Mat5<double> lhs = induced_so14(bracket(x, y).matrix());
        // on lower-index components the induced map of [X,Y] is [f(X), f(Y)]
        EXPECT_LE(max_abs(lhs - (fx * fy - fy * fx)), 1e-13);
        EXPECT_LE(max_abs(induced_so14((x + y).matrix()) - (fx + fy)), 1e-14);
    }
}

TEST(Exponential, Examples) {
    EXPECT_EQ(exp(AlgebraElement{}).matrix(), QMat2::identity());
    for (double t : {-1.7, -0.4, 0.3, 1.1, 2.5}) {
        EXPECT_LE(distance(exp(generator(Generator::X0), t).matrix(), t_time_translation(t).matrix()), 1e-11) << t;
        for (int k = 1; k <= 3; ++k) {
            EXPECT_LE(distance(exp(generator(y_generator(k)), t).matrix(),
                               t_space_rotation(half_angle(t, k)).matrix()),
                      1e-11);
            EXPECT_LE(distance(exp(generator(x_generator(k)), t).matrix(),
                               t_space_translation(half_angle(t, k)).matrix()),
                      1e-11);
            EXPECT_LE(distance(exp(generator(z_generator(k)), t).matrix(),
                               t_boost(t, Quaternion::basis(k).v).matrix()),
                      1e-11);
        }
    }
}

TEST(ExponentialProperty, OneParameterSubgroupAndDerivative) {
    Rng rng(54);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    for (int t = 0; t < 200; ++t) {
        const AlgebraElement x = random_algebra_element(rng);
        const double s = u(rng), r = u(rng);
        EXPECT_LE(distance((exp(x, s) * exp(x, r)).matrix(), exp(x, s + r).matrix()), 1e-10);
        EXPECT_TRUE(is_member(exp(x, s).matrix(), 1e-10).pass);
        const double h = 1e-5;
        const QMat2 fd = (1.0 / (2 * h)) * (exp(x, h).matrix() - exp(x, -h).matrix());
        EXPECT_LE(distance(fd, x.matrix()), 1e-9);
    }
}
