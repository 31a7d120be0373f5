#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "orbitatlas/extvector.hpp"
#include "orbitatlas/qmatrix.hpp"
#include "orbitatlas/rational.hpp"

#include <random>

using namespace orbitatlas;

TEST_CASE("rational canonical form") {
    Rational q = rat(6, -4);
    CHECK(q.get_num() == -3);
    CHECK(q.get_den() == 2);
    CHECK(rat_to_string(q) == "-3/2");
    CHECK(rat_from_string("-3/2") == q);
    CHECK(rat_from_string("7") == rat(7));
    CHECK_THROWS_AS(rat_from_string("1/0"), std::invalid_argument);
}

TEST_CASE("rank of simple matrices") {
    CHECK(QMatrix::identity(3).rank() == 3);
    CHECK(omega_matrix(4).rank() == 8);
    QMatrix diag(3, 3, {1, 0, 0, 0, 1, 0, 0, 0, 0});
    CHECK(diag.rank() == 2);
    CHECK(QMatrix(4, 7).rank() == 0);
}

TEST_CASE("rank handles rational entries and dependent rows") {
    QMatrix m(3, 3);
    m.at(0, 0) = rat(1, 2);
    m.at(0, 1) = rat(1, 3);
    m.at(0, 2) = rat(1, 7);
    for (std::size_t j = 0; j < 3; ++j) m.at(1, j) = m.at(0, j) * rat(6);
    m.at(2, 0) = 1;
    CHECK(m.rank() == 2);
}

namespace {

QMatrix random_integer_matrix(std::mt19937_64& rng, std::size_t n, long bound) {
    QMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m.at(i, j) = Rational(static_cast<long>(rng() % (2 * bound + 1)) - bound);
    return m;
}

QMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
    QMatrix g = QMatrix::identity(n);
    for (std::size_t s = 0; s < 3 * n * n; ++s) {
        std::size_t i = rng() % n, j = rng() % n;
        if (i == j) continue;
        Rational c(static_cast<long>(rng() % 5) - 2);
        for (std::size_t col = 0; col < n; ++col) g.at(i, col) += c * g.at(j, col);
    }
    return g;
}

} // namespace

TEST_CASE("rank is invariant under invertible row and column action") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        std::size_t n = 2 + rng() % 4;
        QMatrix m = random_integer_matrix(rng, n, 3);
        std::size_t r = m.rank();
        QMatrix left = random_unimodular(rng, n);
        QMatrix right = random_unimodular(rng, n);
        CHECK((left * m * right).rank() == r);
    }
}

TEST_CASE("null space and row basis") {
    QMatrix m(2, 3, {1, 2, 3, 2, 4, 6});
    QMatrix ns = m.null_space();
    CHECK(ns.rows() == 2);
    CHECK((m * ns.transpose()).is_zero());
    CHECK(m.row_basis().rows() == 1);
}

TEST_CASE("inverse round-trips") {
    QMatrix m(3, 3, {2, 1, 0, 1, 3, 1, 0, 1, 1});
    CHECK(m * m.inverse() == QMatrix::identity(3));
    QMatrix singular(2, 2, {1, 2, 2, 4});
    CHECK_THROWS_AS(singular.inverse(), std::domain_error);
}

TEST_CASE("subspace intersections and sums") {
    QMatrix a(1, 4, {1, 0, 0, 0});
    QMatrix b(1, 4, {0, 1, 0, 0});
    CHECK(intersection_dim(a, a) == 1);
    CHECK(intersection_dim(a, b) == 0);
    CHECK(sum_dim(a, b) == 2);

    // E+ vs E- inside C^4: complementary Lagrangian planes
    SymplecticSpace sp(2);
    QMatrix eplus(2, 4, {1, 0, 0, 0, 0, 1, 0, 0});
    QMatrix eminus(2, 4, {0, 0, 1, 0, 0, 0, 0, 1});
    CHECK(intersection_dim(eplus, eminus) == 0);
    QMatrix perp = perp_space(eplus, sp.gram());
    CHECK(perp.rank() == 2);
    CHECK(intersection_dim(perp, eplus) == 2); // E+ is its own perp
}

TEST_CASE("wedge basics") {
    const std::size_t dim = 4;
    ExtVector e1 = ExtVector::unit(dim, 0), e2 = ExtVector::unit(dim, 1);
    ExtVector w12 = wedge(e1, e2);
    CHECK(w12.coeff({0, 1}) == 1);
    CHECK(wedge(e2, e1).coeff({0, 1}) == -1);
    CHECK(wedge(e1, e1).is_zero());

    // (e1+e3) ^ e2 ^ e4 expands to e_{124} + e_{324} = e_{124} - e_{234}
    ExtVector v = ExtVector::unit(dim, 0) + ExtVector::unit(dim, 2);
    ExtVector w = wedge(wedge(v, e2), ExtVector::unit(dim, 3));
    CHECK(w.terms().size() == 2);
    CHECK(w.coeff({0, 1, 3}) == 1);
    CHECK(w.coeff({1, 2, 3}) == -1);
}

TEST_CASE("wedge is associative and graded-commutative on random inputs") {
    std::mt19937_64 rng(11);
    const std::size_t dim = 6;
    auto random_vec = [&](std::size_t degree) {
        ExtVector v(dim, degree);
        for (int t = 0; t < 4; ++t) {
            std::vector<int> slots;
            for (std::size_t i = 0; i < degree; ++i) slots.push_back(static_cast<int>(rng() % dim));
            Rational c(static_cast<long>(rng() % 7) - 3);
            v = v + ExtVector::monomial(dim, slots, c);
        }
        return v;
    };
    for (int trial = 0; trial < 25; ++trial) {
        std::size_t da = 1 + rng() % 2, db = 1 + rng() % 2, dc = 1 + rng() % 2;
        ExtVector a = random_vec(da), b = random_vec(db), c = random_vec(dc);
        CHECK(wedge(wedge(a, b), c) == wedge(a, wedge(b, c)));
        ExtVector ab = wedge(a, b), ba = wedge(b, a);
        if ((da * db) % 2 == 0)
            CHECK(ab == ba);
        else
            CHECK(ab == ba.scaled(rat(-1)));
    }
}

TEST_CASE("degree overflow collapses to zero") {
    ExtVector top = ExtVector::monomial(3, {0, 1, 2});
    CHECK(wedge(top, ExtVector::unit(3, 0)).is_zero());
    CHECK(wedge(top, ExtVector::unit(3, 1)).degree() == 4);
}

TEST_CASE("psi kernel of decomposable isotropic points") {
    const std::size_t n = 4;
    SymplecticSpace sp(n);
    // q = e_[N] has kernel spanned by e_1..e_N
    ExtVector q = ExtVector::monomial(2 * n, {0, 1, 2, 3});
    QMatrix ker = psi_kernel(q, sp);
    CHECK(ker.rows() == n);
    QMatrix eplus(n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) eplus.at(i, i) = 1;
    CHECK(intersection_dim(ker, eplus) == n);
}

TEST_CASE("psi kernel dimension is a symplectic invariant") {
    const std::size_t n = 3;
    SymplecticSpace sp(n);
    // distance-2 point e_[3] + e_3 ^ e_{-1} ^ e_{-2}
    ExtVector q = ExtVector::monomial(2 * n, {0, 1, 2}) +
                  ExtVector::monomial(2 * n, {2, static_cast<int>(sp.slot_of_label(-2)),
                                              static_cast<int>(sp.slot_of_label(-1))});
    std::size_t base_dim = psi_kernel(q, sp).rows();
    CHECK(base_dim == 1);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        QMatrix g = QMatrix::identity(2 * n);
        for (int s = 0; s < 6; ++s) {
            QMatrix v(2 * n, 1);
            for (std::size_t i = 0; i < 2 * n; ++i)
                v.at(i, 0) = Rational(static_cast<long>(rng() % 5) - 2);
            Rational c(static_cast<long>(rng() % 5) - 2);
            g = (QMatrix::identity(2 * n) - (v * v.transpose() * sp.gram()).scaled(c)) * g;
        }
        REQUIRE(g.transpose() * sp.gram() * g == sp.gram());
        ExtVector moved = ext_power_apply(g, q);
        CHECK(psi_kernel(moved, sp).rows() == base_dim);
    }
}

TEST_CASE("primitive forms") {
    SymplecticSpace sp(2);
    ExtVector iso = ExtVector::monomial(4, {0, 1}); // e_1 ^ e_2
    CHECK(is_primitive(iso, sp));
    // e_1 ^ e_{-1} + e_2 ^ e_{-2} contracts to a nonzero scalar
    ExtVector sum = ExtVector::monomial(4, {0, static_cast<int>(sp.slot_of_label(-1))}) +
                    ExtVector::monomial(4, {1, static_cast<int>(sp.slot_of_label(-2))});
    CHECK_FALSE(is_primitive(sum, sp));
    CHECK(primitive_dimension(2, 2) == 5);
    CHECK(primitive_dimension(3, 3) == 14);
}

TEST_CASE("hamming distance via subspace intersections") {
    // span(e_[3]) vs span(e_3, e_{-1}, e_{-2}) inside C^6: distance 2
    SymplecticSpace sp(3);
    QMatrix a(3, 6), b(3, 6);
    a.at(0, 0) = a.at(1, 1) = a.at(2, 2) = 1;
    b.at(0, 2) = 1;
    b.at(1, sp.slot_of_label(-1)) = 1;
    b.at(2, sp.slot_of_label(-2)) = 1;
    CHECK(3 - intersection_dim(a, b) == 2);
    CHECK(3 - intersection_dim(b, a) == 2);
    CHECK(3 - intersection_dim(a, a) == 0);
}

TEST_CASE("spinor annihilator dimensions") {
    const std::size_t n = 5;
    MixedExt vacuum(n);
    vacuum.add_term({}, 1);
    CHECK(spinor_annihilator_dim(vacuum) == n);

    MixedExt pure(n); // 1 + e_12 is still a pure spinor
    pure.add_term({}, 1);
    pure.add_term({0, 1}, 1);
    CHECK(spinor_annihilator_dim(pure) == n);

    MixedExt rank2(n); // 1 + e_1234 is a distance-2 sum of pure spinors
    rank2.add_term({}, 1);
    rank2.add_term({0, 1, 2, 3}, 1);
    CHECK(spinor_annihilator_dim(rank2) == n - 4);
}
