#include <random>

#include "doctest.h"
#include "nichols/cyclotomic.hpp"
#include "nichols/error.hpp"

using namespace nichols;

TEST_CASE("roots of unity normalize") {
    CHECK(root(4, 2) == RootOfUnity::minus_one());
    CHECK(root(6, 0).is_one());
    CHECK(root(8, -1) == root(8, 7));
    CHECK(root(12, 9) == root(4, 3));
    CHECK(root(4, 1) * root(4, 1) == RootOfUnity::minus_one());
    CHECK(root(3, 1) * root(2, 1) == root(6, 5));
    CHECK(root(5, 2).pow(5).is_one());
    CHECK(root(8, 3).inverse() == root(8, 5));
    CHECK(root(8, 3).to_string() == "w(8)^3");
    CHECK(RootOfUnity::parse("w(8)^3") == root(8, 3));
    CHECK(RootOfUnity::parse(RootOfUnity::one().to_string()).is_one());
    CHECK(RootOfUnity::minus_one().to_string() == "w(2)^1");
    CHECK_THROWS_AS(RootOfUnity::parse("w(8"), ParseError);
    CHECK_THROWS_AS(root(0, 1), PreconditionError);
}

TEST_CASE("cyclotomic polynomials vanish at primitive roots") {
    for (int n = 1; n <= 24; ++n) {
        const auto& phi = cyclotomic_polynomial(n);
        CHECK(static_cast<int>(phi.size()) - 1 == euler_phi(n));
        CHECK(phi.back() == 1);
        // exact check: Φ_n(ζ_n) = 0 in ℚ(ζ_n)
        Cyclotomic value, power(1);
        for (long long c : phi) {
            value += Cyclotomic(c) * power;
            power *= Cyclotomic::zeta(n);
        }
        CHECK(value.is_zero());
    }
    CHECK(cyclotomic_polynomial(12) == std::vector<long long>{1, 0, -1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<long long>{1, -1, 1});
}

TEST_CASE("field axioms on random elements") {
    std::mt19937_64 rng(3);
    auto random_elem = [&](int n) {
        Cyclotomic z;
        for (int k = 0; k < 4; ++k) z += Cyclotomic(static_cast<long long>(rng() % 7) - 3) * Cyclotomic::zeta(n, static_cast<long long>(rng() % static_cast<unsigned>(n)));
        return z;
    };
    const int conductors[] = {1, 3, 4, 5, 8, 12, 15, 24};
    for (int trial = 0; trial < 60; ++trial) {
        int na = conductors[rng() % 8], nb = conductors[rng() % 8], nc = conductors[rng() % 8];
        auto a = random_elem(na), b = random_elem(nb), c = random_elem(nc);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) * c == a * c + b * c);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a - a == Cyclotomic(0));
        if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
}

TEST_CASE("roots of unity embed consistently") {
    for (int n = 1; n <= 16; ++n)
        for (int k = 0; k < n; ++k) {
            Cyclotomic z(root(n, k));
            CHECK(z.pow(n).is_one());
            auto back = z.as_root_of_unity();
            REQUIRE(back.has_value());
            CHECK(*back == root(n, k));
            CHECK(Cyclotomic(root(n, k)) * Cyclotomic(root(n, -k)) == Cyclotomic(1));
        }
    CHECK(Cyclotomic(root(4, 1)).pow(2).is_minus_one());
    CHECK(!(Cyclotomic(1) + Cyclotomic::zeta(5)).as_root_of_unity().has_value());
    // 1 + ω_3 = -ω_3^2
    CHECK(*(Cyclotomic(1) + Cyclotomic::zeta(3)).as_root_of_unity() == root(6, 1));
}

TEST_CASE("matrix change of basis") {
    auto i = Cyclotomic(root(4, 1));
    auto op = CycMatrix::from_rows({{0, 1}, {1, 0}});
    auto combos = CycMatrix::from_rows({{1, 1}, {1, -1}});
    auto d = change_of_basis(op, combos);
    CHECK(d.is_diagonal());
    CHECK(d(0, 0).is_one());
    CHECK(d(1, 1).is_minus_one());
    auto m = CycMatrix::from_rows({{i, 1}, {0, i}});
    CHECK(m.determinant() == Cyclotomic(-1));
    CHECK(m * m.inverse() == CycMatrix::identity(2));
    CHECK_THROWS_AS(CycMatrix::from_rows({{1, 1}, {1, 1}}).inverse(), PreconditionError);
}
