#include <doctest.h>

#include <cstdint>
#include <limits>
#include <random>
#include <sstream>

#include "cliquepoly/errors.hpp"
#include "cliquepoly/poly.hpp"

using namespace cliquepoly;

TEST_CASE("add") {
    CHECK(Polynomial{1, 3, 1} + Polynomial{0, 0, 2, 2} == Polynomial{1, 3, 3, 2});
    const Polynomial p{4, -1, 0, 7};
    CHECK(p + Polynomial{} == p);
    CHECK((Polynomial{1, 1} + Polynomial{-1, -1}).is_zero());
}

TEST_CASE("scale_shift") {
    CHECK(scale_shift(Polynomial{1, 1}, 2, 2) == Polynomial{0, 0, 2, 2});
    CHECK(scale_shift(Polynomial{1}, -2, 3) == Polynomial{0, 0, 0, -2});
    CHECK(scale_shift(Polynomial{1, 1}, -2, 3) == Polynomial{0, 0, 0, -2, -2});
    const Polynomial p{5, 0, -3};
    CHECK(scale_shift(p, 1, 0) == p);
    CHECK(scale_shift(p, 0, 4).is_zero());
    CHECK_THROWS_AS(scale_shift(p, 1, -1), DomainError);
}

TEST_CASE("equality is coefficient-wise after normalization") {
    CHECK_FALSE(eq(Polynomial{1, 3, 3, 1}, Polynomial{1, 3, 3, 2}));
    CHECK(eq(Polynomial{}, Polynomial{0, 0, 0}));
    CHECK(eq(Polynomial{2, 1}, Polynomial{2, 1, 0, 0, 0, 0}));
    CHECK(Polynomial{0, 0, 0}.degree() == -1);
    CHECK(Polynomial{1}.degree() == 0);
}

TEST_CASE("rendering") {
    CHECK(Polynomial{1, 3, 3, 2}.to_string() == "1+3x+3x^2+2x^3");
    CHECK(Polynomial{}.to_string() == "0");
    CHECK(Polynomial{0, 0, 0, 1}.to_string() == "x^3");
    CHECK(Polynomial{1, 0, 0, -2}.to_string() == "1-2x^3");
    CHECK(Polynomial{0, -1}.to_string() == "-x");
    CHECK(Polynomial{-1, 1}.to_string() == "-1+x");
    CHECK(Polynomial{0, 0, -5}.to_string() == "-5x^2");
    CHECK(Polynomial{std::numeric_limits<std::int64_t>::min()}.to_string() == "-9223372036854775808");
    std::ostringstream os;
    os << Polynomial{1, 1};
    CHECK(os.str() == "1+x");
}

TEST_CASE("overflow is reported, never wrapped") {
    const auto big = std::numeric_limits<std::int64_t>::max();
    CHECK_THROWS_AS(Polynomial{big} + Polynomial{1}, OverflowError);
    CHECK_THROWS_AS(Polynomial{-big} - Polynomial{2}, OverflowError);
    CHECK_THROWS_AS(scale_shift(Polynomial{big / 2 + 1}, 2, 0), OverflowError);
    CHECK_THROWS_AS(-Polynomial{std::numeric_limits<std::int64_t>::min()}, OverflowError);
}

TEST_CASE("ring properties on random small polynomials") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> len(0, 6);
    std::uniform_int_distribution<std::int64_t> coef(-50, 50);
    std::uniform_int_distribution<int> shift(0, 4);
    auto random_poly = [&] {
        std::vector<std::int64_t> c(static_cast<std::size_t>(len(rng)));
        for (auto& v : c) v = coef(rng);
        return Polynomial(c);
    };
    for (int trial = 0; trial < 2000; ++trial) {
        const Polynomial p = random_poly();
        const Polynomial q = random_poly();
        const Polynomial r = random_poly();
        REQUIRE(p + q == q + p);
        REQUIRE((p + q) + r == p + (q + r));
        REQUIRE((p - q) + q == p);
        const auto a = coef(rng);
        const auto b = coef(rng);
        const int s = shift(rng);
        const int t = shift(rng);
        REQUIRE(scale_shift(scale_shift(p, a, s), b, t) == scale_shift(p, a * b, s + t));
        if (!p.is_zero()) REQUIRE(p.coeff(p.degree()) != 0);
    }
}
