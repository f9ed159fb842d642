#include <catch2/catch_amalgamated.hpp>

#include <cliffordforge/cayley_dickson.hpp>

using namespace cliffordforge;

namespace {
CDElement cd(int level, std::initializer_list<long long> v) {
    std::vector<Rational> comps;
    for (long long c : v) comps.emplace_back(c);
    return CDElement(level, std::move(comps));
}
} // namespace

TEST_CASE("level zero is plain rational arithmetic") {
    CHECK(cd(0, {3}) * cd(0, {5}) == cd(0, {15}));
    CHECK(cd(0, {3}).conj() == cd(0, {3}));
    CHECK(cd(0, {-2}).norm() == Rational(4));
}

TEST_CASE("level one doubles to the complex numbers") {
    auto x = cd(1, {1, 2});
    auto y = cd(1, {3, 4});
    CHECK(x * y == cd(1, {-5, 10}));
    CHECK(x.conj() == cd(1, {1, -2}));
    CHECK(x.norm() == Rational(5));
    CHECK((x * y).norm() == x.norm() * y.norm());
    auto i = CDElement::unit(1, 1);
    CHECK(i * i == -CDElement::scalar(1, Rational(1)));
}

TEST_CASE("level two basis table") {
    auto u = [](int k) { return CDElement::unit(2, k); };
    auto n1 = -CDElement::scalar(2, Rational(1));
    CHECK(u(1) * u(2) == -u(3));
    CHECK(u(2) * u(1) == u(3));
    CHECK(u(1) * u(3) == u(2));
    CHECK(u(3) * u(1) == -u(2));
    CHECK(u(2) * u(3) == -u(1));
    CHECK(u(3) * u(2) == u(1));
    for (int k = 1; k <= 3; ++k) CHECK(u(k) * u(k) == n1);
    // i = e1, j = e2, k = ij form a quaternion triple
    auto k = u(1) * u(2);
    CHECK(u(1) * u(2) * k == n1);
    CHECK(u(2) * u(1) == -k);
}

TEST_CASE("level two is associative, level three is not") {
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            for (int c = 0; c < 4; ++c) {
                auto x = CDElement::unit(2, a), y = CDElement::unit(2, b),
                     z = CDElement::unit(2, c);
                CHECK((x * y) * z == x * (y * z));
            }
    auto e1 = CDElement::unit(3, 1), e2 = CDElement::unit(3, 2), e4 = CDElement::unit(3, 4);
    CHECK((e1 * e2) * e4 == CDElement::unit(3, 7));
    CHECK(e1 * (e2 * e4) == -CDElement::unit(3, 7));
}

TEST_CASE("conjugation is an anti-homomorphism through level three") {
    auto x = cd(3, {1, 2, 0, -1, 3, 0, 1, 2});
    auto y = cd(3, {2, 0, 1, 1, -2, 1, 0, 3});
    CHECK((x * y).conj() == y.conj() * x.conj());
    CHECK(x.conj().conj() == x);
    CHECK((x * y).norm() == x.norm() * y.norm());
    CHECK(x + x.conj() == CDElement::scalar(3, Rational(2)));
}

TEST_CASE("level four contains zero divisors") {
    bool found = false;
    for (int a = 1; a < 16 && !found; ++a)
        for (int b = a + 1; b < 16 && !found; ++b)
            for (int c = 1; c < 16 && !found; ++c)
                for (int d = c + 1; d < 16 && !found; ++d) {
                    auto x = CDElement::unit(4, a) + CDElement::unit(4, b);
                    auto y = CDElement::unit(4, c) - CDElement::unit(4, d);
                    if ((x * y).is_zero()) found = true;
                }
    CHECK(found);
}

TEST_CASE("levels and shapes are validated") {
    CHECK_THROWS_AS(CDElement(5, std::vector<Rational>(32, Rational(0))), std::domain_error);
    CHECK_THROWS_AS(CDElement(2, std::vector<Rational>(3, Rational(0))), std::domain_error);
    CHECK_THROWS_AS(cd(1, {1, 2}) * cd(2, {1, 2, 3, 4}), std::domain_error);
    CHECK_THROWS_AS(CDElement::unit(2, 4), std::out_of_range);
    CHECK_THROWS_AS(CDElement::unit(2, -1), std::out_of_range);
}

TEST_CASE("printing uses the flat tuple form") {
    CHECK(cd(1, {1, -2}).str() == "(1,-2)");
    CHECK(cd(2, {0, 1, 0, 0}).str() == "(0,1,0,0)");
}
