#include <catch2/catch_amalgamated.hpp>

#include <cliffordforge/parse.hpp>

using namespace cliffordforge;

namespace {
Rational r(long long n, long long d = 1) { return Rational(BigInt(n), BigInt(d)); }
GaussianRational g(long long n, long long d = 1) { return GaussianRational(r(n, d)); }
} // namespace

TEST_CASE("rational literals") {
    CHECK(parse_rational("3/4") == r(3, 4));
    CHECK(parse_rational(" -5 ") == r(-5));
    CHECK(parse_rational("\xE2\x88\x92" "7/2") == r(-7, 2)); // U+2212 minus
    CHECK(parse_rational("6/4") == r(3, 2));
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational(""), ParseError);
    try {
        parse_rational("12 oops");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position() == 3);
        CHECK(std::string(e.what()).find("position 3") != std::string::npos);
    }
}

TEST_CASE("comma separated rational lists") {
    auto xs = parse_rational_list("1, 2, -3/4");
    REQUIRE(xs.size() == 3);
    CHECK(xs[0] == r(1));
    CHECK(xs[1] == r(2));
    CHECK(xs[2] == r(-3, 4));
    CHECK_THROWS_AS(parse_rational_list("1,,2"), ParseError);
    CHECK_THROWS_AS(parse_rational_list("1 2"), ParseError);
}

TEST_CASE("algebra expressions over the order-two group") {
    GroupPtr g2 = make_cyclic(2);
    int e = g2->identity();
    auto h = *g2->find_label("h");

    auto basic = parse_ga_expr("[1,2]+[3,4]*h", g2);
    auto expect = GroupAlgebraElement::term(g2, e, Iterant({g(1), g(2)})) +
                  GroupAlgebraElement::term(g2, h, Iterant({g(3), g(4)}));
    CHECK(basic == expect);

    CHECK(parse_ga_expr("h*h", g2) == GroupAlgebraElement::scalar(g2, g(1)));

    auto sq = parse_ga_expr("([\xE2\x88\x92" "1,1]*h)*([\xE2\x88\x92" "1,1]*h)", g2);
    CHECK(sq == GroupAlgebraElement::term(g2, e, Iterant({g(-1), g(-1)})));

    auto minus = parse_ga_expr("-[1,2]+[3,4]-1", g2);
    CHECK(minus == GroupAlgebraElement::term(g2, e, Iterant({g(1), g(1)})));

    auto imag = parse_ga_expr("i*i", g2);
    CHECK(imag == GroupAlgebraElement::scalar(g2, g(-1)));

    auto scaled = parse_ga_expr("2*(h + 1/2*[1,0])", g2);
    CHECK(scaled == GroupAlgebraElement::term(g2, h, Iterant::ones(2)).scaled(g(2)) +
                        GroupAlgebraElement::term(g2, e, Iterant({g(1), g(0)})));

    CHECK_THROWS_AS(parse_ga_expr("[1,2,3]", g2), ParseError);
    CHECK_THROWS_AS(parse_ga_expr("q", g2), ParseError);
    CHECK_THROWS_AS(parse_ga_expr("(h", g2), ParseError);
    CHECK_THROWS_AS(parse_ga_expr("[1,2", g2), ParseError);
    CHECK_THROWS_AS(parse_ga_expr("h +", g2), ParseError);
    try {
        parse_ga_expr("h * qq", g2);
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("unknown element 'qq'") != std::string::npos);
        CHECK(e.position() == 4);
    }

    GroupPtr g3 = make_cyclic(3);
    auto shifted = parse_ga_expr("[1,2,3]*s", g3);
    CHECK(shifted ==
          GroupAlgebraElement::term(g3, *g3->find_label("s"), Iterant({g(1), g(2), g(3)})));
}

TEST_CASE("bare iterant vectors") {
    Iterant v = parse_iterant("[1, -2, 3/2]");
    REQUIRE(v.size() == 3);
    CHECK(v == Iterant({g(1), g(-2), g(3, 2)}));
    CHECK_THROWS_AS(parse_iterant("[1,2] junk"), ParseError);
    CHECK_THROWS_AS(parse_iterant("1,2"), ParseError);
}

TEST_CASE("matrix literals") {
    Matrix m = parse_matrix("[[1,3],[4,2]]");
    CHECK(m.str() == "[[1,3],[4,2]]");
    Matrix neg = parse_matrix("[[0,\xE2\x88\x92" "1],[1,0]]");
    CHECK(neg.str() == "[[0,-1],[1,0]]");
    CHECK_THROWS_AS(parse_matrix("[[1,2],[3]]"), ParseError);
    CHECK_THROWS_AS(parse_matrix("[[1,2],[3,4]"), ParseError);
    CHECK_THROWS_AS(parse_matrix("[1,2]"), ParseError);
}

TEST_CASE("hypercomplex tuples") {
    CDElement a = parse_cd_tuple("(1,2)");
    CHECK(a.level() == 1);
    CHECK(a.str() == "(1,2)");
    CDElement b = parse_cd_tuple("(1,-2,3,1/2)");
    CHECK(b.level() == 2);
    CHECK(parse_cd_tuple("(7)").level() == 0);
    CHECK_THROWS_AS(parse_cd_tuple("(1,2,3)"), ParseError);
    std::string many = "(1";
    for (int k = 1; k < 32; ++k) many += ",0";
    many += ")";
    CHECK_THROWS_AS(parse_cd_tuple(many), ParseError);
    CHECK_THROWS_AS(parse_cd_tuple("(1,2"), ParseError);
}
