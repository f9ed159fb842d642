#include <catch2/catch_amalgamated.hpp>

#include <cliffordforge/clifford_group.hpp>
#include <cliffordforge/group.hpp>
#include <cliffordforge/group_algebra.hpp>

using namespace cliffordforge;

namespace {
GaussianRational g(long long v) { return GaussianRational(v); }
GroupAlgebraElement term(const GroupPtr& gr, int idx, std::initializer_list<long long> v) {
    std::vector<GaussianRational> comps;
    for (long long c : v) comps.emplace_back(c);
    return GroupAlgebraElement::term(gr, idx, Iterant(std::move(comps)));
}
} // namespace

TEST_CASE("cyclic group structure") {
    auto c3 = make_cyclic(3);
    CHECK(c3->order() == 3);
    CHECK(c3->degree() == 3);
    CHECK(c3->identity() == 0);
    CHECK(c3->label(0) == "e");
    CHECK(c3->label(1) == "s");
    CHECK(c3->label(2) == "s2");
    CHECK(c3->multiply(1, 2) == 0);
    CHECK(c3->inverse(1) == 2);
    CHECK(c3->shift_generator().value() == 1);
}

TEST_CASE("cyclic slot action rotates entries") {
    auto c3 = make_cyclic(3);
    Iterant v{g(1), g(2), g(3)};
    // the shift sends [x, y, z] to [z, x, y]
    CHECK(act(*c3, 1, v) == Iterant{g(3), g(1), g(2)});
    CHECK(act(*c3, 2, v) == Iterant{g(2), g(3), g(1)});
    CHECK(act(*c3, 0, v) == v);
}

TEST_CASE("slot action is anti-homomorphic in the group argument") {
    for (auto gr : {make_cyclic(4), make_two_torsion(2)}) {
        Iterant v{g(2), g(5), g(7), g(11)};
        for (int a = 0; a < gr->order(); ++a)
            for (int b = 0; b < gr->order(); ++b)
                CHECK(act(*gr, a, act(*gr, b, v)) == act(*gr, gr->multiply(a, b), v));
    }
}

TEST_CASE("twisted product with a hand-computed example") {
    auto c3 = make_cyclic(3);
    auto x = term(c3, 1, {1, 2, 3});
    auto y = term(c3, 2, {1, 1, 2});
    // coefficient: [1,2,3] * act(s, [1,1,2]) = [1,2,3] * [2,1,1] = [2,2,3] at e
    CHECK(x * y == term(c3, 0, {2, 2, 3}));
}

TEST_CASE("order-two shift moves past coefficients by swapping") {
    auto c2 = make_cyclic(2);
    auto eta = term(c2, 1, {1, 1});
    CHECK(eta * term(c2, 0, {3, 5}) == term(c2, 1, {5, 3}));
    CHECK(eta * term(c2, 0, {3, 5}) == term(c2, 0, {5, 3}) * eta);
    auto i_elem = term(c2, 1, {-1, 1});
    CHECK(i_elem * i_elem == GroupAlgebraElement::scalar(c2, g(-1)));
    CHECK(eta * eta == GroupAlgebraElement::one(c2));
}

TEST_CASE("group handles must match") {
    auto a = make_cyclic(2);
    auto b = make_cyclic(2);
    auto x = term(a, 0, {1, 2});
    auto y = term(b, 0, {1, 2});
    CHECK_THROWS_AS(x * y, std::domain_error);
    CHECK_THROWS_AS(x + y, std::domain_error);
}

TEST_CASE("module action distributes over the product") {
    auto c3 = make_cyclic(3);
    auto x = term(c3, 1, {1, 2, 3});
    auto y = term(c3, 2, {1, 1, 2}) + term(c3, 0, {0, 1, 0});
    Iterant w{g(4), g(5), g(6)};
    CHECK(ga_action(x * y, w) == ga_action(x, ga_action(y, w)));
    CHECK(ga_action(GroupAlgebraElement::one(c3), w) == w);
}

TEST_CASE("group ring has the untwisted convolution product") {
    auto r3 = group_ring(make_cyclic(3));
    CHECK(r3->degree() == 1);
    auto s = term(r3, 1, {1});
    auto all = term(r3, 0, {1}) + term(r3, 1, {1}) + term(r3, 2, {1});
    CHECK(all * s == all);
    CHECK(s * s == term(r3, 2, {1}));
}

TEST_CASE("direct products combine labels, tables and slots") {
    auto p = direct_product(make_cyclic(2), make_cyclic(3));
    CHECK(p->order() == 6);
    CHECK(p->degree() == 6);
    CHECK(p->label(0) == "(e,e)");
    CHECK(p->label(4) == "(h,s)");
    // (h, s) * (h, s2) = (e, e)
    CHECK(p->multiply(4, 5) == 0);
}

TEST_CASE("two-torsion products carry flip metadata") {
    auto t3 = make_two_torsion(3);
    CHECK(t3->order() == 8);
    CHECK(t3->is_two_torsion_product());
    CHECK(t3->flip_generators().size() == 3);
    CHECK(t3->word_parity(t3->identity()) == 0);
    CHECK(t3->word_parity(t3->twist()) == 3 % 2);
    for (int f : t3->flip_generators()) CHECK(t3->word_parity(f) == 1);
}

TEST_CASE("star is a homomorphic involution on two-torsion algebras") {
    auto t2 = make_two_torsion(2);
    auto x = term(t2, 1, {1, 2, 3, 4}) + term(t2, 2, {0, 1, 0, -1});
    auto y = term(t2, 3, {2, 0, 1, 1});
    CHECK(x.star().star() == x);
    CHECK((x * y).star() == x.star() * y.star());
    auto c3 = make_cyclic(3);
    CHECK_THROWS_AS(term(c3, 0, {1, 1, 1}).star(), std::domain_error);
}

TEST_CASE("order-two star matches the doubling star") {
    auto c2 = make_cyclic(2);
    auto x = term(c2, 0, {1, 2}) + term(c2, 1, {3, 4});
    // (a + b h)* = a* - b* h with star = swap
    CHECK(x.star() == term(c2, 0, {2, 1}) + term(c2, 1, {-4, -3}));
}

TEST_CASE("serialization round trip") {
    for (auto gr : {make_cyclic(3), make_two_torsion(2),
                    direct_product(make_cyclic(2), make_cyclic(3))}) {
        FiniteGroup copy = FiniteGroup::deserialize(gr->serialize());
        CHECK(copy.same_structure(*gr));
    }
    CHECK_THROWS_AS(FiniteGroup::deserialize("group\norder nonsense"), std::domain_error);
}

TEST_CASE("group law violations are rejected at construction") {
    // g * g = g breaks the inverse law
    CHECK_THROWS_AS(FiniteGroup({"e", "g"}, 0, {{0, 1}, {1, 1}},
                                {Permutation::identity(1), Permutation::identity(1)}),
                    std::domain_error);
    // action by a non-identity permutation for the identity element
    CHECK_THROWS_AS(FiniteGroup({"e", "g"}, 0, {{0, 1}, {1, 0}},
                                {Permutation({1, 0}), Permutation({1, 0})}),
                    std::domain_error);
}

TEST_CASE("tensor embeddings commute and multiply slotwise") {
    TensorAlgebra t = ga_tensor(make_cyclic(2), make_cyclic(2));
    auto x = term(t.left, 1, {-1, 1});
    auto y = term(t.right, 1, {1, 1});
    auto xy = t.embed_left(x) * t.embed_right(y);
    CHECK(xy == t.embed_right(y) * t.embed_left(x));
    CHECK(xy == term(t.product, 3, {-1, -1, 1, 1}));
    auto wrong = term(make_cyclic(2), 0, {1, 1});
    CHECK_THROWS_AS(t.embed_left(wrong), std::domain_error);
}

TEST_CASE("generator images in the two-torsion model") {
    auto model = clifford_as_group_algebra(2);
    CHECK(model.generators.size() == 2);
    CHECK(model.generators[0] == term(model.group, 2, {1, 1, 1, 1}));
    CHECK(model.generators[1] == term(model.group, 1, {1, 1, -1, -1}));
    CHECK(model.generators[0] * model.generators[1] == term(model.group, 3, {-1, -1, 1, 1}));
    CHECK(model.generators[0] * model.generators[1] ==
          -(model.generators[1] * model.generators[0]));
    for (const auto& h : model.generators)
        CHECK(h * h == GroupAlgebraElement::one(model.group));
}

TEST_CASE("the blade map is a ring homomorphism") {
    auto model = clifford_as_group_algebra(3);
    using CE = CliffordElement<RationalField>;
    CE x = CE::generator(1) * CE::generator(2) + CE::scalar(Rational(2));
    CE y = CE::generator(3) - CE::generator(1);
    CHECK(model.map_element(x * y) == model.map_element(x) * model.map_element(y));
    CHECK(model.map_element(CE::one()) == GroupAlgebraElement::one(model.group));
    CHECK_THROWS_AS(model.map_word({4}), std::domain_error);
}
