#include <catch2/catch_amalgamated.hpp>

#include <cliffordforge/matrix.hpp>

using namespace cliffordforge;

namespace {
GaussianRational g(long long v) { return GaussianRational(v); }
GroupAlgebraElement term(const GroupPtr& gr, int idx, std::initializer_list<long long> v) {
    std::vector<GaussianRational> comps;
    for (long long c : v) comps.emplace_back(c);
    return GroupAlgebraElement::term(gr, idx, Iterant(std::move(comps)));
}
} // namespace

TEST_CASE("shift matrix cycles basis vectors") {
    Matrix p = Matrix::shift(3);
    CHECK(p.str() == "[[0,0,1],[1,0,0],[0,1,0]]");
    CHECK(p.pow(3) == Matrix::identity(3));
    CHECK(mat_vec(p, Iterant{g(1), g(0), g(0)}) == Iterant{g(0), g(1), g(0)});
    CHECK(mat_vec(p, Iterant{g(0), g(0), g(1)}) == Iterant{g(1), g(0), g(0)});
}

TEST_CASE("matrix arithmetic basics") {
    Matrix a(2), b(2);
    a.at(0, 0) = g(1); a.at(0, 1) = g(2); a.at(1, 0) = g(3); a.at(1, 1) = g(4);
    b.at(0, 1) = g(1); b.at(1, 0) = g(1);
    CHECK((a * b).str() == "[[2,1],[4,3]]");
    CHECK((a + b).str() == "[[1,3],[4,4]]");
    CHECK((-a).at(1, 1) == g(-4));
    CHECK(a.scaled(g(2)).at(0, 1) == g(4));
    CHECK(Matrix::diagonal(Iterant{g(5), g(7)}).str() == "[[5,0],[0,7]]");
    Matrix c(3);
    CHECK_THROWS_AS(a * c, std::domain_error);
}

TEST_CASE("order-two image matches the block pattern") {
    auto c2 = make_cyclic(2);
    auto x = term(c2, 0, {1, 2}) + term(c2, 1, {3, 4});
    CHECK(to_matrix(x).str() == "[[1,3],[4,2]]");
    CHECK(from_matrix(to_matrix(x), c2) == x);
    auto e_eta = term(c2, 1, {-1, 1});
    CHECK(to_matrix(e_eta).str() == "[[0,-1],[1,0]]");
}

TEST_CASE("order-three image is a twisted circulant") {
    auto c3 = make_cyclic(3);
    auto x = term(c3, 1, {1, 2, 3});
    CHECK(to_matrix(x).str() == "[[0,0,1],[2,0,0],[0,3,0]]");
    CHECK(from_matrix(to_matrix(x), c3) == x);
}

TEST_CASE("matrix reconstruction by order") {
    Matrix m(2);
    m.at(0, 0) = g(1); m.at(0, 1) = g(3); m.at(1, 0) = g(4); m.at(1, 1) = g(2);
    auto x = from_matrix(m, 2);
    CHECK(x.coeff(0) == Iterant{g(1), g(2)});
    CHECK(x.coeff(1) == Iterant{g(3), g(4)});
    CHECK(to_matrix(x) == m);
    CHECK_THROWS_AS(from_matrix(m, make_cyclic(3)), std::domain_error);
}

TEST_CASE("image preserves products") {
    auto c3 = make_cyclic(3);
    auto x = term(c3, 1, {1, 2, 3}) + term(c3, 0, {1, 0, 0});
    auto y = term(c3, 2, {2, 1, 1});
    CHECK(to_matrix(x * y) == to_matrix(x) * to_matrix(y));
    CHECK(to_matrix(x + y) == to_matrix(x) + to_matrix(y));
    Iterant w{g(1), g(5), g(9)};
    CHECK(mat_vec(to_matrix(x), w) == ga_action(x, w));
}

TEST_CASE("kronecker product layout") {
    Matrix a(2), b(2);
    a.at(0, 0) = g(1); a.at(0, 1) = g(2); a.at(1, 0) = g(3); a.at(1, 1) = g(4);
    b.at(0, 1) = g(1); b.at(1, 0) = g(1);
    CHECK(kron(a, b).str() ==
          "[[0,1,0,2],[1,0,2,0],[0,3,0,4],[3,0,4,0]]");
    CHECK(kron(Matrix::identity(2), Matrix::identity(2)) == Matrix::identity(4));
}

TEST_CASE("tensor image equals the kronecker product of factor images") {
    TensorAlgebra t = ga_tensor(make_cyclic(2), make_cyclic(2));
    auto x = term(t.left, 1, {-1, 1});
    auto y = term(t.right, 0, {2, 3});
    auto embedded = t.embed_left(x) * t.embed_right(y);
    CHECK(tensor_to_matrix(embedded, t) == kron(to_matrix(x), to_matrix(y)));
    auto z = t.embed_left(term(t.left, 0, {1, 1}));
    CHECK(tensor_to_matrix(embedded * z, t) ==
          tensor_to_matrix(embedded, t) * tensor_to_matrix(z, t));
    auto foreign = term(make_cyclic(2), 0, {1, 1});
    CHECK_THROWS_AS(tensor_to_matrix(foreign, t), std::domain_error);
}
