#include <doctest.h>

#include <numbers>

#include "derand/errors.hpp"
#include "derand/system_io.hpp"
#include "support.hpp"

using namespace derand;
using testing::random_system;

namespace {

PolySystem monomial(const DegreeProfile& prof, int eq, const Exponents& a, Complex c = 1.0) {
    PolySystem f(prof);
    f.coeffs(eq)[prof.basis(eq).index_of(a)] = c;
    return f;
}

}  // namespace

TEST_CASE("degree profile sizes") {
    DegreeProfile p(2, {2, 3});
    CHECK(p.N() == 6 + 10);
    CHECK(p.D() == 3);
    CHECK(p.vars() == 3);
    CHECK_THROWS_AS(DegreeProfile(2, {2}), ContractViolation);
    CHECK_THROWS_AS(DegreeProfile(1, {0}), ContractViolation);
    CHECK_THROWS_AS(DegreeProfile(0, {}), ContractViolation);
}

TEST_CASE("canonical order is lexicographically descending and round-trips") {
    auto basis = MonomialBasis::get(3, 3);
    REQUIRE(basis->size() == 10);
    CHECK(basis->exponents(0) == Exponents{3, 0, 0});
    CHECK(basis->exponents(1) == Exponents{2, 1, 0});
    CHECK(basis->exponents(9) == Exponents{0, 0, 3});
    for (std::size_t k = 0; k + 1 < basis->size(); ++k) CHECK(basis->exponents(k) > basis->exponents(k + 1));
    for (std::size_t k = 0; k < basis->size(); ++k) CHECK(basis->index_of(basis->exponents(k)) == k);
    CHECK(MonomialBasis::get(3, 3) == basis);
    CHECK_THROWS_AS(basis->index_of(Exponents{1, 1, 0}), ContractViolation);
}

TEST_CASE("weyl monomial weights") {
    CHECK(weyl_norm_sq_monomial(Exponents{2, 0}, 2) == 1.0);
    CHECK(weyl_norm_sq_monomial(Exponents{1, 1}, 2) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(weyl_norm_sq_monomial(Exponents{1, 1, 1}, 3) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK_THROWS_AS(weyl_norm_sq_monomial(Exponents{1, 1}, 3), ContractViolation);
}

TEST_CASE("weyl inner product") {
    DegreeProfile p(1, {2});
    auto x0sq = monomial(p, 0, {2, 0});
    auto x0x1 = monomial(p, 0, {1, 1});
    CHECK(weyl_inner(x0sq, x0sq) == Complex(1.0));
    CHECK(weyl_inner(x0sq, x0x1) == Complex(0.0));
    CHECK(weyl_inner(x0x1, x0x1).real() == doctest::Approx(0.5));
    CHECK_THROWS_AS(weyl_inner(x0sq, PolySystem(DegreeProfile(1, {3}))), ProfileMismatch);

    std::mt19937_64 rng(1);
    auto f = random_system(DegreeProfile(2, {2, 3}), rng);
    auto g = random_system(DegreeProfile(2, {2, 3}), rng);
    Complex fg = weyl_inner(f, g), gf = weyl_inner(g, f);
    CHECK(std::abs(fg - std::conj(gf)) <= 1e-12 * std::abs(fg));
    Complex s(0.3, -1.1);
    CHECK(std::abs(weyl_inner(s * f, g) - s * fg) <= 1e-12 * std::abs(fg));
}

TEST_CASE("evaluation and jacobian by hand") {
    DegreeProfile p(1, {2});
    PolySystem f = monomial(p, 0, {2, 0}) - monomial(p, 0, {0, 2});
    CVector z(2);
    z << 1.0, 2.0;
    CHECK(evaluate(f, z)(0) == Complex(-3.0));
    CMatrix J = jacobian(f, z);
    CHECK(J(0, 0) == Complex(2.0));
    CHECK(J(0, 1) == Complex(-4.0));

    PolySystem g = monomial(p, 0, {1, 1}, std::numbers::sqrt2);
    CVector e1(2);
    e1 << 0.0, 1.0;
    CHECK(evaluate(g, e1)(0) == Complex(0.0));
    CMatrix Jg = jacobian(g, e1);
    CHECK(Jg(0, 0).real() == doctest::Approx(std::numbers::sqrt2));
    CHECK(Jg(0, 1) == Complex(0.0));

    std::mt19937_64 rng(2);
    auto h = random_system(DegreeProfile(3, {1, 2, 4}), rng);
    CHECK(evaluate(h, CVector::Zero(4)).norm() == 0.0);
}

TEST_CASE("euler identity and scaling on random inputs") {
    std::mt19937_64 rng(3);
    for (auto degrees : {std::vector<int>{2, 2}, std::vector<int>{3, 1}, std::vector<int>{4, 2}}) {
        DegreeProfile p(2, degrees);
        for (int trial = 0; trial < 50; ++trial) {
            auto f = random_system(p, rng);
            CVector z = testing::random_cvector(3, rng);
            CVector fz = evaluate(f, z);
            CVector lhs = jacobian(f, z) * z;
            CVector rhs(2);
            for (int i = 0; i < 2; ++i) rhs(i) = static_cast<double>(p.degree(i)) * fz(i);
            CHECK((lhs - rhs).norm() <= 1e-10 * rhs.norm());

            Complex lambda(0.7, -1.3);
            CVector scaled = evaluate(f, lambda * z);
            for (int i = 0; i < 2; ++i) {
                Complex expect = std::pow(lambda, p.degree(i)) * fz(i);
                CHECK(std::abs(scaled(i) - expect) <= 1e-10 * std::abs(expect));
            }
        }
    }
}

TEST_CASE("jacobian matches central differences") {
    std::mt19937_64 rng(4);
    DegreeProfile p(2, {3, 2});
    auto f = random_system(p, rng);
    CVector z = testing::random_cvector(3, rng);
    CMatrix J = jacobian(f, z);
    const double h = 1e-6;
    for (int j = 0; j < 3; ++j) {
        CVector zp = z, zm = z;
        zp(j) += h;
        zm(j) -= h;
        CVector fd = (evaluate(f, zp) - evaluate(f, zm)) / (2 * h);
        CHECK((fd - J.col(j)).norm() <= 1e-6 * J.norm());
    }
}

TEST_CASE("compose_linear") {
    DegreeProfile p(1, {2});
    CMatrix swap(2, 2);
    swap << 0, 1, 1, 0;
    PolySystem g = compose_linear(monomial(p, 0, {2, 0}), swap);
    CHECK(g.coeffs(0)[p.basis(0).index_of(Exponents{0, 2})] == Complex(1.0));
    CHECK(std::abs(weyl_norm(g) - 1.0) == 0.0);

    std::mt19937_64 rng(5);
    DegreeProfile q(2, {3, 2});
    auto f = random_system(q, rng);
    PolySystem same = compose_linear(f, CMatrix::Identity(3, 3));
    for (std::size_t k = 0; k < f.flat().size(); ++k) CHECK(std::abs(same.flat()[k] - f.flat()[k]) <= 1e-14 * weyl_norm(f));

    for (int trial = 0; trial < 100; ++trial) {
        auto h = random_system(q, rng);
        CMatrix U = testing::random_unitary(3, rng);
        PolySystem hu = compose_linear(h, U);
        CHECK(std::abs(weyl_norm(hu) - weyl_norm(h)) <= 1e-10 * weyl_norm(h));
        CVector x = testing::random_cvector(3, rng);
        CHECK((evaluate(hu, x) - evaluate(h, U * x)).norm() <= 1e-10 * evaluate(h, U * x).norm());
    }
}

TEST_CASE("real coordinates") {
    DegreeProfile p(1, {2});
    RVector v = to_real_coords(monomial(p, 0, {2, 0}));
    RVector expect = RVector::Zero(6);
    expect(0) = 1.0;
    CHECK(v == expect);
    CHECK_THROWS_AS(from_real_coords(RVector::Zero(5), p), ContractViolation);

    std::mt19937_64 rng(6);
    DegreeProfile q(2, {2, 3});
    for (int trial = 0; trial < 100; ++trial) {
        auto f = random_system(q, rng);
        RVector r = to_real_coords(f);
        CHECK(r.size() == 2 * static_cast<Eigen::Index>(q.N()));
        CHECK(std::abs(r.norm() - weyl_norm(f)) <= 1e-12 * weyl_norm(f));
        PolySystem back = from_real_coords(r, q);
        for (std::size_t k = 0; k < f.flat().size(); ++k)
            CHECK(std::abs(back.flat()[k] - f.flat()[k]) <= 4e-16 * std::abs(f.flat()[k]));
    }
}

TEST_CASE("real coordinates are exact where the weyl scale is exact") {
    // degree-1 systems have unit weights, so the identification is a pure relabeling
    std::mt19937_64 rng(7);
    DegreeProfile p(3, {1, 1, 1});
    auto f = random_system(p, rng);
    PolySystem back = from_real_coords(to_real_coords(f), p);
    CHECK(back.flat() == f.flat());
}

TEST_CASE("system json round trip and errors") {
    std::mt19937_64 rng(8);
    DegreeProfile p(2, {2, 3});
    auto f = random_system(p, rng);
    PolySystem g = parse_system(system_to_json(f).dump());
    CHECK(g.flat() == f.flat());
    CHECK(g.profile() == p);

    CHECK_THROWS_AS(parse_system("{not json"), ParseError);
    CHECK_THROWS_AS(parse_system(R"({"n":1,"degrees":[2],"equations":[[{"exponents":[1,1],"re":1,"im":0},
        {"exponents":[1,1],"re":2,"im":0}]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_system(R"({"n":1,"degrees":[2],"equations":[[{"exponents":[1,2],"re":1,"im":0}]]})"),
                    ParseError);
    CHECK_THROWS_AS(parse_system(R"({"n":2,"degrees":[2],"equations":[[]]})"), ParseError);
    PolySystem sparse = parse_system(R"({"n":1,"degrees":[2],"equations":[[{"exponents":[0,2],"re":1,"im":-1}]]})");
    CHECK(sparse.coeffs(0)[2] == Complex(1, -1));
    CHECK(sparse.coeffs(0)[0] == Complex(0));
}
