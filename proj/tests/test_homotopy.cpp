#include <doctest.h>

#include <numbers>

#include "derand/errors.hpp"
#include "support.hpp"

using namespace derand;

namespace {

CVector vec2(Complex a, Complex b) {
    CVector v(2);
    v << a, b;
    return v;
}

struct Instance {
    SpherePoint f;
    SpherePoint g;
    ProjectivePoint eta;
};

Instance random_instance(const DegreeProfile& prof, std::mt19937_64& rng) {
    SpherePoint f = SpherePoint::normalize(testing::random_system(prof, rng));
    BpPair start = bp(SpherePoint::normalize(testing::random_system(prof, rng)));
    SpherePoint g = orientation_sign(f, start.g) < 0 ? -start.g : start.g;
    return {f, g, start.zeta};
}

}  // namespace

TEST_CASE("step constants") {
    CHECK(StepConstants::eps == 1.0 / 13.0);
    CHECK(StepConstants::A == StepConstants::eps / 4);
    CHECK(StepConstants::B == 1.0 / 101.0);
    CHECK(StepConstants::Bprime == 1.0 / 65.0);
    CHECK(StepConstants::fail_threshold == 1.0 / 151.0);
    CHECK(StepConstants::cert_A_check == 52);
    CHECK(StepConstants::step_denominator == 101);
}

TEST_CASE("zero-length path") {
    std::mt19937_64 rng(31);
    auto inst = random_instance(DegreeProfile(2, {2, 2}), rng);
    HcOutcome out = hc(inst.g, inst.g, inst.eta);
    REQUIRE(out.ok());
    CHECK(out.trace.K() == 0);
    CHECK(out.point->rep() == inst.eta.rep());
}

TEST_CASE("first step size") {
    DegreeProfile p(1, {2});
    PolySystem g(p), f(p);
    g.coeffs(0)[1] = std::numbers::sqrt2;  // sqrt2 x0 x1, mu = 1 at [0:1]
    f.coeffs(0)[0] = 1.0;                  // x0^2, orthogonal to g
    TrackOptions opts;
    opts.max_steps = 2;  // the endpoint x0^2 is singular at the tracked root
    HcOutcome out = hc(SpherePoint(f), SpherePoint(g), ProjectivePoint(vec2(0, 1)), opts);
    REQUIRE(out.trace.K() >= 1);
    const double expect = 1.0 / (101.0 * std::pow(2.0, 1.5) * (std::numbers::pi / 2));
    CHECK(out.trace.steps[0].t == doctest::Approx(expect).epsilon(1e-14));
    CHECK(out.trace.steps[0].t == doctest::Approx(0.0022285).epsilon(1e-4));
    CHECK(out.trace.start_mu == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("trace invariants and certified endpoints") {
    std::mt19937_64 rng(32);
    DegreeProfile prof(2, {2, 2});
    for (int trial = 0; trial < 100; ++trial) {
        auto inst = random_instance(prof, rng);
        HcOutcome out = hc(inst.f, inst.g, inst.eta);
        REQUIRE(out.ok());
        double max_mu = out.trace.start_mu;
        bool increasing = true;
        for (std::size_t k = 0; k < out.trace.K(); ++k) {
            if (k > 0) increasing = increasing && out.trace.steps[k].t > out.trace.steps[k - 1].t;
            max_mu = std::max(max_mu, out.trace.steps[k].mu);
        }
        CHECK(increasing);
        CHECK(out.trace.max_mu == max_mu);
        CHECK(out.trace.steps.back().t < 1.0);
        Certificate cert = certify_root(inst.f.system(), *out.point);
        CHECK(cert.passed);
        CHECK(cert.gamma_product(prof.D()) <= 1.0 / 23.0 + 1e-6);
    }
}

TEST_CASE("max_steps aborts") {
    std::mt19937_64 rng(33);
    auto inst = random_instance(DegreeProfile(2, {2, 2}), rng);
    TrackOptions opts;
    opts.max_steps = 3;
    HcOutcome out = hc(inst.f, inst.g, inst.eta, opts);
    CHECK_FALSE(out.ok());
    CHECK(out.trace.K() == 3);
}

TEST_CASE("hc_checked") {
    std::mt19937_64 rng(34);
    DegreeProfile prof(2, {2, 2});
    auto inst = random_instance(prof, rng);
    CHECK_THROWS_AS(hc_checked(inst.f, inst.g, inst.eta, 0.0), ContractViolation);

    HcOutcome early = hc_checked(inst.f, inst.g, inst.eta, 1.0);
    CHECK_FALSE(early.ok());
    CHECK(early.trace.K() == 0);

    HcOutcome plain = hc(inst.f, inst.g, inst.eta);
    HcOutcome tiny = hc_checked(inst.f, inst.g, inst.eta, 1e-300);
    REQUIRE(tiny.ok());
    REQUIRE(tiny.trace.K() == plain.trace.K());
    for (std::size_t k = 0; k < plain.trace.K(); ++k) {
        CHECK(tiny.trace.steps[k].t == plain.trace.steps[k].t);
        CHECK(tiny.trace.steps[k].mu == plain.trace.steps[k].mu);
    }
    CHECK(tiny.point->rep() == plain.point->rep());
}

TEST_CASE("hc_checked succeeds exactly when the trace passes the precision check") {
    std::mt19937_64 rng(35);
    std::uniform_real_distribution<double> spread(-2.0, 2.0);
    DegreeProfile prof(2, {2, 2});
    const double D32 = std::pow(2.0, 1.5);
    int successes = 0;
    for (int trial = 0; trial < 50; ++trial) {
        auto inst = random_instance(prof, rng);
        HcOutcome plain = hc(inst.f, inst.g, inst.eta);
        double threshold = 1.0 / (151.0 * D32 * plain.trace.max_mu * plain.trace.max_mu);
        double rho = threshold * std::pow(10.0, spread(rng));
        HcOutcome out = hc_checked(inst.f, inst.g, inst.eta, rho);
        bool law = D32 * out.trace.max_mu * out.trace.max_mu * rho <= 1.0 / 151.0;
        CHECK(out.ok() == law);
        successes += out.ok();
    }
    CHECK(successes > 5);
    CHECK(successes < 45);
}

TEST_CASE("path oracle") {
    std::mt19937_64 rng(36);
    DegreeProfile prof(2, {2, 2});
    auto inst = random_instance(prof, rng);

    auto constant = path_oracle(inst.g, inst.g, inst.eta, {0.0, 2.0, 3.0}, 1000);
    double mu = mu_exact(inst.g.system(), inst.eta);
    REQUIRE(constant.tracked);
    CHECK(constant.M_hat == doctest::Approx(mu).epsilon(1e-9));
    CHECK(constant.I_hat[0.0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(constant.I_hat[2.0] == doctest::Approx(mu * mu).epsilon(1e-9));
    CHECK(constant.I_hat[3.0] == doctest::Approx(mu * mu * mu).epsilon(1e-9));

    auto moving = path_oracle(inst.f, inst.g, inst.eta, {0.0, 3.0});
    REQUIRE(moving.tracked);
    CHECK(std::abs(moving.I_hat[0.0] - 1.0) <= 1e-9);
    CHECK(moving.M_hat <= 1.05 * 151.0 * std::pow(2.0, 1.5) * moving.I_hat[3.0]);

    CHECK_THROWS_AS(path_oracle(inst.f, inst.g, testing::random_point(3, rng), {2.0}), NotARoot);
    CHECK_THROWS_AS(path_oracle(inst.f, inst.g, inst.eta, {2.0}, 999), ContractViolation);
}
