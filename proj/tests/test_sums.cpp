#include <doctest.h>

#include <cmath>

#include "gapsums/rng.hpp"
#include "gapsums/sums.hpp"

using namespace gapsums;

namespace {

DirichletCharacter first_primitive(std::uint64_t q) {
    auto group = make_character_group(q);
    for (const auto& chi : group->enumerate())
        if (chi.is_primitive()) return chi;
    throw std::runtime_error("no primitive character");
}

} // namespace

TEST_CASE("polynomial normalization and Horner evaluation") {
    Modulus m = Modulus::factorize(7);
    PolynomialModQ h(m, {-1, 8, 3, 0, 0});  // 3x^2 + x + 6 after reduction
    CHECK(h.degree() == 2);
    CHECK(h.coefficients() == std::vector<std::int64_t>{6, 1, 3});
    for (std::int64_t x = -10; x <= 10; ++x) {
        // Naive power evaluation as the oracle.
        std::int64_t naive = 0, q = 7;
        std::int64_t xr = m.reduce(x);
        std::int64_t pw = 1;
        for (std::int64_t c : h.coefficients()) {
            naive = (naive + c * pw) % q;
            pw = pw * xr % q;
        }
        CHECK(h(x) == naive);
    }
    CHECK_THROWS_AS(PolynomialModQ(m, {}), PreconditionError);
}

TEST_CASE("character sum over the full period vanishes for nonprincipal chi") {
    for (std::uint64_t q : {5, 7, 11, 13}) {
        Gap full(Modulus::factorize(q), 1, {0}, {{1}},
                 {static_cast<std::int64_t>(q)});
        auto group = make_character_group(q);
        for (const auto& chi : group->enumerate()) {
            if (chi.is_principal()) continue;
            SumReport rep = character_sum_over_gap(chi, full);
            CHECK(rep.magnitude < 1e-8);
        }
    }
}

TEST_CASE("character sum report fields and direct oracle") {
    std::uint64_t q = 17;
    DirichletCharacter chi = first_primitive(q);
    Gap g(Modulus::factorize(q), 1, {3}, {{2}, {5}}, {3, 2});
    REQUIRE(is_proper_kernel(g));
    SumReport rep = character_sum_over_gap(chi, g);
    cplx direct{0.0, 0.0};
    for (const auto& a : distinct_elements(g)) direct += chi(a[0]);
    CHECK(std::abs(rep.sum - direct) < 1e-12);
    CHECK(rep.magnitude == doctest::Approx(std::abs(direct)));
    CHECK(rep.kind == "char");
    CHECK(rep.q == q);
    CHECK(rep.r == 2);
    CHECK(rep.s == 1);
    REQUIRE(rep.chain_bound.has_value());
    CHECK(rep.magnitude <= *rep.chain_bound + 1e-9);
    CHECK(rep.shape_bound ==
          doctest::Approx(std::sqrt(17.0) * std::pow(std::log(17.0), 2)));
}

TEST_CASE("chain bound is only attached for primitive characters") {
    std::uint64_t q = 12;
    Gap g(Modulus::factorize(q), 1, {0}, {{1}}, {5});
    auto group = make_character_group(q);
    for (const auto& chi : group->enumerate()) {
        SumReport rep = character_sum_over_gap(chi, g);
        CHECK(rep.chain_bound.has_value() == chi.is_primitive());
    }
}

TEST_CASE("completion chain holds exhaustively for intervals, q <= 30") {
    for (std::uint64_t q = 3; q <= 30; ++q) {
        auto group = make_character_group(q);
        Modulus m = Modulus::factorize(q);
        for (const auto& chi : group->enumerate()) {
            if (!chi.is_primitive()) continue;
            for (std::int64_t H = 2; H <= static_cast<std::int64_t>(q); ++H) {
                for (std::int64_t b = 0; b < 3; ++b) {
                    Gap g(m, 1, {b}, {{1}}, {H});
                    SumReport rep = character_sum_over_gap(chi, g);
                    REQUIRE(rep.chain_bound.has_value());
                    CHECK(rep.magnitude <= *rep.chain_bound + 1e-9);
                }
            }
        }
    }
}

TEST_CASE("Weil check: quadratic complete sums have magnitude exactly sqrt(q)") {
    for (std::uint64_t q : {5, 7, 11, 13, 17, 19, 23}) {
        Modulus m = Modulus::factorize(q);
        SplitMix64 rng(31 + q);
        for (int trial = 0; trial < 4; ++trial) {
            std::int64_t a = 1 + static_cast<std::int64_t>(rng.below(q - 1));
            std::int64_t b = static_cast<std::int64_t>(rng.below(q));
            std::int64_t c = static_cast<std::int64_t>(rng.below(q));
            PolynomialModQ h(m, {c, b, a});
            WeilCheck w = weil_complete_sum_check(h);
            CHECK(w.max_complete_sum ==
                  doctest::Approx(std::sqrt(double(q))).epsilon(1e-9));
            CHECK(w.ceiling == doctest::Approx(std::sqrt(double(q))));
            CHECK(w.within_bound);
        }
    }
}

TEST_CASE("Weil check symmetries: translation, constants, linear twists") {
    Modulus m = Modulus::factorize(31);
    SplitMix64 rng(32);
    for (int trial = 0; trial < 10; ++trial) {
        int d = 2 + static_cast<int>(rng.below(4));
        std::vector<std::int64_t> coeffs(d + 1);
        for (auto& c : coeffs) c = static_cast<std::int64_t>(rng.below(31));
        coeffs[d] = 1 + static_cast<std::int64_t>(rng.below(30));
        PolynomialModQ h(m, coeffs);
        double base = weil_complete_sum_check(h).max_complete_sum;

        // Adding a constant only rotates the phase of every complete sum.
        auto shifted = coeffs;
        shifted[0] = m.reduce(shifted[0] + 17);
        CHECK(weil_complete_sum_check(PolynomialModQ(m, shifted)).max_complete_sum ==
              doctest::Approx(base).epsilon(1e-9));

        // Changing the linear coefficient permutes the twists b.
        auto twisted = coeffs;
        twisted[1] = m.reduce(twisted[1] + 5);
        CHECK(weil_complete_sum_check(PolynomialModQ(m, twisted)).max_complete_sum ==
              doctest::Approx(base).epsilon(1e-9));

        // Translating x permutes the summation range; h(x + t) via expansion.
        std::int64_t t = 1 + static_cast<std::int64_t>(rng.below(30));
        std::vector<std::int64_t> translated(d + 1, 0);
        {
            // binomial expansion of sum c_k (x + t)^k
            std::vector<std::vector<std::int64_t>> binom(d + 1,
                                                         std::vector<std::int64_t>(d + 1, 0));
            for (int n = 0; n <= d; ++n) {
                binom[n][0] = 1;
                for (int k = 1; k <= n; ++k)
                    binom[n][k] = (binom[n - 1][k - 1] +
                                   (k <= n - 1 ? binom[n - 1][k] : 0)) % 31;
            }
            for (int k = 0; k <= d; ++k) {
                std::int64_t tk = 1;
                for (int j = k; j >= 0; --j) {
                    // coefficient of x^j from c_k (x+t)^k picks C(k,j) t^{k-j}
                    translated[j] = m.reduce(translated[j] +
                                             coeffs[k] * binom[k][j] % 31 * tk);
                    tk = tk * t % 31;
                }
            }
        }
        CHECK(weil_complete_sum_check(PolynomialModQ(m, translated)).max_complete_sum ==
              doctest::Approx(base).epsilon(1e-9));
    }
}

TEST_CASE("polynomial sum preconditions") {
    Gap g6(Modulus::factorize(6), 1, {0}, {{1}}, {3});
    CHECK_THROWS_AS(
        poly_exp_sum_over_gap(PolynomialModQ(Modulus::factorize(6), {0, 1, 1}), g6),
        PreconditionError);
    Modulus m5 = Modulus::factorize(5);
    Gap g5(m5, 1, {0}, {{1}}, {3});
    CHECK_THROWS_AS(poly_exp_sum_over_gap(PolynomialModQ(m5, {0, 1}), g5),
                    PreconditionError);  // degree 1
    CHECK_THROWS_AS(
        poly_exp_sum_over_gap(PolynomialModQ(m5, {0, 0, 0, 0, 0, 1}), g5),
        PreconditionError);  // degree 5 >= q
    CHECK_THROWS_AS(weil_complete_sum_check(
                        PolynomialModQ(Modulus::factorize(10007 * 2), {0, 1, 1})),
                    PreconditionError);
}

TEST_CASE("polynomial sum over a GAP respects its chain bound") {
    Modulus m = Modulus::factorize(29);
    SplitMix64 rng(33);
    for (int trial = 0; trial < 20; ++trial) {
        int d = 2 + static_cast<int>(rng.below(3));
        std::vector<std::int64_t> coeffs(d + 1);
        for (auto& c : coeffs) c = static_cast<std::int64_t>(rng.below(29));
        coeffs[d] = 1 + static_cast<std::int64_t>(rng.below(28));
        PolynomialModQ h(m, coeffs);
        Gap g = random_proper_gap(m, 1, 2, 2, 29, rng);
        SumReport rep = poly_exp_sum_over_gap(h, g);
        REQUIRE(rep.chain_bound.has_value());
        CHECK(rep.magnitude <= *rep.chain_bound + 1e-9);
        CHECK(rep.kind == "poly");
        // Cached linf path gives the identical report.
        double linf = poly_fourier_linf(h);
        SumReport cached = poly_exp_sum_over_gap(h, g, linf);
        CHECK(cached.magnitude == doctest::Approx(rep.magnitude));
        CHECK(*cached.chain_bound == doctest::Approx(*rep.chain_bound));
    }
}

TEST_CASE("multilinear sums separate over the Gauss sum in the Fourier domain") {
    for (std::uint64_t q : {5, 7}) {
        DirichletCharacter chi = first_primitive(q);
        cplx tau = gauss_sum(chi);
        DirichletCharacter bar = chi.conjugate();
        RootTable roots(q);
        for (std::int64_t b1 = 0; b1 < static_cast<std::int64_t>(q); ++b1) {
            for (std::int64_t b2 = 0; b2 < static_cast<std::int64_t>(q); ++b2) {
                cplx lhs{0.0, 0.0};
                for (std::int64_t a1 = 0; a1 < static_cast<std::int64_t>(q); ++a1)
                    for (std::int64_t a2 = 0; a2 < static_cast<std::int64_t>(q);
                         ++a2)
                        lhs += chi(a1 * a2) * roots(a1 * b1 + a2 * b2);
                CHECK(std::abs(lhs - tau * tau * bar(b1) * bar(b2)) < 1e-8);
            }
        }
    }
}

TEST_CASE("multilinear character sum over s = 2 GAPs") {
    Modulus m = Modulus::factorize(13);
    DirichletCharacter chi = first_primitive(13);
    SplitMix64 rng(34);
    for (int trial = 0; trial < 15; ++trial) {
        Gap g = random_proper_gap(m, 2, 2, 2, 13, rng);
        SumReport rep = multilinear_character_sum(chi, g);
        cplx direct{0.0, 0.0};
        for (const auto& a : distinct_elements(g))
            direct += chi(a[0] * a[1] % 13);
        CHECK(std::abs(rep.sum - direct) < 1e-10);
        REQUIRE(rep.chain_bound.has_value());
        CHECK(rep.magnitude <= *rep.chain_bound + 1e-9);
        CHECK(rep.shape_bound ==
              doctest::Approx(13.0 * std::pow(std::log(13.0), 2)));
    }
}

TEST_CASE("completion_bound formula") {
    Gap g(Modulus::factorize(7), 1, {0}, {{1}}, {3});
    CHECK(completion_bound(2.0, g) == doctest::Approx(2.0 * l1_norm(g) / 7.0));
    CHECK_THROWS_AS(completion_bound(-1.0, g), PreconditionError);
}
