#include <stdexcept>
#include <cmath>
#include <complex>
#include <numbers>
#include <numeric>
#include <random>

#include "czcss/constructions.hpp"
#include "czcss/correlation.hpp"
#include "doctest.h"
#include "example1_fixture.hpp"

using namespace czcss;

namespace {

PhaseSequence random_sequence(std::mt19937& rng, int q, int len) {
    PhaseSequence s;
    s.q = q;
    std::uniform_int_distribution<int> phase(0, q - 1);
    for (int i = 0; i < len; ++i) s.phases.push_back(phase(rng));
    return s;
}

// Straight complex-arithmetic evaluation of the correlation definition,
// independent of the counting implementation.
std::complex<double> accf_complex(const PhaseSequence& c1, const PhaseSequence& c2, int tau) {
    const int L = c1.length();
    const auto w = [&](int e) {
        const double angle = 2.0 * std::numbers::pi * e / c1.q;
        return std::complex<double>{std::cos(angle), std::sin(angle)};
    };
    std::complex<double> acc{0, 0};
    if (tau >= 0) {
        for (int i = 0; i + tau < L; ++i) acc += w(c1.phases[i] - c2.phases[i + tau]);
    } else {
        for (int i = 0; i + (-tau) < L; ++i) acc += w(c1.phases[i - tau] - c2.phases[i]);
    }
    return acc;
}

}  // namespace

TEST_CASE("accf basic values and branches") {
    const PhaseSequence zeros{4, {0, 0, 0, 0}};
    const CyclotomicValue v = accf(zeros, zeros, 1);
    CHECK(v.counts() == std::vector<std::int64_t>{3, 0, 0, 0});

    CHECK(accf(zeros, zeros, 4).is_zero());   // |tau| >= L branch
    CHECK(accf(zeros, zeros, -4).is_zero());
    CHECK(accf(zeros, zeros, 99).is_zero());

    CHECK_THROWS_AS(accf(zeros, PhaseSequence{4, {0, 0}}, 0), std::domain_error);
    CHECK_THROWS_AS(accf(zeros, PhaseSequence{2, {0, 0, 0, 0}}, 0), std::domain_error);
}

TEST_CASE("aacf at zero shift is L and symmetric under conjugation") {
    std::mt19937 rng(42);
    for (int round = 0; round < 40; ++round) {
        const int q = 2 * (1 + rng() % 4);
        const int L = 2 + static_cast<int>(rng() % 30);
        const PhaseSequence c = random_sequence(rng, q, L);
        const CyclotomicValue at0 = aacf(c, 0);
        std::int64_t total = 0;
        for (std::int64_t k : at0.counts()) total += k;
        CHECK(total == L);
        CHECK(at0.magnitude() == doctest::Approx(L));
        for (int tau = -L; tau <= L; ++tau) CHECK(aacf(c, tau) == aacf(c, -tau).conjugate());
    }
}

TEST_CASE("negative-shift branch mirrors the transposed positive shift") {
    std::mt19937 rng(43);
    for (int round = 0; round < 40; ++round) {
        const int q = 2 * (1 + rng() % 4);
        const int L = 2 + static_cast<int>(rng() % 20);
        const PhaseSequence c1 = random_sequence(rng, q, L);
        const PhaseSequence c2 = random_sequence(rng, q, L);
        for (int tau = 0; tau <= L; ++tau)
            CHECK(accf(c1, c2, -tau) == accf(c2, c1, tau).conjugate());
    }
}

TEST_CASE("counting implementation agrees with complex evaluation") {
    std::mt19937 rng(44);
    for (int round = 0; round < 30; ++round) {
        const int q = 2 * (1 + rng() % 5);
        const int L = 1 + static_cast<int>(rng() % 24);
        const PhaseSequence c1 = random_sequence(rng, q, L);
        const PhaseSequence c2 = random_sequence(rng, q, L);
        for (int tau = -L + 1; tau < L; ++tau) {
            const CyclotomicValue v = accf(c1, c2, tau);
            const std::complex<double> z = accf_complex(c1, c2, tau);
            CHECK(v.magnitude() == doctest::Approx(std::abs(z)).epsilon(1e-9));
        }
    }
}

TEST_CASE("windowed accumulation equals the direct double loop") {
    // Correlation over a split index range must add up to the full sum.
    std::mt19937 rng(45);
    for (int round = 0; round < 20; ++round) {
        const int q = 4;
        const int L = 8 + static_cast<int>(rng() % 16);
        const PhaseSequence c1 = random_sequence(rng, q, L);
        const PhaseSequence c2 = random_sequence(rng, q, L);
        for (int tau = 0; tau < L; ++tau) {
            const int span = L - tau;
            const int cut = span / 2;
            CyclotomicValue partial(q);
            for (int i = 0; i < cut; ++i) partial.accumulate(c1.phases[i] - c2.phases[i + tau]);
            for (int i = cut; i < span; ++i) partial.accumulate(c1.phases[i] - c2.phases[i + tau]);
            CHECK(partial == accf(c1, c2, tau));
        }
    }
}

TEST_CASE("golden magnitude listing of the worked example") {
    const SequencePair ab = czcp_pair(4, 5, example1::kPi, 0);
    const SequencePair cd = czcp_mate_pair(4, 5, example1::kPi, 0);
    for (int k = 0; k < 35; ++k) {
        const int tau = 17 - k;  // golden axis runs high-to-low
        const CyclotomicValue v = accf(ab.first, cd.second, tau) + accf(ab.second, cd.first, tau);
        // q=4 values are Gaussian integers, so |v|^2 is exactly computable.
        const std::int64_t re = v.counts()[0] - v.counts()[2];
        const std::int64_t im = v.counts()[1] - v.counts()[3];
        const std::int64_t want = example1::kMag[k];
        CHECK(re * re + im * im == want * want);
        CHECK(v.magnitude() == doctest::Approx(want).epsilon(1e-9));
    }
}

TEST_CASE("aacs profile of the worked example") {
    // The zone windows {1..5} and {13..17} are inside the zero set, which
    // actually stretches to shift 8; the hump sits at shifts 9..12.
    const SequencePair ab = czcp_pair(4, 5, example1::kPi, 0);
    for (int tau = 1; tau <= 17; ++tau) {
        const bool zero_expected = tau <= 8 || tau >= 13;
        const CyclotomicValue v = aacf(ab.first, tau) + aacf(ab.second, tau);
        CHECK(v.is_zero() == zero_expected);
    }
}

TEST_CASE("set-level sums") {
    std::mt19937 rng(46);
    const PhaseSequence c = random_sequence(rng, 4, 12);
    const CodeSet singleton{c};
    for (int tau = -12; tau <= 12; ++tau) {
        CHECK(sum_aacf(singleton, tau) == aacf(c, tau));
        CHECK(sum_accf_adjacent(singleton, tau) == aacf(c, tau));  // wraps to itself
    }
    CHECK_THROWS_AS(sum_aacf(CodeSet{}, 0), std::domain_error);
    CHECK_THROWS_AS(sum_aacf(CodeSet{c, random_sequence(rng, 4, 5)}, 0), std::domain_error);

    // Definition of the cyclic adjacency: index M wraps to 0.
    const CodeSet three{random_sequence(rng, 4, 9), random_sequence(rng, 4, 9),
                        random_sequence(rng, 4, 9)};
    for (int tau = -8; tau <= 8; ++tau) {
        CyclotomicValue direct =
            accf(three[0], three[1], tau) + accf(three[1], three[2], tau) + accf(three[2], three[0], tau);
        CHECK(direct == sum_accf_adjacent(three, tau));
    }
}

TEST_CASE("family sums of the worked family vanish as claimed") {
    const CodeFamily family = czcss_family(4, 5, 2, example1::kPi, 0);
    const int N = 18, Z = 5;
    for (int tau = 1; tau <= Z; ++tau) {
        CHECK(sum_aacf(family.sets[3], tau).is_zero());
        CHECK(sum_aacf(family.sets[3], N - tau).is_zero());
    }
    // Cross-set pointwise sums vanish at every shift, not just in the zone.
    for (std::size_t p = 0; p < family.sets.size(); ++p)
        for (std::size_t p2 = 0; p2 < family.sets.size(); ++p2) {
            if (p == p2) continue;
            for (int tau = -N; tau <= N; ++tau)
                CHECK(sum_accf_pointwise(family.sets[p], family.sets[p2], tau).is_zero());
        }
}

TEST_CASE("cyclotomic polynomials") {
    using P = std::vector<std::int64_t>;
    CHECK(cyclotomic_poly(1) == P{-1, 1});
    CHECK(cyclotomic_poly(2) == P{1, 1});
    CHECK(cyclotomic_poly(3) == P{1, 1, 1});
    CHECK(cyclotomic_poly(4) == P{1, 0, 1});
    CHECK(cyclotomic_poly(6) == P{1, -1, 1});
    CHECK(cyclotomic_poly(8) == P{1, 0, 0, 0, 1});
    CHECK(cyclotomic_poly(12) == P{1, 0, -1, 0, 1});
    CHECK_THROWS_AS(cyclotomic_poly(0), std::domain_error);

    // Phi_q annihilates exactly the primitive q-th roots of unity.
    for (int q = 1; q <= 24; ++q) {
        const P phi = cyclotomic_poly(q);
        int degree = 0;
        for (int k = 1; k <= q; ++k)
            if (std::gcd(k, q) == 1) ++degree;
        CHECK(static_cast<int>(phi.size()) - 1 == degree);
        for (int k = 1; k <= q; ++k) {
            std::complex<double> x = std::polar(1.0, 2.0 * std::numbers::pi * k / q);
            std::complex<double> acc{0, 0}, pw{1, 0};
            for (std::int64_t coeff : phi) {
                acc += static_cast<double>(coeff) * pw;
                pw *= x;
            }
            if (std::gcd(k, q) == 1)
                CHECK(std::abs(acc) < 1e-9);
            else
                CHECK(std::abs(acc) > 1e-6);
        }
    }
}

TEST_CASE("exact zero test") {
    CHECK(CyclotomicValue(4).is_zero());
    CHECK(CyclotomicValue(4, {1, 0, 1, 0}).is_zero());       // 1 + w^2 = 0
    CHECK_FALSE(CyclotomicValue(4, {1, 1, 0, 0}).is_zero()); // 1 + i
    CHECK(CyclotomicValue(6, {1, 0, 1, 0, 1, 0}).is_zero()); // 1 + w^2 + w^4 = 0
    CHECK(CyclotomicValue(2, {5, 5}).is_zero());
    CHECK_FALSE(CyclotomicValue(2, {5, 4}).is_zero());
    CHECK(cyclotomic_is_zero(CyclotomicValue(8, {2, 0, 0, 0, 2, 0, 0, 0})));
    CHECK_THROWS_AS(CyclotomicValue(4, {1, 0}), std::domain_error);
}

TEST_CASE("exact zero test agrees with float magnitude") {
    std::mt19937 rng(47);
    std::uniform_int_distribution<int> small(-6, 6);
    for (int q : {2, 4, 6, 8, 10, 12, 16}) {
        for (int round = 0; round < 60; ++round) {
            CyclotomicValue v(q);
            if (round % 2 == 0) {
                // Random combination of w^j (1 + w^{q/2}) terms: exactly zero.
                for (int j = 0; j < q; ++j) {
                    const int r = small(rng);
                    v.accumulate(j, r);
                    v.accumulate(j + q / 2, r);
                }
            } else {
                for (int j = 0; j < q; ++j) v.accumulate(j, small(rng));
            }
            CHECK(v.is_zero() == (v.magnitude() < 1e-9));
        }
    }
}

TEST_CASE("magnitude renders counts in floating point") {
    CHECK(CyclotomicValue(4).magnitude() == 0.0);
    CHECK(CyclotomicValue(4, {2, 0, 0, 0}).magnitude() == doctest::Approx(2.0));
    CHECK(magnitude(CyclotomicValue(4, {0, 3, 0, 0})) == doctest::Approx(3.0));
}

TEST_CASE("shift windows") {
    const ShiftWindow w(5, 18);
    CHECK(w.front() == std::vector<int>{1, 2, 3, 4, 5});
    CHECK(w.tail() == std::vector<int>{13, 14, 15, 16, 17});
    CHECK_THROWS_AS(ShiftWindow(0, 18), std::domain_error);
    CHECK_THROWS_AS(ShiftWindow(19, 18), std::domain_error);

    const ShiftWindow full(4, 4);
    CHECK(full.front() == std::vector<int>{1, 2, 3, 4});
    CHECK(full.tail() == std::vector<int>{0, 1, 2, 3});
}
