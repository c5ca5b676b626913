#pragma once

#include <cstdint>
#include <vector>

#include "czcss/gbf.hpp"

namespace czcss {

/// Exact element of Z[w], w = exp(2*pi*i/q): counts[k] is the integer
/// coefficient of w^k. Zero tests reduce modulo the q-th cyclotomic
/// polynomial and never touch floating point.
class CyclotomicValue {
  public:
    explicit CyclotomicValue(int q);
    CyclotomicValue(int q, std::vector<std::int64_t> counts);

    int q() const { return q_; }
    const std::vector<std::int64_t>& counts() const { return counts_; }

    /// Adds delta * w^exponent; the exponent reduces mod q.
    void accumulate(long long exponent, std::int64_t delta = 1);

    CyclotomicValue& operator+=(const CyclotomicValue& other);
    friend CyclotomicValue operator+(CyclotomicValue lhs, const CyclotomicValue& rhs);

    /// Complex conjugate: counts index-negated mod q.
    CyclotomicValue conjugate() const;

    /// True iff the represented complex number is exactly zero.
    bool is_zero() const;

    /// |value| in floating point. Report rendering and cross-checks only,
    /// never used for pass/fail decisions.
    double magnitude() const;

    bool operator==(const CyclotomicValue&) const = default;

  private:
    int q_;
    std::vector<std::int64_t> counts_;
};

bool cyclotomic_is_zero(const CyclotomicValue& v);
double magnitude(const CyclotomicValue& v);

/// Phi_q(x) as ascending integer coefficients, computed by exact division of
/// x^q - 1 by the product of Phi_d over proper divisors d of q.
std::vector<std::int64_t> cyclotomic_poly(int q);

/// Aperiodic cross-correlation of c1 against c2 at shift tau:
///   sum_i w^{c1[i] - c2[i+tau]}    for 0 <= tau <= L-1,
///   sum_i w^{c1[i-tau] - c2[i]}    for -L+1 <= tau <= -1,
///   0                              for |tau| >= L.
CyclotomicValue accf(const PhaseSequence& c1, const PhaseSequence& c2, int tau);

/// Aperiodic autocorrelation: accf(c, c, tau).
CyclotomicValue aacf(const PhaseSequence& c, int tau);

/// One code: an ordered flock of equal-length sequences over one modulus.
using CodeSet = std::vector<PhaseSequence>;

/// sum_i A(set[i])(tau)
CyclotomicValue sum_aacf(const CodeSet& set, int tau);
/// sum_i C(set[i], set[i+1])(tau), cyclic: index M wraps to 0
CyclotomicValue sum_accf_adjacent(const CodeSet& set, int tau);
/// sum_i C(a[i], b[i])(tau)
CyclotomicValue sum_accf_pointwise(const CodeSet& a, const CodeSet& b, int tau);
/// sum_i C(a[i], b[i+1])(tau), second index cyclic
CyclotomicValue sum_accf_adjacent_cross(const CodeSet& a, const CodeSet& b, int tau);

/// Shift windows of a zero-correlation zone of width Z for length-N
/// sequences: front = {1..Z}, tail = {N-Z..N-1}.
struct ShiftWindow {
    int Z = 1;
    int N = 1;

    ShiftWindow(int zcz, int length);
    std::vector<int> front() const;
    std::vector<int> tail() const;
};

}  // namespace czcss
