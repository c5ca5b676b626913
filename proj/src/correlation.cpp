#include "czcss/correlation.hpp"

#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <stdexcept>

namespace czcss {

namespace {

constexpr int kMaxCyclotomicOrder = 512;

// Exact quotient of monic-divisor polynomial division over Z; the divisor
// must divide the numerator exactly.
std::vector<std::int64_t> divide_exact(std::vector<std::int64_t> num, const std::vector<std::int64_t>& den) {
    const int dn = static_cast<int>(num.size()) - 1;
    const int dd = static_cast<int>(den.size()) - 1;
    if (den.back() != 1) throw std::logic_error("divide_exact: divisor not monic");
    std::vector<std::int64_t> quot(dn - dd + 1, 0);
    for (int k = dn - dd; k >= 0; --k) {
        const std::int64_t coef = num[k + dd];
        quot[k] = coef;
        if (coef == 0) continue;
        for (int j = 0; j <= dd; ++j) num[k + j] -= coef * den[j];
    }
    for (std::int64_t c : num)
        if (c != 0) throw std::logic_error("divide_exact: nonzero remainder");
    return quot;
}

}  // namespace

std::vector<std::int64_t> cyclotomic_poly(int q) {
    if (q < 1 || q > kMaxCyclotomicOrder) throw std::domain_error("cyclotomic_poly: order out of range");
    if (q == 1) return {-1, 1};
    // x^q - 1
    std::vector<std::int64_t> num(q + 1, 0);
    num[0] = -1;
    num[q] = 1;
    for (int d = 1; d < q; ++d) {
        if (q % d != 0) continue;
        num = divide_exact(std::move(num), cyclotomic_poly(d));
    }
    return num;
}

CyclotomicValue::CyclotomicValue(int q) : q_(q), counts_(q, 0) {
    if (q < 1 || q > kMaxCyclotomicOrder) throw std::domain_error("CyclotomicValue: q out of range");
}

CyclotomicValue::CyclotomicValue(int q, std::vector<std::int64_t> counts) : q_(q), counts_(std::move(counts)) {
    if (q < 1 || q > kMaxCyclotomicOrder) throw std::domain_error("CyclotomicValue: q out of range");
    if (counts_.size() != static_cast<std::size_t>(q))
        throw std::domain_error("CyclotomicValue: counts length must equal q");
}

void CyclotomicValue::accumulate(long long exponent, std::int64_t delta) {
    long long e = exponent % q_;
    if (e < 0) e += q_;
    counts_[static_cast<std::size_t>(e)] += delta;
}

CyclotomicValue& CyclotomicValue::operator+=(const CyclotomicValue& other) {
    if (q_ != other.q_) throw std::domain_error("CyclotomicValue: mixed moduli");
    for (int k = 0; k < q_; ++k) counts_[k] += other.counts_[k];
    return *this;
}

CyclotomicValue operator+(CyclotomicValue lhs, const CyclotomicValue& rhs) {
    lhs += rhs;
    return lhs;
}

CyclotomicValue CyclotomicValue::conjugate() const {
    CyclotomicValue r(q_);
    for (int k = 0; k < q_; ++k) r.counts_[(q_ - k) % q_] = counts_[k];
    return r;
}

namespace {

const std::vector<std::int64_t>& cached_cyclotomic(int q) {
    thread_local std::map<int, std::vector<std::int64_t>> cache;
    auto it = cache.find(q);
    if (it == cache.end()) it = cache.emplace(q, cyclotomic_poly(q)).first;
    return it->second;
}

}  // namespace

bool CyclotomicValue::is_zero() const {
    // The value vanishes iff Phi_q divides sum_k counts[k] x^k over Z.
    const std::vector<std::int64_t>& phi = cached_cyclotomic(q_);
    const int dd = static_cast<int>(phi.size()) - 1;
    std::vector<std::int64_t> rem = counts_;
    for (int k = q_ - 1 - dd; k >= 0; --k) {
        const std::int64_t coef = rem[k + dd];
        if (coef == 0) continue;
        for (int j = 0; j <= dd; ++j) rem[k + j] -= coef * phi[j];
    }
    for (std::int64_t c : rem)
        if (c != 0) return false;
    return true;
}

double CyclotomicValue::magnitude() const {
    std::complex<double> acc{0.0, 0.0};
    for (int k = 0; k < q_; ++k) {
        if (counts_[k] == 0) continue;
        const double angle = 2.0 * std::numbers::pi * k / q_;
        acc += static_cast<double>(counts_[k]) * std::complex<double>{std::cos(angle), std::sin(angle)};
    }
    return std::abs(acc);
}

bool cyclotomic_is_zero(const CyclotomicValue& v) { return v.is_zero(); }

double magnitude(const CyclotomicValue& v) { return v.magnitude(); }

CyclotomicValue accf(const PhaseSequence& c1, const PhaseSequence& c2, int tau) {
    if (c1.q != c2.q) throw std::domain_error("accf: sequences differ in modulus");
    if (c1.length() != c2.length()) throw std::domain_error("accf: sequences differ in length");
    const int L = c1.length();
    CyclotomicValue v(c1.q);
    if (tau >= L || tau <= -L) return v;
    if (tau >= 0) {
        for (int i = 0; i < L - tau; ++i) v.accumulate(c1.phases[i] - c2.phases[i + tau]);
    } else {
        for (int i = 0; i < L + tau; ++i) v.accumulate(c1.phases[i - tau] - c2.phases[i]);
    }
    return v;
}

CyclotomicValue aacf(const PhaseSequence& c, int tau) { return accf(c, c, tau); }

namespace {

void require_uniform(const CodeSet& set) {
    if (set.empty()) throw std::domain_error("code set is empty");
    for (const auto& s : set)
        if (s.q != set[0].q || s.length() != set[0].length())
            throw std::domain_error("code set sequences differ in shape");
}

void require_uniform(const CodeSet& a, const CodeSet& b) {
    require_uniform(a);
    require_uniform(b);
    if (a.size() != b.size() || a[0].q != b[0].q || a[0].length() != b[0].length())
        throw std::domain_error("code sets differ in shape");
}

}  // namespace

CyclotomicValue sum_aacf(const CodeSet& set, int tau) {
    require_uniform(set);
    CyclotomicValue v(set[0].q);
    for (const auto& s : set) v += aacf(s, tau);
    return v;
}

CyclotomicValue sum_accf_adjacent(const CodeSet& set, int tau) {
    require_uniform(set);
    CyclotomicValue v(set[0].q);
    const std::size_t m = set.size();
    for (std::size_t i = 0; i < m; ++i) v += accf(set[i], set[(i + 1) % m], tau);
    return v;
}

CyclotomicValue sum_accf_pointwise(const CodeSet& a, const CodeSet& b, int tau) {
    require_uniform(a, b);
    CyclotomicValue v(a[0].q);
    for (std::size_t i = 0; i < a.size(); ++i) v += accf(a[i], b[i], tau);
    return v;
}

CyclotomicValue sum_accf_adjacent_cross(const CodeSet& a, const CodeSet& b, int tau) {
    require_uniform(a, b);
    CyclotomicValue v(a[0].q);
    const std::size_t m = a.size();
    for (std::size_t i = 0; i < m; ++i) v += accf(a[i], b[(i + 1) % m], tau);
    return v;
}

ShiftWindow::ShiftWindow(int zcz, int length) : Z(zcz), N(length) {
    if (N < 1 || Z < 1 || Z > N) throw std::domain_error("ShiftWindow: need 1 <= Z <= N");
}

std::vector<int> ShiftWindow::front() const {
    std::vector<int> w;
    for (int t = 1; t <= Z; ++t) w.push_back(t);
    return w;
}

std::vector<int> ShiftWindow::tail() const {
    std::vector<int> w;
    for (int t = N - Z; t <= N - 1; ++t) w.push_back(t);
    return w;
}

}  // namespace czcss
