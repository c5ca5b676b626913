#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace czcss {

/// A length-N sequence of phases over Z_q, i.e. the sequence
/// (w^{phases[0]}, ..., w^{phases[N-1]}) with w = exp(2*pi*i/q).
/// Phases are stored as residues in [0, q); complex values never appear here.
struct PhaseSequence {
    int q = 2;
    std::vector<int> phases;

    int length() const { return static_cast<int>(phases.size()); }
    bool operator==(const PhaseSequence&) const = default;
};

/// Binary vector, LSB first: bits[j] is the j-th binary digit of the
/// represented integer, so i = sum_j bits[j] * 2^j.
using BitVector = std::vector<std::uint8_t>;

BitVector bit_vector(std::uint64_t i, int width);
std::uint64_t bit_vector_to_int(const BitVector& bits);

/// Generalized Boolean function f : {0,1}^v -> Z_q, stored as a sparse map
/// from monomials (variable-subset bitmasks) to coefficients in [0, q).
/// The empty mask is the constant term. q must be even and >= 2.
class Gbf {
  public:
    Gbf(int q, int num_vars);

    static Gbf monomial(int q, int num_vars, const std::vector<int>& vars, int coeff = 1);
    static Gbf constant(int q, int num_vars, int value);

    int q() const { return q_; }
    int num_vars() const { return num_vars_; }
    const std::map<std::uint32_t, int>& terms() const { return terms_; }

    /// f(s_i) where s_i is the LSB-first binary vector of i, 0 <= i < 2^v.
    int evaluate(std::uint64_t i) const;

    /// Psi(f): the full length-2^v phase sequence.
    PhaseSequence project() const;

    /// Psi_L(f): project() with the first L and last L entries removed.
    /// Requires 0 <= L < 2^{v-1} so the result is nonempty.
    PhaseSequence project_truncated(int L) const;

    /// Same terms viewed over a wider variable space.
    Gbf with_vars(int num_vars) const;

    /// Adds coeff to the monomial given by mask; coefficients reduce mod q,
    /// zero coefficients are dropped.
    Gbf& add_term(std::uint32_t mask, long long coeff);

    Gbf scaled(long long k) const;

    friend Gbf operator+(const Gbf& f, const Gbf& g);
    friend Gbf operator-(const Gbf& f, const Gbf& g);
    /// Product of functions on {0,1}^v; uses x*x = x, so monomial masks union.
    friend Gbf operator*(const Gbf& f, const Gbf& g);

    bool operator==(const Gbf&) const = default;

    /// Canonical textual form, e.g. "2*x0*x1 + 2*x0*x2 + 1".
    std::string to_string() const;

  private:
    int q_;
    int num_vars_;
    std::map<std::uint32_t, int> terms_;
};

/// Parses the textual form accepted by the CLI: a '+'/'-' separated sum of
/// terms, each a '*'-separated product of an optional integer coefficient
/// and variables "x<k>" with k < num_vars. Examples: "2*x1*x0 + 2*x0*x2 + 1",
/// "x0*x1 - x2 + 3". Coefficients reduce mod q.
Gbf parse_gbf(const std::string& text, int q, int num_vars);

}  // namespace czcss
