#pragma once

#include <optional>
#include <vector>

#include "czcss/correlation.hpp"
#include "czcss/gbf.hpp"

namespace czcss {

/// Inputs of the generative constructions. The permutation
/// domain is op-specific: standard_gcp permutes all m variables, everything
/// else permutes {0..m-3}.
struct ConstructionParams {
    int q = 2;
    int m = 4;
    int n = 1;
    std::vector<int> pi;
    int c = 0;
    int c_prime = 0;
    int c_1 = 0;
    std::optional<std::vector<int>> linear_coeffs;
};

struct SequencePair {
    PhaseSequence first;
    PhaseSequence second;
    int claimed_N = 0;
    int claimed_Z = 0;

    bool operator==(const SequencePair&) const = default;
};

struct CodeFamily {
    std::vector<CodeSet> sets;
    int claimed_K = 0;
    int claimed_M = 0;
    int claimed_N = 0;
    int claimed_Z = 0;

    bool operator==(const CodeFamily&) const = default;
};

struct GcpWithMate {
    SequencePair pair;
    SequencePair mate;
};

/// Standard GCP plus complementary mate from the path-quadratic seed
///   g = (q/2) sum_i x_{pi(i)} x_{pi(i+1)} + sum_i c_i x_i + c:
/// pair = (Psi(g), Psi(g + (q/2) x_{pi(0)} + c')),
/// mate = (Psi(g + (q/2) x_{pi(m-1)}),
///         Psi(g + (q/2)(x_{pi(0)} + x_{pi(m-1)}) + c')).
/// Needs m >= 2, pi a permutation of {0..m-1}, linear_coeffs of length m
/// (defaults to zeros). Both pairs have length 2^m.
GcpWithMate standard_gcp(const ConstructionParams& params);

/// Path quadratic over m-2 variables with unit coefficients:
///   g = sum_{a=0}^{m-4} x_{pi(a)} x_{pi(a+1)}.
Gbf base_gbf_g(int q, int m, const std::vector<int>& pi);

/// Seed function over m variables,
///   G = (q/2)((1-x_{m-1}) x_{m-2} g + x_{m-1} (1-x_{m-2})(g + x_{pi(0)} + m-2)) + c,
/// with g from base_gbf_g and the constant m-2 reduced mod q.
Gbf seed_gbf_G(int q, int m, const std::vector<int>& pi, int c);

/// The cross Z-complementary pair
///   (Psi_L(G + (q/2) x_{m-1} x_{m-2}),
///    Psi_L(G + (q/2) x_{pi(m-3)}(x_{m-1} + x_{m-2}))),  L = 2^{m-2} - 1,
/// claimed as a (2^{m-1}+2, 2^{pi(m-3)}+1)-CZCP. Needs m >= 4 and pi a
/// permutation of {0..m-3}.
SequencePair czcp_pair(int q, int m, const std::vector<int>& pi, int c);

/// The complementary-mate pair: czcp_pair's functions offset by
/// (q/2) x_{m-2}. Same claimed parameters.
SequencePair czcp_mate_pair(int q, int m, const std::vector<int>& pi, int c);

/// The full family: for every t in {0,1}^n the set
///   S_t  = { Psi_L(G_d + (q/2) t.y) : d in {1,2}, y in {0,1}^n }
/// and its offset twin S'_t with the extra (q/2) x_{m-2} term. Sets are
/// ordered all S_t (t ascending) then all S'_t; within a set d=1 with y
/// ascending, then d=2 with y ascending. Claimed
/// (2^{n+1}, 2^{n+1}, 2^{m-1}+2, 2^{pi(m-3)}+1).
CodeFamily czcss_family(int q, int m, int n, const std::vector<int>& pi, int c);

struct TailWindowQuadruple {
    PhaseSequence p;
    PhaseSequence q_seq;
    PhaseSequence u;
    PhaseSequence v;
};

/// The four untruncated length-2^{m-2} sequences whose pairwise
/// cross-correlation sums vanish on the tail shift window
/// [2^{m-2} - 2^{pi(m-3)}, 2^{m-2} - 1]:
///   p = Psi((q/2) g),  q_seq = Psi((q/2)(g + x_{pi(0)} + x_{pi(m-3)} + c_1)),
///   u = Psi((q/2)(g + x_{pi(m-3)})),  v = Psi((q/2)(g + x_{pi(0)} + c_1)).
TailWindowQuadruple tail_window_quadruple(int q, int m, const std::vector<int>& pi, int c_1);

}  // namespace czcss
