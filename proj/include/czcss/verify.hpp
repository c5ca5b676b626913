#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "czcss/constructions.hpp"
#include "czcss/correlation.hpp"

namespace czcss {

/// Callback invoked with every correlation sum a checker decides on.
/// Used by tests to cross-check the exact zero test against floating point.
using ValueObserver = std::function<void(const CyclotomicValue&)>;

struct ShiftViolation {
    int tau = 0;             // positive representative of the violating shift
    double magnitude = 0.0;  // float rendering of the exact nonzero value
    std::string context;     // which set / set pair, empty for plain pairs
};

struct PropertyResult {
    std::string property;  // "ZCP", "C1", "C2", "P1".."P4", "MATE", "MATE_SWAP", "TW"
    std::string window;    // human-readable description of the shift window
    int shifts_tested = 0;
    std::vector<ShiftViolation> violations;
    bool vacuous = false;  // window (or pair enumeration) was empty
    bool pass = true;

    bool operator==(const PropertyResult&) const = default;
};

struct VerificationReport {
    std::string subject;  // "pair", "set", "family", "quadruple", "pair-pair"
    std::string check;    // "zcp", "czcp", "czcs", "szccs", "czcss", "quadruple", "mate_cross"
    int N = 0;
    int Z = 0;
    std::vector<PropertyResult> properties;
    bool pass = true;
    bool gcp = false;  // set by check_zcp when the zone spans every shift
    std::optional<int> max_z;
    std::optional<double> czcz_ratio;

    const PropertyResult* find(const std::string& property) const;
};

/// Def. of a ZCP: A(c)(tau) + A(d)(tau) = 0 for all 0 < tau < Z. Flags the
/// pair as a GCP when the check passes with Z = N.
VerificationReport check_zcp(const SequencePair& pair, int Z, const ValueObserver& observer = {});

/// CZCP conditions, both exact:
///   C1: AACS zero for |tau| in {1..Z} u {N-Z..N-1},
///   C2: C(c,d)(tau) + C(d,c)(tau) = 0 for |tau| in {N-Z..N-1}.
/// Requires 1 <= Z <= N/2.
VerificationReport check_czcp(const SequencePair& pair, int Z, const ValueObserver& observer = {});

/// Single-set properties P1 (AACS sum) and cyclic-adjacent P2.
VerificationReport check_czcs(const CodeSet& set, int Z, const ValueObserver& observer = {});

/// Family properties P1 and pointwise cross-set P3 (window {0} u U1 u U2).
VerificationReport check_szccs(const CodeFamily& family, int Z, const ValueObserver& observer = {});

/// Full family battery P1-P4 over all ordered set pairs p != p'.
VerificationReport check_czcss(const CodeFamily& family, int Z, const ValueObserver& observer = {});

/// Largest Z in [1, N/2] for which check_czcp passes; 0 if none.
int max_czcz(const SequencePair& pair, const ValueObserver& observer = {});

/// Complementary-mate test: C(a,c)(tau) + C(b,d)(tau) = 0 for every tau,
/// where (a,b) is the first pair and (c,d) the candidate mate.
VerificationReport check_complementary_mate(const SequencePair& ab, const SequencePair& cd,
                                            const ValueObserver& observer = {});

/// Rebuilds the tail_window_quadruple for the given parameters and checks
/// C(p,q)(tau) + C(u,v)(tau) = 0 on [2^{m-2} - 2^{pi(m-3)}, 2^{m-2} - 1].
VerificationReport check_tail_window(int q, int m, const std::vector<int>& pi, int c_1,
                                const ValueObserver& observer = {});

/// Same window check on an existing quadruple, e.g. one read back from disk.
VerificationReport check_tail_window(const TailWindowQuadruple& quad, int m, const std::vector<int>& pi,
                                const ValueObserver& observer = {});

/// Mate properties of the constructed pairs (a,b) and (c,d):
///   MATE: C(a,c)(tau) + C(b,d)(tau) = 0 for every tau,
///   MATE_SWAP: C(a,d)(tau) + C(b,c)(tau) = 0 for
///         2^{m-1} - 2^{pi(m-3)} < tau <= 2^{m-1} + 1.
VerificationReport check_mate_cross(const SequencePair& ab, const SequencePair& cd, int m,
                                    const std::vector<int>& pi, const ValueObserver& observer = {});

}  // namespace czcss
