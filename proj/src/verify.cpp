#include "czcss/verify.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace czcss {

namespace {

// Accumulates one property's shift tests. Definitions 3 and 4 quantify over
// |tau|, so by default every positive representative is tested at both signs;
// reports record the positive shift with the larger magnitude.
class PropertyProbe {
  public:
    PropertyProbe(std::string name, std::string window, bool both_signs, const ValueObserver& observer)
        : observer_(observer), both_signs_(both_signs) {
        result_.property = std::move(name);
        result_.window = std::move(window);
    }

    template <typename ValueFn>
    void test(int tau, const ValueFn& value, const std::string& context = "") {
        ++result_.shifts_tested;
        CyclotomicValue v = value(tau);
        if (observer_) observer_(v);
        bool bad = !v.is_zero();
        double mag = v.magnitude();
        if (both_signs_ && tau != 0) {
            CyclotomicValue w = value(-tau);
            if (observer_) observer_(w);
            if (!w.is_zero()) bad = true;
            mag = std::max(mag, w.magnitude());
        }
        if (bad) {
            result_.violations.push_back({tau, mag, context});
            result_.pass = false;
        }
    }

    PropertyResult finish() {
        result_.vacuous = result_.shifts_tested == 0;
        return std::move(result_);
    }

  private:
    PropertyResult result_;
    const ValueObserver& observer_;
    bool both_signs_;
};

void require_pair_shape(const SequencePair& pair) {
    if (pair.first.q != pair.second.q || pair.first.length() != pair.second.length())
        throw std::domain_error("sequence pair members differ in shape");
    if (pair.first.length() < 1) throw std::domain_error("sequence pair is empty");
}

void require_family_shape(const CodeFamily& family) {
    if (family.sets.empty()) throw std::domain_error("family is empty");
    const CodeSet& first = family.sets[0];
    if (first.empty()) throw std::domain_error("family contains an empty set");
    for (const CodeSet& set : family.sets) {
        if (set.size() != first.size()) throw std::domain_error("family sets differ in flock size");
        for (const PhaseSequence& s : set)
            if (s.q != first[0].q || s.length() != first[0].length())
                throw std::domain_error("family sequences differ in shape");
    }
}

std::string window_u1u2(int Z, int N) {
    std::ostringstream out;
    out << "|tau| in {1.." << Z << "} u {" << N - Z << ".." << N - 1 << "}";
    return out.str();
}

std::string window_u2(int Z, int N) {
    std::ostringstream out;
    out << "|tau| in {" << N - Z << ".." << N - 1 << "}";
    return out.str();
}

std::string set_context(std::size_t p) { return "set " + std::to_string(p); }

std::string pair_context(std::size_t p, std::size_t p2) {
    return "sets (" + std::to_string(p) + "," + std::to_string(p2) + ")";
}

PropertyResult probe_p1(const CodeFamily& family, const ShiftWindow& w, const ValueObserver& observer) {
    PropertyProbe probe("P1", window_u1u2(w.Z, w.N), true, observer);
    for (std::size_t p = 0; p < family.sets.size(); ++p) {
        const CodeSet& set = family.sets[p];
        for (int tau : w.front()) probe.test(tau, [&](int t) { return sum_aacf(set, t); }, set_context(p));
        for (int tau : w.tail()) probe.test(tau, [&](int t) { return sum_aacf(set, t); }, set_context(p));
    }
    return probe.finish();
}

PropertyResult probe_p3(const CodeFamily& family, const ShiftWindow& w, const ValueObserver& observer) {
    std::ostringstream win;
    win << "|tau| in {0} u {1.." << w.Z << "} u {" << w.N - w.Z << ".." << w.N - 1 << "}";
    PropertyProbe probe("P3", win.str(), true, observer);
    for (std::size_t p = 0; p < family.sets.size(); ++p) {
        for (std::size_t p2 = 0; p2 < family.sets.size(); ++p2) {
            if (p == p2) continue;
            const auto value = [&](int t) { return sum_accf_pointwise(family.sets[p], family.sets[p2], t); };
            probe.test(0, value, pair_context(p, p2));
            for (int tau : w.front()) probe.test(tau, value, pair_context(p, p2));
            for (int tau : w.tail()) probe.test(tau, value, pair_context(p, p2));
        }
    }
    return probe.finish();
}

}  // namespace

const PropertyResult* VerificationReport::find(const std::string& property) const {
    for (const PropertyResult& r : properties)
        if (r.property == property) return &r;
    return nullptr;
}

VerificationReport check_zcp(const SequencePair& pair, int Z, const ValueObserver& observer) {
    require_pair_shape(pair);
    const int N = pair.first.length();
    if (Z < 1 || Z > N) throw std::domain_error("check_zcp: need 1 <= Z <= N");

    VerificationReport report;
    report.subject = "pair";
    report.check = "zcp";
    report.N = N;
    report.Z = Z;

    std::ostringstream win;
    win << "0 < tau < " << Z;
    PropertyProbe probe("ZCP", win.str(), false, observer);
    for (int tau = 1; tau < Z; ++tau)
        probe.test(tau, [&](int t) { return aacf(pair.first, t) + aacf(pair.second, t); });
    report.properties.push_back(probe.finish());
    report.pass = report.properties[0].pass;
    report.gcp = report.pass && Z == N;
    return report;
}

VerificationReport check_czcp(const SequencePair& pair, int Z, const ValueObserver& observer) {
    require_pair_shape(pair);
    const int N = pair.first.length();
    if (Z < 1 || Z > N / 2) throw std::domain_error("check_czcp: need 1 <= Z <= N/2");

    VerificationReport report;
    report.subject = "pair";
    report.check = "czcp";
    report.N = N;
    report.Z = Z;
    report.czcz_ratio = static_cast<double>(Z) / (N / 2.0);

    const ShiftWindow w(Z, N);
    const auto aacs = [&](int t) { return aacf(pair.first, t) + aacf(pair.second, t); };
    const auto accs = [&](int t) {
        return accf(pair.first, pair.second, t) + accf(pair.second, pair.first, t);
    };

    PropertyProbe c1("C1", window_u1u2(Z, N), true, observer);
    for (int tau : w.front()) c1.test(tau, aacs);
    for (int tau : w.tail()) c1.test(tau, aacs);
    report.properties.push_back(c1.finish());

    PropertyProbe c2("C2", window_u2(Z, N), true, observer);
    for (int tau : w.tail()) c2.test(tau, accs);
    report.properties.push_back(c2.finish());

    report.pass = report.properties[0].pass && report.properties[1].pass;
    return report;
}

VerificationReport check_czcs(const CodeSet& set, int Z, const ValueObserver& observer) {
    if (set.empty()) throw std::domain_error("check_czcs: empty set");
    const int N = set[0].length();
    if (Z < 1 || Z > N) throw std::domain_error("check_czcs: need 1 <= Z <= N");

    VerificationReport report;
    report.subject = "set";
    report.check = "czcs";
    report.N = N;
    report.Z = Z;

    const ShiftWindow w(Z, N);
    PropertyProbe p1("P1", window_u1u2(Z, N), true, observer);
    for (int tau : w.front()) p1.test(tau, [&](int t) { return sum_aacf(set, t); });
    for (int tau : w.tail()) p1.test(tau, [&](int t) { return sum_aacf(set, t); });
    report.properties.push_back(p1.finish());

    PropertyProbe p2("P2", window_u2(Z, N), true, observer);
    for (int tau : w.tail()) p2.test(tau, [&](int t) { return sum_accf_adjacent(set, t); });
    report.properties.push_back(p2.finish());

    report.pass = report.properties[0].pass && report.properties[1].pass;
    return report;
}

VerificationReport check_szccs(const CodeFamily& family, int Z, const ValueObserver& observer) {
    require_family_shape(family);
    const int N = family.sets[0][0].length();
    if (Z < 1 || Z > N) throw std::domain_error("check_szccs: need 1 <= Z <= N");

    VerificationReport report;
    report.subject = "family";
    report.check = "szccs";
    report.N = N;
    report.Z = Z;

    const ShiftWindow w(Z, N);
    report.properties.push_back(probe_p1(family, w, observer));
    report.properties.push_back(probe_p3(family, w, observer));
    report.pass = report.properties[0].pass && report.properties[1].pass;
    return report;
}

VerificationReport check_czcss(const CodeFamily& family, int Z, const ValueObserver& observer) {
    require_family_shape(family);
    const int N = family.sets[0][0].length();
    if (Z < 1 || Z > N) throw std::domain_error("check_czcss: need 1 <= Z <= N");

    VerificationReport report;
    report.subject = "family";
    report.check = "czcss";
    report.N = N;
    report.Z = Z;

    const ShiftWindow w(Z, N);
    report.properties.push_back(probe_p1(family, w, observer));

    PropertyProbe p2("P2", window_u2(Z, N), true, observer);
    for (std::size_t p = 0; p < family.sets.size(); ++p)
        for (int tau : w.tail())
            p2.test(tau, [&](int t) { return sum_accf_adjacent(family.sets[p], t); }, set_context(p));
    report.properties.push_back(p2.finish());

    report.properties.push_back(probe_p3(family, w, observer));

    PropertyProbe p4("P4", window_u2(Z, N), true, observer);
    for (std::size_t p = 0; p < family.sets.size(); ++p)
        for (std::size_t p2i = 0; p2i < family.sets.size(); ++p2i) {
            if (p == p2i) continue;
            for (int tau : w.tail())
                p4.test(tau,
                        [&](int t) { return sum_accf_adjacent_cross(family.sets[p], family.sets[p2i], t); },
                        pair_context(p, p2i));
        }
    report.properties.push_back(p4.finish());

    report.pass = true;
    for (const PropertyResult& r : report.properties) report.pass = report.pass && r.pass;
    return report;
}

int max_czcz(const SequencePair& pair, const ValueObserver& observer) {
    require_pair_shape(pair);
    const int N = pair.first.length();
    int best = 0;
    for (int Z = 1; Z <= N / 2; ++Z)
        if (check_czcp(pair, Z, observer).pass) best = Z;
    return best;
}

VerificationReport check_complementary_mate(const SequencePair& ab, const SequencePair& cd,
                                            const ValueObserver& observer) {
    require_pair_shape(ab);
    require_pair_shape(cd);
    if (ab.first.q != cd.first.q || ab.first.length() != cd.first.length())
        throw std::domain_error("check_complementary_mate: pairs differ in shape");
    const int N = ab.first.length();

    VerificationReport report;
    report.subject = "pair-pair";
    report.check = "mate";
    report.N = N;
    report.Z = 0;

    PropertyProbe probe("MATE", "all tau", true, observer);
    for (int tau = 0; tau <= N - 1; ++tau)
        probe.test(tau, [&](int t) { return accf(ab.first, cd.first, t) + accf(ab.second, cd.second, t); });
    report.properties.push_back(probe.finish());
    report.pass = report.properties[0].pass;
    return report;
}

VerificationReport check_tail_window(int q, int m, const std::vector<int>& pi, int c_1,
                                const ValueObserver& observer) {
    return check_tail_window(tail_window_quadruple(q, m, pi, c_1), m, pi, observer);
}

VerificationReport check_tail_window(const TailWindowQuadruple& quad, int m, const std::vector<int>& pi,
                                const ValueObserver& observer) {
    if (m < 4 || static_cast<int>(pi.size()) != m - 2)
        throw std::domain_error("check_tail_window: bad m or permutation");
    const int lo = (1 << (m - 2)) - (1 << pi[m - 3]);
    const int hi = (1 << (m - 2)) - 1;

    VerificationReport report;
    report.subject = "quadruple";
    report.check = "quadruple";
    report.N = 1 << (m - 2);
    report.Z = 0;

    std::ostringstream win;
    win << lo << " <= tau <= " << hi;
    PropertyProbe probe("TW", win.str(), false, observer);
    for (int tau = lo; tau <= hi; ++tau)
        probe.test(tau, [&](int t) { return accf(quad.p, quad.q_seq, t) + accf(quad.u, quad.v, t); });
    report.properties.push_back(probe.finish());
    report.pass = report.properties[0].pass;
    return report;
}

VerificationReport check_mate_cross(const SequencePair& ab, const SequencePair& cd, int m,
                                    const std::vector<int>& pi, const ValueObserver& observer) {
    require_pair_shape(ab);
    require_pair_shape(cd);
    if (ab.first.q != cd.first.q || ab.first.length() != cd.first.length())
        throw std::domain_error("check_mate_cross: pairs differ in shape");
    if (m < 4 || static_cast<int>(pi.size()) != m - 2)
        throw std::domain_error("check_mate_cross: bad m or permutation");
    const int N = ab.first.length();
    if (N != (1 << (m - 1)) + 2)
        throw std::domain_error("check_mate_cross: pair length does not match m");

    VerificationReport report;
    report.subject = "pair-pair";
    report.check = "mate_cross";
    report.N = N;
    report.Z = 0;

    PropertyProbe mate_all("MATE", "all tau", true, observer);
    for (int tau = 0; tau <= N - 1; ++tau)
        mate_all.test(tau, [&](int t) { return accf(ab.first, cd.first, t) + accf(ab.second, cd.second, t); });
    report.properties.push_back(mate_all.finish());

    const int lo = (1 << (m - 1)) - (1 << pi[m - 3]);
    const int hi = (1 << (m - 1)) + 1;
    std::ostringstream win;
    win << lo << " < tau <= " << hi;
    PropertyProbe mate_swap("MATE_SWAP", win.str(), false, observer);
    for (int tau = lo + 1; tau <= hi; ++tau)
        mate_swap.test(tau, [&](int t) { return accf(ab.first, cd.second, t) + accf(ab.second, cd.first, t); });
    report.properties.push_back(mate_swap.finish());

    report.pass = report.properties[0].pass && report.properties[1].pass;
    return report;
}

}  // namespace czcss
