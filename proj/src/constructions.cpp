#include "czcss/constructions.hpp"

#include <bit>
#include <stdexcept>

namespace czcss {

namespace {

void require_permutation(const std::vector<int>& pi, int domain) {
    if (static_cast<int>(pi.size()) != domain)
        throw std::domain_error("permutation has wrong size");
    std::vector<bool> seen(domain, false);
    for (int v : pi) {
        if (v < 0 || v >= domain || seen[v]) throw std::domain_error("not a permutation");
        seen[v] = true;
    }
}

void require_even_q(int q) {
    if (q < 2 || q % 2 != 0) throw std::domain_error("modulus q must be even and >= 2");
}

}  // namespace

GcpWithMate standard_gcp(const ConstructionParams& params) {
    const int q = params.q;
    const int m = params.m;
    require_even_q(q);
    if (m < 2) throw std::domain_error("standard_gcp: m must be >= 2");
    require_permutation(params.pi, m);
    std::vector<int> coeffs = params.linear_coeffs.value_or(std::vector<int>(m, 0));
    if (static_cast<int>(coeffs.size()) != m)
        throw std::domain_error("standard_gcp: linear_coeffs must have length m");

    const int h = q / 2;
    Gbf g(q, m);
    for (int i = 0; i + 1 < m; ++i) g.add_term((1u << params.pi[i]) | (1u << params.pi[i + 1]), h);
    for (int i = 0; i < m; ++i) g.add_term(1u << i, coeffs[i]);
    g.add_term(0, params.c);

    const Gbf x_first = Gbf::monomial(q, m, {params.pi[0]}, h);
    const Gbf x_last = Gbf::monomial(q, m, {params.pi[m - 1]}, h);
    const Gbf cp = Gbf::constant(q, m, params.c_prime);

    GcpWithMate out;
    out.pair.first = g.project();
    out.pair.second = (g + x_first + cp).project();
    out.mate.first = (g + x_last).project();
    out.mate.second = (g + x_first + x_last + cp).project();
    out.pair.claimed_N = out.mate.claimed_N = 1 << m;
    out.pair.claimed_Z = out.mate.claimed_Z = 1 << m;
    return out;
}

Gbf base_gbf_g(int q, int m, const std::vector<int>& pi) {
    require_even_q(q);
    if (m < 4) throw std::domain_error("base_gbf_g: m must be >= 4");
    require_permutation(pi, m - 2);
    Gbf g(q, m - 2);
    for (int a = 0; a + 3 <= m - 1; ++a) g.add_term((1u << pi[a]) | (1u << pi[a + 1]), 1);
    return g;
}

Gbf seed_gbf_G(int q, int m, const std::vector<int>& pi, int c) {
    const Gbf g = base_gbf_g(q, m, pi).with_vars(m);
    const Gbf one = Gbf::constant(q, m, 1);
    const Gbf x_m1 = Gbf::monomial(q, m, {m - 1});
    const Gbf x_m2 = Gbf::monomial(q, m, {m - 2});
    const Gbf inner = g + Gbf::monomial(q, m, {pi[0]}) + Gbf::constant(q, m, m - 2);
    return ((one - x_m1) * x_m2 * g + x_m1 * (one - x_m2) * inner).scaled(q / 2) +
           Gbf::constant(q, m, c);
}

namespace {

// G_1 = G + (q/2) x_{m-1} x_{m-2},  G_2 = G + (q/2) x_{pi(m-3)}(x_{m-1} + x_{m-2})
std::pair<Gbf, Gbf> seed_pair(int q, int m, const std::vector<int>& pi, int c) {
    const Gbf G = seed_gbf_G(q, m, pi, c);
    const int h = q / 2;
    Gbf g1 = G;
    g1.add_term((1u << (m - 1)) | (1u << (m - 2)), h);
    Gbf g2 = G;
    g2.add_term((1u << pi[m - 3]) | (1u << (m - 1)), h);
    g2.add_term((1u << pi[m - 3]) | (1u << (m - 2)), h);
    return {g1, g2};
}

SequencePair truncated_pair(const Gbf& g1, const Gbf& g2, int m, const std::vector<int>& pi) {
    const int L = (1 << (m - 2)) - 1;
    SequencePair pair;
    pair.first = g1.project_truncated(L);
    pair.second = g2.project_truncated(L);
    pair.claimed_N = (1 << (m - 1)) + 2;
    pair.claimed_Z = (1 << pi[m - 3]) + 1;
    return pair;
}

}  // namespace

SequencePair czcp_pair(int q, int m, const std::vector<int>& pi, int c) {
    auto [g1, g2] = seed_pair(q, m, pi, c);
    return truncated_pair(g1, g2, m, pi);
}

SequencePair czcp_mate_pair(int q, int m, const std::vector<int>& pi, int c) {
    auto [g1, g2] = seed_pair(q, m, pi, c);
    const Gbf offset = Gbf::monomial(q, m, {m - 2}, q / 2);
    return truncated_pair(g1 + offset, g2 + offset, m, pi);
}

CodeFamily czcss_family(int q, int m, int n, const std::vector<int>& pi, int c) {
    if (n < 1 || n > 20) throw std::domain_error("czcss_family: n out of range");
    auto [g1, g2] = seed_pair(q, m, pi, c);
    const Gbf offset = Gbf::monomial(q, m, {m - 2}, q / 2);
    const int L = (1 << (m - 2)) - 1;
    const int h = q / 2;
    const int count = 1 << n;

    CodeFamily family;
    family.claimed_K = 2 * count;
    family.claimed_M = 2 * count;
    family.claimed_N = (1 << (m - 1)) + 2;
    family.claimed_Z = (1 << pi[m - 3]) + 1;
    family.sets.reserve(2 * count);

    for (int prime = 0; prime < 2; ++prime) {
        for (int t = 0; t < count; ++t) {
            CodeSet set;
            set.reserve(2 * count);
            for (const Gbf* gd : {&g1, &g2}) {
                for (int y = 0; y < count; ++y) {
                    const int dot = std::popcount(static_cast<unsigned>(t & y));
                    Gbf f = *gd;
                    f.add_term(0, static_cast<long long>(h) * dot);
                    if (prime) f = f + offset;
                    set.push_back(f.project_truncated(L));
                }
            }
            family.sets.push_back(std::move(set));
        }
    }
    return family;
}

TailWindowQuadruple tail_window_quadruple(int q, int m, const std::vector<int>& pi, int c_1) {
    const Gbf g = base_gbf_g(q, m, pi);
    const int v = m - 2;
    const Gbf x_first = Gbf::monomial(q, v, {pi[0]});
    const Gbf x_last = Gbf::monomial(q, v, {pi[m - 3]});
    const Gbf c1 = Gbf::constant(q, v, c_1);
    const int h = q / 2;

    TailWindowQuadruple out;
    out.p = g.scaled(h).project();
    out.q_seq = (g + x_first + x_last + c1).scaled(h).project();
    out.u = (g + x_last).scaled(h).project();
    out.v = (g + x_first + c1).scaled(h).project();
    return out;
}

}  // namespace czcss
