// Command line front end: construct GCP/CZCP/CZCSS artifacts, verify the
// defining correlation properties of sequence files, reproduce the two
// worked examples, sweep parameter grids, and export correlation tables.
//
// Exit codes: 0 = pass, 1 = verification failure / fixture mismatch,
// 2 = usage or input error.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "czcss/constructions.hpp"
#include "czcss/io.hpp"
#include "czcss/verify.hpp"

namespace {

using namespace czcss;

// Example 1 of the construction (q=4, m=5, pi=(1,0,2), c=0), as listed.
const std::vector<int> kExample1A{0, 0, 0, 0, 2, 0, 2, 0, 0, 2, 2, 0, 2, 2, 0, 0, 0, 2};
const std::vector<int> kExample1B{0, 0, 0, 0, 2, 2, 0, 2, 2, 2, 2, 0, 2, 0, 2, 2, 2, 0};
const std::vector<int> kExample1C{0, 2, 2, 2, 0, 2, 0, 2, 2, 2, 2, 0, 2, 2, 0, 0, 0, 0};
const std::vector<int> kExample1D{0, 2, 2, 2, 0, 0, 2, 0, 0, 2, 2, 0, 2, 0, 2, 2, 2, 2};
// Published |C(a,d)+C(b,c)| listing. Its tau axis runs opposite to the
// correlation definition used here, so entry k corresponds to tau = 17 - k.
const std::vector<int> kExample1Mag{0, 0, 0, 0, 0, 4, 0,  4, 8, 0, 12, 0, 4, 4, 4, 4, 12, 4,
                                    4, 4, 12, 4, 4, 0, 12, 0, 0, 4, 8, 4, 0, 0, 0,  0, 0};

std::string resolve_out_path(const std::string& path) {
    namespace fs = std::filesystem;
    if (path.empty() || fs::path(path).is_absolute()) return path;
    if (const char* dir = std::getenv("CZCSS_OUT_DIR"); dir && *dir)
        return (fs::path(dir) / path).string();
    return path;
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
    } else {
        write_text_file(resolve_out_path(out_path), text);
    }
}

std::vector<int> identity_pi(int size) {
    std::vector<int> pi(size);
    std::iota(pi.begin(), pi.end(), 0);
    return pi;
}

std::string pi_label(const std::vector<int>& pi) {
    std::string s;
    for (std::size_t i = 0; i < pi.size(); ++i) {
        if (i) s += '|';
        s += std::to_string(pi[i]);
    }
    return s;
}

// ---------------------------------------------------------------- generate

struct GenerateConfig {
    std::string kind;
    int q = 4;
    int m = 5;
    int n = 1;
    std::vector<int> pi;
    int c = 0;
    int c_prime = 0;
    int c_1 = 0;
    std::vector<int> coeffs;
    std::string gbf_text;
    int vars = 0;
    int truncate = 0;
    std::string out;
    std::string format = "json";
};

int cmd_generate(const GenerateConfig& cfg) {
    ConstructionParams params;
    params.q = cfg.q;
    params.m = cfg.m;
    params.n = cfg.n;
    params.c = cfg.c;
    params.c_prime = cfg.c_prime;
    params.c_1 = cfg.c_1;

    std::string json_text;
    if (cfg.kind == "gcp") {
        params.pi = cfg.pi.empty() ? identity_pi(cfg.m) : cfg.pi;
        if (!cfg.coeffs.empty()) params.linear_coeffs = cfg.coeffs;
        const GcpWithMate gm = standard_gcp(params);
        json_text = pair_file_json(gm.pair, "gcp", params, &gm.mate);
    } else if (cfg.kind == "czcp" || cfg.kind == "czcp-mate") {
        params.pi = cfg.pi.empty() ? identity_pi(cfg.m - 2) : cfg.pi;
        const SequencePair pair = cfg.kind == "czcp" ? czcp_pair(cfg.q, cfg.m, params.pi, cfg.c)
                                                     : czcp_mate_pair(cfg.q, cfg.m, params.pi, cfg.c);
        json_text = pair_file_json(pair, cfg.kind == "czcp" ? "czcp" : "czcp_mate", params);
    } else if (cfg.kind == "czcss") {
        params.pi = cfg.pi.empty() ? identity_pi(cfg.m - 2) : cfg.pi;
        const CodeFamily family = czcss_family(cfg.q, cfg.m, cfg.n, params.pi, cfg.c);
        json_text = family_file_json(family, "czcss", params);
    } else if (cfg.kind == "quadruple") {
        params.pi = cfg.pi.empty() ? identity_pi(cfg.m - 2) : cfg.pi;
        const TailWindowQuadruple quad = tail_window_quadruple(cfg.q, cfg.m, params.pi, cfg.c_1);
        SequencePair pq{quad.p, quad.q_seq, quad.p.length(), 0};
        SequencePair uv{quad.u, quad.v, quad.u.length(), 0};
        json_text = pair_file_json(pq, "quadruple", params, &uv);
    } else if (cfg.kind == "gbf") {
        if (cfg.gbf_text.empty() || cfg.vars < 1)
            throw std::domain_error("generate --kind gbf needs --gbf and --vars");
        const Gbf f = parse_gbf(cfg.gbf_text, cfg.q, cfg.vars);
        const PhaseSequence seq = cfg.truncate > 0 ? f.project_truncated(cfg.truncate) : f.project();
        json_text = sequence_file_json(seq);
    } else {
        throw std::domain_error("unknown generate kind: " + cfg.kind);
    }

    if (cfg.format == "text") {
        emit(render_phase_rows(parse_sequence_file(json_text)), cfg.out);
    } else {
        emit(json_text, cfg.out);
    }
    return 0;
}

// ------------------------------------------------------------------ verify

struct VerifyConfig {
    std::string in;
    int z = -1;  // -1: use the file's claimed Z
    std::string format = "text";
    std::string out;
    bool scan_max_z = false;
};

VerificationReport verify_content(const SequenceFileContent& content, int z, bool scan_max_z) {
    if (content.pair) {
        const SequencePair& pair = *content.pair;
        if (content.kind == "gcp") {
            const int Z = z > 0 ? z : pair.first.length();
            VerificationReport report = check_zcp(pair, Z);
            if (content.mate) {
                VerificationReport mate = check_complementary_mate(pair, *content.mate);
                report.properties.push_back(mate.properties[0]);
                report.pass = report.pass && mate.pass;
            }
            return report;
        }
        if (content.kind == "quadruple") {
            if (!content.params || !content.mate)
                throw std::domain_error("quadruple file needs params and all four sequences");
            TailWindowQuadruple quad{pair.first, pair.second, content.mate->first, content.mate->second};
            return check_tail_window(quad, content.params->m, content.params->pi);
        }
        const int Z = z > 0 ? z : pair.claimed_Z;
        if (Z < 1) throw std::domain_error("no ZCZ width: file claims none and --z not given");
        VerificationReport report = check_czcp(pair, Z);
        if (scan_max_z) report.max_z = max_czcz(pair);
        return report;
    }
    if (content.set) {
        const int Z = z > 0 ? z : content.claimed_Z.value_or(0);
        if (Z < 1) throw std::domain_error("no ZCZ width: file claims none and --z not given");
        return check_czcs(*content.set, Z);
    }
    if (content.family) {
        const int Z = z > 0 ? z : content.family->claimed_Z;
        if (Z < 1) throw std::domain_error("no ZCZ width: file claims none and --z not given");
        if (content.kind == "szccs") return check_szccs(*content.family, Z);
        return check_czcss(*content.family, Z);
    }
    throw std::domain_error("sequence file holds nothing to verify");
}

int cmd_verify(const VerifyConfig& cfg) {
    const SequenceFileContent content = load_sequence_file(cfg.in);
    const VerificationReport report = verify_content(content, cfg.z, cfg.scan_max_z);
    const std::string rendered =
        cfg.format == "json" ? report_to_json(report) : report_to_text(report);
    std::cout << rendered;
    if (!cfg.out.empty()) write_text_file(resolve_out_path(cfg.out), rendered);
    return report.pass ? 0 : 1;
}

// --------------------------------------------------------------- reproduce

bool compare_sequence(const std::string& name, const PhaseSequence& got, const std::vector<int>& want) {
    if (got.phases == want) {
        std::cout << "  " << name << ": matches the golden listing\n";
        return true;
    }
    std::cout << "  " << name << ": MISMATCH\n    expected:";
    for (int v : want) std::cout << ' ' << v;
    std::cout << "\n    got:     ";
    for (int v : got.phases) std::cout << ' ' << v;
    std::cout << '\n';
    return false;
}

int cmd_reproduce(int which) {
    const int q = 4, m = 5, c = 0;
    const std::vector<int> pi{1, 0, 2};
    if (which == 1) {
        std::cout << "reproducing example 1: (18,5)-CZCPs from q=4, m=5, pi=(1,0,2)\n";
        const SequencePair ab = czcp_pair(q, m, pi, c);
        const SequencePair cd = czcp_mate_pair(q, m, pi, c);
        bool ok = true;
        ok &= compare_sequence("a", ab.first, kExample1A);
        ok &= compare_sequence("b", ab.second, kExample1B);
        ok &= compare_sequence("c", cd.first, kExample1C);
        ok &= compare_sequence("d", cd.second, kExample1D);

        const VerificationReport rab = check_czcp(ab, 5);
        const VerificationReport rcd = check_czcp(cd, 5);
        std::cout << "  (a,b) CZCP at Z=5: " << (rab.pass ? "pass" : "FAIL") << '\n';
        std::cout << "  (c,d) CZCP at Z=5: " << (rcd.pass ? "pass" : "FAIL") << '\n';
        ok &= rab.pass && rcd.pass;

        const VerificationReport mate = check_mate_cross(ab, cd, m, pi);
        std::cout << "  C(a,c)+C(b,d) = 0 for all tau: "
                  << (mate.find("MATE")->pass ? "pass" : "FAIL") << '\n';
        std::cout << "  C(a,d)+C(b,c) = 0 on the tail window: "
                  << (mate.find("MATE_SWAP")->pass ? "pass" : "FAIL") << '\n';
        ok &= mate.pass;

        bool mag_ok = true;
        std::cout << "  |C(a,d)+C(b,c)| magnitude table (listing order): ";
        for (int k = 0; k < 35; ++k) {
            const int tau = 17 - k;  // the golden listing runs tau high-to-low
            const double v =
                (accf(ab.first, cd.second, tau) + accf(ab.second, cd.first, tau)).magnitude();
            if (std::abs(v - kExample1Mag[k]) > 1e-9) mag_ok = false;
        }
        std::cout << (mag_ok ? "all 35 entries match" : "MISMATCH") << '\n';
        ok &= mag_ok;

        std::cout << (ok ? "example 1 reproduced\n" : "example 1 FAILED\n");
        return ok ? 0 : 1;
    }
    if (which == 2) {
        std::cout << "reproducing example 2: (8,8,18,5)-CZCSS with n=2\n";
        const CodeFamily family = czcss_family(q, m, 2, pi, c);
        bool ok = family.sets.size() == 8 && family.sets[0].size() == 8 &&
                  family.sets[0][0].length() == 18;
        std::cout << "  family shape K=" << family.sets.size() << " M=" << family.sets[0].size()
                  << " N=" << family.sets[0][0].length() << (ok ? "" : "  (MISMATCH)") << '\n';
        const VerificationReport report = check_czcss(family, 5);
        for (const PropertyResult& r : report.properties)
            std::cout << "  " << r.property << ": " << (r.pass ? "pass" : "FAIL") << '\n';
        ok &= report.pass;
        std::cout << (ok ? "example 2 reproduced\n" : "example 2 FAILED\n");
        return ok ? 0 : 1;
    }
    throw std::domain_error("reproduce takes 1 or 2");
}

// ------------------------------------------------------------------- sweep

struct SweepConfig {
    std::vector<int> qs{2, 4};
    std::vector<int> ms{4, 5, 6};
    std::vector<int> ns{1, 2};
    int draws = 1;
    std::uint64_t seed = 0;
    int jobs = 1;
    bool timings = false;
    std::string out;
};

struct SweepRow {
    int q, m, n;
    std::vector<int> pi;
    int c, draw;
};

struct SweepResult {
    bool p[4] = {false, false, false, false};
    bool czcss_pass = false;
    bool czcp_pass = false;
    bool mate_pass = false;
    int max_z = 0;
    long long wall_ms = 0;
};

int cmd_sweep(const SweepConfig& cfg) {
    for (int m : cfg.ms)
        if (m < 4 || m > 10) throw std::domain_error("sweep: m must be in [4, 10]");

    // Row order (and therefore the drawn constants) is independent of --jobs.
    std::mt19937_64 rng(cfg.seed);
    std::vector<SweepRow> rows;
    for (int q : cfg.qs)
        for (int m : cfg.ms)
            for (int n : cfg.ns) {
                std::vector<int> pi = identity_pi(m - 2);
                do {
                    for (int draw = 0; draw < cfg.draws; ++draw) {
                        const int c = static_cast<int>(rng() % static_cast<unsigned>(q));
                        rows.push_back({q, m, n, pi, c, draw});
                    }
                } while (std::next_permutation(pi.begin(), pi.end()));
            }

    std::vector<SweepResult> results(rows.size());
    std::atomic<std::size_t> next{0};
    const auto worker = [&] {
        for (std::size_t i = next.fetch_add(1); i < rows.size(); i = next.fetch_add(1)) {
            const SweepRow& row = rows[i];
            const auto start = std::chrono::steady_clock::now();
            SweepResult& res = results[i];
            const CodeFamily family = czcss_family(row.q, row.m, row.n, row.pi, row.c);
            const VerificationReport report = check_czcss(family, family.claimed_Z);
            res.czcss_pass = report.pass;
            for (int k = 0; k < 4; ++k) res.p[k] = report.properties[k].pass;
            const SequencePair pair = czcp_pair(row.q, row.m, row.pi, row.c);
            res.czcp_pass = check_czcp(pair, pair.claimed_Z).pass;
            const SequencePair mate = czcp_mate_pair(row.q, row.m, row.pi, row.c);
            res.mate_pass = check_czcp(mate, mate.claimed_Z).pass;
            res.max_z = max_czcz(pair);
            if (cfg.timings)
                res.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                  std::chrono::steady_clock::now() - start)
                                  .count();
        }
    };

    const int jobs = std::max(1, cfg.jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    std::ostringstream csv;
    csv << "q,m,n,pi,c,draw,K,M,N,Z,czcss_pass,P1,P2,P3,P4,czcp_pass,mate_pass,max_czcz,wall_ms\n";
    bool all_pass = true;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const SweepRow& row = rows[i];
        const SweepResult& res = results[i];
        const int K = 2 << row.n;
        const int N = (1 << (row.m - 1)) + 2;
        const int Z = (1 << row.pi[row.m - 3]) + 1;
        csv << row.q << ',' << row.m << ',' << row.n << ',' << pi_label(row.pi) << ',' << row.c
            << ',' << row.draw << ',' << K << ',' << K << ',' << N << ',' << Z << ','
            << res.czcss_pass << ',' << res.p[0] << ',' << res.p[1] << ',' << res.p[2] << ','
            << res.p[3] << ',' << res.czcp_pass << ',' << res.mate_pass << ',' << res.max_z << ','
            << res.wall_ms << "\n";
        all_pass = all_pass && res.czcss_pass && res.czcp_pass && res.mate_pass;
    }
    emit(csv.str(), cfg.out);
    std::cerr << "sweep: " << rows.size() << " rows, " << (all_pass ? "all pass" : "FAILURES")
              << "\n";
    return all_pass ? 0 : 1;
}

// ------------------------------------------------------------------ export

int cmd_export(const std::string& in, const std::string& out) {
    const SequenceFileContent content = load_sequence_file(in);
    std::ostringstream csv;
    write_correlation_tables_csv(csv, content);
    emit(csv.str(), out);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"construct and verify cross Z-complementary sequence sets"};
    app.require_subcommand(1);

    GenerateConfig gen;
    CLI::App* generate = app.add_subcommand("generate", "construct a pair, family or quadruple");
    generate->add_option("--kind", gen.kind, "gcp | czcp | czcp-mate | czcss | quadruple | gbf")
        ->required();
    generate->add_option("--q", gen.q, "even modulus")->check(CLI::PositiveNumber);
    generate->add_option("--m", gen.m, "number of seed variables");
    generate->add_option("--n", gen.n, "family exponent (czcss)");
    generate->add_option("--pi", gen.pi, "permutation image, e.g. 1,0,2")->delimiter(',');
    generate->add_option("--c", gen.c, "constant c");
    generate->add_option("--c-prime", gen.c_prime, "constant c' (gcp)");
    generate->add_option("--c1", gen.c_1, "constant c_1 (quadruple)");
    generate->add_option("--coeffs", gen.coeffs, "linear coefficients (gcp)")->delimiter(',');
    generate->add_option("--gbf", gen.gbf_text, "GBF expression, e.g. '2*x1*x0 + 2*x0*x2 + 1'");
    generate->add_option("--vars", gen.vars, "number of GBF variables (gbf)");
    generate->add_option("--truncate", gen.truncate, "drop first and last L entries (gbf)");
    generate->add_option("--out", gen.out, "output path (default stdout)");
    generate->add_option("--format", gen.format, "json | text")
        ->check(CLI::IsMember({"json", "text"}));

    VerifyConfig ver;
    CLI::App* verify = app.add_subcommand("verify", "check a sequence file's claimed properties");
    verify->add_option("--in", ver.in, "sequence file")->required();
    verify->add_option("--z", ver.z, "ZCZ width to test (default: the file's claim)")
        ->check(CLI::PositiveNumber);
    verify->add_option("--format", ver.format, "text | json")
        ->check(CLI::IsMember({"text", "json"}));
    verify->add_option("--out", ver.out, "also write the report here");
    verify->add_flag("--max-z", ver.scan_max_z, "brute-scan the maximal CZCP ZCZ width (pairs)");

    int which = 0;
    CLI::App* reproduce = app.add_subcommand("reproduce", "rebuild a worked example and diff it");
    reproduce->add_option("example", which, "1 or 2")->required()->check(CLI::Range(1, 2));

    SweepConfig sw;
    CLI::App* sweep = app.add_subcommand("sweep", "grid-run constructions and verification");
    sweep->add_option("--q", sw.qs, "moduli, e.g. 2,4,8")->delimiter(',');
    sweep->add_option("--m", sw.ms, "seed sizes, e.g. 4,5,6")->delimiter(',');
    sweep->add_option("--n", sw.ns, "family exponents, e.g. 1,2")->delimiter(',');
    sweep->add_option("--draws", sw.draws, "random constant draws per grid point")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--seed", sw.seed, "seed for the constant draws");
    sweep->add_option("--jobs", sw.jobs, "worker threads")->check(CLI::PositiveNumber);
    sweep->add_flag("--timings", sw.timings, "fill the wall_ms column (breaks byte determinism)");
    sweep->add_option("--out", sw.out, "CSV path (default stdout)");

    std::string exp_in, exp_out;
    CLI::App* exporter = app.add_subcommand("export", "dump correlation tables as CSV");
    exporter->add_option("--in", exp_in, "sequence file")->required();
    exporter->add_option("--out", exp_out, "CSV path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*generate) return cmd_generate(gen);
        if (*verify) return cmd_verify(ver);
        if (*reproduce) return cmd_reproduce(which);
        if (*sweep) return cmd_sweep(sw);
        if (*exporter) return cmd_export(exp_in, exp_out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
