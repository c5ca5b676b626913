#include "czcss/io.hpp"

#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace czcss {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

ordered_json params_to_json(const ConstructionParams& p) {
    ordered_json j;
    j["q"] = p.q;
    j["m"] = p.m;
    j["n"] = p.n;
    j["pi"] = p.pi;
    j["c"] = p.c;
    j["c_prime"] = p.c_prime;
    j["c_1"] = p.c_1;
    if (p.linear_coeffs) j["linear_coeffs"] = *p.linear_coeffs;
    return j;
}

ConstructionParams params_from_json(const json& j) {
    ConstructionParams p;
    p.q = j.value("q", 2);
    p.m = j.value("m", 4);
    p.n = j.value("n", 1);
    p.pi = j.value("pi", std::vector<int>{});
    p.c = j.value("c", 0);
    p.c_prime = j.value("c_prime", 0);
    p.c_1 = j.value("c_1", 0);
    if (j.contains("linear_coeffs")) p.linear_coeffs = j["linear_coeffs"].get<std::vector<int>>();
    return p;
}

std::vector<int> phases_from_json(const json& j, int q) {
    std::vector<int> phases = j.get<std::vector<int>>();
    for (int v : phases)
        if (v < 0 || v >= q) throw std::domain_error("sequence file: phase outside [0, q)");
    return phases;
}

PhaseSequence sequence_from_json(const json& j, int q) { return {q, phases_from_json(j, q)}; }

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string sequence_file_json(const PhaseSequence& seq) {
    ordered_json j;
    j["kind"] = "sequence";
    j["q"] = seq.q;
    j["claimed"] = {{"N", seq.length()}};
    j["sequences"] = {seq.phases};
    return dump(j);
}

std::string pair_file_json(const SequencePair& pair, const std::string& kind,
                           const std::optional<ConstructionParams>& params, const SequencePair* mate) {
    ordered_json j;
    j["kind"] = kind;
    j["q"] = pair.first.q;
    j["claimed"] = {{"N", pair.claimed_N}, {"Z", pair.claimed_Z}};
    if (params) j["params"] = params_to_json(*params);
    j["sequences"] = {pair.first.phases, pair.second.phases};
    if (mate) j["mate"] = {mate->first.phases, mate->second.phases};
    return dump(j);
}

std::string set_file_json(const CodeSet& set, int claimed_Z,
                          const std::optional<ConstructionParams>& params) {
    if (set.empty()) throw std::domain_error("set_file_json: empty set");
    ordered_json j;
    j["kind"] = "czcs";
    j["q"] = set[0].q;
    j["claimed"] = {{"M", set.size()}, {"N", set[0].length()}, {"Z", claimed_Z}};
    if (params) j["params"] = params_to_json(*params);
    ordered_json rows = ordered_json::array();
    for (const PhaseSequence& s : set) rows.push_back(s.phases);
    j["sequences"] = rows;
    return dump(j);
}

std::string family_file_json(const CodeFamily& family, const std::string& kind,
                             const std::optional<ConstructionParams>& params) {
    ordered_json j;
    j["kind"] = kind;
    const int q = family.sets.empty() || family.sets[0].empty() ? 2 : family.sets[0][0].q;
    j["q"] = q;
    if (params) {
        j["m"] = params->m;
        j["n"] = params->n;
        j["pi"] = params->pi;
        j["c"] = params->c;
    }
    j["claimed"] = {{"K", family.claimed_K},
                    {"M", family.claimed_M},
                    {"N", family.claimed_N},
                    {"Z", family.claimed_Z}};
    ordered_json sets = ordered_json::array();
    for (const CodeSet& set : family.sets) {
        ordered_json rows = ordered_json::array();
        for (const PhaseSequence& s : set) rows.push_back(s.phases);
        sets.push_back(rows);
    }
    j["sets"] = sets;
    return dump(j);
}

SequenceFileContent parse_sequence_file(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("sequence file: invalid JSON: ") + e.what());
    }
    SequenceFileContent content;
    content.kind = j.value("kind", "");
    if (!j.contains("q")) throw std::domain_error("sequence file: missing q");
    content.q = j["q"].get<int>();
    if (content.q < 2 || content.q % 2 != 0)
        throw std::domain_error("sequence file: q must be even and >= 2");
    if (j.contains("params")) content.params = params_from_json(j["params"]);

    const json claimed = j.value("claimed", json::object());
    if (claimed.contains("Z")) content.claimed_Z = claimed["Z"].get<int>();

    if (j.contains("sets")) {
        CodeFamily family;
        for (const json& set_json : j["sets"]) {
            CodeSet set;
            for (const json& row : set_json) set.push_back(sequence_from_json(row, content.q));
            family.sets.push_back(std::move(set));
        }
        if (family.sets.empty() || family.sets[0].empty())
            throw std::domain_error("sequence file: empty family");
        family.claimed_K = claimed.value("K", static_cast<int>(family.sets.size()));
        family.claimed_M = claimed.value("M", static_cast<int>(family.sets[0].size()));
        family.claimed_N = claimed.value("N", family.sets[0][0].length());
        family.claimed_Z = content.claimed_Z.value_or(1);
        if (content.kind.empty()) content.kind = "czcss";
        content.family = std::move(family);
        return content;
    }

    if (!j.contains("sequences")) throw std::domain_error("sequence file: missing sequences");
    std::vector<PhaseSequence> rows;
    for (const json& row : j["sequences"]) rows.push_back(sequence_from_json(row, content.q));
    if (rows.empty()) throw std::domain_error("sequence file: no sequences");

    const bool pair_like = content.kind == "gcp" || content.kind == "czcp" ||
                           content.kind == "czcp_mate" || content.kind == "pair" ||
                           content.kind == "quadruple" || (content.kind.empty() && rows.size() == 2);
    if (pair_like) {
        if (rows.size() != 2) throw std::domain_error("sequence file: pair needs exactly 2 sequences");
        SequencePair pair;
        pair.first = rows[0];
        pair.second = rows[1];
        pair.claimed_N = claimed.value("N", rows[0].length());
        pair.claimed_Z = content.claimed_Z.value_or(0);
        if (content.kind.empty()) content.kind = "pair";
        content.pair = std::move(pair);
        if (j.contains("mate")) {
            const json& mj = j["mate"];
            if (mj.size() != 2) throw std::domain_error("sequence file: mate needs exactly 2 sequences");
            SequencePair mate;
            mate.first = sequence_from_json(mj[0], content.q);
            mate.second = sequence_from_json(mj[1], content.q);
            mate.claimed_N = content.pair->claimed_N;
            mate.claimed_Z = content.pair->claimed_Z;
            content.mate = std::move(mate);
        }
        return content;
    }

    if (content.kind.empty()) content.kind = "czcs";
    content.set = CodeSet(rows.begin(), rows.end());
    return content;
}

SequenceFileContent load_sequence_file(const std::string& path) {
    return parse_sequence_file(read_text_file(path));
}

std::string render_phase_rows(const SequenceFileContent& content) {
    std::ostringstream out;
    const auto row = [&](const PhaseSequence& s) {
        for (int i = 0; i < s.length(); ++i) out << (i ? " " : "") << s.phases[i];
        out << "\n";
    };
    if (content.pair) {
        row(content.pair->first);
        row(content.pair->second);
        if (content.mate) {
            row(content.mate->first);
            row(content.mate->second);
        }
    } else if (content.set) {
        for (const PhaseSequence& s : *content.set) row(s);
    } else if (content.family) {
        bool first = true;
        for (const CodeSet& set : content.family->sets) {
            if (!first) out << "\n";
            first = false;
            for (const PhaseSequence& s : set) row(s);
        }
    }
    return out.str();
}

std::string report_to_json(const VerificationReport& report) {
    ordered_json j;
    j["subject"] = report.subject;
    j["check"] = report.check;
    j["N"] = report.N;
    j["Z"] = report.Z;
    j["pass"] = report.pass;
    if (report.check == "zcp") j["gcp"] = report.gcp;
    if (report.max_z) j["max_z"] = *report.max_z;
    if (report.czcz_ratio) j["czcz_ratio"] = *report.czcz_ratio;
    ordered_json props = ordered_json::array();
    for (const PropertyResult& r : report.properties) {
        ordered_json pj;
        pj["property"] = r.property;
        pj["window"] = r.window;
        pj["shifts_tested"] = r.shifts_tested;
        pj["vacuous"] = r.vacuous;
        pj["pass"] = r.pass;
        ordered_json viol = ordered_json::array();
        for (const ShiftViolation& v : r.violations) {
            ordered_json vj;
            vj["tau"] = v.tau;
            vj["magnitude"] = v.magnitude;
            if (!v.context.empty()) vj["context"] = v.context;
            viol.push_back(vj);
        }
        pj["violations"] = viol;
        props.push_back(pj);
    }
    j["properties"] = props;
    return dump(j);
}

std::string report_to_text(const VerificationReport& report) {
    std::ostringstream out;
    out << "check: " << report.check << "   subject: " << report.subject << "   N=" << report.N;
    if (report.Z > 0) out << "   Z=" << report.Z;
    out << "   " << (report.pass ? "PASS" : "FAIL") << "\n";
    if (report.gcp) out << "pair is a GCP (Z = N)\n";
    if (report.max_z) out << "max ZCZ width found: " << *report.max_z << "\n";
    if (report.czcz_ratio) out << "CZCZ ratio: " << *report.czcz_ratio << "\n";
    out << std::left << std::setw(6) << "prop" << std::setw(36) << "window" << std::setw(8) << "tested"
        << std::setw(12) << "violations" << "result\n";
    for (const PropertyResult& r : report.properties) {
        out << std::left << std::setw(6) << r.property << std::setw(36) << r.window << std::setw(8)
            << r.shifts_tested << std::setw(12) << r.violations.size()
            << (r.pass ? (r.vacuous ? "pass (vacuous)" : "pass") : "FAIL") << "\n";
        for (const ShiftViolation& v : r.violations) {
            out << "      tau=" << v.tau << "  |value|=" << v.magnitude;
            if (!v.context.empty()) out << "  (" << v.context << ")";
            out << "\n";
        }
    }
    return out.str();
}

namespace {

void csv_table(std::ostream& out, const std::string& table, int p, int p2, int q, int N,
               const std::function<CyclotomicValue(int)>& value) {
    for (int tau = -(N - 1); tau <= N - 1; ++tau) {
        const CyclotomicValue v = value(tau);
        out << table << ',';
        if (p >= 0) out << p;
        out << ',';
        if (p2 >= 0) out << p2;
        out << ',' << tau;
        for (int k = 0; k < q; ++k) out << ',' << v.counts()[k];
        out << ',' << v.magnitude() << ',' << (v.is_zero() ? 1 : 0) << "\n";
    }
}

}  // namespace

void write_correlation_tables_csv(std::ostream& out, const SequenceFileContent& content) {
    int q = content.q;
    out << "table,p,p2,tau";
    for (int k = 0; k < q; ++k) out << ",c" << k;
    out << ",magnitude,is_zero\n";
    out << std::setprecision(17);

    if (content.pair) {
        const SequencePair& pr = *content.pair;
        const int N = pr.first.length();
        csv_table(out, "C1", -1, -1, q, N,
                  [&](int t) { return aacf(pr.first, t) + aacf(pr.second, t); });
        csv_table(out, "C2", -1, -1, q, N,
                  [&](int t) { return accf(pr.first, pr.second, t) + accf(pr.second, pr.first, t); });
        if (content.mate) {
            const SequencePair& mt = *content.mate;
            csv_table(out, "MATE", -1, -1, q, N,
                      [&](int t) { return accf(pr.first, mt.first, t) + accf(pr.second, mt.second, t); });
            csv_table(out, "MATE_SWAP", -1, -1, q, N,
                      [&](int t) { return accf(pr.first, mt.second, t) + accf(pr.second, mt.first, t); });
        }
    } else if (content.set) {
        const CodeSet& set = *content.set;
        const int N = set[0].length();
        csv_table(out, "P1", -1, -1, q, N, [&](int t) { return sum_aacf(set, t); });
        csv_table(out, "P2", -1, -1, q, N, [&](int t) { return sum_accf_adjacent(set, t); });
    } else if (content.family) {
        const CodeFamily& fam = *content.family;
        const int N = fam.sets[0][0].length();
        const int K = static_cast<int>(fam.sets.size());
        for (int p = 0; p < K; ++p) {
            csv_table(out, "P1", p, -1, q, N, [&](int t) { return sum_aacf(fam.sets[p], t); });
            csv_table(out, "P2", p, -1, q, N, [&](int t) { return sum_accf_adjacent(fam.sets[p], t); });
        }
        for (int p = 0; p < K; ++p)
            for (int p2 = 0; p2 < K; ++p2) {
                if (p == p2) continue;
                csv_table(out, "P3", p, p2, q, N,
                          [&](int t) { return sum_accf_pointwise(fam.sets[p], fam.sets[p2], t); });
                csv_table(out, "P4", p, p2, q, N,
                          [&](int t) { return sum_accf_adjacent_cross(fam.sets[p], fam.sets[p2], t); });
            }
    } else {
        throw std::domain_error("write_correlation_tables_csv: empty content");
    }
}

void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << text;
    if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace czcss
