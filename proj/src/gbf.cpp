#include "czcss/gbf.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace czcss {

namespace {

constexpr int kMaxVars = 30;

int reduce_mod(long long value, int q) {
    long long r = value % q;
    if (r < 0) r += q;
    return static_cast<int>(r);
}

}  // namespace

BitVector bit_vector(std::uint64_t i, int width) {
    if (width < 1 || width > 63) throw std::domain_error("bit_vector: width out of range");
    if (i >> width) throw std::domain_error("bit_vector: integer does not fit in width bits");
    BitVector bits(static_cast<std::size_t>(width));
    for (int j = 0; j < width; ++j) bits[j] = static_cast<std::uint8_t>((i >> j) & 1u);
    return bits;
}

std::uint64_t bit_vector_to_int(const BitVector& bits) {
    std::uint64_t i = 0;
    for (std::size_t j = 0; j < bits.size(); ++j) {
        if (bits[j] > 1) throw std::domain_error("bit_vector_to_int: entry not a bit");
        i |= static_cast<std::uint64_t>(bits[j]) << j;
    }
    return i;
}

Gbf::Gbf(int q, int num_vars) : q_(q), num_vars_(num_vars) {
    if (q < 2 || q % 2 != 0) throw std::domain_error("Gbf: modulus q must be even and >= 2");
    if (num_vars < 1 || num_vars > kMaxVars) throw std::domain_error("Gbf: num_vars out of range");
}

Gbf Gbf::monomial(int q, int num_vars, const std::vector<int>& vars, int coeff) {
    Gbf f(q, num_vars);
    std::uint32_t mask = 0;
    for (int v : vars) {
        if (v < 0 || v >= num_vars) throw std::domain_error("Gbf::monomial: variable index out of range");
        mask |= 1u << v;
    }
    f.add_term(mask, coeff);
    return f;
}

Gbf Gbf::constant(int q, int num_vars, int value) {
    Gbf f(q, num_vars);
    f.add_term(0, value);
    return f;
}

int Gbf::evaluate(std::uint64_t i) const {
    if (i >> num_vars_) throw std::domain_error("Gbf::evaluate: index out of range");
    long long sum = 0;
    for (const auto& [mask, coeff] : terms_) {
        if ((i & mask) == mask) sum += coeff;
    }
    return reduce_mod(sum, q_);
}

PhaseSequence Gbf::project() const {
    PhaseSequence seq;
    seq.q = q_;
    const std::uint64_t n = std::uint64_t{1} << num_vars_;
    seq.phases.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) seq.phases.push_back(evaluate(i));
    return seq;
}

PhaseSequence Gbf::project_truncated(int L) const {
    const long long half = 1ll << (num_vars_ - 1);
    if (L < 0 || L >= half) throw std::domain_error("Gbf::project_truncated: L out of range");
    PhaseSequence full = project();
    PhaseSequence seq;
    seq.q = q_;
    seq.phases.assign(full.phases.begin() + L, full.phases.end() - L);
    return seq;
}

Gbf Gbf::with_vars(int num_vars) const {
    if (num_vars < num_vars_) throw std::domain_error("Gbf::with_vars: cannot shrink variable space");
    Gbf f(q_, num_vars);
    f.terms_ = terms_;
    return f;
}

Gbf& Gbf::add_term(std::uint32_t mask, long long coeff) {
    if (mask >> num_vars_) throw std::domain_error("Gbf::add_term: monomial uses out-of-range variable");
    const int c = reduce_mod(coeff + terms_[mask], q_);
    if (c == 0)
        terms_.erase(mask);
    else
        terms_[mask] = c;
    return *this;
}

Gbf Gbf::scaled(long long k) const {
    Gbf f(q_, num_vars_);
    for (const auto& [mask, coeff] : terms_) f.add_term(mask, coeff * k);
    return f;
}

Gbf operator+(const Gbf& f, const Gbf& g) {
    if (f.q_ != g.q_ || f.num_vars_ != g.num_vars_)
        throw std::domain_error("Gbf: operands differ in q or num_vars");
    Gbf r = f;
    for (const auto& [mask, coeff] : g.terms_) r.add_term(mask, coeff);
    return r;
}

Gbf operator-(const Gbf& f, const Gbf& g) { return f + g.scaled(-1); }

Gbf operator*(const Gbf& f, const Gbf& g) {
    if (f.q_ != g.q_ || f.num_vars_ != g.num_vars_)
        throw std::domain_error("Gbf: operands differ in q or num_vars");
    Gbf r(f.q_, f.num_vars_);
    for (const auto& [m1, c1] : f.terms_)
        for (const auto& [m2, c2] : g.terms_) r.add_term(m1 | m2, static_cast<long long>(c1) * c2);
    return r;
}

std::string Gbf::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mask, coeff] : terms_) {
        if (!first) out << " + ";
        first = false;
        if (mask == 0) {
            out << coeff;
            continue;
        }
        bool star = false;
        if (coeff != 1) {
            out << coeff;
            star = true;
        }
        for (int v = 0; v < num_vars_; ++v) {
            if (mask & (1u << v)) {
                if (star) out << '*';
                out << 'x' << v;
                star = true;
            }
        }
    }
    return out.str();
}

namespace {

struct GbfParser {
    const std::string& text;
    std::size_t pos = 0;

    explicit GbfParser(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::domain_error("parse_gbf: " + what + " at position " + std::to_string(pos));
    }

    long long parse_uint() {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected integer");
        long long value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + (text[pos] - '0');
            if (value > (1ll << 40)) fail("integer too large");
            ++pos;
        }
        return value;
    }

    // term := factor ('*' factor)*, factor := uint | 'x' uint
    void parse_term(Gbf& f, int num_vars, long long sign) {
        long long coeff = sign;
        std::uint32_t mask = 0;
        bool any = false;
        while (true) {
            skip_ws();
            if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'X')) {
                ++pos;
                long long v = parse_uint();
                if (v >= num_vars) fail("variable index exceeds declared vars");
                mask |= 1u << v;
            } else if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                coeff *= parse_uint();
            } else {
                if (!any) fail("expected term");
                break;
            }
            any = true;
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        f.add_term(mask, coeff);
    }
};

}  // namespace

Gbf parse_gbf(const std::string& text, int q, int num_vars) {
    Gbf f(q, num_vars);
    GbfParser p(text);
    long long sign = 1;
    if (p.peek() == '-') {
        ++p.pos;
        sign = -1;
    } else if (p.peek() == '+') {
        ++p.pos;
    }
    while (true) {
        p.parse_term(f, num_vars, sign);
        if (p.eof()) break;
        char op = p.peek();
        if (op == '+')
            sign = 1;
        else if (op == '-')
            sign = -1;
        else
            p.fail("expected '+' or '-'");
        ++p.pos;
    }
    return f;
}

}  // namespace czcss
