#include "dla/io.hpp"

#include "dla/primes.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace dla {

namespace {

// Minimal cursor over one line of text; positions are 1-based.
struct Cursor {
    const std::string& s;
    std::size_t pos = 0;
    int line = 1;

    void skip_ws() {
        while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t')) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    int col() const { return static_cast<int>(pos) + 1; }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, line, col()); }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos;
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }
    BigInt nat() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("expected a number");
        return BigInt(s.substr(start, pos - start));
    }
    std::string word() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                  s[pos] == '-' || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
};

Exponent parse_exp(Cursor& c) {
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        BigInt v = c.nat();
        if (v > 1000000) c.fail("exponent too large");
        return Exponent(v.convert_to<std::uint64_t>());
    }
    std::string w = c.word();
    if (w == "inf") return Exponent::inf();
    c.fail("expected an exponent (number or 'inf')");
}

SignatureTriple parse_triple(Cursor& c) {
    c.expect('(');
    SignatureTriple t;
    t.l = c.nat();
    c.expect(',');
    t.r = c.nat();
    c.expect(',');
    t.z = c.nat();
    c.expect(')');
    return t;
}

std::string triple_to_string(const SignatureTriple& t) {
    std::ostringstream os;
    os << "(" << t.l << "," << t.r << "," << t.z << ")";
    return os.str();
}

TailGenerator parse_tail(Cursor& c) {
    std::string kind = c.word();
    if (kind == "periodic") {
        PeriodicTail per;
        while (c.peek() == '(') per.period.push_back(parse_triple(c));
        if (per.period.empty()) c.fail("periodic tail needs at least one triple");
        return per;
    }
    if (kind == "primes") {
        std::string kw = c.word();
        if (kw != "offset") c.fail("expected 'offset'");
        BigInt off = c.nat();
        if (off < 1 || off > 100000) c.fail("offset out of range");
        return PrimeTail{off.convert_to<std::uint64_t>()};
    }
    if (kind == "proportional") {
        SignatureTriple t = parse_triple(c);
        return ProportionalTail{t.l, t.r, t.z};
    }
    c.fail("unknown tail kind '" + kind + "'");
}

std::string tail_to_string(const TailGenerator& tail) {
    std::ostringstream os;
    if (const auto* per = std::get_if<PeriodicTail>(&tail)) {
        os << "periodic";
        for (const auto& t : per->period) os << " " << triple_to_string(t);
    } else if (const auto* pr = std::get_if<PrimeTail>(&tail)) {
        os << "primes offset " << pr->offset;
    } else {
        const auto& prop = std::get<ProportionalTail>(tail);
        os << "proportional (" << prop.l << "," << prop.r << "," << prop.beta << ")";
    }
    return os.str();
}

// Splits file text into (lineno, key, value) triples, dropping comments.
std::vector<std::tuple<int, std::string, std::string>> key_value_lines(const std::string& text) {
    std::vector<std::tuple<int, std::string, std::string>> out;
    std::istringstream is(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(is, raw)) {
        ++lineno;
        if (auto h = raw.find('#'); h != std::string::npos) raw = raw.substr(0, h);
        std::size_t b = raw.find_first_not_of(" \t\r");
        if (b == std::string::npos) continue;
        std::size_t e = raw.find_last_not_of(" \t\r");
        std::string lineText = raw.substr(b, e - b + 1);
        auto colon = lineText.find(':');
        if (colon == std::string::npos) throw ParseError("expected 'key: value'", lineno, 1);
        std::string key = lineText.substr(0, colon);
        std::string value = lineText.substr(colon + 1);
        std::size_t vb = value.find_first_not_of(" \t");
        value = (vb == std::string::npos) ? "" : value.substr(vb);
        out.emplace_back(lineno, key, value);
    }
    return out;
}

AlgType parse_type(const std::string& v, int lineno) {
    if (v == "A") return AlgType::A;
    if (v == "C") return AlgType::C;
    if (v == "O") return AlgType::O;
    throw ParseError("type must be A, C, or O", lineno, 7);
}

}  // namespace

SteinitzNumber parse_steinitz(const std::string& text) {
    Cursor c{text};
    if (c.done()) c.fail("empty Steinitz literal");
    SteinitzNumber out;
    if (c.peek() == '1' && !(c.pos + 1 < text.size() &&
                             std::isdigit(static_cast<unsigned char>(text[c.pos + 1])))) {
        ++c.pos;  // the empty product
    } else {
        for (;;) {
            int col = c.col();
            BigInt base = c.nat();
            if (base > BigInt("18446744073709551615")) c.fail("prime base too large");
            std::uint64_t p = base.convert_to<std::uint64_t>();
            if (!sieve().is_prime(p)) throw ParseError("base is not prime", c.line, col);
            Exponent e(1);
            if (c.accept('^')) e = parse_exp(c);
            out.set_exponent(p, out.exponent_of(p) + e);  // repeated bases accumulate
            if (!c.accept('*')) break;
        }
    }
    if (!c.done()) {
        std::string w = c.word();
        if (w != "default") c.fail("expected 'default' or end of literal");
        Exponent def = parse_exp(c);
        // Rebase: stored exceptions were relative to default 0.
        SteinitzNumber rebased(def);
        for (const auto& [p, e] : out.exceptions()) rebased.set_exponent(p, e);
        out = rebased;
    }
    if (!c.done()) c.fail("trailing characters");
    return out;
}

Rational parse_rational(const std::string& text) {
    Cursor c{text};
    if (c.done()) c.fail("empty rational literal");
    BigInt num = c.nat();
    if (c.accept('/')) {
        BigInt den = c.nat();
        if (den == 0) c.fail("zero denominator");
        if (!c.done()) c.fail("trailing characters");
        return Rational(num, den);
    }
    if (c.accept('^')) {
        bool neg = c.accept('-');
        BigInt e = c.nat();
        if (!c.done()) c.fail("trailing characters");
        if (e > 100000) c.fail("exponent out of range");
        BigInt p = 1;
        for (BigInt i = 0; i < e; ++i) p *= num;
        return neg ? Rational(1, p) : Rational(p);
    }
    if (!c.done()) c.fail("trailing characters");
    return Rational(num);
}

std::vector<int> parse_weight(const std::string& text) {
    Cursor c{text};
    c.expect('[');
    std::vector<int> out;
    if (!c.accept(']')) {
        for (;;) {
            bool neg = c.accept('-');
            BigInt v = c.nat();
            if (v > 1000000) c.fail("weight entry too large");
            int e = v.convert_to<int>();
            out.push_back(neg ? -e : e);
            if (c.accept(']')) break;
            c.expect(',');
        }
    }
    if (!c.done()) c.fail("trailing characters");
    return out;
}

std::string weight_to_string(const std::vector<int>& w) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    os << "]";
    return os.str();
}

ExhaustionDescriptor parse_descriptor(const std::string& text) {
    ExhaustionDescriptor d;
    bool saw_type = false, saw_n0 = false, saw_tail = false;
    for (const auto& [lineno, key, value] : key_value_lines(text)) {
        Cursor c{value};
        c.line = lineno;
        if (key == "type") {
            d.type = parse_type(value, lineno);
            saw_type = true;
        } else if (key == "n0") {
            d.n0 = c.nat();
            saw_n0 = true;
        } else if (key == "prefix") {
            d.prefix.clear();
            while (c.peek() == '(') d.prefix.push_back(parse_triple(c));
            if (!c.done()) c.fail("trailing characters in prefix");
        } else if (key == "tail") {
            d.tail = parse_tail(c);
            if (!c.done()) c.fail("trailing characters in tail");
            saw_tail = true;
        } else {
            throw ParseError("unknown key '" + key + "'", lineno, 1);
        }
    }
    if (!saw_type) throw ParseError("missing 'type:'", 1, 1);
    if (!saw_n0) throw ParseError("missing 'n0:'", 1, 1);
    if (!saw_tail) throw ParseError("missing 'tail:'", 1, 1);
    validate(d);
    return d;
}

std::string descriptor_to_string(const ExhaustionDescriptor& d) {
    std::ostringstream os;
    os << "type: " << to_string(d.type) << "\n";
    os << "n0: " << d.n0 << "\n";
    if (!d.prefix.empty()) {
        os << "prefix:";
        for (const auto& t : d.prefix) os << " " << triple_to_string(t);
        os << "\n";
    }
    os << "tail: " << tail_to_string(d.tail) << "\n";
    return os.str();
}

std::string descriptor_to_line(const ExhaustionDescriptor& d) {
    std::ostringstream os;
    os << "type " << to_string(d.type) << " n0 " << d.n0;
    if (!d.prefix.empty()) {
        os << " prefix";
        for (const auto& t : d.prefix) os << " " << triple_to_string(t);
    }
    os << " tail " << tail_to_string(d.tail);
    return os.str();
}

ExhaustionDescriptor parse_descriptor_line(const std::string& lineText, int lineno) {
    Cursor c{lineText};
    c.line = lineno;
    ExhaustionDescriptor d;
    if (c.word() != "type") c.fail("expected 'type'");
    std::string tw = c.word();
    d.type = parse_type(tw, lineno);
    if (c.word() != "n0") c.fail("expected 'n0'");
    d.n0 = c.nat();
    std::string next = c.word();
    if (next == "prefix") {
        while (c.peek() == '(') d.prefix.push_back(parse_triple(c));
        next = c.word();
    }
    if (next != "tail") c.fail("expected 'tail'");
    d.tail = parse_tail(c);
    if (!c.done()) c.fail("trailing characters");
    validate(d);
    return d;
}

namespace {

IndexValue parse_index_value(const std::string& v, int lineno) {
    auto dots = v.find("..");
    if (dots == std::string::npos) {
        try {
            return parse_rational(v);
        } catch (const ParseError& e) {
            throw ParseError(e.what(), lineno, e.column);
        }
    }
    Rational lo = parse_rational(v.substr(0, dots));
    Rational hi = parse_rational(v.substr(dots + 2));
    return RationalInterval(lo, hi);
}

}  // namespace

AlgebraProfile parse_profile(const std::string& text) {
    AlgebraProfile p;
    bool saw_type = false, saw_S = false;
    for (const auto& [lineno, key, value] : key_value_lines(text)) {
        if (key == "type") {
            p.type = parse_type(value, lineno);
            saw_type = true;
        } else if (key == "S") {
            p.S = parse_steinitz(value);
            saw_S = true;
        } else if (key == "C") {
            p.C = parse_steinitz(value);
        } else if (key == "density") {
            if (value == "sparse") p.density = DensityClass::Sparse;
            else if (value == "dense") p.density = DensityClass::Dense;
            else if (value == "pure") p.density = DensityClass::Pure;
            else throw ParseError("density must be sparse, dense, or pure", lineno, 1);
        } else if (key == "symmetry") {
            if (value == "one-sided") p.symmetry = SymmetryClass::OneSided;
            else if (value == "two-sided-symmetric") p.symmetry = SymmetryClass::TwoSidedSymmetric;
            else if (value == "weakly-non-symmetric") p.symmetry = SymmetryClass::WeaklyNonSymmetric;
            else if (value == "strongly-non-symmetric")
                p.symmetry = SymmetryClass::StronglyNonSymmetric;
            else throw ParseError("unknown symmetry class", lineno, 1);
        } else if (key == "delta") {
            p.delta = parse_index_value(value, lineno);
        } else if (key == "sigma") {
            p.sigma = parse_index_value(value, lineno);
        } else if (key == "finitary") {
            if (value == "true") p.finitary = true;
            else if (value == "false") p.finitary = false;
            else throw ParseError("finitary must be true or false", lineno, 1);
        } else {
            throw ParseError("unknown key '" + key + "'", lineno, 1);
        }
    }
    if (!saw_type) throw ParseError("missing 'type:'", 1, 1);
    if (!saw_S) throw ParseError("missing 'S:'", 1, 1);
    return certify(p);
}

std::string profile_to_string(const AlgebraProfile& p) {
    std::ostringstream os;
    os << "type: " << to_string(p.type) << "\n";
    os << "S: " << p.S.to_string() << "\n";
    if (p.C) os << "C: " << p.C->to_string() << "\n";
    os << "density: " << to_string(p.density) << "\n";
    os << "symmetry: " << to_string(p.symmetry) << "\n";
    os << "delta: " << to_string(p.delta) << "\n";
    os << "sigma: " << to_string(p.sigma) << "\n";
    os << "finitary: " << (p.finitary ? "true" : "false") << "\n";
    return os.str();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
}

ExhaustionDescriptor load_descriptor_file(const std::string& path) {
    return parse_descriptor(read_file(path));
}

AlgebraProfile load_profile_file(const std::string& path) {
    return parse_profile(read_file(path));
}

}  // namespace dla
