#include "purering/literal.hpp"

#include <cctype>
#include <sstream>

namespace purering {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ": " + message),
      line(line),
      column(column) {}

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool at_end() {
        skip_ws();
        return pos_ >= text_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }

    bool try_eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!try_eat(c)) fail(std::string("expected '") + c + "'");
    }

    bool try_keyword(std::string_view word) {
        skip_ws();
        if (text_.substr(pos_, word.size()) != word) return false;
        size_t after = pos_ + word.size();
        if (after < text_.size() &&
            (std::isalnum(static_cast<unsigned char>(text_[after])) || text_[after] == '_'))
            return false;
        pos_ = after;
        return true;
    }

    void expect_keyword(std::string_view word) {
        if (!try_keyword(word)) fail("expected '" + std::string(word) + "'");
    }

    Int parse_integer() {
        skip_ws();
        size_t start = pos_;
        if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
        size_t digits = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == digits) {
            pos_ = start;
            fail("expected an integer");
        }
        return Int(std::string(text_.substr(start, pos_ - start)), 10);
    }

    int64_t parse_int64() {
        skip_ws();
        size_t at = pos_;
        Int value = parse_integer();
        if (!value.fits_slong_p()) {
            pos_ = at;
            fail("integer out of supported range");
        }
        return value.get_si();
    }

    Rat parse_rational() {
        Int num = parse_integer();
        if (!try_eat('/')) return Rat(num);
        skip_ws();
        size_t at = pos_;
        Int den = parse_integer();
        if (den <= 0) {
            pos_ = at;
            fail("denominator must be positive");
        }
        return make_rat(num, den);
    }

    [[noreturn]] void fail(const std::string& message) {
        int line = 1, column = 1;
        for (size_t i = 0; i < pos_ && i < text_.size(); ++i) {
            if (text_[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
        throw ParseError(message, line, column);
    }

    size_t position() const { return pos_; }
    std::string_view rest() const { return text_.substr(pos_); }
    void advance(size_t n) { pos_ += n; }

private:
    std::string_view text_;
    size_t pos_ = 0;
};

// 'mod m: key -> value, ...' with rational values.
void parse_mod_map(Cursor& cur, int64_t& modulus, std::map<int64_t, Rat>& entries) {
    cur.expect_keyword("mod");
    modulus = cur.parse_int64();
    if (modulus < 1) cur.fail("modulus must be >= 1");
    cur.expect(':');
    while (true) {
        int64_t key = cur.parse_int64();
        cur.expect('-');
        cur.expect('>');
        Rat value = cur.parse_rational();
        if (!entries.emplace(key, value).second)
            cur.fail("duplicate residue " + std::to_string(key));
        if (!cur.try_eat(',')) break;
    }
}

void parse_fix_list(Cursor& cur, std::map<int64_t, int64_t>& fixes) {
    while (true) {
        int64_t p = cur.parse_int64();
        cur.expect('-');
        cur.expect('>');
        int64_t v = cur.parse_int64();
        if (!fixes.emplace(p, v).second)
            cur.fail("duplicate fix at prime " + std::to_string(p));
        if (!cur.try_eat(',')) break;
    }
}

TailedElement parse_element_body(Cursor& cur) {
    cur.expect('{');
    PrimePartition partition = PrimePartition::trivial();
    std::vector<Rat> tails;
    if (cur.try_keyword("mod")) {
        int64_t modulus = cur.parse_int64();
        if (modulus < 1) cur.fail("modulus must be >= 1");
        cur.expect(':');
        std::map<int64_t, Rat> entries;
        while (true) {
            int64_t key = cur.parse_int64();
            cur.expect('-');
            cur.expect('>');
            Rat value = cur.parse_rational();
            if (!entries.emplace(key, value).second)
                cur.fail("duplicate residue " + std::to_string(key));
            if (!cur.try_eat(',')) break;
        }
        // Each listed residue gets its own block; canonicalization merges.
        std::map<int64_t, BlockId> classes;
        BlockId next = 0;
        for (const auto& [r, q] : entries) {
            classes[r] = next++;
            tails.push_back(q);
        }
        try {
            partition = PrimePartition::from_parts(modulus, classes, {});
        } catch (const std::invalid_argument& e) {
            cur.fail(e.what());
        }
        // from_parts may coarsen only when values collide; block ids survive.
    } else {
        tails.push_back(cur.parse_rational());
    }
    std::map<int64_t, int64_t> fixes;
    if (cur.try_eat(';')) {
        cur.expect_keyword("fix");
        parse_fix_list(cur, fixes);
    }
    cur.expect('}');
    try {
        return TailedElement::from_rational_vector(partition, tails, fixes);
    } catch (const std::invalid_argument& e) {
        cur.fail(e.what());
    }
}

IntPolynomial parse_polynomial_body(Cursor& cur, char variable) {
    std::vector<Int> coefficients;
    auto add_term = [&](const Int& coefficient, int64_t exponent) {
        if (exponent < 0 || exponent > 64) cur.fail("exponent out of supported range");
        if (coefficients.size() <= static_cast<size_t>(exponent))
            coefficients.resize(static_cast<size_t>(exponent) + 1, Int(0));
        coefficients[static_cast<size_t>(exponent)] += coefficient;
    };
    bool first = true;
    while (true) {
        int sign = 1;
        if (cur.try_eat('-')) sign = -1;
        else if (cur.try_eat('+')) sign = 1;
        else if (!first) break;
        first = false;

        Int coefficient = 1;
        bool have_digits = std::isdigit(static_cast<unsigned char>(cur.peek()));
        if (have_digits) coefficient = cur.parse_integer();
        coefficient *= sign;

        if (cur.try_eat(variable)) {
            int64_t exponent = 1;
            if (cur.try_eat('^')) exponent = cur.parse_int64();
            add_term(coefficient, exponent);
        } else if (have_digits) {
            add_term(coefficient, 0);
        } else {
            cur.fail(std::string("expected a coefficient or '") + variable + "'");
        }
        char next = cur.peek();
        if (next != '+' && next != '-') break;
    }
    return IntPolynomial(std::move(coefficients));
}

BoundedDenomSeq parse_sequence_body(Cursor& cur) {
    cur.expect_keyword("seq");
    cur.expect_keyword("k");
    cur.expect('=');
    Int k = cur.parse_integer();
    if (k < 1) cur.fail("denominator must be >= 1");
    cur.expect_keyword("prefix");
    cur.expect('[');
    std::vector<Int> prefix;
    if (cur.peek() != ']') {
        while (true) {
            prefix.push_back(cur.parse_integer());
            if (!cur.try_eat(',')) break;
        }
    }
    cur.expect(']');
    cur.expect_keyword("poly");
    cur.expect('"');
    IntPolynomial poly = parse_polynomial_body(cur, 'n');
    cur.expect('"');
    return BoundedDenomSeq(std::move(k), std::move(prefix), std::move(poly));
}

PrimePartition parse_partition_body(Cursor& cur) {
    if (cur.try_keyword("trivial")) return PrimePartition::trivial();
    cur.expect_keyword("mod");
    int64_t modulus = cur.parse_int64();
    if (modulus < 1) cur.fail("modulus must be >= 1");
    cur.expect(':');
    std::map<int64_t, BlockId> classes;
    while (true) {
        int64_t key = cur.parse_int64();
        cur.expect('-');
        cur.expect('>');
        int64_t block = cur.parse_int64();
        if (block < 0 || block > 1'000'000) cur.fail("block id out of range");
        if (!classes.emplace(key, static_cast<BlockId>(block)).second)
            cur.fail("duplicate residue " + std::to_string(key));
        if (!cur.try_eat(',')) break;
    }
    std::map<int64_t, BlockId> exceptions;
    if (cur.try_eat(';')) {
        cur.expect_keyword("exc");
        while (true) {
            int64_t p = cur.parse_int64();
            cur.expect('-');
            cur.expect('>');
            int64_t block = cur.parse_int64();
            if (block < 0 || block > 1'000'000) cur.fail("block id out of range");
            if (!exceptions.emplace(p, static_cast<BlockId>(block)).second)
                cur.fail("duplicate exception at prime " + std::to_string(p));
            if (!cur.try_eat(',')) break;
        }
    }
    try {
        return PrimePartition::from_parts(modulus, classes, exceptions);
    } catch (const std::invalid_argument& e) {
        cur.fail(e.what());
    }
}

void expect_done(Cursor& cur) {
    if (!cur.at_end()) cur.fail("unexpected trailing input");
}

// expression := additive with integers as constant elements
TailedElement parse_expr_additive(Cursor& cur);

TailedElement parse_expr_primary(Cursor& cur) {
    char c = cur.peek();
    if (c == '(') {
        cur.expect('(');
        TailedElement inner = parse_expr_additive(cur);
        cur.expect(')');
        return inner;
    }
    if (c == '{') return parse_element_body(cur);
    if (std::isdigit(static_cast<unsigned char>(c)))
        return TailedElement::constant(Rat(cur.parse_integer()));
    cur.fail("expected an integer, an element literal, or '('");
}

TailedElement parse_expr_unary(Cursor& cur) {
    if (cur.try_eat('-')) return -parse_expr_unary(cur);
    return parse_expr_primary(cur);
}

TailedElement parse_expr_multiplicative(Cursor& cur) {
    TailedElement result = parse_expr_unary(cur);
    while (cur.try_eat('*')) result = result * parse_expr_unary(cur);
    return result;
}

TailedElement parse_expr_additive(Cursor& cur) {
    TailedElement result = parse_expr_multiplicative(cur);
    while (true) {
        if (cur.try_eat('+')) result = result + parse_expr_multiplicative(cur);
        else if (cur.try_eat('-')) result = result - parse_expr_multiplicative(cur);
        else return result;
    }
}

}  // namespace

Rat parse_rational(std::string_view text) {
    Cursor cur(text);
    Rat q = cur.parse_rational();
    expect_done(cur);
    return q;
}

TailedElement parse_element(std::string_view text) {
    Cursor cur(text);
    TailedElement x = parse_element_body(cur);
    expect_done(cur);
    return x;
}

PrimePartition parse_partition(std::string_view text) {
    Cursor cur(text);
    PrimePartition p = parse_partition_body(cur);
    expect_done(cur);
    return p;
}

BoundedDenomSeq parse_sequence(std::string_view text) {
    Cursor cur(text);
    BoundedDenomSeq s = parse_sequence_body(cur);
    expect_done(cur);
    return s;
}

IntPolynomial parse_polynomial(std::string_view text, char variable) {
    Cursor cur(text);
    IntPolynomial f = parse_polynomial_body(cur, variable);
    expect_done(cur);
    return f;
}

TailedElement parse_expression(std::string_view text) {
    Cursor cur(text);
    TailedElement x = parse_expr_additive(cur);
    expect_done(cur);
    return x;
}

std::string print_rational(const Rat& q) { return q.get_str(); }

namespace {

std::string print_tailspec(const PrimePartition& partition, const std::vector<Rat>& tails) {
    if (partition.modulus() == 1) return tails[0].get_str();
    std::ostringstream out;
    out << "mod " << partition.modulus() << ": ";
    bool first = true;
    for (int64_t u : partition.unit_residues()) {
        if (!first) out << ", ";
        first = false;
        out << u << " -> "
            << tails[static_cast<size_t>(partition.class_block(u))].get_str();
    }
    return out.str();
}

}  // namespace

std::string print_element(const TailedElement& x) {
    std::ostringstream out;
    out << '{' << print_tailspec(x.partition(), x.tails());
    if (!x.fixes().empty()) {
        out << "; fix ";
        bool first = true;
        for (const auto& [p, v] : x.fixes()) {
            if (!first) out << ", ";
            first = false;
            out << p << " -> " << v;
        }
    }
    out << '}';
    return out.str();
}

std::string print_partition(const PrimePartition& p) {
    if (p.modulus() == 1 && p.exceptions().empty()) return "trivial";
    std::ostringstream out;
    out << "mod " << p.modulus() << ": ";
    bool first = true;
    for (int64_t u : p.unit_residues()) {
        if (!first) out << ", ";
        first = false;
        out << u << " -> " << p.class_block(u);
    }
    if (!p.exceptions().empty()) {
        out << "; exc ";
        first = true;
        for (const auto& [q, b] : p.exceptions()) {
            if (!first) out << ", ";
            first = false;
            out << q << " -> " << b;
        }
    }
    return out.str();
}

std::string print_sequence(const BoundedDenomSeq& s) {
    std::ostringstream out;
    out << "seq k=" << s.denominator().get_str() << " prefix [";
    bool first = true;
    for (const Int& a : s.prefix()) {
        if (!first) out << ", ";
        first = false;
        out << a.get_str();
    }
    out << "] poly \"" << print_polynomial(s.poly(), 'n') << '"';
    return out.str();
}

std::string print_polynomial(const IntPolynomial& f, char variable) {
    if (f.is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int e = f.degree(); e >= 0; --e) {
        const Int& c = f.coefficients()[static_cast<size_t>(e)];
        if (c == 0) continue;
        Int magnitude = abs(c);
        if (first) {
            if (c < 0) out << '-';
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        if (magnitude != 1 || e == 0) out << magnitude.get_str();
        if (e >= 1) {
            out << variable;
            if (e >= 2) out << '^' << e;
        }
    }
    return out.str();
}

std::string print_quotient(const QuotientElement& q) {
    return print_tailspec(q.partition(), q.values());
}

nlohmann::ordered_json element_to_json(const TailedElement& x) {
    nlohmann::ordered_json j;
    j["modulus"] = std::to_string(x.partition().modulus());
    nlohmann::ordered_json tails = nlohmann::ordered_json::object();
    for (int64_t u : x.partition().unit_residues())
        tails[std::to_string(u)] =
            x.tails()[static_cast<size_t>(x.partition().class_block(u))].get_str();
    j["class_tails"] = std::move(tails);
    nlohmann::ordered_json exceptions = nlohmann::ordered_json::object();
    for (const auto& [p, b] : x.partition().exceptions())
        exceptions[std::to_string(p)] = std::to_string(b);
    j["exceptions"] = std::move(exceptions);
    nlohmann::ordered_json fixes = nlohmann::ordered_json::object();
    for (const auto& [p, v] : x.fixes()) fixes[std::to_string(p)] = std::to_string(v);
    j["fixes"] = std::move(fixes);
    return j;
}

nlohmann::ordered_json quotient_to_json(const QuotientElement& q) {
    nlohmann::ordered_json j;
    j["modulus"] = std::to_string(q.partition().modulus());
    nlohmann::ordered_json values = nlohmann::ordered_json::object();
    for (int64_t u : q.partition().unit_residues())
        values[std::to_string(u)] =
            q.values()[static_cast<size_t>(q.partition().class_block(u))].get_str();
    j["class_values"] = std::move(values);
    return j;
}

nlohmann::ordered_json sequence_to_json(const BoundedDenomSeq& s) {
    nlohmann::ordered_json j;
    j["denominator"] = s.denominator().get_str();
    nlohmann::ordered_json prefix = nlohmann::ordered_json::array();
    for (const Int& a : s.prefix()) prefix.push_back(a.get_str());
    j["prefix"] = std::move(prefix);
    j["poly"] = polynomial_to_json(s.poly());
    return j;
}

nlohmann::ordered_json polynomial_to_json(const IntPolynomial& f) {
    nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
    for (const Int& c : f.coefficients()) coeffs.push_back(c.get_str());
    return coeffs;
}

}  // namespace purering
