#include "tusv/grammar.hpp"

#include <cctype>

namespace tusv {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view s) : s_(s) {}

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool eof() {
        skip_ws();
        return pos_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    bool consume(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!consume(c)) fail(std::string("expected '") + c + "'");
    }
    bool consume_word(std::string_view w) {
        skip_ws();
        if (s_.substr(pos_, w.size()) != w) return false;
        // Reject prefixes of a longer identifier: "p(..." matches, "pb..." must not.
        std::size_t end = pos_ + w.size();
        if (end < s_.size() && std::isalpha(static_cast<unsigned char>(s_[end]))) return false;
        pos_ = end;
        return true;
    }
    long long integer() {
        skip_ws();
        std::size_t start = pos_;
        bool neg = false;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
            neg = s_[pos_] == '-';
            ++pos_;
        }
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
            fail("expected an integer", start);
        long long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > (1LL << 40)) fail("integer out of range", start);
            ++pos_;
        }
        return neg ? -v : v;
    }
    std::size_t pos() const { return pos_; }
    [[noreturn]] void fail(const std::string& msg) const { throw parse_failure(pos_, msg); }
    [[noreturn]] void fail(const std::string& msg, std::size_t at) const {
        throw parse_failure(at, msg);
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;
};

GeneratorKind parse_kind(Cursor& c) {
    if (c.consume_word("sq")) return Square{};
    if (c.consume_word("tri")) return Triangular{};
    if (c.consume_word("zero")) return Zero{};
    if (c.consume_word("pbar")) {
        c.expect('(');
        long long m = c.integer();
        c.expect(')');
        if (m < 3) c.fail("polygonal order must be >= 3");
        return SecondPolygonal{m};
    }
    if (c.consume_word("p")) {
        c.expect('(');
        long long m = c.integer();
        c.expect(')');
        if (m < 3) c.fail("polygonal order must be >= 3");
        return Polygonal{m};
    }
    if (c.consume_word("gp")) {
        c.expect('(');
        long long cc = c.integer();
        c.expect(',');
        long long d = c.integer();
        c.expect(')');
        if (cc < 1 || d < 1) c.fail("gp needs c >= 1 and d >= 1");
        return GenPoly{cc, d};
    }
    if (c.consume_word("mirror")) {
        c.expect('(');
        GeneratorKind inner = parse_kind(c);
        c.expect(')');
        auto* g = std::get_if<GenPoly>(&inner);
        if (!g) c.fail("mirror(...) takes a gp(c,d) term");
        if (g->c > g->d) return GenPoly{g->c, g->c - g->d};
        return GenPolyMirror{g->c, g->d};
    }
    c.fail("expected a term kind (sq, tri, p(m), pbar(m), gp(c,d), mirror(...), zero)");
}

Generator parse_one(Cursor& c) {
    Generator g;
    c.skip_ws();
    // optional leading coefficient: INT "*"
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
        long long coeff = c.integer();
        if (coeff < 1) c.fail("coefficient must be >= 1");
        c.expect('*');
        g.coeff = coeff;
    }
    g.kind = parse_kind(c);
    if (c.consume('@')) {
        if (!c.consume_word("int") && !c.consume_word("Z"))
            c.fail("expected 'int' after '@'");
        g.domain = Domain::integers;
    }
    validate(g);
    return g;
}

} // namespace

Generator parse_term(std::string_view text) {
    Cursor c(text);
    Generator g = parse_one(c);
    if (!c.eof()) c.fail("trailing input after term");
    return g;
}

TernaryForm parse_form(std::string_view text) {
    Cursor c(text);
    TernaryForm f{{make_zero(), make_zero(), make_zero()}};
    f.terms[0] = parse_one(c);
    int n = 1;
    while (c.consume('+')) {
        if (n >= 3) c.fail("a form has at most three terms");
        f.terms[n++] = parse_one(c);
    }
    if (!c.eof()) c.fail("trailing input after form");
    return f;
}

namespace {

std::string spell_kind(const GeneratorKind& k) {
    struct V {
        std::string operator()(Square) const { return "sq"; }
        std::string operator()(Triangular) const { return "tri"; }
        std::string operator()(Polygonal p) const { return "p(" + std::to_string(p.m) + ")"; }
        std::string operator()(SecondPolygonal p) const {
            return "pbar(" + std::to_string(p.m) + ")";
        }
        std::string operator()(GenPoly g) const {
            return "gp(" + std::to_string(g.c) + "," + std::to_string(g.d) + ")";
        }
        std::string operator()(GenPolyMirror g) const {
            return "mirror(gp(" + std::to_string(g.c) + "," + std::to_string(g.d) + "))";
        }
        std::string operator()(Zero) const { return "zero"; }
    };
    return std::visit(V{}, k);
}

} // namespace

std::string spell_term(const Generator& g) {
    std::string out;
    if (g.coeff != 1) out += std::to_string(g.coeff) + "*";
    out += spell_kind(g.kind);
    if (g.domain == Domain::integers) out += "@int";
    return out;
}

std::string spell_form(const TernaryForm& f) {
    std::string out = spell_term(f.terms[0]);
    for (int i = 1; i < 3; ++i) {
        out += " + ";
        out += spell_term(f.terms[i]);
    }
    return out;
}

} // namespace tusv
