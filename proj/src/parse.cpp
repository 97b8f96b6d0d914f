#include "solint/parse.hpp"

#include <cctype>
#include <map>

namespace solint {

namespace {

class Scanner {
public:
    explicit Scanner(const std::string& text) : text_(text) {}

    void skipSpace() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    bool atEnd() {
        skipSpace();
        return pos_ >= text_.size();
    }
    char peek() {
        skipSpace();
        return pos_ < text_.size() ? text_[pos_] : '\0';
    }
    bool consume(char c) {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }
    void expect(char c, const char* what) {
        if (!consume(c)) fail(std::string("expected ") + what);
    }
    std::size_t pos() {
        skipSpace();
        return pos_;
    }
    [[noreturn]] void fail(const std::string& msg) { throw ParseError(pos(), msg); }

    mpz_class integer() {
        skipSpace();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected an integer");
        return mpz_class(text_.substr(start, pos_ - start));
    }

    // Lower-case identifier or single variable letter.
    std::string word() {
        skipSpace();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        return text_.substr(start, pos_ - start);
    }
    void rewind(std::size_t p) { pos_ = p; }

private:
    const std::string& text_;
    std::size_t pos_ = 0;
};

int exponentOf(Scanner& s) {
    if (!s.consume('^')) return 1;
    mpz_class e = s.integer();
    if (e < 0 || !e.fits_sint_p()) s.fail("exponent out of range");
    return int(e.get_si());
}

// One '*'-separated factor.
Poly factor(Scanner& s) {
    char c = s.peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
        mpz_class num = s.integer();
        if (s.consume('/')) {
            std::size_t dpos = s.pos();
            mpz_class den = s.integer();
            if (den == 0) throw ParseError(dpos, "zero denominator");
            return Poly(Rat(num, den));
        }
        return Poly(Rat(num));
    }
    std::size_t start = s.pos();
    std::string w = s.word();
    if (w == "x") return Poly::var(Var::x, exponentOf(s));
    if (w == "y") return Poly::var(Var::y, exponentOf(s));
    if (w == "z") return Poly::var(Var::z, exponentOf(s));
    if (w == "Delta") return Poly::delta().pow(unsigned(exponentOf(s)));
    s.rewind(start);
    s.fail("expected a coefficient, x, y, z or Delta");
}

Poly term(Scanner& s) {
    bool negative = false;
    while (true) {
        if (s.consume('-')) negative = !negative;
        else if (s.consume('+')) continue;
        else break;
    }
    Poly p = factor(s);
    while (s.consume('*')) p = p * factor(s);
    return negative ? -p : p;
}

Poly expression(Scanner& s) {
    Poly p = term(s);
    while (true) {
        char c = s.peek();
        if (c != '+' && c != '-') break;
        p += term(s);  // sign handled by term's unary minus
    }
    return p;
}

}  // namespace

Poly parsePoly(const std::string& text) {
    Scanner s(text);
    Poly p = expression(s);
    if (!s.atEnd()) s.fail("unexpected trailing input");
    return p;
}

VField parseField(const std::string& text) {
    Scanner s(text);
    if (s.peek() == '(') {
        // Canonical tuple form (p1, p2, p3). Components may contain no commas,
        // so split on top-level commas directly.
        s.expect('(', "'('");
        Poly px = expression(s);
        s.expect(',', "','");
        Poly py = expression(s);
        s.expect(',', "','");
        Poly pz = expression(s);
        s.expect(')', "')'");
        if (!s.atEnd()) s.fail("unexpected trailing input");
        return {px, py, pz};
    }

    std::map<std::string, Poly> comps;
    while (true) {
        std::size_t start = s.pos();
        std::string name = s.word();
        if (name != "dx" && name != "dy" && name != "dz")
            throw ParseError(start, "expected component name dx, dy or dz");
        if (comps.count(name)) throw ParseError(start, "duplicate component " + name);
        s.expect('=', "'='");
        comps.emplace(name, expression(s));
        if (s.atEnd()) break;
        if (!s.consume(';') && !s.consume(',')) s.fail("expected ';' between components");
        if (s.atEnd()) break;  // trailing separator permitted
    }
    if (comps.size() != 3) throw ParseError(s.pos(), "all of dx, dy, dz must be given");
    return {comps.at("dx"), comps.at("dy"), comps.at("dz")};
}

}  // namespace solint
