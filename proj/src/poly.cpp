#include "baxter/poly.hpp"

#include <cctype>

namespace baxter {
namespace {

// Recursive-descent parser for the polynomial grammar:
//   poly    := ['+'|'-'] term (('+'|'-') term)*
//   term    := coef ('*' factors)? | factors
//   coef    := int ('/' int)?
//   factors := factor ('*' factor)*
//   factor  := name ('^' int)?
//   name    := [A-Za-z][A-Za-z0-9_]*
struct Parser {
    const std::string& s;
    std::size_t pos = 0;

    explicit Parser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool at_end() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    bool accept(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    std::string parse_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw PolyParseError(start, "integer");
        return s.substr(start, pos - start);
    }

    Rational parse_coef() {
        std::string num = parse_int();
        if (accept('/')) {
            std::string den = parse_int();
            return Rational::parse(num + "/" + den);
        }
        return Rational::parse(num);
    }

    std::string parse_name() {
        skip_ws();
        std::size_t start = pos;
        if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos])))
            throw PolyParseError(pos, "indeterminate name");
        ++pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }

    Monomial parse_factor() {
        std::string name = parse_name();
        int exp = 1;
        if (accept('^')) {
            std::string e = parse_int();
            exp = std::stoi(e);
        }
        return Monomial::var(name, exp);
    }

    Poly parse_term() {
        skip_ws();
        Rational coef(1);
        Monomial mono;
        bool have_factors = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            coef = parse_coef();
            if (accept('*')) {
                mono = parse_factor();
                have_factors = true;
            }
        } else {
            mono = parse_factor();
            have_factors = true;
        }
        while (have_factors && accept('*')) mono = mono * parse_factor();
        return Poly::term(coef, mono);
    }

    Poly parse_poly() {
        Poly p;
        int sign = 1;
        if (accept('-')) sign = -1;
        else accept('+');
        p += parse_term() * Rational(sign);
        while (!at_end()) {
            skip_ws();
            if (accept('+')) sign = 1;
            else if (accept('-')) sign = -1;
            else throw PolyParseError(pos, "'+' or '-'");
            p += parse_term() * Rational(sign);
        }
        return p;
    }
};

}  // namespace

Poly Poly::parse(const std::string& text) {
    Parser parser(text);
    if (parser.at_end()) throw PolyParseError(0, "polynomial");
    return parser.parse_poly();
}

}  // namespace baxter
