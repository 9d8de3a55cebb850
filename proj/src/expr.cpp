#include "hopfid/expr.hpp"

#include <cctype>

#include "hopfid/errors.hpp"

namespace hopfid {

namespace {

struct ExprParser {
    const std::string& s;
    HopfPtr h;
    unsigned limit;
    size_t pos = 0;

    ExprParser(const std::string& src, HopfPtr host, unsigned degree_limit)
        : s(src), h(std::move(host)), limit(degree_limit) {}

    [[noreturn]] void fail(const std::string& msg, size_t at) const {
        int line = 1, col = 1;
        for (size_t i = 0; i < at && i < s.size(); ++i) {
            if (s[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(msg, line, col);
    }
    void skip_ws() {
        while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    FreeElement parse() {
        FreeElement v = expr();
        skip_ws();
        if (pos != s.size()) fail("unexpected trailing input", pos);
        return v;
    }

    FreeElement expr() {
        FreeElement v = term();
        for (;;) {
            if (eat('+'))
                v = v + term();
            else if (eat('-'))
                v = v - term();
            else
                return v;
        }
    }

    FreeElement term() {
        FreeElement v = factor();
        while (eat('*')) v = v * factor();
        return v;
    }

    FreeElement factor() {
        if (eat('-')) return -factor();
        FreeElement v = primary();
        if (eat('^')) {
            skip_ws();
            size_t at = pos;
            unsigned long e = uint_literal("expected a nonnegative integer exponent");
            if (e > 1000) fail("exponent too large", at);
            return v.pow((unsigned)e);
        }
        return v;
    }

    unsigned long uint_literal(const char* what) {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
        if (pos == start) fail(what, start);
        return std::stoul(s.substr(start, pos - start));
    }

    FreeElement primary() {
        skip_ws();
        if (pos >= s.size()) fail("unexpected end of expression", pos);
        char c = s[pos];
        if (c == '(') {
            ++pos;
            FreeElement v = expr();
            if (!eat(')')) fail("expected ')'", pos);
            return v;
        }
        if (std::isdigit((unsigned char)c)) {
            mpz_class num(std::to_string(uint_literal("expected digits")));
            mpz_class den(1);
            size_t save = pos;
            if (eat('/')) {
                skip_ws();
                size_t at = pos;
                if (pos >= s.size() || !std::isdigit((unsigned char)s[pos])) {
                    // a '/' not followed by digits is not part of the literal
                    pos = save;
                } else {
                    den = mpz_class(std::to_string(uint_literal("expected digits")));
                    if (den == 0) fail("zero denominator in literal", at);
                }
            }
            return FreeElement::scalar(
                h, coerce_to(FieldScalar::rational(mpq_class(num, den)), h->field()), limit);
        }
        if (c == 'X') {
            size_t at = pos;
            ++pos;
            if (!eat('[')) fail("expected '[' after X", pos);
            size_t start = pos;
            while (pos < s.size() && s[pos] != ']') ++pos;
            if (pos >= s.size()) fail("unterminated generator label", start);
            std::string label = s.substr(start, pos - start);
            ++pos;  // ']'
            while (!label.empty() && std::isspace((unsigned char)label.front()))
                label.erase(label.begin());
            while (!label.empty() && std::isspace((unsigned char)label.back()))
                label.pop_back();
            auto idx = h->alg.basis_index(label);
            if (!idx) fail("unknown basis label '" + label + "'", at);
            return FreeElement::letter(h, *idx, limit);
        }
        fail(std::string("unexpected character '") + c + "'", pos);
    }
};

}  // namespace

FreeElement parse_expression(const std::string& src, const HopfPtr& h, unsigned degree_limit) {
    return ExprParser(src, h, degree_limit).parse();
}

}  // namespace hopfid
