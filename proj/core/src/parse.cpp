#include "pviheat/parse.hpp"

#include <cctype>

#include "pviheat/errors.hpp"

namespace pviheat {
namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool eat(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    [[noreturn]] void fail(const std::string& what) {
        throw ParseError(what + " at offset " + std::to_string(pos));
    }

    RatFunc parse_sum() {
        RatFunc lhs = peek() == '-' && (eat('-'), true) ? -parse_product() : parse_product();
        while (true) {
            if (eat('+')) {
                lhs += parse_product();
            } else if (eat('-')) {
                lhs -= parse_product();
            } else {
                return lhs;
            }
        }
    }

    RatFunc parse_product() {
        RatFunc lhs = parse_power();
        while (true) {
            if (eat('*')) {
                lhs *= parse_power();
            } else if (eat('/')) {
                lhs /= parse_power();
            } else {
                return lhs;
            }
        }
    }

    RatFunc parse_power() {
        RatFunc base = parse_atom();
        if (eat('^')) {
            bool neg = eat('-');
            long e = parse_integer();
            return base.pow(static_cast<int>(neg ? -e : e));
        }
        return base;
    }

    long parse_integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) fail("expected integer");
        return std::stol(std::string(text.substr(start, pos - start)));
    }

    RatFunc parse_atom() {
        skip_ws();
        if (pos >= text.size()) fail("unexpected end of input");
        char ch = text[pos];
        if (ch == '(') {
            ++pos;
            RatFunc inner = parse_sum();
            if (!eat(')')) fail("expected ')'");
            return inner;
        }
        if (ch == '-') {
            ++pos;
            return -parse_atom();
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            return RatFunc(Rational(parse_integer()));
        }
        if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
                ++pos;
            std::string name(text.substr(start, pos - start));
            auto v = var_from_name(name);
            if (!v) fail("unknown variable '" + name + "'");
            return RatFunc::variable(*v);
        }
        fail(std::string("unexpected character '") + ch + "'");
    }
};

}  // namespace

RatFunc parse_expr(std::string_view text) {
    Parser p{text};
    RatFunc f = p.parse_sum();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    return f;
}

std::string print_expr(const RatFunc& f) { return f.to_string(); }

}  // namespace pviheat
