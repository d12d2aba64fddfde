#include "mbqc/angle_expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace mbqc {

namespace {

struct Parser {
    const std::string& text;
    const std::map<std::string, double>& params;
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

    [[noreturn]] void fail(const std::string& what) const {
        throw std::runtime_error("angle '" + text + "': " + what);
    }

    double parse_expr() {
        double v = parse_term();
        while (true) {
            if (eat('+')) v += parse_term();
            else if (eat('-')) v -= parse_term();
            else return v;
        }
    }

    double parse_term() {
        double v = parse_factor();
        while (true) {
            if (eat('*')) v *= parse_factor();
            else if (eat('/')) {
                const double d = parse_factor();
                if (d == 0.0) fail("division by zero");
                v /= d;
            } else {
                return v;
            }
        }
    }

    double parse_factor() {
        skip_ws();
        if (eat('-')) return -parse_factor();
        if (eat('+')) return parse_factor();
        if (eat('(')) {
            const double v = parse_expr();
            if (!eat(')')) fail("missing ')'");
            return v;
        }
        if (pos >= text.size()) fail("unexpected end");
        const char c = text[pos];
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            char* end = nullptr;
            const double v = std::strtod(text.c_str() + pos, &end);
            if (end == text.c_str() + pos) fail("bad number");
            pos = end - text.c_str();
            return v;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos;
            while (pos < text.size() &&
                   (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
                ++pos;
            }
            const std::string name = text.substr(start, pos - start);
            if (name == "pi") return 3.141592653589793238462643383279;
            const auto it = params.find(name);
            if (it == params.end()) fail("unknown name '" + name + "'");
            return it->second;
        }
        fail(std::string("unexpected character '") + c + "'");
    }
};

}  // namespace

double parse_angle(const std::string& text, const std::map<std::string, double>& params) {
    Parser p{text, params};
    const double v = p.parse_expr();
    p.skip_ws();
    if (p.pos != text.size()) p.fail("trailing input");
    if (!std::isfinite(v)) p.fail("non-finite value");
    return v;
}

}  // namespace mbqc
