#include "gftk/parse.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace gftk {

namespace {

class XYParser {
public:
    explicit XYParser(std::string_view text) : s_(text) {}

    XYPoly run() {
        XYPoly p = expr();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw InvalidArgument("polynomial: " + what + " at position " + std::to_string(pos_));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    std::optional<char> peek() {
        skip_ws();
        return pos_ < s_.size() ? std::optional<char>(s_[pos_]) : std::nullopt;
    }

    bool eat(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    XYPoly expr() {
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        XYPoly acc = term();
        if (neg) acc = XYPoly::constant(-1) * acc;
        for (;;) {
            if (eat('+'))
                acc = acc + term();
            else if (eat('-'))
                acc = acc - term();
            else
                return acc;
        }
    }

    XYPoly term() {
        XYPoly acc = factor();
        while (eat('*')) acc = acc * factor();
        return acc;
    }

    XYPoly factor() {
        XYPoly base = atom();
        if (!eat('^')) return base;
        long e = exponent();
        XYPoly acc = XYPoly::constant(1);
        for (long i = 0; i < e; ++i) acc = acc * base;
        return acc;
    }

    long exponent() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start) fail("expected a nonnegative integer exponent");
        if (pos_ - start > 4) fail("exponent too large");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }

    XYPoly atom() {
        auto c = peek();
        if (!c) fail("unexpected end of input");
        if (*c == '(') {
            ++pos_;
            XYPoly p = expr();
            if (!eat(')')) fail("expected ')'");
            return p;
        }
        if (*c == 'x' || *c == 'y') {
            ++pos_;
            return XYPoly::variable(*c);
        }
        if (std::isdigit(static_cast<unsigned char>(*c))) return XYPoly::constant(number());
        fail(std::string("unexpected character '") + *c + "'");
    }

    // digits ('/' digits)?
    Rational number() {
        std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '/') {
            std::size_t save = pos_++;
            std::size_t dstart = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (pos_ == dstart) pos_ = save; // the '/' was not part of the literal
        }
        return rational_from_string(s_.substr(start, pos_ - start));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

} // namespace

XYPoly parse_xy(std::string_view text) { return XYParser(text).run(); }

std::vector<Rational> parse_coefficients(std::string_view text) {
    std::vector<Rational> out;
    std::optional<long> expect_index;
    std::istringstream in{std::string(text)};
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream row(line);
        std::string a, b, extra;
        row >> a >> b >> extra;
        auto fail = [&](const std::string& what) {
            throw InvalidArgument("coefficients line " + std::to_string(lineno) + ": " + what);
        };
        if (a.empty()) continue;
        if (!extra.empty()) fail("too many fields");
        if (b.empty()) {
            if (expect_index) fail("mixing plain and indexed rows");
            out.push_back(rational_from_string(a));
            continue;
        }
        if (!expect_index && !out.empty()) fail("mixing plain and indexed rows");
        Rational idx = rational_from_string(a);
        if (!is_integer(idx)) fail("index must be an integer");
        long n = static_cast<long>(idx.get_num().get_si());
        if (expect_index && n != *expect_index) fail("indices must be consecutive");
        expect_index = n + 1;
        out.push_back(rational_from_string(b));
    }
    return out;
}

std::vector<Rational> read_coefficients(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot open coefficient file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_coefficients(buf.str());
}

} // namespace gftk
