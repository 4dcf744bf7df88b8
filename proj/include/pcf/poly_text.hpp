#pragma once

#include "pcf/numeric.hpp"
#include "pcf/poly.hpp"

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pcf {

struct PolyParseError : std::runtime_error {
    explicit PolyParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Human form, highest degree first: "-2*z^3 + 3*z^2 + 1/2". Round-trips
/// bit-exactly through parse_poly.
inline std::string poly_to_text(const Poly<Rational>& f) {
    if (f.is_zero()) return "0";
    std::string out;
    for (int i = f.degree(); i >= 0; --i) {
        Rational c = f.coeff(i);
        if (c == 0) continue;
        bool first = out.empty();
        bool neg = c < 0;
        Rational mag = abs(c);
        if (first)
            out += neg ? "-" : "";
        else
            out += neg ? " - " : " + ";
        if (i == 0) {
            out += to_string(mag);
        } else {
            if (mag != 1) out += to_string(mag) + "*";
            out += "z";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

/// Coefficient-list form "[a0, a1, a2, a3]".
inline std::string poly_to_coeff_list(const Poly<Rational>& f) {
    std::string out = "[";
    for (int i = 0; i <= f.degree(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(f.coeff(i));
    }
    return out + "]";
}

namespace detail {

class PolyScanner {
public:
    explicit PolyScanner(std::string_view s) : s_(s) {}

    Poly<Rational> parse() {
        skip_ws();
        Poly<Rational> f = peek() == '[' ? parse_list() : parse_sum();
        skip_ws();
        if (pos_ != s_.size()) fail("trailing input");
        return f;
    }

private:
    Poly<Rational> parse_list() {
        expect('[');
        std::vector<Rational> coeffs;
        skip_ws();
        if (peek() == ']') {
            ++pos_;
            return Poly<Rational>(coeffs);
        }
        for (;;) {
            coeffs.push_back(parse_signed_rational());
            skip_ws();
            if (peek() == ',') {
                ++pos_;
                continue;
            }
            expect(']');
            return Poly<Rational>(coeffs);
        }
    }

    Poly<Rational> parse_sum() {
        std::vector<Rational> coeffs;
        auto add = [&](int power, const Rational& c) {
            if (power >= static_cast<int>(coeffs.size())) coeffs.resize(power + 1, Rational(0));
            coeffs[power] += c;
        };
        bool first = true;
        for (;;) {
            skip_ws();
            int sgn = 1;
            if (peek() == '+' || peek() == '-') {
                sgn = peek() == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                break;
            }
            auto [power, c] = parse_term();
            add(power, sgn * c);
            first = false;
            skip_ws();
            if (pos_ == s_.size()) break;
        }
        return Poly<Rational>(coeffs);
    }

    // one of: "5", "5/2", "5*z^3", "5z^3", "z^3", "z"
    std::pair<int, Rational> parse_term() {
        skip_ws();
        Rational coef(1);
        bool saw_coef = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coef = parse_rational();
            saw_coef = true;
            skip_ws();
            if (peek() == '*') {
                ++pos_;
                skip_ws();
            }
        }
        if (peek() == 'z') {
            ++pos_;
            int power = 1;
            skip_ws();
            if (peek() == '^') {
                ++pos_;
                skip_ws();
                power = static_cast<int>(parse_uint());
            }
            return {power, coef};
        }
        if (!saw_coef) fail("expected coefficient or 'z'");
        return {0, coef};
    }

    Rational parse_signed_rational() {
        skip_ws();
        int sgn = 1;
        if (peek() == '+' || peek() == '-') {
            sgn = peek() == '-' ? -1 : 1;
            ++pos_;
            skip_ws();
        }
        return sgn * parse_rational();
    }

    Rational parse_rational() {
        Int n = parse_uint();
        skip_ws();
        if (peek() == '/') {
            ++pos_;
            skip_ws();
            Int d = parse_uint();
            if (d == 0) fail("zero denominator");
            return Rational(n, d);
        }
        return Rational(n);
    }

    Int parse_uint() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected digit");
        Int v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            ++pos_;
        }
        return v;
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw PolyParseError("polynomial parse error at position " + std::to_string(pos_) + ": " +
                             msg);
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace detail

/// Accepts both the human form and the coefficient-list form.
inline Poly<Rational> parse_poly(std::string_view text) {
    return detail::PolyScanner(text).parse();
}

}  // namespace pcf
