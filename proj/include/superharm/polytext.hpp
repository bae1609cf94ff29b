#pragma once

// Text form of superpolynomials:
//   poly := term (('+'|'-') term)* ; term := rational ['*' factor+] | factor+
//   factor := 'x'INT['^'INT] | 't'INT ; rational := INT['/'INT]
// e.g. "3/2*x1^2 x3 t1 t4 - t2 t3".

#include "superharm/superpoly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace superharm {

class ParseError : public std::invalid_argument {
public:
    ParseError(const std::string& what, std::size_t pos)
        : std::invalid_argument(what + " at offset " + std::to_string(pos)), pos_(pos) {}
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

namespace detail {

class PolyParser {
public:
    PolyParser(std::string_view text, SuperSignature sig) : s_(text), sig_(sig) {}

    SuperPolynomial parse() {
        SuperPolynomial result(sig_);
        skip();
        int sign = 1;
        if (peek() == '+' || peek() == '-') {
            sign = get() == '-' ? -1 : 1;
            skip();
        }
        result = add(result, scale(sign, term()));
        while (true) {
            skip();
            if (at_end()) break;
            char op = get();
            if (op != '+' && op != '-') throw ParseError("expected '+' or '-'", pos_ - 1);
            skip();
            result = add(result, scale(op == '-' ? -1 : 1, term()));
        }
        return result;
    }

private:
    SuperPolynomial term() {
        Rational coeff = 1;
        bool have_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = rational();
            have_coeff = true;
            skip();
            if (peek() != '*') {
                if (at_end() || peek() == '+' || peek() == '-') return SuperPolynomial::constant(sig_, coeff);
                throw ParseError("expected '*' after coefficient", pos_);
            }
            get();
            skip();
        }
        SuperPolynomial prod = SuperPolynomial::constant(sig_, coeff);
        int factors = 0;
        while (peek() == 'x' || peek() == 't') {
            prod = multiply(prod, factor());
            ++factors;
            skip();
        }
        if (factors == 0) throw ParseError(have_coeff ? "expected a factor" : "expected a term", pos_);
        return prod;
    }

    SuperPolynomial factor() {
        char kind = get();
        std::size_t at = pos_;
        long idx = integer();
        if (kind == 'x') {
            if (idx < 1 || idx > sig_.m) throw ParseError("bosonic index out of range", at);
            long power = 1;
            if (peek() == '^') {
                get();
                power = integer();
            }
            SuperPolynomial v = SuperPolynomial::x(sig_, static_cast<int>(idx));
            SuperPolynomial r = SuperPolynomial::constant(sig_, 1);
            for (long i = 0; i < power; ++i) r = multiply(r, v);
            return r;
        }
        if (idx < 1 || idx > sig_.fermion_count()) throw ParseError("fermionic index out of range", at);
        return SuperPolynomial::theta(sig_, static_cast<int>(idx));
    }

    Rational rational() {
        std::size_t start = pos_;
        digits();
        if (peek() == '/') {
            get();
            digits();
        }
        Rational q(std::string(s_.substr(start, pos_ - start)));
        if (q.get_den() == 0) throw ParseError("zero denominator", start);
        q.canonicalize();
        return q;
    }

    long integer() {
        std::size_t start = pos_;
        digits();
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }

    void digits() {
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError("expected digits", pos_);
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    }

    void skip() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return at_end() ? '\0' : s_[pos_]; }
    char get() { return s_[pos_++]; }

    std::string_view s_;
    SuperSignature sig_;
    std::size_t pos_ = 0;
};

inline std::string monomial_text(const SuperMonomial& mono) {
    std::string out;
    auto sep = [&out] {
        if (!out.empty()) out += ' ';
    };
    for (std::size_t j = 0; j < mono.exponents.size(); ++j) {
        if (mono.exponents[j] == 0) continue;
        sep();
        out += 'x' + std::to_string(j + 1);
        if (mono.exponents[j] > 1) out += '^' + std::to_string(mono.exponents[j]);
    }
    for (std::uint64_t rest = mono.fermions; rest; rest &= rest - 1) {
        sep();
        out += 't' + std::to_string(std::countr_zero(rest) + 1);
    }
    return out;
}

} // namespace detail

inline SuperPolynomial parse_polynomial(std::string_view text, SuperSignature sig) {
    return detail::PolyParser(text, sig).parse();
}

/// Terms in canonical monomial order; "0" for the zero polynomial.
inline std::string to_text(const SuperPolynomial& p) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, c] : p.terms()) {
        Rational mag = abs(c);
        if (first) {
            if (sgn(c) < 0) out += '-';
        } else {
            out += sgn(c) < 0 ? " - " : " + ";
        }
        first = false;
        std::string body = detail::monomial_text(mono);
        if (body.empty()) {
            out += mag.get_str();
        } else if (mag == 1) {
            out += body;
        } else {
            out += mag.get_str() + '*' + body;
        }
    }
    return out;
}

} // namespace superharm
