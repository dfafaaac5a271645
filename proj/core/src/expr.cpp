#include "dq/expr.hpp"

#include "dq/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <tuple>
#include <vector>

namespace dq {

namespace {

enum class Tok { number, ident, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::size_t pos;
    std::string_view text;
    double value = 0.0;
    bool integral = false;
};

std::vector<Token> tokenize(std::string_view s) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < s.size()) {
        const char c = s[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        const std::size_t start = i;
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
            bool integral = true;
            while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            if (i < s.size() && s[i] == '.') {
                integral = false;
                ++i;
                while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
            }
            if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
                std::size_t j = i + 1;
                if (j < s.size() && (s[j] == '+' || s[j] == '-')) ++j;
                if (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) {
                    integral = false;
                    i = j;
                    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
                }
            }
            std::string lit(s.substr(start, i - start));
            if (lit == ".") throw ParseError("malformed number", start);
            Token t{Tok::number, start, s.substr(start, i - start)};
            t.value = std::strtod(lit.c_str(), nullptr);
            t.integral = integral;
            out.push_back(t);
            continue;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
            out.push_back({Tok::ident, start, s.substr(start, i - start)});
            continue;
        }
        Tok kind;
        switch (c) {
            case '+': kind = Tok::plus; break;
            case '-': kind = Tok::minus; break;
            case '*': kind = Tok::star; break;
            case '/': kind = Tok::slash; break;
            case '^': kind = Tok::caret; break;
            case '(': kind = Tok::lparen; break;
            case ')': kind = Tok::rparen; break;
            default: throw ParseError(std::string("unexpected character '") + c + "'", start);
        }
        out.push_back({kind, start, s.substr(start, 1)});
        ++i;
    }
    out.push_back({Tok::end, s.size(), {}});
    return out;
}

class Parser {
public:
    Parser(std::vector<Token> tokens, Basis basis) : toks_(std::move(tokens)), basis_(basis) {}

    PhasePoly parse() {
        PhasePoly result = expr();
        if (peek().kind != Tok::end) {
            if (peek().kind == Tok::rparen) throw ParseError("unbalanced ')'", peek().pos);
            throw ParseError("expected an operator (implicit multiplication is not allowed)", peek().pos);
        }
        return result;
    }

private:
    const Token& peek() const { return toks_[idx_]; }
    const Token& next() { return toks_[idx_++]; }

    PhasePoly expr() {
        PhasePoly acc = term();
        while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
            const bool minus = next().kind == Tok::minus;
            PhasePoly rhs = term();
            if (minus) {
                acc -= rhs;
            } else {
                acc += rhs;
            }
        }
        return acc;
    }

    PhasePoly term() {
        PhasePoly acc = unary();
        while (peek().kind == Tok::star || peek().kind == Tok::slash) {
            const Token op = next();
            const std::size_t rhs_pos = peek().pos;
            PhasePoly rhs = unary();
            if (op.kind == Tok::star) {
                acc = acc * rhs;
            } else {
                acc = acc * (cplx(1.0) / constant_value(rhs, rhs_pos));
            }
        }
        return acc;
    }

    cplx constant_value(const PhasePoly& f, std::size_t pos) const {
        if (f.is_zero()) throw ParseError("division by zero", pos);
        if (f.terms().size() != 1 || f.terms().begin()->first != Exponents{0, 0} ||
            f.hbar_degree() != 0) {
            throw ParseError("divisor must be a numeric constant", pos);
        }
        return f.terms().begin()->second.coefficient(0);
    }

    PhasePoly unary() {
        if (peek().kind == Tok::minus) {
            next();
            return -unary();
        }
        if (peek().kind == Tok::plus) {
            next();
            return unary();
        }
        return power();
    }

    PhasePoly power() {
        PhasePoly base = primary();
        if (peek().kind == Tok::caret) {
            next();
            const Token& t = peek();
            if (t.kind == Tok::minus) throw ParseError("negative exponent", t.pos);
            if (t.kind != Tok::number || !t.integral) {
                throw ParseError("exponent must be a non-negative integer literal", t.pos);
            }
            next();
            if (t.value >= kMaxExponent) {
                throw ParseError("exponent exceeds the per-variable bound " + std::to_string(kMaxExponent - 1),
                                 t.pos);
            }
            return base.pow(static_cast<int>(t.value));
        }
        return base;
    }

    PhasePoly primary() {
        const Token t = next();
        switch (t.kind) {
            case Tok::number:
                return PhasePoly::constant(t.value, basis_);
            case Tok::ident:
                return identifier(t);
            case Tok::lparen: {
                PhasePoly inner = expr();
                if (peek().kind != Tok::rparen) throw ParseError("expected ')'", peek().pos);
                next();
                return inner;
            }
            case Tok::end:
                throw ParseError("unexpected end of expression", t.pos);
            default:
                throw ParseError("unexpected '" + std::string(t.text) + "'", t.pos);
        }
    }

    PhasePoly identifier(const Token& t) const {
        const std::string_view name = t.text;
        if (name == "hbar") return PhasePoly::hbar(basis_);
        if (name == "i") return PhasePoly::constant(cplx(0.0, 1.0), basis_);
        Var var;
        if (name == "q") {
            var = Var::q;
        } else if (name == "p") {
            var = Var::p;
        } else if (name == "a") {
            var = Var::a;
        } else if (name == "abar") {
            var = Var::abar;
        } else {
            throw ParseError("unknown identifier '" + std::string(name) + "'", t.pos);
        }
        if (basis_of(var) != basis_) {
            throw ParseError("variable '" + std::string(name) + "' is not part of the " +
                                 std::string(to_string(basis_)) + " basis",
                             t.pos);
        }
        return PhasePoly::variable(var);
    }

    std::vector<Token> toks_;
    std::size_t idx_ = 0;
    Basis basis_;
};

// Recognises |v| = n/d with small d. Returns {n, d} or nullopt.
std::optional<std::pair<long long, long long>> as_rational(double v) {
    if (!std::isfinite(v) || v > 1e12) return std::nullopt;
    for (long long d = 1; d <= 720; ++d) {
        const double scaled = v * static_cast<double>(d);
        const double n = std::round(scaled);
        if (std::abs(scaled - n) <= 1e-12 * std::max(1.0, std::abs(scaled))) {
            return std::make_pair(static_cast<long long>(n), d);
        }
    }
    return std::nullopt;
}

std::string decimal(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// Magnitude m > 0 of a real coefficient, without parentheses.
std::string real_magnitude(double m) {
    if (auto r = as_rational(m)) {
        if (r->second == 1) return std::to_string(r->first);
        return std::to_string(r->first) + "/" + std::to_string(r->second);
    }
    return decimal(m);
}

// Magnitude m > 0 of an imaginary coefficient i*m, without parentheses.
std::string imag_magnitude(double m) {
    if (auto r = as_rational(m)) {
        const std::string num = r->first == 1 ? "i" : std::to_string(r->first) + "*i";
        if (r->second == 1) return num;
        return num + "/" + std::to_string(r->second);
    }
    return decimal(m) + "*i";
}

struct FormattedCoefficient {
    bool negative = false;
    std::string body;      // empty when the magnitude is 1 and there are other factors
    bool compound = false; // body contains a '/' or '+' and needs parentheses as a factor
};

FormattedCoefficient format_parts(cplx c, bool has_factors) {
    FormattedCoefficient out;
    if (c.imag() == 0.0) {
        out.negative = c.real() < 0.0;
        const double m = std::abs(c.real());
        if (m == 1.0 && has_factors) return out;
        out.body = real_magnitude(m);
    } else if (c.real() == 0.0) {
        out.negative = c.imag() < 0.0;
        out.body = imag_magnitude(std::abs(c.imag()));
    } else {
        const std::string re = (c.real() < 0 ? "-" : "") + real_magnitude(std::abs(c.real()));
        const std::string im = imag_magnitude(std::abs(c.imag()));
        out.body = "(" + re + (c.imag() < 0 ? " - " : " + ") + im + ")";
        return out;
    }
    out.compound = out.body.find('/') != std::string::npos;
    return out;
}

}  // namespace

PhasePoly parse_expr(std::string_view text, Basis basis) {
    return Parser(tokenize(text), basis).parse();
}

PhasePoly parse_expr(std::string_view text) {
    std::vector<Token> tokens = tokenize(text);
    std::optional<Basis> basis;
    for (const Token& t : tokens) {
        if (t.kind != Tok::ident) continue;
        std::optional<Basis> b;
        if (t.text == "q" || t.text == "p") b = Basis::canonical;
        if (t.text == "a" || t.text == "abar") b = Basis::holomorphic;
        if (!b) continue;
        if (basis && *basis != *b) {
            throw ParseError("expression mixes canonical and holomorphic variables", t.pos);
        }
        basis = b;
    }
    return Parser(std::move(tokens), basis.value_or(Basis::canonical)).parse();
}

std::string format_coefficient(cplx c) {
    FormattedCoefficient f = format_parts(c, false);
    return (f.negative ? "-" : "") + f.body;
}

std::string to_string(const PhasePoly& f) {
    struct Entry {
        Exponents e;
        int k;
        cplx c;
    };
    std::vector<Entry> entries;
    for (const auto& [e, hp] : f.terms()) {
        for (const auto& [k, c] : hp.coefficients()) entries.push_back({e, k, c});
    }
    if (entries.empty()) return "0";
    std::sort(entries.begin(), entries.end(), [](const Entry& l, const Entry& r) {
        if (l.e.total() != r.e.total()) return l.e.total() > r.e.total();
        if (l.e.x != r.e.x) return l.e.x > r.e.x;
        return l.k < r.k;
    });

    const bool holo = f.basis() == Basis::holomorphic;
    const char* xname = holo ? "a" : "q";
    const char* yname = holo ? "abar" : "p";

    std::string out;
    bool first = true;
    for (const Entry& t : entries) {
        std::vector<std::string> factors;
        auto push_power = [&factors](const char* name, int n) {
            if (n == 0) return;
            factors.push_back(n == 1 ? std::string(name) : std::string(name) + "^" + std::to_string(n));
        };
        push_power(xname, t.e.x);
        push_power(yname, t.e.y);
        push_power("hbar", t.k);

        FormattedCoefficient coef = format_parts(t.c, !factors.empty());
        std::string body;
        if (!coef.body.empty()) {
            body = (coef.compound && !factors.empty()) ? "(" + coef.body + ")" : coef.body;
        }
        for (const std::string& fac : factors) {
            if (!body.empty()) body += "*";
            body += fac;
        }
        if (first) {
            out += (coef.negative ? "-" : "") + body;
            first = false;
        } else {
            out += (coef.negative ? " - " : " + ") + body;
        }
    }
    return out;
}

}  // namespace dq
