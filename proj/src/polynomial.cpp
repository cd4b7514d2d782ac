#include "nzeta/polynomial.hpp"

#include <cctype>

namespace nzeta {

namespace {

template <class C>
std::string terms_to_string(const Polynomial<C>& p, char var) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : p.terms) {
        std::string cs = to_string(c);
        bool negative = cs[0] == '-';
        if (negative) cs = cs.substr(1);
        if (first) {
            if (negative) s += "-";
            first = false;
        } else {
            s += negative ? " - " : " + ";
        }
        std::string ms = m.str(var);
        if (ms == "1") {
            s += cs;
        } else if (cs == "1") {
            s += ms;
        } else {
            s += cs + "*" + ms;
        }
    }
    return s;
}

struct Lexer {
    const std::string& text;
    size_t pos = 0;

    explicit Lexer(const std::string& t) : text(t) {}

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= text.size();
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    bool accept(char c) {
        skip_ws();
        if (pos < text.size() && text[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    Int integer() {
        skip_ws();
        size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        require(pos > start, ErrorCode::Parse,
                "expected integer at position " + std::to_string(start) + " in '" + text + "'");
        return Int(text.substr(start, pos - start));
    }
};

}  // namespace

std::string poly_to_string(const RatPoly& p, char var) { return terms_to_string(p, var); }
std::string poly_to_string(const IntPoly& p, char var) { return terms_to_string(p, var); }

RatPoly parse_polynomial(const std::string& text, int nv, char var, bool allow_rational) {
    require(nv >= 1 && nv <= kMaxVars, ErrorCode::Parse, "variable count out of range");
    Lexer lx(text);
    std::vector<std::pair<Monomial, Rat>> terms;
    int deg = -1;

    bool lead_neg = lx.accept('-');
    for (;;) {
        Rat coeff = lead_neg ? Rat(-1) : Rat(1);
        lead_neg = false;
        bool saw_coeff = false;
        Monomial m(nv);

        if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
            Int num = lx.integer();
            Rat c(num);
            if (allow_rational && lx.accept('/')) {
                Int den = lx.integer();
                require(den != 0, ErrorCode::Parse, "zero denominator in coefficient");
                c = rat(num, den);
            }
            coeff *= c;
            saw_coeff = true;
        }
        bool saw_var = false;
        for (;;) {
            if (saw_coeff || saw_var) {
                size_t save = lx.pos;
                if (!lx.accept('*')) {
                    // also allow juxtaposition like 3x0
                    if (lx.peek() != var) break;
                } else if (lx.peek() != var) {
                    lx.pos = save;
                    break;
                }
            } else if (lx.peek() != var) {
                break;
            }
            lx.accept(var);
            int idx = 0;
            if (nv > 1) {
                Int i = lx.integer();
                require(i >= 0 && i < nv, ErrorCode::Parse, "variable index out of range");
                idx = static_cast<int>(i.get_si());
            } else {
                // single-variable polynomials (the number-field modulus) use a bare name
                if (std::isdigit(static_cast<unsigned char>(lx.peek()))) {
                    Int i = lx.integer();
                    require(i == 0, ErrorCode::Parse, "variable index out of range");
                }
            }
            int e = 1;
            if (lx.accept('^')) e = static_cast<int>(lx.integer().get_si());
            m.e[idx] = static_cast<uint16_t>(m.e[idx] + e);
            saw_var = true;
        }
        require(saw_coeff || saw_var, ErrorCode::Parse, "empty term in '" + text + "'");
        if (deg < 0)
            deg = m.degree();
        terms.emplace_back(m, coeff);

        if (lx.eof()) break;
        if (lx.accept('+')) {
            continue;
        } else if (lx.accept('-')) {
            lead_neg = true;
            continue;
        }
        fail(ErrorCode::Parse, "unexpected character at position " + std::to_string(lx.pos) +
                                   " in '" + text + "'");
    }

    int maxdeg = 0;
    for (auto& [m, c] : terms) maxdeg = std::max(maxdeg, m.degree());
    RatPoly p(nv, maxdeg);
    p.terms = std::move(terms);
    p.normalize();
    return p;
}

}  // namespace nzeta
