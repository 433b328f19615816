#include "subfield/poly.hpp"

#include <algorithm>
#include <cctype>

namespace subfield {

void poly_trim(FieldPoly& a) {
    while (!a.empty() && a.back().is_zero())
        a.pop_back();
}

int poly_degree(const FieldPoly& a) { return static_cast<int>(a.size()) - 1; }

FieldPoly poly_add(const FieldPoly& a, const FieldPoly& b) {
    const FieldPoly& lo = a.size() <= b.size() ? a : b;
    const FieldPoly& hi = a.size() <= b.size() ? b : a;
    FieldPoly out = hi;
    for (std::size_t i = 0; i < lo.size(); ++i)
        out[i] = out[i] + lo[i];
    poly_trim(out);
    return out;
}

FieldPoly poly_mul(const FieldPoly& a, const FieldPoly& b, const FieldSpec& spec) {
    if (a.empty() || b.empty())
        return {};
    FieldPoly c(a.size() + b.size() - 1, spec.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = c[i + j] + a[i] * b[j];
    }
    poly_trim(c);
    return c;
}

std::pair<FieldPoly, FieldPoly> poly_divmod(const FieldPoly& num, const FieldPoly& den,
                                            const FieldSpec& spec) {
    FieldPoly d = den;
    poly_trim(d);
    if (d.empty())
        throw DivisionByZeroError("polynomial division by zero");
    FieldPoly r = num;
    poly_trim(r);
    if (r.size() < d.size())
        return {{}, r};
    FieldPoly q(r.size() - d.size() + 1, spec.zero());
    FieldElement lead_inv = inv(d.back());
    while (r.size() >= d.size()) {
        FieldElement c = r.back() * lead_inv;
        std::size_t shift = r.size() - d.size();
        q[shift] = c;
        for (std::size_t i = 0; i < d.size(); ++i)
            r[i + shift] = r[i + shift] - c * d[i];
        poly_trim(r);
        if (r.empty())
            break;
    }
    poly_trim(q);
    return {q, r};
}

bool poly_divides(const FieldPoly& den, const FieldPoly& num, const FieldSpec& spec) {
    auto [q, r] = poly_divmod(num, den, spec);
    (void)q;
    return r.empty();
}

FieldPoly poly_xn_minus_one(const FieldSpec& spec, int n) {
    FieldPoly f(static_cast<std::size_t>(n) + 1, spec.zero());
    f[0] = -spec.one();
    f[static_cast<std::size_t>(n)] = spec.one();
    return f;
}

namespace {

// one term: [coef]['*']["x"["^"k]]
void parse_term(const FieldSpec& spec, const std::string& term, bool negate, FieldPoly& acc) {
    std::string s;
    for (char c : term)
        if (!std::isspace(static_cast<unsigned char>(c)))
            s += c;
    if (s.empty())
        throw ParseError("empty polynomial term");
    FieldElement coef = spec.one();
    std::size_t xpos = s.find('x');
    unsigned long expo = 0;
    if (xpos == std::string::npos) {
        coef = spec.parse_element(s);
    } else {
        std::string cpart = s.substr(0, xpos);
        if (!cpart.empty() && cpart.back() == '*')
            cpart.pop_back();
        if (!cpart.empty())
            coef = spec.parse_element(cpart);
        std::string epart = s.substr(xpos + 1);
        if (epart.empty()) {
            expo = 1;
        } else {
            if (epart[0] != '^')
                throw ParseError("bad polynomial term '" + term + "'");
            try {
                std::size_t used = 0;
                expo = std::stoul(epart.substr(1), &used);
                if (used != epart.size() - 1)
                    throw ParseError("bad exponent in '" + term + "'");
            } catch (const ParseError&) {
                throw;
            } catch (...) {
                throw ParseError("bad exponent in '" + term + "'");
            }
        }
    }
    if (negate)
        coef = -coef;
    if (acc.size() < expo + 1)
        acc.resize(expo + 1, spec.zero());
    acc[expo] = acc[expo] + coef;
}

}  // namespace

FieldPoly parse_polynomial(const FieldSpec& spec, const std::string& text) {
    FieldPoly acc;
    std::string cur;
    bool negate = false;
    bool seen_term = false;
    auto blank = [](const std::string& s) {
        return s.find_first_not_of(" \t") == std::string::npos;
    };
    for (char c : text) {
        if (c == '+' || c == '-') {
            if (blank(cur)) {
                if (!seen_term && !negate && c == '-') {
                    negate = true;  // leading sign
                    continue;
                }
                throw ParseError("misplaced sign in '" + text + "'");
            }
            parse_term(spec, cur, negate, acc);
            seen_term = true;
            cur.clear();
            negate = (c == '-');
        } else {
            cur += c;
        }
    }
    if (blank(cur))
        throw ParseError("empty or unterminated polynomial '" + text + "'");
    parse_term(spec, cur, negate, acc);
    poly_trim(acc);
    return acc;
}

std::string format_polynomial(const FieldPoly& a) {
    if (a.empty())
        return "0";
    std::string out;
    for (int d = poly_degree(a); d >= 0; --d) {
        const FieldElement& c = a[static_cast<std::size_t>(d)];
        if (c.is_zero())
            continue;
        if (!out.empty())
            out += "+";
        std::string ctext = c.spec()->format_element(c);
        if (d == 0) {
            out += ctext;
        } else {
            if (ctext != "1")
                out += ctext + "*";
            out += (d == 1) ? "x" : "x^" + std::to_string(d);
        }
    }
    return out;
}

}  // namespace subfield
