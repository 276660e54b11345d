#pragma once

#include <cctype>
#include <sstream>
#include <string>
#include <vector>

#include "grading.hpp"
#include "hilbert.hpp"
#include "polynomial.hpp"
#include "term_order.hpp"

namespace mdlab {

struct ParseError : std::runtime_error {
    int line, col;
    ParseError(int line_, int col_, const std::string& msg)
        : std::runtime_error("parse error at " + std::to_string(line_) + ":" +
                             std::to_string(col_) + ": " + msg),
          line(line_),
          col(col_) {}
};

// ---- printing ----------------------------------------------------------

// Canonical form: terms sorted descending by the given order (default lex),
// coefficients as p/q.
inline std::string to_string(const Polynomial& p, const TermOrder& ord = TermOrder::lex()) {
    if (p.is_zero()) return "0";
    std::vector<const std::pair<const Monomial, Rational>*> ts;
    for (const auto& t : p.terms()) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(),
              [&ord](auto* a, auto* b) { return ord.greater(a->first, b->first); });
    std::string s;
    for (const auto* t : ts) {
        const auto& [m, c] = *t;
        Rational a = c > 0 ? c : Rational(-c);
        if (s.empty())
            s += (c < 0 ? "-" : "");
        else
            s += (c < 0 ? " - " : " + ");
        if (m.is_one())
            s += rat_str(a);
        else if (a == 1)
            s += to_string(m);
        else
            s += rat_str(a) + "*" + to_string(m);
    }
    return s;
}

// ---- expression parsing --------------------------------------------------
// Grammar: variables x(i,j) and Z(j), integer (or integer/integer) literals,
// + - * ^ and parentheses.

namespace detail {

class ExprParser {
public:
    ExprParser(const std::string& text, int line = 1) : text_(text), line_(line) {}

    Polynomial parse() {
        Polynomial p = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return p;
    }

private:
    Polynomial expr() {
        skip_ws();
        bool neg = false;
        while (peek() == '+' || peek() == '-') {
            if (get() == '-') neg = !neg;
            skip_ws();
        }
        Polynomial p = product();
        if (neg) p = -p;
        for (;;) {
            skip_ws();
            char c = peek();
            if (c != '+' && c != '-') break;
            get();
            Polynomial q = product();
            p += (c == '+') ? q : -q;
        }
        return p;
    }

    Polynomial product() {
        Polynomial p = power();
        for (;;) {
            skip_ws();
            if (peek() != '*') break;
            get();
            p *= power();
        }
        return p;
    }

    Polynomial power() {
        Polynomial p = atom();
        skip_ws();
        if (peek() == '^') {
            get();
            skip_ws();
            long e = integer();
            if (e < 0) fail("negative exponent");
            p = p.pow(static_cast<int>(e));
        }
        return p;
    }

    Polynomial atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            get();
            Polynomial p = expr();
            expect(')');
            return p;
        }
        if (c == '-') {  // unary minus inside a product
            get();
            return -atom();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            long num = integer();
            skip_ws();
            if (peek() == '/') {
                get();
                skip_ws();
                long den = integer();
                if (den == 0) fail("zero denominator");
                return Polynomial::constant(rat(num, den));
            }
            return Polynomial::constant(rat(num));
        }
        if (c == 'x' || c == 'Z' || c == 't' || c == 'a') return Polynomial::variable(variable());
        fail("expected variable, number or '('");
        return {};
    }

    Variable variable() {
        char name = get();
        expect('(');
        skip_ws();
        long i = integer();
        if (name == 'x') {
            skip_ws();
            expect(',');
            skip_ws();
            long j = integer();
            expect(')');
            if (i < 0 || j < 1) fail("variable index out of range");
            return xvar(static_cast<int>(i), static_cast<int>(j));
        }
        expect(')');
        if (i < 1) fail("variable index out of range");
        if (name == 'Z') return zvar(static_cast<int>(i));
        if (name == 't') return elim_var(static_cast<int>(i));
        return scalar_var(static_cast<int>(i));
    }

    long integer() {
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected integer");
        long v = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            v = v * 10 + (get() - '0');
            if (v > 1000000000L) fail("integer literal too large");
        }
        return v;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() {
        char c = peek();
        if (pos_ < text_.size()) ++pos_, ++col_;
        return c;
    }
    void expect(char c) {
        skip_ws();
        if (peek() != c) fail(std::string("expected '") + c + "'");
        get();
    }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            if (text_[pos_] == '\n') ++line_, col_ = 0;
            ++pos_, ++col_;
        }
    }
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col_, msg); }

    const std::string& text_;
    std::size_t pos_ = 0;
    int line_, col_ = 1;
};

}  // namespace detail

inline Polynomial parse_polynomial(const std::string& text, int line = 1) {
    return detail::ExprParser(text, line).parse();
}

// Monomial ideals print and parse as bracketed generator lists in the core
// grammar, e.g. [x(1,1)*x(1,2), x(2,1)]. The zero ideal is [].
inline std::string to_string(const MonomialIdeal& J) {
    std::string s = "[";
    for (const auto& m : J.generators()) {
        if (s.size() > 1) s += ", ";
        s += to_string(m);
    }
    return s + "]";
}

inline MonomialIdeal parse_monomial_ideal(const std::string& text, int line = 1) {
    auto first = text.find_first_not_of(" \t");
    auto last = text.find_last_not_of(" \t\r\n");
    if (first == std::string::npos || text[first] != '[' || text[last] != ']')
        throw ParseError(line, 1, "monomial ideal must be bracketed: [gen, gen, ...]");
    std::string inner = text.substr(first + 1, last - first - 1);
    std::vector<Monomial> gens;
    int depth = 0;
    std::string piece;
    auto flush = [&]() {
        if (piece.find_first_not_of(" \t") == std::string::npos) return;
        Polynomial p = parse_polynomial(piece, line);
        if (p.is_zero()) return;
        if (p.size() != 1)
            throw ParseError(line, 1, "monomial ideal generators must be single terms");
        gens.push_back(p.terms().begin()->first);
        piece.clear();
    };
    for (char c : inner) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            flush();
            piece.clear();
            continue;
        }
        piece += c;
    }
    flush();
    return MonomialIdeal(std::move(gens));
}

// ---- ideal files -----------------------------------------------------------
// Header lines declare the grid and options, then one generator per line:
//   grid <m> <n>          rows 1..m, columns 1..n
//   homrow                add the homogenizing row 0
//   homogenize            CLI flag: homogenize the ideal after parsing
//   order lex|degrevlex [<var> ...]   optional descending priority
// Blank lines and lines starting with '#' are skipped.

struct IdealFile {
    Grading grading;
    TermOrder order = TermOrder::lex();
    bool homogenize = false;
    std::vector<Polynomial> generators;
};

inline IdealFile parse_ideal_file(std::istream& in) {
    IdealFile out;
    bool have_grid = false;
    std::string lineText;
    int lineNo = 0;
    while (std::getline(in, lineText)) {
        ++lineNo;
        std::string trimmed = lineText;
        auto first = trimmed.find_first_not_of(" \t\r");
        if (first == std::string::npos) continue;
        trimmed = trimmed.substr(first);
        if (trimmed[0] == '#') continue;

        std::istringstream ls(trimmed);
        std::string head;
        ls >> head;
        if (head == "grid") {
            int m = 0, n = 0;
            if (!(ls >> m >> n) || m < 1 || n < 1)
                throw ParseError(lineNo, 1, "grid needs two positive integers");
            out.grading = Grading::grid(m, n);
            have_grid = true;
        } else if (head == "homrow") {
            if (!have_grid) throw ParseError(lineNo, 1, "homrow before grid");
            out.grading = out.grading.with_homogenizing_row();
        } else if (head == "homogenize") {
            out.homogenize = true;
        } else if (head == "order") {
            std::string kind;
            ls >> kind;
            if (kind == "lex")
                out.order = TermOrder::lex();
            else if (kind == "degrevlex")
                out.order = TermOrder::degrevlex();
            else
                throw ParseError(lineNo, 1, "unknown order '" + kind + "'");
            std::vector<Variable> prio;
            std::string tok;
            while (ls >> tok) {
                Polynomial v = parse_polynomial(tok, lineNo);
                if (v.size() != 1 || v.terms().begin()->first.exponents().size() != 1)
                    throw ParseError(lineNo, 1, "order priority entries must be variables");
                prio.push_back(v.terms().begin()->first.exponents()[0].first);
            }
            if (!prio.empty()) out.order = out.order.with_priority(std::move(prio));
        } else {
            if (!have_grid) throw ParseError(lineNo, 1, "generator before grid header");
            Polynomial g = parse_polynomial(trimmed, lineNo);
            for (Variable v : g.support())
                if (!out.grading.contains(v))
                    throw ParseError(lineNo, 1, "unknown variable " + to_string(v));
            if (!g.is_zero()) out.generators.push_back(std::move(g));
        }
    }
    if (!have_grid) throw ParseError(lineNo ? lineNo : 1, 1, "missing grid header");
    return out;
}

}  // namespace mdlab
