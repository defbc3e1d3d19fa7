#include "curveh/parser.hpp"

#include <cctype>
#include <map>

namespace curveh {

namespace {

constexpr int kMaxExponent = 256;

// Expression values are not necessarily homogeneous until the end.
using Sparse = std::map<Monomial, mpq_class, GrlexDescending>;

void accumulate(Sparse& into, const Monomial& m, const mpq_class& c)
{
    if (sgn(c) == 0) return;
    auto [it, inserted] = into.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) into.erase(it);
    }
}

Sparse product(const Sparse& a, const Sparse& b)
{
    Sparse r;
    for (const auto& [ma, ca] : a) {
        for (const auto& [mb, cb] : b) accumulate(r, ma.times(mb), ca * cb);
    }
    return r;
}

Sparse constant(const mpq_class& c)
{
    Sparse r;
    accumulate(r, Monomial(), c);
    return r;
}

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Sparse parse()
    {
        skip_space();
        if (at_end()) throw ParseError(pos_, "empty expression");
        Sparse v = expression();
        skip_space();
        if (!at_end()) throw ParseError(pos_, std::string("unexpected '") + text_[pos_] + "'");
        return v;
    }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_space()
    {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    static bool is_var(char c) { return c == 'x' || c == 'y' || c == 'z'; }
    static bool starts_factor(char c)
    {
        return is_var(c) || c == '(' || std::isdigit(static_cast<unsigned char>(c));
    }

    Sparse expression()
    {
        Sparse acc = term();
        for (;;) {
            skip_space();
            char c = peek();
            if (c != '+' && c != '-') return acc;
            ++pos_;
            Sparse rhs = term();
            for (const auto& [m, k] : rhs) accumulate(acc, m, c == '+' ? mpq_class(k) : mpq_class(-k));
        }
    }

    Sparse term()
    {
        Sparse acc = unary();
        for (;;) {
            skip_space();
            char c = peek();
            if (c == '*') {
                ++pos_;
                acc = product(acc, unary());
            } else if (starts_factor(c)) {
                acc = product(acc, power());
            } else {
                return acc;
            }
        }
    }

    Sparse unary()
    {
        skip_space();
        char c = peek();
        if (c == '-' || c == '+') {
            ++pos_;
            Sparse v = unary();
            if (c == '-') {
                for (auto& [m, k] : v) k = -k;
            }
            return v;
        }
        return power();
    }

    Sparse power()
    {
        Sparse base = atom();
        skip_space();
        if (peek() != '^') return base;
        ++pos_;
        skip_space();
        bool braced = peek() == '{';
        if (braced) {
            ++pos_;
            skip_space();
        }
        std::size_t start = pos_;
        if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError(pos_, "expected a nonnegative integer exponent");
        long e = 0;
        while (std::isdigit(static_cast<unsigned char>(peek()))) {
            e = e * 10 + (text_[pos_] - '0');
            if (e > kMaxExponent) throw ParseError(start, "exponent too large");
            ++pos_;
        }
        if (braced) {
            skip_space();
            if (peek() != '}') throw ParseError(pos_, "expected '}'");
            ++pos_;
        }
        Sparse r = constant(1);
        for (long i = 0; i < e; ++i) r = product(r, base);
        return r;
    }

    mpz_class integer()
    {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return mpz_class(std::string(text_.substr(start, pos_ - start)));
    }

    Sparse atom()
    {
        skip_space();
        char c = peek();
        if (at_end()) throw ParseError(pos_, "unexpected end of input");
        if (is_var(c)) {
            ++pos_;
            Monomial m;
            m.exp[c - 'x'] = 1;
            Sparse r;
            accumulate(r, m, 1);
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mpz_class num = integer();
            mpz_class den = 1;
            // A '/' directly after an integer literal forms a rational literal.
            std::size_t save = pos_;
            skip_space();
            if (peek() == '/') {
                ++pos_;
                skip_space();
                if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError(pos_, "expected denominator");
                std::size_t den_pos = pos_;
                den = integer();
                if (den == 0) throw ParseError(den_pos, "zero denominator");
            } else {
                pos_ = save;
            }
            mpq_class q(num, den);
            q.canonicalize();
            return constant(q);
        }
        if (c == '(') {
            ++pos_;
            Sparse v = expression();
            skip_space();
            if (peek() != ')') throw ParseError(pos_, "expected ')'");
            ++pos_;
            return v;
        }
        throw ParseError(pos_, std::string("unexpected '") + c + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text)
{
    Sparse terms = Parser(text).parse();
    if (terms.empty()) throw ZeroPolynomialError("expression expands to the zero polynomial");
    int degree = terms.begin()->first.degree();
    for (const auto& [m, c] : terms) {
        if (m.degree() != degree) {
            throw NonHomogeneousError("expression is not homogeneous: contains terms of degree " +
                                      std::to_string(degree) + " and " + std::to_string(m.degree()));
        }
    }
    Poly f(RationalField{}, degree);
    for (const auto& [m, c] : terms) f.add_term(m, c);
    return f;
}

}  // namespace curveh
