#include <cctype>

#include "arcinv/error.hpp"
#include "arcinv/polynomial.hpp"

namespace arcinv {

namespace {

// expr   := ['+'|'-'] term (('+'|'-') term)*
// term   := power (['*'] power)*
// power  := atom ['^' integer]
// atom   := integer ['/' integer] | identifier | '(' expr ')'
class Parser {
public:
    Parser(const RingPtr& ring, std::string_view text) : ring_(ring), text_(text) {}

    Polynomial parse() {
        skip_space();
        if (at_end()) fail("empty polynomial");
        Polynomial p = expr();
        skip_space();
        if (!at_end()) fail(std::string("unexpected '") + text_[pos_] + "'");
        return p;
    }

private:
    [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, 1, pos_ + 1); }

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }

    void skip_space() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool starts_atom() const {
        char c = peek();
        return std::isdigit(static_cast<unsigned char>(c)) || std::isalpha(static_cast<unsigned char>(c)) ||
               c == '_' || c == '(';
    }

    Polynomial expr() {
        skip_space();
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = peek() == '-';
            ++pos_;
        }
        Polynomial acc = term();
        if (negative) acc = -acc;
        for (;;) {
            skip_space();
            char c = peek();
            if (c != '+' && c != '-') break;
            ++pos_;
            Polynomial t = term();
            if (c == '+') {
                acc += t;
            } else {
                acc -= t;
            }
        }
        return acc;
    }

    Polynomial term() {
        Polynomial acc = power();
        for (;;) {
            skip_space();
            if (peek() == '*') {
                ++pos_;
                skip_space();
                if (!starts_atom()) fail("expected a factor after '*'");
                acc *= power();
            } else if (starts_atom()) {
                acc *= power();
            } else {
                break;
            }
        }
        return acc;
    }

    Polynomial power() {
        Polynomial base = atom();
        skip_space();
        if (peek() == '^') {
            ++pos_;
            skip_space();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected a nonnegative integer exponent");
            mpz_class e(digits());
            if (e > 1u << 20) fail("exponent too large");
            base = base.pow(static_cast<std::uint32_t>(e.get_ui()));
        }
        return base;
    }

    std::string digits() {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Polynomial atom() {
        skip_space();
        char c = peek();
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            mpz_class num(digits());
            mpz_class den = 1;
            std::size_t save = pos_;
            skip_space();
            if (peek() == '/') {
                ++pos_;
                skip_space();
                if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an integer denominator");
                den = mpz_class(digits());
                if (den == 0) {
                    pos_ = start;
                    fail("zero denominator");
                }
            } else {
                pos_ = save;
            }
            try {
                return Polynomial::constant(ring_, Scalar::from_rational(ring_->field(), mpq_class(num, den)));
            } catch (const Error& e) {
                pos_ = start;
                fail(e.what());
            }
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') ++pos_;
            std::string name(text_.substr(start, pos_ - start));
            auto idx = ring_->index_of(name);
            if (!idx) {
                pos_ = start;
                fail("undeclared variable '" + name + "'");
            }
            return Polynomial::variable(ring_, *idx);
        }
        if (c == '(') {
            ++pos_;
            Polynomial inner = expr();
            skip_space();
            if (peek() != ')') fail("expected ')'");
            ++pos_;
            return inner;
        }
        if (at_end()) fail("unexpected end of input");
        fail(std::string("unexpected '") + c + "'");
    }

    const RingPtr& ring_;
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const RingPtr& ring, std::string_view text) { return Parser(ring, text).parse(); }

}  // namespace arcinv
