#include "kronhall/expr.hpp"

#include <cctype>

#include "kronhall/p1.hpp"
#include "kronhall/uv.hpp"

namespace kronhall {

namespace {

class Parser {
public:
    Parser(const std::string& s, int q) : s_(s), q_(q) {}

    DoubleElement run() {
        DoubleElement r = expr();
        skip();
        if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
        return r;
    }

private:
    const std::string& s_;
    int q_;
    std::size_t i_ = 0;

    [[noreturn]] void fail(const std::string& msg) const { throw ExprError(msg, i_); }

    void skip() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool eat(char c) {
        skip();
        if (i_ < s_.size() && s_[i_] == c) {
            ++i_;
            return true;
        }
        return false;
    }
    void expect(char c) {
        if (!eat(c)) fail(std::string("expected '") + c + "'");
    }
    int integer() {
        skip();
        std::size_t start = i_;
        if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) ++i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        if (start == i_ || !std::isdigit(static_cast<unsigned char>(s_[i_ - 1]))) fail("expected an integer");
        return std::stoi(s_.substr(start, i_ - start));
    }
    std::string ident() {
        std::size_t start = i_;
        while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) ++i_;
        return s_.substr(start, i_ - start);
    }

    // a sign glued to the previous token and followed by a separator
    Wing wing() {
        if (i_ < s_.size() && (s_[i_] == '+' || s_[i_] == '-')) {
            std::size_t k = i_ + 1;
            if (k == s_.size() || std::isspace(static_cast<unsigned char>(s_[k])) || s_[k] == '*' || s_[k] == ')') {
                Wing w = s_[i_] == '+' ? Wing::Plus : Wing::Minus;
                ++i_;
                return w;
            }
        }
        return Wing::Plus;
    }

    DoubleElement scalar(const ScalarQ& c) const { return DoubleElement::one(q_) * c; }

    DoubleElement of_hall(const HallElement& h, Wing w) const {
        return w == Wing::Plus ? DoubleElement::plus(h) : DoubleElement::minus(h);
    }

    DoubleElement expr() {
        DoubleElement r(q_);
        bool neg = false;
        if (eat('-'))
            neg = true;
        else
            eat('+');
        r = term();
        if (neg) r *= ScalarQ(q_, -1);
        while (true) {
            if (eat('+'))
                r += term();
            else if (eat('-'))
                r -= term();
            else
                return r;
        }
    }

    DoubleElement term() {
        DoubleElement r = factor();
        while (eat('*')) r = dmul(r, factor());
        return r;
    }

    DoubleElement factor() {
        DoubleElement a = atom();
        skip();
        if (i_ < s_.size() && s_[i_] == '^') {
            ++i_;
            int n = integer();
            if (n < 0) fail("negative power");
            a = dpow(a, n);
        }
        return a;
    }

    std::string inside_parens() {
        expect('(');
        std::size_t start = i_;
        int depth = 1;
        while (i_ < s_.size() && depth > 0) {
            if (s_[i_] == '(') ++depth;
            if (s_[i_] == ')') --depth;
            ++i_;
        }
        if (depth != 0) fail("unbalanced parenthesis");
        return s_.substr(start, i_ - 1 - start);
    }

    DoubleElement atom() {
        skip();
        if (i_ >= s_.size()) fail("unexpected end of input");
        const char c = s_[i_];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            int num = integer();
            int den = 1;
            if (eat('/')) den = integer();
            if (den == 0) fail("zero denominator");
            return scalar(ScalarQ(q_, Rational(num, den)));
        }
        if (c == '(') {
            ++i_;
            DoubleElement r = expr();
            expect(')');
            return r;
        }
        if (c == '[') {
            const std::size_t at = ++i_;
            std::size_t close = s_.find(']', i_);
            if (close == std::string::npos) fail("missing ']'");
            IsoClass x;
            try {
                x = IsoClass::parse(s_.substr(at, close - at));
            } catch (const std::exception& e) {
                throw ExprError(std::string("bad class: ") + e.what(), at);
            }
            i_ = close + 1;
            return of_hall(HallElement::basis(x, q_), wing());
        }
        const std::size_t at = i_;
        const std::string name = ident();
        if (name.empty()) fail("unexpected '" + std::string(1, c) + "'");
        if (name == "v") {
            skip();
            if (i_ < s_.size() && s_[i_] == '^') {
                ++i_;
                return scalar(vpow(integer(), q_));
            }
            return scalar(vpow(1, q_));
        }
        if (name == "ev") {
            const std::size_t arg_at = i_ + 1;
            std::string arg = inside_parens();
            try {
                return ev_q(parse_term(arg), q_);
            } catch (const BoundError&) {
                throw;
            } catch (const std::exception& e) {
                throw ExprError(std::string("bad term: ") + e.what(), arg_at);
            }
        }
        skip();
        if (i_ >= s_.size() || s_[i_] != '(') throw ExprError("unknown name '" + name + "'", at);
        expect('(');
        std::vector<int> args{integer()};
        while (eat(',')) args.push_back(integer());
        expect(')');
        auto need = [&](std::size_t n) {
            if (args.size() != n) throw ExprError(name + " takes " + std::to_string(n) + " argument(s)", at);
        };
        auto positive = [&](int r) {
            if (r <= 0) throw ExprError(name + " needs a positive degree", at);
            return r;
        };
        if (name == "one") {
            need(2);
            if (args[0] < 0 || args[1] < 0) throw ExprError("one(a,b) needs a, b >= 0", at);
            return of_hall(one_alpha({args[0], args[1]}, q_), wing());
        }
        if (name == "tube") {
            need(1);
            return of_hall(tube_one(positive(args[0]), q_), wing());
        }
        if (name == "one_tor") {
            need(1);
            return of_hall(one_tor(positive(args[0]), q_), wing());
        }
        if (name == "L") {
            need(1);
            return L(args[0], wing(), q_);
        }
        if (name == "T") {
            need(1);
            return T_double(positive(args[0]), wing(), q_);
        }
        if (name == "Theta") {
            need(1);
            return of_hall(Theta_elem(positive(args[0]), q_), wing());
        }
        if (name == "K") {
            need(2);
            return DoubleElement::K(KHalf::of({args[0], args[1]}), q_);
        }
        if (name == "C") {
            need(1);
            return DoubleElement::K(KHalf::half_delta() * args[0], q_);
        }
        throw ExprError("unknown function '" + name + "'", at);
    }
};

}  // namespace

DoubleElement parse_double_expr(const std::string& text, int q) { return Parser(text, q).run(); }

bool as_hall_element(const DoubleElement& d, HallElement& out) {
    out = HallElement(d.q());
    for (const auto& [k, c] : d.terms()) {
        if (!k.minus.is_zero()) return false;
        out.add(k.plus, k.k, c);
    }
    return true;
}

}  // namespace kronhall
