#include "kronhall/scalars.hpp"

#include <sstream>

namespace kronhall {

std::string to_string(const Rational& r) { return r.get_str(); }

// ---------------------------------------------------------------- LaurentPoly

LaurentPoly::LaurentPoly(const Rational& c) {
    if (sgn(c) != 0) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(const Rational& c, int exponent) {
    LaurentPoly p;
    if (sgn(c) != 0) p.terms_[exponent] = c;
    return p;
}

Rational LaurentPoly::coeff(int exponent) const {
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Rational(0) : it->second;
}

int LaurentPoly::low_degree() const {
    if (terms_.empty()) throw ArithmeticError("degree of zero Laurent polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::high_degree() const {
    if (terms_.empty()) throw ArithmeticError("degree of zero Laurent polynomial");
    return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int e, const Rational& c) {
    if (sgn(c) == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) terms_.erase(it);
    }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    LaurentPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_) r.add_term(e1 + e2, c1 * c2);
    *this = std::move(r);
    return *this;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e] = -c;
    return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[e + k] = c;
    return r;
}

LaurentPoly LaurentPoly::inverted_variable() const {
    LaurentPoly r;
    for (const auto& [e, c] : terms_) r.terms_[-e] = c;
    return r;
}

bool LaurentPoly::has_integer_coefficients() const {
    for (const auto& [e, c] : terms_)
        if (c.get_den() != 1) return false;
    return true;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        if (!first) os << (sgn(c) < 0 ? " - " : " + ");
        else if (sgn(c) < 0) os << "-";
        first = false;
        Rational a = abs(c);
        os << a.get_str() << "*v^" << e;
    }
    return os.str();
}

// ------------------------------------------------------------ dense helpers

namespace {

using Dense = std::vector<Rational>;  // low to high, trimmed

void trim(Dense& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

// p = v^shift * dense, with dense(0) != 0
Dense to_dense(const LaurentPoly& p, int& shift) {
    shift = p.low_degree();
    Dense d(p.high_degree() - shift + 1);
    for (const auto& [e, c] : p.terms()) d[e - shift] = c;
    return d;
}

LaurentPoly from_dense(const Dense& d, int shift) {
    LaurentPoly r;
    for (std::size_t i = 0; i < d.size(); ++i) r += LaurentPoly::monomial(d[i], static_cast<int>(i) + shift);
    return r;
}

// Polynomial remainder over Q.
Dense poly_rem(Dense a, const Dense& b) {
    trim(a);
    const Rational& lead = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / lead;
        std::size_t off = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        trim(a);
    }
    return a;
}

Dense poly_quo(Dense a, const Dense& b) {
    trim(a);
    if (a.size() < b.size()) return {};
    Dense q(a.size() - b.size() + 1);
    const Rational& lead = b.back();
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / lead;
        std::size_t off = a.size() - b.size();
        q[off] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= f * b[i];
        trim(a);
    }
    return q;
}

Dense poly_gcd(Dense a, Dense b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Dense r = poly_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        Rational lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

}  // namespace

// --------------------------------------------------------------------- RatFun

RatFun::RatFun(const LaurentPoly& p) : num_(p) {}

RatFun::RatFun(const LaurentPoly& num, const LaurentPoly& den) : num_(num), den_(den) {
    if (den_.is_zero()) throw ArithmeticError("rational function with zero denominator");
    normalize();
}

void RatFun::normalize() {
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    int sn = 0, sd = 0;
    Dense n = to_dense(num_, sn);
    Dense d = to_dense(den_, sd);
    if (d.size() > 1) {
        Dense g = poly_gcd(n, d);
        if (g.size() > 1) {
            n = poly_quo(n, g);
            d = poly_quo(d, g);
        }
    }
    Rational c0 = d.front();  // nonzero: lowest term of the denominator
    for (auto& c : d) c /= c0;
    for (auto& c : n) c /= c0;
    num_ = from_dense(n, sn - sd);
    den_ = from_dense(d, 0);
}

RatFun& RatFun::operator+=(const RatFun& o) {
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!is_laurent()) normalize();
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ *= o.den_;
    normalize();
    return *this;
}

RatFun& RatFun::operator-=(const RatFun& o) { return *this += -o; }

RatFun& RatFun::operator*=(const RatFun& o) {
    num_ *= o.num_;
    den_ *= o.den_;
    if (!is_laurent() || num_.is_zero()) normalize();
    return *this;
}

RatFun& RatFun::operator/=(const RatFun& o) {
    if (o.is_zero()) throw ArithmeticError("division by zero rational function");
    num_ *= o.den_;
    den_ *= o.num_;
    normalize();
    return *this;
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::pow(int n) const {
    if (n < 0) return RatFun(1) / pow(-n);
    RatFun r(1);
    for (int i = 0; i < n; ++i) r *= *this;
    return r;
}

RatFun RatFun::inverted_variable() const { return RatFun(num_.inverted_variable(), den_.inverted_variable()); }

std::string RatFun::str() const {
    if (is_laurent()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RatFun ratfun_arith(const RatFun& x, const RatFun& y, ArithOp op) {
    switch (op) {
        case ArithOp::add: return x + y;
        case ArithOp::sub: return x - y;
        case ArithOp::mul: return x * y;
        case ArithOp::div: return x / y;
    }
    throw std::logic_error("unreachable");
}

RatFun quantum_int(int n) {
    if (n < 0) return -quantum_int(-n);
    // v^{n-1} + v^{n-3} + ... + v^{1-n}
    LaurentPoly p;
    for (int k = 0; k < n; ++k) p += LaurentPoly::v(n - 1 - 2 * k);
    return RatFun(p);
}

RatFun quantum_factorial(int n) {
    if (n < 0) throw ArithmeticError("quantum_factorial of negative integer");
    RatFun r(1);
    for (int k = 1; k <= n; ++k) r *= quantum_int(k);
    return r;
}

// -------------------------------------------------------------------- ScalarQ

void ScalarQ::adopt_q(const ScalarQ& o) {
    if (q_ == 0) q_ = o.q_;
    else if (o.q_ != 0 && o.q_ != q_) throw ArithmeticError("mixing scalars over different q");
}

ScalarQ ScalarQ::v_power(int e, int q) {
    // v^{2j} = q^{-j}; v^{2j+1} = q^{-j} * sqrt(q)/q
    int j = e >= 0 ? e / 2 : -((-e + 1) / 2);
    int odd = e - 2 * j;
    BigInt qpow;
    mpz_pow_ui(qpow.get_mpz_t(), BigInt(q).get_mpz_t(), static_cast<unsigned long>(std::abs(j)));
    Rational base = j >= 0 ? Rational(1) / Rational(qpow) : Rational(qpow);
    if (odd == 0) return ScalarQ(q, base, 0);
    return ScalarQ(q, 0, base / q);
}

ScalarQ& ScalarQ::operator+=(const ScalarQ& o) {
    adopt_q(o);
    a_ += o.a_;
    b_ += o.b_;
    return *this;
}

ScalarQ& ScalarQ::operator-=(const ScalarQ& o) {
    adopt_q(o);
    a_ -= o.a_;
    b_ -= o.b_;
    return *this;
}

ScalarQ& ScalarQ::operator*=(const ScalarQ& o) {
    adopt_q(o);
    Rational na = a_ * o.a_ + b_ * o.b_ * q_;
    Rational nb = a_ * o.b_ + b_ * o.a_;
    a_ = std::move(na);
    b_ = std::move(nb);
    return *this;
}

ScalarQ& ScalarQ::operator*=(const Rational& r) {
    a_ *= r;
    b_ *= r;
    return *this;
}

ScalarQ ScalarQ::inverse() const {
    if (is_zero()) throw ArithmeticError("division by zero in Q[sqrt q]");
    Rational norm = a_ * a_ - b_ * b_ * q_;  // nonzero: q is not a square
    return ScalarQ(q_, a_ / norm, -b_ / norm);
}

ScalarQ& ScalarQ::operator/=(const ScalarQ& o) {
    adopt_q(o);
    return *this *= o.inverse();
}

std::string ScalarQ::str() const {
    if (sgn(b_) == 0) return a_.get_str();
    std::string s = sgn(a_) != 0 ? a_.get_str() + " + " : "";
    return s + "(" + b_.get_str() + ")*sqrt(" + std::to_string(q_) + ")";
}

ScalarQ specialize(const LaurentPoly& f, int q) {
    ScalarQ r(q);
    for (const auto& [e, c] : f.terms()) r += ScalarQ::v_power(e, q) * c;
    return r;
}

ScalarQ specialize(const RatFun& f, int q) {
    ScalarQ d = specialize(f.den(), q);
    if (d.is_zero())
        throw ArithmeticError("denominator " + f.den().str() + " vanishes at v = q^{-1/2}, q = " + std::to_string(q));
    return specialize(f.num(), q) / d;
}

SeriesOps<RatFun> ratfun_series_ops() {
    return SeriesOps<RatFun>{
        [](const RatFun& a, const RatFun& b) { return a * b; },
        [](const RatFun& a, const Rational& r) { return a * RatFun(r); },
        [](const RatFun& a) { return a.is_zero(); },
        RatFun(0),
        RatFun(1),
    };
}

}  // namespace kronhall
