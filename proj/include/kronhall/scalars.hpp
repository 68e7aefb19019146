#pragma once

// Exact coefficient arithmetic: Laurent polynomials and rational functions in
// the formal variable v over Q, the quadratic ring Q[sqrt q] obtained by
// specializing v = q^{-1/2}, quantum integers, and truncated power series.

#include <gmpxx.h>

#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace kronhall {

using Rational = mpq_class;
using BigInt = mpz_class;

std::string to_string(const Rational& r);

class ArithmeticError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Laurent polynomial in v with rational coefficients. Zero coefficients are
/// never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT
    static LaurentPoly monomial(const Rational& c, int exponent);
    static LaurentPoly v(int exponent = 1) { return monomial(1, exponent); }

    bool is_zero() const { return terms_.empty(); }
    const std::map<int, Rational>& terms() const { return terms_; }
    Rational coeff(int exponent) const;
    int low_degree() const;
    int high_degree() const;

    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);
    LaurentPoly operator-() const;
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
    friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

    LaurentPoly shifted(int k) const;
    /// v -> v^{-1}
    LaurentPoly inverted_variable() const;
    bool has_integer_coefficients() const;

    std::string str() const;

private:
    void add_term(int e, const Rational& c);
    std::map<int, Rational> terms_;
};

/// Rational function num/den in v. Canonical form: gcd(num, den) = 1, den is a
/// polynomial in v with constant coefficient 1. Equality is structural.
class RatFun {
public:
    RatFun() = default;
    RatFun(const LaurentPoly& p);  // NOLINT(google-explicit-constructor)
    RatFun(const Rational& c) : RatFun(LaurentPoly(c)) {}  // NOLINT
    RatFun(long c) : RatFun(LaurentPoly(c)) {}  // NOLINT
    RatFun(const LaurentPoly& num, const LaurentPoly& den);

    static RatFun v(int exponent = 1) { return RatFun(LaurentPoly::v(exponent)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_laurent() const { return den_ == LaurentPoly(1); }

    RatFun& operator+=(const RatFun& o);
    RatFun& operator-=(const RatFun& o);
    RatFun& operator*=(const RatFun& o);
    RatFun& operator/=(const RatFun& o);
    RatFun operator-() const;
    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    friend bool operator==(const RatFun&, const RatFun&) = default;

    RatFun pow(int n) const;
    RatFun inverted_variable() const;

    /// Sum of `c*v^k` terms; a denominator is rendered as `(...)/(...)`.
    std::string str() const;

private:
    void normalize();
    LaurentPoly num_;
    LaurentPoly den_ = LaurentPoly(1);
};

enum class ArithOp { add, sub, mul, div };
RatFun ratfun_arith(const RatFun& x, const RatFun& y, ArithOp op);

/// [n] = (v^n - v^{-n})/(v - v^{-1}); [-n] = -[n].
RatFun quantum_int(int n);
/// [n]! = [1][2]...[n]
RatFun quantum_factorial(int n);

/// Element a + b*sqrt(q) of Q[sqrt q], q prime. The formal variable v is
/// specialized to q^{-1/2} = sqrt(q)/q.
class ScalarQ {
public:
    ScalarQ() = default;
    explicit ScalarQ(int q) : q_(q) {}
    ScalarQ(int q, Rational a, Rational b = 0) : a_(std::move(a)), b_(std::move(b)), q_(q) {}

    static ScalarQ v_power(int exponent, int q);
    static ScalarQ one(int q) { return ScalarQ(q, 1); }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    int q() const { return q_; }
    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }

    ScalarQ& operator+=(const ScalarQ& o);
    ScalarQ& operator-=(const ScalarQ& o);
    ScalarQ& operator*=(const ScalarQ& o);
    ScalarQ& operator*=(const Rational& r);
    ScalarQ& operator/=(const ScalarQ& o);
    ScalarQ operator-() const { return ScalarQ(q_, -a_, -b_); }
    ScalarQ inverse() const;
    friend ScalarQ operator+(ScalarQ x, const ScalarQ& y) { return x += y; }
    friend ScalarQ operator-(ScalarQ x, const ScalarQ& y) { return x -= y; }
    friend ScalarQ operator*(ScalarQ x, const ScalarQ& y) { return x *= y; }
    friend ScalarQ operator*(ScalarQ x, const Rational& r) { return x *= r; }
    friend ScalarQ operator/(ScalarQ x, const ScalarQ& y) { return x /= y; }
    friend bool operator==(const ScalarQ& x, const ScalarQ& y) {
        return x.a_ == y.a_ && x.b_ == y.b_ && (x.q_ == y.q_ || x.is_zero());
    }

    std::string str() const;

private:
    void adopt_q(const ScalarQ& o);
    Rational a_ = 0;
    Rational b_ = 0;
    int q_ = 0;
};

/// Evaluates f at v = q^{-1/2}. Throws ArithmeticError if the denominator
/// vanishes there.
ScalarQ specialize(const RatFun& f, int q);
ScalarQ specialize(const LaurentPoly& f, int q);

/// Truncated power series sum_{k=0}^{order} c_k t^k over a commutative
/// coefficient algebra T. Ring operations on T are supplied by the caller.
template <typename T>
struct FormalSeries {
    std::vector<T> coeffs;  // size order+1
    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

template <typename T>
struct SeriesOps {
    std::function<T(const T&, const T&)> mul;
    std::function<T(const T&, const Rational&)> scale;
    std::function<bool(const T&)> is_zero;
    T zero;
    T one;
};

namespace detail {

template <typename T>
FormalSeries<T> series_mul(const FormalSeries<T>& x, const FormalSeries<T>& y, const SeriesOps<T>& ops) {
    const int n = x.order();
    FormalSeries<T> r{std::vector<T>(n + 1, ops.zero)};
    for (int i = 0; i <= n; ++i) {
        if (ops.is_zero(x.coeffs[i])) continue;
        for (int j = 0; i + j <= n; ++j) {
            if (ops.is_zero(y.coeffs[j])) continue;
            r.coeffs[i + j] = r.coeffs[i + j] + ops.mul(x.coeffs[i], y.coeffs[j]);
        }
    }
    return r;
}

}  // namespace detail

/// exp(s) for s with zero constant term.
template <typename T>
FormalSeries<T> series_exp(const FormalSeries<T>& s, const SeriesOps<T>& ops) {
    if (!ops.is_zero(s.coeffs.at(0))) throw ArithmeticError("series_exp: constant term must be 0");
    const int n = s.order();
    FormalSeries<T> result{std::vector<T>(n + 1, ops.zero)};
    result.coeffs[0] = ops.one;
    FormalSeries<T> power = result;  // s^0
    Rational factorial = 1;
    for (int k = 1; k <= n; ++k) {
        power = detail::series_mul(power, s, ops);
        factorial *= k;
        for (int i = 0; i <= n; ++i)
            if (!ops.is_zero(power.coeffs[i]))
                result.coeffs[i] = result.coeffs[i] + ops.scale(power.coeffs[i], Rational(1) / factorial);
    }
    return result;
}

/// log(s) for s with constant term 1.
template <typename T>
FormalSeries<T> series_log(const FormalSeries<T>& s, const SeriesOps<T>& ops) {
    if (!(s.coeffs.at(0) == ops.one)) throw ArithmeticError("series_log: constant term must be 1");
    const int n = s.order();
    FormalSeries<T> u = s;
    u.coeffs[0] = ops.zero;
    FormalSeries<T> result{std::vector<T>(n + 1, ops.zero)};
    FormalSeries<T> power{std::vector<T>(n + 1, ops.zero)};
    power.coeffs[0] = ops.one;
    for (int k = 1; k <= n; ++k) {
        power = detail::series_mul(power, u, ops);
        Rational c(k % 2 == 1 ? 1 : -1, k);
        c.canonicalize();
        for (int i = 0; i <= n; ++i)
            if (!ops.is_zero(power.coeffs[i]))
                result.coeffs[i] = result.coeffs[i] + ops.scale(power.coeffs[i], c);
    }
    return result;
}

SeriesOps<RatFun> ratfun_series_ops();

}  // namespace kronhall
