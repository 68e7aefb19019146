#include "kronhall/uv.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace kronhall {

bool is_dj_letter(Sym s) { return s <= Sym::K2; }

namespace {

bool is_k_type(Sym s) { return s == Sym::K1 || s == Sym::K2 || s == Sym::K || s == Sym::C; }

std::string exponent_str(int e) { return e == 1 ? "" : "^" + std::to_string(e); }

}  // namespace

std::string letter_str(const Letter& l) {
    switch (l.s) {
        case Sym::E1: return "E1";
        case Sym::E2: return "E2";
        case Sym::F1: return "F1";
        case Sym::F2: return "F2";
        case Sym::K1: return "K1" + exponent_str(l.i);
        case Sym::K2: return "K2" + exponent_str(l.i);
        case Sym::K: return "K" + exponent_str(l.i);
        case Sym::Xp: return "X[" + std::to_string(l.i) + "]+";
        case Sym::Xm: return "X[" + std::to_string(l.i) + "]-";
        case Sym::H: return "H[" + std::to_string(l.i) + "]";
        case Sym::C:
            if (l.i % 2 == 0) return "C" + exponent_str(l.i / 2);
            return "C^{" + std::to_string(l.i) + "/2}";
    }
    return "?";
}

std::string word_str(const Word& w) {
    if (w.empty()) return "1";
    std::string s;
    // runs of a repeated non-K letter print as a power
    for (size_t i = 0; i < w.size();) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i] && !is_k_type(w[i].s)) ++j;
        if (j == i) j = i + 1;
        if (!s.empty()) s += ' ';
        s += letter_str(w[i]);
        if (j - i > 1) s += "^" + std::to_string(j - i);
        i = j;
    }
    return s;
}

// ---- PresTerm ----

PresTerm PresTerm::scalar(const RatFun& c, Presentation p) {
    PresTerm t(p);
    t.add({}, c);
    return t;
}

PresTerm PresTerm::word(const Word& w, const RatFun& c) {
    Presentation p = Presentation::DJ;
    if (!w.empty() && !is_dj_letter(w.front().s)) p = Presentation::Loop;
    PresTerm t(p);
    t.add(w, c);
    return t;
}

void PresTerm::check(const Word& w) const {
    for (const auto& l : w) {
        if (is_dj_letter(l.s) != (pres_ == Presentation::DJ))
            throw std::invalid_argument("mixed presentation in word " + word_str(w));
        if (l.s == Sym::H && l.i == 0) throw std::invalid_argument("H[0] is not a generator");
    }
}

void PresTerm::add(const Word& w0, const RatFun& c) {
    if (c.is_zero()) return;
    // scalars carry no presentation of their own
    if (!w0.empty() && (terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty())))
        pres_ = is_dj_letter(w0.front().s) ? Presentation::DJ : Presentation::Loop;
    check(w0);
    // merge adjacent K-type letters of the same kind
    Word w;
    for (const auto& l : w0) {
        if (is_k_type(l.s) && !w.empty() && w.back().s == l.s) {
            w.back().i += l.i;
            if (w.back().i == 0) w.pop_back();
        } else if (!(is_k_type(l.s) && l.i == 0)) {
            w.push_back(l);
        }
    }
    auto [it, fresh] = terms_.try_emplace(w, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PresTerm& PresTerm::operator+=(const PresTerm& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) pres_ = o.pres_;
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

PresTerm& PresTerm::operator-=(const PresTerm& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) pres_ = o.pres_;
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
}

PresTerm& PresTerm::operator*=(const RatFun& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, x] : terms_) x *= c;
    return *this;
}

PresTerm operator*(const PresTerm& a, const PresTerm& b) {
    const bool a_scalar = a.terms_.size() == 1 && a.terms_.begin()->first.empty();
    const bool b_scalar = b.terms_.size() == 1 && b.terms_.begin()->first.empty();
    Presentation p = a.pres_;
    if (a_scalar && !b.is_zero()) p = b.pres_;
    if (!a_scalar && !b_scalar && !a.is_zero() && !b.is_zero() && a.pres_ != b.pres_)
        throw std::invalid_argument("product of terms in different presentations");
    PresTerm r(p);
    for (const auto& [w1, c1] : a.terms_)
        for (const auto& [w2, c2] : b.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add(w, c1 * c2);
        }
    return r;
}

PresTerm PresTerm::pow(int n) const {
    if (n < 0) throw std::invalid_argument("PresTerm::pow: negative exponent");
    PresTerm r = scalar(1, pres_);
    for (int i = 0; i < n; ++i) r = r * *this;
    return r;
}

std::string PresTerm::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        if (!s.empty()) s += " + ";
        const std::string cs = c.str();
        if (w.empty()) {
            s += cs;
        } else if (c == RatFun(1)) {
            s += word_str(w);
        } else {
            s += "(" + cs + ") " + word_str(w);
        }
    }
    return s;
}

PresTerm commutator(const PresTerm& a, const PresTerm& b) { return a * b - b * a; }

PresTerm divided_power(const PresTerm& a, int n) {
    return a.pow(n) * (RatFun(1) / quantum_factorial(n));
}

// ---- parser ----

namespace {

struct Parser {
    std::string s;
    size_t p = 0;

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse_term: " + what + " at position " + std::to_string(p) + " in '" + s + "'");
    }
    void ws() {
        while (p < s.size() && std::isspace(static_cast<unsigned char>(s[p]))) ++p;
    }
    bool at(char c) const { return p < s.size() && s[p] == c; }
    bool eat(char c) {
        if (!at(c)) return false;
        ++p;
        return true;
    }
    int integer() {
        size_t start = p;
        if (at('-') || at('+')) ++p;
        while (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) ++p;
        if (p == start || (p == start + 1 && !std::isdigit(static_cast<unsigned char>(s[start]))))
            fail("expected integer");
        return std::stoi(s.substr(start, p - start));
    }
    // ^n, ^-1, ^{n}
    int plain_exponent() {
        if (eat('{')) {
            int e = integer();
            if (!eat('}')) fail("expected }");
            return e;
        }
        return integer();
    }
    // exponent in halves: ^{a/2}, ^n, ^{n}
    int half_exponent() {
        bool brace = eat('{');
        int e = integer();
        int half = 2 * e;
        if (eat('/')) {
            if (integer() != 2) fail("only halves are allowed in C exponents");
            half = e;
        }
        if (brace && !eat('}')) fail("expected }");
        return half;
    }

    // one generator with optional power; returns the factor
    PresTerm factor() {
        auto power = [&](const Letter& l) {
            PresTerm base = PresTerm::word({l});
            if (!eat('^')) return base;
            if (eat('(')) {
                int n = integer();
                if (!eat(')')) fail("expected )");
                if (n < 0) fail("negative divided power");
                return divided_power(base, n);
            }
            int n = plain_exponent();
            if (n < 0) fail("negative power of a non-invertible letter");
            return base.pow(n);
        };
        auto kletter = [&](Sym sym) {
            int e = 1;
            if (eat('^')) e = plain_exponent();
            return PresTerm::word({{sym, e}});
        };
        if (eat('E')) {
            int i = integer();
            if (i != 1 && i != 2) fail("E index must be 1 or 2");
            return power({i == 1 ? Sym::E1 : Sym::E2, 0});
        }
        if (eat('F')) {
            int i = integer();
            if (i != 1 && i != 2) fail("F index must be 1 or 2");
            return power({i == 1 ? Sym::F1 : Sym::F2, 0});
        }
        if (eat('K')) {
            if (at('1') || at('2')) {
                int i = s[p++] - '0';
                return kletter(i == 1 ? Sym::K1 : Sym::K2);
            }
            return kletter(Sym::K);
        }
        if (eat('C')) {
            int e = 2;
            if (eat('^')) e = half_exponent();
            return PresTerm::word({{Sym::C, e}});
        }
        if (eat('X')) {
            if (!eat('[')) fail("expected [");
            int n = integer();
            if (!eat(']')) fail("expected ]");
            Sym sym;
            if (eat('+'))
                sym = Sym::Xp;
            else if (eat('-'))
                sym = Sym::Xm;
            else
                fail("expected + or - after X[n]");
            return power({sym, n});
        }
        if (eat('H')) {
            if (!eat('[')) fail("expected [");
            int r = integer();
            if (!eat(']')) fail("expected ]");
            if (r == 0) fail("H[0] is not a generator");
            return power({Sym::H, r});
        }
        fail("unknown symbol");
    }

    // leading scalar: integers, fractions, v, v^k
    bool coefficient(RatFun& c) {
        bool any = false;
        for (;;) {
            ws();
            if (p < s.size() && std::isdigit(static_cast<unsigned char>(s[p]))) {
                int a = integer();
                Rational r(a);
                if (eat('/')) {
                    r = Rational(a, integer());
                    r.canonicalize();
                }
                c *= RatFun(r);
                any = true;
            } else if (at('v')) {
                ++p;
                int e = 1;
                if (eat('^')) e = plain_exponent();
                c *= RatFun::v(e);
                any = true;
            } else {
                return any;
            }
        }
    }

    PresTerm monomial() {
        RatFun c(1);
        coefficient(c);
        PresTerm t;
        bool first = true;
        for (;;) {
            ws();
            if (p >= s.size()) break;
            // a standalone sign starts the next monomial
            if ((at('+') || at('-')) && (p + 1 >= s.size() || std::isspace(static_cast<unsigned char>(s[p + 1]))))
                break;
            PresTerm f = factor();
            t = first ? f : t * f;
            first = false;
        }
        if (first) return PresTerm::scalar(c, Presentation::DJ);
        return t * c;
    }

    PresTerm parse() {
        ws();
        int sign = 1;
        if ((at('-') || at('+')) && p + 1 < s.size() && std::isspace(static_cast<unsigned char>(s[p + 1]))) {
            sign = at('-') ? -1 : 1;
            ++p;
        }
        PresTerm result = monomial() * RatFun(sign);
        for (;;) {
            ws();
            if (p >= s.size()) break;
            sign = at('-') ? -1 : 1;
            ++p;
            result += monomial() * RatFun(sign);
        }
        return result;
    }
};

}  // namespace

PresTerm parse_term(const std::string& text) {
    Parser ps{text};
    if (text.find_first_not_of(" \t\n") == std::string::npos) throw std::invalid_argument("parse_term: empty input");
    return ps.parse();
}

// ---- commuting H polynomials and the Psi series ----

namespace {

// polynomial in commuting H letters of one sign; keys are sorted index lists
struct HPoly {
    std::map<std::vector<int>, RatFun> t;
    void add(const std::vector<int>& k, const RatFun& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = t.try_emplace(k, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) t.erase(it);
        }
    }
    friend HPoly operator+(const HPoly& a, const HPoly& b) {
        HPoly r = a;
        for (const auto& [k, c] : b.t) r.add(k, c);
        return r;
    }
};

SeriesOps<HPoly> hpoly_ops() {
    SeriesOps<HPoly> ops;
    ops.mul = [](const HPoly& a, const HPoly& b) {
        HPoly r;
        for (const auto& [k1, c1] : a.t)
            for (const auto& [k2, c2] : b.t) {
                std::vector<int> k = k1;
                k.insert(k.end(), k2.begin(), k2.end());
                std::sort(k.begin(), k.end());
                r.add(k, c1 * c2);
            }
        return r;
    };
    ops.scale = [](const HPoly& a, const Rational& x) {
        HPoly r;
        for (const auto& [k, c] : a.t) r.add(k, c * RatFun(x));
        return r;
    };
    ops.is_zero = [](const HPoly& a) { return a.t.empty(); };
    ops.zero = HPoly{};
    ops.one.add({}, RatFun(1));
    return ops;
}

RatFun vdiff() { return RatFun::v(-1) - RatFun::v(1); }  // v^{-1} - v

// coefficients 1..order of exp(sign (v^{-1}-v) sum_r H_{sign r} t^r)
std::vector<HPoly> psi_series(int sign, int order) {
    FormalSeries<HPoly> s{std::vector<HPoly>(order + 1)};
    for (int r = 1; r <= order; ++r) s.coeffs[r].add({sign * r}, vdiff() * RatFun(sign));
    return series_exp(s, hpoly_ops()).coeffs;
}

PresTerm hpoly_term(const HPoly& h) {
    PresTerm t(Presentation::Loop);
    for (const auto& [k, c] : h.t) {
        Word w;
        for (int r : k) w.push_back({Sym::H, r});
        t.add(w, c);
    }
    return t;
}

std::mutex psi_mutex;
std::map<int, std::vector<std::pair<Word, RatFun>>> psi_cache;

const std::vector<std::pair<Word, RatFun>>& psi_words(int r) {
    std::lock_guard<std::mutex> lock(psi_mutex);
    auto it = psi_cache.find(r);
    if (it != psi_cache.end()) return it->second;
    const int a = r > 0 ? r : -r;
    auto coeffs = psi_series(r > 0 ? 1 : -1, a);
    std::vector<std::pair<Word, RatFun>> out;
    for (const auto& [k, c] : coeffs[a].t) {
        Word w;
        for (int x : k) w.push_back({Sym::H, x});
        out.emplace_back(w, c);
    }
    return psi_cache.emplace(r, std::move(out)).first->second;
}

}  // namespace

PresTerm psi_elem(int r) {
    if (r == 0) return PresTerm::scalar(1, Presentation::Loop);
    PresTerm t(Presentation::Loop);
    for (const auto& [w, c] : psi_words(r)) t.add(w, c);
    return t;
}

PresTerm P_elem(int r, PSeries series) {
    if (r < 1) throw std::invalid_argument("P_elem: r must be positive");
    FormalSeries<HPoly> s{std::vector<HPoly>(r + 1)};
    if (series == PSeries::Psi) {
        auto psi = psi_series(1, r);
        for (int j = 1; j <= r; ++j)
            for (const auto& [k, c] : psi[j].t) s.coeffs[j].add(k, c / quantum_int(j));
    } else {
        for (int j = 1; j <= r; ++j) s.coeffs[j].add({j}, RatFun(1) / quantum_int(j));
    }
    auto e = series_exp(s, hpoly_ops());
    return hpoly_term(e.coeffs[r]) * PresTerm::word({{Sym::C, r}});
}

// ---- loop rewriting ----

namespace {

// letters * K^k * C^{c/2}, letters among Xp, Xm, H
struct Mono {
    Word w;
    int k = 0;
    int c = 0;
    friend auto operator<=>(const Mono&, const Mono&) = default;
    friend bool operator==(const Mono&, const Mono&) = default;
};

int block(const Letter& l) {
    switch (l.s) {
        case Sym::Xp: return 0;
        case Sym::Xm: return 2;
        case Sym::H: return l.i > 0 ? 1 : 3;
        default: throw std::logic_error("block: not a loop letter");
    }
}

bool ordered(const Letter& a, const Letter& b) {
    const int ba = block(a), bb = block(b);
    if (ba != bb) return ba < bb;
    if (a.s == Sym::H) return a.i <= b.i;
    return a.i >= b.i;
}

// K^d moved right past the letters of `tail`
int k_shift_exponent(int d, const Word& tail, size_t from) {
    int e = 0;
    for (size_t j = from; j < tail.size(); ++j) {
        if (tail[j].s == Sym::Xp) e -= 2 * d;
        if (tail[j].s == Sym::Xm) e += 2 * d;
    }
    return e;
}

struct Piece {
    RatFun c;
    Word rep;
    int dk = 0;
    int dc = 0;
};

RatFun hecke(int r) { return quantum_int(2 * r) / RatFun(r); }

// a b with a, b out of order, rewritten as a combination of pieces
std::vector<Piece> rewrite_pair(const Letter& a, const Letter& b, DiagonalRule diag) {
    const int ba = block(a), bb = block(b);
    const int abs_a = a.i > 0 ? a.i : -a.i;
    const int abs_b = b.i > 0 ? b.i : -b.i;
    std::vector<Piece> out;
    if (ba == bb) {
        if (a.s == Sym::H) return {{RatFun(1), {b, a}}};
        // X_a X_b with a < b
        const RatFun q2 = RatFun::v(a.s == Sym::Xp ? 2 : -2);
        const int lo = a.i, hi = b.i;
        if (hi == lo + 1) return {{q2, {b, a}}};
        Letter lo1{a.s, lo + 1}, hi1{a.s, hi - 1};
        out.push_back({q2, {b, a}});
        if (hi == lo + 2) {
            out.push_back({q2 - RatFun(1), {lo1, lo1}});
        } else {
            out.push_back({q2, {lo1, hi1}});
            out.push_back({RatFun(-1), {hi1, lo1}});
        }
        return out;
    }
    out.push_back({RatFun(1), {b, a}});
    if (a.s == Sym::H && b.s == Sym::Xp) {
        // H_r X_n+ = X_n+ H_r + [2r]/r X+_{n+r} C^{-|r|/2}
        out.push_back({hecke(a.i), {{Sym::Xp, b.i + a.i}}, 0, -abs_a});
    } else if (a.s == Sym::Xm && b.s == Sym::H) {
        // X_n- H_r = H_r X_n- + [2r]/r X-_{n+r} C^{|r|/2}
        out.push_back({hecke(b.i), {{Sym::Xm, a.i + b.i}}, 0, abs_b});
    } else if (a.s == Sym::H && b.s == Sym::Xm) {
        out.push_back({-hecke(a.i), {{Sym::Xm, b.i + a.i}}, 0, abs_a});
    } else if (a.s == Sym::H && b.s == Sym::H) {
        // H_a H_b with a < 0 < b
        if (a.i + b.i == 0) {
            const RatFun f = hecke(b.i) / (RatFun::v(1) - RatFun::v(-1));
            out.push_back({f, {}, 0, 2 * b.i});
            out.push_back({-f, {}, 0, -2 * b.i});
        }
    } else if (a.s == Sym::Xm && b.s == Sym::Xp) {
        // X_n- X_m+ = X_m+ X_n- - [X_m+, X_n-]
        const int m = b.i, n = a.i, s = m + n;
        const RatFun f = RatFun::v(1) / (RatFun::v(1) - RatFun::v(-1));
        if (s > 0) {
            for (const auto& [w, c] : psi_words(s)) out.push_back({-f * c, w, 1, m - n});
        } else if (s < 0) {
            for (const auto& [w, c] : psi_words(s)) out.push_back({f * c, w, -1, n - m});
        } else {
            const int kk = diag == DiagonalRule::WithK ? 1 : 0;
            out.push_back({-f, {}, kk, m - n});
            out.push_back({f, {}, -kk, n - m});
        }
    } else {
        throw std::logic_error("rewrite_pair: unexpected pair " + letter_str(a) + " " + letter_str(b));
    }
    return out;
}

Mono to_mono(const Word& w, RatFun& coeff) {
    Mono m;
    int vexp = 0;
    for (size_t j = 0; j < w.size(); ++j) {
        const Letter& l = w[j];
        if (l.s == Sym::K) {
            vexp += k_shift_exponent(l.i, w, j + 1);
            m.k += l.i;
        } else if (l.s == Sym::C) {
            m.c += l.i;
        } else {
            m.w.push_back(l);
        }
    }
    coeff *= RatFun::v(vexp);
    return m;
}

void check_bounds(const Mono& m, const RewriteConfig& cfg) {
    bool bad = static_cast<int>(m.w.size()) > cfg.max_length;
    for (const auto& l : m.w) bad = bad || l.i > cfg.index_window || l.i < -cfg.index_window;
    if (bad) throw BoundError("loop_normal_form: bounds exceeded at word " + word_str(m.w));
}

void add_to(std::map<Mono, RatFun>& m, const Mono& k, const RatFun& c) {
    if (c.is_zero()) return;
    auto [it, fresh] = m.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
    }
}

}  // namespace

bool is_normal_word(const Word& w) {
    int seen_kc = 0;
    for (size_t j = 0; j < w.size(); ++j) {
        const Letter& l = w[j];
        if (l.s == Sym::K || l.s == Sym::C) {
            ++seen_kc;
            continue;
        }
        if (is_dj_letter(l.s)) return false;
        if (seen_kc > 0 && block(l) < 2) return false;
        if (j + 1 < w.size() && w[j + 1].s != Sym::K && w[j + 1].s != Sym::C && !ordered(l, w[j + 1])) return false;
    }
    return true;
}

LoopNormalForm loop_normal_form(const PresTerm& t, const RewriteConfig& cfg) {
    LoopNormalForm out;
    if (t.is_zero()) return out;
    if (t.presentation() != Presentation::Loop) {
        bool scalar_only = t.terms().size() == 1 && t.terms().begin()->first.empty();
        if (!scalar_only) throw std::invalid_argument("loop_normal_form: expects loop letters");
    }
    std::map<Mono, RatFun> pending, done;
    for (const auto& [w, c] : t.terms()) {
        RatFun coeff = c;
        Mono m = to_mono(w, coeff);
        check_bounds(m, cfg);
        add_to(pending, m, coeff);
    }
    long steps = 0;
    while (!pending.empty()) {
        auto it = pending.begin();
        const Mono m = it->first;
        const RatFun c = it->second;
        pending.erase(it);
        long pos = -1;
        const long n = static_cast<long>(m.w.size());
        if (cfg.strategy == RewriteStrategy::Leftmost) {
            for (long j = 0; j + 1 < n && pos < 0; ++j)
                if (!ordered(m.w[j], m.w[j + 1])) pos = j;
        } else {
            for (long j = n - 2; j >= 0 && pos < 0; --j)
                if (!ordered(m.w[j], m.w[j + 1])) pos = j;
        }
        if (pos < 0) {
            add_to(done, m, c);
            continue;
        }
        if (++steps > cfg.max_steps)
            throw BoundError("loop_normal_form: step bound exceeded at word " + word_str(m.w));
        for (const Piece& pc : rewrite_pair(m.w[pos], m.w[pos + 1], cfg.diagonal)) {
            Mono r;
            r.w.assign(m.w.begin(), m.w.begin() + pos);
            r.w.insert(r.w.end(), pc.rep.begin(), pc.rep.end());
            r.w.insert(r.w.end(), m.w.begin() + pos + 2, m.w.end());
            r.k = m.k + pc.dk;
            r.c = m.c + pc.dc;
            const int vexp = pc.dk == 0 ? 0 : k_shift_exponent(pc.dk, m.w, pos + 2);
            check_bounds(r, cfg);
            add_to(pending, r, c * pc.c * RatFun::v(vexp));
        }
    }
    // K^a C^{b/2} sits between the H_{r>0} block and the X- block
    for (const auto& [m, c] : done) {
        Word w;
        int n_minus = 0;
        size_t j = 0;
        while (j < m.w.size() && block(m.w[j]) < 2) w.push_back(m.w[j++]);
        if (m.k != 0) w.push_back({Sym::K, m.k});
        if (m.c != 0) w.push_back({Sym::C, m.c});
        for (; j < m.w.size(); ++j) {
            if (m.w[j].s == Sym::Xm) ++n_minus;
            w.push_back(m.w[j]);
        }
        out.term.add(w, c * RatFun::v(-2 * m.k * n_minus));
    }
    return out;
}

IntegralityReport is_integral(const PresTerm& t, const RewriteConfig& cfg) {
    IntegralityReport rep;
    const LoopNormalForm nf = loop_normal_form(t, cfg);
    for (const auto& [w, c] : nf.term.terms()) {
        RatFun coeff = c;
        for (size_t i = 0; i < w.size();) {
            size_t j = i;
            while (j < w.size() && w[j] == w[i]) ++j;
            if (w[i].s == Sym::Xp || w[i].s == Sym::Xm) coeff *= quantum_factorial(static_cast<int>(j - i));
            i = j;
        }
        if (!coeff.is_laurent()) {
            rep.integral = false;
            rep.offending.emplace_back(word_str(w), coeff.str());
        }
    }
    return rep;
}

// ---- maps between presentations ----

namespace {

PresTerm substitute(const PresTerm& t, Presentation target, const std::function<PresTerm(const Letter&)>& img) {
    PresTerm out(target);
    for (const auto& [w, c] : t.terms()) {
        PresTerm prod = PresTerm::scalar(c, target);
        for (const auto& l : w) {
            prod = prod * img(l);
            if (prod.is_zero()) break;
        }
        out += prod;
    }
    return out;
}

PresTerm loop_word(const Word& w, const RatFun& c = RatFun(1)) {
    PresTerm t(Presentation::Loop);
    t.add(w, c);
    return t;
}

PresTerm dj_word(const Word& w, const RatFun& c = RatFun(1)) {
    PresTerm t(Presentation::DJ);
    t.add(w, c);
    return t;
}

// sum_{a+b=2} (-1)^a v^{-b} x^{(a)} y x^{(b)}, or v^{-a} when weight_a
PresTerm reflection_sum(Sym x, Sym y, bool weight_a = false) {
    const PresTerm X = dj_word({{x, 0}});
    const PresTerm Y = dj_word({{y, 0}});
    PresTerm r(Presentation::DJ);
    for (int a = 0; a <= 2; ++a) {
        const int b = 2 - a;
        r += divided_power(X, a) * Y * divided_power(X, b) * RatFun(a % 2 == 0 ? 1 : -1) * RatFun::v(weight_a ? -a : -b);
    }
    return r;
}

PresTerm kword(int e1, int e2) { return dj_word({{Sym::K1, e1}, {Sym::K2, e2}}); }

}  // namespace

PresTerm map_G(const PresTerm& t, GTable table) {
    if (t.presentation() != Presentation::DJ && !t.is_zero()) {
        bool scalar_only = t.terms().size() == 1 && t.terms().begin()->first.empty();
        if (!scalar_only) throw std::invalid_argument("map_G: expects DJ letters");
    }
    const int tw = table == GTable::AsStated ? 1 : -1;
    return substitute(t, Presentation::Loop, [tw](const Letter& l) {
        switch (l.s) {
            case Sym::E1: return loop_word({{Sym::Xm, 1}, {Sym::K, tw}, {Sym::C, -2 * tw}}, RatFun::v(-1));
            case Sym::E2: return loop_word({{Sym::Xp, 0}});
            case Sym::F1: return loop_word({{Sym::Xp, -1}, {Sym::K, -tw}, {Sym::C, 2 * tw}}, RatFun::v(-1));
            case Sym::F2: return loop_word({{Sym::Xm, 0}});
            case Sym::K1: return loop_word({{Sym::K, -l.i}, {Sym::C, 2 * l.i}});
            case Sym::K2: return loop_word({{Sym::K, l.i}});
            default: throw std::invalid_argument("map_G: not a DJ letter");
        }
    });
}

PresTerm lusztig_S(const PresTerm& t, Sign sg, STable table) {
    const bool fix = table == STable::Corrected;
    auto plus = [fix](const Letter& l) {
        switch (l.s) {
            case Sym::E1: return reflection_sum(Sym::E1, Sym::E2, fix);
            case Sym::F1: return reflection_sum(Sym::F1, Sym::F2, fix);
            case Sym::E2:
                if (fix) return dj_word({{Sym::F1, 0}, {Sym::K1, 1}}, RatFun::v(1));
                return dj_word({{Sym::K1, -1}, {Sym::F1, 0}}, RatFun::v(-1));
            case Sym::F2:
                if (fix) return dj_word({{Sym::E1, 0}, {Sym::K1, -1}}, RatFun::v(1));
                return dj_word({{Sym::E1, 0}, {Sym::K1, 1}}, RatFun::v(1));
            case Sym::K1: return kword(2 * l.i, l.i);
            case Sym::K2: return kword(-l.i, 0);
            default: throw std::invalid_argument("lusztig_S: not a DJ letter");
        }
    };
    auto minus = [fix](const Letter& l) {
        switch (l.s) {
            case Sym::E2: return reflection_sum(Sym::E2, Sym::E1);
            case Sym::F2: return reflection_sum(Sym::F2, Sym::F1);
            case Sym::E1:
                if (fix) return dj_word({{Sym::F2, 0}, {Sym::K2, -1}}, RatFun::v(-1));
                return dj_word({{Sym::F2, 0}, {Sym::K2, 1}}, RatFun::v(-1));
            case Sym::F1:
                if (fix) return dj_word({{Sym::E2, 0}, {Sym::K2, 1}}, RatFun::v(-1));
                return dj_word({{Sym::K2, -1}, {Sym::E2, 0}}, RatFun::v(1));
            case Sym::K1: return kword(0, -l.i);
            case Sym::K2: return kword(l.i, 2 * l.i);
            default: throw std::invalid_argument("lusztig_S: not a DJ letter");
        }
    };
    if (sg == Sign::Plus) return substitute(t, Presentation::DJ, plus);
    return substitute(t, Presentation::DJ, minus);
}

PresTerm coxeter_A(const PresTerm& t, Sign s, STable table) {
    return lusztig_S(lusztig_S(t, s, table), s, table);
}

PresTerm loop_coxeter_A(const PresTerm& t, Sign sg) {
    const int d = sg == Sign::Plus ? 1 : -1;
    return substitute(t, Presentation::Loop, [d](const Letter& l) {
        switch (l.s) {
            case Sym::Xp: return loop_word({{Sym::Xp, l.i - 2 * d}});
            case Sym::Xm: return loop_word({{Sym::Xm, l.i + 2 * d}});
            case Sym::K: return loop_word({{Sym::K, l.i}, {Sym::C, -4 * d * l.i}});
            case Sym::H:
            case Sym::C: return loop_word({l});
            default: throw std::invalid_argument("loop_coxeter_A: not a loop letter");
        }
    });
}

std::vector<NamedTerm> dj_generators() {
    return {{"E1", dj_word({{Sym::E1, 0}})}, {"E2", dj_word({{Sym::E2, 0}})}, {"F1", dj_word({{Sym::F1, 0}})},
            {"F2", dj_word({{Sym::F2, 0}})}, {"K1", dj_word({{Sym::K1, 1}})}, {"K2", dj_word({{Sym::K2, 1}})}};
}

std::vector<NamedTerm> dj_relators() {
    std::vector<NamedTerm> rel;
    const Sym E[2] = {Sym::E1, Sym::E2};
    const Sym F[2] = {Sym::F1, Sym::F2};
    const Sym Ks[2] = {Sym::K1, Sym::K2};
    auto g = [](Sym s) { return dj_word({{s, 0}}); };
    auto k = [](Sym s, int e) { return dj_word({{s, e}}); };
    const int cartan[2][2] = {{2, -2}, {-2, 2}};
    for (int e : {1, -1}) {
        const PresTerm Z = kword(e, e);
        const std::string zn = e > 0 ? "Z+" : "Z-";
        for (int i = 0; i < 2; ++i) {
            rel.push_back({"[" + zn + ",E" + std::to_string(i + 1) + "]", commutator(Z, g(E[i]))});
            rel.push_back({"[" + zn + ",F" + std::to_string(i + 1) + "]", commutator(Z, g(F[i]))});
        }
    }
    for (int i = 0; i < 2; ++i) {
        const std::string n = std::to_string(i + 1);
        const PresTerm one = PresTerm::scalar(1, Presentation::DJ);
        // written letter by letter so that the relator is not merged away
        PresTerm a(Presentation::DJ), b(Presentation::DJ);
        a.add({{Ks[i], 1}}, 1);
        b.add({{Ks[i], -1}}, 1);
        rel.push_back({"K" + n + " K" + n + "^-1 - 1", a * b - one});
        rel.push_back({"K" + n + "^-1 K" + n + " - 1", b * a - one});
    }
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            const std::string ni = std::to_string(i + 1), nj = std::to_string(j + 1);
            rel.push_back({"K" + ni + " E" + nj + " - v^{-c} E" + nj + " K" + ni,
                           k(Ks[i], 1) * g(E[j]) - g(E[j]) * k(Ks[i], 1) * RatFun::v(-cartan[i][j])});
            rel.push_back({"K" + ni + " F" + nj + " - v^{c} F" + nj + " K" + ni,
                           k(Ks[i], 1) * g(F[j]) - g(F[j]) * k(Ks[i], 1) * RatFun::v(cartan[i][j])});
        }
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) {
            PresTerm r = commutator(g(E[i]), g(F[j]));
            if (i == j) r -= (k(Ks[i], 1) - k(Ks[i], -1)) * (RatFun::v(1) / (RatFun::v(1) - RatFun::v(-1)));
            rel.push_back({"[E" + std::to_string(i + 1) + ",F" + std::to_string(j + 1) + "]", r});
        }
    for (int i = 0; i < 2; ++i) {
        const int j = 1 - i;
        PresTerm se(Presentation::DJ), sf(Presentation::DJ);
        for (int kk = 0; kk <= 3; ++kk) {
            const RatFun sgn(kk % 2 == 0 ? 1 : -1);
            se += divided_power(g(E[i]), kk) * g(E[j]) * divided_power(g(E[i]), 3 - kk) * sgn;
            sf += divided_power(g(F[i]), kk) * g(F[j]) * divided_power(g(F[i]), 3 - kk) * sgn;
        }
        const std::string ij = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        rel.push_back({"Serre E" + ij, se});
        rel.push_back({"Serre F" + ij, sf});
    }
    return rel;
}

std::vector<HomVerdict> verify_hom(const std::vector<NamedTerm>& relators, GTable table, const RewriteConfig& cfg) {
    std::vector<HomVerdict> out;
    for (const auto& r : relators) {
        HomVerdict h;
        h.relator = r.name;
        try {
            h.normal_form = loop_normal_form(map_G(r.term, table), cfg);
            h.holds = h.normal_form.is_zero();
        } catch (const BoundError& e) {
            h.error = e.what();
        }
        out.push_back(std::move(h));
    }
    return out;
}

nlohmann::json to_json(const HomVerdict& h) {
    nlohmann::json j;
    j["relator"] = h.relator;
    j["normalForm"] = h.normal_form.str();
    j["verdict"] = h.error.empty() ? (h.holds ? "holds" : "fails") : "bound exceeded";
    if (!h.error.empty()) j["error"] = h.error;
    return j;
}

// ---- evaluation ----

namespace {

DoubleElement letter_image(const Letter& l, int q) {
    switch (l.s) {
        case Sym::E1: return DoubleElement::plus(HallElement::basis(IsoClass::S1(), q));
        case Sym::E2: return DoubleElement::plus(HallElement::basis(IsoClass::S2(), q));
        case Sym::F1: return DoubleElement::minus(HallElement::basis(IsoClass::S1(), q));
        case Sym::F2: return DoubleElement::minus(HallElement::basis(IsoClass::S2(), q));
        case Sym::K1: return DoubleElement::K(KHalf::of(KClass(l.i, 0)), q);
        case Sym::K2: return DoubleElement::K(KHalf::of(KClass(0, l.i)), q);
        case Sym::Xp: return L(l.i, Wing::Plus, q);
        case Sym::Xm: return L(-l.i, Wing::Minus, q);
        case Sym::H:
            if (l.i > 0) return T_tilde(l.i, Wing::Plus, q);
            return T_tilde(-l.i, Wing::Minus, q) * ScalarQ(q, -1);
        case Sym::K: return K_p1(P1Class{l.i, 0}, q);
        case Sym::C: return K_p1(P1Class{0, l.i}, q);
    }
    throw std::logic_error("letter_image");
}

}  // namespace

DoubleElement ev_q(const PresTerm& t, int q) {
    std::map<Letter, DoubleElement> images;
    auto image = [&](const Letter& l) -> const DoubleElement& {
        auto it = images.find(l);
        if (it == images.end()) it = images.emplace(l, letter_image(l, q)).first;
        return it->second;
    };
    DoubleElement out(q);
    // words arrive sorted, so consecutive words share prefixes
    std::vector<DoubleElement> prefix{DoubleElement::one(q)};
    Word last;
    for (const auto& [w, c] : t.terms()) {
        size_t common = 0;
        while (common < w.size() && common < last.size() && w[common] == last[common]) ++common;
        prefix.resize(common + 1, DoubleElement(q));
        for (size_t j = common; j < w.size(); ++j) prefix.push_back(dmul(prefix.back(), image(w[j])));
        last = w;
        out += prefix.back() * specialize(c, q);
    }
    return out;
}

DoubleElement ev_lusztig_power(const PresTerm& t, Sign s, int n, int q, STable table) {
    if (t.presentation() != Presentation::DJ && !t.is_zero())
        throw std::invalid_argument("ev_lusztig_power: expects DJ letters");
    // ev(S^k(l)) = ev(S^{k-1}(S(l))), memoized per (letter, k)
    std::map<Letter, PresTerm> one_step;
    std::map<std::pair<Letter, int>, DoubleElement> memo;
    std::function<DoubleElement(const PresTerm&, int)> evaluate;
    std::function<const DoubleElement&(const Letter&, int)> image = [&](const Letter& l, int k) -> const DoubleElement& {
        auto key = std::make_pair(l, k);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        DoubleElement d(q);
        if (k == 0) {
            d = ev_q(PresTerm::word({l}), q);
        } else {
            auto it = one_step.find(l);
            if (it == one_step.end()) it = one_step.emplace(l, lusztig_S(PresTerm::word({l}), s, table)).first;
            d = evaluate(it->second, k - 1);
        }
        return memo.emplace(key, std::move(d)).first->second;
    };
    evaluate = [&](const PresTerm& x, int k) {
        DoubleElement out(q);
        for (const auto& [w, c] : x.terms()) {
            DoubleElement prod = DoubleElement::one(q);
            for (const auto& l : w) prod = dmul(prod, image(l, k));
            out += prod * specialize(c, q);
        }
        return out;
    };
    return evaluate(t, n);
}

int double_rank(const std::vector<DoubleElement>& xs) {
    using Row = std::map<DoubleElement::Key, ScalarQ>;
    std::map<DoubleElement::Key, Row> pivots;
    int rank = 0;
    for (const auto& x : xs) {
        Row row(x.terms().begin(), x.terms().end());
        for (;;) {
            auto it = std::find_if(row.begin(), row.end(), [&](const auto& kv) { return pivots.count(kv.first) > 0; });
            if (it == row.end()) break;
            const ScalarQ f = it->second;
            for (const auto& [k, c] : pivots.at(it->first)) {
                auto [jt, fresh] = row.try_emplace(k, -(f * c));
                if (!fresh) {
                    jt->second -= f * c;
                    if (jt->second.is_zero()) row.erase(jt);
                }
            }
        }
        if (row.empty()) continue;
        const ScalarQ inv = row.begin()->second.inverse();
        for (auto& [k, c] : row) c *= inv;
        pivots.emplace(row.begin()->first, std::move(row));
        ++rank;
    }
    return rank;
}

std::vector<Word> small_normal_monomials(int count) {
    const std::vector<Letter> pool = {{Sym::Xp, 1}, {Sym::Xp, 0}, {Sym::Xp, -1}, {Sym::H, 1},  {Sym::H, 2},
                                      {Sym::Xm, 1}, {Sym::Xm, 0}, {Sym::Xm, -1}, {Sym::H, -1}, {Sym::H, -2}};
    std::vector<Word> bodies{{}};
    for (const auto& a : pool) bodies.push_back({a});
    for (const auto& a : pool)
        for (const auto& b : pool)
            if (ordered(a, b)) bodies.push_back({a, b});
    std::vector<std::pair<std::tuple<int, int, Word>, Word>> all;
    for (const auto& body : bodies)
        for (int a = -1; a <= 1; ++a)
            for (int b = -1; b <= 1; ++b) {
                Word w;
                int cost = a * a + b * b;
                for (const auto& l : body) cost += 1 + (l.i < 0 ? -l.i : l.i);
                size_t j = 0;
                while (j < body.size() && block(body[j]) < 2) w.push_back(body[j++]);
                if (a != 0) w.push_back({Sym::K, a});
                if (b != 0) w.push_back({Sym::C, b});
                w.insert(w.end(), body.begin() + static_cast<long>(j), body.end());
                all.push_back({{cost, static_cast<int>(body.size()), w}, w});
            }
    std::sort(all.begin(), all.end());
    std::vector<Word> out;
    for (int i = 0; i < count && i < static_cast<int>(all.size()); ++i) out.push_back(all[i].second);
    return out;
}

}  // namespace kronhall
