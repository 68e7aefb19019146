#include "kronhall/p1.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace kronhall {

std::string P1Class::str() const {
    std::ostringstream os;
    os << "(" << rank << ",";
    if (deg2 % 2 == 0)
        os << deg2 / 2;
    else
        os << deg2 << "/2";
    os << ")";
    return os.str();
}

KHalf transport_class(const P1Class& c) { return KHalf::doubled(c.deg2, 2 * c.rank + c.deg2); }

int p1_euler(const P1Class& a, const P1Class& b) {
    if (!a.is_sheaf_class() || !b.is_sheaf_class()) throw std::invalid_argument("p1_euler: half-integral degree");
    return a.rank * b.rank + a.rank * (b.deg2 / 2) - b.rank * (a.deg2 / 2);
}

SheafDescriptor SheafDescriptor::line_bundle(int n) {
    SheafDescriptor s;
    s.line_bundles.push_back(n);
    return s;
}

SheafDescriptor SheafDescriptor::torsion_sheaf(const ClosedPoint& x, int t) {
    if (t <= 0) throw std::invalid_argument("torsion_sheaf: t must be positive");
    SheafDescriptor s;
    s.torsion[x] = {t};
    return s;
}

SheafDescriptor SheafDescriptor::direct_sum(const SheafDescriptor& a, const SheafDescriptor& b) {
    SheafDescriptor s = a;
    s.line_bundles.insert(s.line_bundles.end(), b.line_bundles.begin(), b.line_bundles.end());
    std::sort(s.line_bundles.begin(), s.line_bundles.end());
    for (const auto& [x, parts] : b.torsion) {
        Partition& p = s.torsion[x];
        p.insert(p.end(), parts.begin(), parts.end());
        std::sort(p.begin(), p.end(), std::greater<>());
    }
    return s;
}

P1Class SheafDescriptor::kclass() const {
    P1Class c;
    for (int n : line_bundles) c = c + P1Class::of(1, n);
    for (const auto& [x, parts] : torsion)
        for (int t : parts) c = c + P1Class::of(0, t * x.degree());
    return c;
}

std::string SheafDescriptor::str() const {
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first) os << "+";
        first = false;
    };
    for (int n : line_bundles) {
        sep();
        os << "O(" << n << ")";
    }
    for (const auto& [x, parts] : torsion)
        for (int t : parts) {
            sep();
            os << "S" << t << "@" << x.str();
        }
    if (first) os << "0";
    return os.str();
}

Transported obj_transport(const SheafDescriptor& s) {
    Transported t;
    int shift = -1;
    for (int n : s.line_bundles) {
        int sh = n >= 0 ? 0 : 1;
        if (shift >= 0 && sh != shift) throw std::invalid_argument("obj_transport: summands in different degrees");
        shift = sh;
        t.object = IsoClass::direct_sum(t.object, n >= 0 ? IsoClass::P(n) : IsoClass::I(-n - 1));
    }
    if (!s.torsion.empty()) {
        if (shift == 1) throw std::invalid_argument("obj_transport: summands in different degrees");
        shift = 0;
        IsoClass tor;
        tor.regular = s.torsion;
        t.object = IsoClass::direct_sum(t.object, tor);
    }
    t.shift = std::max(shift, 0);
    if (t.shift == 1) {
        KClass c = t.object.kclass();
        t.v_exponent = euler_form(c, c);
        t.twist = -KHalf::of(c);
    }
    return t;
}

DoubleElement transport_element(const SheafDescriptor& s, Wing w, int q) {
    Transported t = obj_transport(s);
    HallElement h = HallElement::basis(t.object, q);
    bool plus_side = (w == Wing::Plus) != (t.shift % 2 == 1);
    DoubleElement x = plus_side ? DoubleElement::plus(h) : DoubleElement::minus(h);
    if (t.shift == 0) return x;
    // the plus image carries K of the shifted class, the minus image its inverse
    KHalf twist = w == Wing::Plus ? -t.twist : t.twist;
    return dmul(x, DoubleElement::K(twist, q)) * vpow(t.v_exponent, q);
}

DoubleElement L(int n, Wing w, int q) { return transport_element(SheafDescriptor::line_bundle(n), w, q); }

DoubleElement K_p1(const P1Class& c, int q) { return DoubleElement::K(transport_class(c), q); }

HallElement one_tor(int r, int q) { return tube_one(r, q); }

namespace {

SeriesOps<HallElement> hall_series_ops(int q) {
    SeriesOps<HallElement> ops;
    ops.mul = [](const HallElement& a, const HallElement& b) { return hall_mul(a, b); };
    ops.scale = [q](const HallElement& a, const Rational& c) { return a * ScalarQ(q, c); };
    ops.is_zero = [](const HallElement& a) { return a.is_zero(); };
    ops.zero = HallElement(q);
    ops.one = HallElement::one(q);
    return ops;
}

std::mutex torsion_mutex;
std::map<std::pair<int, int>, HallElement> T_cache, Theta_cache;

void fill_torsion_caches(int r, int q) {
    auto ops = hall_series_ops(q);
    FormalSeries<HallElement> ones{std::vector<HallElement>(r + 1, HallElement(q))};
    ones.coeffs[0] = HallElement::one(q);
    for (int k = 1; k <= r; ++k) ones.coeffs[k] = one_tor(k, q);
    FormalSeries<HallElement> lg = series_log(ones, ops);
    FormalSeries<HallElement> ts{std::vector<HallElement>(r + 1, HallElement(q))};
    const ScalarQ c = vpow(-1, q) - vpow(1, q);
    for (int k = 1; k <= r; ++k) {
        HallElement t = lg.coeffs[k] * specialize(quantum_int(k), q);
        T_cache[{k, q}] = t;
        ts.coeffs[k] = t * c;
    }
    FormalSeries<HallElement> th = series_exp(ts, ops);
    for (int k = 1; k <= r; ++k) Theta_cache[{k, q}] = th.coeffs[k];
}

const HallElement& torsion_lookup(std::map<std::pair<int, int>, HallElement>& cache, int r, int q) {
    if (r <= 0) throw std::invalid_argument("torsion generators need r >= 1");
    std::lock_guard<std::mutex> lock(torsion_mutex);
    auto it = cache.find({r, q});
    if (it == cache.end()) {
        fill_torsion_caches(r, q);
        it = cache.find({r, q});
    }
    return it->second;
}

DoubleElement wing_of(const HallElement& h, Wing w) {
    return w == Wing::Plus ? DoubleElement::plus(h) : DoubleElement::minus(h);
}

DoubleElement C_power_half(int k, int q) { return K_p1(P1Class::C_half() * k, q); }

}  // namespace

const HallElement& T_elem(int r, int q) { return torsion_lookup(T_cache, r, q); }
const HallElement& Theta_elem(int r, int q) { return torsion_lookup(Theta_cache, r, q); }

DoubleElement T_double(int r, Wing w, int q) { return wing_of(T_elem(r, q), w); }

DoubleElement T_tilde(int r, Wing w, int q) {
    return dmul(wing_of(T_elem(r, q), w), C_power_half(w == Wing::Plus ? -r : r, q));
}

DoubleElement Theta_tilde(int r, Wing w, int q) {
    return dmul(wing_of(Theta_elem(r, q), w), C_power_half(w == Wing::Plus ? -r : r, q));
}

HallElement theta_census(int r, int q) {
    std::vector<ClosedPoint> points;
    for (int d = 1; d <= r; ++d)
        for (auto& x : closed_points(d, q)) points.push_back(x);
    HallElement out(q);
    IsoClass current;
    ScalarQ weight = vpow(-r, q);
    std::function<void(std::size_t, int, const ScalarQ&)> rec = [&](std::size_t i, int left, const ScalarQ& w) {
        if (left == 0) {
            out.add(current, {}, w);
            return;
        }
        if (i == points.size()) return;
        rec(i + 1, left, w);
        const ClosedPoint& x = points[i];
        const int d = x.degree();
        const ScalarQ factor = w * (ScalarQ::one(q) - vpow(2 * d, q));
        for (int t = 1; t * d <= left; ++t) {
            current.regular[x] = {t};
            rec(i + 1, left - t * d, factor);
            current.regular.erase(x);
        }
    };
    rec(0, r, weight);
    return out;
}

HallElement lb_coproduct_census(int n, int r, int q) {
    // nonzero forms sum c_i x^{r-i} y^i up to scalars: lowest nonzero c_i = 1
    std::map<IsoClass, long> count;
    std::vector<int> c(r + 1, 0);
    for (int lead = 0; lead <= r; ++lead) {
        std::fill(c.begin(), c.end(), 0);
        c[lead] = 1;
        const int free_slots = r - lead;
        long total = 1;
        for (int i = 0; i < free_slots; ++i) total *= q;
        for (long code = 0; code < total; ++code) {
            long x = code;
            for (int i = lead + 1; i <= r; ++i) {
                c[i] = static_cast<int>(x % q);
                x /= q;
            }
            FqPoly g = poly_trim(FqPoly(c.begin(), c.end()), q);  // f(1, y)
            IsoClass t;
            const int at_infinity = r - poly_degree(g);
            if (at_infinity > 0) t.regular[ClosedPoint::at_infinity()] = {at_infinity};
            for (auto& [p, e] : poly_factor(g, q)) t.regular[ClosedPoint::finite(p)] = {e};
            ++count[t];
        }
    }
    const P1Class quotient = P1Class::of(0, r), sub = P1Class::of(1, n - r);
    const ScalarQ twist = vpow(-p1_euler(quotient, sub), q);
    HallElement out(q);
    for (const auto& [t, f] : count) out.add(t, {}, twist * ScalarQ(q, Rational(BigInt(f) * aut_cached(t, q))));
    return out;
}

std::vector<LbCoproductCheck> lb_coproduct_check(int n, int rmax, int q) {
    std::vector<LbCoproductCheck> out;
    for (int r = 1; r <= rmax; ++r) {
        LbCoproductCheck c;
        c.r = r;
        c.census = lb_coproduct_census(n, r, q);
        c.theta = Theta_elem(r, q);
        c.holds = c.census == c.theta;
        out.push_back(std::move(c));
    }
    return out;
}

HallElement szanto_lhs(int m, int n, int q) {
    HallElement i = HallElement::basis(IsoClass::I(m), q), p = HallElement::basis(IsoClass::P(n), q);
    return hall_mul(i, p) - hall_mul(p, i) * vpow(2, q);
}

HallElement szanto_rhs(int m, int n, int q) {
    if (m < 0 || n < 0) throw std::invalid_argument("szanto: m, n must be nonnegative");
    return theta_census(m + n + 1, q) * (vpow(-1, q) - vpow(1, q)).inverse();
}

bool szanto_check(int m, int n, int q) { return szanto_lhs(m, n, q) == szanto_rhs(m, n, q); }

std::vector<RelationCheck> p1_relation_checks(int nmin, int nmax, int rmax, int q) {
    std::vector<RelationCheck> out;
    bool in_double = false;
    auto record = [&](std::string name, bool holds) { out.push_back({std::move(name), holds, in_double}); };
    auto tag = [](std::initializer_list<std::pair<const char*, int>> vals) {
        std::ostringstream os;
        os << " [";
        bool first = true;
        for (auto [k, v] : vals) {
            if (!first) os << ",";
            first = false;
            os << k << "=" << v;
        }
        os << "]";
        return os.str();
    };
    const Wing wings[2] = {Wing::Plus, Wing::Minus};
    auto sgn = [](Wing w) { return w == Wing::Plus ? "+" : "-"; };
    auto pm = [](Wing w) { return w == Wing::Plus ? 1 : -1; };
    auto opposite = [](Wing w) { return w == Wing::Plus ? Wing::Minus : Wing::Plus; };
    const DoubleElement K = K_p1(P1Class::of(1, 0), q);
    const DoubleElement C = K_p1(P1Class::of(0, 1), q);
    auto two_r_over_r = [q](int r) { return specialize(quantum_int(2 * r), q) * ScalarQ(q, Rational(1, r)); };

    // Hall algebra of P^1, carried by the plus wing
    for (int n = nmin; n <= nmax; ++n)
        for (Wing w : wings)
            record(std::string("C central with L") + sgn(w) + tag({{"n", n}}), dbracket(C, L(n, w, q)).is_zero());
    for (int r = 1; r <= rmax; ++r)
        for (Wing w : wings)
            record(std::string("C central with T") + sgn(w) + tag({{"r", r}}), dbracket(C, T_double(r, w, q)).is_zero());
    for (int r = 1; r <= rmax; ++r) {
        record("[K,T_r] = 0" + tag({{"r", r}}), dbracket(K, T_double(r, Wing::Plus, q)).is_zero());
        for (int s = 1; s <= rmax; ++s)
            record("[T_r,T_s] = 0" + tag({{"r", r}, {"s", s}}),
                   dbracket(T_double(r, Wing::Plus, q), T_double(s, Wing::Plus, q)).is_zero());
    }
    for (int n = nmin; n <= nmax; ++n) {
        DoubleElement l = L(n, Wing::Plus, q);
        record("K L_n = v^-2 L_n K" + tag({{"n", n}}), dmul(K, l) == dmul(l, K) * vpow(-2, q));
    }
    for (int r = 1; r <= rmax; ++r)
        for (int n = nmin; n <= nmax; ++n)
            record("[T_r,L_n] = [2r]/r L_{n+r}" + tag({{"r", r}, {"n", n}}),
                   dbracket(T_double(r, Wing::Plus, q), L(n, Wing::Plus, q)) == L(n + r, Wing::Plus, q) * two_r_over_r(r));
    for (int m = nmin; m <= nmax; ++m)
        for (int n = nmin; n <= nmax; ++n) {
            auto l = [&](int k) { return L(k, Wing::Plus, q); };
            DoubleElement lhs = dmul(l(m), l(n + 1)) + dmul(l(n), l(m + 1));
            DoubleElement rhs = (dmul(l(n + 1), l(m)) + dmul(l(m + 1), l(n))) * vpow(2, q);
            record("L_m L_{n+1} + L_n L_{m+1} = v^2 (L_{n+1} L_m + L_{m+1} L_n)" + tag({{"m", m}, {"n", n}}), lhs == rhs);
        }

    // relations in the double
    in_double = true;
    for (Wing w : wings)
        for (int r = 1; r <= rmax; ++r) {
            record(std::string("[K,T~") + sgn(w) + "_r] = 0" + tag({{"r", r}}), dbracket(K, T_tilde(r, w, q)).is_zero());
            for (int s = 1; s <= rmax; ++s)
                record(std::string("[T~") + sgn(w) + "_r,T~" + sgn(w) + "_s] = 0" + tag({{"r", r}, {"s", s}}),
                       dbracket(T_tilde(r, w, q), T_tilde(s, w, q)).is_zero());
        }
    for (Wing w : wings)
        for (int n = nmin; n <= nmax; ++n) {
            DoubleElement l = L(n, w, q);
            record(std::string("K L") + sgn(w) + "_n = v^-+2 L" + sgn(w) + "_n K" + tag({{"n", n}}),
                   dmul(K, l) == dmul(l, K) * vpow(-2 * pm(w), q));
        }
    for (Wing w : wings)
        for (int r = 1; r <= rmax; ++r)
            for (int n = nmin; n <= nmax; ++n) {
                DoubleElement c = C_power_half(-pm(w) * r, q);
                record(std::string("[T~") + sgn(w) + "_r,L" + sgn(w) + "_n] = [2r]/r L" + sgn(w) + "_{n+r} C^-+r/2" +
                           tag({{"r", r}, {"n", n}}),
                       dbracket(T_tilde(r, w, q), L(n, w, q)) == dmul(L(n + r, w, q), c) * two_r_over_r(r));
                record(std::string("[L") + sgn(w) + "_n,T~" + sgn(opposite(w)) + "_r] = [2r]/r L" + sgn(w) +
                           "_{n-r} C^-+r/2" + tag({{"r", r}, {"n", n}}),
                       dbracket(L(n, w, q), T_tilde(r, opposite(w), q)) == dmul(L(n - r, w, q), c) * two_r_over_r(r));
            }
    const ScalarQ inv_diff = (vpow(-1, q) - vpow(1, q)).inverse();
    for (int r = 1; r <= rmax; ++r)
        for (int s = 1; s <= rmax; ++s) {
            DoubleElement rhs(q);
            if (r == s)
                rhs = (K_p1(P1Class::of(0, -r), q) - K_p1(P1Class::of(0, r), q)) * (two_r_over_r(r) * inv_diff);
            record("[T~+_r,T~-_s] = delta [2r]/r (C^-r - C^r)/(v^-1 - v)" + tag({{"r", r}, {"s", s}}),
                   dbracket(T_tilde(r, Wing::Plus, q), T_tilde(s, Wing::Minus, q)) == rhs);
        }
    const ScalarQ v_over = vpow(1, q) * (vpow(1, q) - vpow(-1, q)).inverse();
    for (int n = nmin; n <= nmax; ++n)
        for (int m = nmin; m <= nmax; ++m) {
            DoubleElement rhs(q);
            if (n > m)
                rhs = dmul(dmul(Theta_tilde(n - m, Wing::Plus, q), K), C_power_half(m + n, q)) * v_over;
            else if (n < m)
                rhs = dmul(dmul(Theta_tilde(m - n, Wing::Minus, q), K_p1(P1Class::of(-1, 0), q)),
                           C_power_half(-(m + n), q)) *
                      (-v_over);
            record("[L+_n,L-_m] trichotomy" + tag({{"n", n}, {"m", m}}),
                   dbracket(L(n, Wing::Plus, q), L(m, Wing::Minus, q)) == rhs);
        }
    return out;
}

}  // namespace kronhall
