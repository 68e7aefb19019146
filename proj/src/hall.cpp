#include "kronhall/hall.hpp"

#include <mutex>
#include <sstream>

namespace kronhall {

void to_json(nlohmann::json& j, const ScalarQ& s) { j = {{"a", s.a().get_str()}, {"b", s.b().get_str()}, {"q", s.q()}}; }

void from_json(const nlohmann::json& j, ScalarQ& s) {
    Rational a(j.at("a").get<std::string>()), b(j.at("b").get<std::string>());
    a.canonicalize();
    b.canonicalize();
    s = ScalarQ(j.at("q").get<int>(), a, b);
}

KHalf KHalf::doubled(int h1, int h2) {
    if ((h1 - h2) % 2 != 0) throw std::invalid_argument("half class must be integral plus a multiple of (1,1)/2");
    return {h1, h2};
}

std::string KHalf::str() const {
    auto half = [](int h) { return h % 2 == 0 ? std::to_string(h / 2) : std::to_string(h) + "/2"; };
    return "(" + half(h1) + "," + half(h2) + ")";
}

int sym_pair(const KHalf& a, const KHalf& b) {
    int s = sym_form({a.h1, a.h2}, {b.h1, b.h2});
    if (s % 4 != 0) throw std::logic_error("non-integral pairing of half classes");
    return s / 4;
}

int sym_pair(const KHalf& a, const KClass& b) { return sym_pair(a, KHalf::of(b)); }

ScalarQ vpow(int e, int q) {
    static std::map<std::pair<int, int>, ScalarQ> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(e, q);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    return cache[key] = ScalarQ::v_power(e, q);
}

namespace {

int hall_dim_bound(int q) { return q == 2 ? 12 : q == 3 ? 8 : 6; }

}  // namespace

// --------------------------------------------------------------- HallElement

HallElement HallElement::basis(const IsoClass& x, int q, const KHalf& k) {
    HallElement h(q);
    h.terms_[{x, k}] = ScalarQ::one(q);
    return h;
}

ScalarQ HallElement::coeff(const IsoClass& x, const KHalf& k) const {
    auto it = terms_.find({x, k});
    return it == terms_.end() ? ScalarQ(q_) : it->second;
}

void HallElement::add(const IsoClass& x, const KHalf& k, const ScalarQ& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace({x, k}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

HallElement& HallElement::operator+=(const HallElement& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, c);
    return *this;
}

HallElement& HallElement::operator-=(const HallElement& o) {
    for (const auto& [k, c] : o.terms_) add(k.first, k.second, -c);
    return *this;
}

HallElement& HallElement::operator*=(const ScalarQ& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

std::string HallElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        os << (first ? "" : " + ") << "(" << c.str() << ")*[" << k.first.str() << "]";
        if (!k.second.is_zero()) os << "K" << k.second.str();
        first = false;
    }
    return os.str();
}

namespace {

nlohmann::json half_json(int h) {
    if (h % 2 == 0) return h / 2;
    return std::to_string(h) + "/2";
}

int half_from_json(const nlohmann::json& j) {
    if (j.is_number_integer()) return 2 * j.get<int>();
    Rational r(j.get<std::string>());
    r.canonicalize();
    r *= 2;
    if (r.get_den() != 1) throw std::invalid_argument("K coordinate must be a multiple of 1/2");
    return static_cast<int>(r.get_num().get_si());
}

}  // namespace

void to_json(nlohmann::json& j, const HallElement& h) {
    j = nlohmann::json::array();
    for (const auto& [k, c] : h.terms()) {
        nlohmann::json t;
        t["class"] = k.first;
        t["K"] = {half_json(k.second.h1), half_json(k.second.h2)};
        t["coeff"] = c;
        j.push_back(t);
    }
}

void from_json(const nlohmann::json& j, HallElement& h) {
    int q = j.empty() ? 2 : j.at(0).at("coeff").at("q").get<int>();
    h = HallElement(q);
    for (const auto& t : j) {
        KHalf k = KHalf::doubled(half_from_json(t.at("K").at(0)), half_from_json(t.at("K").at(1)));
        h.add(t.at("class").get<IsoClass>(), k, t.at("coeff").get<ScalarQ>());
    }
}

// ------------------------------------------------------------- structure

BigInt aut_cached(const IsoClass& x, int q) {
    static std::map<std::pair<IsoClass, int>, BigInt> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find({x, q}); it != cache.end()) return it->second;
    }
    BigInt a = aut_count(x, q);
    std::lock_guard<std::mutex> lock(mu);
    return cache[{x, q}] = a;
}

std::vector<std::pair<IsoClass, BigInt>> hall_product_by_extensions(const IsoClass& x, const IsoClass& y, int q) {
    Rep rx = canonical_rep(x, q), ry = canonical_rep(y, q);
    FqMatrix D = intertwiner_matrix(rx, ry);
    const int hom = D.cols() - mat_rank(D);
    FqMatrix Dt = D.transpose();
    std::vector<int> piv = rref_in_place(Dt);
    std::vector<int> free;
    for (int c = 0, p = 0; c < D.rows(); ++c) {
        if (p < static_cast<int>(piv.size()) && piv[p] == c) ++p;
        else free.push_back(c);
    }
    const int ext = static_cast<int>(free.size());
    double cost = 1;
    for (int i = 0; i < ext; ++i) cost *= q;
    if (cost > static_cast<double>(kMaxExtensionCount))
        throw BoundError("hall product " + x.str() + " * " + y.str() + ": q^ext = " + std::to_string(q) + "^" +
                         std::to_string(ext) + " extensions exceed the enumeration cap");

    const int x1 = rx.dim.d1, y1 = ry.dim.d1, y2 = ry.dim.d2;
    Rep z = Rep::zero(rx.dim + ry.dim, q);
    z.A.put(0, 0, ry.A);
    z.A.put(y2, y1, rx.A);
    z.B.put(0, 0, ry.B);
    z.B.put(y2, y1, rx.B);
    std::map<IsoClass, long> counts;
    std::vector<int> digits(ext, 0);
    while (true) {
        for (int i = 0; i < ext; ++i) {
            int coord = free[i];
            bool second = coord >= y2 * x1;
            int local = second ? coord - y2 * x1 : coord;
            (second ? z.B : z.A).set(local / x1, y1 + local % x1, digits[i]);
        }
        ++counts[decompose(z)];
        int i = 0;
        for (; i < ext; ++i) {
            if (++digits[i] < q) break;
            digits[i] = 0;
        }
        if (i == ext) break;
    }
    BigInt denom = aut_cached(x, q) * aut_cached(y, q);
    for (int i = 0; i < hom; ++i) denom *= q;
    std::vector<std::pair<IsoClass, BigInt>> out;
    for (const auto& [zc, n] : counts) {
        BigInt num = BigInt(n) * aut_cached(zc, q);
        if (num % denom != 0) throw std::logic_error("non-integral Hall number for " + zc.str());
        out.emplace_back(zc, num / denom);
    }
    return out;
}

std::vector<std::pair<IsoClass, BigInt>> hall_product_by_subobjects(const IsoClass& x, const IsoClass& y, int q) {
    std::vector<std::pair<IsoClass, BigInt>> out;
    for (const auto& z : enumerate_iso_classes(x.dim() + y.dim(), q)) {
        long f = hall_number(z, x, y, q, hall_dim_bound(q));
        if (f != 0) out.emplace_back(z, BigInt(f));
    }
    return out;
}

const std::vector<std::pair<IsoClass, BigInt>>& hall_product_terms(const IsoClass& x, const IsoClass& y, int q) {
    using Key = std::tuple<IsoClass, IsoClass, int>;
    static std::map<Key, std::vector<std::pair<IsoClass, BigInt>>> cache;
    static std::mutex mu;
    Key key{x, y, q};
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    std::vector<std::pair<IsoClass, BigInt>> out;
    if (x.is_zero()) out.emplace_back(y, 1);
    else if (y.is_zero()) out.emplace_back(x, 1);
    else {
        // q^ext extensions versus subspace pairs of every Z of the total dimension
        int ext = ext_dim(x, y, q);
        double ext_cost = 1;
        for (int i = 0; i < ext; ++i) ext_cost *= q;
        DimVec dz = x.dim() + y.dim();
        double sub_cost = static_cast<double>(gaussian_binomial(dz.d1, y.dim().d1, q)) *
                          static_cast<double>(gaussian_binomial(dz.d2, y.dim().d2, q));
        bool sub_allowed = dz.total() <= hall_dim_bound(q);
        if (sub_allowed) sub_cost *= static_cast<double>(enumerate_iso_classes(dz, q).size());
        if (ext_cost <= static_cast<double>(kMaxExtensionCount) && (!sub_allowed || ext_cost <= 4 * sub_cost))
            out = hall_product_by_extensions(x, y, q);
        else if (sub_allowed)
            out = hall_product_by_subobjects(x, y, q);
        else
            throw BoundError("hall product " + x.str() + " * " + y.str() + " exceeds both enumeration bounds");
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(out)).first->second;
}

HallElement hall_mul(const HallElement& a, const HallElement& b) {
    const int q = a.q();
    HallElement r(q);
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            const auto& [x, alpha] = ka;
            const auto& [y, beta] = kb;
            int e = -sym_pair(alpha, y.kclass()) - euler_form(x.kclass(), y.kclass());
            ScalarQ c = ca * cb * vpow(e, q);
            for (const auto& [z, f] : hall_product_terms(x, y, q)) r.add(z, alpha + beta, c * Rational(f));
        }
    return r;
}

HallElement hall_pow(const HallElement& a, int n) {
    HallElement r = HallElement::one(a.q());
    for (int i = 0; i < n; ++i) r = hall_mul(r, a);
    return r;
}

const std::vector<CoproductTerm>& coproduct_terms(const IsoClass& z, int q) {
    static std::map<std::pair<IsoClass, int>, std::vector<CoproductTerm>> cache;
    static std::mutex mu;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find({z, q}); it != cache.end()) return it->second;
    }
    if (z.dim().total() > hall_dim_bound(q))
        throw BoundError("coproduct of " + z.str() + ": total dimension exceeds the bound " +
                         std::to_string(hall_dim_bound(q)));
    std::vector<CoproductTerm> out;
    BigInt az = aut_cached(z, q);
    for (const auto& [xy, f] : subobject_census(z, q)) {
        const auto& [x, y] = xy;
        Rational c(BigInt(f) * aut_cached(x, q) * aut_cached(y, q), az);
        c.canonicalize();
        out.push_back({x, y, vpow(-euler_form(x.kclass(), y.kclass()), q) * c});
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(std::make_pair(z, q), std::move(out)).first->second;
}

const std::vector<CoproductTerm>& coproduct_slice(const IsoClass& z, DimVec d, int q) {
    using Key = std::tuple<IsoClass, DimVec, int>;
    static std::map<Key, std::vector<CoproductTerm>> cache;
    static std::mutex mu;
    Key key{z, d, q};
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(key); it != cache.end()) return it->second;
    }
    std::vector<CoproductTerm> out;
    BigInt az = aut_cached(z, q);
    for (const auto& [xy, f] : subobject_slice(z, d, q)) {
        const auto& [x, y] = xy;
        Rational c(BigInt(f) * aut_cached(x, q) * aut_cached(y, q), az);
        c.canonicalize();
        out.push_back({x, y, vpow(-euler_form(x.kclass(), y.kclass()), q) * c});
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(key, std::move(out)).first->second;
}

HallTensor hall_coproduct(const HallElement& a) {
    HallTensor t;
    for (const auto& [k, c] : a.terms()) {
        const auto& [z, alpha] = k;
        for (const auto& term : coproduct_terms(z, a.q())) {
            auto key = std::make_tuple(term.quotient, KHalf::of(term.sub.kclass()) + alpha, term.sub, alpha);
            auto [it, inserted] = t.try_emplace(key, c * term.coeff);
            if (!inserted) {
                it->second += c * term.coeff;
                if (it->second.is_zero()) t.erase(it);
            }
        }
    }
    return t;
}

ScalarQ green_pair(const HallElement& a, const HallElement& b) {
    const int q = a.q();
    ScalarQ s(q);
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            if (ka.first != kb.first) continue;
            Rational inv(1);
            inv /= Rational(aut_cached(ka.first, q));
            s += ca * cb * vpow(-sym_pair(ka.second, kb.second), q) * inv;
        }
    return s;
}

ScalarQ green_pair_tensor(const HallElement& a, const HallElement& b, const HallTensor& t) {
    const int q = a.q();
    ScalarQ s(q);
    for (const auto& [k, c] : t) {
        const auto& [x, kx, y, ky] = k;
        ScalarQ l = green_pair(a, HallElement::basis(x, q, kx));
        if (l.is_zero()) continue;
        s += c * l * green_pair(b, HallElement::basis(y, q, ky));
    }
    return s;
}

HallElement divided_power(const IsoClass& x, int n, int q) {
    return hall_pow(HallElement::basis(x, q), n) * specialize(quantum_factorial(n), q).inverse();
}

HallElement one_alpha(const DimVec& d, int q) {
    HallElement h(q);
    for (const auto& c : enumerate_iso_classes(d, q)) h.add(c, {}, ScalarQ::one(q));
    return h;
}

HallElement tube_one(int r, int q) {
    HallElement h(q);
    for (const auto& c : regular_classes(r, q)) h.add(c, {}, ScalarQ::one(q));
    return h;
}

// ------------------------------------------------------------ DoubleElement

DoubleElement DoubleElement::term(const IsoClass& plus, const KHalf& k, const IsoClass& minus, int q,
                                  const ScalarQ& c) {
    DoubleElement d(q);
    d.add({plus, k, minus}, c);
    return d;
}

DoubleElement DoubleElement::K(const KHalf& k, int q) { return term({}, k, {}, q, ScalarQ::one(q)); }

DoubleElement DoubleElement::plus(const HallElement& h) {
    DoubleElement d(h.q());
    for (const auto& [k, c] : h.terms()) d.add({k.first, k.second, {}}, c);
    return d;
}

DoubleElement DoubleElement::minus(const HallElement& h) {
    DoubleElement d(h.q());
    for (const auto& [k, c] : h.terms())
        d.add({{}, -k.second, k.first}, c * vpow(sym_pair(k.second, k.first.kclass()), h.q()));
    return d;
}

void DoubleElement::add(const Key& k, const ScalarQ& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DoubleElement& DoubleElement::operator+=(const DoubleElement& o) {
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

DoubleElement& DoubleElement::operator-=(const DoubleElement& o) {
    for (const auto& [k, c] : o.terms_) add(k, -c);
    return *this;
}

DoubleElement& DoubleElement::operator*=(const ScalarQ& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_) v *= c;
    return *this;
}

std::string DoubleElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        os << (first ? "" : " + ") << "(" << c.str() << ")";
        if (!k.plus.is_zero()) os << "*[" << k.plus.str() << "]+";
        if (!k.k.is_zero()) os << "*K" << k.k.str();
        if (!k.minus.is_zero()) os << "*[" << k.minus.str() << "]-";
        first = false;
    }
    return os.str();
}


void to_json(nlohmann::json& j, const DoubleElement& d) {
    j = nlohmann::json::array();
    for (const auto& [k, c] : d.terms()) {
        nlohmann::json t;
        t["plus"] = k.plus;
        t["K"] = {half_json(k.k.h1), half_json(k.k.h2)};
        t["minus"] = k.minus;
        t["coeff"] = c;
        j.push_back(t);
    }
}

void from_json(const nlohmann::json& j, DoubleElement& d) {
    int q = j.empty() ? 2 : j.at(0).at("coeff").at("q").get<int>();
    d = DoubleElement(q);
    for (const auto& t : j) {
        KHalf k = KHalf::doubled(half_from_json(t.at("K").at(0)), half_from_json(t.at("K").at(1)));
        d.add({t.at("plus").get<IsoClass>(), k, t.at("minus").get<IsoClass>()}, t.at("coeff").get<ScalarQ>());
    }
}

// ------------------------------------------------------------ straightening

const DoubleElement& straighten(const IsoClass& y, const IsoClass& x, int q) {
    using Key = std::tuple<IsoClass, IsoClass, int>;
    static std::map<Key, DoubleElement> cache;
    static std::recursive_mutex mu;
    std::lock_guard<std::recursive_mutex> lock(mu);
    Key key{y, x, q};
    if (auto it = cache.find(key); it != cache.end()) return it->second;

    DoubleElement result(q);
    if (y.is_zero() || x.is_zero()) {
        result.add({x, {}, y}, ScalarQ::one(q));
        return cache.emplace(key, std::move(result)).first->second;
    }
    // only the slices of Delta(X) and Delta(Y) that can pair up are enumerated
    const DimVec dimx = x.dim(), dimy = y.dim();
    for (int s1 = 0; s1 <= dimy.d1; ++s1)
        for (int s2 = 0; s2 <= dimy.d2; ++s2) {
            const DimVec dsub{s1, s2};
            const DimVec dquot = dimy - dsub;
            const bool first = dquot.fits_in(dimx);
            const bool second = !dsub.is_zero() && dsub.fits_in(dimx);
            if (!first && !second) continue;
            for (const auto& ty : coproduct_slice(y, dsub, q)) {
                const IsoClass& a1 = ty.quotient;
                const IsoClass& a2 = ty.sub;
                // [B1]+ K_{A1} [A2]- over Delta(X) terms with sub A1
                if (first) {
                    ScalarQ inv = ScalarQ(q, Rational(1) / Rational(aut_cached(a1, q)));
                    for (const auto& tx : coproduct_slice(x, dquot, q))
                        if (tx.sub == a1)
                            result.add({tx.quotient, KHalf::of(a1.kclass()), a2}, tx.coeff * ty.coeff * inv);
                }
                if (!second) continue;
                // - [A1]- K_{-A2} [B2]+ over Delta(X) terms with quotient A2, straightened recursively
                ScalarQ inv = ScalarQ(q, Rational(1) / Rational(aut_cached(a2, q)));
                KHalf gamma = -KHalf::of(a2.kclass());
                for (const auto& tx : coproduct_slice(x, dimx - dsub, q)) {
                    if (tx.quotient != a2) continue;
                    const IsoClass& b2 = tx.sub;
                    ScalarQ c = tx.coeff * ty.coeff * inv * vpow(-sym_pair(gamma, b2.kclass()), q);
                    const DoubleElement& inner = straighten(a1, b2, q);
                    for (const auto& [k, ci] : inner.terms())
                        result.add({k.plus, k.k + gamma, k.minus},
                                   -(c * ci * vpow(-sym_pair(gamma, k.minus.kclass()), q)));
                }
            }
        }
    return cache.emplace(key, std::move(result)).first->second;
}

DoubleElement dmul(const DoubleElement& a, const DoubleElement& b) {
    const int q = a.q();
    DoubleElement r(q);
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            const DoubleElement& mid = straighten(ka.minus, kb.plus, q);
            for (const auto& [km, cm] : mid.terms()) {
                int e = -sym_pair(ka.k, km.plus.kclass()) - sym_pair(kb.k, km.minus.kclass());
                ScalarQ c = ca * cb * cm * vpow(e, q);
                ScalarQ cp = c * vpow(-euler_form(ka.plus.kclass(), km.plus.kclass()), q);
                ScalarQ cmn = vpow(-euler_form(km.minus.kclass(), kb.minus.kclass()), q);
                KHalf k = ka.k + km.k + kb.k;
                const auto& plus_terms = hall_product_terms(ka.plus, km.plus, q);
                const auto& minus_terms = hall_product_terms(km.minus, kb.minus, q);
                for (const auto& [zp, fp] : plus_terms)
                    for (const auto& [zm, fm] : minus_terms) r.add({zp, k, zm}, cp * cmn * Rational(fp * fm));
            }
        }
    return r;
}

DoubleElement dbracket(const DoubleElement& a, const DoubleElement& b) { return dmul(a, b) - dmul(b, a); }

DoubleElement dpow(const DoubleElement& a, int n) {
    DoubleElement r = DoubleElement::one(a.q());
    for (int i = 0; i < n; ++i) r = dmul(r, a);
    return r;
}

}  // namespace kronhall
