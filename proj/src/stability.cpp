#include "kronhall/stability.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <tuple>

namespace kronhall {

void StabilityFunction::validate() const {
    if (b1 <= 0 || b2 <= 0)
        throw std::invalid_argument("stability " + str() + ": imaginary part must be positive on (1,0) and (0,1)");
}

Rational StabilityFunction::slope(const DimVec& d) const {
    if (im(d) == 0) throw std::invalid_argument("slope of a class with vanishing imaginary part");
    Rational r(-re(d), im(d));
    r.canonicalize();
    return r;
}

int StabilityFunction::compare(const DimVec& x, const DimVec& y) const {
    long lhs = -static_cast<long>(re(x)) * im(y);
    long rhs = -static_cast<long>(re(y)) * im(x);
    return (lhs > rhs) - (lhs < rhs);
}

std::string StabilityFunction::str() const {
    return std::to_string(a1) + "," + std::to_string(a2) + "," + std::to_string(b1) + "," + std::to_string(b2);
}

StabilityFunction default_stability() { return {-1, 0, 1, 1}; }

std::vector<std::vector<DimVec>> ordered_decompositions(const DimVec& alpha) {
    std::vector<std::vector<DimVec>> out;
    if (alpha.is_zero()) {
        out.push_back({});
        return out;
    }
    for (int i = 0; i <= alpha.d1; ++i)
        for (int j = 0; j <= alpha.d2; ++j) {
            DimVec first{i, j};
            if (first.is_zero()) continue;
            for (auto& rest : ordered_decompositions(alpha - first)) {
                rest.insert(rest.begin(), first);
                out.push_back(std::move(rest));
            }
        }
    return out;
}

namespace {

DimVec degree_of(const HallElement& h) {
    if (h.is_zero()) return {};
    return h.terms().begin()->first.first.dim();
}

// bottom-up classes -> product with the bottom on the right
HallElement filtration_product(const std::vector<HallElement>& parts) {
    std::vector<HallElement> xs(parts.rbegin(), parts.rend());
    return untwisted_product(xs);
}

using Key = std::tuple<DimVec, StabilityFunction, int, HNOrder>;

std::mutex memo_mu;
std::map<Key, HallElement>& hn_memo() {
    static std::map<Key, HallElement> m;
    return m;
}

bool is_hn_type(const std::vector<DimVec>& cls, const StabilityFunction& z, HNOrder order) {
    for (std::size_t i = 0; i + 1 < cls.size(); ++i) {
        int c = z.compare(cls[i], cls[i + 1]);
        if (c < 0 || (c == 0 && order == HNOrder::Strict)) return false;
    }
    return true;
}

}  // namespace

HallElement untwisted_product(const std::vector<HallElement>& xs) {
    if (xs.empty()) throw std::invalid_argument("untwisted_product of nothing");
    const int q = xs.front().q();
    HallElement r = xs.front();
    KClass acc = KClass(degree_of(xs.front()));
    int e = 0;
    for (std::size_t k = 1; k < xs.size(); ++k) {
        KClass b(degree_of(xs[k]));
        e += euler_form(acc, b);
        acc = acc + b;
        r = hall_mul(r, xs[k]);
    }
    return r * vpow(e, q);
}

std::vector<HNDecomposition> hn_strata(const DimVec& alpha, const StabilityFunction& z, int q, HNOrder order) {
    z.validate();
    std::vector<HNDecomposition> out;
    for (const auto& cls : ordered_decompositions(alpha)) {
        if (cls.size() < 2 || !is_hn_type(cls, z, order)) continue;
        HNDecomposition d;
        for (const auto& c : cls) d.factors.emplace_back(c, hn_semistable(c, z, q, order));
        out.push_back(std::move(d));
    }
    return out;
}

HallElement hn_semistable(const DimVec& alpha, const StabilityFunction& z, int q, HNOrder order) {
    z.validate();
    Key key{alpha, z, q, order};
    {
        std::lock_guard<std::mutex> lock(memo_mu);
        auto it = hn_memo().find(key);
        if (it != hn_memo().end()) return it->second;
    }
    HallElement r = one_alpha(alpha, q);
    for (const auto& d : hn_strata(alpha, z, q, order)) {
        std::vector<HallElement> parts;
        for (const auto& f : d.factors) parts.push_back(f.second);
        r -= filtration_product(parts);
    }
    std::lock_guard<std::mutex> lock(memo_mu);
    return hn_memo().emplace(key, std::move(r)).first->second;
}

HallElement reineke_semistable(const DimVec& alpha, const StabilityFunction& z, int q, ReinekeCondition cond) {
    z.validate();
    HallElement r(q);
    std::map<DimVec, HallElement> ones;
    auto one = [&](const DimVec& d) -> const HallElement& {
        auto it = ones.find(d);
        if (it == ones.end()) it = ones.emplace(d, one_alpha(d, q)).first;
        return it->second;
    };
    const Rational mu = z.slope(alpha);
    for (const auto& cls : ordered_decompositions(alpha)) {
        bool ok = true;
        DimVec partial;
        Rational slopes = 0;
        for (std::size_t s = 0; s + 1 < cls.size() && ok; ++s) {
            partial = partial + cls[s];
            slopes += z.slope(cls[s]);
            ok = cond == ReinekeCondition::ClassSums ? z.compare(partial, alpha) > 0 : slopes > mu;
        }
        if (!ok) continue;
        std::vector<HallElement> parts;
        for (const auto& c : cls) parts.push_back(one(c));
        HallElement term = filtration_product(parts);
        if (cls.size() % 2 == 0)
            r -= term;
        else
            r += term;
    }
    return r;
}

bool is_semistable(const IsoClass& x, const StabilityFunction& z, int q) {
    z.validate();
    const DimVec alpha = x.dim();
    const Rep rep = canonical_rep(x, q);
    for (int i = 0; i <= alpha.d1; ++i)
        for (int j = 0; j <= alpha.d2; ++j) {
            DimVec d{i, j};
            if (d.is_zero() || d == alpha || z.compare(d, alpha) <= 0) continue;
            bool found = false;
            for_each_subrep(rep, d, [&](const SubRep&) { found = true; });
            if (found) return false;
        }
    return true;
}

HallElement brute_semistable(const DimVec& alpha, const StabilityFunction& z, int q) {
    HallElement h(q);
    for (const auto& c : enumerate_iso_classes(alpha, q))
        if (is_semistable(c, z, q)) h.add(c, {}, ScalarQ::one(q));
    return h;
}

}  // namespace kronhall
