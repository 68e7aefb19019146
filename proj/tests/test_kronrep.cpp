#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "kronhall/kronrep.hpp"

using namespace kronhall;

namespace {

ClosedPoint pt(FqPoly p) { return ClosedPoint::finite(std::move(p)); }

std::vector<FqMatrix> all_invertible(int n, int q) {
    std::vector<FqMatrix> out;
    const int cells = n * n;
    std::vector<int> digits(cells, 0);
    while (true) {
        FqMatrix m(n, n, q);
        for (int i = 0; i < cells; ++i) m.set(i / n, i % n, digits[i]);
        if (is_invertible(m)) out.push_back(m);
        int i = 0;
        for (; i < cells; ++i) {
            if (++digits[i] < q) break;
            digits[i] = 0;
        }
        if (i == cells) break;
    }
    return out;
}

// Key identifying a representation exactly.
std::pair<FqMatrix, FqMatrix> key(const Rep& r) { return {r.A, r.B}; }

// Orbits of GL(d1) x GL(d2) on all representations of dimension d, as a map
// from representation to orbit id.
std::map<std::pair<FqMatrix, FqMatrix>, int> orbits(DimVec d, int q, int* norbits) {
    std::map<std::pair<FqMatrix, FqMatrix>, int> id;
    auto g1 = all_invertible(d.d1, q);
    auto g2 = all_invertible(d.d2, q);
    int next = 0;
    for_each_rep(d, q, [&](const Rep& r) {
        if (id.count(key(r))) return;
        for (const auto& h : g2)
            for (const auto& g : g1) {
                FqMatrix ginv = g;  // g ranges over the whole group, so use g directly as g^{-1}
                id[{h * r.A * ginv, h * r.B * ginv}] = next;
            }
        ++next;
    });
    *norbits = next;
    return id;
}

long count_intertwiners(const Rep& x, const Rep& y) {
    // brute force over all (f1, f2)
    const int q = x.q;
    const int n = y.dim.d1 * x.dim.d1 + y.dim.d2 * x.dim.d2;
    std::vector<int> digits(n, 0);
    long count = 0;
    while (true) {
        FqMatrix f1(y.dim.d1, x.dim.d1, q), f2(y.dim.d2, x.dim.d2, q);
        int k = 0;
        for (int i = 0; i < f1.rows(); ++i)
            for (int j = 0; j < f1.cols(); ++j) f1.set(i, j, digits[k++]);
        for (int i = 0; i < f2.rows(); ++i)
            for (int j = 0; j < f2.cols(); ++j) f2.set(i, j, digits[k++]);
        if (y.A * f1 == f2 * x.A && y.B * f1 == f2 * x.B) ++count;
        int i = 0;
        for (; i < n; ++i) {
            if (++digits[i] < q) break;
            digits[i] = 0;
        }
        if (i == n) break;
    }
    return count;
}

std::vector<IsoClass> classes_up_to(DimVec bound, int q) {
    std::vector<IsoClass> out;
    for (int a = 0; a <= bound.d1; ++a)
        for (int b = 0; b <= bound.d2; ++b)
            for (auto& c : enumerate_iso_classes({a, b}, q)) out.push_back(c);
    return out;
}

long ipow(long b, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

}  // namespace

TEST_CASE("euler form") {
    CHECK(euler_form({1, 0}, {0, 1}) == -2);
    CHECK(euler_form({1, 0}, {1, 0}) == 1);
    CHECK(sym_form({1, 1}, {1, 1}) == 0);
    CHECK(sym_form({1, 0}, {0, 1}) == -2);
    CHECK(sym_form({1, 0}, {1, 0}) == 2);
}

TEST_CASE("canonical representations") {
    Rep p0 = canonical_rep(IsoClass::P(0), 2);
    CHECK(p0.dim == DimVec{0, 1});
    CHECK(p0.A.rows() == 1);
    CHECK(p0.A.cols() == 0);
    CHECK(canonical_rep(IsoClass::I(0), 2).dim == DimVec{1, 0});
    Rep t = canonical_rep(IsoClass::tube(pt({0, 1}), 1), 2);
    CHECK(t.A == FqMatrix::from_rows({{1}}, 1, 2));
    CHECK(t.B == FqMatrix::from_rows({{0}}, 1, 2));
}

TEST_CASE("decompose examples") {
    CHECK(decompose(Rep::zero({0, 0}, 2)).is_zero());
    CHECK(decompose(Rep::zero({1, 1}, 2)) == IsoClass::parse("S1+S2"));
    Rep r{{1, 1}, FqMatrix::from_rows({{1}}, 1, 2), FqMatrix::from_rows({{1}}, 1, 2), 2};
    CHECK(decompose(r) == IsoClass::tube(pt({1, 1}), 1));
    Rep inf{{1, 1}, FqMatrix::from_rows({{0}}, 1, 2), FqMatrix::from_rows({{1}}, 1, 2), 2};
    CHECK(decompose(inf) == IsoClass::tube(ClosedPoint::at_infinity(), 1));
}

TEST_CASE("decompose inverts canonical_rep up to (4,4)") {
    for (int q : {2, 3}) {
        for (const auto& c : classes_up_to({4, 4}, q)) {
            INFO(c.str());
            CHECK(decompose(canonical_rep(c, q)) == c);
        }
    }
}

TEST_CASE("decompose is constant on orbits and separates them") {
    const int q = 2;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            DimVec d{a, b};
            int norb = 0;
            auto id = orbits(d, q, &norb);
            std::map<int, IsoClass> cls_of_orbit;
            std::set<IsoClass> seen;
            for_each_rep(d, q, [&](const Rep& r) {
                IsoClass c = decompose(r);
                int o = id.at(key(r));
                auto [it, inserted] = cls_of_orbit.emplace(o, c);
                CHECK(it->second == c);
                seen.insert(c);
            });
            CHECK(static_cast<int>(seen.size()) == norb);
            auto listed = enumerate_iso_classes(d, q);
            CHECK(static_cast<int>(listed.size()) == norb);
            CHECK(std::set<IsoClass>(listed.begin(), listed.end()) == seen);
        }
}

TEST_CASE("enumerate iso classes examples") {
    CHECK(enumerate_iso_classes({1, 0}, 2) == std::vector<IsoClass>{IsoClass::I(0)});
    CHECK(enumerate_iso_classes({1, 1}, 2).size() == 4);
    CHECK(enumerate_iso_classes({0, 2}, 2) == std::vector<IsoClass>{IsoClass::P(0, 2)});
    CHECK(enumerate_iso_classes({1, 1}, 3).size() == 5);
}

TEST_CASE("hom dimensions") {
    const int q = 2;
    CHECK(hom_dim(IsoClass::S1(), IsoClass::S1(), q) == 1);
    CHECK(hom_dim(IsoClass::S1(), IsoClass::S2(), q) == 0);
    CHECK(hom_dim(IsoClass::P(0), IsoClass::P(1), q) == 2);
    for (const auto& x : classes_up_to({2, 2}, q))
        for (const auto& y : classes_up_to({2, 2}, q)) {
            Rep rx = canonical_rep(x, q), ry = canonical_rep(y, q);
            CHECK(count_intertwiners(rx, ry) == ipow(q, hom_dim(rx, ry)));
        }
}

TEST_CASE("hom - ext equals the euler form") {
    for (int q : {2, 3}) {
        auto all = classes_up_to({3, 3}, q);
        for (const auto& x : all)
            for (const auto& y : all) {
                if (!(x.dim() + y.dim()).fits_in({3, 3})) continue;
                CHECK(hom_dim(x, y, q) - ext_dim(x, y, q) == euler_form(x.kclass(), y.kclass()));
            }
    }
}

TEST_CASE("automorphism counts") {
    CHECK(aut_count_enumerated(IsoClass::S1(), 2) == 1);
    CHECK(aut_count_enumerated(IsoClass::S1(), 3) == 2);
    CHECK(aut_count_enumerated(IsoClass::I(0, 2), 2) == 6);
    CHECK_THROWS_AS(aut_count_enumerated(IsoClass::I(0, 4), 2), BoundError);
    for (int q : {2, 3}) {
        for (const auto& c : classes_up_to({3, 3}, q)) {
            if (hom_dim(c, c, q) > (q == 2 ? 9 : 6)) continue;
            INFO(c.str());
            CHECK(aut_count(c, q) == aut_count_enumerated(c, q));
        }
    }
}

TEST_CASE("hall numbers") {
    const int q = 2;
    auto x = IsoClass::parse("P1+T1@[0,1]");
    CHECK(hall_number(x, x, IsoClass{}, q) == 1);
    CHECK(hall_number(IsoClass::parse("S1+S2"), IsoClass::S1(), IsoClass::S2(), q) == 1);
    for (const auto& p : closed_points(1, q))
        CHECK(hall_number(IsoClass::tube(p, 1), IsoClass::S1(), IsoClass::S2(), q) == 1);
    CHECK(hall_number(IsoClass::I(0, 2), IsoClass::S1(), IsoClass::S1(), q) == 3);
    CHECK_THROWS_AS(hall_number(IsoClass::P(0, 13), IsoClass::P(0, 12), IsoClass::P(0), q), BoundError);
}

TEST_CASE("hall numbers partition the stable subspace pairs of all representations") {
    const int q = 2;
    for (int a = 0; a <= 2; ++a)
        for (int b = 0; b <= 2; ++b) {
            DimVec d{a, b};
            // total enumeration: (quotient class, sub class) -> count over all reps
            std::map<std::pair<IsoClass, IsoClass>, long> total;
            std::map<IsoClass, long> reps_in_class;
            for_each_rep(d, q, [&](const Rep& r) {
                ++reps_in_class[decompose(r)];
                for (int s1 = 0; s1 <= a; ++s1)
                    for (int s2 = 0; s2 <= b; ++s2)
                        for_each_subrep(r, {s1, s2}, [&](const SubRep& sr) {
                            ++total[{decompose(sr.quotient), decompose(sr.sub)}];
                        });
            });
            std::map<std::pair<IsoClass, IsoClass>, long> from_hall;
            for (const auto& [z, n] : reps_in_class)
                for (const auto& [xy, f] : subobject_census(z, q)) {
                    CHECK(hall_number(z, xy.first, xy.second, q) == f);
                    from_hall[xy] += f * n;
                }
            CHECK(from_hall == total);
        }
}

TEST_CASE("iso class text and json round trip") {
    for (const auto& c : classes_up_to({3, 3}, 3)) {
        CHECK(IsoClass::parse(c.str()) == c);
        nlohmann::json j = c;
        CHECK(j.get<IsoClass>() == c);
    }
    CHECK(IsoClass::parse("S1+S2") == IsoClass::direct_sum(IsoClass::I(0), IsoClass::P(0)));
    CHECK_THROWS(IsoClass::parse("Q3"));
}
