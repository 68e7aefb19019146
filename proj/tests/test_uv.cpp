#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "kronhall/uv.hpp"

using namespace kronhall;

namespace {

PresTerm P(const std::string& s) { return parse_term(s); }
RatFun v(int e) { return RatFun::v(e); }
RatFun vfrac() { return v(1) / (v(1) - v(-1)); }

RewriteConfig printed_rule() {
    RewriteConfig c;
    c.diagonal = DiagonalRule::AsStated;
    return c;
}

Word random_loop_word(std::mt19937& rng, int max_len) {
    Word w;
    const int len = 1 + static_cast<int>(rng() % max_len);
    for (int j = 0; j < len; ++j) {
        const int idx = static_cast<int>(rng() % 5) - 2;
        const int nz = idx == 0 ? 1 : idx;
        switch (rng() % 5) {
            case 0: w.push_back({Sym::Xp, idx}); break;
            case 1: w.push_back({Sym::Xm, idx}); break;
            case 2: w.push_back({Sym::H, nz}); break;
            case 3: w.push_back({Sym::K, nz}); break;
            default: w.push_back({Sym::C, nz}); break;
        }
    }
    return w;
}

}  // namespace

TEST_CASE("parsing terms") {
    PresTerm t = P("E1 F2 K1^-1");
    REQUIRE(t.terms().size() == 1);
    CHECK(t.terms().begin()->first == Word{{Sym::E1, 0}, {Sym::F2, 0}, {Sym::K1, -1}});
    CHECK(t.presentation() == Presentation::DJ);

    PresTerm l = P("X[3]+ H[-2] C^{1/2}");
    CHECK(l.presentation() == Presentation::Loop);
    CHECK(l.terms().begin()->first == Word{{Sym::Xp, 3}, {Sym::H, -2}, {Sym::C, 1}});

    CHECK(P("E1^(3)") == P("E1 E1 E1") * (RatFun(1) / quantum_factorial(3)));
    CHECK(P("E1^2") == P("E1 E1"));
    CHECK(P("K1 K1^-1") == PresTerm::scalar(1, Presentation::DJ));
    CHECK(P("E1 - v^2 E2") == P("E1") - P("E2") * v(2));
    CHECK(P("1/2 X[0]- + X[1]-") == P("X[0]-") * RatFun(Rational(1, 2)) + P("X[1]-"));
    CHECK(P("C") == P("C^{2/2}"));

    CHECK_THROWS_AS(P("E3"), std::invalid_argument);
    CHECK_THROWS_AS(P("H[0]"), std::invalid_argument);
    CHECK_THROWS_AS(P("E1 X[0]+"), std::invalid_argument);
    CHECK_THROWS_AS(P("X[1]"), std::invalid_argument);
    CHECK_THROWS_AS(P("C^{1/3}"), std::invalid_argument);
    CHECK_THROWS_AS(P(""), std::invalid_argument);
}

TEST_CASE("loop normal form examples") {
    CHECK(loop_normal_form(P("X[0]+ X[1]+")).term == P("X[1]+ X[0]+") * v(2));
    CHECK(loop_normal_form(P("X[0]- X[1]-")).term == P("X[1]- X[0]-") * v(-2));
    CHECK(loop_normal_form(P("H[1] X[0]+ - X[0]+ H[1]")).term == P("X[1]+ C^{-1/2}") * quantum_int(2));
    CHECK(loop_normal_form(P("X[0]+ X[0]- - X[0]- X[0]+"), printed_rule()).is_zero());
    CHECK(loop_normal_form(P("X[0]+ X[0]- - X[0]- X[0]+")).term == (P("K") - P("K^-1")) * vfrac());

    // spread 2: X_a X_{a+2} = v^2 X_{a+2} X_a + (v^2 - 1) X_{a+1}^2
    CHECK(loop_normal_form(P("X[0]+ X[2]+")).term == P("X[2]+ X[0]+") * v(2) + P("X[1]+ X[1]+") * (v(2) - RatFun(1)));

    // Heisenberg
    const RatFun h = quantum_int(2) / (v(1) - v(-1));
    CHECK(loop_normal_form(P("H[-1] H[1] - H[1] H[-1]")).term == (P("C") - P("C^-1")) * h);
    CHECK(loop_normal_form(P("H[2] H[1] - H[1] H[2]")).is_zero());

    // K sits between the H+ and X- blocks
    LoopNormalForm nf = loop_normal_form(P("X[0]- K X[1]+"));
    for (const auto& [w, c] : nf.term.terms()) CHECK(is_normal_word(w));
    CHECK(is_normal_word(Word{{Sym::Xp, 1}, {Sym::Xp, 0}, {Sym::H, 1}, {Sym::K, 1}, {Sym::Xm, 0}, {Sym::H, -1}}));
    CHECK_FALSE(is_normal_word(Word{{Sym::Xp, 0}, {Sym::Xp, 1}}));
    CHECK_FALSE(is_normal_word(Word{{Sym::K, 1}, {Sym::Xp, 0}}));

    RewriteConfig tight;
    tight.max_length = 2;
    CHECK_THROWS_AS(loop_normal_form(P("X[0]- X[0]- X[0]+"), tight), BoundError);
    tight = {};
    tight.index_window = 1;
    CHECK_THROWS_AS(loop_normal_form(P("X[1]- H[1]"), tight), BoundError);
}

TEST_CASE("psi series") {
    CHECK(psi_elem(1) == P("H[1]") * (v(-1) - v(1)));
    CHECK(psi_elem(-1) == P("H[-1]") * (v(1) - v(-1)));
    const RatFun d = v(-1) - v(1);
    CHECK(psi_elem(2) == P("H[2]") * d + P("H[1] H[1]") * (d * d * RatFun(Rational(1, 2))));
    CHECK(psi_elem(0) == PresTerm::scalar(1, Presentation::Loop));
}

TEST_CASE("drinfeld-beck map") {
    CHECK(map_G(P("E2")) == P("X[0]+"));
    CHECK(map_G(P("E1")) == P("X[1]- K C^-1") * v(-1));
    CHECK(map_G(P("F1")) == P("X[-1]+ K^-1 C") * v(-1));
    CHECK(loop_normal_form(map_G(P("K1 K2"))).term == P("C"));
    CHECK(map_G(P("E1"), GTable::SwappedTwists) == P("X[1]- K^-1 C") * v(-1));

    auto count = [](GTable g, DiagonalRule d) {
        RewriteConfig c;
        c.diagonal = d;
        std::set<std::string> failing;
        for (const auto& h : verify_hom(dj_relators(), g, c)) {
            CHECK(h.error.empty());
            if (!h.holds) failing.insert(h.relator);
        }
        return failing;
    };
    CHECK(count(GTable::SwappedTwists, DiagonalRule::WithK).empty());
    CHECK(count(GTable::SwappedTwists, DiagonalRule::AsStated) == std::set<std::string>{"[E1,F1]", "[E2,F2]"});
    // the printed table also breaks the Serre relations
    std::set<std::string> printed = count(GTable::AsStated, DiagonalRule::AsStated);
    CHECK(printed.size() == 8);
    CHECK(printed.count("Serre E(1,2)") == 1);
    CHECK(printed.count("[E1,F2]") == 1);

    HomVerdict h = verify_hom({{"[E1,F2]", commutator(P("E1"), P("F2"))}}, GTable::SwappedTwists).front();
    nlohmann::json j = to_json(h);
    CHECK(j["relator"] == "[E1,F2]");
    CHECK(j["verdict"] == "holds");
    CHECK(j["normalForm"] == "0");
}

TEST_CASE("evaluation examples") {
    for (int q : {2, 3}) {
        CHECK(ev_q(P("E1 F1 - F1 E1"), q) == ev_q((P("K1") - P("K1^-1")) * vfrac(), q));
        CHECK(ev_q(P("X[0]+"), q) == DoubleElement::plus(HallElement::basis(IsoClass::S2(), q)));
        CHECK(ev_q(P("X[0]+"), q) == L(0, Wing::Plus, q));
        CHECK(ev_q(P("C"), q) == DoubleElement::K(KHalf::of({1, 1}), q));
        CHECK(ev_q(P("C^{1/2}"), q) == DoubleElement::K(KHalf::half_delta(), q));
        CHECK(ev_q(P("K"), q) == K_p1(P1Class::of(1, 0), q));
        CHECK(ev_q(P("H[-1]"), q) == T_tilde(1, Wing::Minus, q) * ScalarQ(q, -1));

        for (const auto& g : dj_generators()) CHECK(ev_q(g.term, q) == ev_q(map_G(g.term, GTable::SwappedTwists), q));
        CHECK_FALSE(ev_q(P("E1"), q) == ev_q(map_G(P("E1")), q));
        CHECK_FALSE(ev_q(P("F1"), q) == ev_q(map_G(P("F1")), q));
        CHECK(ev_q(P("E2"), q) == ev_q(map_G(P("E2")), q));
    }
}

TEST_CASE("rewriting is confluent and sound on random words") {
    std::mt19937 rng(20240611);
    RewriteConfig right;
    right.strategy = RewriteStrategy::Rightmost;
    for (int i = 0; i < 200; ++i) {
        const Word w = random_loop_word(rng, 5);
        const PresTerm t = PresTerm::word(w);
        const LoopNormalForm a = loop_normal_form(t);
        INFO(word_str(w));
        CHECK(a == loop_normal_form(t, right));
        for (const auto& [nw, c] : a.term.terms()) CHECK(is_normal_word(nw));
        const int q = i % 2 == 0 ? 2 : 3;
        CHECK(ev_q(t, q) == ev_q(a.term, q));
    }
}

TEST_CASE("lusztig symmetries") {
    CHECK(lusztig_S(P("K2"), Sign::Plus) == P("K1^-1"));
    CHECK(lusztig_S(P("E2"), Sign::Plus) == P("K1^-1 F1") * v(-1));
    CHECK(lusztig_S(P("K1"), Sign::Plus) == P("K1^2 K2"));
    CHECK(lusztig_S(P("K2"), Sign::Minus) == P("K1 K2^2"));
    CHECK(coxeter_A(P("K2"), Sign::Plus) == P("K1^-2 K2^-1"));

    const int q = 2;
    // S+ as printed is an endomorphism; S- as printed is not
    for (const auto& r : dj_relators()) CHECK(ev_q(lusztig_S(r.term, Sign::Plus), q).is_zero());
    CHECK_FALSE(ev_q(lusztig_S(commutator(P("E1"), P("F2")), Sign::Minus), q).is_zero());

    for (const auto& r : dj_relators()) {
        INFO(r.name);
        CHECK(ev_q(lusztig_S(r.term, Sign::Plus, STable::Corrected), q).is_zero());
        CHECK(ev_q(lusztig_S(r.term, Sign::Minus, STable::Corrected), q).is_zero());
    }
    for (int qq : {2, 3})
        for (const auto& g : dj_generators()) {
            INFO(g.name);
            PresTerm pm = lusztig_S(lusztig_S(g.term, Sign::Plus, STable::Corrected), Sign::Minus, STable::Corrected);
            PresTerm mp = lusztig_S(lusztig_S(g.term, Sign::Minus, STable::Corrected), Sign::Plus, STable::Corrected);
            CHECK(ev_q(pm, qq) == ev_q(g.term, qq));
            CHECK(ev_q(mp, qq) == ev_q(g.term, qq));
        }
    CHECK(ev_q(lusztig_S(P("E1"), Sign::Plus, STable::Corrected), q) ==
          DoubleElement::plus(HallElement::basis(IsoClass::I(1), q)));
}

TEST_CASE("coxeter square") {
    for (Sign s : {Sign::Plus, Sign::Minus})
        for (const auto& g : dj_generators()) {
            INFO(g.name);
            const LoopNormalForm a = loop_normal_form(loop_coxeter_A(map_G(g.term, GTable::SwappedTwists), s));
            const LoopNormalForm b = loop_normal_form(map_G(coxeter_A(g.term, s, STable::Corrected), GTable::SwappedTwists));
            CHECK(a == b);
        }
    // the loop-side twist is an automorphism with the stated inverse
    PresTerm t = P("X[1]+ H[2] K X[-1]- C^{1/2}");
    CHECK(loop_coxeter_A(loop_coxeter_A(t, Sign::Plus), Sign::Minus) == t);
    CHECK(loop_coxeter_A(P("K"), Sign::Plus) == P("K C^-2"));
}

TEST_CASE("projective and injective classes from the simples") {
    for (int q : {2, 3}) {
        const PresTerm e2 = P("E2"), e1 = P("E1");
        // [P1] and [I1] as sums over divided powers
        PresTerm p1(Presentation::DJ), i1(Presentation::DJ);
        for (int a = 0; a <= 2; ++a) {
            const int b = 2 - a;
            const RatFun sg(a % 2 == 0 ? 1 : -1);
            p1 += divided_power(e2, a) * e1 * divided_power(e2, b) * sg * v(-b);
            i1 += divided_power(e1, a) * e2 * divided_power(e1, b) * sg * v(-a);
        }
        CHECK(ev_q(p1, q) == DoubleElement::plus(HallElement::basis(IsoClass::P(1), q)));
        CHECK(ev_q(i1, q) == DoubleElement::plus(HallElement::basis(IsoClass::I(1), q)));
        for (int n = 0; n <= 3; ++n) {
            CHECK(ev_lusztig_power(e2, Sign::Minus, n, q, STable::Corrected) ==
                  DoubleElement::plus(HallElement::basis(IsoClass::P(n), q)));
            CHECK(ev_lusztig_power(e1, Sign::Plus, n, q, STable::Corrected) ==
                  DoubleElement::plus(HallElement::basis(IsoClass::I(n), q)));
        }
        // the letterwise evaluation agrees with expanding the words
        CHECK(ev_lusztig_power(P("E1 F2"), Sign::Plus, 1, q, STable::Corrected) ==
              ev_q(lusztig_S(P("E1 F2"), Sign::Plus, STable::Corrected), q));
    }
}

TEST_CASE("integral elements") {
    const PresTerm p1 = P_elem(1);
    CHECK(p1 == P("H[1] C^{1/2}") * (v(-1) - v(1)));
    CHECK(is_integral(p1).integral);
    for (int n = -2; n <= 2; ++n)
        for (int m = 1; m <= 3; ++m) {
            CHECK(is_integral(divided_power(PresTerm::letter(Sym::Xp, n), m)).integral);
            CHECK(is_integral(divided_power(PresTerm::letter(Sym::Xm, n), m)).integral);
        }
    CHECK_FALSE(is_integral(P("X[0]+") * (RatFun(1) / quantum_int(2))).integral);
    IntegralityReport r = is_integral(P_elem(2));
    CHECK_FALSE(r.integral);
    CHECK(r.offending.size() == 2);

    for (int q : {2, 3})
        for (int n = 1; n <= 2; ++n) {
            CHECK(ev_q(P_elem(n, PSeries::H), q) == DoubleElement::plus(one_tor(n, q)));
            CHECK_FALSE(ev_q(P_elem(n), q) == DoubleElement::plus(one_tor(n, q)));
        }
    CHECK(ev_q(P_elem(1), 2) == DoubleElement::plus(one_tor(1, 2)) * specialize(v(-1) - v(1), 2));
}

TEST_CASE("pbw monomials have independent images") {
    const std::vector<Word> ws = small_normal_monomials(60);
    REQUIRE(ws.size() == 60);
    std::set<Word> distinct(ws.begin(), ws.end());
    CHECK(distinct.size() == 60);
    for (const auto& w : ws) CHECK(is_normal_word(w));
    for (int q : {2, 3}) {
        std::vector<DoubleElement> xs;
        for (const auto& w : ws) xs.push_back(ev_q(PresTerm::word(w), q));
        CHECK(double_rank(xs) == 60);
        // a dependent family is detected
        xs.push_back(xs[3] + xs[7] * ScalarQ(q, 2));
        CHECK(double_rank(xs) == 60);
    }
}
