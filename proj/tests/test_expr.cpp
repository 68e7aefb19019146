#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "kronhall/expr.hpp"
#include "kronhall/p1.hpp"
#include "kronhall/suites.hpp"
#include "kronhall/uv.hpp"

using namespace kronhall;

namespace {

HallElement cls(const std::string& s, int q) { return HallElement::basis(IsoClass::parse(s), q); }

}  // namespace

TEST_CASE("hall expressions") {
    const int q = 2;
    DoubleElement d = parse_double_expr("[I0]*[P0] - v^2*[P0]*[I0]", q);
    HallElement h;
    REQUIRE(as_hall_element(d, h));
    CHECK(h == szanto_lhs(0, 0, q));
    CHECK(h == tube_one(1, q) * vpow(2, q));

    CHECK(parse_double_expr("one(1,0)", q) == DoubleElement::plus(cls("S1", q)));
    CHECK(parse_double_expr("[P1]*[I0]", q) == DoubleElement::plus(hall_mul(cls("P1", q), cls("I0", q))));
    CHECK(parse_double_expr("L(0)+ * L(0)-", q) == dmul(L(0, Wing::Plus, q), L(0, Wing::Minus, q)));
    CHECK(parse_double_expr("[S1]-[S2]", q) == DoubleElement::plus(cls("S1", q) - cls("S2", q)));
    CHECK(parse_double_expr("[S1]- * [S2]+", q) == dmul(DoubleElement::minus(cls("S1", q)), DoubleElement::plus(cls("S2", q))));
    CHECK(parse_double_expr("1/2*tube(1) - 1", q) ==
          DoubleElement::plus(tube_one(1, q)) * ScalarQ(q, Rational(1, 2)) - DoubleElement::one(q));
    CHECK(parse_double_expr("[S1]^2", q) == parse_double_expr("[S1]*[S1]", q));
    CHECK(parse_double_expr("K(1,0)*C(1)", q) == DoubleElement::K(KHalf::of({1, 0}) + KHalf::half_delta(), q));
    CHECK(parse_double_expr("ev(E1)", q) == DoubleElement::plus(cls("S1", q)));
    CHECK(parse_double_expr("T(1)+", q) == T_double(1, Wing::Plus, q));
    CHECK(parse_double_expr("Theta(2)", q) == DoubleElement::plus(Theta_elem(2, q)));

    CHECK_FALSE(as_hall_element(parse_double_expr("[S1]-", q), h));
}

TEST_CASE("expression errors carry positions") {
    auto pos = [](const std::string& s) {
        try {
            parse_double_expr(s, 2);
        } catch (const ExprError& e) {
            return static_cast<long>(e.position());
        }
        return -1L;
    };
    CHECK(pos("[P1]*[I0") == 6);
    CHECK(pos("[P1] [I0]") == 5);
    CHECK(pos("foo(1)") == 0);
    CHECK(pos("one(1)") == 0);
    CHECK(pos("[Q7]") == 1);
    CHECK(pos("(one(1,0)") == 9);
    CHECK(pos("one(1,0)") == -1);
}

TEST_CASE("hall element json round trip") {
    for (int q : {2, 3}) {
        HallElement h = one_alpha({1, 1}, q) * vpow(3, q) + HallElement::K(KHalf::half_delta(), q);
        nlohmann::json j = h;
        CHECK(j.get<HallElement>() == h);
    }
}

TEST_CASE("suite reports") {
    CHECK_THROWS_AS(run_suite("nope", {}), UnknownSuite);
    SuiteConfig cfg;
    cfg.max_deg = 2;
    SuiteReport r = run_suite("szanto", cfg);
    CHECK(r.checks.size() == 3);
    CHECK(r.failed() == 3);
    nlohmann::json j = to_json(r);
    CHECK(j["suite"] == "szanto");
    CHECK(j["config"]["q"] == 2);
    CHECK(j["summary"]["failed"] == 3);
    for (const auto& c : j["checks"]) {
        CHECK(c.contains("id"));
        CHECK(c.contains("paper_ref"));
        CHECK(c.contains("detail"));
        CHECK((c["verdict"] == "pass" || c["verdict"] == "fail"));
    }
    // same config, same report
    CHECK(to_json(run_suite("szanto", cfg)) == j);

    cfg.reading = Reading::Corrected;
    CHECK(run_suite("szanto", cfg).failed() == 0);
    CHECK(run_suite("dj-relations", cfg).failed() == 0);
    CHECK(run_suite("series", cfg).failed() == 0);
}

TEST_CASE("rewriting bound is reported") {
    auto checks = check_drinfeld_beck_symbolic(Reading::Corrected, 2);
    bool any = false;
    for (const auto& c : checks) any = any || c.bound_hit;
    CHECK(any);
}
