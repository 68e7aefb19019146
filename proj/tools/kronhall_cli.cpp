// kronhall-cli: verification suites, single computations and censuses.
// Exit codes: 0 pass, 1 verification failure, 2 usage, 3 resource bound.

#include <iostream>
#include <regex>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kronhall/expr.hpp"
#include "kronhall/fq.hpp"
#include "kronhall/kronrep.hpp"
#include "kronhall/stability.hpp"
#include "kronhall/suites.hpp"
#include "kronhall/uv.hpp"

using namespace kronhall;
using nlohmann::json;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2, kBound = 3;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

std::vector<int> int_list(const std::string& s, std::size_t n, const std::string& flag) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string part;
    try {
        while (std::getline(ss, part, ',')) out.push_back(std::stoi(part));
    } catch (const std::exception&) {
        throw UsageError(flag + " expects " + std::to_string(n) + " comma-separated integers, got '" + s + "'");
    }
    if (out.size() != n)
        throw UsageError(flag + " expects " + std::to_string(n) + " comma-separated integers, got '" + s + "'");
    return out;
}

DimVec dim_arg(const std::string& s, const std::string& flag) {
    auto v = int_list(s, 2, flag);
    if (v[0] < 0 || v[1] < 0) throw UsageError(flag + " must be nonnegative");
    return {v[0], v[1]};
}

void emit(const json& j, const std::string& text, bool as_json) {
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << text << "\n";
}

// 'G(...)' or something that only parses as a quantum group term
bool compute_term(const std::string& expr, int q, bool corrected, bool as_json) {
    static const std::regex g_call(R"(^\s*G\s*\((.*)\)\s*$)");
    std::smatch m;
    PresTerm t(Presentation::DJ);
    bool mapped = false;
    if (std::regex_match(expr, m, g_call)) {
        t = map_G(parse_term(m[1].str()), corrected ? GTable::SwappedTwists : GTable::AsStated);
        mapped = true;
    } else {
        t = parse_term(expr);
    }
    RewriteConfig cfg;
    cfg.diagonal = corrected ? DiagonalRule::WithK : DiagonalRule::AsStated;
    std::string rendered = t.presentation() == Presentation::Loop ? loop_normal_form(t, cfg).str() : t.str();
    json j = {{"presentation", t.presentation() == Presentation::Loop ? "loop" : "dj"},
              {"term", rendered},
              {"q", q}};
    if (mapped) j["map"] = "G";
    emit(j, rendered, as_json);
    return true;
}

int compute(const std::string& expr, int q, bool corrected, bool as_json) {
    try {
        DoubleElement d = parse_double_expr(expr, q);
        HallElement h;
        if (as_hall_element(d, h))
            emit({{"type", "hall"}, {"q", q}, {"element", h}}, h.str(), as_json);
        else
            emit({{"type", "double"}, {"q", q}, {"element", d}}, d.str(), as_json);
        return kPass;
    } catch (const ExprError& hall_err) {
        try {
            compute_term(expr, q, corrected, as_json);
            return kPass;
        } catch (const BoundError&) {
            throw;
        } catch (const std::exception& term_err) {
            throw UsageError(std::string("cannot parse expression: ") + hall_err.what() + "; as a term: " +
                             term_err.what());
        }
    }
}

int census(const std::string& kind, int q, int max_deg, const std::string& dim, const std::string& z,
           const std::string& x, const std::string& y, bool as_json) {
    if (kind == "points") {
        std::vector<long> counts;
        for (int d = 1; d <= max_deg; ++d) counts.push_back(point_census(d, q));
        std::string text;
        for (std::size_t i = 0; i < counts.size(); ++i) text += (i ? " " : "") + std::to_string(counts[i]);
        emit({{"kind", "points"}, {"q", q}, {"counts", counts}}, text, as_json);
        return kPass;
    }
    if (kind == "isoclasses") {
        if (dim.empty()) throw UsageError("census isoclasses needs --dim a,b");
        DimVec d = dim_arg(dim, "--dim");
        auto cls = enumerate_iso_classes(d, q);
        std::vector<std::string> names;
        for (const auto& c : cls) names.push_back(c.str());
        emit({{"kind", "isoclasses"}, {"q", q}, {"dim", {d.d1, d.d2}}, {"count", cls.size()}, {"classes", names}},
             std::to_string(cls.size()), as_json);
        return kPass;
    }
    if (kind == "hallnum") {
        if (z.empty() || x.empty() || y.empty()) throw UsageError("census hallnum needs --Z, --X and --Y");
        IsoClass cz, cx, cy;
        try {
            cz = IsoClass::parse(z);
            cx = IsoClass::parse(x);
            cy = IsoClass::parse(y);
        } catch (const std::exception& e) {
            throw UsageError(std::string("bad class: ") + e.what());
        }
        long n = hall_number(cz, cx, cy, q);
        emit({{"kind", "hallnum"}, {"q", q}, {"Z", cz.str()}, {"X", cx.str()}, {"Y", cy.str()}, {"value", n}},
             std::to_string(n), as_json);
        return kPass;
    }
    throw UsageError("unknown census kind '" + kind + "' (points, isoclasses, hallnum)");
}

int hn(const std::string& alpha, int q, const std::string& stability, const std::string& method, bool as_json) {
    DimVec a = dim_arg(alpha, "--alpha");
    if (a.is_zero()) throw UsageError("--alpha must be nonzero");
    StabilityFunction z = default_stability();
    if (!stability.empty()) {
        auto s = int_list(stability, 4, "--stability");
        z = {s[0], s[1], s[2], s[3]};
    }
    try {
        z.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    HallElement h = method == "reineke" ? reineke_semistable(a, z, q)
                    : method == "brute" ? brute_semistable(a, z, q)
                                        : hn_semistable(a, z, q);
    emit({{"type", "hall"}, {"q", q}, {"alpha", {a.d1, a.d2}}, {"stability", z.str()}, {"method", method}, {"element", h}},
         h.str(), as_json);
    return kPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hall algebras of the Kronecker quiver: verification and computation"};
    app.require_subcommand(1);

    int q = 2;
    std::string format = "json", reading = "stated";
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--q", q, "field size")->check(CLI::IsMember({2, 3, 5, 7}));
        sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--reading", reading, "stated formulas or the corrected ones")
            ->check(CLI::IsMember({"stated", "corrected"}));
    };

    std::string suite, max_dim = "3,3";
    int max_deg = 3, max_word_len = 14, max_total = 5;
    unsigned seed = SuiteConfig{}.seed;
    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("suite", suite, "suite name, or 'all'")->required();
    add_common(verify);
    verify->add_option("--max-dim", max_dim, "dimension bound a,b");
    verify->add_option("--max-deg", max_deg, "degree bound")->check(CLI::PositiveNumber);
    verify->add_option("--max-word-len", max_word_len, "rewriting length bound")->check(CLI::PositiveNumber);
    verify->add_option("--max-total", max_total, "bound on |alpha| for semistable sums")->check(CLI::PositiveNumber);
    verify->add_option("--seed", seed, "seed for randomized checks");

    std::string expr;
    CLI::App* comp = app.add_subcommand("compute", "evaluate an element");
    comp->add_option("expr", expr, "expression")->required();
    add_common(comp);

    std::string kind, dim, zc, xc, yc;
    int census_deg = 3;
    CLI::App* cens = app.add_subcommand("census", "points, isoclasses or hallnum");
    cens->add_option("kind", kind, "points, isoclasses or hallnum")->required();
    add_common(cens);
    cens->add_option("--max-deg", census_deg, "largest point degree")->check(CLI::PositiveNumber);
    cens->add_option("--dim", dim, "dimension vector a,b");
    cens->add_option("--Z", zc, "middle term");
    cens->add_option("--X", xc, "quotient");
    cens->add_option("--Y", yc, "subobject");

    std::string alpha, stability, method = "hn";
    CLI::App* hn_cmd = app.add_subcommand("hn", "semistable characteristic sum");
    hn_cmd->add_option("--alpha", alpha, "class m,n")->required();
    add_common(hn_cmd);
    hn_cmd->add_option("--stability", stability, "a1,a2,b1,b2 for Z(d) = a.d + i b.d");
    hn_cmd->add_option("--method", method, "hn, reineke or brute")->check(CLI::IsMember({"hn", "reineke", "brute"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    const bool as_json = format == "json";
    const bool corrected = reading == "corrected";
    try {
        if (*verify) {
            SuiteConfig cfg;
            cfg.q = q;
            cfg.max_dim = dim_arg(max_dim, "--max-dim");
            cfg.max_deg = max_deg;
            cfg.max_word_len = max_word_len;
            cfg.max_total = max_total;
            cfg.seed = seed;
            cfg.reading = corrected ? Reading::Corrected : Reading::AsStated;
            SuiteReport rep = run_suite(suite, cfg);
            if (as_json)
                std::cout << to_json(rep).dump(2) << "\n";
            else
                std::cout << to_text(rep);
            if (rep.bound_hit()) return kBound;
            return rep.failed() == 0 ? kPass : kFail;
        }
        if (*comp) return compute(expr, q, corrected, as_json);
        if (*cens) return census(kind, q, census_deg, dim, zc, xc, yc, as_json);
        if (*hn_cmd) return hn(alpha, q, stability, method, as_json);
    } catch (const UnknownSuite& e) {
        std::cerr << e.what() << "; suites:";
        for (const auto& n : suite_names()) std::cerr << " " << n;
        std::cerr << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    } catch (const BoundError& e) {
        std::cerr << "bound exhausted: " << e.what() << "\n";
        return kBound;
    } catch (const std::invalid_argument& e) {
        std::cerr << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}
