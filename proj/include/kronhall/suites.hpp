#pragma once

// Verification suites: each check evaluates one identity exactly and records
// a verdict. The CLI groups them by suite name; the acceptance binary calls
// the per-criterion functions with fixed bounds.

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "kronhall/kronrep.hpp"

namespace kronhall {

/// AsStated checks the formulas as printed. Corrected swaps in the versions
/// that the computations single out (twists, exponents, series).
enum class Reading { AsStated, Corrected };

struct CheckResult {
    std::string id;
    std::string ref;  // name of the identity being checked
    bool pass = false;
    std::string detail;
    bool bound_hit = false;  // a rewriting or enumeration bound ran out
};

struct SuiteConfig {
    int q = 2;
    DimVec max_dim{3, 3};
    int max_deg = 3;
    int max_word_len = 14;
    int max_total = 5;
    unsigned seed = 20240611;
    Reading reading = Reading::AsStated;
};

struct SuiteReport {
    std::string suite;
    SuiteConfig config;
    std::vector<CheckResult> checks;
    int failed() const;
    bool bound_hit() const;
};

class UnknownSuite : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

const std::vector<std::string>& suite_names();
/// Throws UnknownSuite; BoundError propagates.
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);
nlohmann::json to_json(const SuiteReport& r);
std::string to_text(const SuiteReport& r);

// ---- checks, one group per acceptance criterion ----

std::vector<CheckResult> check_dj_relations(int q);
std::vector<CheckResult> check_reflection_formulas(int q, Reading reading);
std::vector<CheckResult> check_green_compatibility(int q, DimVec max_dim);
std::vector<CheckResult> check_torsion_pairings(int q, int rmax);
std::vector<CheckResult> check_theta_census(int q, int rmax);
/// n in {-1, 0, 1, 2}
std::vector<CheckResult> check_lb_coproduct(int q, int rmax);
/// n, m in [-2, 2], r, s <= rmax; the H(P^1) relations and those of the double.
std::vector<CheckResult> check_p1_relations(int q, int rmax, bool double_part, Reading reading);
/// All m, n >= 0 with m + n <= max_sum, plus the m + n = 2 symmetry when reached.
std::vector<CheckResult> check_szanto(int q, int max_sum, Reading reading);
/// DJ relators under the Drinfeld-Beck map, in normal form over Q(v).
std::vector<CheckResult> check_drinfeld_beck_symbolic(Reading reading, int max_word_len);
/// Generators against their images, and the Coxeter square for A and A^{-1}.
std::vector<CheckResult> check_drinfeld_beck_ev(int q, Reading reading, int max_word_len);
/// Random loop words: both strategies agree and normalizing does not change ev_q.
std::vector<CheckResult> check_rewriting_random(int q, unsigned seed, int count, int max_word_len);
std::vector<CheckResult> check_lusztig(int q, Reading reading);
/// hn = reineke for |alpha| <= max_total, the brute-force oracle for alpha <=
/// oracle_bound, tubes for r <= tube_max, and the >= versus > experiment.
std::vector<CheckResult> check_hn_reineke(int q, int max_total, DimVec oracle_bound, int tube_max);
/// Divided powers of S1, S2, P1, I1 for n <= 3; characteristic sums for
/// (a,b) <= charf_bound; is_integral and ev of P_r for r <= rmax.
std::vector<CheckResult> check_integral_form(int q, DimVec charf_bound, int rmax, Reading reading);
/// The smallest `count` normal monomials have images of full rank.
std::vector<CheckResult> check_pbw(int q, int count);

}  // namespace kronhall
