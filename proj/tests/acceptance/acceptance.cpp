// Acceptance suite: runs every toolkit-level check and prints one
// PASS/FAIL line per criterion. Usage:
//
//   skat_acceptance        run all criteria
//   skat_acceptance <n>    run criterion n only
//
// The exit code is the number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "skat/fixtures.hpp"
#include "skat/intrinsic.hpp"
#include "skat/measures.hpp"
#include "skat/protocols.hpp"

using namespace skat;
using fixtures::FixtureId;

namespace {

const std::vector<std::string> A{"A"};
const std::vector<std::string> B{"B"};
const std::vector<std::string> C{"C"};
const std::vector<std::string> E{"E"};
const std::vector<std::string> AB{"A", "B"};
const std::vector<std::string> AC{"A", "C"};
const std::vector<std::string> BC{"B", "C"};

struct CriterionResult {
    bool pass = true;
    std::string detail;
};

class Checker {
public:
    explicit Checker(std::ostringstream& out) : out_(out) {}

    void require(bool ok, const std::string& what) {
        if (ok) return;
        pass_ = false;
        if (!first_) out_ << "; ";
        out_ << what;
        first_ = false;
    }

    void note(const std::string& what) {
        if (!first_) out_ << "; ";
        out_ << what;
        first_ = false;
    }

    bool pass() const { return pass_; }

private:
    std::ostringstream& out_;
    bool pass_ = true;
    bool first_ = true;
};

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

CriterionResult criterion_1() {
    std::ostringstream detail;
    Checker check(detail);
    auto p1 = fixtures::build(FixtureId::p1);

    double ab_c = conditional_mutual_information(p1, AB, C, E).value;
    double bc_a = conditional_mutual_information(p1, BC, A, E).value;
    check.require(std::abs(ab_c - 1.0 / 3) < 1e-12,
                  "I(AB:C|E) = " + fmt(ab_c) + ", expected 1/3");
    check.require(std::abs(bc_a - 1.0 / 3) < 1e-12,
                  "I(BC:A|E) = " + fmt(bc_a) + ", expected 1/3");

    // Average evaluation time over repeated calls, after a warmup.
    double sink = 0.0;
    for (int i = 0; i < 10; ++i) sink += conditional_mutual_information(p1, AB, C, E).value;
    auto start = std::chrono::steady_clock::now();
    for (int i = 0; i < 100; ++i) sink += conditional_mutual_information(p1, AB, C, E).value;
    double per_call = seconds_since(start) / 100.0;
    check.require(sink > 0.0, "evaluations vanished");
    check.require(per_call < 1e-3, "CMI evaluation took " + fmt(per_call) + " s");
    check.note("I(AB:C|E) = I(BC:A|E) = 1/3, " + fmt(per_call * 1e6) + " us per evaluation");
    return {check.pass(), detail.str()};
}

CriterionResult criterion_2() {
    std::ostringstream detail;
    Checker check(detail);
    auto p1 = fixtures::build(FixtureId::p1);
    std::vector<std::int64_t> map{0, 0, 2, 3, 0};  // 1 -> 0, 4 -> 0, identity elsewhere
    auto witness = Channel::deterministic_map(5, 5, map);
    double value = cmi_after_channel(p1, AB, C, "E", witness).value;
    check.require(std::abs(value) < 1e-12, "I(AB:C|E') = " + fmt(value) + ", expected 0");
    check.note("the merge map 1->0, 4->0 yields I(AB:C|E') = " + fmt(value));
    return {check.pass(), detail.str()};
}

CriterionResult criterion_3() {
    std::ostringstream detail;
    Checker check(detail);
    auto start = std::chrono::steady_clock::now();
    auto p1 = fixtures::build(FixtureId::p1);

    auto ab_c = min_over_deterministic(p1, AB, C, "E");
    auto ac_b = min_over_deterministic(p1, AC, B, "E");
    check.require(ab_c.value.value <= 1e-6,
                  "deterministic minimum on AB-C is " + fmt(ab_c.value.value));
    check.require(ac_b.value.value <= 1e-6,
                  "deterministic minimum on AC-B is " + fmt(ac_b.value.value));

    // 64 continuous restarts: the minimum over restarts stays inside
    // [1/3 - 1e-6, 1/3 + 1e-6], so no restart ever reported below.
    auto a_bc = local_search(p1, A, BC, "E", 64, 0);
    check.require(a_bc.value.value >= 1.0 / 3 - 1e-6,
                  "a restart reported " + fmt(a_bc.value.value) + " below 1/3");
    check.require(a_bc.value.value <= 1.0 / 3 + 1e-6,
                  "A-BC minimum is " + fmt(a_bc.value.value) + ", expected 1/3");

    double elapsed = seconds_since(start);
    check.require(elapsed < 10.0, "took " + fmt(elapsed) + " s");
    check.note("AB-C -> " + fmt(ab_c.value.value) + ", AC-B -> " + fmt(ac_b.value.value) +
               ", A-BC -> " + fmt(a_bc.value.value) + " in " + fmt(elapsed) + " s");
    return {check.pass(), detail.str()};
}

CriterionResult criterion_4() {
    std::ostringstream detail;
    Checker check(detail);
    auto p1 = fixtures::build(FixtureId::p1);
    auto filtered = equality_filter(p1, "B", "C");
    check.require(filtered.survival_probability == 1.0 / 3,
                  "survival = " + fmt(filtered.survival_probability) + ", expected exactly 1/3");
    double i_abc = mutual_information(filtered.filtered, A, BC).value;
    double i_ae = mutual_information(filtered.filtered, A, E).value;
    check.require(std::abs(i_abc - 1.0) < 1e-12, "I(A:BC) = " + fmt(i_abc) + " after filtering");
    check.require(std::abs(i_ae) < 1e-12, "I(A:E) = " + fmt(i_ae) + " after filtering");
    double rate = filtered.survival_probability * i_abc;
    check.require(std::abs(rate - 1.0 / 3) < 1e-12, "total rate = " + fmt(rate));
    check.note("survival 1/3, one secret bit per surviving event, rate 1/3");
    return {check.pass(), detail.str()};
}

CriterionResult criterion_5() {
    std::ostringstream detail;
    Checker check(detail);
    std::vector<JointDistribution> parts{fixtures::build(FixtureId::p1),
                                         fixtures::build(FixtureId::p2),
                                         fixtures::build(FixtureId::p3)};
    std::vector<double> w{1.0 / 3, 1.0 / 3, 1.0 / 3};
    auto reconstructed = eve_canonicalize(mix(parts, w));
    auto table = fixtures::build(FixtureId::pmix);
    check.require(reconstructed.variables() == table.variables(),
                  "variable shapes differ after canonicalization");
    check.require(approx_equal(reconstructed, table, 1e-12),
                  "an entry differs from the eight-row table by more than 1e-12");
    check.note("mixture of the three relabelings reproduces the eight-row table entry by entry");
    return {check.pass(), detail.str()};
}

CriterionResult criterion_6() {
    std::ostringstream detail;
    Checker check(detail);
    auto start = std::chrono::steady_clock::now();
    auto pmix = fixtures::build(FixtureId::pmix);

    for (int n = 1; n <= 8; ++n) {
        auto stats = repeated_code_exact(pmix, n);
        double accept_ref = std::pow(2.0 / 6, n) + 3 * std::pow(2.0 / 9, n);
        double agree_ref = std::pow(2.0 / 6, n) / accept_ref;
        check.require(std::abs(stats.accept_probability - accept_ref) < 1e-12,
                      "acceptance at N=" + std::to_string(n) + " is " +
                          fmt(stats.accept_probability) + ", formula gives " + fmt(accept_ref));
        check.require(std::abs(stats.agree_probability_given_accept - agree_ref) < 1e-12,
                      "agreement at N=" + std::to_string(n) + " is " +
                          fmt(stats.agree_probability_given_accept) + ", formula gives " +
                          fmt(agree_ref));
    }

    auto n2 = repeated_code_exact(pmix, 2);
    check.require(std::abs(n2.accept_probability - 7.0 / 27) < 1e-12,
                  "acceptance at N=2 is " + fmt(n2.accept_probability) + ", expected 7/27");
    check.require(std::abs(n2.agree_probability_given_accept - 3.0 / 7) < 1e-12,
                  "agreement at N=2 is " + fmt(n2.agree_probability_given_accept) +
                      ", expected 3/7");

    auto n8 = repeated_code_exact(pmix, 8);
    check.require(n8.agree_probability_given_accept > 0.98,
                  "agreement at N=8 is " + fmt(n8.agree_probability_given_accept) +
                      " = 6561/7329 (the 0.98 threshold is reached from N=13 on)");
    check.require(n8.eve_key_information.value < 0.02,
                  "Eve's information at N=8 is " + fmt(n8.eve_key_information.value) +
                      " = 768/7329 bit (the 0.02 threshold is reached from N=13 on)");

    double elapsed = seconds_since(start);
    check.require(elapsed < 30.0, "took " + fmt(elapsed) + " s");
    return {check.pass(), detail.str()};
}

CriterionResult criterion_7() {
    std::ostringstream detail;
    Checker check(detail);
    auto start = std::chrono::steady_clock::now();
    auto pmix = fixtures::build(FixtureId::pmix);
    for (int n = 1; n <= 3; ++n) {
        auto exact = repeated_code_exact(pmix, n);
        auto mc = repeated_code_monte_carlo(pmix, n, 100000, 0);
        check.require(std::abs(mc.accept_probability - exact.accept_probability) <=
                          3 * mc.std_error_accept + 1e-15,
                      "acceptance off at N=" + std::to_string(n));
        check.require(std::abs(mc.agree_probability_given_accept -
                               exact.agree_probability_given_accept) <=
                          3 * mc.std_error_agree + 1e-15,
                      "agreement off at N=" + std::to_string(n));
        check.require(std::abs(mc.eve_key_information.value -
                               exact.eve_key_information.value) <=
                          3 * mc.std_error_eve_info + 1e-15,
                      "Eve information off at N=" + std::to_string(n));
    }
    double elapsed = seconds_since(start);
    check.require(elapsed < 10.0, "took " + fmt(elapsed) + " s");
    check.note("100000 trials at N = 1, 2, 3 all inside three standard errors, " +
               fmt(elapsed) + " s");
    return {check.pass(), detail.str()};
}

CriterionResult criterion_8() {
    std::ostringstream detail;
    Checker check(detail);
    CertifyConfig cfg;
    cfg.intrinsic.restarts = 16;

    auto p1 = fixtures::build(FixtureId::p1);
    auto cert1 = certify(p1, cfg);
    check.require(cert1.bound_information, "P1 verdict is \"" + cert1.reason + "\"");
    auto check1 = verify_certificate(p1, cert1, 1e-6);
    check.require(check1.ok, "P1 certificate replay: " + check1.detail);

    auto pmix = fixtures::build(FixtureId::pmix);
    auto certm = certify(pmix, cfg);
    check.require(!certm.bound_information && certm.reason == "distillable",
                  "Pmix verdict is \"" + certm.reason + "\"");
    auto checkm = verify_certificate(pmix, certm, 1e-6);
    check.require(checkm.ok, "Pmix certificate replay: " + checkm.detail);

    check.note("P1 -> bound-information, Pmix -> distillable, all witnesses replay within 1e-6");
    return {check.pass(), detail.str()};
}

CriterionResult criterion_9() {
    std::ostringstream detail;
    Checker check(detail);

    // Deterministic intrinsic search vs brute-force enumeration, |E| <= 5.
    auto rng = oracles::make_rng(20240601);
    oracles::RandomDistOptions opt;
    opt.min_honest = opt.max_honest = 2;
    opt.max_eve_alphabet = 5;
    for (int i = 0; i < 6; ++i) {
        auto d = oracles::random_distribution(rng, opt);
        auto lib = min_over_deterministic(d, A, B, "E");
        double oracle = oracles::deterministic_intrinsic(
            d, {"A"}, {"B"}, "E", d.variables().back().alphabet_size);
        check.require(std::abs(lib.value.value - oracle) < 1e-9,
                      "deterministic search disagrees with enumeration on case " +
                          std::to_string(i));
    }
    auto p1 = fixtures::build(FixtureId::p1);
    auto lib_p1 = min_over_deterministic(p1, AB, C, "E");
    double oracle_p1 = oracles::deterministic_intrinsic(p1, {"A", "B"}, {"C"}, "E", 5);
    check.require(std::abs(lib_p1.value.value - oracle_p1) < 1e-9,
                  "deterministic search disagrees with enumeration on P1");

    // CMI non-negativity against the KL oracle, and additivity over powers.
    for (int i = 0; i < 20; ++i) {
        auto d = oracles::random_distribution(rng, opt);
        double v = conditional_mutual_information(d, A, B, E).value;
        check.require(v >= 0.0, "negative CMI on a random distribution");
        check.require(std::abs(v - oracles::kl_cmi(d, {"A"}, {"B"}, {"E"})) < 1e-9,
                      "CMI disagrees with the KL oracle");
    }
    double base = conditional_mutual_information(p1, AB, C, E).value;
    for (int n = 2; n <= 4; ++n) {
        auto dn = iid_power(p1, n);
        check.require(
            std::abs(conditional_mutual_information(dn, AB, C, E).value - n * base) < 1e-9,
            "CMI is not additive at n = " + std::to_string(n));
    }

    // Exact protocol analysis vs full block enumeration at n <= 3.
    oracles::RandomDistOptions popt;
    popt.min_honest = popt.max_honest = 3;
    popt.binary_honest = true;
    popt.max_eve_alphabet = 4;
    std::vector<JointDistribution> cases{p1, fixtures::build(FixtureId::pmix)};
    for (int i = 0; i < 2; ++i) cases.push_back(oracles::random_distribution(rng, popt));
    for (const auto& d : cases) {
        for (int n = 1; n <= 3; ++n) {
            auto fast = repeated_code_exact(d, n);
            auto naive = oracles::naive_repeated_code(d, n);
            check.require(std::abs(fast.accept_probability - naive.accept) < 1e-12,
                          "acceptance differs from full enumeration");
            check.require(std::abs(fast.agree_probability_given_accept -
                                   naive.agree_given_accept) < 1e-12,
                          "agreement differs from full enumeration");
            check.require(std::abs(fast.eve_key_information.value - naive.eve_info) < 1e-9,
                          "Eve information differs from full enumeration");
        }
    }
    check.note("search/oracle equivalence, CMI properties and protocol enumeration all hold");
    return {check.pass(), detail.str()};
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<std::pair<int, std::function<CriterionResult()>>> criteria{
        {1, criterion_1}, {2, criterion_2}, {3, criterion_3},
        {4, criterion_4}, {5, criterion_5}, {6, criterion_6},
        {7, criterion_7}, {8, criterion_8}, {9, criterion_9},
    };

    int only = 0;
    if (argc > 1) only = std::atoi(argv[1]);

    int failures = 0;
    for (const auto& [number, run] : criteria) {
        if (only != 0 && number != only) continue;
        CriterionResult outcome;
        try {
            outcome = run();
        } catch (const std::exception& e) {
            outcome = {false, std::string("exception: ") + e.what()};
        }
        std::printf("%s criterion %d%s%s\n", outcome.pass ? "PASS" : "FAIL", number,
                    outcome.detail.empty() ? "" : ": ", outcome.detail.c_str());
        std::fflush(stdout);
        if (!outcome.pass) ++failures;
    }
    return failures;
}
