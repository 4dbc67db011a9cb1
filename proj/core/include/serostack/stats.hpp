#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "serostack/dataset.hpp"

namespace serostack {

enum class TestKind { t_test, u_test };
enum class TVariant { student_pooled, welch };

std::string_view test_kind_name(TestKind kind);

// How the p-value was obtained.
enum class PvalueMethod { exact_enumeration, normal_approx, student_df, welch_df };

struct TestResult {
    double statistic = 0.0; // t or U
    double p_value = 1.0;   // two-sided, in [0, 1]
    TestKind kind = TestKind::t_test;
    std::size_t n_a = 0, n_b = 0;
    PvalueMethod method = PvalueMethod::student_df;
    double df = 0.0; // degrees of freedom for t tests, else 0
};

// Regularized incomplete beta I_x(a, b), continued-fraction evaluation.
double regularized_incomplete_beta(double a, double b, double x);

// CDF of Student's t distribution; absolute error <= 1e-10.
double t_cdf(double t, double df);

// Standard normal CDF.
double normal_cdf(double z);

// Two-sided two-sample t test. Zero pooled variance with equal means gives
// t = 0, p = 1; zero variance with unequal means gives p = 0 as a limit.
TestResult t_test(std::span<const double> a, std::span<const double> b,
                  TVariant variant = TVariant::welch);

// Two-sided Mann-Whitney U with midranks. Exact p by rank-set enumeration
// when n_a + n_b <= 12 and there are no ties; otherwise normal approximation
// with tie-corrected variance and 0.5 continuity correction.
TestResult mann_whitney_u(std::span<const double> a, std::span<const double> b);

// --- Screening ------------------------------------------------------------

struct MarkerScore {
    std::string marker;
    int disease_class = 0; // compared against class 0
    TestKind test = TestKind::t_test;
    TestResult result;
};

struct ScreeningConfig {
    std::vector<TestKind> tests = {TestKind::t_test, TestKind::u_test};
    int k_per_comparison = 2;
    double alpha = 0.05; // reported, never used to filter
    TVariant t_variant = TVariant::welch;
};

struct ScreeningReport {
    std::vector<MarkerScore> scores;    // full (test x class x marker) grid
    std::vector<std::string> selected;  // deduplicated union, (min p, name) order
};

// Scores every marker for each disease class against the control class on
// values flattened by `policy`, keeps the k lowest-p markers per comparison,
// and returns the deduplicated union.
ScreeningReport screen_markers(const Dataset& ds, const FlattenPolicy& policy,
                               const ScreeningConfig& cfg);

} // namespace serostack
