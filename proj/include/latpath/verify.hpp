#ifndef LATPATH_VERIFY_HPP
#define LATPATH_VERIFY_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "latpath/steps.hpp"

// Cross-checks between the dp recurrences, the generating functions, the
// bijections and the brute-force oracle. Each routine returns a line-oriented
// report ending in a PASS/FAIL trailer.
namespace latpath::verify {

class Report {
public:
    explicit Report(std::string name);

    /// Counts one check. `describe` is only called when the check fails.
    template <class Describe>
    bool check(bool ok, Describe&& describe) {
        ++checks_;
        if (!ok) {
            fail(describe());
        }
        return ok;
    }
    bool check(bool ok, const char* what) {
        return check(ok, [what] { return std::string(what); });
    }

    void note(std::string line);
    /// Folds another report's checks and failures into this one.
    void absorb(const Report& other);

    const std::string& name() const { return name_; }
    bool passed() const { return failures_ == 0; }
    std::size_t checks() const { return checks_; }
    std::size_t failures() const { return failures_; }

    /// Notes and failure lines, then "PASS <name> (<k> checks)" or
    /// "FAIL <name> (<f> of <k> checks failed; first: ...)".
    std::string text() const;

private:
    void fail(std::string what);

    std::string name_;
    std::vector<std::string> lines_;
    std::string first_failure_;
    std::size_t checks_ = 0;
    std::size_t failures_ = 0;
};

/// One (T, weights, h) configuration for the step-set theorem checks.
struct Case {
    StepSet steps;
    Weights weights;
    int h = 0;
    std::string label() const;
};

/// Step sets {-1,1}, {-1,2}, {-1,1,2}, {-1,0,1,2}, {-1,0,3}, {-1,2,4} with
/// h = 0,1,2 and every applicable weight variant: all-1, c1 = 2, c0 = 1/2,
/// c0 = 1/2 with c1 = 2, and c2 = 3 on {-1,2,4}. Variants that would change
/// a pinned weight (c_{-1}, c_K) or name a step outside T are skipped.
std::vector<Case> theorem_fixtures();

/// The x^m t^n coefficients of the S' generating function against
/// S(4m-n, 2m-n) for 0 <= n <= 2m, m <= M.
Report ns(int M = 15);

/// Per case: g solves its equation, f solves its equation, g agrees with
/// the f route and (K = 2) the quadratic formula to `consistency_order`;
/// the redundant family matches p_h for m <= M and the continued table in
/// the redundant region; the first column is x^h f^(h+1); integrality for
/// integer weights.
Report thm51(const std::vector<Case>& cases, int M = 10, std::size_t consistency_order = 20);

/// P'_h(m,-K-1) = -P'_h(m,0) and the zero rows -K..-1, for m <= M, through
/// both the continued table and the generating function.
Report lemma53(const std::vector<Case>& cases, int M = 10);

Report lemma31(int n_max = 200);

/// 1/(1 - x c(xy)) against 1 + ballot for m, n <= M.
Report eq204(int M = 10);

/// (x - p y)/(1 - x - y) against the extended C'_p grids and the closed form
/// for m + n <= diagonal; the gamma families against D_p and E_{p,h} for
/// p = 1..3, h = 0..2, m <= M; the h = 0 reduction; gamma against g.
Report rgf(int M = 10, int diagonal = 20);

/// reverse_swap involution and image sets, dyck_encode/decode round trips
/// and image counts.
Report bijection(int unit_length = 10, int dyck_length = 12, int rise_length = 6, int image_n = 4);

/// D_2(-n-1, n+1) = (-1)^(n+1) C_n for n <= N by the leftward extension and
/// by the generating function; agreement of the two on the whole extended
/// region; D_2(m,n) = P'_0(m+n, 2m-n) for T = {-1,2}.
Report catalan_line(int N = 30);

/// D_2(-2, n+2) = (-1)^n M_n for n <= N with the Motzkin recurrence.
Report motzkin_line(int N = 20);

/// Brute-force path enumeration against every dp family: unit-step grids for
/// m <= unit_max, rise-path grids for m <= rise_max.
Report oracle_compare(int unit_max = 8, int rise_max = 10,
                      std::uint64_t cap = oracle::kDefaultEnumerationCap);

}  // namespace latpath::verify

#endif  // LATPATH_VERIFY_HPP
