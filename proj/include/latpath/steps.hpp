#ifndef LATPATH_STEPS_HPP
#define LATPATH_STEPS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latpath/rational.hpp"

namespace latpath {

/// Allowed rises i of steps (1, i). Contains -1, every element is >= -1 and
/// the largest element K is >= 0.
class StepSet {
public:
    /// Sorts and deduplicates; throws std::invalid_argument on a bad set.
    explicit StepSet(std::vector<int> elements);
    /// Comma separated integers, e.g. "-1,0,1,2".
    static StepSet parse(std::string_view text);

    std::span<const int> elements() const { return elements_; }
    int max_step() const { return elements_.back(); }
    std::size_t size() const { return elements_.size(); }
    bool contains(int step) const;
    std::string to_string() const;

    friend bool operator==(const StepSet&, const StepSet&) = default;

private:
    std::vector<int> elements_;
};

/// Per-step weights c_i with c_{-1} = c_K = 1 pinned.
class Weights {
public:
    /// All weights 1.
    explicit Weights(const StepSet& steps);
    /// "i=p/q" pairs separated by commas; empty text means all-1.
    static Weights parse(const StepSet& steps, std::string_view text);

    /// Throws std::invalid_argument for steps outside T or for changing
    /// c_{-1} or c_K away from 1.
    Weights& set(int step, const Rational& weight);

    const Rational& at(int step) const;
    const StepSet& steps() const { return steps_; }
    bool is_integral() const;
    bool is_uniform() const;
    /// "all-1" or the non-unit weights as "i=w" pairs.
    std::string to_string() const;

private:
    StepSet steps_;
    std::map<int, Rational> weights_;
};

struct Point {
    long x = 0;
    long y = 0;
    friend bool operator==(const Point&, const Point&) = default;
    friend auto operator<=>(const Point&, const Point&) = default;
};

enum class UnitStep : char { Right = 'R', Up = 'U' };

/// Monotone path of unit right/up steps.
struct UnitPath {
    Point start;
    std::vector<UnitStep> steps;

    Point end() const;
    /// "RRU" style step string.
    std::string to_string() const;
    /// Parses a step string; any character other than R or U throws.
    static UnitPath parse(std::string_view text, Point start = {});

    friend bool operator==(const UnitPath&, const UnitPath&) = default;
    friend auto operator<=>(const UnitPath& a, const UnitPath& b) {
        return std::pair(a.start, a.to_string()) <=> std::pair(b.start, b.to_string());
    }
};

/// Path of steps (1, i) recorded by their rises.
struct RisePath {
    Point start;
    std::vector<int> rises;

    Point end() const;
    /// Comma separated rises, e.g. "2,-1,-1"; the empty path is "".
    std::string to_string() const;
    static RisePath parse(std::string_view text, Point start = {});

    friend bool operator==(const RisePath&, const RisePath&) = default;
    friend auto operator<=>(const RisePath&, const RisePath&) = default;
};

namespace oracle {

inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// All paths from (0,h) to (m,n) with rises in T, in lexicographic order of
/// the rise sequence. With `floor`, every prefix stays at height >= 0.
/// Throws std::length_error when |T|^m exceeds the cap.
std::vector<RisePath> enumerate_rise_paths(const StepSet& steps, int m, int n, int h, bool floor,
                                           std::uint64_t cap = kDefaultEnumerationCap);

/// Product of c_i over the path's steps.
Rational weight_of(const RisePath& path, const Weights& weights);

/// Sum of path weights for every endpoint reachable from (0,h) in at most
/// `max_length` steps, keyed by (m, n). One exhaustive walk; weights are
/// applied per distinct step-count vector rather than per path.
std::map<std::pair<int, int>, Rational> rise_weight_table(const StepSet& steps, const Weights& weights,
                                                          int h, int max_length, bool floor,
                                                          std::uint64_t cap = kDefaultEnumerationCap);

using PointPredicate = std::function<bool(Point)>;

/// Monotone unit paths from `from` to `to` whose every visited lattice
/// point (the start included) satisfies the predicate; ordered with R < U.
std::vector<UnitPath> enumerate_unit_paths(Point from, Point to, const PointPredicate& allowed,
                                           std::uint64_t cap = kDefaultEnumerationCap);
/// Same walk, counting instead of storing. Both throw std::length_error when
/// binom(dx+dy, dx) exceeds the cap.
std::uint64_t count_unit_paths(Point from, Point to, const PointPredicate& allowed,
                               std::uint64_t cap = kDefaultEnumerationCap);

// Boundary predicates used by the unit-step families.
PointPredicate strictly_below_diagonal();        // y < x
PointPredicate never_touches_x_eq_py(int p);     // x > p*y
PointPredicate never_crosses_x_eq_py(int p);     // x >= p*y
PointPredicate never_crosses_y_eq_px(int p, int h = 0);  // y <= p*x + h

/// Generalized Dyck paths (rises +-1, floor 0) from the origin to (m,n) that
/// end with a down step and have no four consecutive up steps. The empty
/// path counts for (0,0).
std::vector<RisePath> enumerate_restricted_dyck(int m, int n, std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace oracle
}  // namespace latpath

#endif  // LATPATH_STEPS_HPP
