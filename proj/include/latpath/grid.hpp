#ifndef LATPATH_GRID_HPP
#define LATPATH_GRID_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "latpath/rational.hpp"

namespace latpath {

/// Dense table of exact values over m_min..m_max x n_min..n_max.
///
/// Cells start absent. A present cell holds a value (possibly zero); absent
/// cells render blank and read as zero through value_or_zero().
class Grid {
public:
    static constexpr std::size_t kMaxCells = 100'000'000;

    /// Throws std::length_error beyond kMaxCells.
    Grid(int m_min, int m_max, int n_min, int n_max);

    int m_min() const { return m_min_; }
    int m_max() const { return m_max_; }
    int n_min() const { return n_min_; }
    int n_max() const { return n_max_; }

    bool in_range(int m, int n) const;
    bool contains(int m, int n) const;

    /// Throws std::out_of_range for cells that are absent or out of range.
    const Rational& at(int m, int n) const;
    Rational value_or_zero(int m, int n) const;
    void set(int m, int n, Rational value);

    /// Copy of the present cells inside the given window.
    Grid cropped(int m_min, int m_max, int n_min, int n_max) const;

    bool is_integral() const;

    template <class F>
    void for_each(F&& f) const {
        for (int n = n_max_; n >= n_min_; --n) {
            for (int m = m_min_; m <= m_max_; ++m) {
                if (contains(m, n)) {
                    f(m, n, at(m, n));
                }
            }
        }
    }

private:
    std::size_t index(int m, int n) const;

    int m_min_, m_max_, n_min_, n_max_;
    std::vector<Rational> values_;
    std::vector<char> present_;
};

/// Rows n descending, one tab separated column per m, absent cells empty,
/// closing header row "n/m<TAB>m...". With omit_zeros, zero cells are blank.
std::string to_tsv(const Grid& grid, bool omit_zeros = false);

/// JSON array of {"m":..,"n":..,"value":"p/q"} over present cells, in TSV order.
std::string to_json(const Grid& grid);

}  // namespace latpath

#endif  // LATPATH_GRID_HPP
