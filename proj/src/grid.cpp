#include "latpath/grid.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace latpath {

Grid::Grid(int m_min, int m_max, int n_min, int n_max)
    : m_min_(m_min), m_max_(m_max), n_min_(n_min), n_max_(n_max) {
    if (m_max < m_min || n_max < n_min) {
        throw std::invalid_argument("grid with empty range");
    }
    const auto cols = static_cast<std::size_t>(m_max - m_min + 1);
    const auto rows = static_cast<std::size_t>(n_max - n_min + 1);
    if (cols > kMaxCells / rows) {
        throw std::length_error("grid of " + std::to_string(cols) + " x " + std::to_string(rows) +
                                " cells exceeds the limit of " + std::to_string(kMaxCells));
    }
    values_.resize(cols * rows);
    present_.assign(cols * rows, 0);
}

bool Grid::in_range(int m, int n) const {
    return m >= m_min_ && m <= m_max_ && n >= n_min_ && n <= n_max_;
}

bool Grid::contains(int m, int n) const { return in_range(m, n) && present_[index(m, n)] != 0; }

std::size_t Grid::index(int m, int n) const {
    return static_cast<std::size_t>(m - m_min_) * static_cast<std::size_t>(n_max_ - n_min_ + 1) +
           static_cast<std::size_t>(n - n_min_);
}

const Rational& Grid::at(int m, int n) const {
    if (!contains(m, n)) {
        throw std::out_of_range("grid has no value at (" + std::to_string(m) + "," + std::to_string(n) + ")");
    }
    return values_[index(m, n)];
}

Rational Grid::value_or_zero(int m, int n) const { return contains(m, n) ? values_[index(m, n)] : Rational(0); }

void Grid::set(int m, int n, Rational value) {
    if (!in_range(m, n)) {
        throw std::out_of_range("grid cell (" + std::to_string(m) + "," + std::to_string(n) + ") out of range");
    }
    const auto i = index(m, n);
    values_[i] = std::move(value);
    present_[i] = 1;
}

Grid Grid::cropped(int m_min, int m_max, int n_min, int n_max) const {
    Grid out(m_min, m_max, n_min, n_max);
    for (int m = m_min; m <= m_max; ++m) {
        for (int n = n_min; n <= n_max; ++n) {
            if (contains(m, n)) {
                out.set(m, n, at(m, n));
            }
        }
    }
    return out;
}

bool Grid::is_integral() const {
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (present_[i] && !is_integer(values_[i])) {
            return false;
        }
    }
    return true;
}

std::string to_tsv(const Grid& grid, bool omit_zeros) {
    std::ostringstream out;
    for (int n = grid.n_max(); n >= grid.n_min(); --n) {
        out << n;
        for (int m = grid.m_min(); m <= grid.m_max(); ++m) {
            out << '\t';
            if (grid.contains(m, n) && !(omit_zeros && sgn(grid.at(m, n)) == 0)) {
                out << to_string(grid.at(m, n));
            }
        }
        out << '\n';
    }
    out << "n/m";
    for (int m = grid.m_min(); m <= grid.m_max(); ++m) {
        out << '\t' << m;
    }
    out << '\n';
    return out.str();
}

std::string to_json(const Grid& grid) {
    auto cells = nlohmann::json::array();
    grid.for_each([&](int m, int n, const Rational& v) {
        cells.push_back({{"m", m}, {"n", n}, {"value", to_string(v)}});
    });
    return cells.dump() + "\n";
}

}  // namespace latpath
