#include "latpath/dp.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace latpath::dp {

namespace {

void require(bool ok, const char* message) {
    if (!ok) {
        throw std::invalid_argument(message);
    }
}

// Unit paths from the origin staying on or below y = p*x + h, with the p
// boundary rows above the line stored as zeros.
Grid under_line(int p, int h, int M, int n_max) {
    require(p >= 1 && h >= 0 && M >= 0, "slope p must be >= 1, h and M non-negative");
    const int top = n_max < 0 ? p * M + h + p : n_max;
    Grid g(0, M, 0, top);
    for (int m = 0; m <= M; ++m) {
        const int line = p * m + h;
        for (int n = 0; n <= std::min(top, line + p); ++n) {
            if (n > line) {
                g.set(m, n, 0);
            } else if (m == 0 && n == 0) {
                g.set(m, n, 1);
            } else {
                g.set(m, n, g.value_or_zero(m - 1, n) + g.value_or_zero(m, n - 1));
            }
        }
    }
    return g;
}

// Quadrant recurrence with point sources at (1,0) and (0,1).
Grid quadrant_with_sources(int M, const Rational& right_source, const Rational& up_source) {
    require(M >= 1, "M must be >= 1");
    Grid g(0, M, 0, M);
    for (int m = 0; m <= M; ++m) {
        for (int n = 0; n <= M; ++n) {
            Rational v = g.value_or_zero(m - 1, n) + g.value_or_zero(m, n - 1);
            if (m == 1 && n == 0) {
                v += right_source;
            } else if (m == 0 && n == 1) {
                v += up_source;
            }
            g.set(m, n, std::move(v));
        }
    }
    return g;
}

}  // namespace

Grid ballot(int M) {
    require(M >= 1, "M must be >= 1");
    Grid g(0, M, 0, M);
    for (int m = 0; m <= M; ++m) {
        for (int n = 0; n <= M; ++n) {
            if (m <= n) {
                g.set(m, n, 0);
            } else if (m == 1 && n == 0) {
                g.set(m, n, 1);
            } else {
                g.set(m, n, g.value_or_zero(m - 1, n) + g.value_or_zero(m, n - 1));
            }
        }
    }
    return g;
}

Grid ballot_extended(int M) { return quadrant_with_sources(M, 1, -1); }

Grid c_p(int p, int M) {
    require(p >= 1 && M >= 1, "p and M must be >= 1");
    Grid g(0, M, 0, M / p);
    for (int m = 0; m <= M; ++m) {
        for (int n = 0; p * n <= m; ++n) {
            if (m == p * n) {
                g.set(m, n, 0);
            } else if (m == 1 && n == 0) {
                g.set(m, n, 1);
            } else {
                g.set(m, n, g.value_or_zero(m - 1, n) + g.value_or_zero(m, n - 1));
            }
        }
    }
    return g;
}

Grid c_p_extended(int p, int M) {
    require(p >= 1, "p must be >= 1");
    return quadrant_with_sources(M, 1, -p);
}

Grid d_p(int p, int M, int n_max) { return under_line(p, 0, M, n_max); }

Grid e_ph(int p, int h, int M, int n_max) { return under_line(p, h, M, n_max); }

Grid d_p_extended_experimental(int p, int n_max, int m_max) {
    require(p >= 1 && n_max >= 0 && m_max >= 0, "p >= 1, n_max >= 0 and m_max >= 0 required");
    // Rightmost working column whose rows 0..n_max are all combinatorial or
    // boundary zeros.
    const int right = std::max(m_max, (n_max + p - 1) / p);
    const Grid base = under_line(p, 0, right, n_max);
    const int left = -n_max;
    Grid ext(left, right, 0, n_max);
    for (int m = right; m >= left; --m) {
        for (int n = std::max(0, -m); n <= n_max; ++n) {
            if (base.contains(m, n)) {
                ext.set(m, n, base.at(m, n));
            } else {
                ext.set(m, n, ext.at(m + 1, n) - ext.value_or_zero(m + 1, n - 1));
            }
        }
    }
    return ext.cropped(left, m_max, 0, n_max);
}

Grid d2_extended(int n_max, int m_max) { return d_p_extended_experimental(2, n_max, m_max); }

Grid s_count(int M, int n_max) {
    require(M >= 0, "M must be non-negative");
    const int top = n_max < 0 ? M : n_max;
    // S(m-1, n+1) feeds S(m, n), so keep one spare row while filling.
    Grid work(0, M, 0, std::max(top, M) + 1);
    for (int m = 0; m <= M; ++m) {
        for (int n = 0; n <= work.n_max(); ++n) {
            if (m == 0 && n == 0) {
                work.set(m, n, 1);
                continue;
            }
            Rational v;
            for (int i = -1; i <= 2; ++i) {
                v += work.value_or_zero(m - i - 2, n - i);
            }
            work.set(m, n, std::move(v));
        }
    }
    return work.cropped(0, M, 0, top);
}

Grid p_h(const StepSet& steps, const Weights& weights, int h, int M) {
    require(h >= 0 && M >= 0, "h and M must be non-negative");
    require(weights.steps() == steps, "weights belong to a different step set");
    const int K = steps.max_step();
    Grid g(0, M, 0, K * M + h);
    for (int n = 0; n <= g.n_max(); ++n) {
        g.set(0, n, n == h ? 1 : 0);
    }
    for (int m = 0; m < M; ++m) {
        for (int n = 0; n <= g.n_max(); ++n) {
            Rational v;
            for (int i : steps.elements()) {
                const Rational prev = g.value_or_zero(m, n - i);
                if (sgn(prev) != 0) {
                    v += weights.at(i) * prev;
                }
            }
            g.set(m + 1, n, std::move(v));
        }
    }
    return g;
}

int extension_cone_width(int K, int n) {
    require(K >= 1, "the downward extension needs K >= 1");
    if (n >= -K) {
        return 0;
    }
    // need(n) = max(1 + need(n+K), need(n+1)), filled upward from -K.
    std::vector<int> need(static_cast<std::size_t>(-n + 1), 0);  // need[k] for row -k
    for (int row = -K - 1; row >= n; --row) {
        const auto k = static_cast<std::size_t>(-row);
        need[k] = std::max(1 + need[k - static_cast<std::size_t>(K)], need[k - 1]);
    }
    return need[static_cast<std::size_t>(-n)];
}

Grid p_h_extended(const StepSet& steps, const Weights& weights, int h, int M, int n_min, std::optional<int> n_max) {
    const int K = steps.max_step();
    require(K >= 1, "p_h_extended requires K >= 1 (with K = 0 the recurrence never reaches known rows)");
    require(n_min <= -K - 1, "n_min must be <= -K-1");
    require(M >= 0 && h >= 0, "h and M must be non-negative");
    const int top = n_max.value_or(K * M + h);
    require(top >= n_min, "n_max below n_min");

    const int width = M + extension_cone_width(K, n_min);
    const int comb_top = K * width + h;
    const auto cols = static_cast<std::size_t>(width + 1);
    const auto rows = static_cast<std::size_t>(std::max(comb_top, top) - n_min + 1);
    if (cols > Grid::kMaxCells / rows) {
        throw std::length_error("p_h_extended: rows down to " + std::to_string(n_min) + " need columns 0.." +
                                std::to_string(width) + " (dependency cone), exceeding the cell limit");
    }

    const Grid comb = p_h(steps, weights, h, width);
    Grid ext(0, width, n_min, std::max(comb_top, top));
    for (int m = 0; m <= width; ++m) {
        for (int n = -K; n <= ext.n_max(); ++n) {
            ext.set(m, n, comb.value_or_zero(m, n));
        }
    }
    for (int n = -K - 1; n >= n_min; --n) {
        const int last = width - extension_cone_width(K, n);
        for (int m = 0; m <= last; ++m) {
            Rational v = ext.at(m + 1, n + K);
            for (int i : steps.elements()) {
                if (i != K) {
                    v -= weights.at(i) * ext.at(m, n + K - i);
                }
            }
            ext.set(m, n, std::move(v));
        }
    }
    return ext.cropped(0, M, n_min, top);
}

}  // namespace latpath::dp
