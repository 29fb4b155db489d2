#include "latpath/steps.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace latpath {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t pos = 0;
    while (true) {
        auto next = text.find(sep, pos);
        parts.push_back(text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos));
        if (next == std::string_view::npos) {
            break;
        }
        pos = next + 1;
    }
    return parts;
}

int parse_int(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
        throw std::invalid_argument("expected an integer, got '" + std::string(text) + "'");
    }
    return value;
}

// binom(dx+dy, dx) unrestricted monotone paths must fit under the cap.
void check_unit_cap(long dx, long dy, std::uint64_t cap) {
    if (binomial(dx + dy, dx) > cap) {
        throw std::length_error("enumeration of binom(" + std::to_string(dx + dy) + "," + std::to_string(dx) +
                                ") unit paths exceeds the cap of " + std::to_string(cap) +
                                " (set LATPATH_ENUM_CAP to raise it)");
    }
}

// |T|^length <= cap without overflow.
void check_cap(std::uint64_t base, int length, std::uint64_t cap) {
    std::uint64_t total = 1;
    for (int i = 0; i < length; ++i) {
        if (total > cap / std::max<std::uint64_t>(base, 1)) {
            throw std::length_error("enumeration of " + std::to_string(base) + "^" + std::to_string(length) +
                                    " paths exceeds the cap of " + std::to_string(cap) +
                                    " (set LATPATH_ENUM_CAP to raise it)");
        }
        total *= base;
    }
}

}  // namespace

StepSet::StepSet(std::vector<int> elements) : elements_(std::move(elements)) {
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    if (elements_.empty() || elements_.front() != -1) {
        throw std::invalid_argument("step set must contain -1 and no element below -1");
    }
    if (elements_.back() < 0) {
        throw std::invalid_argument("step set needs a largest element K >= 0");
    }
}

StepSet StepSet::parse(std::string_view text) {
    std::vector<int> elements;
    for (auto part : split(text, ',')) {
        elements.push_back(parse_int(part));
    }
    return StepSet(std::move(elements));
}

bool StepSet::contains(int step) const {
    return std::binary_search(elements_.begin(), elements_.end(), step);
}

std::string StepSet::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        out << (i ? "," : "") << elements_[i];
    }
    out << '}';
    return out.str();
}

Weights::Weights(const StepSet& steps) : steps_(steps) {
    for (int i : steps_.elements()) {
        weights_.emplace(i, 1);
    }
}

Weights Weights::parse(const StepSet& steps, std::string_view text) {
    Weights w(steps);
    if (text.empty()) {
        return w;
    }
    for (auto pair : split(text, ',')) {
        auto eq = pair.find('=');
        if (eq == std::string_view::npos) {
            throw std::invalid_argument("weight must look like i=p/q, got '" + std::string(pair) + "'");
        }
        w.set(parse_int(pair.substr(0, eq)), parse_rational(pair.substr(eq + 1)));
    }
    return w;
}

Weights& Weights::set(int step, const Rational& weight) {
    if (!steps_.contains(step)) {
        throw std::invalid_argument("weight for step " + std::to_string(step) + " outside " + steps_.to_string());
    }
    if ((step == -1 || step == steps_.max_step()) && weight != 1) {
        throw std::invalid_argument("c_" + std::to_string(step) + " is pinned to 1");
    }
    weights_[step] = weight;
    return *this;
}

const Rational& Weights::at(int step) const {
    auto it = weights_.find(step);
    if (it == weights_.end()) {
        throw std::invalid_argument("no weight for step " + std::to_string(step));
    }
    return it->second;
}

bool Weights::is_integral() const {
    return std::all_of(weights_.begin(), weights_.end(), [](const auto& kv) { return is_integer(kv.second); });
}

bool Weights::is_uniform() const {
    return std::all_of(weights_.begin(), weights_.end(), [](const auto& kv) { return kv.second == 1; });
}

std::string Weights::to_string() const {
    std::string out;
    for (const auto& [step, w] : weights_) {
        if (w != 1) {
            out += (out.empty() ? "" : ",") + std::to_string(step) + "=" + latpath::to_string(w);
        }
    }
    return out.empty() ? "all-1" : out;
}

Point UnitPath::end() const {
    Point p = start;
    for (auto s : steps) {
        (s == UnitStep::Right ? p.x : p.y) += 1;
    }
    return p;
}

std::string UnitPath::to_string() const {
    std::string out;
    out.reserve(steps.size());
    for (auto s : steps) {
        out.push_back(static_cast<char>(s));
    }
    return out;
}

UnitPath UnitPath::parse(std::string_view text, Point start) {
    UnitPath path{start, {}};
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == 'R') {
            path.steps.push_back(UnitStep::Right);
        } else if (text[i] == 'U') {
            path.steps.push_back(UnitStep::Up);
        } else {
            throw std::invalid_argument("not a unit step at index " + std::to_string(i) + ": '" + text[i] + "'");
        }
    }
    return path;
}

Point RisePath::end() const {
    Point p = start;
    for (int r : rises) {
        p.x += 1;
        p.y += r;
    }
    return p;
}

std::string RisePath::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < rises.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(rises[i]);
    }
    return out;
}

RisePath RisePath::parse(std::string_view text, Point start) {
    RisePath path{start, {}};
    if (text.empty()) {
        return path;
    }
    for (auto part : split(text, ',')) {
        path.rises.push_back(parse_int(part));
    }
    return path;
}

namespace oracle {

std::vector<RisePath> enumerate_rise_paths(const StepSet& steps, int m, int n, int h, bool floor,
                                           std::uint64_t cap) {
    if (m < 0 || h < 0) {
        throw std::invalid_argument("enumerate_rise_paths: m and h must be non-negative");
    }
    check_cap(steps.size(), m, cap);
    std::vector<RisePath> out;
    std::vector<int> rises;
    rises.reserve(static_cast<std::size_t>(m));
    const int lo = steps.elements().front();
    const int hi = steps.max_step();
    std::function<void(long)> walk = [&](long height) {
        const int left = m - static_cast<int>(rises.size());
        if (left == 0) {
            if (height == n) {
                out.push_back(RisePath{{0, h}, rises});
            }
            return;
        }
        if (height + static_cast<long>(left) * hi < n || height + static_cast<long>(left) * lo > n) {
            return;
        }
        for (int r : steps.elements()) {
            if (floor && height + r < 0) {
                continue;
            }
            rises.push_back(r);
            walk(height + r);
            rises.pop_back();
        }
    };
    walk(h);
    return out;
}

Rational weight_of(const RisePath& path, const Weights& weights) {
    Rational w = 1;
    for (int r : path.rises) {
        if (!weights.steps().contains(r)) {
            throw std::invalid_argument("rise " + std::to_string(r) + " outside the weight domain " +
                                        weights.steps().to_string());
        }
        w *= weights.at(r);
    }
    return w;
}

std::map<std::pair<int, int>, Rational> rise_weight_table(const StepSet& steps, const Weights& weights, int h,
                                                          int max_length, bool floor, std::uint64_t cap) {
    if (max_length < 0 || max_length > 255 || steps.size() > 8) {
        throw std::invalid_argument("rise_weight_table supports lengths <= 255 and |T| <= 8");
    }
    check_cap(steps.size(), max_length, cap);
    const auto elems = steps.elements();
    // Step counts are packed one byte per element of T.
    std::map<std::tuple<int, long, std::uint64_t>, std::uint64_t> tally;
    std::function<void(int, long, std::uint64_t)> walk = [&](int length, long height, std::uint64_t counts) {
        ++tally[{length, height, counts}];
        if (length == max_length) {
            return;
        }
        for (std::size_t k = 0; k < elems.size(); ++k) {
            if (floor && height + elems[k] < 0) {
                continue;
            }
            walk(length + 1, height + elems[k], counts + (std::uint64_t{1} << (8 * k)));
        }
    };
    walk(0, h, 0);

    std::map<std::pair<int, int>, Rational> table;
    for (const auto& [key, count] : tally) {
        const auto& [length, height, counts] = key;
        Rational w = 1;
        for (std::size_t k = 0; k < elems.size(); ++k) {
            const auto times = (counts >> (8 * k)) & 0xFFU;
            for (std::uint64_t j = 0; j < times; ++j) {
                w *= weights.at(elems[k]);
            }
        }
        table[{length, static_cast<int>(height)}] += w * Rational(Integer(static_cast<unsigned long>(count)));
    }
    return table;
}

std::vector<UnitPath> enumerate_unit_paths(Point from, Point to, const PointPredicate& allowed, std::uint64_t cap) {
    std::vector<UnitPath> out;
    const long dx = to.x - from.x;
    const long dy = to.y - from.y;
    if (dx < 0 || dy < 0) {
        return out;
    }
    check_unit_cap(dx, dy, cap);
    if (!allowed(from)) {
        return out;
    }
    UnitPath path{from, {}};
    std::function<void(Point)> walk = [&](Point p) {
        if (p == to) {
            out.push_back(path);
            return;
        }
        if (p.x < to.x) {
            Point q{p.x + 1, p.y};
            if (allowed(q)) {
                path.steps.push_back(UnitStep::Right);
                walk(q);
                path.steps.pop_back();
            }
        }
        if (p.y < to.y) {
            Point q{p.x, p.y + 1};
            if (allowed(q)) {
                path.steps.push_back(UnitStep::Up);
                walk(q);
                path.steps.pop_back();
            }
        }
    };
    walk(from);
    return out;
}

std::uint64_t count_unit_paths(Point from, Point to, const PointPredicate& allowed, std::uint64_t cap) {
    const long dx = to.x - from.x;
    const long dy = to.y - from.y;
    if (dx < 0 || dy < 0) {
        return 0;
    }
    check_unit_cap(dx, dy, cap);
    if (!allowed(from)) {
        return 0;
    }
    std::uint64_t count = 0;
    std::function<void(Point)> walk = [&](Point p) {
        if (p == to) {
            ++count;
            return;
        }
        if (p.x < to.x && allowed({p.x + 1, p.y})) {
            walk({p.x + 1, p.y});
        }
        if (p.y < to.y && allowed({p.x, p.y + 1})) {
            walk({p.x, p.y + 1});
        }
    };
    walk(from);
    return count;
}

PointPredicate strictly_below_diagonal() {
    return [](Point p) { return p.y < p.x; };
}

PointPredicate never_touches_x_eq_py(int p) {
    return [p](Point q) { return q.x > static_cast<long>(p) * q.y; };
}

PointPredicate never_crosses_x_eq_py(int p) {
    return [p](Point q) { return q.x >= static_cast<long>(p) * q.y; };
}

PointPredicate never_crosses_y_eq_px(int p, int h) {
    return [p, h](Point q) { return q.y <= static_cast<long>(p) * q.x + h; };
}

std::vector<RisePath> enumerate_restricted_dyck(int m, int n, std::uint64_t cap) {
    std::vector<RisePath> out;
    for (auto& path : enumerate_rise_paths(StepSet({-1, 1}), m, n, 0, true, cap)) {
        if (!path.rises.empty() && path.rises.back() != -1) {
            continue;
        }
        int run = 0;
        bool ok = true;
        for (int r : path.rises) {
            run = r == 1 ? run + 1 : 0;
            if (run >= 4) {
                ok = false;
                break;
            }
        }
        if (ok) {
            out.push_back(std::move(path));
        }
    }
    return out;
}

}  // namespace oracle
}  // namespace latpath
