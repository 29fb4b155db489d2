#include "latpath/bijections.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace latpath::bij {

namespace {

[[noreturn]] void reject(const std::string& what, std::size_t index) {
    throw std::invalid_argument(what + " at step " + std::to_string(index));
}

void require_origin(const RisePath& path, const char* who) {
    if (path.start != Point{}) {
        throw std::invalid_argument(std::string(who) + ": path must start at the origin");
    }
}

}  // namespace

UnitPath reverse_swap(const UnitPath& path) {
    UnitPath out;
    out.steps.reserve(path.steps.size());
    for (auto it = path.steps.rbegin(); it != path.steps.rend(); ++it) {
        out.steps.push_back(*it == UnitStep::Right ? UnitStep::Up : UnitStep::Right);
    }
    return out;
}

RisePath dyck_encode(const RisePath& path) {
    require_origin(path, "dyck_encode");
    RisePath out;
    long height = 0;
    int ups = 0;
    for (std::size_t i = 0; i < path.rises.size(); ++i) {
        const int r = path.rises[i];
        if (r == 1) {
            if (++ups == 4) {
                reject("dyck_encode: four consecutive up steps", i);
            }
        } else if (r == -1) {
            if (height == 0) {
                reject("dyck_encode: path goes below the x-axis", i);
            }
            out.rises.push_back(ups - 1);
            ups = 0;
        } else {
            reject("dyck_encode: rise " + std::to_string(r) + " is not +-1", i);
        }
        height += r;
    }
    if (ups != 0) {
        reject("dyck_encode: path does not end with a down step", path.rises.size() - 1);
    }
    return out;
}

RisePath dyck_decode(const RisePath& path) {
    require_origin(path, "dyck_decode");
    RisePath out;
    long height = 0;
    for (std::size_t i = 0; i < path.rises.size(); ++i) {
        const int r = path.rises[i];
        if (r < -1 || r > 2) {
            reject("dyck_decode: rise " + std::to_string(r) + " is not in {-1,0,1,2}", i);
        }
        height += r;
        if (height < 0) {
            reject("dyck_decode: path goes below the x-axis", i);
        }
        out.rises.insert(out.rises.end(), static_cast<std::size_t>(r + 1), 1);
        out.rises.push_back(-1);
    }
    return out;
}

}  // namespace latpath::bij
