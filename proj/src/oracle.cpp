#include "upper_envelope/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "upper_envelope/errors.hpp"

namespace uenv::oracle {

namespace {

double upper_arc(const UnitCircle& c, double x) {
    const double dx = x - c.center.x;
    return c.center.y + std::sqrt(1.0 - dx * dx);
}

}  // namespace

std::optional<double> brute_force_evaluate(std::span<const UnitCircle> circles, double x) {
    std::optional<double> best;
    for (const UnitCircle& c : circles) {
        if (std::abs(x - c.center.x) > 1.0) continue;
        const double y = upper_arc(c, x);
        if (!best || y > *best) best = y;
    }
    return best;
}

std::optional<ScanOutcome> scan_transition_detailed(const UnitCircle& cj, const UnitCircle& ci,
                                                    double resolution) {
    if (!(resolution > 0.0)) throw std::invalid_argument("resolution must be positive");
    if (!(cj.center.x < ci.center.x)) throw std::invalid_argument("scan requires x_j < x_i");

    const double lo = ci.center.x - 1.0;
    const double hi = cj.center.x + 1.0;
    if (!(lo < hi)) return std::nullopt;

    constexpr double kTie = 1e-12;
    enum class Owner { Left, Right };

    Owner owner = Owner::Left;
    double previous_x = lo;
    ScanOutcome out;
    out.position = hi;
    bool crossed = false;

    auto visit = [&](double x, Owner next) {
        if (next != owner) {
            ++out.switches;
            if (out.switches > 1) {
                throw MultipleSwitches("upper arcs exchange ownership more than once");
            }
            out.position = crossed ? 0.5 * (previous_x + x) : lo;
            owner = next;
        }
        previous_x = x;
        crossed = true;
    };

    const auto steps = static_cast<long long>(std::ceil((hi - lo) / resolution));
    for (long long k = 0; k <= steps; ++k) {
        const double x = k == steps ? hi : std::min(hi, lo + static_cast<double>(k) * resolution);
        // Clamp the arc argument: lo/hi are exact domain ends for one circle.
        const double dj = std::min(1.0, std::abs(x - cj.center.x));
        const double di = std::min(1.0, std::abs(x - ci.center.x));
        const double yj = cj.center.y + std::sqrt(1.0 - dj * dj);
        const double yi = ci.center.y + std::sqrt(1.0 - di * di);
        if (yj > yi + kTie) {
            visit(x, Owner::Left);
        } else if (yi > yj + kTie) {
            visit(x, Owner::Right);
        } else {
            visit(x, owner);
        }
    }
    // Beyond hi only ci remains.
    if (owner == Owner::Left) {
        ++out.switches;
        out.position = hi;
    }
    return out;
}

std::optional<double> scan_transition(const UnitCircle& cj, const UnitCircle& ci,
                                      double resolution) {
    if (auto r = scan_transition_detailed(cj, ci, resolution)) return r->position;
    return std::nullopt;
}

}  // namespace uenv::oracle
