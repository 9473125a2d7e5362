#include "roughstat/core.hpp"

#include <algorithm>
#include <cmath>

namespace roughstat {

bool is_valid_point(const Point& p) {
    if (p.coords.empty()) return false;
    return std::all_of(p.coords.begin(), p.coords.end(),
                       [](double c) { return std::isfinite(c); });
}

std::string to_string(NormKind kind) {
    switch (kind) {
        case NormKind::L1: return "l1";
        case NormKind::L2: return "l2";
        case NormKind::LInf: return "linf";
    }
    return "l2";
}

NormKind norm_kind_from_string(const std::string& name) {
    if (name == "l1" || name == "L1") return NormKind::L1;
    if (name == "l2" || name == "L2") return NormKind::L2;
    if (name == "linf" || name == "LINF" || name == "Linf") return NormKind::LInf;
    throw InvalidInput("unknown norm: " + name + " (expected l1, l2 or linf)");
}

double norm(const Point& p, NormKind kind) {
    if (p.coords.empty()) throw InvalidInput("norm: zero-dimensional point");
    double acc = 0.0;
    switch (kind) {
        case NormKind::L1:
            for (double c : p.coords) acc += std::abs(c);
            return acc;
        case NormKind::L2:
            for (double c : p.coords) acc += c * c;
            return std::sqrt(acc);
        case NormKind::LInf:
            for (double c : p.coords) acc = std::max(acc, std::abs(c));
            return acc;
    }
    return 0.0;
}

double distance(const Point& a, const Point& b, NormKind kind) {
    if (a.dim() != b.dim())
        throw InvalidInput("distance: dimension mismatch (" + std::to_string(a.dim()) +
                           " vs " + std::to_string(b.dim()) + ")");
    Point diff;
    diff.coords.reserve(a.coords.size());
    for (std::size_t i = 0; i < a.coords.size(); ++i)
        diff.coords.push_back(a.coords[i] - b.coords[i]);
    return norm(diff, kind);
}

void Checkpoints::validate() const {
    if (values.empty()) throw InvalidInput("checkpoints: empty schedule");
    if (values.front() < 1) throw InvalidInput("checkpoints: values must be positive");
    for (std::size_t j = 1; j < values.size(); ++j)
        if (values[j] <= values[j - 1])
            throw InvalidInput("checkpoints: schedule must be strictly increasing");
}

Checkpoints default_checkpoints(index_t n) {
    if (n < 1000)
        throw InvalidInput("default_checkpoints: horizon must be >= 1000, got " +
                           std::to_string(n));
    Checkpoints cps;
    for (index_t v = 1000; v < n; v *= 2) cps.values.push_back(v);
    cps.values.push_back(n);
    return cps;
}

void RoughParams::validate() const {
    if (!(r >= 0.0) || !std::isfinite(r))
        throw InvalidInput("params: roughness radius r must be >= 0");
    if (!(alpha > 0.0) || !(alpha <= 1.0))
        throw InvalidInput("params: density order alpha must be in (0, 1]");
    if (eps_ladder.empty()) throw InvalidInput("params: eps ladder must be nonempty");
    for (std::size_t i = 0; i < eps_ladder.size(); ++i) {
        if (!(eps_ladder[i] > 0.0))
            throw InvalidInput("params: eps ladder values must be positive");
        if (i > 0 && !(eps_ladder[i] < eps_ladder[i - 1]))
            throw InvalidInput("params: eps ladder must be strictly decreasing");
    }
}

} // namespace roughstat
