#pragma once

// Shared domain types: points in R^d, norms, checkpoint schedules and the
// (r, alpha, eps-ladder) parameter bundle. Everything here is an immutable
// value type.

#include <cstdint>
#include <string>
#include <vector>

#include "roughstat/errors.hpp"

namespace roughstat {

using index_t = std::int64_t;

struct Point {
    std::vector<double> coords;

    Point() = default;
    explicit Point(std::vector<double> c) : coords(std::move(c)) {}
    Point(std::initializer_list<double> c) : coords(c) {}

    int dim() const { return static_cast<int>(coords.size()); }
    double operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }

    bool operator==(const Point& other) const = default;
};

// All coords finite and dim >= 1.
bool is_valid_point(const Point& p);

enum class NormKind { L1, L2, LInf };

// L2 is the only strictly convex norm offered here.
inline bool strictly_convex(NormKind kind) { return kind == NormKind::L2; }

std::string to_string(NormKind kind);
NormKind norm_kind_from_string(const std::string& name);

double norm(const Point& p, NormKind kind);
double distance(const Point& a, const Point& b, NormKind kind);

// Finite truncation schedule for the n -> infinity limits: strictly
// increasing positive integers ending at the horizon N.
struct Checkpoints {
    std::vector<index_t> values;

    index_t horizon() const { return values.empty() ? 0 : values.back(); }
    std::size_t size() const { return values.size(); }

    void validate() const;
};

// Geometric schedule n_j = min(1000 * 2^j, N), deduplicated, ending at N.
// Polynomial-decay count ratios then appear as straight lines in log-log
// space, which is what the slope-based limit decision needs.
Checkpoints default_checkpoints(index_t n);

struct RoughParams {
    double r = 0.0;
    double alpha = 1.0;
    std::vector<double> eps_ladder{0.5, 0.1, 0.02};

    double eps_min() const { return eps_ladder.back(); }
    void validate() const;
};

} // namespace roughstat
