#pragma once

// Materialized sequence prefixes and a type-erased sequence abstraction for
// derived sequences (projections and the like) that the DSL cannot express.

#include <functional>
#include <memory>
#include <vector>

#include "roughstat/core.hpp"
#include "roughstat/seqdsl.hpp"

namespace roughstat {

// Values x_1 .. x_n in column-major layout: cols[d][k-1].
struct SequenceTable {
    int dim = 0;
    index_t n = 0;
    std::vector<std::vector<double>> cols;

    Point at(index_t k) const {
        Point p;
        p.coords.reserve(static_cast<std::size_t>(dim));
        for (int d = 0; d < dim; ++d)
            p.coords.push_back(cols[static_cast<std::size_t>(d)][static_cast<std::size_t>(k - 1)]);
        return p;
    }
};

// Pure k -> Point function with a fixed dimension.
class Sequence {
public:
    Sequence(int dim, std::function<Point(index_t)> fn)
        : dim_(dim), fn_(std::move(fn)) {}

    static Sequence from_spec(dsl::SequenceSpec spec);

    Point at(index_t k) const { return fn_(k); }
    int dim() const { return dim_; }

private:
    int dim_;
    std::function<Point(index_t)> fn_;
};

SequenceTable materialize(const dsl::SequenceSpec& spec, index_t n);
SequenceTable materialize(const Sequence& seq, index_t n);

} // namespace roughstat
