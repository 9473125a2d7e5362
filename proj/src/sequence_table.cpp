#include "roughstat/sequence_table.hpp"

namespace roughstat {

Sequence Sequence::from_spec(dsl::SequenceSpec spec) {
    int dim = spec.dim();
    auto shared = std::make_shared<dsl::SequenceSpec>(std::move(spec));
    return Sequence(dim, [shared](index_t k) { return dsl::eval_sequence(*shared, k); });
}

SequenceTable materialize(const dsl::SequenceSpec& spec, index_t n) {
    if (n < 1) throw InvalidInput("materialize: horizon must be >= 1");
    SequenceTable table;
    table.dim = spec.dim();
    table.n = n;
    table.cols.assign(static_cast<std::size_t>(table.dim),
                      std::vector<double>(static_cast<std::size_t>(n)));
    for (index_t k = 1; k <= n; ++k) {
        Point p = dsl::eval_sequence(spec, k);
        for (int d = 0; d < table.dim; ++d)
            table.cols[static_cast<std::size_t>(d)][static_cast<std::size_t>(k - 1)] = p[d];
    }
    return table;
}

SequenceTable materialize(const Sequence& seq, index_t n) {
    if (n < 1) throw InvalidInput("materialize: horizon must be >= 1");
    SequenceTable table;
    table.dim = seq.dim();
    table.n = n;
    table.cols.assign(static_cast<std::size_t>(table.dim),
                      std::vector<double>(static_cast<std::size_t>(n)));
    for (index_t k = 1; k <= n; ++k) {
        Point p = seq.at(k);
        if (p.dim() != table.dim)
            throw InvalidInput("materialize: sequence dimension changed mid-stream");
        for (int d = 0; d < table.dim; ++d)
            table.cols[static_cast<std::size_t>(d)][static_cast<std::size_t>(k - 1)] = p[d];
    }
    return table;
}

} // namespace roughstat
