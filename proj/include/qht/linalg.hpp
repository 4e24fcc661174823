#pragma once

#include "qht/fraction.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace qht {

using FractionVector = std::vector<Fraction>;

/// Echelon basis grown one vector at a time. Each stored row remembers which
/// combination of the inserted vectors produced it.
class IncrementalEchelon {
public:
    IncrementalEchelon(std::size_t length, Direction dir, int m);

    /// Reduces v against the stored rows. If v is independent it is stored and nullopt is
    /// returned; otherwise returns coefficients c with v = sum_j c_j * inserted_j.
    std::optional<FractionVector> insert(const FractionVector& v);

    std::size_t rank() const noexcept { return rows_.size(); }

private:
    struct Row {
        FractionVector value;
        FractionVector combination;
        std::size_t pivot;
    };

    std::size_t length_;
    Direction dir_;
    int m_;
    std::size_t inserted_ = 0;
    std::vector<Row> rows_;
};

std::size_t rank(const std::vector<FractionVector>& vectors, Direction dir, int m);

}  // namespace qht
