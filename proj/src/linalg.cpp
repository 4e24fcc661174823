#include "qht/linalg.hpp"

namespace qht {

IncrementalEchelon::IncrementalEchelon(std::size_t length, Direction dir, int m) : length_(length), dir_(dir), m_(m) {}

std::optional<FractionVector> IncrementalEchelon::insert(const FractionVector& v) {
    const std::size_t index = inserted_++;
    FractionVector value = v;
    FractionVector combination(inserted_, Fraction(dir_, m_));
    combination[index] = Fraction::one(dir_, m_);
    for (Row& row : rows_) row.combination.resize(inserted_, Fraction(dir_, m_));

    for (const Row& row : rows_) {
        if (value[row.pivot].is_zero()) continue;
        Fraction f = value[row.pivot];
        for (std::size_t k = 0; k < length_; ++k) {
            if (!row.value[k].is_zero()) value[k] -= f * row.value[k];
        }
        for (std::size_t k = 0; k < inserted_; ++k) {
            if (!row.combination[k].is_zero()) combination[k] -= f * row.combination[k];
        }
    }
    std::size_t pivot = 0;
    while (pivot < length_ && value[pivot].is_zero()) ++pivot;
    if (pivot == length_) {
        // 0 = v - sum(...)  =>  v = -(combination without the v entry).
        FractionVector out(index, Fraction(dir_, m_));
        for (std::size_t k = 0; k < index; ++k) out[k] = -combination[k];
        --inserted_;
        for (Row& row : rows_) row.combination.resize(inserted_, Fraction(dir_, m_));
        return out;
    }
    Fraction inv = value[pivot].inverse();
    for (auto& x : value) x *= inv;
    for (auto& x : combination) x *= inv;
    rows_.push_back({std::move(value), std::move(combination), pivot});
    return std::nullopt;
}

std::size_t rank(const std::vector<FractionVector>& vectors, Direction dir, int m) {
    if (vectors.empty()) return 0;
    IncrementalEchelon echelon(vectors.front().size(), dir, m);
    for (const auto& v : vectors) echelon.insert(v);
    return echelon.rank();
}

}  // namespace qht
