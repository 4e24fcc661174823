#pragma once

#include "qht/rational.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace qht {

/// Partial flag manifold F(n_1, ..., n_r; n).
struct FlagSpec {
    int n = 0;
    std::vector<int> steps;

    /// Block sizes k_1, ..., k_{r+1}, the last being n - n_r.
    std::vector<int> blocks() const;
    std::string to_string() const;
};

/// Throws BadFlagSpec unless 0 < n_1 < ... < n_r < n.
void validate(const FlagSpec& f);

/// Parses "gr24" / "gr(2,4)", "cp3", "fl3", or "n:steps" such as "3:1,2".
FlagSpec parse_flag(const std::string& text);

int flag_dim(const FlagSpec& f);

/// Block values n - n_{i-1} - n_i repeated k_i times, plus m. Defaults to m = n_r.
std::vector<Rational> monotone_lambda(const FlagSpec& f, std::optional<Rational> m = std::nullopt);

struct PatternEntry {
    int row = 0;  // k
    int col = 0;  // i, 1 <= i <= k
    Rational lower;
    Rational upper;
    /// Position in the coordinate vector, or nullopt for constants.
    std::optional<std::size_t> coordinate;

    bool is_constant() const noexcept { return !coordinate.has_value(); }
    std::string name() const;
};

struct GCPattern {
    FlagSpec flag;
    std::vector<Rational> lambda;
    /// Rows k = 1 .. n-1, left to right.
    std::vector<PatternEntry> entries;
    /// Entry positions of the variables, in coordinate order.
    std::vector<std::size_t> index_set;

    const PatternEntry& at(int row, int col) const;
};

/// Resolves constants by propagating interlacing intervals down from lambda.
GCPattern gc_pattern(const FlagSpec& f, const std::vector<Rational>& lambda);

/// coeffs . x >= rhs.
struct Inequality {
    std::vector<Rational> coeffs;
    Rational rhs;

    friend bool operator==(const Inequality&, const Inequality&) = default;
};

struct GCPolytope {
    std::vector<std::string> coords;
    std::vector<Inequality> inequalities;

    std::size_t dim() const noexcept { return coords.size(); }
};

/// Interlacing inequalities touching at least one variable, constants moved to the right.
GCPolytope gc_polytope(const GCPattern& p);

/// Cartesian product; coordinates of `a` come first.
GCPolytope polytope_product(const GCPolytope& a, const GCPolytope& b);

enum class PointClass { Interior, Boundary, Outside };

std::string_view to_string(PointClass c) noexcept;

struct Classification {
    PointClass kind = PointClass::Outside;
    /// Tight inequality indices (Boundary) or violated ones (Outside).
    std::vector<std::size_t> inequalities;
};

Classification classify_point(const GCPolytope& d, const std::vector<Rational>& u);

using Vertex = std::vector<Rational>;

/// Brute force over square subsystems of tight inequalities; sorted.
std::vector<Vertex> vertices_by_subsets(const GCPolytope& d);
/// Successive clipping of a bounding box; sorted.
std::vector<Vertex> vertices_by_clipping(const GCPolytope& d);
/// Runs both methods concurrently; throws MethodDisagreement if they differ.
std::vector<Vertex> vertices(const GCPolytope& d);

}  // namespace qht
