#pragma once

#include "qht/algebra.hpp"
#include "qht/json_io.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace qht {

enum class RingVariant { laurent, novikov, homology };

struct CatalogOptions {
    /// Requested cyclotomic order; entries needing more roots of unity raise it to the lcm.
    int m = kDefaultCyclotomicOrder;
    /// Overrides the built-in ring data when set.
    std::optional<std::filesystem::path> directory;
};

/// Base entry names, sorted.
std::vector<std::string> catalog_bases(const CatalogOptions& options = {});
Json catalog_document(const std::string& base, const CatalogOptions& options = {});

/// Builds and validates the algebra described by a ring-spec document.
QuantumAlgebra algebra_from_json(const Json& doc, int m, RingVariant variant = RingVariant::laurent);
/// Ring-spec document for an algebra; scalars use the object encoding.
Json algebra_to_json(const QuantumAlgebra& a);

/// Resolves "cp2", "cp2_novikov", "quadric2_homology", "cp1xcp1", or a path to a ring-spec file.
QuantumAlgebra load_ring(const std::string& ref, const CatalogOptions& options = {});

/// Cyclotomic order actually used for `ref` under `options`.
int effective_order(const std::string& ref, const CatalogOptions& options = {});

}  // namespace qht
