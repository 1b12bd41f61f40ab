#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "cmpoly/liegroup/presentation.hpp"

namespace cmpoly::lie {

struct CatalogEntry {
  std::string name;
  std::string signature;    ///< e.g. "heisenberg_scaled(dim, c)"
  std::string description;
  bool locally_symmetric;   ///< nabla R = 0 for every parameter value
};

std::vector<CatalogEntry> catalog_entries();

/// Builds a catalog presentation. Parameters by entry:
///   flat_n, torus_n         n      (dimension, >= 1)
///   su2_biinvariant         -
///   su2_berger              t      (> 0; metric scaled by t^2 along e3)
///   heisenberg              dim    (odd, >= 3)
///   heisenberg_scaled       dim, c (metric multiplied by 1/c^2)
/// Throws UsageError for unknown names or invalid parameters.
LiePresentation catalog(std::string_view name, const std::map<std::string, Rational>& params = {});

/// Parses forms like "heisenberg3", "heisenberg(5)", "flat_3",
/// "su2_berger(1/2)" or "heisenberg_scaled(3,2)" and builds the entry.
LiePresentation catalog_from_spec(std::string_view spec);

}  // namespace cmpoly::lie
