#pragma once

#include "laghyp/grid.hpp"

#include <map>
#include <string>
#include <vector>

namespace laghyp {

enum class CatalogKind { gaussian, modulated_gaussian, polynomial_gaussian, shifted_bump, eigen_packet };

/// A smooth, rapidly decaying, nonzero test function. Closed-form
/// entries (the plain Gaussians at alpha = 0) have transform oracles in
/// the test suite.
struct CatalogEntry {
    std::string id;
    CatalogKind kind = CatalogKind::gaussian;
    std::map<std::string, double> params;
};

/// The default catalog: gaussian(beta, eta) for beta, eta in {1/2, 1, 2},
/// one modulated and one polynomial Gaussian, a bump centered at
/// |(x,t)| ~ 2, and an eigenfunction packet.
std::vector<CatalogEntry> default_catalog();

/// Subset selection: "all" or a comma-separated id list.
std::vector<CatalogEntry> select_catalog(const std::string& selection);

SampledFunction realize(const CatalogEntry& entry, std::shared_ptr<const SpaceGrid> grid,
                        const HypergroupContext& ctx);

} // namespace laghyp
