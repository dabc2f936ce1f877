#pragma once

/// Source catalog file format: one [source] section per emitter with
/// `key = value` lines, `#` comments.  Keys: name, omega_rad_per_s,
/// amplitude or flux_w_per_m2 (exactly one), amplitude_min, amplitude_max
/// (optional), spindown_years, los_velocity_mps.  Unknown keys are
/// rejected.

#include "rydgrav/detector.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace rydgrav::detector {

struct CatalogError : std::runtime_error {
    long line;
    CatalogError(long line_, const std::string& what)
        : std::runtime_error("catalog line " + std::to_string(line_) + ": " + what), line(line_)
    {
    }
};

std::vector<GwSource> load_catalog(std::istream& in);
std::vector<GwSource> load_catalog_file(const std::string& path);

/// Finds a source by name; throws std::out_of_range listing known names.
const GwSource& find_source(const std::vector<GwSource>& catalog, const std::string& name);

} // namespace rydgrav::detector
