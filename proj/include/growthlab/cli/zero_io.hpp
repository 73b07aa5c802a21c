#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "growthlab/points.hpp"

namespace growthlab::cli {

/// CSV with header `re,im,multiplicity`, one point per row.
points::PointDistribution read_zeros_csv(std::istream& in, double merge_radius = 0.0);
void write_zeros_csv(std::ostream& out, const points::PointDistribution& z);

/// JSON array of {"re": x, "im": y, "mult": m}; mult defaults to 1.
points::PointDistribution read_zeros_json(std::istream& in, double merge_radius = 0.0);
void write_zeros_json(std::ostream& out, const points::PointDistribution& z);

/// Dispatches on the extension (.json, anything else is CSV).
points::PointDistribution read_zeros_file(const std::filesystem::path& path, double merge_radius = 0.0);

}  // namespace growthlab::cli
