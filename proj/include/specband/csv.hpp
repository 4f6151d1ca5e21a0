#pragma once

#include <filesystem>
#include <span>
#include <string>

#include "specband/pseudospec.hpp"
#include "specband/spectrum_set.hpp"

namespace specband {

// 17 significant digits, '.' separator: doubles round-trip losslessly.
std::string format_double(double x);

// re,im,source
void write_spectrum_csv(const std::filesystem::path& path, const SpectrumSet& s);

// z_re,z_im,sigma_min plus a JSON side file with rectangle, step and
// the epsilon list.
void write_pseudospec_csv(const std::filesystem::path& csv_path,
                          const std::filesystem::path& header_path, const PseudospecGrid& g);

// z_re,z_im,sigma_min for scattered containment probes.
void write_containment_csv(const std::filesystem::path& path, std::span<const Complex> zs,
                           std::span<const double> sigmas);

}  // namespace specband
