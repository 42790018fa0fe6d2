#pragma once

#include <optional>
#include <string>

#include "imager/forward.hpp"
#include "imager/imaging.hpp"

namespace imager {

/// Extra fields carried into the image sidecar.
struct MapSidecarInfo {
    std::optional<double> threshold;
    std::optional<std::uint64_t> seed;
};

/// Writes <base>.csv with rows "j,l,re,im" and <base>.json with the matrix
/// metadata (dimension, omega, noise seed and SNR when present).
void write_msr(const MSRMatrix& msr, const std::string& base_path,
               const NoiseSpec* noise = nullptr);

/// Reads the pair written by write_msr.
MSRMatrix read_msr(const std::string& base_path);

/// Writes <base>.csv (row-major, y rows outer), <base>.pgm (16-bit, rows top
/// to bottom in descending y), <base>.png (16-bit grayscale), and
/// <base>.json describing the grid, functional and pixel scale.
void write_image_map(const ImageMap& map, const std::string& base_path,
                     const MapSidecarInfo& info = {}, bool with_png = true);

/// Reads back the CSV/JSON pair (values and grid only).
ImageMap read_image_map(const std::string& base_path);

/// Shortest decimal form that round-trips a double exactly.
std::string format_double(double v);

}  // namespace imager
