#include "imager/io.hpp"

#include <zlib.h>

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <json.hpp>

namespace imager {

namespace {

using nlohmann::json;

std::ofstream open_out(const std::string& path, std::ios::openmode mode = std::ios::out) {
    std::ofstream out(path, mode);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    return out;
}

std::ifstream open_in(const std::string& path, std::ios::openmode mode = std::ios::in) {
    std::ifstream in(path, mode);
    if (!in) throw std::runtime_error("cannot open for reading: " + path);
    return in;
}

void finish(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + path);
}

void append_be32(std::string& s, std::uint32_t v) {
    s.push_back(static_cast<char>((v >> 24) & 0xff));
    s.push_back(static_cast<char>((v >> 16) & 0xff));
    s.push_back(static_cast<char>((v >> 8) & 0xff));
    s.push_back(static_cast<char>(v & 0xff));
}

void write_png_chunk(std::ofstream& out, const char type[4], const std::string& data) {
    std::string buf;
    append_be32(buf, static_cast<std::uint32_t>(data.size()));
    buf.append(type, 4);
    buf += data;
    const auto crc = crc32(crc32(0L, nullptr, 0),
                           reinterpret_cast<const Bytef*>(buf.data() + 4), buf.size() - 4);
    append_be32(buf, static_cast<std::uint32_t>(crc));
    out.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

}  // namespace

std::string format_double(double v) {
    char buf[40];
    for (int prec = 1; prec <= 17; ++prec) {
        std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
        double back = 0.0;
        std::sscanf(buf, "%lf", &back);
        if (back == v) return buf;
    }
    return buf;
}

void write_msr(const MSRMatrix& msr, const std::string& base_path, const NoiseSpec* noise) {
    {
        auto out = open_out(base_path + ".csv");
        out << "j,l,re,im\n";
        for (Eigen::Index j = 0; j < msr.entries.rows(); ++j)
            for (Eigen::Index l = 0; l < msr.entries.cols(); ++l)
                out << j << ',' << l << ',' << format_double(msr.entries(j, l).real()) << ','
                    << format_double(msr.entries(j, l).imag()) << '\n';
        finish(out, base_path + ".csv");
    }
    json meta;
    meta["n"] = msr.entries.rows();
    meta["omega"] = msr.omega;
    if (noise != nullptr && noise->enabled()) {
        meta["snr_db"] = noise->snr_db;
        meta["seed"] = noise->seed;
    } else {
        meta["snr_db"] = nullptr;
        meta["seed"] = nullptr;
    }
    auto out = open_out(base_path + ".json");
    out << meta.dump(2) << '\n';
    finish(out, base_path + ".json");
}

MSRMatrix read_msr(const std::string& base_path) {
    json meta = json::parse(open_in(base_path + ".json"));
    const int n = meta.at("n").get<int>();
    MSRMatrix msr;
    msr.omega = meta.at("omega").get<double>();
    msr.directions = make_directions(n);
    msr.entries = Eigen::MatrixXcd::Zero(n, n);

    auto in = open_in(base_path + ".csv");
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line.rfind("j,", 0) == 0) continue;
        int j = 0, l = 0;
        double re = 0.0, im = 0.0;
        if (std::sscanf(line.c_str(), "%d,%d,%lf,%lf", &j, &l, &re, &im) != 4)
            throw std::runtime_error("malformed MSR row: " + line);
        if (j < 0 || j >= n || l < 0 || l >= n)
            throw std::runtime_error("MSR row index out of range: " + line);
        msr.entries(j, l) = Complex(re, im);
    }
    return msr;
}

void write_image_map(const ImageMap& map, const std::string& base_path,
                     const MapSidecarInfo& info, bool with_png) {
    const ImagingGrid& g = map.grid;
    {
        auto out = open_out(base_path + ".csv");
        for (int iy = 0; iy < g.ny; ++iy) {
            for (int ix = 0; ix < g.nx; ++ix) {
                if (ix) out << ',';
                out << format_double(map.values(iy, ix));
            }
            out << '\n';
        }
        finish(out, base_path + ".csv");
    }

    // Pixel quantization shared by PGM and PNG: full range maps to the map's
    // own maximum (scale recorded in the sidecar). Rows run top to bottom in
    // descending y, the usual image convention.
    const double scale = map.max_value() > 0.0 ? map.max_value() : 1.0;
    std::vector<std::uint16_t> pixels(static_cast<std::size_t>(g.nx) * g.ny);
    for (int row = 0; row < g.ny; ++row) {
        const int iy = g.ny - 1 - row;
        for (int ix = 0; ix < g.nx; ++ix) {
            const double v = std::clamp(map.values(iy, ix) / scale, 0.0, 1.0);
            pixels[static_cast<std::size_t>(row) * g.nx + ix] =
                static_cast<std::uint16_t>(std::lround(v * 65535.0));
        }
    }

    {
        auto out = open_out(base_path + ".pgm", std::ios::binary);
        out << "P5\n" << g.nx << ' ' << g.ny << "\n65535\n";
        for (const std::uint16_t p : pixels) {
            const char bytes[2] = {static_cast<char>(p >> 8), static_cast<char>(p & 0xff)};
            out.write(bytes, 2);
        }
        finish(out, base_path + ".pgm");
    }

    if (with_png) {
        std::string raw;
        raw.reserve(static_cast<std::size_t>(g.ny) * (1 + 2 * g.nx));
        for (int row = 0; row < g.ny; ++row) {
            raw.push_back('\0');  // filter type 0 per scanline
            for (int ix = 0; ix < g.nx; ++ix) {
                const std::uint16_t p = pixels[static_cast<std::size_t>(row) * g.nx + ix];
                raw.push_back(static_cast<char>(p >> 8));
                raw.push_back(static_cast<char>(p & 0xff));
            }
        }
        uLongf bound = compressBound(static_cast<uLong>(raw.size()));
        std::string compressed(bound, '\0');
        if (compress2(reinterpret_cast<Bytef*>(compressed.data()), &bound,
                      reinterpret_cast<const Bytef*>(raw.data()),
                      static_cast<uLong>(raw.size()), 9) != Z_OK)
            throw std::runtime_error("png compression failed");
        compressed.resize(bound);

        auto out = open_out(base_path + ".png", std::ios::binary);
        const unsigned char sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
        out.write(reinterpret_cast<const char*>(sig), 8);
        std::string ihdr;
        append_be32(ihdr, static_cast<std::uint32_t>(g.nx));
        append_be32(ihdr, static_cast<std::uint32_t>(g.ny));
        ihdr.push_back(16);  // bit depth
        ihdr.push_back(0);   // grayscale
        ihdr.push_back(0);   // compression
        ihdr.push_back(0);   // filter
        ihdr.push_back(0);   // no interlace
        write_png_chunk(out, "IHDR", ihdr);
        write_png_chunk(out, "IDAT", compressed);
        write_png_chunk(out, "IEND", "");
        finish(out, base_path + ".png");
    }

    json side;
    side["grid"] = {{"x_min", g.x_min}, {"x_max", g.x_max}, {"y_min", g.y_min},
                    {"y_max", g.y_max}, {"nx", g.nx},       {"ny", g.ny}};
    side["label"] = map.label;
    side["frequencies"] = map.frequencies;
    side["pixel_scale"] = scale;
    side["pixel_row_order"] = "y_descending";
    if (info.threshold) side["threshold"] = *info.threshold;
    if (info.seed) side["seed"] = *info.seed;
    auto out = open_out(base_path + ".json");
    out << side.dump(2) << '\n';
    finish(out, base_path + ".json");
}

ImageMap read_image_map(const std::string& base_path) {
    json side = json::parse(open_in(base_path + ".json"));
    ImageMap map;
    const auto& g = side.at("grid");
    map.grid = {g.at("x_min").get<double>(), g.at("x_max").get<double>(),
                g.at("y_min").get<double>(), g.at("y_max").get<double>(),
                g.at("nx").get<int>(),       g.at("ny").get<int>()};
    map.label = side.at("label").get<std::string>();
    map.frequencies = side.at("frequencies").get<std::vector<double>>();
    map.values.resize(map.grid.ny, map.grid.nx);

    auto in = open_in(base_path + ".csv");
    std::string line;
    for (int iy = 0; iy < map.grid.ny; ++iy) {
        if (!std::getline(in, line))
            throw std::runtime_error("image CSV truncated: " + base_path);
        std::stringstream ss(line);
        std::string cell;
        for (int ix = 0; ix < map.grid.nx; ++ix) {
            if (!std::getline(ss, cell, ','))
                throw std::runtime_error("image CSV row too short: " + base_path);
            map.values(iy, ix) = std::stod(cell);
        }
    }
    return map;
}

}  // namespace imager
