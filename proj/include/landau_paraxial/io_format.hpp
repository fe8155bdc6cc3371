#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <filesystem>
#include <string>

#include "landau_paraxial/errors.hpp"

namespace landau_paraxial {

inline constexpr const char* version_string = "0.1.0";

/// First line of every data file; golden comparisons skip it.
inline std::string generated_by_line()
{
    return std::string("# generated-by landau-paraxial v") + version_string;
}

/// Scientific notation with 17 significant digits. Non-finite values print as inf/-inf/nan.
inline std::string format_sci(double x)
{
    if (std::isnan(x)) {
        return "nan";
    }
    if (std::isinf(x)) {
        return x > 0 ? "inf" : "-inf";
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", x);
    return buf;
}

inline void write_text_file(const std::filesystem::path& path, const std::string& content)
{
    if (path.has_parent_path()) {
        std::filesystem::create_directories(path.parent_path());
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw UsageError("cannot open '" + path.string() + "' for writing");
    }
    out << content;
    if (!out) {
        throw UsageError("failed writing '" + path.string() + "'");
    }
}

inline std::string read_text_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw UsageError("cannot open '" + path.string() + "' for reading");
    }
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

} // namespace landau_paraxial
