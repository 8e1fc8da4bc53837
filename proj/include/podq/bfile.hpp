#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <vector>

#include "podq/series.hpp"

namespace podq {

/// An OEIS b-file: ASCII lines "index value", '#' comments and blank lines
/// ignored. Values are arbitrary precision.
struct BFileEntry {
    long long index = 0;
    Integer value;
    std::size_t line = 0;
};

struct BFile {
    std::vector<BFileEntry> entries;
};

/// Throws ParseError carrying the 1-based line number of the first bad line.
BFile parse_bfile(std::istream& in);
BFile load_bfile(const std::filesystem::path& path);

}  // namespace podq
