#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "upper_envelope/errors.hpp"
#include "upper_envelope/geometry.hpp"

namespace uenv::io {

class CsvError : public Error {
public:
    CsvError(std::size_t line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Reads "x,y" rows. Blank lines and lines starting with '#' are skipped;
/// a first row that does not parse as numbers is taken as a header.
/// Throws CsvError naming the 1-based line.
std::vector<Point2> read_points(std::istream& in);

/// Throws std::runtime_error when the file cannot be opened.
std::vector<Point2> read_points_file(const std::filesystem::path& path);

}  // namespace uenv::io
