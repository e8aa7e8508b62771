#include "upper_envelope/io/csv.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <string_view>

#include "upper_envelope/io/format.hpp"

namespace uenv::io {

std::vector<Point2> read_points(std::istream& in) {
    std::vector<Point2> points;
    std::string line;
    std::size_t number = 0;
    bool first_row = true;
    while (std::getline(in, line)) {
        ++number;
        std::string_view view(line);
        const auto start = view.find_first_not_of(" \t\r");
        if (start == std::string_view::npos || view[start] == '#') continue;

        const auto comma = view.find(',');
        double x = 0.0;
        double y = 0.0;
        const bool ok = comma != std::string_view::npos &&
                        view.find(',', comma + 1) == std::string_view::npos &&
                        parse_real(view.substr(0, comma), x) &&
                        parse_real(view.substr(comma + 1), y);
        if (!ok) {
            if (first_row) {
                first_row = false;
                continue;
            }
            throw CsvError(number, "expected a row of the form <x>,<y>");
        }
        first_row = false;
        if (!std::isfinite(x) || !std::isfinite(y)) {
            throw CsvError(number, "coordinates must be finite");
        }
        points.push_back(Point2{x, y});
    }
    return points;
}

std::vector<Point2> read_points_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    return read_points(in);
}

}  // namespace uenv::io
