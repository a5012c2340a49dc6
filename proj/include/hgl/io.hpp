#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgl/series.hpp"
#include "json.hpp"

namespace hgl {

/// Malformed input; the message names the file position.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// {"d", "max_degree", "entries": [{"alpha", "re", "im"}], "truncation"}.
nlohmann::json series_to_json(const HermiteSeries& series);

/// Inverse of series_to_json; "truncation" is optional. Throws InputError
/// naming the offending entry.
HermiteSeries series_from_json(const nlohmann::json& j);

HermiteSeries read_series_file(const std::string& path);

struct Samples {
  std::vector<double> x;
  std::vector<std::complex<double>> fx;
};

/// Two columns x, f(x), comma separated, optional header line, blank lines
/// and '#' comments skipped. Throws InputError naming the row.
Samples parse_samples_csv(const std::string& text);
Samples read_samples_file(const std::string& path);

/// Whole file as a string; throws InputError if it cannot be read.
std::string read_text_file(const std::string& path);

/// Writes to a temporary sibling and renames it over path.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace hgl
