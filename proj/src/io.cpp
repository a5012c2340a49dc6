#include "hgl/io.hpp"

#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace hgl {

namespace {

bool parse_double(std::string_view token, double& out) {
  while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.remove_prefix(1);
  while (!token.empty() && (token.back() == ' ' || token.back() == '\t' || token.back() == '\r')) token.remove_suffix(1);
  if (token.empty()) return false;
  if (token.front() == '+') token.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size() && std::isfinite(out);
}

}  // namespace

nlohmann::json series_to_json(const HermiteSeries& series) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& [alpha, c] : series.coefficients()) {
    entries.push_back({{"alpha", alpha.entries()}, {"re", c.real()}, {"im", c.imag()}});
  }
  return {{"d", series.dimension()},
          {"max_degree", series.max_degree()},
          {"truncation", {{"method", series.tag().method}, {"quadrature_order", series.tag().quadrature_order}}},
          {"entries", entries}};
}

HermiteSeries series_from_json(const nlohmann::json& j) {
  try {
    if (!j.is_object()) throw InputError("coefficient file: top level must be an object");
    const int d = j.at("d").get<int>();
    const int m = j.at("max_degree").get<int>();
    if (d < 1) throw InputError("coefficient file: d must be >= 1");
    if (m < 0) throw InputError("coefficient file: max_degree must be >= 0");
    TruncationTag tag{"file", 0};
    if (j.contains("truncation")) {
      tag.method = j["truncation"].value("method", std::string("file"));
      tag.quadrature_order = j["truncation"].value("quadrature_order", 0);
    }
    HermiteSeries s(d, m, tag);
    const auto& entries = j.at("entries");
    if (!entries.is_array()) throw InputError("coefficient file: entries must be an array");
    for (std::size_t i = 0; i < entries.size(); ++i) {
      const auto& e = entries[i];
      try {
        const auto alpha = e.at("alpha").get<std::vector<int>>();
        for (int a : alpha) {
          if (a < 0) throw InputError("negative alpha entry");
        }
        const double re = e.at("re").get<double>();
        const double im = e.value("im", 0.0);
        s.set(MultiIndex(alpha), {re, im});
      } catch (const std::exception& ex) {
        throw InputError("coefficient file: entry " + std::to_string(i) + ": " + ex.what());
      }
    }
    return s;
  } catch (const nlohmann::json::exception& ex) {
    throw InputError(std::string("coefficient file: ") + ex.what());
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

HermiteSeries read_series_file(const std::string& path) {
  const auto text = read_text_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw InputError("'" + path + "': " + ex.what());
  }
  return series_from_json(j);
}

Samples parse_samples_csv(const std::string& text) {
  Samples out;
  std::istringstream in(text);
  std::string line;
  int row = 0;
  bool seen_data = false;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.find_first_not_of(" \t") == std::string::npos || line[line.find_first_not_of(" \t")] == '#') continue;
    const auto comma = line.find(',');
    double x = 0, y = 0;
    const bool two_fields = comma != std::string::npos && line.find(',', comma + 1) == std::string::npos;
    const bool ok = two_fields && parse_double(std::string_view(line).substr(0, comma), x) &&
                    parse_double(std::string_view(line).substr(comma + 1), y);
    if (!ok) {
      if (!seen_data && two_fields && out.x.empty()) {
        seen_data = true;  // header
        continue;
      }
      throw InputError("samples: row " + std::to_string(row) + ": expected two numeric columns x,f(x), got '" + line +
                       "'");
    }
    seen_data = true;
    if (!out.x.empty() && !(x > out.x.back())) {
      throw InputError("samples: row " + std::to_string(row) + ": x values must be strictly increasing");
    }
    out.x.push_back(x);
    out.fx.emplace_back(y, 0.0);
  }
  if (out.x.size() < 4) throw InputError("samples: need at least 4 data rows");
  return out;
}

Samples read_samples_file(const std::string& path) { return parse_samples_csv(read_text_file(path)); }

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw InputError("write failed for '" + tmp.string() + "'");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, target, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw InputError("cannot rename onto '" + path + "': " + ec.message());
  }
}

}  // namespace hgl
