#include <algorithm>
#include <cstdio>
#include <sstream>

#include <boost/version.hpp>
#include <CLI11.hpp>
#include <json.hpp>

#include "qaw/cli.hpp"

namespace qaw::cli {

namespace {

using nlohmann::json;

constexpr const char* kVersion = "1.0.0";

json to_json(const Cell& c) {
  return std::visit(
      [](const auto& v) -> json {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, std::monostate>) return nullptr;
        else return v;
      },
      c);
}

// Shortest text that reads back to the same double.
std::string exact_text(double v) {
  char buf[32];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::string csv_text(const Cell& c) {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, std::monostate>) return "";
        else if constexpr (std::is_same_v<V, double>) return exact_text(v);
        else if constexpr (std::is_same_v<V, long long>) return std::to_string(v);
        else if constexpr (std::is_same_v<V, bool>) return v ? "true" : "false";
        else {
          if (v.find_first_of(",\"\n") == std::string::npos) return v;
          std::string quoted = "\"";
          for (char ch : v) {
            if (ch == '"') quoted += '"';
            quoted += ch;
          }
          return quoted + "\"";
        }
      },
      c);
}

std::string pretty_text(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", *d);
    return buf;
  }
  return csv_text(c);
}

json params_json(const ParamVector& p) {
  json out = json::array();
  for (const Complex& a : p.entries()) {
    if (a.imag() == 0.0) out.push_back(a.real());
    else out.push_back({{"re", a.real()}, {"im", a.imag()}});
  }
  return out;
}

std::string render_json(const RunConfig& cfg, const Table& t) {
  json doc;
  doc["command"] = cfg.command;
  doc["q"] = cfg.q;
  doc["params"] = params_json(cfg.params);
  json rows = json::array();
  for (const auto& r : t.rows) {
    json row = json::object();
    for (std::size_t i = 0; i < t.columns.size(); ++i) row[t.columns[i]] = to_json(r[i]);
    rows.push_back(std::move(row));
  }
  doc["rows"] = std::move(rows);
  json meta = {{"trunc", cfg.trunc},
               {"tol", cfg.tol},
               {"versions",
                {{"qaw", kVersion},
                 {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                                       std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                       std::to_string(NLOHMANN_JSON_VERSION_PATCH)},
                 {"cli11", CLI11_VERSION},
                 {"boost", BOOST_LIB_VERSION}}}};
  for (const auto& [key, value] : t.meta) meta[key] = to_json(value);
  doc["meta"] = std::move(meta);
  return doc.dump(2) + "\n";
}

std::string render_csv(const Table& t) {
  std::ostringstream os;
  for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
  os << "\n";
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_text(r[i]);
    os << "\n";
  }
  return os.str();
}

std::string render_pretty(const Table& t) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::size_t> width(t.columns.size());
  for (std::size_t i = 0; i < t.columns.size(); ++i) width[i] = t.columns[i].size();
  for (const auto& r : t.rows) {
    auto& line = cells.emplace_back();
    for (std::size_t i = 0; i < r.size(); ++i) {
      line.push_back(pretty_text(r[i]));
      width[i] = std::max(width[i], line.back().size());
    }
  }
  std::ostringstream os;
  auto emit = [&](const std::vector<std::string>& line) {
    for (std::size_t i = 0; i < line.size(); ++i) {
      os << (i ? "  " : "") << line[i];
      if (i + 1 < line.size()) os << std::string(width[i] - line[i].size(), ' ');
    }
    os << "\n";
  };
  emit(t.columns);
  for (const auto& line : cells) emit(line);
  for (const auto& [key, value] : t.meta) os << key << ": " << pretty_text(value) << "\n";
  return os.str();
}

}  // namespace

std::string render(const RunConfig& cfg, const Table& table) {
  switch (cfg.format) {
    case Format::Json: return render_json(cfg, table);
    case Format::Csv: return render_csv(table);
    case Format::Pretty: return render_pretty(table);
  }
  return {};
}

}  // namespace qaw::cli
