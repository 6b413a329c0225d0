#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>
#include <sstream>

#include "cli/cli.hpp"
#include "json.hpp"

namespace landen::cli {
namespace {

std::string to_text(const Value& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_double(x);
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return x;
        } else {
          return std::to_string(x);
        }
      },
      v);
}

nlohmann::ordered_json to_json(const Value& v) {
  return std::visit(
      [](const auto& x) -> nlohmann::ordered_json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, double>) {
          if (!std::isfinite(x)) return nullptr;
        }
        return x;
      },
      v);
}

void render_text(const Report& report, std::ostream& out) {
  for (const auto& [key, value] : report.params) out << key << " = " << to_text(value) << '\n';
  if (report.table) {
    const Table& t = *report.table;
    std::vector<std::size_t> widths(t.columns.size());
    std::vector<std::vector<std::string>> cells;
    for (std::size_t j = 0; j < t.columns.size(); ++j) widths[j] = t.columns[j].size();
    for (const auto& row : t.rows) {
      auto& line = cells.emplace_back();
      for (std::size_t j = 0; j < row.size(); ++j) {
        line.push_back(to_text(row[j]));
        widths[j] = std::max(widths[j], line.back().size());
      }
    }
    const auto emit = [&](const std::vector<std::string>& line) {
      for (std::size_t j = 0; j < line.size(); ++j) {
        if (j > 0) out << "  ";
        out << line[j];
        if (j + 1 < line.size()) out << std::string(widths[j] - line[j].size(), ' ');
      }
      out << '\n';
    };
    emit(t.columns);
    for (const auto& line : cells) emit(line);
  }
  for (const auto& [key, value] : report.scalars) out << key << ": " << to_text(value) << '\n';
}

void render_csv(const Report& report, std::ostream& out) {
  if (report.table) {
    const Table& t = *report.table;
    for (std::size_t j = 0; j < t.columns.size(); ++j) out << (j ? "," : "") << t.columns[j];
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? "," : "") << to_text(row[j]);
      out << '\n';
    }
    return;
  }
  out << "key,value\n";
  for (const auto& [key, value] : report.scalars) out << key << ',' << to_text(value) << '\n';
}

void render_json(const Report& report, std::ostream& out) {
  nlohmann::ordered_json doc;
  auto& params = doc["params"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.params) params[key] = to_json(value);
  if (report.table) {
    auto& rows = doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& row : report.table->rows) {
      nlohmann::ordered_json obj;
      for (std::size_t j = 0; j < row.size(); ++j) obj[report.table->columns[j]] = to_json(row[j]);
      rows.push_back(std::move(obj));
    }
  }
  for (const auto& [key, value] : report.scalars) doc[key] = to_json(value);
  out << doc.dump(2) << '\n';
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), x);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, end);
}

void render(const Report& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::kText: render_text(report, out); break;
    case Format::kCsv: render_csv(report, out); break;
    case Format::kJson: render_json(report, out); break;
  }
}

}  // namespace landen::cli
