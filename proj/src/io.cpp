#include "qvcz/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "qvcz/errors.hpp"

namespace qvcz {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

namespace {

std::string cell_text(const Cell& c) {
  if (const double* d = std::get_if<double>(&c)) {
    return format_double(*d);
  }
  return std::get<std::string>(c);
}

}  // namespace

std::string to_csv(const Table& t) {
  std::string out;
  for (const std::string& line : t.comments) {
    out += "# ";
    out += line;
    out += '\n';
  }
  for (std::size_t i = 0; i < t.columns.size(); ++i) {
    if (i) out += ',';
    out += t.columns[i];
  }
  out += '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) out += ',';
      out += cell_text(row[i]);
    }
    out += '\n';
  }
  return out;
}

std::string to_json(const Table& t) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size() && i < t.columns.size(); ++i) {
      if (const double* d = std::get_if<double>(&row[i])) {
        obj[t.columns[i]] = *d;
      } else {
        obj[t.columns[i]] = std::get<std::string>(row[i]);
      }
    }
    arr.push_back(std::move(obj));
  }
  return arr.dump(2) + "\n";
}

void atomic_write(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) {
      throw IoError("cannot open " + tmp.string() + " for writing");
    }
    f.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!f) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move output into place at " + target.string());
  }
}

}  // namespace qvcz
