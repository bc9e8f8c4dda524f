#include "cardrec/csv.hpp"

#include <charconv>
#include <stdexcept>

namespace cardrec {

std::string format_double(double v) {
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

CsvWriter::CsvWriter(const std::string& path, const std::string& comment,
                     const std::vector<std::string>& header)
    : out_(path) {
  if (!out_) throw std::runtime_error("cannot open output file: " + path);
  out_ << "# " << comment << "\n";
  for (std::size_t i = 0; i < header.size(); ++i)
    out_ << (i ? "," : "") << header[i];
  out_ << "\n";
}

void CsvWriter::cell(const std::string& v) {
  if (row_open_) out_ << ",";
  out_ << v;
  row_open_ = true;
}

void CsvWriter::cell(double v) { cell(format_double(v)); }

void CsvWriter::cell(long v) { cell(std::to_string(v)); }

void CsvWriter::end_row() {
  out_ << "\n";
  row_open_ = false;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace cardrec
