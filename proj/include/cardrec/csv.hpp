#ifndef CARDREC_CSV_HPP
#define CARDREC_CSV_HPP

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

namespace cardrec {

// Shortest round-trip decimal representation of a double (17 significant
// digits at most), so repeated runs emit byte-identical files.
std::string format_double(double v);

// CSV with one leading comment line recording the run provenance and a
// header row.  Cells are written through format_double for doubles.
class CsvWriter {
 public:
  CsvWriter(const std::string& path, const std::string& comment,
            const std::vector<std::string>& header);

  void cell(const std::string& v);
  void cell(double v);
  void cell(long v);
  void end_row();

  bool good() const { return static_cast<bool>(out_); }

 private:
  std::ofstream out_;
  bool row_open_ = false;
};

// FNV-1a of a canonical config string, printed in the CSV comment line.
std::uint64_t fnv1a(const std::string& s);

}  // namespace cardrec

#endif
