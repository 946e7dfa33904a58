#pragma once

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace hoquant {

/// Decimal with 17 significant digits ("%.17g"), enough to round-trip a double.
std::string format_number(double x);

/// Minimal CSV writer: a header row then comma-separated records.
class CsvWriter {
 public:
  CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);

  CsvWriter& field(double x);
  CsvWriter& field(long long x);
  CsvWriter& field(unsigned long long x);
  CsvWriter& field(unsigned x) { return field(static_cast<unsigned long long>(x)); }
  CsvWriter& field(int x) { return field(static_cast<long long>(x)); }
  CsvWriter& field(const std::string& s);
  CsvWriter& field(const char* s) { return field(std::string(s)); }
  void end_row();

 private:
  void separator();

  std::ofstream out_;
  std::size_t columns_;
  std::size_t in_row_ = 0;
};

}  // namespace hoquant
