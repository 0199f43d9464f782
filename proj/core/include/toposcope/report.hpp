#pragma once

#include <string>
#include <vector>

namespace toposcope::cli {

// One check outcome. Witnesses are fully expanded up to a size cap; timing
// is kept in memory but only serialized on request, so reports stay
// byte-identical across runs.
struct Record {
  std::string id;
  std::string status;  // pass | fail | error
  std::string witness;
  double seconds = 0.0;
};

struct Report {
  std::vector<Record> records;

  void add(const std::string& id, const std::string& status, const std::string& witness = "");
  void merge(const Report& other);
  bool all_pass() const;
  std::size_t failures() const;
  // 0 all-pass, 1 any fail/error (usage and parse errors exit 2 in the CLI)
  int exit_code() const;

  std::string to_text(bool timings = false) const;
  // One record per line: id TAB status TAB witness
  std::string to_records() const;
};

// Truncates a witness payload to the configured cap (10^4 entries).
std::string cap_witness(const std::string& w);

}  // namespace toposcope::cli
