#include "toposcope/report.hpp"

#include <sstream>

namespace toposcope::cli {

void Report::add(const std::string& id, const std::string& status, const std::string& witness) {
  records.push_back({id, status, cap_witness(witness), 0.0});
}

void Report::merge(const Report& other) {
  records.insert(records.end(), other.records.begin(), other.records.end());
}

bool Report::all_pass() const {
  for (const auto& r : records)
    if (r.status != "pass") return false;
  return true;
}

std::size_t Report::failures() const {
  std::size_t n = 0;
  for (const auto& r : records)
    if (r.status != "pass") ++n;
  return n;
}

int Report::exit_code() const { return all_pass() ? 0 : 1; }

std::string Report::to_text(bool timings) const {
  std::ostringstream out;
  for (const auto& r : records) {
    out << "[" << r.status << "] " << r.id;
    if (!r.witness.empty()) out << ": " << r.witness;
    if (timings) out << " (" << r.seconds << "s)";
    out << "\n";
  }
  return out.str();
}

std::string Report::to_records() const {
  std::ostringstream out;
  for (const auto& r : records)
    out << r.id << "\t" << r.status << "\t" << r.witness << "\n";
  return out.str();
}

std::string cap_witness(const std::string& w) {
  constexpr std::size_t cap = 10000;
  if (w.size() <= cap) return w;
  return w.substr(0, cap) + "...";
}

}  // namespace toposcope::cli
