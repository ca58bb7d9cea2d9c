#include "mcgrep/report.hpp"

namespace mcg {

const char* status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "PASS";
    case CheckStatus::fail: return "FAIL";
    case CheckStatus::uncertified: return "UNCERTIFIED";
  }
  return "?";
}

void CertReport::add(std::string name, CheckStatus status, std::string detail) {
  entries_.push_back({std::move(name), status, std::move(detail)});
}

void CertReport::absorb(const CertReport& other, const std::string& prefix) {
  for (const CheckEntry& e : other.entries_)
    entries_.push_back({prefix + e.name, e.status, e.detail});
}

bool CertReport::ok() const {
  for (const CheckEntry& e : entries_)
    if (e.status != CheckStatus::pass) return false;
  return true;
}

std::size_t CertReport::count(CheckStatus s) const {
  std::size_t n = 0;
  for (const CheckEntry& e : entries_)
    if (e.status == s) ++n;
  return n;
}

std::string CertReport::str() const {
  std::string out;
  for (const CheckEntry& e : entries_) {
    out += "[";
    out += status_name(e.status);
    out += "] ";
    out += e.name;
    if (!e.detail.empty()) {
      out += ": ";
      out += e.detail;
    }
    out += "\n";
  }
  out += "checks: " + std::to_string(entries_.size()) +
         ", passed: " + std::to_string(count(CheckStatus::pass)) +
         ", failed: " + std::to_string(count(CheckStatus::fail)) +
         ", uncertified: " + std::to_string(count(CheckStatus::uncertified)) + "\n";
  return out;
}

}  // namespace mcg
