#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace mcg {

enum class CheckStatus { pass, fail, uncertified };

const char* status_name(CheckStatus s);

struct CheckEntry {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  std::string detail;
};

// Ordered list of named check outcomes.  Entries keep insertion order, carry
// no timings, and print the same bytes on every run.
class CertReport {
 public:
  void add(std::string name, CheckStatus status, std::string detail = "");
  void pass(std::string name) { add(std::move(name), CheckStatus::pass); }
  void fail(std::string name, std::string detail) {
    add(std::move(name), CheckStatus::fail, std::move(detail));
  }
  void uncertified(std::string name, std::string detail) {
    add(std::move(name), CheckStatus::uncertified, std::move(detail));
  }

  // Appends every entry of `other`, name-prefixed.
  void absorb(const CertReport& other, const std::string& prefix = "");

  const std::vector<CheckEntry>& entries() const { return entries_; }
  bool ok() const;
  std::size_t count(CheckStatus s) const;

  // One line per entry plus a totals line.
  std::string str() const;

 private:
  std::vector<CheckEntry> entries_;
};

}  // namespace mcg
