#include "mcgrep/config.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mcg {

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

[[noreturn]] void bad(int lineno, const std::string& what) {
  throw std::runtime_error("config: line " + std::to_string(lineno) + ": " + what);
}

long parse_long(int lineno, const std::string& value) {
  try {
    std::size_t used = 0;
    long v = std::stol(value, &used);
    if (used != value.size()) bad(lineno, "trailing characters in number '" + value + "'");
    return v;
  } catch (const std::logic_error&) {
    bad(lineno, "expected a number, got '" + value + "'");
  }
}

}  // namespace

RepConfig parse_config(const std::string& text) {
  RepConfig cfg;
  std::istringstream in(text);
  std::string line, section;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (std::size_t hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') bad(lineno, "unterminated section header");
      section = trim(line.substr(1, line.size() - 2));
      if (section != "parameters" && section != "rescale" && section != "homology" &&
          section != "residues")
        bad(lineno, "unknown section [" + section + "]");
      continue;
    }

    std::size_t eq = line.find('=');
    if (eq == std::string::npos) bad(lineno, "expected key = value");
    if (section.empty()) bad(lineno, "key before any section");
    std::string key = trim(line.substr(0, eq));
    std::string value = trim(line.substr(eq + 1));
    if (key.empty()) bad(lineno, "empty key");

    if (section == "parameters") {
      if (key == "genus") {
        long g = parse_long(lineno, value);
        if (g < 4) bad(lineno, "genus must be at least 4");
        cfg.genus = static_cast<int>(g);
      } else if (key == "q0" || key == "t0") {
        Rational r;
        try {
          r = Rational::from_string(value);
        } catch (const std::exception& e) {
          bad(lineno, std::string(e.what()));
        }
        (key == "q0" ? cfg.q0 : cfg.t0) = r;
      } else {
        bad(lineno, "unknown key '" + key + "' in [parameters]");
      }
    } else if (section == "rescale") {
      if (key == "precision") {
        long p = parse_long(lineno, value);
        if (p < 2 || p > 1 << 20) bad(lineno, "precision out of range");
        cfg.precision = static_cast<unsigned>(p);
      } else if (key == "policy") {
        if (value == "prefer-exact") cfg.policy = RescalePolicy::prefer_exact;
        else if (value == "require-exact") cfg.policy = RescalePolicy::require_exact;
        else bad(lineno, "policy must be prefer-exact or require-exact");
      } else {
        bad(lineno, "unknown key '" + key + "' in [rescale]");
      }
    } else if (section == "homology") {
      if (key == "override") cfg.homology_override = value;
      else bad(lineno, "unknown key '" + key + "' in [homology]");
    } else {  // residues
      long eps = parse_long(lineno, value);
      if (eps != 0 && eps != 1) bad(lineno, "residue must be 0 or 1");
      cfg.residues[key] = static_cast<int>(eps);
    }
  }
  return cfg;
}

RepConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot read " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  RepConfig cfg = parse_config(buffer.str());
  if (!cfg.homology_override.empty()) {
    std::filesystem::path p(cfg.homology_override);
    if (p.is_relative())
      cfg.homology_override = (std::filesystem::path(path).parent_path() / p).string();
  }
  return cfg;
}

}  // namespace mcg
