#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace anonhard::cli {

struct Check {
  std::string name;
  std::string expected;
  std::string observed;
  bool pass = false;
};

/// Named checks plus a fingerprint of the instance they ran on. Rendering is
/// deterministic: no timestamps, no timings.
class VerificationReport {
 public:
  explicit VerificationReport(std::string title) : title_(std::move(title)) {}

  void set_instance(std::string description, std::string_view rows_csv);
  void add(std::string name, std::string expected, std::string observed, bool pass);
  template <class T>
  void add_equal(std::string name, const T& expected, const T& observed) {
    add(std::move(name), std::to_string(expected), std::to_string(observed), expected == observed);
  }

  const std::vector<Check>& checks() const { return checks_; }
  std::size_t failed() const;
  bool passed() const { return failed() == 0; }

  std::string text() const;
  std::string csv() const;

 private:
  std::string title_;
  std::string instance_;
  std::string fingerprint_;
  std::vector<Check> checks_;
};

/// Lowercase hex SHA-256 digest.
std::string sha256_hex(std::string_view data);

}  // namespace anonhard::cli
