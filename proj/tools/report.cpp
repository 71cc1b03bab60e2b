#include "report.hpp"

#include <algorithm>
#include <array>
#include <sstream>

#include <openssl/evp.h>

namespace anonhard::cli {

std::string sha256_hex(std::string_view data) {
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += kHex[digest[i] >> 4];
    out += kHex[digest[i] & 0xf];
  }
  return out;
}

void VerificationReport::set_instance(std::string description, std::string_view rows_csv) {
  instance_ = std::move(description);
  fingerprint_ = "sha256:" + sha256_hex(rows_csv);
}

void VerificationReport::add(std::string name, std::string expected, std::string observed, bool pass) {
  checks_.push_back({std::move(name), std::move(expected), std::move(observed), pass});
}

std::size_t VerificationReport::failed() const {
  return static_cast<std::size_t>(
      std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.pass; }));
}

std::string VerificationReport::text() const {
  std::size_t wn = 5, we = 8, wo = 8;
  for (const auto& c : checks_) {
    wn = std::max(wn, c.name.size());
    we = std::max(we, c.expected.size());
    wo = std::max(wo, c.observed.size());
  }
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size() + 2, ' '); };
  std::ostringstream out;
  out << "report: " << title_ << '\n';
  if (!instance_.empty()) {
    out << "instance: " << instance_ << '\n';
    out << "fingerprint: " << fingerprint_ << '\n';
  }
  out << pad("check", wn) << pad("expected", we) << pad("observed", wo) << "result\n";
  for (const auto& c : checks_) {
    out << pad(c.name, wn) << pad(c.expected, we) << pad(c.observed, wo) << (c.pass ? "PASS" : "FAIL")
        << '\n';
  }
  out << "summary: " << checks_.size() << " checks, " << checks_.size() - failed() << " passed, "
      << failed() << " failed\n";
  return out.str();
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string VerificationReport::csv() const {
  std::ostringstream out;
  out << "report,instance,fingerprint,check,expected,observed,pass\n";
  for (const auto& c : checks_) {
    out << csv_field(title_) << ',' << csv_field(instance_) << ',' << fingerprint_ << ','
        << csv_field(c.name) << ',' << csv_field(c.expected) << ',' << csv_field(c.observed) << ','
        << (c.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace anonhard::cli
