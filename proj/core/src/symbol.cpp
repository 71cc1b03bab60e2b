#include "anonhard/symbol.hpp"

#include <charconv>
#include <vector>

#include "anonhard/error.hpp"

namespace anonhard {

namespace {

std::uint32_t parse_label(std::string_view text, std::string_view whole) {
  std::uint32_t value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end || value == 0) {
    throw Error(ErrorKind::Parse, "bad symbol token '" + std::string(whole) + "'");
  }
  return value;
}

std::vector<std::string_view> split_colon(std::string_view token) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    auto pos = token.find(':', start);
    parts.push_back(token.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

}  // namespace

std::string Symbol::token() const {
  switch (family_) {
    case Family::Binary: return first_ ? "1" : "0";
    case Family::Vertex: return "a:" + std::to_string(first_);
    case Family::VertexRow:
      return "ar:" + std::to_string(first_) + ":" + std::to_string(second_);
    case Family::Edge: return "t:" + std::to_string(first_) + ":" + std::to_string(second_);
    case Family::Free: return "u:" + std::to_string(first_);
  }
  return "?";
}

Symbol Symbol::parse(std::string_view token) {
  if (token == "0") return bit(false);
  if (token == "1") return bit(true);
  auto parts = split_colon(token);
  const auto& tag = parts.front();
  if (tag == "a" && parts.size() == 2) return vertex(parse_label(parts[1], token));
  if (tag == "u" && parts.size() == 2) return free_row(parse_label(parts[1], token));
  if (tag == "ar" && parts.size() == 3) {
    return vertex_row(parse_label(parts[1], token), parse_label(parts[2], token));
  }
  if (tag == "t" && parts.size() == 3) {
    return edge(parse_label(parts[1], token), parse_label(parts[2], token));
  }
  throw Error(ErrorKind::Parse, "bad symbol token '" + std::string(token) + "'");
}

}  // namespace anonhard
