#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace anonhard {

/// One table entry. Symbols are tagged tokens rather than strings: the binary
/// alphabet and the families used by the width-8 construction (a_i, a_{i,h},
/// t_{i,j}, u_i) have separate tags, so tokens from different families can
/// never compare equal. Indices stored in a symbol are 1-based labels.
class Symbol {
 public:
  enum class Family : std::uint8_t { Binary, Vertex, VertexRow, Edge, Free };

  constexpr Symbol() = default;

  static constexpr Symbol bit(bool one) { return {Family::Binary, one ? 1u : 0u, 0}; }
  /// a_i
  static constexpr Symbol vertex(std::uint32_t i) { return {Family::Vertex, i, 0}; }
  /// a_{i,h}
  static constexpr Symbol vertex_row(std::uint32_t i, std::uint32_t h) {
    return {Family::VertexRow, i, h};
  }
  /// t_{i,j}
  static constexpr Symbol edge(std::uint32_t i, std::uint32_t j) { return {Family::Edge, i, j}; }
  /// u_i
  static constexpr Symbol free_row(std::uint32_t i) { return {Family::Free, i, 0}; }

  constexpr Family family() const { return family_; }
  constexpr std::uint32_t first() const { return first_; }
  constexpr std::uint32_t second() const { return second_; }
  constexpr bool is_one() const { return family_ == Family::Binary && first_ == 1; }

  friend constexpr bool operator==(const Symbol&, const Symbol&) = default;

  /// Serialized form: `0`/`1`, `a:i`, `ar:i:h`, `t:i:j`, `u:i`.
  std::string token() const;
  /// Inverse of token(); throws Error(Parse) on malformed input.
  static Symbol parse(std::string_view token);

 private:
  constexpr Symbol(Family family, std::uint32_t first, std::uint32_t second)
      : family_(family), first_(first), second_(second) {}

  Family family_ = Family::Binary;
  std::uint32_t first_ = 0;
  std::uint32_t second_ = 0;
};

}  // namespace anonhard

template <>
struct std::hash<anonhard::Symbol> {
  std::size_t operator()(const anonhard::Symbol& s) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(s.family());
    h = h * 0x9E3779B97F4A7C15ULL ^ s.first();
    h = h * 0x9E3779B97F4A7C15ULL ^ s.second();
    return static_cast<std::size_t>(h);
  }
};
