#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace boolrep {

/// Element of the superboolean semiring {0, 1, 1v}. The enumerator order is
/// the semiring's total order 1v > 1 > 0.
enum class SBool : std::uint8_t { Zero = 0, One = 1, Ghost = 2 };

inline constexpr std::array<SBool, 3> kAllSBool{SBool::Zero, SBool::One, SBool::Ghost};

constexpr SBool sb_add(SBool a, SBool b) {
  if (a == SBool::Zero) return b;
  if (b == SBool::Zero) return a;
  return SBool::Ghost;  // 1 + 1 = 1v, and 1v absorbs every nonzero summand
}

constexpr SBool sb_mul(SBool a, SBool b) {
  if (a == SBool::Zero || b == SBool::Zero) return SBool::Zero;
  if (a == SBool::One && b == SBool::One) return SBool::One;
  return SBool::Ghost;
}

constexpr SBool operator+(SBool a, SBool b) { return sb_add(a, b); }
constexpr SBool operator*(SBool a, SBool b) { return sb_mul(a, b); }

/// Membership in the ghost ideal {0, 1v}.
constexpr bool is_ghost(SBool x) { return x != SBool::One; }

constexpr bool is_boolean(SBool x) { return x != SBool::Ghost; }

/// Text tokens "0", "1", "1v".
constexpr std::string_view to_token(SBool x) {
  switch (x) {
    case SBool::Zero: return "0";
    case SBool::One: return "1";
    case SBool::Ghost: return "1v";
  }
  return "?";
}

constexpr std::optional<SBool> parse_sbool(std::string_view s) {
  if (s == "0") return SBool::Zero;
  if (s == "1") return SBool::One;
  if (s == "1v") return SBool::Ghost;
  return std::nullopt;
}

}  // namespace boolrep
