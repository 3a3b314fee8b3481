#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace binplot {

/// Opaque 8-bit sRGB color.
struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  /// "#rrggbb", lowercase.
  std::string hex() const;
  /// Accepts "#rrggbb" or "rrggbb"; throws Error{InvalidParameter}.
  static Rgb from_hex(std::string_view text);

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

inline constexpr Rgb kWhite{255, 255, 255};

/// sRGB transfer function, component in [0, 255] to linear light in [0, 1].
double srgb_to_linear(std::uint8_t component);
/// Inverse transfer function with rounding to the nearest 8-bit value.
std::uint8_t linear_to_srgb(double linear);

/// Componentwise interpolation of the encoded values, rounded.
Rgb lerp(Rgb a, Rgb b, double t);

}  // namespace binplot
