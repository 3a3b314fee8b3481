#include "binplot/color.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "binplot/error.hpp"

namespace binplot {

namespace {

int hex_digit(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  if (c >= 'a' && c <= 'f') return c - 'a' + 10;
  if (c >= 'A' && c <= 'F') return c - 'A' + 10;
  return -1;
}

}  // namespace

std::string Rgb::hex() const {
  static constexpr char digits[] = "0123456789abcdef";
  std::string s = "#000000";
  const std::uint8_t parts[3] = {r, g, b};
  for (int i = 0; i < 3; ++i) {
    s[1 + 2 * i] = digits[parts[i] >> 4];
    s[2 + 2 * i] = digits[parts[i] & 0xf];
  }
  return s;
}

Rgb Rgb::from_hex(std::string_view text) {
  if (!text.empty() && text.front() == '#') text.remove_prefix(1);
  if (text.size() != 6) {
    throw Error(Errc::InvalidParameter, "color '" + std::string(text) + "' is not #rrggbb");
  }
  std::uint8_t parts[3];
  for (int i = 0; i < 3; ++i) {
    const int hi = hex_digit(text[2 * i]);
    const int lo = hex_digit(text[2 * i + 1]);
    if (hi < 0 || lo < 0) {
      throw Error(Errc::InvalidParameter, "color '" + std::string(text) + "' is not #rrggbb");
    }
    parts[i] = static_cast<std::uint8_t>(hi * 16 + lo);
  }
  return {parts[0], parts[1], parts[2]};
}

double srgb_to_linear(std::uint8_t component) {
  const double c = component / 255.0;
  return c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
}

std::uint8_t linear_to_srgb(double linear) {
  const double l = std::clamp(linear, 0.0, 1.0);
  const double c = l <= 0.0031308 ? 12.92 * l : 1.055 * std::pow(l, 1.0 / 2.4) - 0.055;
  return static_cast<std::uint8_t>(std::lround(std::clamp(c, 0.0, 1.0) * 255.0));
}

Rgb lerp(Rgb a, Rgb b, double t) {
  auto mix = [t](std::uint8_t x, std::uint8_t y) {
    const double v = x + t * (static_cast<double>(y) - x);
    return static_cast<std::uint8_t>(std::lround(std::clamp(v, 0.0, 255.0)));
  };
  return {mix(a.r, b.r), mix(a.g, b.g), mix(a.b, b.b)};
}

}  // namespace binplot
