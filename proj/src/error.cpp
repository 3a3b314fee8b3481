#include "binplot/error.hpp"

namespace binplot {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidDomain: return "invalid-domain";
    case Errc::InvalidParameter: return "invalid-parameter";
    case Errc::OutOfDomain: return "out-of-domain";
    case Errc::InvalidIndex: return "invalid-index";
    case Errc::InvalidIntensity: return "invalid-intensity";
    case Errc::UnsupportedNormalization: return "unsupported-normalization";
    case Errc::GridTooSmall: return "grid-too-small";
    case Errc::TooManyClasses: return "too-many-classes";
    case Errc::EmptyBin: return "empty-bin";
    case Errc::MissingColumn: return "missing-column";
    case Errc::ParseError: return "parse-error";
    case Errc::SpecNotValidated: return "spec-not-validated";
    case Errc::ConfigError: return "config-error";
    case Errc::Io: return "io-error";
  }
  return "unknown";
}

}  // namespace binplot
