#pragma once

#include <string>

#include "cardzk/errors.hpp"

namespace cardzk {

enum class Variant { WellDesigned, General, Ukdpp, Dkdpp };

inline bool is_grid_variant(Variant v) {
  return v == Variant::WellDesigned || v == Variant::General;
}

inline std::string variant_name(Variant v) {
  switch (v) {
    case Variant::WellDesigned:
      return "well-designed";
    case Variant::General:
      return "general";
    case Variant::Ukdpp:
      return "ukdpp";
    case Variant::Dkdpp:
      return "dkdpp";
  }
  return "?";
}

Variant variant_from_name(const std::string& name);

}  // namespace cardzk
