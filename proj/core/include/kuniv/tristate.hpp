#pragma once

#include <string_view>

namespace kuniv {

/// Three-valued truth used for verdicts and declared flags.
enum class Tri { No, Yes, Unknown };

constexpr std::string_view to_string(Tri t) {
  switch (t) {
    case Tri::Yes: return "yes";
    case Tri::No: return "no";
    case Tri::Unknown: return "unknown";
  }
  return "unknown";
}

constexpr Tri tri_from_bool(bool b) { return b ? Tri::Yes : Tri::No; }

}  // namespace kuniv
