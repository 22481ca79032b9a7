#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace enchilada {

/// One scripted assertion. Notes record observations and never fail.
struct GalleryStep {
  std::string description;
  bool passed = true;
  bool note = false;
};

struct GalleryTranscript {
  std::string name;
  std::vector<GalleryStep> steps;

  bool passed() const;
  std::string to_text() const;
};

/// Names accepted by gallery(), in a fixed order.
const std::vector<std::string>& gallery_names();

/// Builds a named worked example, runs its assertions and returns the
/// transcript. Throws ValidationError for an unknown name.
GalleryTranscript gallery(std::string_view name);

}  // namespace enchilada
