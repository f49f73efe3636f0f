#pragma once

#include <string>
#include <vector>

#include "barbridge/persistence.hpp"

namespace barbridge::cli {

enum class Mark { selected, baseline, offset };

// A highlighted bar; the highlight starts at grade `from` (0 = the whole bar)
// so extensions show as the right part of the bar from the extension grade on.
struct Highlight {
  BarId bar = 0;
  Mark mark = Mark::baseline;
  Grade from = 0;
};

struct Panel {
  std::string title;
  const PersistenceResult* result = nullptr;
  std::vector<Highlight> highlights;
};

// Panels side by side, each a barcode with bars ordered by birth.
std::string render_barcodes(const std::vector<Panel>& panels);

}  // namespace barbridge::cli
