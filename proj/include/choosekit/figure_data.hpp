#pragma once

#include <string_view>
#include <vector>

namespace choosekit {

// Raw transcription of a drawn graph with its list assignment.
struct FigureData {
  std::string_view id;
  std::string_view edges;  // edge-list text
  std::string_view lists;  // "v: 1 2 3 4" lines, may be empty
};

const std::vector<FigureData>& figure_table();
const FigureData* find_figure(std::string_view id);

}  // namespace choosekit
