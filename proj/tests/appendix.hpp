#pragma once

#include <map>
#include <vector>

#include "choosekit/coloring.hpp"

namespace appendix {

// reference table of flat 4-assignments, in build_named vertex order
std::vector<choosekit::ListAssignment> k23();  // K(2,3): 0,1 = degree 3, 2..4 = degree 2
std::vector<choosekit::ListAssignment> c4();   // cycle(4)

// expected class counts by pot size
const std::map<int, std::uint64_t>& k23_counts();
const std::map<int, std::uint64_t>& c4_counts();

}  // namespace appendix
