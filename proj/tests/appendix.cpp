#include "appendix.hpp"

namespace appendix {

namespace {

choosekit::ListAssignment row(std::initializer_list<const char*> sets) {
  choosekit::ListAssignment L;
  for (const char* s : sets) L.push_back(choosekit::parse_set(s));
  return L;
}

}  // namespace

// table columns are x1 x2 x3 y1 y2; the degree-3 vertices y1 y2 come first here
std::vector<choosekit::ListAssignment> k23() {
  return {
      row({"1567", "2347", "1234", "2356", "4567"}),
      row({"1256", "3456", "3456", "1256", "1234"}),
      row({"1256", "3456", "1356", "2456", "1234"}),
      row({"1256", "3456", "3456", "1235", "1246"}),
      row({"1356", "2456", "3456", "1235", "1246"}),
      row({"1235", "1456", "2456", "3456", "1236"}),
      row({"1235", "1456", "2456", "2356", "1346"}),
      row({"1235", "1456", "1456", "2356", "2346"}),
      row({"1235", "1456", "1256", "3456", "2346"}),
      row({"1256", "1234", "1256", "3456", "3456"}),
      row({"1256", "1234", "1356", "2456", "3456"}),
      row({"1235", "1246", "1256", "3456", "3456"}),
      row({"1235", "1246", "1356", "2456", "3456"}),
      row({"1256", "3456", "1236", "1246", "3456"}),
      row({"1356", "2456", "1236", "1246", "3456"}),
      row({"2356", "1456", "1236", "2456", "3456"}),
      row({"2456", "1346", "1256", "2356", "3456"}),
      row({"3456", "1236", "1456", "2456", "3456"}),
      row({"2356", "1456", "1234", "2456", "3456"}),
      row({"2356", "1346", "1245", "2456", "3456"}),
      row({"2356", "1234", "1456", "2456", "3456"}),
      row({"2456", "1346", "1245", "3456", "2356"}),
      row({"2456", "1234", "1456", "3456", "2356"}),
      row({"2456", "1236", "1245", "3456", "3456"}),
      row({"3456", "1236", "1245", "2456", "3456"}),
      row({"3456", "1256", "1234", "2456", "3456"}),
      row({"2356", "1456", "1234", "3456", "3456"}),
      row({"3456", "1234", "1356", "2456", "3456"}),
      row({"1345", "2345", "1234", "1235", "1245"}),
      row({"1245", "1345", "1235", "2345", "2345"}),
      row({"1345", "2345", "1235", "1245", "2345"}),
      row({"1345", "2345", "1245", "2345", "2345"}),
      row({"1245", "2345", "1345", "1345", "2345"}),
      row({"1345", "2345", "1245", "1345", "2345"}),
      row({"1234", "1234", "1234", "1234", "1234"}),
  };
}

std::vector<choosekit::ListAssignment> c4() {
  return {
      row({"1256", "1345", "3456", "2346"}),
      row({"1235", "1245", "1345", "2345"}),
      row({"1245", "1345", "2345", "2345"}),
      row({"1234", "1234", "1234", "1234"}),
  };
}

const std::map<int, std::uint64_t>& k23_counts() {
  static const std::map<int, std::uint64_t> c = {{7, 1}, {6, 27}, {5, 6}, {4, 1}};
  return c;
}

const std::map<int, std::uint64_t>& c4_counts() {
  static const std::map<int, std::uint64_t> c = {{6, 1}, {5, 2}, {4, 1}};
  return c;
}

}  // namespace appendix
