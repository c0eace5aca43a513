#include "choosekit/figure_data.hpp"

namespace choosekit {

// Lists were attached to the nearest drawn vertex.
const std::vector<FigureData>& figure_table() {
  static const std::vector<FigureData> table = {
      {"figS",
       "v4 v2\nv7 v2\nv4 v6\nv7 v6\nv1 v2\nv3 v2\nv1 v0\nv3 v0\nv5 v4\nv5 v3\n",
       "v0: 1 2 3 5\nv1: 1 2 3 4\nv2: 1 2 3 4\nv3: 1 2 4 5\nv4: 1 2 3 6\nv5: 1 4 5 6\nv6: 1 2 5 6\nv7: 1 3 4 5\n"},
      {"figQ",
       "w x\ns x\nu x\ns t\nu t\nw r\ns r\nw v\nu v\n",
       "r: 1 3 6 7\ns: 1 2 6 7\nt: 1 4 5 7\nu: 1 4 5 6\nv: 1 2 3 5\nw: 1 2 3 4\nx: 1 2 4 6\n"},
      {"figT",
       "v0 v1\nv2 v1\nv6 v1\nv0 v7\nv6 v7\nv2 v5\nv4 v5\nv6 v5\nv2 v3\nv4 v3\n",
       "v0: 1 2 4 5\nv1: 1 3 5 6\nv2: 1 2 3 6\nv3: 1 2 3 4\nv4: 1 4 5 6\nv5: 1 2 5 6\nv6: 1 2 3 5\nv7: 1 2 3 4\n"},
      {"figN",
       "v2 v0\nv3 v0\nv4 v0\nv5 v0\nv6 v0\nv2 v1\nv3 v1\nv4 v1\nv5 v1\nv6 v1\n",
       "v0: 1 2 4 5\nv1: 1 3 6 7\nv2: 1 2 6 7\nv3: 1 4 5 6\nv4: 1 4 5 7\nv5: 1 2 3 5\nv6: 1 2 3 4\n"},
      {"figU",
       "v0 v4\nv5 v4\nv0 v7\nv5 v7\nv1 v2\nv3 v2\nv1 v6\nv3 v6\nv1 v0\nv3 v5\n",
       "v0: 1 3 4 5\nv1: 1 2 3 4\nv2: 1 2 3 5\nv3: 1 3 4 5\nv4: 1 2 3 5\nv5: 1 2 3 4\nv6: 1 2 4 5\nv7: 1 2 4 5\n"},
      {"figE",
       "v1 v0\nv1 v2\nv1 v4\nv3 v0\nv3 v2\nv3 v4\nv5 v0\nv5 v2\nv5 v4\n",
       "v0: 1 2 3 4\nv1: 1 3 4 5\nv2: 1 4 5 6\nv3: 1 2 4 5\nv4: 1 2 3 5\nv5: 1 2 3 6\n"},
      {"figP",
       "v1 v0\nv3 v0\nv2 v1\nv4 v1\nv6 v1\nv3 v2\nv5 v2\nv5 v4\nv5 v6\n",
       "v0: 1 2 3 5\nv1: 1 2 5 6\nv2: 1 2 4 6\nv3: 1 3 4 6\nv4: 1 3 4 5\nv5: 1 2 3 4\nv6: 1 2 3 6\n"},
      {"figR",
       "v0 v1\nv5 v1\nv0 v6\nv5 v6\nv4 v5\nv2 v3\nv4 v3\nv0 v2\nv0 v7\nv3 v7\n",
       "v0: 1 3 4 5\nv1: 1 2 5 6\nv2: 1 2 4 5\nv3: 2 3 5 6\nv4: 3 4 5 6\nv5: 1 2 4 6\nv6: 1 2 3 4\nv7: 1 2 3 6\n"},
      {"figY",
       "r w\nr s\nx s\nx y\nx w\nw v\nu v\nu t\nt y\nt s\n",
       "r: 1 3 5 6\ns: 1 4 5 6\nt: 1 2 3 6\nu: 1 2 5 6\nv: 1 3 4 5\nw: 1 2 3 4\nx: 1 2 4 5\ny: 1 2 3 5\n"},
      {"figZ",
       "t y\nt s\nt u\np u\np y\np q\nr q\nr s\ny x\nw x\nw v\nu v\n",
       "p: 1 2 3 4\nq: 1 2 3 5\nr: 1 3 4 5\ns: 1 2 3 4\nt: 1 2 4 5\nu: 1 2 4 5\nv: 1 2 3 5\nw: 2 3 4 6\nx: 3 4 5 6\ny: 1 3 4 5\n"},
      {"figWW",
       "v2 b\nv2 v1\na b\na v1\nc b\nc v1\n",
       "v1: 1 2 3 4\nv2: 1 2 3 4\na: 1 2 3 6\nb: 1 4 5 6\nc: 1 2 3 5\n"},
      {"figXX",
       "v2 v1\na v1\nw2 v1\nv2 w1\na w1\nw2 w1\n",
       "v1: 1 2 3 4\nv2: 1 2 3 4\na: 1 2 4 5\nw1: 1 3 4 5\nw2: 1 2 3 5\n"},
      {"figUU",
       "v s\nw s\nu s\nt s\nv r\nw r\nu r\nt r\n",
       "r: 1 2 3 4\ns: 1 4 5 6\nt: 3 4 5 6\nu: 1 2 3 6\nv: 1 2 3 5\nw: 1 2 3 4\n"},
      {"figVV",
       "s t\nu t\nw t\ns x\nw x\nu v\nw v\n",
       "s: 1 2 4 6\nt: 1 2 5 6\nu: 1 3 4 6\nv: 1 2 3 4\nw: 1 2 3 5\nx: 1 3 4 5\n"},
      {"figAA",
       "s x\nw x\ns r\nw r\ns t\nu t\nu v\nw v\n",
       "r: 1 2 4 5\ns: 1 2 3 4\nt: 1 2 3 5\nu: 1 3 4 5\nv: 1 2 3 4\nw: 1 2 4 5\nx: 1 3 4 5\n"},
      {"figBB",
       "s r\ns x\ns t\nu t\nu v\nw r\nw x\nw v\n",
       "r: 1 2 4 6\ns: 1 2 3 4\nt: 1 3 4 5\nu: 3 4 5 6\nv: 2 4 5 6\nw: 1 2 5 6\nx: 1 2 3 5\n"},
      {"C4lem",
       "v1 v2\nv2 v3\nv3 v4\nv4 v1\n",
       "v1: 1 2 3 4\nv2: 1 2 3 4\nv3: 1 2 3 5\nv4: 2 3 4 5\n"},
      {"figGG1",
       "0 1\n0 3\n2 1\n2 3\n4 3\n4 6\n5 3\n5 6\n1 7\n3 7\n",
       ""},
      {"figGG2",
       "1 4\n2 4\n0 3\n1 3\n0 5\n2 5\n0 6\n2 6\n7 6\n7 5\n",
       ""},
      {"figGG3",
       "0 1\n0 3\n2 1\n2 3\n4 3\n4 6\n5 3\n5 6\n0 7\n2 7\n",
       ""},
      {"figGG4",
       "7 8\n9 8\n7 6\n9 6\n4 6\n5 6\n4 3\n5 3\n0 3\n2 3\n0 1\n2 1\n",
       ""},
  };
  return table;
}

const FigureData* find_figure(std::string_view id) {
  for (const auto& f : figure_table())
    if (f.id == id) return &f;
  return nullptr;
}

}  // namespace choosekit
