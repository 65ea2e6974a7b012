#pragma once

#include <cstddef>
#include <string>

namespace quasicut {

struct BuiltinExample {
  const char* name;
  const char* description;
  const char* text;
};

/** The documents shipped with the tool, also available as files under samples/. */
inline const BuiltinExample* builtin_examples(std::size_t& count) {
  static const BuiltinExample list[] = {
      {"kite",
       "golden-quasilattice kite with its vertical-axis cut",
       R"(# A kite with pentagonal angles over the golden quasilattice.
# The five generators are the directions of a regular pentagon's vertices;
# the kite's facet normals are drawn from them.
dim 2
tower sqrt5 = 5
let phi = (1 + sqrt5)/2
tower u = 2 + phi
let a = (-1 + sqrt5)/4
let b = (1 + sqrt5)/4
generator (1, 0)
generator (a, u/2)
generator (-b, a*u)
generator (-b, -a*u)
generator (a, -u/2)
facet (-a, -u/2) >= -1
facet (-b, a*u) >= 0
facet (b, a*u) >= 0
facet (a, -u/2) >= -1
cut Y (1, 0) epsilon 0
)"},
      {"square-diagonal",
       "unit square cut along its diagonal into two triangles",
       R"(# The unit square over the standard lattice, cut along the diagonal.
# Both halves are triangles with the same simplex model.
dim 2
generator (1, 0)
generator (0, 1)
facet (1, 0) >= 0
facet (0, 1) >= 0
facet (-1, 0) >= -1
facet (0, -1) >= -1
cut Y (1, 1) epsilon 1
)"},
      {"quadrant-blowup",
       "blow-up of the quadrant corner along the diagonal",
       R"(# Blow up the origin of the quadrant: the plus side keeps the two axes and
# gains the diagonal facet, the sliced-off corner is a standard simplex.
dim 2
generator (1, 0)
generator (0, 1)
facet (1, 0) >= 0
facet (0, 1) >= 0
blowup vertex (0, 0) Y (1, 1) epsilon 1
)"},
      {"arbitrary-c2",
       "quadrant cut along (1, phi), a direction outside the lattice",
       R"(# Cut the quadrant along a direction outside the standard lattice.
# The arbitrary-direction cut extends the lattice by (1, phi) and presents
# the quotient group of the extension.
dim 2
tower sqrt5 = 5
let phi = (1 + sqrt5)/2
generator (1, 0)
generator (0, 1)
facet (1, 0) >= 0
facet (0, 1) >= 0
cut Y (1, phi) epsilon 1
)"},
  };
  count = sizeof(list) / sizeof(list[0]);
  return list;
}

inline const BuiltinExample* find_example(const std::string& name) {
  std::size_t count = 0;
  const BuiltinExample* list = builtin_examples(count);
  for (std::size_t i = 0; i < count; ++i)
    if (name == list[i].name) return &list[i];
  return nullptr;
}

}  // namespace quasicut
