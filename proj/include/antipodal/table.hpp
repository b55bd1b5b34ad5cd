#pragma once

#include <optional>
#include <string>
#include <vector>

#include "antipodal/bounds.hpp"
#include "antipodal/search.hpp"

namespace antipodal {

struct TableRow {
  Params params;
  BoundTable bounds;
  std::optional<std::size_t> alpha; // exact optimum, or best found if unproven
  bool proven = false;
  std::uint64_t nodes = 0;
  std::vector<std::string> tight; // bound names equal to alpha
  std::string note;               // why the row was not solved, if it wasn't
};

// One row per valid (n,k,l) with n <= nmax, k <= kmax, ordered by n, k, l.
// Instances above the vertex cap are listed with a note and no alpha.
std::vector<TableRow> build_table(int nmax, int kmax, const SearchOptions &options = {},
                                  std::size_t vertex_cap = kDefaultVertexCap);

// Fixed-width text rendering, one header line plus one line per row.
std::string format_table(const std::vector<TableRow> &rows);

} // namespace antipodal
