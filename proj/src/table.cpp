#include "antipodal/table.hpp"

#include <iomanip>
#include <sstream>

namespace antipodal {

std::vector<TableRow> build_table(int nmax, int kmax, const SearchOptions &options,
                                  std::size_t vertex_cap) {
  if (nmax < 2 || kmax < 1 || nmax > kMaxDimension)
    fail(ErrorCode::InvalidParams, "table needs 2 <= nmax <= 64 and kmax >= 1");
  std::vector<TableRow> rows;
  for (int n = 2; n <= nmax; ++n)
    for (int k = 1; k <= kmax; ++k)
      for (int l = 1; l <= k && k + l <= n; ++l) {
        const Params p = Params::make(n, k, l);
        TableRow row{p, bound_table(p), std::nullopt, false, 0, {}, {}};
        if (*row.bounds.value("V") > vertex_cap) {
          row.note = "skipped: |V| exceeds the vertex cap";
          rows.push_back(std::move(row));
          continue;
        }
        const AntipodalSearch s = max_antipodal_free(p, options, vertex_cap);
        row.alpha = s.result.optimum;
        row.proven = s.result.proof_of_optimality;
        row.nodes = s.result.nodes_explored;
        if (!row.proven)
          row.note = "budget exhausted: alpha is a lower bound";
        for (const char *name : {"thm1", "thm2", "fk1"})
          if (auto v = row.bounds.value(name); v && row.proven && *v == *row.alpha)
            row.tight.emplace_back(name);
        rows.push_back(std::move(row));
      }
  return rows;
}

std::string format_table(const std::vector<TableRow> &rows) {
  std::ostringstream os;
  auto cell = [&](std::optional<Count> v, int width) {
    if (v)
      os << std::setw(width) << *v;
    else
      os << std::setw(width) << "-";
  };
  os << std::setw(3) << "n" << std::setw(3) << "k" << std::setw(3) << "l" << std::setw(10)
     << "V" << std::setw(9) << "ex1" << std::setw(9) << "ex2" << std::setw(10) << "alpha"
     << std::setw(10) << "thm1" << std::setw(9) << "thm2" << std::setw(9) << "fk1"
     << "  tight\n";
  for (const TableRow &r : rows) {
    os << std::setw(3) << r.params.n << std::setw(3) << r.params.k << std::setw(3)
       << r.params.l;
    cell(r.bounds.value("V"), 10);
    cell(r.bounds.value("ex1"), 9);
    cell(r.bounds.value("ex2"), 9);
    if (r.alpha)
      os << std::setw(10) << (std::to_string(*r.alpha) + (r.proven ? "" : "+"));
    else
      os << std::setw(10) << "-";
    cell(r.bounds.value("thm1"), 10);
    cell(r.bounds.value("thm2"), 9);
    cell(r.bounds.value("fk1"), 9);
    std::string tail;
    for (std::size_t i = 0; i < r.tight.size(); ++i)
      tail += (i ? "," : "") + r.tight[i];
    if (!r.note.empty())
      tail += (tail.empty() ? "(" : " (") + r.note + ")";
    if (!tail.empty())
      os << "  " << tail;
    os << "\n";
  }
  return os.str();
}

} // namespace antipodal
