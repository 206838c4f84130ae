#pragma once

#include "rept/guards.hpp"
#include "rept/cycpoly.hpp"

#include <string>
#include <vector>

namespace rept {

// One recomputed cell of a reference table, compared exactly against the
// hard-coded expected polynomial.
struct TableCell {
  std::string object;
  std::string link;
  CycPoly expected;
  CycPoly computed;
  bool match = false;
};

struct TableReport {
  std::string name;
  std::vector<TableCell> cells;
  bool all_match() const {
    for (const auto& c : cells)
      if (!c.match) return false;
    return true;
  }
};

// name: "table1" (2-cycle invariants), "table2" (3-cycle invariants, rows for
// a = 0,1,2), "table3" (trefoil across cycle types). Cells are computed
// concurrently and reported in deterministic order.
TableReport run_table(const std::string& name, const Guards& guards = {}, bool parallel = true);

}  // namespace rept
