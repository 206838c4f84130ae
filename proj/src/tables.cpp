#include "rept/tables.hpp"

#include "rept/invariant.hpp"
#include "rept/textio.hpp"

#include <future>

namespace rept {

namespace {

struct CellSpec {
  std::string object;
  std::string link;
  CycPoly expected;
};

CycPoly zc(const Cyclotomic& c) { return CycPoly::constant(c); }

std::vector<CellSpec> table_cells(const std::string& name) {
  std::vector<CellSpec> cells;
  auto add = [&cells](const std::string& obj, const std::string& link, const CycPoly& val) {
    cells.push_back({obj, link, val});
  };
  if (name == "table1") {
    const std::string triv = "W[mu=(2); rho=trivial]";
    const std::string sign = "W[mu=(2); rho=sign]";
    add(triv, "torus:2,-2", parse_cycpoly("1/2*t^2 - 5/2*t + 4"));
    add(sign, "torus:2,-2", parse_cycpoly("1/2*t^2 - 5/2*t + 4"));
    add(triv, "torus:2,-3", parse_cycpoly("2*t - 3"));
    add(sign, "torus:2,-3", parse_cycpoly("-2*t + 3"));
    add(triv, "torus:2,-6", parse_cycpoly("1/2*t^2 - 1/2*t"));
    add(sign, "torus:2,-6", parse_cycpoly("1/2*t^2 - 1/2*t"));
    add(triv, "torus:3,-4", parse_cycpoly("2*t^2 - 8*t + 9"));
    add(sign, "torus:3,-4", parse_cycpoly("2*t^2 - 8*t + 9"));
    add(triv, "torus:4,-5", parse_cycpoly("2*t^3 - 18*t^2 + 52*t - 47"));
    add(sign, "torus:4,-5", parse_cycpoly("-2*t^3 + 18*t^2 - 52*t + 47"));
    return cells;
  }
  if (name == "table2") {
    Cyclotomic z = Cyclotomic::zeta(3);
    Cyclotomic zbar = z.conjugate();
    const std::string a0 = "W[mu=(3); rho=cyclic:0]";
    const std::string a1 = "W[mu=(3); rho=cyclic:1]";
    const std::string a2 = "W[mu=(3); rho=cyclic:2]";
    // a = 0 column
    add(a0, "torus:2,-2", parse_cycpoly("1/3*t^3 - 4*t^2 + 47/3*t - 18"));
    add(a0, "torus:2,-3", parse_cycpoly("3*t - 8"));
    add(a0, "torus:2,-5", parse_cycpoly("3*t^2 - 21*t + 37"));
    add(a0, "torus:2,-6", parse_cycpoly("1/3*t^3 - 4*t^2 + 56/3*t - 27"));
    add(a0, "torus:3,-4", parse_cycpoly("3*t^3 - 36*t^2 + 144*t - 188"));
    // a = 1 column
    add(a1, "torus:2,-2",
        parse_cycpoly("1/3*t^3 - 4*t^2 + 47/3*t") + zc(z + zbar - Cyclotomic::from_rational(20)));
    add(a1, "torus:2,-3", parse_cycpoly("3*t - 8"));
    add(a1, "torus:2,-5", (parse_cycpoly("3*t^2 - 21*t + 36") + zc(z)) * zc(z));
    add(a1, "torus:2,-6", parse_cycpoly("1/3*t^3 - 4*t^2 + 56/3*t - 27"));
    add(a1, "torus:3,-4", parse_cycpoly("3*t^3 - 36*t^2 + 144*t - 188") * zc(zbar));
    // a = 2 column: a = 1 with z3 replaced by its inverse
    add(a2, "torus:2,-2",
        parse_cycpoly("1/3*t^3 - 4*t^2 + 47/3*t") + zc(z + zbar - Cyclotomic::from_rational(20)));
    add(a2, "torus:2,-3", parse_cycpoly("3*t - 8"));
    add(a2, "torus:2,-5", (parse_cycpoly("3*t^2 - 21*t + 36") + zc(zbar)) * zc(zbar));
    add(a2, "torus:2,-6", parse_cycpoly("1/3*t^3 - 4*t^2 + 56/3*t - 27"));
    add(a2, "torus:3,-4", parse_cycpoly("3*t^3 - 36*t^2 + 144*t - 188") * zc(z));
    return cells;
  }
  if (name == "table3") {
    add("W[mu=(1); rho=trivial]", "torus:2,-3", parse_cycpoly("1"));
    add("W[mu=(2); rho=trivial]", "torus:2,-3", parse_cycpoly("2*t - 3"));
    add("W[mu=(3); rho=trivial]", "torus:2,-3", parse_cycpoly("3*t - 8"));
    add("W[mu=(4); rho=trivial]", "torus:2,-3", parse_cycpoly("2*t^2 - 16*t + 37"));
    add("W[mu=(2,2); rho=trivial]", "torus:2,-3", parse_cycpoly("4*t^2 - 28*t + 49"));
    return cells;
  }
  throw usage_error("unknown table '" + name + "' (want table1|table2|table3)");
}

TableCell compute_cell(const CellSpec& spec, const Guards& guards) {
  TableCell cell;
  cell.object = spec.object;
  cell.link = spec.link;
  cell.expected = spec.expected;
  CenterObject w = build_center_object(parse_object_spec(spec.object), guards);
  InvariantResult r = invariant_for(w, LinkSpec::parse(spec.link), true, guards);
  cell.computed = r.value;
  cell.match = cell.computed == cell.expected;
  return cell;
}

}  // namespace

TableReport run_table(const std::string& name, const Guards& guards, bool parallel) {
  TableReport report;
  report.name = name;
  std::vector<CellSpec> cells = table_cells(name);
  if (parallel) {
    std::vector<std::future<TableCell>> futures;
    futures.reserve(cells.size());
    for (const CellSpec& spec : cells)
      futures.push_back(std::async(std::launch::async,
                                   [&spec, &guards]() { return compute_cell(spec, guards); }));
    for (auto& f : futures) report.cells.push_back(f.get());
  } else {
    for (const CellSpec& spec : cells) report.cells.push_back(compute_cell(spec, guards));
  }
  return report;
}

}  // namespace rept
