// Command-line front end: compute ribbon link polynomials in the
// interpolation variable t, reproduce the reference tables, run the
// verification suites and the finite-scale oracles.

#include <CLI11.hpp>

#include "rept/invariant.hpp"
#include "rept/tables.hpp"
#include "rept/textio.hpp"

#include <json.hpp>

#include <iostream>

using namespace rept;
using nlohmann::json;

namespace {

struct CommonOptions {
  std::vector<std::string> objects;
  std::vector<std::string> links;
  std::string format = "text";
  bool normalize = false;
  bool strict = false;
  long at = 0;
  bool has_at = false;
  Guards guards;
};

void add_guard_flags(CLI::App* cmd, Guards& guards) {
  cmd->add_option("--max-width", guards.max_ambient_width, "ambient diagram width limit");
  cmd->add_option("--max-n", guards.max_n, "largest symmetric group S_n");
  cmd->add_option("--max-states", guards.max_states, "tuple/state enumeration limit");
}

std::string value_to_text(const InvariantResult& r, bool has_at, long at) {
  if (!has_at) return r.value.str();
  Cyclotomic v = r.value.eval(at);
  return v.str();
}

int cmd_invariant(const CommonOptions& opt) {
  if (opt.objects.empty() || opt.links.empty())
    throw usage_error("invariant needs at least one --object and one --link");
  set_strict_construction(opt.strict);
  bool csv = opt.format == "csv";
  if (csv) std::cout << "object,link,normalized,value\n";
  for (const std::string& otext : opt.objects) {
    CenterObject w = build_center_object(parse_object_spec(otext), opt.guards);
    if (opt.strict && !verify_naturality(w))
      throw verify_error("object fails naturality: " + otext);
    for (const std::string& ltext : opt.links) {
      InvariantResult r = invariant_for(w, LinkSpec::parse(ltext), opt.normalize, opt.guards);
      if (opt.format == "json") {
        json j = json::parse(invariant_to_json(r));
        if (opt.has_at) j["value_at"] = r.value.eval(opt.at).str();
        std::cout << j.dump() << "\n";
      } else if (csv) {
        std::cout << invariant_to_csv_row(r) << "\n";
      } else {
        std::cout << value_to_text(r, opt.has_at, opt.at) << "\n";
      }
    }
  }
  return 0;
}

int cmd_dims(const CommonOptions& opt) {
  if (opt.objects.empty()) throw usage_error("dims needs at least one --object");
  for (const std::string& otext : opt.objects) {
    CenterObject w = build_center_object(parse_object_spec(otext), opt.guards);
    CycPoly d = dimension(w);
    if (opt.format == "json") {
      json j;
      j["object"] = w.descriptor;
      j["dimension"] = json::parse(cycpoly_to_json(d));
      j["dimension_text"] = d.str();
      std::cout << j.dump() << "\n";
    } else {
      std::cout << w.descriptor << ": " << d.str() << "\n";
    }
  }
  return 0;
}

int cmd_table(const std::string& name, const CommonOptions& opt) {
  TableReport report = run_table(name, opt.guards);
  std::cout << "table,object,link,expected,computed,status\n";
  for (const TableCell& c : report.cells) {
    std::cout << report.name << ",\"" << c.object << "\",\"" << c.link << "\",\""
              << c.expected.str() << "\",\"" << c.computed.str() << "\","
              << (c.match ? "MATCH" : "MISMATCH") << "\n";
  }
  return report.all_match() ? 0 : 4;
}

int cmd_oracle(const CommonOptions& opt, int n) {
  std::vector<std::string> links = opt.links;
  if (links.empty()) links = {"torus:1,0", "torus:2,-2", "torus:2,2", "torus:2,-3", "torus:2,3"};
  json out = json::array();
  bool all_ok = true;
  for (const std::string& ltext : links) {
    LinkSpec link = LinkSpec::parse(ltext);
    json item;
    item["link"] = link.str();
    if (!opt.objects.empty()) {
      json per = json::array();
      for (const std::string& otext : opt.objects) {
        ObjectSpec spec = parse_object_spec(otext);
        CenterObject w = build_center_object(spec, opt.guards);
        FiniteObject f = build_finite_object(spec, opt.guards);
        InvariantResult r = invariant_for(w, link, false, opt.guards);
        Cyclotomic lhs = r.value.eval(f.n);
        Cyclotomic rhs = finite_invariant(f, link.braid(), opt.guards);
        bool ok = lhs == rhs;
        all_ok = all_ok && ok;
        per.push_back({{"object", otext},
                       {"polynomial_at_n", lhs.str()},
                       {"finite_invariant", rhs.str()},
                       {"agree", ok}});
      }
      item["objects"] = per;
    }
    if (n > 0) {
      InvariantResult r = p_n(n, link, opt.guards);
      Cyclotomic lhs = r.value.eval(n);
      long long rhs = artin_fix_count(n, link.braid(), opt.guards);
      bool ok = lhs == Cyclotomic::from_rational(Rational(static_cast<long>(rhs)));
      all_ok = all_ok && ok;
      item["p_n_at_n"] = lhs.str();
      item["fixed_tuples"] = rhs;
      item["agree"] = ok;
    }
    out.push_back(item);
  }
  std::cout << out.dump(2) << "\n";
  return all_ok ? 0 : 4;
}

// ---- verification suites ----

struct SuiteRunner {
  int failures = 0;
  void check(const std::string& name, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << name << "\n";
    if (!ok) {
      if (!detail.empty()) std::cout << "       " << detail << "\n";
      ++failures;
    }
  }
};

std::vector<std::pair<Permutation, RhoMap>> builtin_pairs(int n, const Guards& guards) {
  std::vector<std::pair<Permutation, RhoMap>> out;
  for (const CycleType& mu : all_cycle_types(n)) {
    Permutation sigma = canonical_permutation(mu);
    std::vector<Permutation> z = centralizer(sigma, guards);
    out.emplace_back(sigma, make_rho_trivial(z));
    out.emplace_back(sigma, make_rho_sign(z));
    if (mu.parts.size() == 1 && mu.parts[0] > 2) {
      for (int a = 1; a < mu.parts[0]; ++a) out.emplace_back(sigma, make_rho_cyclic(z, sigma, a));
    }
  }
  return out;
}

void suite_naturality(SuiteRunner& s, int nmax, const Guards& guards) {
  for (int n = 1; n <= nmax; ++n)
    for (auto& [sigma, rho] : builtin_pairs(n, guards)) {
      CenterObject w = build_w(sigma, rho);
      s.check("naturality " + w.descriptor, verify_naturality(w));
    }
}

void suite_twist(SuiteRunner& s, int nmax, const Guards& guards) {
  for (int n = 1; n <= nmax; ++n)
    for (auto& [sigma, rho] : builtin_pairs(n, guards)) {
      CenterObject w = build_w(sigma, rho);
      BlockMorphism closed = twist(w, TwistMode::closed_form);
      BlockMorphism left = twist(w, TwistMode::diagrammatic_left);
      BlockMorphism right = twist(w, TwistMode::diagrammatic_right);
      s.check("twist " + w.descriptor, closed == left && left == right);
    }
}

void suite_oracles(SuiteRunner& s, int nmax, std::vector<std::string> links,
                   const Guards& guards) {
  if (links.empty())
    links = {"torus:1,0", "torus:2,-2", "torus:2,2", "torus:2,-3", "torus:2,3"};
  for (int n = 2; n <= nmax; ++n) {
    for (const std::string& ltext : links) {
      LinkSpec link = LinkSpec::parse(ltext);
      for (const CycleType& mu : all_cycle_types(n)) {
        Permutation sigma = canonical_permutation(mu);
        std::vector<Permutation> z = centralizer(sigma, guards);
        std::vector<RhoMap> rhos = {make_rho_trivial(z), make_rho_sign(z)};
        if (mu.parts.size() == 1 && mu.parts[0] > 2)
          for (int a = 1; a < mu.parts[0]; ++a) rhos.push_back(make_rho_cyclic(z, sigma, a));
        for (const RhoMap& rho : rhos) {
          InvariantResult r = p_mu_rho(mu, rho, link, false, guards);
          FiniteObject f = build_crossed_module(mu, rho, guards);
          Cyclotomic lhs = r.value.eval(n);
          Cyclotomic rhs = finite_invariant(f, link.braid(), guards);
          s.check("object oracle n=" + std::to_string(n) + " " + f.descriptor + " " + link.str(),
                  lhs == rhs, lhs.str() + " vs " + rhs.str());
        }
      }
      InvariantResult r = p_n(n, link, guards);
      Cyclotomic lhs = r.value.eval(n);
      long long rhs = artin_fix_count(n, link.braid(), guards);
      s.check("tuple oracle n=" + std::to_string(n) + " " + link.str(),
              lhs == Cyclotomic::from_rational(Rational(static_cast<long>(rhs))),
              lhs.str() + " vs " + std::to_string(rhs));
    }
  }
}

void suite_dims(SuiteRunner& s, int nmax, const Guards& guards) {
  for (int n = 0; n <= std::max(nmax, 6); ++n) {
    Diagram one = Diagram::identity(n);
    s.check("dim([" + std::to_string(n) + "]) = t^" + std::to_string(n),
            one.trace_closure() == CycPoly::t_power(n));
  }
  for (int n = 1; n <= std::min(nmax, 4); ++n) {
    bool ok = true;
    for (const Permutation& g : symmetric_group(n)) {
      CycPoly tr = BlockMorphism::diagonal(x_lambda(SetPartition::permutation(g.images())), 1)
                       .trace();
      CycPoly want = g.is_identity() ? CycPoly::falling_factorial(n) : CycPoly::zero();
      ok = ok && tr == want;
    }
    s.check("group-basis trace delta rule n=" + std::to_string(n), ok);
  }
  for (int n = 1; n <= nmax; ++n)
    for (auto& [sigma, rho] : builtin_pairs(n, guards)) {
      CenterObject w = build_w(sigma, rho);
      CycPoly want = CycPoly::falling_factorial(n)
                         .scaled(Rational(1, static_cast<unsigned long>(rho.group.size())))
                         .scaled(rho.trace_at_identity());
      s.check("dimension " + w.descriptor, dimension(w) == want);
    }
}

int cmd_verify(const std::string& suite, int nmax, const CommonOptions& opt) {
  SuiteRunner s;
  if (suite == "naturality" || suite == "all") suite_naturality(s, nmax, opt.guards);
  if (suite == "twist" || suite == "all") suite_twist(s, nmax, opt.guards);
  if (suite == "dims" || suite == "all") suite_dims(s, nmax, opt.guards);
  if (suite == "oracles" || suite == "all") suite_oracles(s, nmax, opt.links, opt.guards);
  std::cout << (s.failures ? "FAILURES: " + std::to_string(s.failures) : "all checks passed")
            << "\n";
  return s.failures ? 4 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact ribbon link polynomials from the interpolated symmetric-group center"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string table_name, suite_name = "all";
  int verify_n = 3, oracle_n = 0;

  CLI::App* inv = app.add_subcommand("invariant", "evaluate link polynomials");
  inv->add_option("--object", opt.objects, "object descriptor, e.g. W[mu=(2); rho=trivial]")
      ->required();
  inv->add_option("--link", opt.links, "link spec, e.g. torus:2,-3")->required();
  inv->add_flag("--normalize", opt.normalize, "divide by the object dimension");
  inv->add_option("--format", opt.format, "text|json|csv");
  inv->add_flag("--strict-verify", opt.strict, "check naturality of every built object");
  inv->add_option("--at", opt.at, "evaluate the polynomial at an integer t")
      ->each([&opt](const std::string&) { opt.has_at = true; });
  add_guard_flags(inv, opt.guards);

  CLI::App* dims = app.add_subcommand("dims", "print object dimensions");
  dims->add_option("--object", opt.objects)->required();
  dims->add_option("--format", opt.format, "text|json");
  add_guard_flags(dims, opt.guards);

  CLI::App* table = app.add_subcommand("table", "recompute a reference table");
  table->add_option("name", table_name, "table1|table2|table3")->required();
  add_guard_flags(table, opt.guards);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite_name, "naturality|twist|dims|oracles|all");
  verify->add_option("--n", verify_n, "largest n");
  verify->add_option("--links", opt.links, "links for the oracle suite");
  add_guard_flags(verify, opt.guards);

  CLI::App* oracle = app.add_subcommand("oracle", "finite-scale oracle comparisons");
  oracle->add_option("--object", opt.objects, "W descriptors to compare");
  oracle->add_option("--link", opt.links, "links (defaults to the small torus set)");
  oracle->add_option("--n", oracle_n, "also compare P_n against tuple counts");
  add_guard_flags(oracle, opt.guards);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (inv->parsed()) return cmd_invariant(opt);
    if (dims->parsed()) return cmd_dims(opt);
    if (table->parsed()) return cmd_table(table_name, opt);
    if (verify->parsed()) return cmd_verify(suite_name, verify_n, opt);
    if (oracle->parsed()) return cmd_oracle(opt, oracle_n);
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const guard_error& e) {
    std::cerr << "guard: " << e.what() << "\n";
    return 3;
  } catch (const verify_error& e) {
    std::cerr << "verification: " << e.what() << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
