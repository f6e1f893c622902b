#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "bilv/dynamics.hpp"
#include "bilv/indexsets.hpp"
#include "bilv/integrals.hpp"
#include "bilv/jsonio.hpp"
#include "bilv/lax.hpp"
#include "bilv/poisson.hpp"
#include "bilv/verify.hpp"
#include "bilv/veselov.hpp"

namespace {

using nlohmann::json;

void write_output(const std::string& path, const std::string& content) {
  if (path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw bilv::BadInput("cannot open output file " + path);
  out << content;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::vector<bilv::Rational> parse_rational_list(const std::string& s, size_t expect, const std::string& what) {
  std::vector<bilv::Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(bilv::rat_parse(item));
  if (out.size() != expect)
    throw bilv::BadInput(what + " needs " + std::to_string(expect) + " comma-separated values");
  return out;
}

std::vector<double> parse_double_list(const std::string& s, size_t expect, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      out.push_back(std::stod(item));
    } catch (const std::exception&) {
      throw bilv::BadInput(what + ": cannot parse '" + item + "' as a number");
    }
  }
  if (out.size() != expect)
    throw bilv::BadInput(what + " needs " + std::to_string(expect) + " comma-separated values");
  return out;
}

bilv::ConstantStructure structure_from_file(int k, const std::string& path) {
  bilv::BFile bf = bilv::bfile_load(path);
  if (bf.k != k) throw bilv::BadInput("b-file is for k=" + std::to_string(bf.k));
  return bilv::ConstantStructure::from_rationals(k, bf.params);
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

int cmd_sets(int k, int ell, bool prime) {
  std::vector<bilv::IndexTuple> tuples;
  for (const auto& m : bilv::enumerate_S(k, ell))
    tuples.push_back(prime ? bilv::complement(k, m) : m);
  std::sort(tuples.begin(), tuples.end());
  for (const auto& t : tuples) {
    for (size_t i = 0; i < t.size(); ++i) std::cout << (i ? " " : "") << t[i];
    std::cout << "\n";
  }
  return 0;
}

int cmd_jacobi(int k, const std::string& b_file, const std::string& out) {
  auto violations = bilv::jacobi_violations(structure_from_file(k, b_file));
  json rep;
  rep["violations"] = json::array();
  for (const auto& t : violations) rep["violations"].push_back({t[0], t[1], t[2]});
  write_output(out, dump(rep));
  return violations.empty() ? 0 : 1;
}

int cmd_integrals(int k, const std::string& b_file, const std::string& c_str, const std::string& free_str,
                  const std::string& out) {
  bilv::ConstantStructure b = bilv::ConstantStructure::symbolic(k);
  if (!b_file.empty()) {
    b = structure_from_file(k, b_file);
  } else if (!c_str.empty()) {
    auto c = parse_rational_list(c_str, static_cast<size_t>(2 * k + 1), "--c");
    b = bilv::solve_b_from_c(k, c, bilv::rat_parse(free_str));
  }
  auto Ks = bilv::K_b_list(k, b);
  json rep;
  rep["k"] = k;
  rep["route"] = "expansion";
  rep["degrees"] = json::array();
  rep["integrals"] = json::array();
  for (const auto& K : Ks) {
    rep["degrees"].push_back(K.degree_of_kind(bilv::VarKind::X));
    rep["integrals"].push_back(bilv::poly_to_json(K));
  }
  write_output(out, dump(rep));
  return 0;
}

int cmd_lax(int k, const std::string& b_file, const std::string& check, const std::string& out) {
  bilv::ConstantStructure b =
      b_file.empty() ? bilv::ConstantStructure::symbolic(k) : structure_from_file(k, b_file);
  json rep;
  rep["nonzero_entries"] = json::array();
  if (check == "residual") {
    bilv::LaurentMatrix res = bilv::lax_residual(k, b);
    for (size_t i = 0; i < res.size(); ++i)
      for (size_t j = 0; j < res.size(); ++j)
        if (!res[i][j].is_zero()) rep["nonzero_entries"].push_back({i + 1, j + 1});
  } else {
    bilv::LaurentPoly diff = check == "det" ? bilv::det_lax(k, b) - bilv::det_lax_rhs(k, b)
                                            : bilv::char_poly_lax(k, b) - bilv::char_poly_rhs(k, b);
    for (int o = diff.min_offset(); !diff.is_zero() && o <= diff.max_offset(); ++o)
      if (!diff.coeff_at(o).is_zero()) rep["nonzero_entries"].push_back(o);
  }
  bool ok = rep["nonzero_entries"].empty();
  rep["ok"] = ok;
  write_output(out, dump(rep));
  return ok ? 0 : 1;
}

int cmd_simulate(int k, const std::string& c_str, const std::string& free_str, const std::string& x0_str,
                 double t_end, double rel_tol, double abs_tol, int stride, const std::string& out,
                 const std::string& out_format) {
  size_t n = static_cast<size_t>(2 * k + 1);
  auto c = parse_rational_list(c_str, n, "--c");
  bilv::SystemSpec spec = bilv::SystemSpec::make(k, c, bilv::rat_parse(free_str));
  auto x0 = parse_double_list(x0_str, n, "--x0");
  bilv::Trajectory traj = bilv::integrate(spec, x0, t_end, rel_tol, abs_tol, stride);
  auto Ks = bilv::compiled_integrals(spec);

  if (out_format == "csv") {
    std::ostringstream os;
    os << "t";
    for (size_t i = 1; i <= n; ++i) os << ",x" << i;
    for (size_t l = 0; l < Ks.size(); ++l) os << ",K" << l;
    os << "\n";
    for (size_t s = 0; s < traj.times.size(); ++s) {
      os << format_double(traj.times[s]);
      for (size_t i = 0; i < n; ++i) os << "," << format_double(traj.states[s][i]);
      for (const auto& K : Ks) os << "," << format_double(K.eval(traj.states[s]));
      os << "\n";
    }
    write_output(out, os.str());
  } else {
    bilv::DriftReport drift = bilv::drift_report(spec, traj);
    json rep;
    rep["k"] = k;
    rep["t"] = traj.times;
    rep["x"] = traj.states;
    json kv = json::array();
    for (size_t s = 0; s < traj.states.size(); ++s) {
      json row = json::array();
      for (const auto& K : Ks) row.push_back(K.eval(traj.states[s]));
      kv.push_back(row);
    }
    rep["K"] = kv;
    rep["accepted_steps"] = traj.accepted_steps;
    rep["rejected_steps"] = traj.rejected_steps;
    rep["drift"] = {{"initial", drift.initial}, {"max_rel_drift", drift.max_rel_drift}};
    write_output(out, dump(rep));
  }
  return 0;
}

int cmd_vs_check(int k, const std::string& b_file, const std::string& out) {
  bilv::ConstantStructure b =
      b_file.empty() ? bilv::ConstantStructure::symbolic(k) : structure_from_file(k, b_file);
  json rep;
  bool ok = true;
  rep["poisson_map"] = bilv::vs_poisson_map_check(k, b);
  rep["trace_identity"] = bilv::vs_equivalence_check(k, b);
  ok = rep["poisson_map"].get<bool>() && rep["trace_identity"].get<bool>();
  if (k <= 2) {
    bilv::VsPerSiteReport per_site = bilv::vs_per_site_check(k, b);
    rep["per_site_lax"] = per_site.ok();
    ok = ok && per_site.ok();
  } else {
    rep["per_site_lax"] = "skipped";
  }
  write_output(out, dump(rep));
  return ok ? 0 : 1;
}

int cmd_verify(int k, uint64_t seed, int threads, const std::string& out) {
  auto results = bilv::run_all(k, seed, threads);
  size_t passed = 0;
  std::ostream& human = (out == "-") ? std::cerr : std::cout;
  for (const auto& r : results) {
    human << (r.ok ? "ok   " : "FAIL ") << r.name << ": " << r.detail << "\n";
    if (r.ok) ++passed;
  }
  human << passed << "/" << results.size() << " checks passed for k=" << k << "\n";
  json rep;
  rep["k"] = k;
  rep["seed"] = seed;
  rep["passed"] = passed;
  rep["failed"] = results.size() - passed;
  rep["checks"] = json::array();
  for (const auto& r : results) rep["checks"].push_back({{"name", r.name}, {"ok", r.ok}, {"detail", r.detail}});
  write_output(out, dump(rep));
  return passed == results.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Deformed cyclic Lotka-Volterra toolkit"};
  app.require_subcommand(1);

  int k = 1, ell = 0, stride = 1, threads = 0;
  bool prime = false;
  uint64_t seed = 20240601;
  double t_end = 10.0, rel_tol = 1e-10, abs_tol = 1e-10;
  std::string b_file, c_str, free_str = "0", x0_str, check = "residual";
  std::string out = "-", out_format = "csv", verify_out = "verify-report.json";

  auto* sets = app.add_subcommand("sets", "List the index sets S_ell (or their complements)");
  sets->add_option("--k", k, "half-dimension k")->required()->check(CLI::PositiveNumber);
  sets->add_option("--ell", ell, "which S_ell")->required()->check(CLI::NonNegativeNumber);
  sets->add_flag("--prime", prime, "list the complement family S'_ell instead");

  auto* jacobi = app.add_subcommand("jacobi", "Jacobi-identity violations of the deformed bracket");
  jacobi->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  jacobi->add_option("--b-file", b_file, "constant structure JSON")->required()->check(CLI::ExistingFile);
  jacobi->add_option("--out", out, "output path, - for stdout");

  auto* integrals = app.add_subcommand("integrals", "Emit the family K_0^b..K_k^b as JSON");
  integrals->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  auto* ib = integrals->add_option("--b-file", b_file)->check(CLI::ExistingFile);
  auto* ic = integrals->add_option("--c", c_str, "deformation constants, comma-separated");
  integrals->add_option("--free", free_str, "free chain constant used with --c");
  integrals->add_option("--out", out, "output path, - for stdout");
  ib->excludes(ic);

  auto* lax = app.add_subcommand("lax", "Check a Lax identity symbolically");
  lax->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  lax->add_option("--b-file", b_file)->check(CLI::ExistingFile);
  lax->add_option("--check", check)->check(CLI::IsMember({"residual", "det", "charpoly"}));
  lax->add_option("--out", out, "output path, - for stdout");

  auto* simulate = app.add_subcommand("simulate", "Integrate the deformed system and track the integrals");
  simulate->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  simulate->add_option("--c", c_str)->required();
  simulate->add_option("--free", free_str, "free chain constant");
  simulate->add_option("--x0", x0_str)->required();
  simulate->add_option("--t-end", t_end)->check(CLI::PositiveNumber);
  simulate->add_option("--rel-tol", rel_tol)->check(CLI::PositiveNumber);
  simulate->add_option("--abs-tol", abs_tol)->check(CLI::PositiveNumber);
  simulate->add_option("--stride", stride)->check(CLI::PositiveNumber);
  simulate->add_option("--out", out, "output path, - for stdout");
  simulate->add_option("--out-format", out_format)->check(CLI::IsMember({"csv", "json"}));

  auto* vs = app.add_subcommand("vs-check", "Dressing-chain equivalence checks");
  vs->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  vs->add_option("--b-file", b_file)->check(CLI::ExistingFile);
  vs->add_option("--out", out, "output path, - for stdout");

  auto* verify = app.add_subcommand("verify", "Run the full property suite for one k");
  verify->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "seed for the deterministic samplers");
  verify->add_option("--threads", threads, "worker cap, 0 = hardware (BILV_THREADS also caps)");
  verify->add_option("--out", verify_out, "report path, - for stdout");

  try {
    app.parse(argc, argv);
    if (sets->parsed()) {
      if (ell > k) throw bilv::BadInput("--ell must be at most k");
      return cmd_sets(k, ell, prime);
    }
    if (jacobi->parsed()) return cmd_jacobi(k, b_file, out);
    if (integrals->parsed()) return cmd_integrals(k, b_file, c_str, free_str, out);
    if (lax->parsed()) return cmd_lax(k, b_file, check, out);
    if (simulate->parsed())
      return cmd_simulate(k, c_str, free_str, x0_str, t_end, rel_tol, abs_tol, stride, out, out_format);
    if (vs->parsed()) return cmd_vs_check(k, b_file, out);
    if (verify->parsed()) return cmd_verify(k, seed, threads, verify_out);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const bilv::BadInput& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const bilv::DomainViolation& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const bilv::ConstraintViolation& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const bilv::DimensionMismatch& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
}
