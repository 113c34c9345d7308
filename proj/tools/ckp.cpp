#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <omp.h>

#include "ckp/bosonize.hpp"
#include "ckp/hwv.hpp"
#include "ckp/json_io.hpp"
#include "ckp/operators.hpp"
#include "ckp/qseries.hpp"
#include "ckp/symplectic.hpp"

using namespace ckp;

namespace {

struct Check {
  std::string name;
  bool pass = false;
  std::string expected;
  std::string actual;
};

struct Report {
  std::string suite;
  std::vector<Check> checks;
  json extra = json::object();

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  json to_json() const {
    json checks_json = json::array();
    for (const auto& c : checks)
      checks_json.push_back({{"name", c.name}, {"pass", c.pass}, {"expected", c.expected}, {"actual", c.actual}});
    json out = {{"schema", 1}, {"suite", suite}, {"checks", checks_json}, {"pass", pass()}};
    for (auto it = extra.begin(); it != extra.end(); ++it) out[it.key()] = it.value();
    return out;
  }

  std::string table() const {
    std::string out = "suite: " + suite + "\n";
    for (const auto& c : checks) {
      out += (c.pass ? "  pass  " : "  FAIL  ") + c.name;
      if (!c.pass) out += "  expected " + c.expected + ", got " + c.actual;
      out += "\n";
    }
    out += pass() ? "overall: pass\n" : "overall: FAIL\n";
    return out;
  }
};

void check_eq(Report& r, const std::string& name, const FockVector& got, const FockVector& want) {
  r.checks.push_back({name, got == want, want.str(), got.str()});
}

void check_true(Report& r, const std::string& name, bool ok, const std::string& detail = "") {
  r.checks.push_back({name, ok, "true", ok ? "true" : (detail.empty() ? "false" : detail)});
}

int emit(const Report& r, const std::string& format, const std::string& output_path) {
  std::string text = format == "json" ? r.to_json().dump(2) + "\n" : r.table();
  if (output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(output_path);
    if (!f) {
      std::cerr << "cannot write " << output_path << "\n";
      return 2;
    }
    f << text;
  }
  return r.pass() ? 0 : 1;
}

std::vector<FockVector> hwv_vectors(long max_d2, bool parallel) {
  std::vector<FockVector> out;
  for (const auto& rep : hwv_all(max_d2, parallel))
    for (const auto& v : rep.basis) out.push_back(v);
  return out;
}

int run_hwv(long max_d2, bool parallel, const std::string& format, const std::string& output_path) {
  auto reports = hwv_all(max_d2, parallel);
  Report r;
  r.suite = "hwv";
  json degrees = json::array();
  for (const auto& rep : reports) {
    json basis = json::array();
    for (const auto& v : rep.basis) basis.push_back(to_json(v));
    degrees.push_back({{"degree", format_half_integer(rep.degree_doubled)},
                       {"dimension", rep.dimension},
                       {"charges", rep.charges},
                       {"basis", basis}});
    bool ok = true;
    for (const auto& v : rep.basis) ok = ok && is_hwv(v);
    check_true(r, "degree " + format_half_integer(rep.degree_doubled) + " basis verified (dim " +
                      std::to_string(rep.dimension) + ")",
               ok);
  }
  r.extra["degrees"] = degrees;
  if (format == "table") {
    std::string text = "degree  dimension  charges\n";
    for (const auto& rep : reports) {
      text += format_half_integer(rep.degree_doubled) + "\t" + std::to_string(rep.dimension) + "\t";
      for (size_t i = 0; i < rep.charges.size(); ++i)
        text += (i ? "," : "") + std::to_string(rep.charges[i]);
      text += "\n";
    }
    if (output_path.empty())
      std::cout << text;
    else
      std::ofstream(output_path) << text;
    return r.pass() ? 0 : 1;
  }
  return emit(r, format, output_path);
}

int run_char(long order2, bool bivariate, const std::string& format, const std::string& output_path) {
  Report r;
  r.suite = "char";
  QSeries product = fock_character(order2);
  QSeries counted = enumerated_character(order2);
  check_true(r, "character product matches graded dimension count", product == counted);
  QSeries hw = hwv_character(order2);
  bool ptdo_ok = true;
  for (long d = 0; d <= order2; ++d)
    ptdo_ok = ptdo_ok && (long long)enumerate_ptdo(d).size() == hw.coeff(d);
  check_true(r, "highest weight character counts triangular-plus-distinct-odd partitions", ptdo_ok);
  json coeffs = json::array();
  for (long e = 0; e <= order2; ++e)
    coeffs.push_back({{"degree", format_half_integer(e)},
                      {"dimension", product.coeff(e)},
                      {"hwv_dimension", hw.coeff(e)}});
  r.extra["coefficients"] = coeffs;
  if (bivariate) {
    BivariateSeries bp = fock_character_bivariate(order2);
    check_true(r, "bivariate character matches charge-resolved count", bp == enumerated_character_bivariate(order2));
    check_true(r, "z = 1 specialization collapses to the character", bp.at_z_one() == product);
  }
  return emit(r, format, output_path);
}

int run_identities(long order, const std::string& format, const std::string& output_path) {
  Report r;
  r.suite = "identities";
  check_true(r, "Jacobi triple product at order " + std::to_string(order), jacobi_triple_check(order));
  check_true(r, "triangular-number identity at order " + std::to_string(order + 5),
             triangular_identity_check(order + 5));
  long order2 = 2 * order;
  QSeries even = QSeries::one(order2);
  for (long i = 1; 4 * i <= order2; ++i) {
    QSeries f = QSeries::one(order2);
    f.add(4 * i, -1);
    even = even * f;
  }
  check_true(r, "character factorization through the even Euler product",
             hwv_character(order2) * even.inverse() == fock_character(order2));
  return emit(r, format, output_path);
}

int run_symplectic(long max_d2, long max_mode, const std::string& format, const std::string& output_path) {
  Report r;
  r.suite = "symplectic-check";
  auto vectors = hwv_vectors(max_d2, false);
  bool anti = true, sq = true;
  for (long m = -max_mode; m <= max_mode && anti && sq; ++m)
    for (long n = -max_mode; n <= max_mode && anti && sq; ++n)
      for (const auto& v : vectors) {
        FockVector bg = hbeta_mode(m, hgamma_mode(n, v)) + hgamma_mode(n, hbeta_mode(m, v));
        FockVector rhs = (m + n == 0) ? Rational(m) * v : FockVector{};
        anti = anti && bg == rhs;
        sq = sq && (hbeta_mode(m, hbeta_mode(n, v)) + hbeta_mode(n, hbeta_mode(m, v))).is_zero() &&
             (hgamma_mode(m, hgamma_mode(n, v)) + hgamma_mode(n, hgamma_mode(m, v))).is_zero();
        if (!anti || !sq) break;
      }
  check_true(r, "anticommutator {H^beta_m, H^gamma_n} = m delta", anti);
  check_true(r, "squares of like modes anticommute to zero", sq);

  bool chains = true;
  FockVector b = FockVector::vacuum(), g = FockVector::vacuum();
  for (int n = 1; n <= 4; ++n) {
    b = hbeta_mode(-n, b);
    g = hgamma_mode(-n, g);
    std::vector<Monomial::Part> bp = {{-3, n}}, gp = {{-1, n}};
    chains = chains && b == FockVector(Monomial(bp), 1) && g == FockVector(Monomial(gp), 1);
  }
  check_true(r, "negative modes generate the pure chi ladders", chains);

  bool preserved = true;
  for (const auto& v : vectors)
    for (long n = -max_mode; n <= max_mode; ++n) {
      FockVector hb = hbeta_mode(n, v), hg = hgamma_mode(n, v);
      if (!hb.is_zero()) preserved = preserved && is_hwv(hb);
      if (!hg.is_zero()) preserved = preserved && is_hwv(hg);
    }
  check_true(r, "modes preserve the highest weight subspace", preserved);

  FockVector central = hwv_virasoro_mode(2, hwv_virasoro_mode(-2, FockVector::vacuum())) -
                       hwv_virasoro_mode(-2, hwv_virasoro_mode(2, FockVector::vacuum())) -
                       Rational(4) * hwv_virasoro_mode(0, FockVector::vacuum());
  check_eq(r, "central charge -2 signature on the vacuum", central, Rational(-1) * FockVector::vacuum());
  return emit(r, format, output_path);
}

int run_bosonize(long max_weight, long max_mode_doubled, const std::string& format,
                 const std::string& output_path) {
  Report r;
  r.suite = "bosonize-check";
  int mm = (int)max_mode_doubled;
  if (mm % 2 == 0) mm -= 1;  // largest odd doubled index inside the bound
  // equivariance and charge compatibility over the graded basis
  bool equi = true, charge_ok = true;
  std::string first_fail;
  for (long d = 0; d <= 2 * max_weight; ++d) {
    for (const auto& m : graded_basis(d).monomials) {
      FockVector v(m, 1);
      PolyState img = intertwiner(v);
      for (const auto& [pm, c] : img.terms()) charge_ok = charge_ok && pm.lattice == m.charge();
      for (int ad = -mm; ad <= mm; ad += 2) {
        PolyState lhs = intertwiner(apply_mode(HalfIndex(ad), v));
        PolyState rhs = chi_bos_mode(HalfIndex(ad), img);
        if (!(lhs == rhs)) {
          equi = false;
          if (first_fail.empty())
            first_fail = "mode " + format_half_integer(ad) + " on " + m.str();
        }
      }
    }
  }
  check_true(r, "intertwiner equivariance", equi, first_fail);
  check_true(r, "lattice charge equals the Fock charge", charge_ok);

  // chi commutation law on the intertwiner image, weight truncated
  bool comm = true;
  std::vector<PolyState> states;
  for (long d = 0; d <= max_weight; ++d)
    for (const auto& m : graded_basis(d).monomials) states.push_back(intertwiner(FockVector(m, 1)));
  for (int ad = -mm; ad <= mm && comm; ad += 2) {
    for (int bd = -mm; bd <= mm && comm; bd += 2) {
      for (const auto& s : states) {
        PolyState lhs = chi_bos_mode(HalfIndex(ad), chi_bos_mode(HalfIndex(bd), s)) -
                        chi_bos_mode(HalfIndex(bd), chi_bos_mode(HalfIndex(ad), s));
        PolyState rhs;
        if (ad == -bd) {
          rhs = s;
          rhs *= GaussianRational((((ad - 1) / 2) % 2 == 0) ? 1 : -1);
        }
        if (!(lhs == rhs)) {
          comm = false;
          break;
        }
      }
    }
  }
  check_true(r, "bosonized modes satisfy the chi commutation law", comm);
  return emit(r, format, output_path);
}

int run_hirota(const std::string& tau, const std::string& format, const std::string& output_path) {
  Report r;
  r.suite = "hirota";
  FockVector v;
  if (tau == "vacuum") {
    v = FockVector::vacuum();
  } else if (tau == "chi") {
    std::vector<Monomial::Part> p = {{-1, 1}};
    v = FockVector(Monomial(p), 1);
  } else {
    std::cerr << "unknown --tau value: " << tau << " (expected vacuum or chi)\n";
    return 2;
  }
  TensorVector res = hirota_residue(v, v);
  if (tau == "vacuum") {
    check_true(r, "residue on the vacuum pair vanishes", res.is_zero());
  } else {
    TensorVector expected;
    std::vector<Monomial::Part> sq = {{-1, 2}};
    expected.add_term(Monomial{}, Monomial(sq), 1);
    expected.add_term(Monomial(sq), Monomial{}, -1);
    check_true(r, "residue on the chi pair matches the two-term value", res == expected);
  }
  TensorPolyState bos = hirota_residue_bos(intertwiner(v), intertwiner(v));
  check_true(r, "bosonized residue agrees through the intertwiner", bos == intertwiner(res));
  r.extra["residue"] = to_json(res);
  return emit(r, format, output_path);
}

}  // namespace

int main(int argc, char** argv) {
  if (const char* t = std::getenv("CKP_MAX_THREADS")) {
    int n = std::atoi(t);
    if (n > 0) omp_set_num_threads(n);
  }

  CLI::App app{"Exact computations in the chi Fock space: module decompositions, "
               "character identities, symplectic fermion modes, and the bosonized realization"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string output_path;
  bool parallel = false;
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"json", "table"}));
  app.add_option("-o,--output", output_path, "write the report to a file instead of stdout");
  app.add_flag("--parallel", parallel, "solve independent degrees in parallel");
  app.fallthrough();

  std::string max_degree = "9/2", order = "10", max_mode = "3", max_weight = "4", tau = "vacuum";
  bool bivariate = false;

  auto* hwv_cmd = app.add_subcommand("hwv", "decompose the graded components into highest weight data");
  hwv_cmd->add_option("--max-degree", max_degree, "largest degree, e.g. 13/2");

  auto* char_cmd = app.add_subcommand("char", "characters and their enumerative oracles");
  char_cmd->add_option("--order", order, "q-expansion order, e.g. 21/2");
  char_cmd->add_flag("--bivariate", bivariate, "track the charge variable z as well");

  auto* id_cmd = app.add_subcommand("identities", "q-series identity suite");
  id_cmd->add_option("--order", order, "integer q-expansion order");

  auto* sym_cmd = app.add_subcommand("symplectic-check", "symplectic fermion mode relations");
  sym_cmd->add_option("--max-degree", max_degree, "highest weight vectors up to this degree");
  sym_cmd->add_option("--max-mode", max_mode, "mode index bound");

  auto* bos_cmd = app.add_subcommand("bosonize-check", "bosonized realization relations");
  bos_cmd->add_option("--max-weight", max_weight, "variable weight bound");
  bos_cmd->add_option("--max-mode", max_mode, "half-integer mode bound, e.g. 5/2");

  auto* hir_cmd = app.add_subcommand("hirota", "Hirota bilinear residue");
  hir_cmd->add_option("--tau", tau, "test vector: vacuum or chi");

  CLI11_PARSE(app, argc, argv);

  try {
    if (hwv_cmd->parsed()) return run_hwv(parse_half_integer(max_degree), parallel, format, output_path);
    if (char_cmd->parsed()) return run_char(parse_half_integer(order), bivariate, format, output_path);
    if (id_cmd->parsed()) {
      long o2 = parse_half_integer(order);
      if (o2 % 2 != 0) throw std::invalid_argument("identities --order must be an integer");
      return run_identities(o2 / 2, format, output_path);
    }
    if (sym_cmd->parsed()) {
      long m2 = parse_half_integer(max_mode);
      if (m2 % 2 != 0) throw std::invalid_argument("symplectic-check --max-mode must be an integer");
      return run_symplectic(parse_half_integer(max_degree), m2 / 2, format, output_path);
    }
    if (bos_cmd->parsed()) {
      long w2 = parse_half_integer(max_weight);
      if (w2 % 2 != 0) throw std::invalid_argument("bosonize-check --max-weight must be an integer");
      return run_bosonize(w2 / 2, parse_half_integer(max_mode), format, output_path);
    }
    if (hir_cmd->parsed()) return run_hirota(tau, format, output_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
