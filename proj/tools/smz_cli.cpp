#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "smz/enumerate.hpp"
#include "smz/identities.hpp"
#include "smz/io.hpp"
#include "smz/qsym.hpp"
#include "smz/specials.hpp"
#include "smz/words.hpp"
#include "smz/zeta.hpp"

using nlohmann::json;
using namespace smz;

namespace {

// Bad input or a resource cap; exit status 2.
struct InputError : std::runtime_error {
  json instance;
  InputError(const std::string& what, json inst = nullptr) : std::runtime_error(what), instance(std::move(inst)) {}
};

long env_cap(const char* name, long fallback) {
  const char* v = std::getenv(name);
  if (!v || !*v) return fallback;
  try {
    return std::stol(v);
  } catch (...) {
    throw InputError(std::string("environment variable ") + name + " is not an integer");
  }
}

long max_N() { return env_cap("SMZ_MAX_N", 1'000'000); }
long max_exact_N() { return env_cap("SMZ_MAX_EXACT_N", 2000); }
long max_patterns() { return env_cap("SMZ_MAX_PATTERNS", default_pattern_cap()); }

void check_N(long N, bool exact, const json& instance) {
  if (N < 0) throw InputError("N must be non-negative", instance);
  long cap = exact ? max_exact_N() : max_N();
  if (N > cap)
    throw InputError("N=" + std::to_string(N) + " exceeds the cap " + std::to_string(cap) +
                         (exact ? " (SMZ_MAX_EXACT_N)" : " (SMZ_MAX_N)"),
                     instance);
}

void emit(const json& j) { std::cout << j.dump() << '\n'; }

// A file path, or inline JSON when the text starts with { or [.
json load_json(const std::string& arg) {
  auto pos = arg.find_first_not_of(" \t\n");
  if (pos != std::string::npos && (arg[pos] == '{' || arg[pos] == '[')) {
    try {
      return json::parse(arg);
    } catch (const json::exception& e) {
      throw InputError(std::string("malformed inline JSON: ") + e.what());
    }
  }
  std::ifstream in(arg);
  if (!in) throw InputError("cannot open " + arg);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InputError("malformed JSON in " + arg + ": " + e.what());
  }
}

Tableau<int> load_tableau(const std::string& arg) {
  json j = load_json(arg);
  try {
    return tableau_from_json(j);
  } catch (const std::exception& e) {
    throw InputError(e.what(), j);
  }
}

DiagMap parse_diag(const std::string& arg) {
  json j = load_json(arg);
  try {
    return diag_from_json(j);
  } catch (const std::exception& e) {
    throw InputError(e.what(), j);
  }
}

RimKind parse_kind(const std::string& k) {
  if (k == "H") return RimKind::H;
  if (k == "E") return RimKind::E;
  throw InputError("kind must be H or E, got " + k);
}

std::vector<RimKind> parse_kinds(const std::string& k) {
  if (k == "both") return {RimKind::H, RimKind::E};
  return {parse_kind(k)};
}

// "1..4" or "3"
std::pair<int, int> parse_range(const std::string& text) {
  try {
    auto dots = text.find("..");
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::logic_error&) {
    throw InputError("expected a range like 1..4, got '" + text + "'");
  }
}

Composition parse_composition(const std::string& text) {
  Composition c;
  std::string t = text;
  for (char& ch : t)
    if (ch == ',' || ch == '[' || ch == ']') ch = ' ';
  std::istringstream is(t);
  int v;
  while (is >> v) c.push_back(v);
  if (!is.eof() || c.empty()) throw InputError("malformed composition '" + text + "'");
  for (int x : c)
    if (x < 1) throw InputError("composition parts must be positive: '" + text + "'");
  return c;
}

// Tableau, or {"terms": [{"coeff": k, "tableau": ...}, ...]}.
ZetaCombination load_side(const json& j) {
  ZetaCombination c;
  try {
    if (j.is_object() && j.contains("terms")) {
      for (const auto& term : j.at("terms")) c.emplace_back(term.value("coeff", 1L), tableau_from_json(term.at("tableau")));
    } else {
      c.emplace_back(1, tableau_from_json(j));
    }
  } catch (const InputError&) {
    throw;
  } catch (const std::exception& e) {
    throw InputError(e.what(), j);
  }
  if (c.empty()) throw InputError("empty side in duality pair", j);
  return c;
}

IdentityReport float_report(std::string identity, std::string shape, Real lhs, Real rhs, Real tol) {
  auto r = make_report(std::move(identity), std::move(shape), Scalar(lhs), Scalar(rhs));
  r.equal = r.abs_diff <= tol * std::max<Real>(1, std::abs(lhs));
  return r;
}

Matrix<Real> to_real(const Matrix<Rational>& m) {
  Matrix<Real> out;
  for (const auto& row : m) {
    std::vector<Real> r;
    for (const auto& x : row) r.push_back(smz::to_real(x));
    out.push_back(std::move(r));
  }
  return out;
}

int emit_reports(const std::vector<IdentityReport>& reps) {
  for (const auto& r : reps) {
    emit(r.to_json());
    if (!r.equal) return 1;  // stop at the first failure
  }
  return 0;
}

std::string markdown_table(const std::vector<ConstantTableRow>& rows, int k0) {
  std::ostringstream os;
  os << "| lambda |";
  for (std::size_t k = 0; k < rows.front().values.size(); ++k) os << " s = " << 2 * (k0 + static_cast<int>(k)) << " |";
  os << "\n|---|";
  for (std::size_t k = 0; k < rows.front().values.size(); ++k) os << "---|";
  os << "\n";
  for (const auto& r : rows) {
    os << "| (";
    for (int i = 1; i <= r.lambda.length(); ++i) os << (i > 1 ? "," : "") << r.lambda.part(i);
    os << ") |";
    for (const auto& v : r.values) os << " " << v.str() << " |";
    os << "\n";
  }
  return os.str();
}

// Flat JSON object whose keys become --key value flags unless already given.
std::vector<std::string> expand_config(std::vector<std::string> args) {
  std::string path;
  std::vector<std::string> rest;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) {
      path = args[++i];
    } else if (args[i].rfind("--config=", 0) == 0) {
      path = args[i].substr(9);
    } else {
      rest.push_back(args[i]);
    }
  }
  if (path.empty()) return rest;
  json cfg = load_json(path);
  if (!cfg.is_object()) throw InputError("config file must hold a JSON object", cfg);
  std::set<std::string> given;
  for (const auto& a : rest)
    if (a.rfind("--", 0) == 0) given.insert(a.substr(2, a.find('=') == std::string::npos ? std::string::npos : a.find('=') - 2));
  for (auto it = cfg.begin(); it != cfg.end(); ++it) {
    if (given.count(it.key())) continue;
    const json& v = it.value();
    if (v.is_boolean()) {
      if (v.get<bool>()) rest.push_back("--" + it.key());
      continue;
    }
    rest.push_back("--" + it.key());
    rest.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  }
  return rest;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur multiple zeta values: evaluation, determinant identities, QSym and duality", "smz_cli"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string config_path;
  app.add_option("--config", config_path, "JSON file of flag values; explicit flags win");
  int jobs = 1;
  app.add_option("--jobs,-j", jobs, "worker threads for sweeps")->check(CLI::PositiveNumber);

  std::function<int()> action;

  // eval
  auto* eval = app.add_subcommand("eval", "truncated Schur multiple zeta value");
  std::string tableau_arg, backend = "exact";
  long N = 0;
  eval->add_option("--tableau", tableau_arg, "tableau JSON file or inline JSON")->required();
  eval->add_option("--N", N, "truncation bound")->required();
  eval->add_option("--backend", backend)->check(CLI::IsMember({"exact", "float"}));
  eval->callback([&] {
    action = [&] {
      auto t = load_tableau(tableau_arg);
      const bool exact = backend == "exact";
      check_N(N, exact, {{"tableau", tableau_str(t)}, {"N", N}});
      json out{{"tableau", tableau_str(t)}, {"N", N}, {"backend", backend}};
      if (exact) {
        out["value"] = to_string(smzv_trunc<Rational>(t, N));
      } else {
        Real v = t.shape().is_ribbon() ? smzv_trunc_ribbon<Real>(t, N) : smzv_trunc<Real>(t, N);
        out["value"] = to_string(v);
      }
      emit(out);
      return 0;
    };
  });

  // verify
  auto* verify = app.add_subcommand("verify", "determinant identities at finite truncation");
  verify->require_subcommand(1);
  std::string shape_arg, diag_arg, kind_arg = "both", c_arg, d_arg, suite = "core";
  long M = 0;
  int r = 1, s = 1;
  double vtol = 1e-12;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--N", N, "truncation bound")->required();
    sub->add_option("--backend", backend)->check(CLI::IsMember({"exact", "float"}));
    sub->add_option("--tol", vtol, "relative tolerance for the float backend");
  };
  auto* vjt = verify->add_subcommand("jt", "Jacobi-Trudi, straight or skew");
  vjt->add_option("--shape", shape_arg, "\"4 3 3 2\" or \"3 2 / 1\"")->required();
  vjt->add_option("--diag", diag_arg, "diagonal values, e.g. {\"-1\":2,\"0\":3}")->required();
  vjt->add_option("--kind", kind_arg)->check(CLI::IsMember({"H", "E", "both"}));
  add_common(vjt);
  vjt->callback([&] {
    action = [&] {
      SkewShape sh = parse_shape(shape_arg);
      DiagMap a = parse_diag(diag_arg);
      const bool exact = backend == "exact";
      check_N(N, true, {{"shape", shape_arg}, {"N", N}});
      std::vector<IdentityReport> reps;
      for (RimKind k : parse_kinds(kind_arg)) {
        if (exact) {
          reps.push_back(jacobi_trudi(sh, a, N, k));
        } else {
          auto t = diagonal_tableau(sh, std::map<int, int>(a));
          reps.push_back(float_report(k == RimKind::H ? "jacobi-trudi-H" : "jacobi-trudi-E", sh.str(),
                                      smzv_direct<Real>(t, static_cast<int>(N)), determinant(to_real(jt_matrix(sh, a, N, k))),
                                      vtol));
          reps.back().diag = a;
          reps.back().N = N;
        }
      }
      return emit_reports(reps);
    };
  });
  auto* vg = verify->add_subcommand("giambelli", "Giambelli hook determinant");
  vg->add_option("--shape", shape_arg)->required();
  vg->add_option("--diag", diag_arg)->required();
  add_common(vg);
  vg->callback([&] {
    action = [&] {
      Partition lam = parse_partition(shape_arg);
      DiagMap a = parse_diag(diag_arg);
      check_N(N, true, {{"shape", shape_arg}, {"N", N}});
      if (backend == "exact") return emit_reports({giambelli(lam, a, N)});
      auto t = diagonal_tableau(SkewShape(lam), std::map<int, int>(a));
      auto rep = float_report("giambelli", lam.str(), smzv_direct<Real>(t, static_cast<int>(N)),
                              determinant(to_real(giambelli_matrix(lam, a, N))), vtol);
      rep.diag = a;
      rep.N = N;
      return emit_reports({rep});
    };
  });
  auto* vdc = verify->add_subcommand("dual-cauchy", "dual Cauchy identity on the (s^r) box");
  vdc->add_option("--r", r)->required()->check(CLI::PositiveNumber);
  vdc->add_option("--s", s)->required()->check(CLI::PositiveNumber);
  vdc->add_option("--c", c_arg, "diagonal values for the first family")->required();
  vdc->add_option("--d", d_arg, "diagonal values for the second family")->required();
  vdc->add_option("--M", M, "truncation bound of the second family")->required();
  add_common(vdc);
  vdc->callback([&] {
    action = [&] {
      DiagMap c = parse_diag(c_arg), d = parse_diag(d_arg);
      check_N(N, true, {{"N", N}});
      check_N(M, true, {{"M", M}});
      if (backend == "exact") return emit_reports({dual_cauchy(r, s, c, d, N, M)});
      auto rep = float_report("dual-cauchy", "r=" + std::to_string(r) + " s=" + std::to_string(s),
                              smz::to_real(dual_cauchy_lhs(r, s, c, d, N, M)),
                              determinant(to_real(dual_cauchy_matrix(r, s, c, d, N, M))), vtol);
      rep.diag = c;
      rep.diag2 = d;
      rep.N = N;
      rep.M = M;
      return emit_reports({rep});
    };
  });
  auto* vrim = verify->add_subcommand("rim", "signed rim-decomposition sums");
  vrim->add_option("--shape", shape_arg)->required();
  vrim->add_option("--diag", diag_arg)->required();
  vrim->add_option("--kind", kind_arg)->check(CLI::IsMember({"H", "E", "both"}));
  add_common(vrim);
  vrim->callback([&] {
    action = [&] {
      Partition lam = parse_partition(shape_arg);
      DiagMap a = parse_diag(diag_arg);
      check_N(N, true, {{"shape", shape_arg}, {"N", N}});
      if (backend != "exact") throw InputError("verify rim runs on the exact backend only");
      std::vector<IdentityReport> reps;
      for (RimKind k : parse_kinds(kind_arg)) reps.push_back(rim_sum(lam, a, N, k));
      return emit_reports(reps);
    };
  });
  auto* vsw = verify->add_subcommand("sweep", "run a battery of identity instances");
  vsw->add_option("--suite", suite)->check(CLI::IsMember(suite_names()));
  vsw->add_option("--backend", backend)->check(CLI::IsMember({"exact"}));
  vsw->callback([&] {
    action = [&] {
      auto reps = run_tasks(suite_tasks(suite), jobs);
      int failures = 0;
      for (const auto& rep : reps) failures += !rep.equal;
      int status = emit_reports(reps);
      std::cerr << json{{"suite", suite}, {"instances", reps.size()}, {"failures", failures}}.dump() << '\n';
      return status;
    };
  });

  // tables
  auto* tables = app.add_subcommand("tables", "exact values at constant even arguments");
  int tn = 3;
  std::string krange = "1..4", format = "json";
  tables->add_option("--n", tn, "weight of the partitions")->check(CLI::Range(1, kMaxConstantWeight));
  tables->add_option("--k", krange, "k or k0..k1; the argument is 2k");
  tables->add_option("--format", format)->check(CLI::IsMember({"json", "markdown"}));
  tables->callback([&] {
    action = [&] {
      auto [k0, k1] = parse_range(krange);
      if (k0 < 1 || k1 < k0 || k1 > kMaxConstantK)
        throw InputError("k range must lie in 1.." + std::to_string(kMaxConstantK), krange);
      auto rows = constant_table(tn, k1);
      for (auto& row : rows) row.values.erase(row.values.begin(), row.values.begin() + (k0 - 1));
      if (format == "markdown") {
        std::cout << markdown_table(rows, k0);
        return 0;
      }
      for (const auto& row : rows) {
        json vals = json::array();
        for (std::size_t i = 0; i < row.values.size(); ++i) {
          const auto& v = row.values[i];
          vals.push_back({{"s", 2 * (k0 + static_cast<int>(i))},
                          {"coeff", to_string(v.coeff)},
                          {"pi_power", v.power},
                          {"value", v.str()}});
        }
        emit({{"lambda", row.lambda.parts()}, {"values", vals}});
      }
      return 0;
    };
  });

  // qsym
  auto* qs = app.add_subcommand("qsym", "quasi-symmetric functions in the monomial basis");
  qs->require_subcommand(1);
  std::string expr, a_expr, b_expr, name, comp_arg;
  auto emit_q = [](const QSym& x) {
    json j = x.to_json();
    j["str"] = x.str();
    emit(j);
  };
  auto* qa = qs->add_subcommand("antipode", "antipode of an expression");
  qa->add_option("--expr", expr, "e.g. \"M[2,1,3] - 2 E[1,1]\"")->required();
  qa->callback([&] { action = [&] { emit_q(antipode(parse_qsym(expr))); return 0; }; });
  auto* qsc = qs->add_subcommand("schur", "quasi-symmetric Schur function of a tableau of indices");
  qsc->add_option("--tableau", tableau_arg)->required();
  qsc->callback([&] { action = [&] { emit_q(schur_qsym(load_tableau(tableau_arg))); return 0; }; });
  auto* qp = qs->add_subcommand("product", "quasi-shuffle product");
  qp->add_option("--a", a_expr)->required();
  qp->add_option("--b", b_expr)->required();
  qp->callback([&] { action = [&] { emit_q(parse_qsym(a_expr) * parse_qsym(b_expr)); return 0; }; });
  auto* qi = qs->add_subcommand("identity", "check one identity in QSym");
  const std::vector<std::string> qnames{"antipode-schur", "antipode-formulas", "m-by-e", "e-by-m",
                                        "jt",             "giambelli",         "dual-cauchy", "dual-cauchy-antipode"};
  qi->add_option("--name", name)->required()->check(CLI::IsMember(qnames));
  qi->add_option("--tableau", tableau_arg);
  qi->add_option("--comp", comp_arg, "composition such as 2,1,3");
  qi->add_option("--shape", shape_arg);
  qi->add_option("--diag", diag_arg);
  qi->add_option("--kind", kind_arg)->check(CLI::IsMember({"H", "E", "both"}));
  qi->add_option("--r", r);
  qi->add_option("--s", s);
  qi->add_option("--c", c_arg);
  qi->add_option("--d", d_arg);
  qi->callback([&] {
    action = [&] {
      auto need = [&](const std::string& v, const char* flag) {
        if (v.empty()) throw InputError(std::string("identity ") + name + " needs " + flag);
        return v;
      };
      std::vector<QSymReport> reps;
      if (name == "antipode-schur") {
        reps.push_back(antipode_schur_identity(load_tableau(need(tableau_arg, "--tableau"))));
      } else if (name == "antipode-formulas") {
        reps.push_back(antipode_formulas(parse_composition(need(comp_arg, "--comp"))));
      } else if (name == "m-by-e") {
        reps.push_back(m_by_e(parse_composition(need(comp_arg, "--comp"))));
      } else if (name == "e-by-m") {
        reps.push_back(e_by_m(parse_composition(need(comp_arg, "--comp"))));
      } else if (name == "jt") {
        SkewShape sh = parse_shape(need(shape_arg, "--shape"));
        DiagMap a = parse_diag(need(diag_arg, "--diag"));
        for (RimKind k : parse_kinds(kind_arg)) reps.push_back(jt_quasi(sh, a, k));
      } else if (name == "giambelli") {
        reps.push_back(giambelli_quasi(parse_partition(need(shape_arg, "--shape")), parse_diag(need(diag_arg, "--diag"))));
      } else {
        DiagMap c = parse_diag(need(c_arg, "--c")), d = parse_diag(need(d_arg, "--d"));
        reps.push_back(name == "dual-cauchy" ? dual_cauchy_quasi(r, s, c, d) : dual_cauchy_antipode(r, s, c, d));
      }
      int status = 0;
      for (const auto& rep : reps) {
        emit(rep.to_json());
        if (!rep.equal) status = 1;
      }
      return status;
    };
  });

  // duality
  auto* du = app.add_subcommand("duality", "integral-word duality of ribbon tableaux");
  du->require_subcommand(1);
  std::string pair_arg;
  double tol = 1e-4;
  auto* dd = du->add_subcommand("dual", "dual tableau, or non-ribbon");
  dd->add_option("--tableau", tableau_arg)->required();
  dd->callback([&] {
    action = [&] {
      auto t = load_tableau(tableau_arg);
      IntegralWord w;
      try {
        w = word_of_ribbon(t);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what(), tableau_to_json(t));
      }
      IntegralWord dw = dual_word(w);
      json out{{"tableau", tableau_str(t)}, {"word", w.str()}, {"dual_word", dw.str()}};
      if (auto rt = ribbon_of_word(dw)) {
        out["dual"] = tableau_to_json(rt->tableau);
        out["dual_str"] = tableau_str(rt->tableau);
        out["dual_spec"] = rt->spec.str();
      } else {
        out["dual"] = "non-ribbon";
      }
      emit(out);
      return 0;
    };
  });
  auto* dc = du->add_subcommand("check", "numeric comparison of two combinations");
  dc->add_option("--pair", pair_arg, "{\"lhs\": ..., \"rhs\": ...} or [lhs, rhs] of two tableaux; a side is a tableau or {\"terms\": [...]}")->required();
  dc->add_option("--tol", tol)->check(CLI::PositiveNumber);
  dc->callback([&] {
    action = [&] {
      json p = load_json(pair_arg);
      if (p.is_array() && p.size() == 2 && p[0].is_array() && !p[0].empty() && p[0][0].is_array()) p = {{"lhs", p[0]}, {"rhs", p[1]}};
      if (!p.is_object() || !p.contains("lhs") || !p.contains("rhs")) throw InputError("pair needs lhs and rhs", p);
      auto a = load_side(p.at("lhs")), b = load_side(p.at("rhs"));
      long cap = std::min<long>(max_N(), 1'000'000);
      DualityReport rep;
      try {
        rep = check_duality_numeric(a, b, tol, cap);
      } catch (const std::invalid_argument& e) {
        throw InputError(e.what(), p);
      } catch (const std::runtime_error& e) {
        throw InputError(e.what(), p);
      }
      emit(rep.to_json());
      return rep.pass ? 0 : 1;
    };
  });

  // enumerate
  auto* en = app.add_subcommand("enumerate", "tableaux, rim decompositions and blockings");
  en->require_subcommand(1);
  bool list = false;
  std::string variant = "direct";
  auto* es = en->add_subcommand("ssyt", "semistandard tableaux with entries in 1..N");
  es->add_option("--shape", shape_arg)->required();
  es->add_option("--N", N)->required();
  es->add_flag("--list", list, "emit every tableau");
  es->callback([&] {
    action = [&] {
      SkewShape sh = parse_shape(shape_arg);
      check_N(N, true, {{"shape", shape_arg}, {"N", N}});
      if (!list) {
        emit({{"shape", sh.str()}, {"N", N}, {"count", ssyt_count(sh, static_cast<int>(N))}});
        return 0;
      }
      long count = 0, cap = max_patterns();
      for_each_ssyt(sh, static_cast<int>(N), [&](const std::vector<int>& m) {
        if (++count > cap) throw InputError("more than SMZ_MAX_PATTERNS=" + std::to_string(cap) + " tableaux", sh.str());
        emit(tableau_to_json(Tableau<int>(sh, m)));
      });
      return 0;
    };
  });
  auto* er = en->add_subcommand("rims", "H- or E-rim decompositions");
  er->add_option("--shape", shape_arg)->required();
  er->add_option("--kind", kind_arg)->check(CLI::IsMember({"H", "E", "both"}));
  er->callback([&] {
    action = [&] {
      SkewShape sh = parse_shape(shape_arg);
      for (RimKind k : parse_kinds(kind_arg))
        for (const auto& d : rim_decompositions(sh, k))
          emit({{"kind", k == RimKind::H ? "H" : "E"},
                {"sign", d.sign},
                {"sigma", d.sigma},
                {"labels", tableau_to_json(rim_tableau(d))}});
      return 0;
    };
  });
  auto* ep = en->add_subcommand("preceq", "blocked coarsenings of the reading words");
  ep->add_option("--shape", shape_arg)->required();
  ep->add_option("--variant", variant)->check(CLI::IsMember({"direct", "conjugate"}));
  ep->add_flag("--list", list, "emit every blocking");
  ep->callback([&] {
    action = [&] {
      SkewShape sh = parse_shape(shape_arg);
      auto set = preceq_set(sh, variant == "direct" ? Variant::direct : Variant::conjugate);
      if (!list) {
        emit({{"shape", sh.str()}, {"variant", variant}, {"count", set.size()}});
        return 0;
      }
      for (const auto& b : set) {
        json blocks = json::array();
        for (const auto& blk : b.blocks) {
          json cells = json::array();
          for (int k : blk) cells.push_back({sh.cells()[k].row, sh.cells()[k].col});
          blocks.push_back(cells);
        }
        emit({{"sign", b.sign}, {"blocks", blocks}});
      }
      return 0;
    };
  });

  try {
    std::vector<std::string> args(argv + 1, argv + argc);
    args = expand_config(args);
    std::reverse(args.begin(), args.end());
    app.parse(args);
    return action ? action() : 2;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const InputError& e) {
    json err{{"error", e.what()}};
    if (!e.instance.is_null()) err["instance"] = e.instance;
    std::cerr << err.dump() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << json{{"error", e.what()}}.dump() << '\n';
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << json{{"error", e.what()}}.dump() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", e.what()}}.dump() << '\n';
    return 2;
  }
}
