#pragma once

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "subfock/limits.hpp"

namespace subfock::cli {

enum exit_code : int { ok = 0, failed = 1, bad_input = 2, no_headroom = 3 };

struct RunConfig {
  std::string command;
  std::string system;
  std::string ideal;
  std::string mode = "free";
  std::vector<std::string> monomials;
  int n = 2;
  int M = 4;
  double q = 1.0;
  std::vector<double> weights;
  double tol = default_rank_tol;
  double invariance_tol = default_invariance_tol;
  std::string seed = "0xB3";
  std::string out;
  std::string format = "csv";
  bool json = false;
  std::int64_t cap = SizeCaps{}.hard;
  std::string f, g, x, y;
  int m = 1;
  int m_max = -1;
};

struct Result {
  int code = ok;
  std::string out;
  std::string err;
};

// One report: a header naming the identity, columns, rows.
struct Table {
  std::string identity;
  std::vector<std::string> columns;
  std::vector<std::vector<nlohmann::json>> rows;
  std::vector<std::string> notes;
  bool header = true;
};

inline std::string format_cell(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<std::int64_t>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.10g", v.get<double>());
  return buf;
}

inline std::uint64_t parse_seed(const std::string& s) {
  std::size_t used = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(s, &used, 0);
  } catch (const std::exception&) {
    throw parse_error("invalid seed '" + s + "'");
  }
  if (used != s.size()) throw parse_error("invalid seed '" + s + "'");
  return v;
}

inline std::string seed_hex(std::uint64_t seed) {
  char buf[24];
  std::snprintf(buf, sizeof buf, "0x%llx", static_cast<unsigned long long>(seed));
  return buf;
}

namespace detail {

struct Context {
  const RunConfig& cfg;
  std::uint64_t seed;
  std::ostringstream err;
  SystemPtr sys;
};

inline SystemPtr load_system(Context& ctx) {
  const RunConfig& c = ctx.cfg;
  BuildOptions opt;
  opt.tol = c.tol;
  opt.caps.hard = c.cap;
  SubproductSystem sys;
  if (!c.ideal.empty()) {
    if (!c.system.empty()) throw parse_error("give either --system or --ideal, not both");
    sys = build_from_ideal(load_ideal_file(c.ideal), c.M, opt);
  } else {
    NamedParams p;
    p.n = c.n;
    p.M = c.M;
    p.q = c.q;
    p.monomials = c.monomials;
    p.mode = parse_mode(c.mode);
    p.build = opt;
    sys = named_system(c.system.empty() ? "symmetric" : c.system, p);
  }
  if (sys.above_warn_size)
    ctx.err << "warning: n^M = " << sys.ambient(sys.M) << " is above " << SizeCaps{}.warn << ", dense linear algebra will be slow\n";
  return share(std::move(sys));
}

inline std::vector<double> weight_vector(const Context& ctx) {
  if (ctx.cfg.weights.empty()) return std::vector<double>(static_cast<std::size_t>(ctx.sys->n), 1.0);
  if (static_cast<int>(ctx.cfg.weights.size()) != ctx.sys->n)
    throw parse_error("--weights needs " + std::to_string(ctx.sys->n) + " values");
  for (double v : ctx.cfg.weights)
    if (!(v > 0)) throw parse_error("--weights must be positive");
  return ctx.cfg.weights;
}

inline WeightSystem load_weights(const Context& ctx) { return build_weight(ctx.sys, weight_vector(ctx), ctx.cfg.invariance_tol); }

inline ShiftPolynomial polynomial_arg(const Context& ctx, const std::string& text, const char* flag) {
  if (text.empty()) throw parse_error(std::string("missing ") + flag);
  ShiftPolynomial f = parse_shift_polynomial(text);
  require_letters(*ctx.sys, f);
  return f;
}

inline const char* status(double residual, double thr) { return residual <= thr ? "pass" : "fail"; }

}  // namespace detail

inline Table cmd_dims(detail::Context& ctx) {
  Table t{"dim H_m", {"m", "dim"}, {}, {}, false};
  const auto d = ctx.sys->dims();
  for (std::size_t m = 0; m < d.size(); ++m) t.rows.push_back({static_cast<int>(m), d[m]});
  return t;
}

inline Table cmd_build(detail::Context& ctx, int& code) {
  const auto rep = validate(*ctx.sys, ctx.cfg.tol);
  Table t{"subproduct system " + ctx.sys->provenance, {"m", "dim", "ambient"}, {}, {}, true};
  for (int m = 0; m <= ctx.sys->M; ++m) t.rows.push_back({m, ctx.sys->dim(m), ctx.sys->ambient(m)});
  t.notes.push_back(std::string("validation=") + (rep.passed ? "pass" : "fail"));
  if (!rep.passed) code = failed;
  return t;
}

inline Table cmd_validate(detail::Context& ctx, int& code) {
  const auto rep = validate(*ctx.sys, ctx.cfg.tol);
  Table t{"p_l (p_m x p_{l-m}) p_l = p_l", {"m", "l", "residual", "threshold", "status"}, {}, {}, true};
  for (const auto& e : rep.entries) t.rows.push_back({e.m, e.l, e.residual, rep.tol, detail::status(e.residual, rep.tol)});
  if (!rep.passed) code = failed;
  return t;
}

namespace detail {

struct InvariantRows {
  Table& t;
  int& code;
  void add(const std::string& identity, double residual, double thr) {
    const char* s = status(residual, thr);
    if (residual > thr || residual != residual) code = failed;
    t.rows.push_back({identity, residual, thr, s});
  }
  void info(const std::string& identity, double residual, const char* s) { t.rows.push_back({identity, residual, nullptr, s}); }
  void skip(const std::string& identity) { t.rows.push_back({identity, nullptr, nullptr, "skipped"}); }
};

}  // namespace detail

inline Table cmd_invariants(detail::Context& ctx, int& code) {
  const SubproductSystem& sys = *ctx.sys;
  const int M = sys.M;
  const double tol = ctx.cfg.tol;
  RandomSource rng(ctx.seed);
  Table t{"invariant suite " + sys.provenance, {"identity", "residual", "threshold", "status"}, {}, {}, true};
  detail::InvariantRows rows{t, code};

  rows.add("subproduct_law", validate(sys, tol).max_residual, tol);

  double left = 0, right = 0;
  for (int l = 0; l + 1 <= M; ++l)
    for (int m = 0; m <= l; ++m) {
      const auto r = row_sum_residual(sys, m, l);
      left = std::max(left, r.left);
      right = std::max(right, r.right);
    }
  rows.add("row_sum_S", left, tol);
  rows.add("row_sum_R", right, tol);

  double cross = 0, cross_bar = 0, coherence = 0;
  for (int l = 0; l <= M; ++l)
    for (int m = 0; m <= l; ++m) {
      const Matrix A = rng.unit_matrix(sys.dim(m), sys.dim(m));
      cross = std::max(cross, operator_norm(iota(sys, A, m, l) - iota_compressed(sys, A, m, l)));
      cross_bar = std::max(cross_bar, operator_norm(iota_bar(sys, A, m, l) - iota_bar_compressed(sys, A, m, l)));
      for (int r = m; r <= l; ++r)
        coherence = std::max(coherence, operator_norm(iota(sys, iota(sys, A, m, r), r, l) - iota(sys, A, m, l)));
    }
  rows.add("iota_sum_vs_compression", cross, 1e-12);
  rows.add("iota_bar_sum_vs_compression", cross_bar, 1e-12);
  rows.add("iota_coherence", coherence, 1e-12);

  const auto q = detail::weight_vector(ctx);
  const auto inv = invariance_residuals(sys, q);
  const double inv_max = *std::max_element(inv.begin(), inv.end());
  rows.add("weight_invariance", inv_max, ctx.cfg.invariance_tol);
  const char* weighted[] = {"V_isometry",        "Vbar_isometry",     "adjointness",  "adjointness_bar",
                            "j_partial_trace",   "state_compat_iota", "state_compat_j", "j_unital",
                            "markov_unital",     "markov_fixed_points"};
  if (!(inv_max <= ctx.cfg.invariance_tol)) {
    for (const char* name : weighted) rows.skip(name);
  } else {
    const WeightSystem ws = build_weight(ctx.sys, q, ctx.cfg.invariance_tol);
    double iso = 0, iso_bar = 0, adj = 0, adj_bar = 0, pt = 0, st_i = 0, st_j = 0, unital = 0;
    for (int l = 0; l <= M; ++l)
      for (int m = 0; m <= l; ++m) {
        const Eigen::Index dl = sys.dim(l), dm = sys.dim(m);
        const Matrix Il = Matrix::Identity(dl, dl);
        const Matrix V = isometry_V(ws, m, l), Vb = isometry_Vbar(ws, m, l);
        iso = std::max({iso, operator_norm(weighted_adjoint(ws, V, m, l - m) * V - Il),
                        operator_norm(V * weighted_adjoint(ws, V, m, l - m) - split_projection(sys, m, l - m))});
        iso_bar = std::max({iso_bar, operator_norm(weighted_adjoint(ws, Vb, l - m, m) * Vb - Il),
                            operator_norm(Vb * weighted_adjoint(ws, Vb, l - m, m) - split_projection(sys, l - m, m))});
        const Matrix A = rng.unit_matrix(dl, dl), B = rng.unit_matrix(dm, dm);
        adj = std::max(adj, std::abs(phi(ws, l, A * iota(sys, B, m, l)) - phi(ws, m, jmath(ws, A, l, m) * B)));
        adj_bar = std::max(adj_bar, std::abs(phi(ws, l, A * iota_bar(sys, B, m, l)) - phi(ws, m, jmath_bar(ws, A, l, m) * B)));
        pt = std::max({pt, operator_norm(jmath(ws, A, l, m) - jmath_partial_trace(ws, A, l, m)),
                       operator_norm(jmath_bar(ws, A, l, m) - jmath_bar_partial_trace(ws, A, l, m))});
        st_i = std::max(st_i, std::abs(phi(ws, l, iota(sys, B, m, l)) - phi(ws, m, B)));
        st_j = std::max(st_j, std::abs(phi(ws, m, jmath(ws, A, l, m)) - phi(ws, l, A)));
        if (dm > 0) unital = std::max(unital, operator_norm(jmath(ws, Il, l, m) - Matrix::Identity(dm, dm)));
      }
    rows.add("V_isometry", iso, tol);
    rows.add("Vbar_isometry", iso_bar, tol);
    rows.add("adjointness", adj, tol);
    rows.add("adjointness_bar", adj_bar, tol);
    rows.add("j_partial_trace", pt, tol);
    rows.add("state_compat_iota", st_i, tol);
    rows.add("state_compat_j", st_j, tol);
    rows.add("j_unital", unital, 1e-12);

    if (M >= 1) {
      const GradedOperator one = identity_operator(ctx.sys);
      rows.add("markov_unital", sup_norm(subtract(markov_apply(ws, one), one)), 1e-12);
    } else {
      rows.skip("markov_unital");
    }
    double fixed = 0;
    bool any = false;
    for (int j = 1; j <= sys.n; ++j)
      for (int k = 1; k <= sys.n; ++k) {
        try {
          const GradedOperator X = contravariant_sequence(ws, ShiftPolynomial::monomial(1.0, Word{j}, Word{k}));
          if (X.max_level() == X.min_level()) continue;
          fixed = std::max(fixed, sup_norm(subtract(markov_apply(ws, X), X)));
          any = true;
        } catch (const headroom_error&) {
        }
      }
    if (any)
      rows.add("markov_fixed_points", fixed, tol);
    else
      rows.skip("markov_fixed_points");
  }

  if (M >= 1 && sys.dim(1) > 0) {
    const Matrix A = rng.unit_matrix(sys.dim(1), sys.dim(1)), B = rng.unit_matrix(sys.dim(1), sys.dim(1));
    double gap = 0;
    for (int l = 1; l <= M; ++l)
      for (int r = 1; r <= l; ++r) gap = std::max(gap, asymptotic_mult_gap(sys, A, B, 1, r, l));
    rows.info("asymptotic_mult_gap", gap, gap == 0.0 ? "exact" : "info");
  } else {
    rows.skip("asymptotic_mult_gap");
  }
  return t;
}

inline std::vector<int> symbol_levels(const detail::Context& ctx, const ShiftPolynomial& f, int lo) {
  std::vector<int> out;
  const int hi = ctx.cfg.m_max >= 0 ? ctx.cfg.m_max : ctx.sys->M;
  for (int m = lo; m <= hi; ++m)
    if (ctx.sys->M >= 2 * m + f.creation_degree()) out.push_back(m);
  if (out.empty()) throw headroom_error("no level in range has headroom for '" + f.str() + "'", 2 * lo + f.creation_degree());
  return out;
}

inline Table cmd_berezin(detail::Context& ctx) {
  const WeightSystem ws = detail::load_weights(ctx);
  const ShiftPolynomial f = detail::polynomial_arg(ctx, ctx.cfg.f, "--f");
  Table t{"Berezin transform |beta_m(f) - f| for f = " + f.str(), {"m", "difference_norm", "rieffel"}, {}, {}, true};
  for (int m : symbol_levels(ctx, f, 1)) {
    const auto b = berezin_transform(ws, f, m);
    t.rows.push_back({m, b.tail_norm, operator_norm(contravariant_symbol(ws, f, m))});
  }
  return t;
}

inline Table cmd_arveson(detail::Context& ctx, int& code) {
  const auto rep = arveson_report(*ctx.sys);
  Table t{"Arveson diagnostics [S_i,S_j] and [S_i,S_j*]", {"m", "commutator", "cross_commutator"}, {}, {}, true};
  for (const auto& r : rep.rows) t.rows.push_back({r.m, r.commutator, r.cross_commutator});
  t.notes.push_back(rep.applies ? "commutative=yes" : "commutative=no (conjecture does not apply)");
  if (rep.applies)
    for (const auto& r : rep.rows)
      if (r.commutator > commutative_tol) code = failed;
  return t;
}

inline Table cmd_strict(detail::Context& ctx, int& code) {
  const WeightSystem ws = detail::load_weights(ctx);
  const ShiftPolynomial f = detail::polynomial_arg(ctx, ctx.cfg.f, "--f");
  const ShiftPolynomial g = detail::polynomial_arg(ctx, ctx.cfg.g, "--g");
  const int hi = strict_max_level(*ctx.sys, f, g);
  const int top = ctx.cfg.m_max >= 0 ? std::min(hi, ctx.cfg.m_max) : hi;
  if (top < 1) throw headroom_error("strict quantization report", 2 + (f * g).creation_degree());
  Table t{"strict quantization (Rieffel, von Neumann, Dirac)", {"m", "rieffel", "von_neumann", "dirac"}, {}, {}, true};
  for (const auto& r : strict_quantization_report(ws, f, g, 1, top)) t.rows.push_back({r.m, r.rieffel, r.von_neumann, r.dirac});
  (void)code;
  return t;
}

inline Table cmd_markov(detail::Context& ctx, int& code) {
  const WeightSystem ws = detail::load_weights(ctx);
  const bool from_symbol = !ctx.cfg.f.empty();
  if (from_symbol == !ctx.cfg.x.empty()) throw parse_error("markov needs exactly one of --f or --x");
  GradedOperator X = from_symbol ? contravariant_sequence(ws, detail::polynomial_arg(ctx, ctx.cfg.f, "--f"))
                                 : representative(ctx.sys, detail::polynomial_arg(ctx, ctx.cfg.x, "--x"));
  if (X.degree() != 0) throw parse_error("markov needs a degree-0 element");
  if (X.max_level() - X.min_level() < 1) throw headroom_error("Markov operator needs two levels", ctx.sys->M + 1);

  if (ctx.cfg.y.empty()) {
    Table t{"Markov fixed points |Phi(X)_m - X_m|", {"m", "residual"}, {}, {}, true};
    const GradedOperator PX = markov_apply(ws, X);
    for (const auto& [m, B] : PX.blocks()) {
      const double r = operator_norm(B - X.block(m));
      t.rows.push_back({m, r});
      if (from_symbol && r > ctx.cfg.tol) code = failed;
    }
    t.notes.push_back(from_symbol ? "asserted: contravariant images are fixed" : "reported only");
    return t;
  }

  const ShiftPolynomial y = detail::polynomial_arg(ctx, ctx.cfg.y, "--y");
  const ShiftPolynomial x = detail::polynomial_arg(ctx, from_symbol ? ctx.cfg.f : ctx.cfg.x, from_symbol ? "--f" : "--x");
  const SequenceElement PX = projective_sequence(ws, x), PY = projective_sequence(ws, y);
  const int m = ctx.cfg.m;
  const int L = compose(PX, PY).max_level();
  if (m < 0 || m > L - 2) throw headroom_error("Choi-Effros profile at m=" + std::to_string(m), m + 2 + (ctx.sys->M - L));
  Table t{"Choi-Effros |Phi^r(XY)_m - j_{L,m}(X_L Y_L)|", {"r", "residual"}, {}, {}, true};
  for (const auto& row : choi_effros_profile(ws, PX, PY, m)) t.rows.push_back({row.r, row.residual});
  t.notes.push_back("m=" + std::to_string(m));
  return t;
}

inline Table cmd_qsphere(detail::Context& ctx) {
  const WeightSystem ws = detail::load_weights(ctx);
  Table t{"Q-sphere relation residual", {"m", "residual"}, {}, {}, true};
  for (int m = 0; m + 1 <= ctx.sys->M; ++m) t.rows.push_back({m, qsphere_residual(ws, m)});
  return t;
}

inline std::string render_csv(const Table& t, const std::string& command, std::uint64_t seed) {
  std::ostringstream os;
  if (t.header) {
    os << "# " << command << ": " << t.identity << "\n";
    os << "# seed=" << seed_hex(seed) << "\n";
    for (const auto& n : t.notes) os << "# " << n << "\n";
    for (std::size_t i = 0; i < t.columns.size(); ++i) os << (i ? "," : "") << t.columns[i];
    os << "\n";
  }
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << (row[i].is_null() ? "" : format_cell(row[i]));
    os << "\n";
  }
  return os.str();
}

inline nlohmann::json render_json(const Table& t, const std::string& command, std::uint64_t seed, int code) {
  nlohmann::json j;
  j["command"] = command;
  j["identity"] = t.identity;
  j["seed"] = seed_hex(seed);
  j["columns"] = t.columns;
  j["rows"] = t.rows;
  j["notes"] = t.notes;
  j["passed"] = code == ok;
  j["exit_code"] = code;
  return j;
}

inline void write_file(const std::filesystem::path& p, const std::string& text) {
  std::ofstream os(p);
  if (!os) throw parse_error("cannot write " + p.string());
  os << text;
}

inline Result execute(const RunConfig& cfg) {
  Result res;
  std::uint64_t seed = 0;
  detail::Context ctx{cfg, 0, {}, nullptr};
  int code = ok;
  Table table;
  try {
    seed = parse_seed(cfg.seed);
    ctx.seed = seed;
    if (cfg.format != "csv" && cfg.format != "json") throw parse_error("--format must be csv or json");
    if (!(cfg.tol > 0) || !(cfg.invariance_tol > 0)) throw parse_error("tolerances must be positive");
    ctx.sys = detail::load_system(ctx);
    const std::string& c = cfg.command;
    if (c == "dims") table = cmd_dims(ctx);
    else if (c == "build") table = cmd_build(ctx, code);
    else if (c == "validate") table = cmd_validate(ctx, code);
    else if (c == "invariants") table = cmd_invariants(ctx, code);
    else if (c == "berezin") table = cmd_berezin(ctx);
    else if (c == "arveson") table = cmd_arveson(ctx, code);
    else if (c == "strict") table = cmd_strict(ctx, code);
    else if (c == "markov") table = cmd_markov(ctx, code);
    else if (c == "qsphere") table = cmd_qsphere(ctx);
    else throw parse_error("unknown command '" + c + "'");
  } catch (const headroom_error& e) {
    res.err = ctx.err.str() + "error: " + e.what() + "\n";
    res.code = no_headroom;
    return res;
  } catch (const validation_error& e) {
    res.err = ctx.err.str() + "error: " + e.what() + "\n";
    res.code = failed;
    return res;
  } catch (const invariance_error& e) {
    res.err = ctx.err.str() + "error: " + e.what() + "\n";
    res.code = failed;
    return res;
  } catch (const error& e) {
    res.err = ctx.err.str() + "error: " + e.what() + "\n";
    res.code = bad_input;
    return res;
  }

  const bool as_json = cfg.json || cfg.format == "json";
  const std::string body = as_json ? render_json(table, cfg.command, seed, code).dump(2) + "\n" : render_csv(table, cfg.command, seed);
  res.code = code;
  res.err = ctx.err.str();
  if (cfg.out.empty()) {
    res.out = body;
  } else {
    try {
      std::filesystem::create_directories(cfg.out);
      const std::filesystem::path dir(cfg.out);
      write_file(dir / (cfg.command + (as_json ? ".json" : ".csv")), body);
      write_file(dir / "summary.json", render_json(Table{table.identity, {}, {}, table.notes, true}, cfg.command, seed, code).dump(2) + "\n");
    } catch (const std::filesystem::filesystem_error& e) {
      res.err += std::string("error: ") + e.what() + "\n";
      res.code = bad_input;
    } catch (const error& e) {
      res.err += std::string("error: ") + e.what() + "\n";
      res.code = bad_input;
    }
  }
  return res;
}

inline Result run(const std::vector<std::string>& args) {
  RunConfig cfg;
  CLI::App app{"Subproduct systems on truncated Fock space", "subfock"};
  app.set_config("--config", "", "TOML file with option values");
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--system", cfg.system, "full | symmetric | quantum_plane | monomial");
  app.add_option("--ideal", cfg.ideal, "ideal file (TOML or JSON)");
  app.add_option("--mode", cfg.mode, "free | commutative (monomial systems)");
  app.add_option("--monomials", cfg.monomials, "monomial generators")->delimiter(',');
  app.add_option("--n", cfg.n, "number of variables");
  app.add_option("--M", cfg.M, "truncation level");
  app.add_option("--q", cfg.q, "quantum plane parameter");
  app.add_option("--weights", cfg.weights, "diagonal of Q, comma separated")->delimiter(',');
  app.add_option("--tol", cfg.tol, "algebra tolerance");
  app.add_option("--invariance-tol", cfg.invariance_tol, "relative weight invariance tolerance");
  app.add_option("--seed", cfg.seed, "random seed for identity checks");
  app.add_option("--out", cfg.out, "write reports into this directory");
  app.add_option("--format", cfg.format, "csv | json");
  app.add_flag("--json", cfg.json, "JSON output");
  app.add_option("--cap", cfg.cap, "hard cap on n^M");
  app.add_option("--f", cfg.f, "normally ordered element, e.g. \"Z1*Zd1\"");
  app.add_option("--g", cfg.g, "second element for strict");
  app.add_option("--x", cfg.x, "degree-0 element for markov");
  app.add_option("--y", cfg.y, "second element for the Choi-Effros profile");
  app.add_option("--m", cfg.m, "level for the Choi-Effros profile");
  app.add_option("--m-max", cfg.m_max, "largest level in level profiles");

  const std::pair<const char*, const char*> commands[] = {
      {"dims", "print m,dim"},
      {"build", "build and summarize a system"},
      {"validate", "subproduct law residuals"},
      {"invariants", "run the identity suite"},
      {"berezin", "Berezin transform difference profile"},
      {"arveson", "shift commutator profiles"},
      {"strict", "strict quantization profiles"},
      {"markov", "Markov fixed points and Choi-Effros profile"},
      {"qsphere", "Q-sphere relation residuals"},
  };
  for (const auto& [name, help] : commands) app.add_subcommand(name, help)->callback([&cfg, n = std::string(name)] { cfg.command = n; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    return {ok, app.help(), ""};
  } catch (const CLI::CallForAllHelp&) {
    return {ok, app.help("", CLI::AppFormatMode::All), ""};
  } catch (const CLI::ParseError& e) {
    return {bad_input, "", std::string("error: ") + e.what() + "\n"};
  }
  return execute(cfg);
}

}  // namespace subfock::cli
