#pragma once

// Command implementations behind the `ybh` executable. Each command writes its
// report to `out`, diagnostics to `err`, and returns the process exit status.

#include "ybh/differentials.hpp"
#include "ybh/homology.hpp"
#include "ybh/matrix.hpp"
#include "ybh/skein.hpp"
#include "ybh/snf.hpp"

#include "json.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace ybh::cli {

enum ExitCode : int { ok = 0, check_failed = 1, usage_error = 2, runtime_error = 3 };

inline constexpr int degree_guard = 14;

struct RunConfig {
  std::string command;
  int n = 3;
  int min_n = 1;
  int max_n = 6;
  std::string method = "curtain"; // skein|curtain|psi|all
  std::string format;             // text|json|csv|matrix; empty = YBH_FORMAT or text
  std::string input;              // matrix file for `snf`
  std::string strategy = "row-major";
  bool allow_large = false;
  bool corrupt_r = false;
  bool with_cohomology = false;
  unsigned jobs = 1;
};

class UsageError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

inline std::string resolve_format(const RunConfig& cfg) {
  if (!cfg.format.empty()) return cfg.format;
  if (const char* env = std::getenv("YBH_FORMAT"); env && *env) return env;
  return "text";
}

inline void require_format(const std::string& fmt, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (fmt == a) return;
  std::string list;
  for (const char* a : allowed) list += (list.empty() ? "" : "|") + std::string(a);
  throw UsageError("format '" + fmt + "' not supported here (expected " + list + ")");
}

/// Rejects degrees above the guard unless explicitly allowed, in which case it warns.
inline void guard_degree(int n, const RunConfig& cfg, std::ostream& err) {
  if (n <= degree_guard) return;
  if (!cfg.allow_large)
    throw UsageError("degree " + std::to_string(n) + " exceeds the guard of " + std::to_string(degree_guard) +
                     " (pass --allow-large to override)");
  err << "warning: degree " << n << " exceeds the guard of " << degree_guard << "; this may take a very long time\n";
}

inline Method parse_method(const std::string& m) {
  if (m == "skein") return Method::skein;
  if (m == "curtain") return Method::curtain;
  if (m == "psi") return Method::psi;
  throw UsageError("unknown method '" + m + "'");
}

inline PivotStrategy parse_strategy(const std::string& s) {
  if (s == "row-major") return PivotStrategy::min_norm_row_major;
  if (s == "sparsest") return PivotStrategy::min_norm_sparsest;
  throw UsageError("unknown pivot strategy '" + s + "'");
}

/// R with one entry perturbed; used to exercise the failure path of `verify`.
inline RingMatrix corrupted_r() {
  RingMatrix r = skein_maps().R;
  r.set(2, 1, LaurentPoly::y(3));
  return r;
}

// ---------------------------------------------------------------------------

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.max_n < 1) throw UsageError("verify: --max-n must be >= 1");
  guard_degree(cfg.max_n + 1, cfg, err);
  const RingMatrix r = cfg.corrupt_r ? corrupted_r() : skein_maps().R;
  bool all_ok = true;
  auto report = [&](const std::string& name, bool pass) {
    out << (pass ? "PASS " : "FAIL ") << name << '\n';
    all_ok = all_ok && pass;
  };
  if (cfg.corrupt_r) out << "note: using a corrupted R matrix\n";
  report("skein identity R = I + beta alpha", check_skein(r));
  report("Yang-Baxter equation", check_ybe(r));
  report("column-unital R", check_column_unital(r));
  report("wall conditions", check_wall_condition(r));
  const auto loops = loop_identity_report();
  report("loop: alpha beta = -(y^2 + 1)", loops.alpha_beta);
  report("loop: zigzag gives xi", loops.zigzag_xi);
  report("loop: zigzag gives zeta", loops.zigzag_zeta);
  report("loop: xi zeta = zeta xi = y^2", loops.xi_zeta);
  report("loop: alpha (lambda_l x 1) = mu zeta", loops.lambda_cup);
  report("loop: lambda_r = -lambda_l", loops.lambda_mirror);
  for (std::size_t n = 2; n <= 6; ++n) report("skew Temperley-Lieb relations on V^" + std::to_string(n), check_stl_relations(n));
  for (int n = 1; n <= cfg.max_n; ++n) {
    const RingMatrix c = d_curtain(n);
    report("d_" + std::to_string(n) + " skein = curtain", d_skein(n) == c);
    report("d_" + std::to_string(n) + " psi = curtain", d_psi(n) == c);
    report("d_" + std::to_string(n) + " d_" + std::to_string(n + 1) + " = 0", check_chain_condition(n));
    report("wall curtains from Psi, n = " + std::to_string(n),
           wall_curtain_via_psi(n, Side::left) == strand_to_left_wall(n) &&
               wall_curtain_via_psi(n, Side::right) == strand_to_right_wall(n));
    report("Psi_" + std::to_string(n) + " from Gamma and Lambda", psi_via_gamma_lambda(n) == psi(n, Side::left));
  }
  out << (all_ok ? "all checks passed" : "some checks FAILED") << '\n';
  return all_ok ? ok : check_failed;
}

// ---------------------------------------------------------------------------

inline std::string basis_label(std::size_t degree, std::size_t flat) {
  if (degree == 0) return "1";
  std::string s = "e";
  for (int d : TensorIndex::from_flat(degree, flat).digits) s += static_cast<char>('0' + d);
  return s;
}

inline nlohmann::json matrix_json(const RingMatrix& m, int n, const std::string& method) {
  nlohmann::json j;
  j["n"] = n;
  j["method"] = method;
  j["rows"] = m.rows();
  j["cols"] = m.cols();
  j["entries"] = nlohmann::json::array();
  const auto deg = static_cast<std::size_t>(n);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : m.row(r))
      j["entries"].push_back({{"row", basis_label(deg - 1, r)}, {"col", basis_label(deg, c)}, {"value", to_display_string(v)}});
  return j;
}

inline RingMatrix matrix_from_json(const nlohmann::json& j) {
  RingMatrix m(j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
  auto index = [](const std::string& label) {
    if (label == "1") return std::size_t{0};
    TensorIndex t;
    for (std::size_t k = 1; k < label.size(); ++k) t.digits.push_back(label[k] - '0');
    return t.flat();
  };
  for (const auto& e : j.at("entries"))
    m.set(index(e.at("row").get<std::string>()), index(e.at("col").get<std::string>()), parse_laurent(e.at("value").get<std::string>()));
  return m;
}

inline void write_matrix_text(std::ostream& out, const RingMatrix& m, int n) {
  const auto deg = static_cast<std::size_t>(n);
  for (std::size_t c = 0; c < m.cols(); ++c) {
    std::string terms;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const LaurentPoly v = m.at(r, c);
      if (v.is_zero()) continue;
      terms += (terms.empty() ? "" : " + ") + std::string("(") + to_display_string(v) + ")" + basis_label(deg - 1, r);
    }
    out << "d_" << n << "(" << basis_label(deg, c) << ") = " << (terms.empty() ? "0" : terms) << '\n';
  }
}

inline int cmd_diff(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.n < 1) throw UsageError("diff: --n must be >= 1");
  guard_degree(cfg.n, cfg, err);
  const std::string fmt = resolve_format(cfg);
  require_format(fmt, {"text", "json", "matrix"});

  RingMatrix d;
  bool all_agree = true;
  nlohmann::json equivalence;
  if (cfg.method == "all") {
    const RingMatrix s = d_skein(cfg.n), c = d_curtain(cfg.n), p = d_psi(cfg.n);
    equivalence = {{"skein_eq_curtain", s == c}, {"psi_eq_curtain", p == c}, {"skein_eq_psi", s == p}};
    all_agree = s == c && p == c;
    d = c;
  } else {
    d = differential(cfg.n, parse_method(cfg.method));
  }

  if (fmt == "json") {
    nlohmann::json j = matrix_json(d, cfg.n, cfg.method);
    if (cfg.method == "all") j["equivalence"] = equivalence;
    out << j.dump(2) << '\n';
  } else if (fmt == "matrix") {
    if (cfg.method == "all" && !all_agree) err << "constructions disagree\n";
    write_matrix(out, d);
  } else {
    if (cfg.method == "all") {
      out << "skein = curtain: " << (equivalence["skein_eq_curtain"].get<bool>() ? "yes" : "NO") << '\n';
      out << "psi = curtain: " << (equivalence["psi_eq_curtain"].get<bool>() ? "yes" : "NO") << '\n';
      out << "skein = psi: " << (equivalence["skein_eq_psi"].get<bool>() ? "yes" : "NO") << '\n';
    }
    write_matrix_text(out, d, cfg.n);
  }
  return all_agree ? ok : check_failed;
}

// ---------------------------------------------------------------------------

inline void write_groups(std::ostream& out, const std::string& fmt, const std::string& title,
                         const std::vector<HomologyRecord>& records) {
  if (fmt == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : records) arr.push_back(to_json(r));
    out << arr.dump(2) << '\n';
  } else if (fmt == "csv") {
    out << homology_csv_header() << '\n';
    for (const auto& r : records) out << to_csv_row(r.group) << '\n';
  } else {
    for (const auto& r : records) out << title << r.group.degree << " = " << to_string(r.group) << '\n';
  }
}

inline int cmd_homology(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.max_n < 1) throw UsageError("homology: --max-n must be >= 1");
  if (cfg.min_n < 1 || cfg.min_n > cfg.max_n) throw UsageError("homology: need 1 <= --min-n <= --max-n");
  guard_degree(cfg.max_n + 1, cfg, err);
  const std::string fmt = resolve_format(cfg);
  require_format(fmt, {"text", "json", "csv"});
  auto records = map_degrees(cfg.min_n, cfg.max_n, cfg.jobs, [](int n) {
    HomologyRecord r;
    r.group = homology(n);
    r.conjecture_agrees = equivalent(conjecture_prediction(n).predicted, r.group);
    return r;
  });
  write_groups(out, fmt, "H_", records);
  if (cfg.with_cohomology) {
    std::vector<HomologyRecord> co;
    for (int n = cfg.min_n; n <= cfg.max_n; ++n) co.push_back({cohomology(n), std::nullopt});
    write_groups(out, fmt, "H^", co);
  }
  return ok;
}

inline int cmd_cohomology(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.max_n < 1) throw UsageError("cohomology: --max-n must be >= 1");
  if (cfg.min_n < 1 || cfg.min_n > cfg.max_n) throw UsageError("cohomology: need 1 <= --min-n <= --max-n");
  guard_degree(cfg.max_n + 1, cfg, err);
  const std::string fmt = resolve_format(cfg);
  require_format(fmt, {"text", "json", "csv"});
  std::vector<HomologyRecord> records;
  try {
    for (int n = cfg.min_n; n <= cfg.max_n; ++n) records.push_back({cohomology(n), std::nullopt});
  } catch (const CohomologyMismatch& e) {
    err << e.what() << '\n';
    return check_failed;
  }
  write_groups(out, fmt, "H^", records);
  return ok;
}

// ---------------------------------------------------------------------------

inline int cmd_conjecture(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.max_n < 2) throw UsageError("conjecture: --max-n must be >= 2");
  guard_degree(cfg.max_n + 1, cfg, err);
  const std::string fmt = resolve_format(cfg);
  require_format(fmt, {"text", "json", "csv"});
  const auto rows = conjecture_report(cfg.max_n, cfg.jobs);

  // Agreement is asserted where it is proven (n <= 3); above that it is informational.
  bool asserted_ok = true;
  for (const auto& r : rows) {
    if (!r.dimension_identity) asserted_ok = false;
    if (r.prediction.n <= 3 && !r.agree) asserted_ok = false;
  }

  if (fmt == "json") {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
      nlohmann::json j = to_json(HomologyRecord{r.computed, r.agree});
      j["a_n"] = r.prediction.a_n;
      j["s_n_minus_2"] = r.prediction.s_n_minus_2;
      j["predicted"] = to_json(HomologyRecord{r.prediction.predicted, std::nullopt});
      j["dimension_identity"] = r.dimension_identity;
      arr.push_back(j);
    }
    out << arr.dump(2) << '\n';
  } else if (fmt == "csv") {
    out << "n,a_n,s_n_minus_2,predicted,computed,agree,dimension_identity\n";
    for (const auto& r : rows)
      out << r.prediction.n << ',' << r.prediction.a_n << ',' << r.prediction.s_n_minus_2 << ",\""
          << to_string(r.prediction.predicted) << "\",\"" << to_string(r.computed) << "\"," << (r.agree ? "true" : "false")
          << ',' << (r.dimension_identity ? "true" : "false") << '\n';
  } else {
    for (const auto& r : rows) {
      out << "n = " << r.prediction.n << ": a_n = " << r.prediction.a_n << ", s_{n-2} = " << r.prediction.s_n_minus_2
          << (r.dimension_identity ? "" : " (dimension identity FAILS)") << '\n';
      out << "  predicted " << to_string(r.prediction.predicted) << '\n';
      out << "  computed  " << to_string(r.computed) << '\n';
      out << "  agree: " << (r.agree ? "yes" : "no") << (r.prediction.n > 3 ? " (informational)" : "") << '\n';
    }
  }
  return asserted_ok ? ok : check_failed;
}

// ---------------------------------------------------------------------------

inline int cmd_snf(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string fmt = resolve_format(cfg);
  require_format(fmt, {"text", "json"});
  if (cfg.input.empty()) throw UsageError("snf: an input matrix file is required");
  std::ifstream in(cfg.input);
  if (!in) {
    err << "snf: cannot open '" << cfg.input << "'\n";
    return runtime_error;
  }
  const RingMatrix m = read_matrix(in);
  const SnfResult s = snf(m, {parse_strategy(cfg.strategy), false});
  std::vector<LaurentPoly> torsion;
  for (const auto& p : s.torsion()) torsion.push_back(canonicalize(p));
  if (fmt == "json") {
    nlohmann::json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["rank"] = s.rank();
    j["invariant_factors"] = nlohmann::json::array();
    for (const auto& p : s.diag) j["invariant_factors"].push_back(to_display_string(p));
    j["torsion"] = nlohmann::json::array();
    for (const auto& p : torsion) j["torsion"].push_back(to_display_string(p));
    out << j.dump(2) << '\n';
  } else {
    out << "shape " << m.shape() << ", rank " << s.rank() << '\n';
    out << "invariant factors:";
    for (const auto& p : s.diag) out << ' ' << '(' << to_display_string(p) << ')';
    out << "\ntorsion:";
    for (const auto& p : torsion) out << ' ' << '(' << to_display_string(p) << ')';
    out << '\n';
  }
  return ok;
}

// ---------------------------------------------------------------------------

inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
    if (cfg.command == "diff") return cmd_diff(cfg, out, err);
    if (cfg.command == "homology") return cmd_homology(cfg, out, err);
    if (cfg.command == "cohomology") return cmd_cohomology(cfg, out, err);
    if (cfg.command == "conjecture") return cmd_conjecture(cfg, out, err);
    if (cfg.command == "snf") return cmd_snf(cfg, out, err);
    throw UsageError("unknown command '" + cfg.command + "'");
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return usage_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return runtime_error;
  }
}

} // namespace ybh::cli
