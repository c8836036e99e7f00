// mimocs command-line front end.  JSON in/out for structured results, CSV for
// grid data.  Exit 0 on success, 1 on domain errors, 2 on usage errors; every
// error is reported as machine-readable JSON on stderr.

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "CLI11.hpp"
#include "mimocs/array_channel.hpp"
#include "mimocs/bounds.hpp"
#include "mimocs/code_matrices.hpp"
#include "mimocs/cs_analysis.hpp"
#include "mimocs/matrix_io.hpp"
#include "mimocs/recovery.hpp"
#include "mimocs/sensing.hpp"

using namespace mimocs;
using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("FileNotFound", "cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_text_atomic(const std::string& path, const std::string& text) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("WriteFailed", "cannot write " + tmp);
    out << text;
  }
  std::filesystem::rename(tmp, path);
}

void emit_json(json j, const std::string& out_path) {
  j["schema_version"] = kSchemaVersion;
  if (out_path.empty())
    std::cout << j.dump(2) << "\n";
  else
    write_json_atomic(out_path, j);
}

void emit_csv(const std::string& text, const std::string& out_path) {
  if (out_path.empty())
    std::cout << text;
  else
    write_text_atomic(out_path, text);
}

PathSet parse_paths(const json& j) {
  PathSet ps;
  const auto& c = j.at("config");
  ps.config.n_t = c.at("n_t").get<int>();
  ps.config.n_r = c.at("n_r").get<int>();
  ps.config.delta_t = c.value("delta_t", 0.5);
  ps.config.delta_r = c.value("delta_r", 0.5);
  ps.config.lambda_c = c.value("lambda_c", 0.01);
  ps.path_loss_mu = j.value("mu", 1.0);
  for (const auto& pj : j.value("paths", json::array())) {
    Path p;
    const auto& a = pj.at("alpha");
    p.alpha = a.is_array() ? cd(a.at(0).get<double>(), a.at(1).get<double>())
                           : cd(a.get<double>(), 0.0);
    p.grid_t = pj.at("grid_t").get<int>();
    p.grid_r = pj.at("grid_r").get<int>();
    p.offset_t = pj.value("offset_t", 0.0);
    p.offset_r = pj.value("offset_r", 0.0);
    p.rho = pj.value("rho", 0.0);
    ps.paths.push_back(p);
  }
  ps.validate();
  return ps;
}

json config_echo(const PathSet& ps) {
  return {{"n_t", ps.config.n_t},       {"n_r", ps.config.n_r},
          {"delta_t", ps.config.delta_t}, {"delta_r", ps.config.delta_r},
          {"lambda_c", ps.config.lambda_c}, {"mu", ps.path_loss_mu},
          {"k", ps.k()}};
}

json rip_to_json(const RipReport& r) {
  return {{"order_k", r.order_k},
          {"delta", r.delta},
          {"delta_raw", r.delta_raw},
          {"scale", r.scale},
          {"lambda_min", r.lambda_min},
          {"lambda_max", r.lambda_max},
          {"extremal_support", r.extremal_support},
          {"support_min", r.support_min},
          {"support_max", r.support_max}};
}

json recovery_to_json(const RecoveryResult& r) {
  return {{"algorithm", r.algorithm == RecoveryAlgorithm::omp ? "omp" : "l0"},
          {"support", r.support},
          {"residual_norm", r.residual_norm},
          {"estimate", vector_to_json(r.estimate)}};
}

json bch_to_json(const BchDesign& d) {
  json j = {{"t", d.t},
            {"n", d.n},
            {"k", d.k_correct},
            {"d_min_design", d.d_min_design},
            {"parity_rows", d.parity_rows},
            {"generator", d.generator},
            {"H", matrix_to_json(d.h)}};
  if (d.shortened_to)
    j["shortened_to"] = *d.shortened_to;
  else
    j["shortened_to"] = nullptr;
  return j;
}

struct MeasureArgs {
  std::string paths_file;
  std::string design_file;
  int m_t = 0, m_r = 0;
  std::uint64_t design_seed = 0;
  double sigma = 0.0;
  std::uint64_t noise_seed = 0;
};

SensingDesign resolve_design(const MeasureArgs& a, const ArrayConfig& cfg) {
  if (!a.design_file.empty()) {
    const json j = load_json(a.design_file);
    SensingDesign d{matrix_from_json(j.at("f")), matrix_from_json(j.at("w"))};
    if (d.f.rows() != cfg.n_t || d.w.rows() != cfg.n_r)
      throw dimension_mismatch("design bank rows do not match array sizes");
    return d;
  }
  if (a.m_t <= 0 || a.m_r <= 0)
    throw Error("UsageError", "need --design or --mt/--mr for a gaussian design");
  return gaussian_design(cfg.n_t, cfg.n_r, a.m_t, a.m_r, a.design_seed);
}

std::string fmt_row(double x, double lo, double ti, LogBase base) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), "%.10g,%.10g,%.10g,%s\n", x, lo, ti,
                log_base_name(base).c_str());
  return buf;
}

int dispatch(int argc, char** argv) {
  CLI::App app{"sparse-MIMO channel estimation workbench"};
  app.require_subcommand(1);
  std::string out_path;
  app.add_option("--output", out_path, "write result to this file (atomic)");

  // ---- synth
  auto* synth = app.add_subcommand("synth", "synthesize a k-sparse channel");
  std::string synth_paths;
  bool off_grid = false;
  synth->add_option("--paths", synth_paths, "path-set JSON file")->required();
  synth->add_flag("--allow-off-grid", off_grid, "permit off-grid offsets");

  // ---- measure / vectorize / e2e share options
  MeasureArgs ma;
  auto add_measure_opts = [&](CLI::App* cmd) {
    cmd->add_option("--paths", ma.paths_file, "path-set JSON file")->required();
    cmd->add_option("--design", ma.design_file, "design JSON file {f, w}");
    cmd->add_option("--mt", ma.m_t, "precoder bank size (gaussian design)");
    cmd->add_option("--mr", ma.m_r, "combiner bank size (gaussian design)");
    cmd->add_option("--design-seed", ma.design_seed, "gaussian design seed");
    cmd->add_option("--sigma", ma.sigma, "noise std per entry");
    cmd->add_option("--noise-seed", ma.noise_seed, "noise seed");
  };
  auto* meas = app.add_subcommand("measure", "simulate Y = W^H Q F + N");
  add_measure_opts(meas);
  auto* vect = app.add_subcommand("vectorize", "build y_v = G_v q_v^a + n_v");
  add_measure_opts(vect);
  auto* e2e_cmd = app.add_subcommand("e2e", "synthesize, measure, recover");
  add_measure_opts(e2e_cmd);
  std::string alg = "l0";
  e2e_cmd->add_option("--alg", alg, "recovery algorithm: l0 | omp")
      ->check(CLI::IsMember({"l0", "omp"}));

  // ---- spark / rip
  auto* spark_cmd = app.add_subcommand("spark", "exhaustive spark of a matrix");
  std::string matrix_file;
  double spark_tol = kRankTol;
  spark_cmd->add_option("--matrix", matrix_file, "matrix JSON file")->required();
  spark_cmd->add_option("--tol", spark_tol, "rank tolerance");
  auto* rip_cmd = app.add_subcommand("rip", "exhaustive k-RIP constant");
  int rip_k = 1;
  rip_cmd->add_option("--matrix", matrix_file, "matrix JSON file")->required();
  rip_cmd->add_option("--k", rip_k, "RIP order")->required();

  // ---- verify-lemmas
  auto* lemmas = app.add_subcommand(
      "verify-lemmas", "batch Kronecker RIP/symmetry/spark + unitarity checks");
  int lem_trials = 20, lem_k = 2, lem_m = 3, lem_n = 4;
  std::uint64_t lem_seed = 0;
  lemmas->add_option("--trials", lem_trials, "random trials");
  lemmas->add_option("--seed", lem_seed, "base seed");
  lemmas->add_option("--k", lem_k, "sparsity order");
  lemmas->add_option("--m", lem_m, "factor rows");
  lemmas->add_option("--n", lem_n, "factor cols");

  // ---- bch
  auto* bch_cmd = app.add_subcommand("bch", "BCH parity-check design");
  int bch_t = 0, bch_k = 0, shorten_to = 0;
  bch_cmd->add_option("--t", bch_t, "field degree")->required();
  bch_cmd->add_option("--k", bch_k, "error-correction capability")->required();
  bch_cmd->add_option("--shorten-to", shorten_to, "shorten to this many columns");

  // ---- bounds / m-underbar / audit / fig1
  int b_nt = 0, b_nr = 0, b_k = 0;
  double b_delta = 0.5;
  std::string base_name = "natural";
  auto* bounds_cmd = app.add_subcommand("bounds", "closed-form measurement bounds");
  bounds_cmd->add_option("--nt", b_nt, "TX grid size")->required();
  bounds_cmd->add_option("--nr", b_nr, "RX grid size")->required();
  bounds_cmd->add_option("--k", b_k, "sparsity")->required();
  bounds_cmd->add_option("--delta", b_delta, "RIP constant");
  bounds_cmd->add_option("--log-base", base_name, "natural | base2")
      ->check(CLI::IsMember({"natural", "base2"}));

  auto* mu_cmd = app.add_subcommand("m-underbar", "exact counting lower bound");
  mu_cmd->add_option("--nt", b_nt, "TX grid size")->required();
  mu_cmd->add_option("--nr", b_nr, "RX grid size")->required();
  mu_cmd->add_option("--k", b_k, "sparsity")->required();

  auto* audit_cmd = app.add_subcommand("audit", "asymptotic ratio audit CSV");
  std::vector<int> audit_n;
  audit_cmd->add_option("--n", audit_n, "grid sizes, n = 2^t - 1")->required();
  audit_cmd->add_option("--k", b_k, "sparsity")->required();
  audit_cmd->add_option("--log-base", base_name, "natural | base2")
      ->check(CLI::IsMember({"natural", "base2"}));

  auto* fig1_cmd = app.add_subcommand("fig1", "bound comparison curves CSV");
  std::string fig_mode;
  int fig_k = 5, fig_n = 100, n_min = 0, n_max = 100, k_min = 1, k_max = 100;
  fig1_cmd->add_option("--mode", fig_mode, "fixed-k | fixed-n")
      ->required()
      ->check(CLI::IsMember({"fixed-k", "fixed-n"}));
  fig1_cmd->add_option("--k", fig_k, "sparsity (fixed-k mode)");
  fig1_cmd->add_option("--n", fig_n, "grid size (fixed-n mode)");
  fig1_cmd->add_option("--n-min", n_min, "smallest n (fixed-k mode)");
  fig1_cmd->add_option("--n-max", n_max, "largest n (fixed-k mode)");
  fig1_cmd->add_option("--k-min", k_min, "smallest k (fixed-n mode)");
  fig1_cmd->add_option("--k-max", k_max, "largest k (fixed-n mode)");
  fig1_cmd->add_option("--log-base", base_name, "natural | base2")
      ->check(CLI::IsMember({"natural", "base2"}));

  // ---- recover
  auto* rec_cmd = app.add_subcommand("recover", "sparse recovery from a system file");
  std::string system_file;
  int rec_k = 0;
  rec_cmd->add_option("--system", system_file, "JSON file {G, y, k}")->required();
  rec_cmd->add_option("--k", rec_k, "override sparsity from the file");
  rec_cmd->add_option("--alg", alg, "recovery algorithm: l0 | omp")
      ->check(CLI::IsMember({"l0", "omp"}));

  for (CLI::App* sc : app.get_subcommands([](const CLI::App*) { return true; }))
    sc->fallthrough();  // lets --output appear after the subcommand

  app.parse(argc, argv);

  if (*synth) {
    const PathSet ps = parse_paths(load_json(synth_paths));
    const auto pair = synthesize_channel(ps, !off_grid);
    emit_json({{"command", "synth"},
               {"config", config_echo(ps)},
               {"q", matrix_to_json(pair.q)},
               {"q_angular", matrix_to_json(pair.q_angular)},
               {"q_angular_vec", vector_to_json(pair.q_angular_vec)}},
              out_path);
    return 0;
  }

  if (*meas || *vect || *e2e_cmd) {
    const PathSet ps = parse_paths(load_json(ma.paths_file));
    const SensingDesign design = resolve_design(ma, ps.config);
    const NoiseSpec noise{ma.sigma, ma.noise_seed};
    json cfg = config_echo(ps);
    cfg["m_t"] = design.m_t();
    cfg["m_r"] = design.m_r();
    cfg["sigma"] = ma.sigma;
    cfg["noise_seed"] = ma.noise_seed;
    if (*meas) {
      const auto pair = synthesize_channel(ps);
      const Mat y = measure(pair.q, design, noise);
      emit_json({{"command", "measure"}, {"config", cfg}, {"y", matrix_to_json(y)}},
                out_path);
    } else if (*vect) {
      const auto pair = synthesize_channel(ps);
      const auto sys = vectorize_system(pair, design, ps.config, noise);
      emit_json({{"command", "vectorize"},
                 {"config", cfg},
                 {"m_t_matrix", matrix_to_json(sys.m_t)},
                 {"m_r_matrix", matrix_to_json(sys.m_r)},
                 {"g_v", matrix_to_json(sys.g_v)},
                 {"y_v", vector_to_json(sys.y_v)},
                 {"n_v", vector_to_json(sys.n_v)}},
                out_path);
    } else {
      cfg["alg"] = alg;
      const auto rep = end_to_end(ps, design, noise,
                                  alg == "omp" ? RecoveryAlgorithm::omp
                                               : RecoveryAlgorithm::l0_exhaustive);
      emit_json({{"command", "e2e"},
                 {"config", cfg},
                 {"nmse", rep.nmse},
                 {"support_match", rep.support_match},
                 {"result", recovery_to_json(rep.result)}},
                out_path);
    }
    return 0;
  }

  if (*spark_cmd) {
    const Mat g = matrix_from_json(load_json(matrix_file));
    const auto r = spark(g, spark_tol);
    emit_json({{"command", "spark"},
               {"config", {{"matrix", matrix_file}, {"tol", spark_tol}}},
               {"spark", r.spark},
               {"full_spark", r.full_spark},
               {"witness", r.witness}},
              out_path);
    return 0;
  }

  if (*rip_cmd) {
    const Mat g = matrix_from_json(load_json(matrix_file));
    json j = rip_to_json(rip_constant(g, rip_k));
    j["command"] = "rip";
    j["config"] = {{"matrix", matrix_file}, {"k", rip_k}};
    emit_json(j, out_path);
    return 0;
  }

  if (*lemmas) {
    int rip_holds = 0, sym_equal = 0, spark_holds = 0;
    std::mt19937_64 rng(lem_seed ^ 0x9e3779b97f4a7c15ull);
    for (int t = 0; t < lem_trials; ++t) {
      const double s = 1.0 / std::sqrt(static_cast<double>(lem_m));
      Mat a = complex_gaussian(lem_m, lem_n, s, lem_seed + 2 * t);
      Mat b = complex_gaussian(lem_m, lem_n, s, lem_seed + 2 * t + 1);
      a.colwise().normalize();  // unit columns, the convention the lemma assumes
      b.colwise().normalize();
      if (verify_kronecker_rip(a, b, lem_k).holds) ++rip_holds;
      if (verify_kronecker_symmetry(a, b, lem_k).equal) ++sym_equal;
      // binary factors with distinct nonzero columns keep the premise alive
      std::vector<int> cols{1, 2, 3, 4, 5, 6, 7};
      auto binary_factor = [&] {
        std::shuffle(cols.begin(), cols.end(), rng);
        Mat g = Mat::Zero(3, 6);
        for (int j = 0; j < 6; ++j)
          for (int i = 0; i < 3; ++i)
            if ((cols[j] >> i) & 1) g(i, j) = 1.0;
        return g;
      };
      const auto sp = verify_kronecker_spark(binary_factor(), binary_factor(), lem_k);
      if (sp.premise && sp.holds) ++spark_holds;
    }
    bool unitary_ok = true;
    for (int n = 1; n <= 8 && unitary_ok; ++n)
      unitary_ok = verify_unitary(dft_basis(n, 0.5));
    const bool all = rip_holds == lem_trials && sym_equal == lem_trials &&
                     spark_holds == lem_trials && unitary_ok;
    emit_json({{"command", "verify-lemmas"},
               {"config",
                {{"trials", lem_trials}, {"seed", lem_seed}, {"k", lem_k},
                 {"m", lem_m}, {"n", lem_n}}},
               {"rip_holds", rip_holds},
               {"symmetry_equal", sym_equal},
               {"spark_holds", spark_holds},
               {"unitarity_ok", unitary_ok},
               {"all_hold", all}},
              out_path);
    return all ? 0 : 1;
  }

  if (*bch_cmd) {
    BchDesign d = bch_parity_check(bch_t, bch_k);
    if (shorten_to > 0) d = shorten(d, shorten_to);
    json j = bch_to_json(d);
    j["command"] = "bch";
    j["config"] = {{"t", bch_t}, {"k", bch_k}};
    emit_json(j, out_path);
    return 0;
  }

  if (*bounds_cmd) {
    const LogBase base = log_base_from_name(base_name);
    BoundInputs in{b_nt, b_nr, b_k, b_delta, 0.1, base};
    const auto tight = tight_mimo_lower(in);
    emit_json({{"command", "bounds"},
               {"config",
                {{"n_t", b_nt}, {"n_r", b_nr}, {"k", b_k}, {"delta", b_delta},
                 {"log_base", base_name}}},
               {"c_delta", c_delta(b_delta, base)},
               {"loose", loose_mimo_lower(in)},
               {"tight", tight.value},
               {"tight_unscaled_shape", tight.unscaled_shape},
               {"m_underbar", m_underbar(b_nt, b_nr, b_k)}},
              out_path);
    return 0;
  }

  if (*mu_cmd) {
    emit_json({{"command", "m-underbar"},
               {"config", {{"n_t", b_nt}, {"n_r", b_nr}, {"k", b_k}}},
               {"m_underbar", m_underbar(b_nt, b_nr, b_k)}},
              out_path);
    return 0;
  }

  if (*audit_cmd) {
    const LogBase base = log_base_from_name(base_name);
    std::ostringstream csv;
    csv << "# config: audit k=" << b_k << " log_base=" << base_name << "\n";
    csv << "n_t,n_r,k,m_underbar,m_bch,ref,ratio_underbar,ratio_bch\n";
    for (const auto& r : asymptotic_ratio_audit(audit_n, b_k, base)) {
      char buf[192];
      std::snprintf(buf, sizeof(buf), "%d,%d,%d,%lld,%lld,%.10g,%.10g,%.10g\n",
                    r.n_t, r.n_r, r.k, static_cast<long long>(r.m_under),
                    static_cast<long long>(r.m_bch), r.ref, r.ratio_underbar,
                    r.ratio_bch);
      csv << buf;
    }
    emit_csv(csv.str(), out_path);
    return 0;
  }

  if (*fig1_cmd) {
    const LogBase base = log_base_from_name(base_name);
    std::ostringstream csv;
    std::vector<Fig1Row> rows;
    if (fig_mode == "fixed-k") {
      if (n_min <= 0) n_min = 2 * fig_k;
      csv << "# config: fig1 mode=fixed-k k=" << fig_k << " n_min=" << n_min
          << " n_max=" << n_max << " log_base=" << base_name << "\n";
      rows = fig1_fixed_k(fig_k, n_min, n_max, base);
    } else {
      csv << "# config: fig1 mode=fixed-n n=" << fig_n << " k_min=" << k_min
          << " k_max=" << k_max << " log_base=" << base_name << "\n";
      rows = fig1_fixed_n(fig_n, k_min, std::min(k_max, fig_n), base);
    }
    csv << "x,f_loose,f_tight,log_base\n";
    for (const auto& r : rows) csv << fmt_row(r.x, r.f_loose, r.f_tight, base);
    emit_csv(csv.str(), out_path);
    return 0;
  }

  if (*rec_cmd) {
    const json j = load_json(system_file);
    const Mat g = matrix_from_json(j.at("G"));
    const Vec y = vector_from_json(j.at("y"));
    const int k = rec_k > 0 ? rec_k : j.at("k").get<int>();
    const auto r = alg == "omp" ? omp_recover(g, y, k) : l0_exhaustive(g, y, k);
    json out = recovery_to_json(r);
    out["command"] = "recover";
    out["config"] = {{"system", system_file}, {"k", k}, {"alg", alg}};
    emit_json(out, out_path);
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return dispatch(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return 0;  // --help and friends
    std::cerr << json{{"error", "UsageError"}, {"message", e.what()}}.dump() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << json{{"error", e.code()}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const json::exception& e) {
    std::cerr << json{{"error", "BadInput"}, {"message", e.what()}}.dump() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << json{{"error", "InternalError"}, {"message", e.what()}}.dump()
              << "\n";
    return 1;
  }
}
