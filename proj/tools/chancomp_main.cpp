// Copyright 2026 chancomp contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "chancomp/clifford.hpp"
#include "chancomp/diamond.hpp"
#include "chancomp/dynamics.hpp"
#include "chancomp/groups.hpp"
#include "chancomp/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace chancomp;

namespace {

constexpr const char* kVersion = "1.0.0";

struct CommonOpts {
  std::uint64_t seed = 0;  // mandatory; no wall-clock default
  std::string out = ".";
  int restarts = 6;
  int ascent_iters = 80;
  double tol = 1e-9;
  int threads = 0;
};

void add_common(CLI::App* cmd, CommonOpts& c) {
  cmd->add_option("--seed", c.seed, "RNG seed (required; runs are reproducible)")->required();
  cmd->add_option("--out", c.out, "output directory")->capture_default_str();
  cmd->add_option("--restarts", c.restarts, "ascent restarts")->capture_default_str();
  cmd->add_option("--ascent-iters", c.ascent_iters, "ascent iterations per restart")
      ->capture_default_str();
  cmd->add_option("--tol", c.tol, "projection tolerance")->capture_default_str();
  cmd->add_option("--threads", c.threads, "worker cap (CHANCOMP_THREADS as fallback)");
}

SolveOptions to_solve(const CommonOpts& c) {
  SolveOptions o;
  o.seed = c.seed;
  o.restarts = c.restarts;
  o.ascent_iters = c.ascent_iters;
  o.tol = c.tol;
  return o;
}

void apply_threads(const CommonOpts& c) {
  int n = c.threads;
  if (n <= 0)
    if (const char* env = std::getenv("CHANCOMP_THREADS")) n = std::atoi(env);
  if (n > 0) Eigen::setNbThreads(n);
}

fs::path prepare_out(const CommonOpts& c) {
  fs::path dir(c.out);
  fs::create_directories(dir);
  return dir;
}

void write_manifest(const fs::path& dir, const std::string& command, const json& inputs,
                    const CommonOpts& c) {
  json m;
  m["command"] = command;
  m["inputs"] = inputs;
  m["seed"] = c.seed;
  m["tolerances"] = {{"solve_tol", c.tol},
                     {"cptp_tol", QuantumChannel::kCptpTol},
                     {"sdp_tol", 1e-9},
                     {"sdp_fallback_tol", 1e-7}};
  m["versions"] = {{"chancomp", kVersion},
                   {"eigen", std::to_string(EIGEN_WORLD_VERSION) + "." +
                                 std::to_string(EIGEN_MAJOR_VERSION) + "." +
                                 std::to_string(EIGEN_MINOR_VERSION)}};
  write_text_file(dir / "manifest.json", m.dump(2) + "\n");
}

void write_estimate_csv(const fs::path& path, const std::string& quantity,
                        const ComplexityEstimate& e, const std::string& claim) {
  std::ostringstream csv;
  csv << "quantity,lower,upper,certificate_min,seed,claim\n";
  double cert_min = e.upper;
  for (const auto& c : e.certificates) cert_min = std::min(cert_min, c.value);
  csv << quantity << "," << format_double(e.lower) << "," << format_double(e.upper) << ","
      << format_double(cert_min) << "," << e.seed << "," << claim << "\n";
  write_text_file(path, csv.str());
}

std::vector<double> parse_grid(const std::string& text, const SemigroupFamily& f) {
  if (text == "auto") return default_time_grid(f);
  std::vector<double> grid;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) grid.push_back(std::stod(tok));
  return grid;
}

SemigroupFamily build_semigroup(const std::string& builtin, const std::string& resource_path,
                                const std::vector<double>& mu, const std::string& kind) {
  if (!builtin.empty()) {
    if (builtin != "pauli-mixture")
      throw InputError("unknown builtin semigroup '" + builtin + "' (try pauli-mixture)");
    ResourceSet r = symmetrize(pauli_resources(1).set);
    std::vector<double> uniform(r.elements.size(), 1.0 / double(r.elements.size()));
    return make_semigroup(SemigroupFamily::Kind::Discrete, r, uniform);
  }
  if (resource_path.empty())
    throw InputError("either --semigroup <builtin> or --resource <file> is required");
  ResourceSet r = load_resource(resource_path);
  if (kind == "lindblad") return make_semigroup(SemigroupFamily::Kind::Lindblad, r);
  if (r.kind == ResourceSet::Kind::Discrete && !r.symmetrized) r = symmetrize(r);
  std::vector<double> weights = mu;
  if (weights.empty())
    weights.assign(r.elements.size(), 1.0 / double(r.elements.size()));
  return make_semigroup(SemigroupFamily::Kind::Discrete, r, weights);
}

void write_trajectory_svg(const fs::path& path, const TrajectoryRecord& rec) {
  const double W = 640, H = 400, ml = 60, mb = 40, mt = 20, mr = 20;
  double tmax = rec.points.back().time;
  double ymax = 0;
  for (const auto& p : rec.points) ymax = std::max(ymax, p.estimate.upper);
  ymax = std::max(ymax, 1e-12);
  auto X = [&](double t) { return ml + (W - ml - mr) * t / tmax; };
  auto Y = [&](double v) { return H - mb - (H - mb - mt) * v / ymax; };
  std::ostringstream s;
  s << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H << "'>\n";
  s << "<rect width='100%' height='100%' fill='white'/>\n";
  // shaded certified band
  s << "<polygon fill='#cfe2ff' stroke='none' points='";
  for (const auto& p : rec.points) s << X(p.time) << "," << Y(p.estimate.lower) << " ";
  for (auto it = rec.points.rbegin(); it != rec.points.rend(); ++it)
    s << X(it->time) << "," << Y(it->estimate.upper) << " ";
  s << "'/>\n";
  for (bool upper : {false, true}) {
    s << "<polyline fill='none' stroke='" << (upper ? "#d62728" : "#1f77b4")
      << "' stroke-width='1.5' points='";
    for (const auto& p : rec.points)
      s << X(p.time) << "," << Y(upper ? p.estimate.upper : p.estimate.lower) << " ";
    s << "'/>\n";
  }
  s << "<line x1='" << X(rec.return_time_half) << "' y1='" << Y(0) << "' x2='"
    << X(rec.return_time_half) << "' y2='" << Y(ymax) << "' stroke='#666' stroke-dasharray='4'/>\n";
  s << "<line x1='" << ml << "' y1='" << H - mb << "' x2='" << W - mr << "' y2='" << H - mb
    << "' stroke='black'/>\n";
  s << "<line x1='" << ml << "' y1='" << mt << "' x2='" << ml << "' y2='" << H - mb
    << "' stroke='black'/>\n";
  s << "<text x='" << (W / 2) << "' y='" << (H - 8) << "' font-size='12'>time</text>\n";
  s << "<text x='8' y='" << (H / 2) << "' font-size='12'>complexity</text>\n";
  s << "</svg>\n";
  write_text_file(path, s.str());
}

int run_verify_pauli(const fs::path& dir, const CommonOpts& c, int qubits, int samples) {
  std::ostringstream csv;
  csv << "qubits,samples,skipped,min_ratio,max_ratio,holds,claim\n";
  for (int n = 1; n <= qubits; ++n) {
    NormEquivalenceReport rep = norm_equivalence_check(samples, n, c.seed + n);
    csv << n << "," << rep.samples << "," << rep.skipped << "," << format_double(rep.min_ratio)
        << "," << format_double(rep.max_ratio) << "," << (rep.holds ? 1 : 0)
        << ",1/4 <= site-trace norm / Pauli Lipschitz norm <= 3/4\n";
  }
  write_text_file(dir / "verify_pauli.csv", csv.str());
  return 0;
}

int run_verify_clifford(const fs::path& dir, const CommonOpts& c, int qubits, int samples) {
  std::ostringstream csv;
  csv << "qubits,samples,commutant_match,max_excess,contraction_holds,claim\n";
  for (int n = 1; n <= qubits; ++n) {
    ContinuousCliffordReport rep =
        continuous_from_discrete(pauli_resources(n), samples, c.seed + n);
    csv << n << "," << rep.samples << "," << (rep.commutant_match ? 1 : 0) << ","
        << format_double(rep.max_excess) << "," << (rep.contraction_holds ? 1 : 0)
        << ",principal-log generators dominate the discrete Lipschitz norm\n";
  }
  write_text_file(dir / "verify_clifford.csv", csv.str());
  return 0;
}

int run_verify_word_length(const fs::path& dir, const CommonOpts& c) {
  struct Case {
    std::string name;
    std::vector<std::vector<int>> gens;
  };
  std::vector<Case> cases = {
      {"Z2", {{1, 0}}},
      {"Z3", {{1, 2, 0}}},
      {"Z4", {{1, 2, 3, 0}}},
      {"S3", {{1, 0, 2}, {0, 2, 1}}},
  };
  std::ostringstream csv;
  csv << "group,order,diameter,mean_length,lower,upper,width,claim\n";
  for (const auto& cs : cases) {
    CommutativeLengthCheck chk = verify_expected_length_commutative(cs.gens, to_solve(c));
    csv << cs.name << "," << chk.order << "," << chk.diameter << ","
        << format_double(chk.mean_length) << "," << format_double(chk.estimate.lower) << ","
        << format_double(chk.estimate.upper) << "," << format_double(chk.width)
        << ",expected length equals the mean Cayley word length\n";
  }
  write_text_file(dir / "verify_word_length.csv", csv.str());
  return 0;
}

int run_verify_tensor_additivity(const fs::path& dir, const CommonOpts& c) {
  ResourceSet r1 = symmetrize(pauli_resources(1).set);
  QuantumChannel dep = unitary_mixture(r1.elements, std::vector<double>(4, 0.25));
  QuantumChannel adx = unitary_mixture({pauli_x()}, {1.0});
  LipschitzStructure l1 = build_structure(r1);
  ResourceSet joint = join_resources({r1, r1});
  LipschitzStructure lj = build_structure(joint);

  SolveOptions o = to_solve(c);
  ComplexityEstimate e1 = complexity_estimate(dep, l1, o);
  ComplexityEstimate e2 = complexity_estimate(adx, l1, o);

  SolveOptions oj = o;
  // additive witness: embed each factor witness with identity on the other
  // leg; both relative signs, since the extremal eigenvalues must align
  if (e1.witness.size() > 0 && e2.witness.size() > 0) {
    oj.extra_starts.push_back(kron(e1.witness, identity(2)) + kron(identity(2), e2.witness));
    oj.extra_starts.push_back(kron(e1.witness, identity(2)) - kron(identity(2), e2.witness));
  }
  oj.extra_certificates.push_back({"factor_upper_sum", e1.upper + e2.upper});
  ComplexityEstimate ej = complexity_estimate(combine(CombineKind::Tensor, {dep, adx}), lj, oj);

  bool lower_ok = ej.lower >= e1.lower + e2.lower - 1e-3;
  bool upper_ok = ej.upper <= e1.upper + e2.upper + 1e-3;
  std::ostringstream csv;
  csv << "lower_joint,lower_sum,upper_joint,upper_sum,lower_additive,upper_subadditive,claim\n";
  csv << format_double(ej.lower) << "," << format_double(e1.lower + e2.lower) << ","
      << format_double(ej.upper) << "," << format_double(e1.upper + e2.upper) << ","
      << (lower_ok ? 1 : 0) << "," << (upper_ok ? 1 : 0)
      << ",complexity is additive across independent tensor factors\n";
  write_text_file(dir / "verify_tensor_additivity.csv", csv.str());
  return (lower_ok && upper_ok) ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"chancomp: certified Lipschitz complexity of quantum channels"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  std::function<int()> action;

  // ---- complexity ----
  auto* c_cmd = app.add_subcommand("complexity", "certified complexity interval of a channel");
  static CommonOpts c_opts;
  static std::string c_channel, c_resource;
  add_common(c_cmd, c_opts);
  c_cmd->add_option("--channel", c_channel, "channel JSON file")->required();
  c_cmd->add_option("--resource", c_resource, "resource JSON file")->required();
  c_cmd->callback([&] {
    action = [] {
      apply_threads(c_opts);
      fs::path dir = prepare_out(c_opts);
      QuantumChannel phi = load_channel(c_channel);
      LipschitzStructure l = build_structure(load_resource(c_resource));
      ComplexityEstimate e = complexity_estimate(phi, l, to_solve(c_opts));
      save_estimate(dir / "estimate.json", e);
      write_estimate_csv(dir / "complexity.csv", "complexity", e,
                         "certified interval for the channel complexity");
      write_manifest(dir, "complexity", {{"channel", c_channel}, {"resource", c_resource}},
                     c_opts);
      return 0;
    };
  });

  // ---- expected-length ----
  auto* el_cmd = app.add_subcommand("expected-length", "expected length of a resource structure");
  static CommonOpts el_opts;
  static std::string el_resource;
  add_common(el_cmd, el_opts);
  el_cmd->add_option("--resource", el_resource, "resource JSON file")->required();
  el_cmd->callback([&] {
    action = [] {
      apply_threads(el_opts);
      fs::path dir = prepare_out(el_opts);
      LipschitzStructure l = build_structure(load_resource(el_resource));
      ComplexityEstimate e = expected_length(l, to_solve(el_opts));
      save_estimate(dir / "estimate.json", e);
      write_estimate_csv(dir / "expected_length.csv", "expected_length", e,
                         "certified interval for the expected length");
      write_manifest(dir, "expected-length", {{"resource", el_resource}}, el_opts);
      return 0;
    };
  });

  // ---- cb-complexity ----
  auto* cb_cmd = app.add_subcommand("cb-complexity", "correlation-assisted complexity interval");
  static CommonOpts cb_opts;
  static std::string cb_channel, cb_resource;
  static std::vector<int> cb_levels;
  add_common(cb_cmd, cb_opts);
  cb_cmd->add_option("--channel", cb_channel, "channel JSON file")->required();
  cb_cmd->add_option("--resource", cb_resource, "resource JSON file")->required();
  cb_cmd->add_option("--levels", cb_levels, "ancilla dimensions (default 1,2,d)");
  cb_cmd->callback([&] {
    action = [] {
      apply_threads(cb_opts);
      fs::path dir = prepare_out(cb_opts);
      QuantumChannel phi = load_channel(cb_channel);
      LipschitzStructure l = build_structure(load_resource(cb_resource));
      SolveOptions o = to_solve(cb_opts);
      o.ancilla_levels = cb_levels;
      ComplexityEstimate e = cb_complexity_estimate(phi, l, o);
      save_estimate(dir / "estimate.json", e);
      write_estimate_csv(dir / "cb_complexity.csv", "cb_complexity", e,
                         "certified interval for the completely bounded complexity");
      write_manifest(dir, "cb-complexity", {{"channel", cb_channel}, {"resource", cb_resource}},
                     cb_opts);
      return 0;
    };
  });

  // ---- diamond ----
  auto* d_cmd = app.add_subcommand("diamond", "diamond distance between two channels");
  static CommonOpts d_opts;
  static std::string d_a, d_b;
  add_common(d_cmd, d_opts);
  d_cmd->add_option("--channel", d_a, "channel JSON file")->required();
  d_cmd->add_option("--channel-b", d_b, "second channel (default: identity)");
  d_cmd->callback([&] {
    action = [] {
      apply_threads(d_opts);
      fs::path dir = prepare_out(d_opts);
      QuantumChannel a = load_channel(d_a);
      QuantumChannel b = d_b.empty() ? QuantumChannel::identity_channel(a.dim()) : load_channel(d_b);
      DiamondResult r = diamond_distance(a, b);
      std::ostringstream csv;
      csv << "value,lower,upper,gap,claim\n";
      csv << format_double(r.value) << "," << format_double(r.lower) << ","
          << format_double(r.upper) << "," << format_double(r.gap)
          << ",diamond distance with primal-dual enclosure\n";
      write_text_file(dir / "diamond.csv", csv.str());
      write_manifest(dir, "diamond", {{"channel", d_a}, {"channel_b", d_b}}, d_opts);
      return 0;
    };
  });

  // ---- return-time ----
  auto* rt_cmd = app.add_subcommand("return-time", "epsilon-return time of a semigroup");
  static CommonOpts rt_opts;
  static std::string rt_builtin, rt_resource, rt_kind = "discrete";
  static std::vector<double> rt_mu;
  static double rt_eps = 0.5;
  add_common(rt_cmd, rt_opts);
  rt_cmd->add_option("--semigroup", rt_builtin, "builtin semigroup (pauli-mixture)");
  rt_cmd->add_option("--resource", rt_resource, "resource JSON file");
  rt_cmd->add_option("--mu", rt_mu, "mixture weights (discrete kind)");
  rt_cmd->add_option("--kind", rt_kind, "discrete|lindblad")->capture_default_str();
  rt_cmd->add_option("--eps", rt_eps, "distance threshold in (0,2)")->capture_default_str();
  rt_cmd->callback([&] {
    action = [] {
      apply_threads(rt_opts);
      fs::path dir = prepare_out(rt_opts);
      SemigroupFamily f = build_semigroup(rt_builtin, rt_resource, rt_mu, rt_kind);
      double t = return_time(f, rt_eps);
      std::ostringstream csv;
      csv << "eps,time,claim\n";
      csv << format_double(rt_eps) << "," << format_double(t)
          << ",first time the semigroup is eps-close to its fixed-point projection\n";
      write_text_file(dir / "return_time.csv", csv.str());
      write_manifest(dir, "return-time",
                     {{"semigroup", rt_builtin}, {"resource", rt_resource}, {"eps", rt_eps}},
                     rt_opts);
      return 0;
    };
  });

  // ---- trajectory ----
  auto* tj_cmd = app.add_subcommand("trajectory", "complexity growth along a semigroup");
  static CommonOpts tj_opts;
  static std::string tj_builtin, tj_resource, tj_kind = "discrete", tj_grid = "auto";
  static std::vector<double> tj_mu;
  static bool tj_plot = false;
  add_common(tj_cmd, tj_opts);
  tj_cmd->add_option("--semigroup", tj_builtin, "builtin semigroup (pauli-mixture)");
  tj_cmd->add_option("--resource", tj_resource, "resource JSON file");
  tj_cmd->add_option("--mu", tj_mu, "mixture weights (discrete kind)");
  tj_cmd->add_option("--kind", tj_kind, "discrete|lindblad")->capture_default_str();
  tj_cmd->add_option("--grid", tj_grid, "auto or comma-separated times")->capture_default_str();
  tj_cmd->add_flag("--plot", tj_plot, "also emit an SVG line-band plot");
  tj_cmd->callback([&] {
    action = [] {
      apply_threads(tj_opts);
      fs::path dir = prepare_out(tj_opts);
      SemigroupFamily f = build_semigroup(tj_builtin, tj_resource, tj_mu, tj_kind);
      TrajectoryRecord rec = complexity_trajectory(f, parse_grid(tj_grid, f), to_solve(tj_opts));
      std::ostringstream csv;
      csv << "time,lower,upper,certificate_min,regime,seed,claim\n";
      for (const auto& p : rec.points) {
        double cert_min = p.estimate.upper;
        for (const auto& cert : p.estimate.certificates)
          cert_min = std::min(cert_min, cert.value);
        csv << format_double(p.time) << "," << format_double(p.estimate.lower) << ","
            << format_double(p.estimate.upper) << "," << format_double(cert_min) << ","
            << p.regime << "," << p.estimate.seed
            << ",linear growth then saturation near the expected length\n";
      }
      write_text_file(dir / "trajectory.csv", csv.str());
      if (tj_plot) write_trajectory_svg(dir / "trajectory.svg", rec);
      json inputs = {{"semigroup", tj_builtin}, {"resource", tj_resource}, {"grid", tj_grid}};
      inputs["return_time_half"] = rec.return_time_half;
      write_manifest(dir, "trajectory", inputs, tj_opts);
      return 0;
    };
  });

  // ---- group-stats ----
  auto* g_cmd = app.add_subcommand("group-stats", "word lengths of a generated matrix group");
  static CommonOpts g_opts;
  static std::string g_resource;
  static int g_max_order = 512;
  add_common(g_cmd, g_opts);
  g_cmd->add_option("--resource", g_resource, "discrete resource JSON file")->required();
  g_cmd->add_option("--max-order", g_max_order, "closure size cap")->capture_default_str();
  g_cmd->callback([&] {
    action = [] {
      apply_threads(g_opts);
      fs::path dir = prepare_out(g_opts);
      ResourceSet r = load_resource(g_resource);
      if (r.kind != ResourceSet::Kind::Discrete)
        throw InputError("group-stats: resource must be discrete (unitary generators)");
      auto table = group_closure(r.elements, g_max_order);
      if (!table)
        throw ConvergenceError("group-stats: closure exceeds --max-order (infinite group?)");
      write_text_file(dir / "group.json", group_report_to_json(*table).dump(2) + "\n");
      LengthStats stats = length_statistics(*table);
      std::ostringstream csv;
      csv << "order,diameter,mean_length,claim\n";
      csv << table->elements.size() << "," << table->diameter << ","
          << format_double(stats.mean)
          << ",Cayley word-length statistics of the generated group\n";
      write_text_file(dir / "group_stats.csv", csv.str());
      write_manifest(dir, "group-stats", {{"resource", g_resource}}, g_opts);
      return 0;
    };
  });

  // ---- verify ----
  auto* v_cmd = app.add_subcommand("verify", "built-in lemma and identity checks");
  v_cmd->require_subcommand(1);
  static CommonOpts v_opts;
  static int v_qubits = 2, v_samples = 100;

  auto* vp = v_cmd->add_subcommand("pauli", "norm-equivalence constants on n-qubit Paulis");
  add_common(vp, v_opts);
  vp->add_option("--qubits", v_qubits, "largest qubit count")->capture_default_str();
  vp->add_option("--samples", v_samples, "Ginibre samples per size")->capture_default_str();
  vp->callback([&] {
    action = [] {
      apply_threads(v_opts);
      fs::path dir = prepare_out(v_opts);
      int rc = run_verify_pauli(dir, v_opts, v_qubits, v_samples);
      write_manifest(dir, "verify pauli", {{"qubits", v_qubits}, {"samples", v_samples}}, v_opts);
      return rc;
    };
  });

  auto* vc = v_cmd->add_subcommand("clifford", "continuous generators from discrete resources");
  add_common(vc, v_opts);
  vc->add_option("--qubits", v_qubits, "largest qubit count")->capture_default_str();
  vc->add_option("--samples", v_samples, "Ginibre samples per size")->capture_default_str();
  vc->callback([&] {
    action = [] {
      apply_threads(v_opts);
      fs::path dir = prepare_out(v_opts);
      int rc = run_verify_clifford(dir, v_opts, v_qubits, v_samples);
      write_manifest(dir, "verify clifford", {{"qubits", v_qubits}, {"samples", v_samples}},
                     v_opts);
      return rc;
    };
  });

  auto* vt = v_cmd->add_subcommand("tensor-additivity", "additivity across tensor factors");
  add_common(vt, v_opts);
  vt->callback([&] {
    action = [] {
      apply_threads(v_opts);
      fs::path dir = prepare_out(v_opts);
      int rc = run_verify_tensor_additivity(dir, v_opts);
      write_manifest(dir, "verify tensor-additivity", json::object(), v_opts);
      return rc;
    };
  });

  auto* vw = v_cmd->add_subcommand("word-length", "expected length vs mean word length");
  add_common(vw, v_opts);
  vw->callback([&] {
    action = [] {
      apply_threads(v_opts);
      fs::path dir = prepare_out(v_opts);
      int rc = run_verify_word_length(dir, v_opts);
      write_manifest(dir, "verify word-length", json::object(), v_opts);
      return rc;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);  // prints usage text
    return 64;
  }

  try {
    return action ? action() : 64;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const CptpError& e) {
    std::cerr << "validation error: " << e.what() << "\n";
    return 2;
  } catch (const ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << "\n";
    return 3;
  } catch (const ConditioningError& e) {
    std::cerr << "conditioning error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
