// Copyright 2026 The boundent Authors
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

#include <charconv>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "boundent/bell.hpp"
#include "boundent/cli.hpp"
#include "boundent/diagnostics.hpp"
#include "boundent/errors.hpp"
#include "boundent/io.hpp"
#include "boundent/optics.hpp"
#include "boundent/states.hpp"

namespace boundent::cli {

namespace {

using io::Json;

struct Globals {
  std::string out;
  std::optional<std::uint64_t> seed;
  double tol = tol::kPsd;
};

// key=value list with typed accessors; leftovers are rejected by finish().
class Params {
 public:
  explicit Params(const std::vector<std::string>& items) {
    for (const auto& item : items) {
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw InvariantViolation("parameter", "expected key=value, got \"" + item + "\"");
      }
      if (!values_.emplace(item.substr(0, eq), item.substr(eq + 1)).second) {
        throw InvariantViolation("parameter", "\"" + item.substr(0, eq) + "\" given twice");
      }
    }
  }

  bool has(const std::string& key) const { return values_.count(key) != 0; }

  const std::string& text(const std::string& key) {
    const auto it = values_.find(key);
    if (it == values_.end()) throw InvariantViolation("parameter", "missing parameter " + key);
    used_.insert(key);
    return it->second;
  }

  double real(const std::string& key) {
    const std::string& s = text(key);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || !std::isfinite(v)) {
      // Allow simple fractions such as 1/3.
      const auto slash = s.find('/');
      if (slash != std::string::npos) {
        double num = 0.0;
        double den = 0.0;
        const auto r1 = std::from_chars(s.data(), s.data() + slash, num);
        const auto r2 = std::from_chars(s.data() + slash + 1, s.data() + s.size(), den);
        if (r1.ec == std::errc{} && r1.ptr == s.data() + slash && r2.ec == std::errc{} &&
            r2.ptr == s.data() + s.size() && den != 0.0) {
          return num / den;
        }
      }
      throw InvariantViolation("parameter", key + " = \"" + s + "\" is not a number");
    }
    return v;
  }

  double real_or(const std::string& key, double fallback) { return has(key) ? real(key) : fallback; }

  int whole(const std::string& key) {
    const std::string& s = text(key);
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
      throw InvariantViolation("parameter", key + " = \"" + s + "\" is not an integer");
    }
    return v;
  }

  Sign sign_or(const std::string& key, Sign fallback) {
    if (!has(key)) return fallback;
    const std::string& s = text(key);
    if (s == "+" || s == "plus") return Sign::plus;
    if (s == "-" || s == "minus") return Sign::minus;
    throw InvariantViolation("parameter", key + " must be + or -");
  }

  void finish(const std::string& family) const {
    for (const auto& [k, v] : values_) {
      if (!used_.count(k)) throw InvariantViolation("parameter", "unknown parameter " + k + " for " + family);
    }
  }

  Json echo() const {
    Json j = Json::object();
    for (const auto& [k, v] : values_) j[k] = v;
    return j;
  }

 private:
  std::map<std::string, std::string> values_;
  std::set<std::string> used_;
};

void require_range(const std::string& what, double v, double lo, double hi) {
  if (!(v >= lo && v <= hi)) {
    std::ostringstream os;
    os << what << " = " << v << " outside [" << lo << ", " << hi << "]";
    throw InvariantViolation("parameter_range", os.str());
  }
}

void require_qubits(const std::string& family, int n, int lo, int hi) {
  if (n < lo || n > hi) {
    throw InvariantViolation("parameter_range", family + " needs " + std::to_string(lo) + " <= n <= " +
                                                    std::to_string(hi) + ", got " + std::to_string(n));
  }
}

void require_positive(const std::string& what, double v) {
  if (!(v > 0.0)) {
    std::ostringstream os;
    os << what << " = " << v << " must be > 0";
    throw InvariantViolation("positivity", os.str());
  }
}

std::map<std::uint64_t, double> parse_lambdas(const std::string& s) {
  std::map<std::uint64_t, double> out;
  if (s.empty()) return out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    std::uint64_t j = 0;
    double v = 0.0;
    const char* end = item.data() + item.size();
    if (colon == std::string::npos ||
        std::from_chars(item.data(), item.data() + colon, j).ptr != item.data() + colon ||
        std::from_chars(item.data() + colon + 1, end, v).ptr != end) {
      throw InvariantViolation("parameter", "lambdas entries must read j:value, got \"" + item + "\"");
    }
    out[j] = v;
  }
  return out;
}

// One factory family with its parameters resolved: the state, a scheme that
// prepares it, and notes about the parameter regime.
struct Family {
  std::string name;
  DensityMatrix state;
  std::optional<MixingScheme> scheme;
  std::vector<std::string> notes;
};

DurCiracSpec checked_spec(int n, double l0p, double l0m, std::map<std::uint64_t, double> lambdas) {
  require_qubits("dur_cirac", n, 2, kMaxQubits);
  if (l0p < 0.0 || l0m < 0.0) throw InvariantViolation("positivity", "lambda0+/- must be >= 0");
  for (const auto& [j, v] : lambdas) {
    if (j < 1 || j > (std::uint64_t{1} << (n - 1)) - 1) {
      throw InvariantViolation("parameter_range", "lambda index " + std::to_string(j) + " outside 1..2^(N-1)-1");
    }
    if (v < 0.0) throw InvariantViolation("positivity", "lambda_" + std::to_string(j) + " must be >= 0");
  }
  return DurCiracSpec(n, l0p, l0m, std::move(lambdas));
}

Family make_family(const std::string& name, Params& p) {
  auto with_scheme = [&](DensityMatrix rho, MixingScheme s) {
    return Family{name, std::move(rho), std::move(s), {}};
  };
  Family f = [&]() -> Family {
    if (name == "smolin") {
      const std::string form = p.has("form") ? p.text("form") : "bell";
      if (form != "bell" && form != "ghz") throw InvariantViolation("parameter", "form must be bell or ghz");
      return with_scheme(form == "bell" ? smolin_bell() : smolin_ghz(), scheme_smolin());
    }
    if (name == "abls") {
      const double a = p.real("a");
      const double b = p.real("b");
      const double c = p.real("c");
      require_positive("a", a);
      require_positive("b", b);
      require_positive("c", c);
      Family out = with_scheme(abls({a, b, c}), scheme_abls(a, b, c));
      if (!ABLSParams{a, b, c}.flag_entangled()) out.notes.push_back("abc = 1: the state is separable");
      return out;
    }
    if (name == "dur_cirac") {
      const int n = p.whole("n");
      const DurCiracSpec spec = checked_spec(n, p.real("lambda0_plus"), p.real_or("lambda0_minus", 0.0),
                                             p.has("lambdas") ? parse_lambdas(p.text("lambdas"))
                                                              : std::map<std::uint64_t, double>{});
      return with_scheme(dur_cirac(spec), scheme_dur_cirac(spec));
    }
    if (name == "dur") {
      const int n = p.whole("n");
      const double x = p.real("x");
      require_qubits("dur", n, 3, kMaxQubits);
      require_range("x", x, 0.0, 1.0);
      Family out = with_scheme(dur_state(n, x), scheme_dur(n, x));
      if (x == 0.0 || x > 1.0 / (n + 1)) {
        out.notes.push_back("x outside the bound-entangled range 0 < x <= 1/(N+1)");
      }
      if (n < 4) out.notes.push_back("N = 3 is outside the bound-entangled family N >= 4");
      return out;
    }
    if (name == "llk") {
      const int n = p.whole("n");
      const double x = p.real("x");
      require_qubits("llk", n, 4, kMaxQubits);
      require_range("x", x, 0.0, 1.0);
      Family out = with_scheme(llk_state(n, x), scheme_llk(n, x));
      if (x == 0.0 || x > 1.0 / (n - 1)) {
        out.notes.push_back("x outside the bound-entangled range 0 < x <= 1/(N-1)");
      }
      return out;
    }
    if (name == "chi3") {
      const double x = p.real("x");
      require_range("x", x, 0.0, 1.0);
      Family out = with_scheme(chi3(x), scheme_chi3(x));
      if (x == 0.0 || x > 1.0 / 3.0) out.notes.push_back("x outside the bound-entangled range 0 < x <= 1/3");
      return out;
    }
    if (name == "upb") return with_scheme(upb_state(), scheme_upb());
    if (name == "ghz") {
      const int n = p.whole("n");
      require_qubits("ghz", n, 2, kMaxQubits);
      const Sign s = p.sign_or("sign", Sign::plus);
      return with_scheme(DensityMatrix::pure(ghz(n, s)), scheme_ghz_mixture(n, {{0, s, 1.0}}));
    }
    throw InvariantViolation("family", "unknown family \"" + name +
                                           "\" (smolin, abls, dur_cirac, dur, llk, chi3, upb, ghz)");
  }();
  p.finish(name);
  return f;
}

struct LoadedState {
  DensityMatrix rho;
  Json input;
};

LoadedState load_state(const std::string& path) {
  const std::string text = io::read_text(path);
  DensityMatrix rho = io::state_from_json(io::parse_json(text, path));
  return {std::move(rho), Json{{"path", path}, {"sha256", io::sha256_hex(text)}}};
}

void emit(const io::Report& report, const Globals& g, bool out_is_report, std::ostream& out) {
  const std::string body = io::dump(report.to_json());
  out << body;
  if (out_is_report && !g.out.empty()) io::write_text(g.out, body);
}

Json state_summary(const DensityMatrix& rho) {
  return Json{{"n_qubits", rho.n_qubits()},
              {"trace", rho.op().trace().real()},
              {"rank", numerical_rank(rho)},
              {"purity", purity(rho)}};
}

// ---------------------------------------------------------------- commands

void cmd_build(const Globals& g, const std::string& family, const std::vector<std::string>& items,
               std::ostream& out) {
  Params params(items);
  io::Report report;
  report.command = "build";
  report.inputs = {{"family", family}, {"params", params.echo()}};
  Family f = make_family(family, params);
  report.results = state_summary(f.state);
  report.results["notes"] = f.notes;
  if (!g.out.empty()) {
    const std::string body = io::dump(io::state_to_json(f.state));
    io::write_text(g.out, body);
    report.results["state_file"] = {{"path", g.out}, {"sha256", io::sha256_hex(body)}};
  }
  emit(report, g, false, out);
}

void cmd_diagnose(const Globals& g, const std::string& in, bool all_cuts, const std::string& hint_name,
                  std::ostream& out) {
  FamilyHint hint = FamilyHint::none;
  if (hint_name == "upb") {
    hint = FamilyHint::upb;
  } else if (hint_name != "none") {
    throw InvariantViolation("parameter", "--hint must be none or upb");
  }
  const LoadedState s = load_state(in);
  io::Report report;
  report.command = "diagnose";
  report.inputs = {{"state", s.input}, {"tol", g.tol}, {"all_cuts", all_cuts}, {"hint", hint_name}};

  const PptProfile profile = ppt_profile(s.rho, g.tol);
  const BoundEntanglementVerdict v = certify_bound_entangled(s.rho, profile, hint);

  std::set<std::uint32_t> shown;
  if (v.negativity_cut) shown.insert(v.negativity_cut->group_a_qubits());
  for (const auto& c : v.undistillable.covers) shown.insert(c.cut.group_a_qubits());
  Json cuts = Json::array();
  for (const auto& r : profile.records) {
    if (!all_cuts && r.is_ppt && !shown.count(r.cut.group_a_qubits())) continue;
    cuts.push_back({{"group_a", io::cut_to_json(r.cut)},
                    {"group_b", r.cut.group_b()},
                    {"min_pt_eigenvalue", r.min_pt_eigenvalue},
                    {"negativity", r.negativity},
                    {"ppt", r.is_ppt}});
  }

  const DurCiracSpec dc = project_to_dc(s.rho);
  Json lambdas = Json::object();
  for (const auto& [j, l] : dc.lambdas()) lambdas[std::to_string(j)] = l;
  Json dc_neg = Json::object();
  for (std::uint64_t j = 1; j <= dc.max_index(); ++j) dc_neg[std::to_string(j)] = dc_negativity(dc, j);

  Json covers = Json::array();
  for (const auto& c : v.undistillable.covers) {
    covers.push_back({{"pair", {c.k, c.l}}, {"cut", io::cut_to_json(c.cut)}});
  }
  Json uncovered = Json::array();
  for (const auto& [k, l] : v.undistillable.uncovered) uncovered.push_back({k, l});

  const double pt_value = pt_inequality_value(s.rho);
  report.results = state_summary(s.rho);
  report.results["cuts"] = std::move(cuts);
  report.results["all_ppt"] = profile.all_ppt();
  report.results["pt_inequality_value"] = pt_value;
  report.results["pt_inequality_violated"] = pt_value > 1.0;
  report.results["dc_projection"] = {{"lambda0_plus", dc.lambda0_plus()},
                                     {"lambda0_minus", dc.lambda0_minus()},
                                     {"lambdas", std::move(lambdas)},
                                     {"delta", dc.delta()},
                                     {"dc_negativity", std::move(dc_neg)}};
  report.results["certificate"] = {
      {"entangled_evidence", to_string(v.entangled_evidence)},
      {"negativity_cut", v.negativity_cut ? io::cut_to_json(*v.negativity_cut) : Json(nullptr)},
      {"evidence_negativity", v.evidence_negativity},
      {"undistillable", v.undistillable.undistillable},
      {"pair_covers", std::move(covers)},
      {"uncovered_pairs", std::move(uncovered)}};
  report.verdict = to_string(v.verdict);
  emit(report, g, true, out);
}

void cmd_simulate(const Globals& g, const std::string& scheme_path, const std::string& builtin,
                  const std::vector<std::string>& items, const std::string& target_path,
                  std::optional<std::uint64_t> shots, const std::string& emit_scheme, std::ostream& out) {
  if (scheme_path.empty() == builtin.empty()) {
    throw InvariantViolation("usage", "give exactly one of --scheme PATH or --builtin NAME");
  }
  io::Report report;
  report.command = "simulate";
  MixingScheme scheme;
  std::optional<DensityMatrix> target;
  Json target_input = nullptr;
  if (!builtin.empty()) {
    Params params(items);
    report.inputs = {{"builtin", builtin}, {"params", params.echo()}};
    Family f = make_family(builtin, params);
    scheme = std::move(*f.scheme);
    target = f.state;
    target_input = {{"factory", builtin}};
  } else {
    if (!items.empty()) throw InvariantViolation("usage", "key=value parameters need --builtin");
    const std::string text = io::read_text(scheme_path);
    scheme = io::scheme_from_json(io::parse_json(text, scheme_path));
    report.inputs = {{"scheme", {{"path", scheme_path}, {"sha256", io::sha256_hex(text)}}}};
  }
  if (!target_path.empty()) {
    LoadedState t = load_state(target_path);
    target = std::move(t.rho);
    target_input = std::move(t.input);
  }
  report.inputs["target"] = target_input;
  report.inputs["shots"] = shots ? Json(*shots) : Json(nullptr);

  const DensityMatrix mixture = assemble_mixture(scheme);
  Json branches = Json::array();
  double total = 0.0;
  for (const auto& b : scheme.branches) {
    const BranchOutput o = run_branch(b);
    total += o.weight;
    branches.push_back({{"p", b.p}, {"success", o.success}, {"weight", o.weight}});
  }
  report.results = state_summary(mixture);
  report.results["branches"] = std::move(branches);
  report.results["post_selection_probability"] = total;
  if (target) {
    if (target->n_qubits() != mixture.n_qubits()) {
      throw InvariantViolation("dimension", "target has " + std::to_string(target->n_qubits()) +
                                                " qubits, scheme emits " + std::to_string(mixture.n_qubits()));
    }
    const double d = trace_distance(mixture, *target);
    report.results["distance_to_target"] = d;
    report.verdict = d <= 1e-10 ? "match" : "mismatch";
  }
  if (shots) {
    const std::uint64_t seed = g.seed.value_or(0);
    report.seed = seed;
    const SampleResult sample = sample_mixture(scheme, *shots, seed);
    report.results["sampling"] = {{"shots", *shots},
                                  {"accepted", sample.accepted},
                                  {"empirical_distance", sample.distance}};
  }
  if (!g.out.empty()) {
    const std::string body = io::dump(io::state_to_json(mixture));
    io::write_text(g.out, body);
    report.results["state_file"] = {{"path", g.out}, {"sha256", io::sha256_hex(body)}};
  }
  if (!emit_scheme.empty()) io::write_text(emit_scheme, io::dump(io::scheme_to_json(scheme)));
  emit(report, g, false, out);
}

void cmd_noise_sweep(const Globals& g, const std::string& in, const std::string& cut_spec, double eps_max,
                     int steps, bool threshold, double width, std::ostream& out) {
  const LoadedState s = load_state(in);
  const Bipartition cut = io::parse_cut(s.rho.n_qubits(), cut_spec);
  require_range("eps_max", eps_max, 0.0, 1.0);
  if (steps < 1) throw InvariantViolation("parameter_range", "steps must be >= 1");
  io::Report report;
  report.command = "noise-sweep";
  report.inputs = {{"state", s.input}, {"cut", io::cut_to_json(cut)}, {"eps_max", eps_max},
                   {"steps", steps},   {"threshold", threshold},     {"tol", g.tol}};
  Json rows = Json::array();
  for (const auto& r : noise_sweep(s.rho, cut, eps_max, steps, g.tol)) {
    rows.push_back({{"eps", r.eps}, {"negativity", r.negativity}});
  }
  report.results["table"] = std::move(rows);
  if (threshold) {
    const NoiseThreshold t = noise_threshold(s.rho, cut, width, g.tol);
    report.inputs["width"] = width;
    report.results["threshold"] = {{"estimate", t.estimate},
                                   {"lower", t.lower},
                                   {"upper", t.upper},
                                   {"width", t.upper - t.lower},
                                   {"iterations", t.iterations}};
  }
  emit(report, g, true, out);
}

void cmd_bell(const Globals& g, const std::string& in, int restarts, int iters, std::ostream& out) {
  const LoadedState s = load_state(in);
  if (s.rho.n_qubits() > kMaxBellQubits) {
    throw InvariantViolation("register_size", "Bell search supports N <= " + std::to_string(kMaxBellQubits) +
                                                  ", got " + std::to_string(s.rho.n_qubits()));
  }
  if (s.rho.n_qubits() < 2) throw InvariantViolation("register_size", "Bell search needs N >= 2");
  if (restarts < 1 || iters < 1) throw InvariantViolation("parameter_range", "restarts and iters must be >= 1");
  const std::uint64_t seed = g.seed.value_or(0);
  io::Report report;
  report.command = "bell";
  report.inputs = {{"state", s.input}, {"restarts", restarts}, {"iters", iters}};
  report.seed = seed;
  const MkOptimizeResult r = mk_optimize(s.rho, restarts, iters, seed);
  Json settings = Json::array();
  for (const auto& p : r.settings.parties) {
    settings.push_back({{"a", {{"theta", p.a.theta}, {"phi", p.a.phi}}},
                        {"a_prime", {{"theta", p.a_prime.theta}, {"phi", p.a_prime.phi}}}});
  }
  Json per_restart = Json::array();
  for (const auto& run : r.restarts) per_restart.push_back(run.final_value);
  report.results = {{"best_value", r.best_value},
                    {"lhv_bound", 1.0},
                    {"quantum_bound", std::pow(2.0, (s.rho.n_qubits() - 1) / 2.0)},
                    {"violation", r.best_value > 1.0},
                    {"best_restart", r.best_restart},
                    {"settings", std::move(settings)},
                    {"restart_values", std::move(per_restart)}};
  report.verdict = r.best_value > 1.0 ? "violation" : "no_violation";
  emit(report, g, true, out);
}

Json ket_json(const Ket& k) {
  Json re = Json::array();
  Json im = Json::array();
  for (const Complex& z : k.amplitudes()) {
    re.push_back(z.real());
    im.push_back(z.imag());
  }
  return Json{{"re", std::move(re)}, {"im", std::move(im)}};
}

void cmd_upb_check(const Globals& g, std::optional<int> drop, std::ostream& out) {
  const auto full = upb_basis();
  std::vector<Ket> basis(full.begin(), full.end());
  if (drop) {
    if (*drop < 1 || *drop > 4) throw InvariantViolation("parameter_range", "--drop must be 1..4");
    basis.erase(basis.begin() + (*drop - 1));
  }
  io::Report report;
  report.command = "upb-check";
  report.inputs = {{"basis", "SHIFTS"}, {"drop", drop ? Json(*drop) : Json(nullptr)}};

  double gram_dev = 0.0;
  Json gram = Json::array();
  for (const auto& u : basis) {
    Json row = Json::array();
    for (const auto& v : basis) {
      const Complex ip = inner(u, v);
      row.push_back(std::abs(ip));
      gram_dev = std::max(gram_dev, std::abs(ip - Complex{&u == &v ? 1.0 : 0.0}));
    }
    gram.push_back(std::move(row));
  }

  ComplexOperator decomposition(3);
  for (const Ket& phi : upb_phi_decomposition()) decomposition.add_projector(phi, 0.25);
  const ComplexOperator residual_op = upb_state().op() - decomposition;
  const double residual = residual_op.max_abs_entry();

  const UpbCheck check = upb_unextendible(basis);
  report.results = {{"members", basis.size()},
                    {"gram_abs", std::move(gram)},
                    {"gram_max_deviation", gram_dev},
                    {"orthonormal", gram_dev <= 1e-12},
                    {"unextendible", check.unextendible},
                    {"decomposition_residual", residual}};
  if (check.witness) {
    double worst = 0.0;
    for (const auto& k : basis) worst = std::max(worst, std::abs(inner(*check.witness, k)));
    report.results["witness"] = ket_json(*check.witness);
    report.results["witness_max_overlap"] = worst;
  } else {
    report.results["witness"] = nullptr;
  }
  report.verdict = check.unextendible ? "unextendible" : "extendible";
  emit(report, g, true, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Bound-entanglement toolkit: build, diagnose, simulate and test multi-qubit states",
               "boundent"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  std::uint64_t seed_value = 0;
  app.add_option("--out", g.out, "Output path (state file for build/simulate, report otherwise)");
  auto* seed_opt = app.add_option("--seed", seed_value, "Master seed for stochastic commands");
  app.add_option("--tol", g.tol, "Eigenvalues above -tol count as non-negative")->check(CLI::PositiveNumber);

  std::string family;
  std::vector<std::string> params;
  auto* build = app.add_subcommand("build", "Construct a named state family and write a state file");
  build->add_option("family", family, "smolin | abls | dur_cirac | dur | llk | chi3 | upb | ghz")->required();
  build->add_option("params", params, "key=value parameters");

  std::string in;
  bool all_cuts = false;
  std::string hint = "none";
  auto* diagnose = app.add_subcommand("diagnose", "Partial-transpose profile and bound-entanglement verdict");
  diagnose->add_option("input", in, "State file")->required();
  diagnose->add_flag("--all-cuts", all_cuts, "Report every cut, not only NPT and certificate cuts");
  diagnose->add_option("--hint", hint, "Family hint: none | upb");

  std::string scheme_path;
  std::string builtin;
  std::string target;
  std::string emit_scheme;
  std::uint64_t shots = 0;
  auto* simulate = app.add_subcommand("simulate", "Assemble the post-selected mixture of a scheme");
  simulate->add_option("--scheme", scheme_path, "Scheme JSON file");
  simulate->add_option("--builtin", builtin, "Builtin scheme named after a family");
  simulate->add_option("params", params, "key=value parameters of the builtin scheme");
  simulate->add_option("--target", target, "State file to compare against");
  auto* shots_opt = simulate->add_option("--shots", shots, "Finite-statistics sampling shots")
                        ->check(CLI::PositiveNumber);
  simulate->add_option("--emit-scheme", emit_scheme, "Write the scheme as JSON");

  std::string cut;
  double eps_max = 1.0;
  int steps = 20;
  bool threshold = false;
  double width = 1e-6;
  auto* noise = app.add_subcommand("noise-sweep", "Negativity on one cut under depolarizing noise");
  noise->add_option("input", in, "State file")->required();
  noise->add_option("--cut", cut, "Group A as comma-separated qubits, e.g. 1,2")->required();
  noise->add_option("--eps-max", eps_max, "Largest noise strength");
  noise->add_option("--steps", steps, "Number of grid intervals");
  noise->add_flag("--threshold", threshold, "Bisect for the NPT to PPT crossing");
  noise->add_option("--width", width, "Bisection bracket width")->check(CLI::PositiveNumber);

  int restarts = 64;
  int iters = 200;
  auto* bell = app.add_subcommand("bell", "Search Mermin-Klyshko settings for a violation");
  bell->add_option("input", in, "State file")->required();
  bell->add_option("--restarts", restarts, "Random restarts");
  bell->add_option("--iters", iters, "Sweeps per restart");

  int drop = 0;
  auto* upb = app.add_subcommand("upb-check", "Unextendibility and decomposition checks for the SHIFTS UPB");
  auto* drop_opt = upb->add_option("--drop", drop, "Remove basis member K (1..4) first");

  std::vector<std::string> argv_store{"boundent"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: usage: " << e.what() << "\n";
    return 2;
  }
  if (seed_opt->count() > 0) g.seed = seed_value;

  try {
    if (build->parsed()) {
      cmd_build(g, family, params, out);
    } else if (diagnose->parsed()) {
      cmd_diagnose(g, in, all_cuts, hint, out);
    } else if (simulate->parsed()) {
      cmd_simulate(g, scheme_path, builtin, params, target,
                   shots_opt->count() ? std::optional<std::uint64_t>(shots) : std::nullopt, emit_scheme, out);
    } else if (noise->parsed()) {
      cmd_noise_sweep(g, in, cut, eps_max, steps, threshold, width, out);
    } else if (bell->parsed()) {
      cmd_bell(g, in, restarts, iters, out);
    } else if (upb->parsed()) {
      cmd_upb_check(g, drop_opt->count() ? std::optional<int>(drop) : std::nullopt, out);
    }
  } catch (const InvariantViolation& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: argument: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace boundent::cli
