// clifft: command-line front end for the hypercomplex transform library.
//
//   transform   forward/inverse transform of an image, a stored field, or a
//               seeded random field
//   convolve    Mustard / tau convolutions on grids; radial kernel-series
//               convolutions (spectral and translation variants)
//   translate   generalized translation by integer grid offsets
//   filter      quaternionic frequency-domain filtering of PPM images
//   verify      self-checking identity suites (CSV report, exit 2 on breach)
//   bench       fast-vs-reference timings (CSV report)
//   presets     list kernel-series presets or dump a coefficient table
//
// Exit codes: 0 success, 1 usage or input error, 2 a verify identity missed
// its tolerance.  Reruns with identical flags (including --seed) produce
// bit-identical output files.

#include <CLI11.hpp>

#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "clifft/field_io.hpp"
#include "clifft/gft.hpp"
#include "clifft/grid.hpp"
#include "clifft/mustard.hpp"
#include "clifft/ppm.hpp"
#include "clifft/qft.hpp"
#include "clifft/root_parse.hpp"
#include "clifft/series_kernel.hpp"
#include "clifft/special.hpp"

namespace {

using namespace clifft;
using std::numbers::pi;

// ---------------------------------------------------------------------------
// Shared option bundles
// ---------------------------------------------------------------------------

/// Where the input field(s) come from: --in files (PPM or CLFF by extension)
/// or a synthesized random field on a grid described by --m/--n/--delta/--mode
/// and drawn deterministically from --seed.
struct SourceOptions {
  std::vector<std::string> in;
  int m = 2;
  std::vector<int> n;
  std::vector<double> delta;
  std::string mode = "periodic";
  std::uint64_t seed = 1;
  bool complex_coeffs = false;
};

void add_source_options(CLI::App* cmd, SourceOptions& o, int max_inputs) {
  cmd->add_option("--in", o.in, "input file(s), .ppm or .clff; omit to synthesize a random field")
      ->expected(0, max_inputs);
  cmd->add_option("--m", o.m, "number of axes for synthesized fields")->check(CLI::Range(1, 6));
  cmd->add_option("--n", o.n, "grid sizes per axis (one value replicates)")->delimiter(',');
  cmd->add_option("--delta", o.delta, "sample spacings per axis (calibrated grids)")->delimiter(',');
  cmd->add_option("--mode", o.mode, "grid mode for synthesized fields")
      ->check(CLI::IsMember({"periodic", "calibrated"}));
  cmd->add_option("--seed", o.seed, "seed for synthesized fields");
  cmd->add_flag("--complex", o.complex_coeffs, "synthesize complex blade coefficients");
}

/// Transform plan: --plan qft fixes the two-sided quaternion shape (m = 2,
/// one root per side); --plan gft takes m roots and a --split point counting
/// how many kernel factors act from the left.
struct PlanOptions {
  std::string plan = "qft";
  std::string roots;
  int split = -1;
};

void add_plan_options(CLI::App* cmd, PlanOptions& o) {
  cmd->add_option("--plan", o.plan, "transform family")->check(CLI::IsMember({"qft", "gft"}));
  cmd->add_option("--roots", o.roots,
                  "comma-separated roots of -1, one per axis, e.g. 'e1,e2' or '0.6e2+0.8e12,e1'");
  cmd->add_option("--split", o.split, "number of roots applied on the left (gft; default all)");
}

GridMode mode_of(const std::string& s) {
  return s == "calibrated" ? GridMode::calibrated : GridMode::periodic;
}

std::string default_roots(int m) {
  std::string out;
  for (int k = 1; k <= m; ++k) {
    if (k > 1) out += ',';
    out += 'e';
    out += std::to_string(k);
  }
  return out;
}

std::vector<int> resolve_sizes(int m, std::vector<int> n) {
  if (n.empty()) n.assign(size_t(m), 16);
  if (n.size() == 1) n.assign(size_t(m), n[0]);
  if (int(n.size()) != m) throw std::runtime_error("--n must give one size (replicated) or one per axis");
  return n;
}

std::vector<double> resolve_deltas(int m, std::vector<double> d) {
  if (d.size() == 1) d.assign(size_t(m), d[0]);
  if (!d.empty() && int(d.size()) != m)
    throw std::runtime_error("--delta must give one spacing (replicated) or one per axis");
  return d;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

/// Load input `idx` (or synthesize it when fewer than idx+1 --in paths were
/// given).  Synthesized inputs use seed, seed+1, ... so a pair of fields is
/// reproducible from one flag.
MultivectorField load_field(const SourceOptions& o, size_t idx) {
  if (idx < o.in.size()) {
    const std::string& path = o.in[idx];
    if (ends_with(path, ".ppm")) return image_to_field(encode_rgb(read_ppm(path)));
    return read_field(path);
  }
  const GridSpec grid =
      make_grid(o.m, mode_of(o.mode), resolve_sizes(o.m, o.n), resolve_deltas(o.m, o.delta));
  return random_field(grid, o.seed + idx, o.complex_coeffs);
}

GftPlan resolve_plan(const PlanOptions& o, const GridSpec& grid) {
  const std::string text = o.roots.empty() ? default_roots(grid.m) : o.roots;
  std::vector<RootOfMinusOne> roots = parse_root_list(text, grid.m);
  if (int(roots.size()) != grid.m)
    throw std::runtime_error("--roots must list exactly one root of -1 per axis (got " +
                             std::to_string(roots.size()) + " for m = " + std::to_string(grid.m) + ")");
  if (o.plan == "qft") {
    if (grid.m != 2) throw std::runtime_error("--plan qft needs a two-axis grid");
    if (o.split >= 0 && o.split != 1)
      throw std::runtime_error("--plan qft always applies one root on each side (--split 1)");
    return make_qft_plan(grid, roots[0], roots[1]);
  }
  const int split = o.split < 0 ? grid.m : o.split;
  if (split < 0 || split > grid.m) throw std::runtime_error("--split must lie in [0, m]");
  return make_plan(grid, {roots.begin(), roots.begin() + split}, {roots.begin() + split, roots.end()});
}

// ---------------------------------------------------------------------------
// Output helpers
// ---------------------------------------------------------------------------

/// Text reports go to --out when given, stdout otherwise.
struct TextSink {
  std::ofstream file;
  std::ostream* os = &std::cout;

  explicit TextSink(const std::string& path) {
    if (path.empty()) return;
    file.open(path);
    if (!file) throw std::runtime_error("cannot open output file: " + path);
    os = &file;
  }
  std::ostream& out() { return *os; }
};

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(17);
  ss << v;
  return ss.str();
}

/// One-line summary used when a field result has no --out destination.
void print_field_stats(std::ostream& os, const MultivectorField& f) {
  os << "m,mode,sizes,norm\n";
  os << f.grid.m << ',' << (f.grid.mode == GridMode::periodic ? "periodic" : "calibrated") << ',';
  for (size_t k = 0; k < f.grid.n.size(); ++k) os << (k ? "x" : "") << f.grid.n[k];
  os << ',' << fmt(field_norm(f)) << '\n';
}

/// Store a field result or print its stats.
void emit_field(const std::string& out_path, const MultivectorField& f) {
  if (out_path.empty()) {
    print_field_stats(std::cout, f);
    return;
  }
  if (ends_with(out_path, ".ppm")) {
    write_ppm(out_path, decode_rgb(image_from_field(f)).image);
    return;
  }
  write_field(out_path, f);
}

// ---------------------------------------------------------------------------
// Small math helpers shared by verify suites
// ---------------------------------------------------------------------------

Multivector blade(int m, std::initializer_list<int> gens) {
  unsigned b = 0;
  for (int g : gens) b |= 1u << (g - 1);
  return basis_blade(m, b);
}

RootOfMinusOne root_of(const std::string& text, int m) { return parse_root(text, m); }

/// (-i)^j for a validated root i.
Multivector neg_power(const RootOfMinusOne& r, int j) {
  Multivector p = r.power(j);
  return (j % 2 != 0) ? -p : p;
}

/// Scalar samples of fn on the dual (frequency) grid, where calibrated
/// transforms live.
MultivectorField sample_scalar_dual(const GridSpec& g,
                                    const std::function<double(const std::vector<double>&)>& fn) {
  MultivectorField out(g);
  std::vector<int> idx(size_t(g.m), 0);
  std::vector<double> u(size_t(g.m), 0.0);
  for (size_t p = 0; p < out.points(); ++p) {
    for (int k = 0; k < g.m; ++k) u[size_t(k)] = g.freq(k, idx[size_t(k)]);
    out.plane(0)[p] = cplx{fn(u), 0.0};
    for (int k = g.m - 1; k >= 0; --k) {
      if (++idx[size_t(k)] < g.n[size_t(k)]) break;
      idx[size_t(k)] = 0;
    }
  }
  return out;
}

/// Named radial test profiles for the kernel-series commands.
RadialProfile profile_by_name(const std::string& name, int nodes = 512, double r_max = 12.0) {
  if (name == "gauss")
    return make_radial_profile(nodes, r_max, [](double r) { return cplx(std::exp(-0.5 * r * r)); });
  if (name == "ring")
    return make_radial_profile(nodes, r_max,
                               [](double r) { return cplx(r * r * std::exp(-0.5 * r * r)); });
  if (name == "wide")
    return make_radial_profile(nodes, r_max, [](double r) { return cplx(std::exp(-0.25 * r * r)); });
  throw std::runtime_error("unknown radial profile '" + name + "' (gauss, ring, wide)");
}

struct KernelOptions {
  std::string preset = "classical";
  double alpha = pi / 2;
  double beta = 0.0;
  int kmax = 48;
};

void add_kernel_options(CLI::App* cmd, KernelOptions& o) {
  cmd->add_option("--preset", o.preset, "kernel-series preset name (see `clifft presets`)");
  cmd->add_option("--alpha", o.alpha, "kernel angle parameter (fractional presets)");
  cmd->add_option("--beta", o.beta, "kernel modulation parameter (fractional presets)");
  cmd->add_option("--kmax", o.kmax, "series truncation degree")->check(CLI::Range(1, 512));
}

SeriesKernel resolve_kernel(const KernelOptions& o) {
  return preset_by_name(o.preset, o.alpha, o.beta, o.kmax);
}

// ---------------------------------------------------------------------------
// transform
// ---------------------------------------------------------------------------

struct TransformOptions {
  SourceOptions src;
  PlanOptions plan;
  bool inverse = false;
  std::string path = "fast";
  std::string out;
};

int run_transform(const TransformOptions& o) {
  const MultivectorField f = load_field(o.src, 0);
  const GftPlan plan = resolve_plan(o.plan, f.grid);
  const Path path = o.path == "reference" ? Path::reference : Path::fast;
  const MultivectorField result = o.inverse ? gft_inverse(plan, f, path) : gft_forward(plan, f, path);
  emit_field(o.out, result);
  return 0;
}

// ---------------------------------------------------------------------------
// convolve
// ---------------------------------------------------------------------------

struct ConvolveOptions {
  SourceOptions src;
  PlanOptions plan;
  KernelOptions kernel;
  std::string variant = "mustard";
  std::string route;  // mustard: spectral|direct|reversed|symmetric; tau: closed|sum
  std::string f0 = "gauss";
  std::string g0 = "ring";
  int points = 8;
  double rmax = 2.0;
  std::string out;
};

RadialVariant radial_variant_of(const std::string& v) {
  if (v == "cl") return RadialVariant::spectral_left;
  if (v == "cr") return RadialVariant::spectral_right;
  if (v == "l") return RadialVariant::translate_left;
  return RadialVariant::translate_right;
}

int run_convolve(const ConvolveOptions& o) {
  if (o.variant == "cl" || o.variant == "cr" || o.variant == "l" || o.variant == "r") {
    const SeriesKernel spec = resolve_kernel(o.kernel);
    const RadialProfile f0 = profile_by_name(o.f0);
    const RadialProfile g0 = profile_by_name(o.g0);
    std::vector<double> radii(size_t(o.points));
    for (int i = 0; i < o.points; ++i) radii[size_t(i)] = o.rmax * (i + 1) / o.points;
    const std::vector<cplx> vals = convolve_radial(spec, f0, g0, radial_variant_of(o.variant), radii);
    TextSink sink(o.out);
    sink.out() << "r,re,im\n";
    for (size_t i = 0; i < radii.size(); ++i)
      sink.out() << fmt(radii[i]) << ',' << fmt(vals[i].real()) << ',' << fmt(vals[i].imag()) << '\n';
    return 0;
  }

  const MultivectorField f = load_field(o.src, 0);
  const MultivectorField g = load_field(o.src, 1);
  const GftPlan plan = resolve_plan(o.plan, f.grid);
  MultivectorField result(f.grid);
  if (o.variant == "mustard") {
    const std::string route = o.route.empty() ? "spectral" : o.route;
    if (route == "spectral")
      result = mustard_convolve_spectral(plan, f, g);
    else if (route == "direct")
      result = mustard_convolve_direct(plan, f, g);
    else if (route == "reversed")
      result = mustard_convolve_reversed(plan, f, g);
    else if (route == "symmetric")
      result = mustard_q(plan, f, g);
    else
      throw std::runtime_error("--route for mustard: spectral, direct, reversed, or symmetric");
  } else if (o.variant == "tau") {
    const std::string route = o.route.empty() ? "closed" : o.route;
    if (route == "closed")
      result = tau_convolve(plan, f, g, TauRoute::closed_form);
    else if (route == "sum")
      result = tau_convolve(plan, f, g, TauRoute::summation);
    else
      throw std::runtime_error("--route for tau: closed or sum");
  } else {
    throw std::runtime_error("unknown --variant (mustard, tau, cl, cr, l, r)");
  }
  emit_field(o.out, result);
  return 0;
}

// ---------------------------------------------------------------------------
// translate
// ---------------------------------------------------------------------------

struct TranslateOptions {
  SourceOptions src;
  PlanOptions plan;
  std::vector<int> shift;
  std::string route = "closed";
  std::string out;
};

int run_translate(const TranslateOptions& o) {
  const MultivectorField f = load_field(o.src, 0);
  const GftPlan plan = resolve_plan(o.plan, f.grid);
  std::vector<int> shift = o.shift;
  if (shift.empty()) throw std::runtime_error("--shift is required (one offset per axis)");
  if (shift.size() == 1) shift.assign(size_t(f.grid.m), shift[0]);
  if (int(shift.size()) != f.grid.m)
    throw std::runtime_error("--shift must give one offset (replicated) or one per axis");
  const TranslateRoute route =
      o.route == "spectral" ? TranslateRoute::spectral : TranslateRoute::closed_form;
  emit_field(o.out, generalized_translate(plan, f, shift, route));
  return 0;
}

// ---------------------------------------------------------------------------
// filter
// ---------------------------------------------------------------------------

struct FilterOptions {
  std::string in;
  std::string out;
  std::string roots;
  std::string multiplier = "lowpass";
  double sigma = 8.0;
  std::vector<double> rotate;  // w,x,y,z
};

int run_filter(const FilterOptions& o) {
  if (o.in.empty() || o.out.empty()) throw std::runtime_error("filter needs --in image.ppm and --out image.ppm");
  RgbImage img = read_ppm(o.in);

  if (!o.rotate.empty()) {
    if (o.rotate.size() != 4) throw std::runtime_error("--rotate takes w,x,y,z");
    // Basis rotation preserves pure quaternions, so the re-decode only costs
    // the 8-bit quantization every image step already pays.
    const Quaternion r{o.rotate[0], o.rotate[1], o.rotate[2], o.rotate[3]};
    img = decode_rgb(rotate_basis(encode_rgb(img), r)).image;
  }

  const std::string text = o.roots.empty() ? default_roots(2) : o.roots;
  const std::vector<RootOfMinusOne> roots = parse_root_list(text, 2);
  if (roots.size() != 2) throw std::runtime_error("filter needs exactly two roots");
  const GridSpec grid = make_grid(2, GridMode::periodic, {img.height, img.width});

  MultivectorField mult(grid);
  if (o.multiplier == "lowpass")
    mult = lowpass_multiplier(grid, o.sigma);
  else if (o.multiplier == "phase")
    mult = directional_phase_multiplier(grid, roots[0]);
  else
    mult = read_field(o.multiplier);

  const FilterResult res = filter_image(img, mult, roots[0], roots[1]);
  write_ppm(o.out, res.image);
  std::cout << "max_scalar_residue,max_imag_residue\n"
            << fmt(res.max_scalar_residue) << ',' << fmt(res.max_imag_residue) << '\n';
  return 0;
}

// ---------------------------------------------------------------------------
// presets
// ---------------------------------------------------------------------------

struct PresetsOptions {
  KernelOptions kernel;
  bool dump = false;
  std::string out;
};

int run_presets(const PresetsOptions& o) {
  TextSink sink(o.out);
  if (!o.dump) {
    for (const std::string& name : preset_names()) sink.out() << name << '\n';
    return 0;
  }
  sink.out() << kernel_coefficients_csv(resolve_kernel(o.kernel));
  return 0;
}

// ---------------------------------------------------------------------------
// bench
// ---------------------------------------------------------------------------

struct BenchOptions {
  std::string op = "gft";
  int n = 256;
  int m = 2;
  std::uint64_t seed = 1;
  std::string out;
};

double time_ms(const std::function<void()>& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

int run_bench(const BenchOptions& o) {
  TextSink sink(o.out);
  sink.out() << "op,path,n,m,milliseconds,speedup,gap\n";

  const GridSpec grid = make_grid(o.m, GridMode::periodic, std::vector<int>(size_t(o.m), o.n));
  const MultivectorField f = random_field(grid, o.seed, true);

  if (o.op == "gft") {
    std::vector<RootOfMinusOne> roots;
    for (int k = 1; k <= o.m; ++k) roots.push_back(root_of("e" + std::to_string(k), o.m));
    const int split = (o.m + 1) / 2;
    const GftPlan plan =
        make_plan(grid, {roots.begin(), roots.begin() + split}, {roots.begin() + split, roots.end()});
    MultivectorField fast(grid), ref(grid);
    (void)gft_forward(plan, f, Path::fast);  // warm-up: builds the FFT plans
    const double fast_ms = time_ms([&] { fast = gft_forward(plan, f, Path::fast); });
    const double ref_ms = time_ms([&] { ref = gft_forward(plan, f, Path::reference); });
    const double gap = field_rel_gap(fast, ref);
    sink.out() << "gft,fast," << o.n << ',' << o.m << ',' << fmt(fast_ms) << ',' << fmt(ref_ms / fast_ms)
               << ',' << fmt(gap) << '\n';
    sink.out() << "gft,reference," << o.n << ',' << o.m << ',' << fmt(ref_ms) << ",1,0\n";
    return 0;
  }
  if (o.op == "product") {
    const MultivectorField g = random_field(grid, o.seed + 1, true);
    MultivectorField prod(grid);
    const double ms = time_ms([&] { prod = pointwise_product(f, g); });
    sink.out() << "product,geometric," << o.n << ',' << o.m << ',' << fmt(ms) << ",,\n";
    return 0;
  }
  if (o.op == "mustard") {
    std::vector<RootOfMinusOne> roots;
    for (int k = 1; k <= o.m; ++k) roots.push_back(root_of("e" + std::to_string(k), o.m));
    const int split = (o.m + 1) / 2;
    const GftPlan plan =
        make_plan(grid, {roots.begin(), roots.begin() + split}, {roots.begin() + split, roots.end()});
    const MultivectorField g = random_field(grid, o.seed + 1, true);
    MultivectorField direct(grid), spectral(grid);
    (void)mustard_convolve_spectral(plan, f, g);  // warm-up
    const double spec_ms = time_ms([&] { spectral = mustard_convolve_spectral(plan, f, g); });
    const double dir_ms = time_ms([&] { direct = mustard_convolve_direct(plan, f, g); });
    const double gap = field_rel_gap(direct, spectral);
    sink.out() << "mustard,spectral," << o.n << ',' << o.m << ',' << fmt(spec_ms) << ','
               << fmt(dir_ms / spec_ms) << ',' << fmt(gap) << '\n';
    sink.out() << "mustard,direct," << o.n << ',' << o.m << ',' << fmt(dir_ms) << ",1,0\n";
    return 0;
  }
  throw std::runtime_error("unknown --op (gft, product, mustard)");
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOptions {
  std::string suite = "all";
  int m = 0;  // 0: every dimension the suite covers
  int n = 16;
  int trials = 3;
  std::uint64_t seed = 20260814;
  double tol = 0.0;  // 0: per-identity defaults
  std::string out;
};

/// Collects one CSV line per identity.  `requirement` is "<=" for gaps that
/// must stay under tolerance and ">" for witnesses that must exceed it.
struct VerifyReport {
  std::ostream& os;
  bool all_pass = true;
  double tol_override = 0.0;

  explicit VerifyReport(std::ostream& o, double tol) : os(o), tol_override(tol) {
    os << "status,suite,identity,gap,tolerance,requirement\n";
  }

  void expect_le(const std::string& suite, const std::string& identity, double gap, double tol) {
    if (tol_override > 0.0) tol = tol_override;
    const bool ok = gap <= tol;
    all_pass = all_pass && ok;
    os << (ok ? "PASS" : "FAIL") << ',' << suite << ',' << identity << ',' << fmt(gap) << ',' << fmt(tol)
       << ",<=\n";
  }

  void expect_gt(const std::string& suite, const std::string& identity, double gap, double tol) {
    const bool ok = gap > tol;
    all_pass = all_pass && ok;
    os << (ok ? "PASS" : "FAIL") << ',' << suite << ',' << identity << ',' << fmt(gap) << ',' << fmt(tol)
       << ",>\n";
  }
};

GftPlan dimension_plan(const GridSpec& g) {
  if (g.m == 2) return make_qft_plan(g, root_of("e1", 2), root_of("e2", 2));
  return make_plan(g, {root_of("e12", 3), root_of("e23", 3)}, {root_of("e13", 3)});
}

void verify_mustard(VerifyReport& rep, const VerifyOptions& o, int m) {
  const int n = m == 3 ? std::min(o.n, 8) : o.n;
  const GridSpec g = make_grid(m, GridMode::periodic, std::vector<int>(size_t(m), n));
  const GftPlan plan = dimension_plan(g);
  const double pref = std::sqrt(double(g.points()));
  double worst_ds = 0.0, worst_fact = 0.0, worst_sym = 0.0;
  for (int t = 0; t < o.trials; ++t) {
    const MultivectorField f = random_field(g, o.seed + 2 * uint64_t(t), true);
    const MultivectorField h = random_field(g, o.seed + 2 * uint64_t(t) + 1, true);
    const MultivectorField spectral = mustard_convolve_spectral(plan, f, h);
    worst_ds = std::max(worst_ds, field_rel_gap(mustard_convolve_direct(plan, f, h), spectral));
    const MultivectorField rhs =
        pointwise_product(gft_forward(plan, f), gft_forward(plan, h)) * cplx{pref, 0.0};
    worst_fact = std::max(worst_fact, field_rel_gap(gft_forward(plan, spectral), rhs));
    if (m == 2) worst_sym = std::max(worst_sym, field_rel_gap(mustard_q(plan, f, h), spectral));
  }
  const std::string suite = "mustard" + std::to_string(m);
  rep.expect_le(suite, "direct-vs-spectral", worst_ds, 1e-10);
  rep.expect_le(suite, "transform-factorizes", worst_fact, 1e-12);
  if (m == 2) rep.expect_le(suite, "symmetric-16-term", worst_sym, 1e-10);
}

void verify_translate(VerifyReport& rep, const VerifyOptions& o, int m) {
  const int n = m == 3 ? std::min(o.n, 8) : o.n;
  const GridSpec g = make_grid(m, GridMode::periodic, std::vector<int>(size_t(m), n));
  const GftPlan plan = dimension_plan(g);
  double worst_route = 0.0, worst_shift = 0.0;
  for (int t = 0; t < o.trials; ++t) {
    const MultivectorField f = random_field(g, o.seed + uint64_t(t), true);
    std::vector<int> shift(size_t(m), 0);
    for (int k = 0; k < m; ++k) shift[size_t(k)] = int((o.seed + uint64_t(5 * t + 3 * k + 1)) % uint64_t(n));
    const MultivectorField closed = generalized_translate(plan, f, shift, TranslateRoute::closed_form);
    const MultivectorField spectral = generalized_translate(plan, f, shift, TranslateRoute::spectral);
    worst_route = std::max(worst_route, field_rel_gap(closed, spectral));
    if (m == 2) worst_shift = std::max(worst_shift, field_rel_gap(spectral, circular_shift(f, shift)));
  }
  const std::string suite = "translate" + std::to_string(m);
  rep.expect_le(suite, "closed-vs-spectral", worst_route, 1e-10);
  if (m == 2) rep.expect_le(suite, "qft-circular-shift", worst_shift, 1e-12);
}

void verify_eigen(VerifyReport& rep, const VerifyOptions& o) {
  (void)o;
  const GridSpec g = make_grid(2, GridMode::calibrated, {64, 64}, {0.25, 0.25});
  const std::vector<GftPlan> plans = {
      make_qft_plan(g, root_of("e1", 2), root_of("e2", 2)),
      make_plan(g, {root_of("e12", 2), root_of("e2", 2)}, {}),
  };
  double worst = 0.0;
  for (const GftPlan& plan : plans) {
    for (int j0 = 0; j0 <= 4; ++j0)
      for (int j1 = 0; j0 + j1 <= 4; ++j1) {
        const auto psi_fn = [&](const std::vector<double>& x) {
          return hermite_fn(j0, x[0]) * hermite_fn(j1, x[1]);
        };
        const MultivectorField psi = sample_scalar_field(g, psi_fn);
        Multivector lam_l = scalar_mv(2, cplx{1.0, 0.0});
        Multivector lam_r = scalar_mv(2, cplx{1.0, 0.0});
        const int js[2] = {j0, j1};
        for (int k = 0; k < plan.mu(); ++k) lam_l = lam_l * neg_power(plan.root(k), js[k]);
        for (int k = plan.mu(); k < 2; ++k) lam_r = lam_r * neg_power(plan.root(k), js[k]);
        const MultivectorField want =
            const_mul_right(const_mul_left(lam_l, sample_scalar_dual(g, psi_fn)), lam_r);
        worst = std::max(worst, field_rel_gap(gft_forward(plan, psi), want));
      }
  }
  rep.expect_le("eigen", "hermite-eigenfields", worst, 1e-6);
}

void verify_qftconv(VerifyReport& rep, const VerifyOptions& o) {
  const GridSpec g = make_grid(2, GridMode::periodic, {o.n, o.n});
  const std::vector<GftPlan> plans = {
      make_qft_plan(g, root_of("e1", 2), root_of("e2", 2)),
      make_qft_plan(g, parse_root("0.577350269189626e1+0.577350269189626e2+0.577350269189626e12", 2),
                    parse_root("0.6e2+0.8e12", 2)),
  };
  const double pref = std::sqrt(double(g.points()));
  double worst = 0.0, naive_min = 1e300;
  for (const GftPlan& plan : plans) {
    for (int t = 0; t < o.trials; ++t) {
      const MultivectorField f = random_field(g, o.seed + 2 * uint64_t(t), true);
      const MultivectorField h = random_field(g, o.seed + 2 * uint64_t(t) + 1, true);
      const MultivectorField lhs = gft_forward(plan, classical_convolve(f, h));
      worst = std::max(worst, field_rel_gap(qft_conv_theorem_rhs(plan, f, h), lhs));
      const MultivectorField naive =
          pointwise_product(gft_forward(plan, f), gft_forward(plan, h)) * cplx{pref, 0.0};
      naive_min = std::min(naive_min, field_rel_gap(naive, lhs));
    }
  }
  rep.expect_le("qftconv", "split-sum-vs-transform", worst, 1e-10);
  rep.expect_gt("qftconv", "naive-product-breaks", naive_min, 1e-2);
}

/// Laguerre-weighted Gaussian basis profile of the degree-k monogenic family
/// (m = 4; even profiles multiply M_k, odd ones multiply x M_k(x)).
RadialProfile kernel_basis_profile(int j, int k, Parity parity) {
  const double a = (parity == Parity::even) ? 1.0 + k : 2.0 + k;
  return make_radial_profile(512, 12.0, [=](double r) {
    return cplx(laguerre(j, a, r * r) * std::exp(-0.5 * r * r));
  });
}

void verify_kernel(VerifyReport& rep, const VerifyOptions& o) {
  (void)o;
  const std::vector<std::pair<std::string, SeriesKernel>> specs = {
      {"classical", preset_classical(48)},
      {"clifford-minus", preset_clifford_minus(48)},
      {"fractional", preset_fractional_cft(2 * pi / 3, 0.3, 48)},
  };
  std::vector<double> probe(40);
  for (size_t i = 0; i < probe.size(); ++i) probe[i] = 5.0 * double(i + 1) / double(probe.size());
  for (const auto& [name, spec] : specs) {
    double worst = 0.0;
    for (Parity parity : {Parity::even, Parity::odd})
      for (int k = 0; k <= 1; ++k)
        for (int j = 0; j <= 2; ++j) {
          const RadialProfile basis = kernel_basis_profile(j, k, parity);
          const RadialProfile got = radial_transform(spec, basis, k, parity, probe);
          const cplx lam = kernel_eigenvalue(spec, parity, j, k);
          // The output profile carries the homogeneous s^k (even) or s^{k+1}
          // (odd) factor of the degree-k component; the input profile does not.
          const int spow = (parity == Parity::even) ? k : k + 1;
          const double a = (parity == Parity::even) ? 1.0 + k : 2.0 + k;
          double num = 0.0, den = 0.0;
          for (size_t i = 0; i < probe.size(); ++i) {
            const double s = probe[i];
            const cplx want = lam * std::pow(s, spow) * laguerre(j, a, s * s) * std::exp(-0.5 * s * s);
            num += std::norm(got.v[i] - want);
            den += std::norm(want);
          }
          worst = std::max(worst, std::sqrt(num / den));
        }
    rep.expect_le("kernel", name + "-eigenfamilies", worst, 1e-6);

    const SeriesKernel inv = inverse_kernel(spec);
    double worst_inv = 0.0;
    for (Parity parity : {Parity::even, Parity::odd})
      for (int k = 0; k <= 4; ++k)
        for (int j = 0; j <= 2; ++j) {
          const cplx prod =
              kernel_eigenvalue(spec, parity, j, k) * kernel_eigenvalue(inv, parity, j, k);
          worst_inv = std::max(worst_inv, std::abs(prod - cplx{1.0, 0.0}));
        }
    rep.expect_le("kernel", name + "-inverse-eigenvalues", worst_inv, 1e-10);
  }
}

void verify_sphere(VerifyReport& rep, const VerifyOptions& o) {
  (void)o;
  const std::vector<std::pair<std::string, SeriesKernel>> specs = {
      {"alpha-half-pi", preset_classical(48)},
      {"alpha-third-pi", preset_fractional_cft(pi / 3, 0.0, 48)},
  };
  const std::vector<double> x = {0.6, -0.3, 0.2, 0.4};
  const std::vector<double> y = {-0.5, 0.25, 0.55, -0.15};
  for (const auto& [name, spec] : specs) {
    double worst_gap = 0.0, worst_wedge = 0.0;
    for (double r : {0.7, 1.6}) {
      const SphereProductCheck chk = sphere_product_check(spec, r, x, y, 40);
      worst_gap = std::max(worst_gap, chk.gap);
      worst_wedge = std::max(worst_wedge, chk.wedge);
    }
    rep.expect_le("sphere", name + "-product-series", worst_gap, 1e-6);
    rep.expect_le("sphere", name + "-wedge-cancels", worst_wedge, 1e-8);
  }
}

void verify_radial(VerifyReport& rep, const VerifyOptions& o) {
  (void)o;
  const SeriesKernel spec = preset_classical(48);
  const RadialProfile f0 = profile_by_name("gauss");

  const std::vector<double> y = {0.6, -0.4, 0.3, 0.2};
  const std::vector<std::vector<double>> x_eval = {
      {0.5, 0.2, -0.3, 0.1}, {1.0, 0.0, 0.0, 0.0}, {-0.2, 0.8, 0.3, -0.5}};
  const std::vector<cplx> got = translate_radial(spec, f0, y, x_eval);
  const cplx c = translate_collapse_constant(spec);
  double worst = 0.0;
  for (size_t i = 0; i < x_eval.size(); ++i) {
    double d2 = 0.0;
    for (size_t k = 0; k < 4; ++k) d2 += (x_eval[i][k] - y[k]) * (x_eval[i][k] - y[k]);
    const cplx want = c * std::exp(-0.5 * d2);
    worst = std::max(worst, std::abs(got[i] - want) / std::abs(want));
  }
  rep.expect_le("radial", "translation-collapse", worst, 1e-6);
  rep.expect_le("radial", "collapse-constant-one", std::abs(c - cplx{1.0, 0.0}), 1e-10);

  const RadialProfile g0 = profile_by_name("ring");
  const std::vector<double> radii = {0.4, 0.8, 1.2, 1.6, 2.0};
  std::vector<std::vector<cplx>> vals;
  for (RadialVariant v : {RadialVariant::spectral_left, RadialVariant::spectral_right,
                          RadialVariant::translate_left, RadialVariant::translate_right})
    vals.push_back(convolve_radial(spec, f0, g0, v, radii));
  double worst_pair = 0.0, scale = 0.0;
  for (const cplx& v : vals[0]) scale = std::max(scale, std::abs(v));
  for (size_t a = 0; a < vals.size(); ++a)
    for (size_t b = a + 1; b < vals.size(); ++b)
      for (size_t i = 0; i < radii.size(); ++i)
        worst_pair = std::max(worst_pair, std::abs(vals[a][i] - vals[b][i]) / scale);
  rep.expect_le("radial", "four-variants-agree", worst_pair, 1e-8);
}

void verify_roundtrip(VerifyReport& rep, const VerifyOptions& o) {
  {
    const GridSpec g = make_grid(2, GridMode::periodic, {o.n, o.n});
    const GftPlan plan = dimension_plan(g);
    const MultivectorField f = random_field(g, o.seed, true);
    rep.expect_le("roundtrip", "periodic-m2", field_rel_gap(gft_inverse(plan, gft_forward(plan, f)), f),
                  1e-12);
    const GridSpec g3 = make_grid(3, GridMode::periodic, {8, 8, 8});
    const GftPlan plan3 = dimension_plan(g3);
    const MultivectorField f3 = random_field(g3, o.seed + 1, true);
    rep.expect_le("roundtrip", "periodic-m3",
                  field_rel_gap(gft_inverse(plan3, gft_forward(plan3, f3)), f3), 1e-12);
  }
  {
    const GridSpec g = make_grid(2, GridMode::calibrated, {32, 32}, {0.4, 0.35});
    const MultivectorField f = sample_scalar_field(g, [](const std::vector<double>& x) {
      return (1.0 + x[0] * x[1]) * std::exp(-(x[0] * x[0] + x[1] * x[1]) / 2);
    });
    const GftPlan plan = dimension_plan(g);
    rep.expect_le("roundtrip", "calibrated-schwartz",
                  field_rel_gap(gft_inverse(plan, gft_forward(plan, f)), f), 1e-8);
  }
  {
    const auto dir = std::filesystem::temp_directory_path();
    const std::string ppm_path = (dir / "clifft-verify.ppm").string();
    const std::string clff_path = (dir / "clifft-verify.clff").string();

    RgbImage img;
    img.width = 24;
    img.height = 17;
    img.data.resize(size_t(img.width) * img.height * 3);
    std::uint64_t state = o.seed | 1;
    for (unsigned char& b : img.data) {
      state = state * 6364136223846793005ULL + 1442695040888963407ULL;
      b = static_cast<unsigned char>(state >> 56);
    }
    write_ppm(ppm_path, img);
    const RgbImage back = read_ppm(ppm_path);
    const bool same_img =
        back.width == img.width && back.height == img.height && back.data == img.data;
    rep.expect_le("roundtrip", "ppm-bytes", same_img ? 0.0 : 1.0, 0.0);

    const GridSpec g = make_grid(2, GridMode::calibrated, {10, 6}, {0.3, 0.7});
    const MultivectorField f = random_field(g, o.seed + 2, true);
    write_field(clff_path, f);
    const MultivectorField back_f = read_field(clff_path);
    const bool same_field = same_grid(back_f.grid, f.grid) && back_f.data == f.data;
    rep.expect_le("roundtrip", "clff-bits", same_field ? 0.0 : 1.0, 0.0);

    std::filesystem::remove(ppm_path);
    std::filesystem::remove(clff_path);
  }
}

int run_verify(const VerifyOptions& o) {
  TextSink sink(o.out);
  VerifyReport rep(sink.out(), o.tol);
  const bool all = o.suite == "all";
  const std::vector<int> dims = o.m == 0 ? std::vector<int>{2, 3} : std::vector<int>{o.m};

  if (all || o.suite == "mustard")
    for (int m : dims) verify_mustard(rep, o, m);
  if (all || o.suite == "translate")
    for (int m : dims) verify_translate(rep, o, m);
  if (all || o.suite == "eigen") verify_eigen(rep, o);
  if (all || o.suite == "qftconv") verify_qftconv(rep, o);
  if (all || o.suite == "kernel") verify_kernel(rep, o);
  if (all || o.suite == "sphere") verify_sphere(rep, o);
  if (all || o.suite == "radial") verify_radial(rep, o);
  if (all || o.suite == "roundtrip") verify_roundtrip(rep, o);

  return rep.all_pass ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"hypercomplex Fourier transforms: Clifford/quaternion spectra, generalized "
               "convolutions, radial kernel series"};
  app.require_subcommand(1);
  int threads = 1;
  app.add_option("--threads", threads, "worker threads (accepted for interface stability; this build computes single-threaded)")
      ->check(CLI::PositiveNumber);

  TransformOptions t;
  CLI::App* cmd_t = app.add_subcommand("transform", "forward or inverse transform");
  add_source_options(cmd_t, t.src, 1);
  add_plan_options(cmd_t, t.plan);
  cmd_t->add_flag("--inverse", t.inverse, "apply the inverse transform");
  cmd_t->add_option("--path", t.path, "execution path")->check(CLI::IsMember({"fast", "reference"}));
  cmd_t->add_option("--out", t.out, "output file (.clff, or .ppm for real m = 2 fields)");

  ConvolveOptions c;
  CLI::App* cmd_c = app.add_subcommand("convolve", "generalized convolution products");
  add_source_options(cmd_c, c.src, 2);
  add_plan_options(cmd_c, c.plan);
  add_kernel_options(cmd_c, c.kernel);
  cmd_c->add_option("--variant", c.variant, "mustard | tau | cl | cr | l | r")
      ->check(CLI::IsMember({"mustard", "tau", "cl", "cr", "l", "r"}));
  cmd_c->add_option("--route", c.route, "mustard: spectral|direct|reversed|symmetric; tau: closed|sum");
  cmd_c->add_option("--f0", c.f0, "left radial profile (gauss, ring, wide)");
  cmd_c->add_option("--g0", c.g0, "right radial profile (gauss, ring, wide)");
  cmd_c->add_option("--points", c.points, "number of output radii (radial variants)")
      ->check(CLI::Range(1, 4096));
  cmd_c->add_option("--rmax", c.rmax, "largest output radius (radial variants)");
  cmd_c->add_option("--out", c.out, "output file");

  TranslateOptions tr;
  CLI::App* cmd_tr = app.add_subcommand("translate", "generalized translation by grid offsets");
  add_source_options(cmd_tr, tr.src, 1);
  add_plan_options(cmd_tr, tr.plan);
  cmd_tr->add_option("--shift", tr.shift, "integer offsets, one per axis")->delimiter(',');
  cmd_tr->add_option("--route", tr.route, "translation route")
      ->check(CLI::IsMember({"closed", "spectral"}));
  cmd_tr->add_option("--out", tr.out, "output file");

  FilterOptions fl;
  CLI::App* cmd_f = app.add_subcommand("filter", "frequency-domain filtering of a PPM image");
  cmd_f->add_option("--in", fl.in, "input image (.ppm)")->required();
  cmd_f->add_option("--out", fl.out, "output image (.ppm)")->required();
  cmd_f->add_option("--roots", fl.roots, "transform roots mu,nu (default e1,e2)");
  cmd_f->add_option("--multiplier", fl.multiplier, "lowpass | phase | <multiplier.clff>");
  cmd_f->add_option("--sigma", fl.sigma, "low-pass width in frequency samples")
      ->check(CLI::PositiveNumber);
  cmd_f->add_option("--rotate", fl.rotate, "pre-rotate pixels by quaternion w,x,y,z")->delimiter(',');

  VerifyOptions v;
  CLI::App* cmd_v = app.add_subcommand("verify", "run identity suites; exit 2 on any FAIL");
  cmd_v->add_option("--suite", v.suite, "identity suite")
      ->check(CLI::IsMember({"all", "mustard", "translate", "eigen", "qftconv", "kernel", "sphere",
                             "radial", "roundtrip"}));
  cmd_v->add_option("--m", v.m, "restrict grid suites to one dimension (2 or 3; 0 = both)")
      ->check(CLI::Range(0, 3));
  cmd_v->add_option("--n", v.n, "grid size per axis for grid suites")->check(CLI::Range(4, 64));
  cmd_v->add_option("--trials", v.trials, "random trials per identity")->check(CLI::Range(1, 64));
  cmd_v->add_option("--seed", v.seed, "base seed for random trials");
  cmd_v->add_option("--tol", v.tol, "override every <= tolerance (0 keeps per-identity defaults)");
  cmd_v->add_option("--out", v.out, "write the CSV report here instead of stdout");

  BenchOptions b;
  CLI::App* cmd_b = app.add_subcommand("bench", "fast-vs-reference timings");
  cmd_b->add_option("--op", b.op, "operation to time")
      ->check(CLI::IsMember({"gft", "product", "mustard"}));
  cmd_b->add_option("--n", b.n, "grid size per axis")->check(CLI::Range(2, 4096));
  cmd_b->add_option("--m", b.m, "number of axes")->check(CLI::Range(1, 4));
  cmd_b->add_option("--seed", b.seed, "seed for the timed fields");
  cmd_b->add_option("--out", b.out, "write the CSV report here instead of stdout");

  PresetsOptions p;
  CLI::App* cmd_p = app.add_subcommand("presets", "list kernel-series presets or dump coefficients");
  add_kernel_options(cmd_p, p.kernel);
  cmd_p->add_flag("--dump", p.dump, "print the k,a_k,b_k,n_k coefficient table as CSV");
  cmd_p->add_option("--out", p.out, "write the listing here instead of stdout");

  int rc = 0;
  cmd_t->callback([&] { rc = run_transform(t); });
  cmd_c->callback([&] { rc = run_convolve(c); });
  cmd_tr->callback([&] { rc = run_translate(tr); });
  cmd_f->callback([&] { rc = run_filter(fl); });
  cmd_v->callback([&] { rc = run_verify(v); });
  cmd_b->callback([&] { rc = run_bench(b); });
  cmd_p->callback([&] { rc = run_presets(p); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const std::exception& e) {
    std::cerr << "clifft: error: " << e.what() << '\n';
    return 1;
  }
  return rc;
}
