#include "gevrey/cli.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"

#include "gevrey/cycles.hpp"
#include "gevrey/decay.hpp"
#include "gevrey/figures.hpp"
#include "gevrey/filter.hpp"
#include "gevrey/output.hpp"
#include "gevrey/parallel.hpp"
#include "gevrey/report.hpp"
#include "gevrey/verify.hpp"
#include "gevrey/wavelet.hpp"

namespace gevrey {
namespace {

struct Options {
  double sigma = 2.0;
  double d = kPi / 12.0;
  double tol = 1e-12;
  int grid_n = 4096;
  double xi_max = 0.0;
  bool xi_max_given = false;
  double eps = kPi / 4.0;
  double eta = 2.0;
  std::string out;
  std::string format;
  unsigned jobs = 1;
  int max_len = 8;
  std::size_t samples = std::size_t{1} << 15;
  int n_min = 3;
  int n_max = 18;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check_ranges(const Options& o) {
  if (!(o.sigma > 1.0)) throw UsageError("--sigma must exceed 1");
  if (!(o.d > 0.0 && o.d <= kPi / 6.0)) throw UsageError("--d must lie in (0, pi/6]");
  if (!(o.tol > 0.0 && o.tol <= 1e-6)) throw UsageError("--tol must lie in (0, 1e-6]");
  if (o.grid_n < 2) throw UsageError("--grid-n must be at least 2");
  if (o.xi_max_given && !(std::isfinite(o.xi_max) && o.xi_max > 0.0)) {
    throw UsageError("--xi-max must be positive");
  }
  if (!(o.eps > 0.0 && o.eps < 8.0 * kPi / 15.0)) throw UsageError("--eps must lie in (0, 8pi/15)");
  if (!(o.eta > 1.0)) throw UsageError("--eta must exceed 1");
  if (!o.format.empty() && o.format != "csv" && o.format != "json") {
    throw UsageError("--format must be csv or json");
  }
  if (o.max_len < 1 || o.max_len > 24) throw UsageError("--max-len must lie in [1, 24]");
  if (o.samples < 2 || (o.samples & (o.samples - 1)) != 0) {
    throw UsageError("--samples must be a power of two");
  }
  if (o.n_min < 3 || o.n_max > 20 || o.n_min > o.n_max) {
    throw UsageError("need 3 <= --n-min <= --n-max <= 20");
  }
}

FilterConfig filter_config(const Options& o) {
  FilterConfig c;
  c.sigma = o.sigma;
  c.d = o.d;
  c.quad_tol = o.tol;
  return c;
}

std::string format_or(const Options& o, const char* fallback) {
  return o.format.empty() ? fallback : o.format;
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text;
  } else {
    write_file(o.out, text);
  }
}

std::string dump(const nlohmann::json& j) { return j.dump(2) + "\n"; }

std::vector<double> uniform(double lo, double hi, int n) {
  std::vector<double> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / (n - 1);
  return v;
}

std::string table(const Options& o, const std::vector<std::string>& header,
                  const std::vector<std::vector<double>>& columns) {
  if (format_or(o, "csv") == "json") {
    nlohmann::json j;
    for (std::size_t i = 0; i < header.size(); ++i) j[header[i]] = columns[i];
    return dump(j);
  }
  std::ostringstream os;
  write_csv(os, header, columns);
  return os.str();
}

template <class F>
std::vector<double> sweep(const std::vector<double>& xs, unsigned jobs, F&& f) {
  std::vector<double> ys(xs.size());
  parallel_for(xs.size(), jobs, [&](std::size_t i) { ys[i] = f(xs[i]); });
  return ys;
}

int cmd_filter(const Options& o, std::ostream& out, bool theta) {
  const LowPassFilter m0(filter_config(o));
  const auto xs = uniform(-kPi, kPi, o.grid_n);
  const auto ys = sweep(xs, o.jobs, [&](double x) { return theta ? m0.theta(x) : m0(x); });
  emit(o, out, table(o, {"xi", theta ? "theta" : "m0"}, {xs, ys}));
  return kExitOk;
}

int cmd_scaling(const Options& o, std::ostream& out) {
  const LowPassFilter m0(filter_config(o));
  const double x = o.xi_max_given ? o.xi_max : 8.0 * kPi;
  const auto xs = uniform(-x, x, o.grid_n);
  emit(o, out, table(o, {"xi", "phi_hat"}, {xs, sweep(xs, o.jobs, [&](double v) { return scaling_hat(m0, v); })}));
  return kExitOk;
}

int cmd_wavelet(const Options& o, std::ostream& out) {
  const LowPassFilter m0(filter_config(o));
  const double x = o.xi_max_given ? o.xi_max : 8.0 * kPi;
  const auto xs = uniform(-x, x, o.grid_n);
  std::vector<double> re(xs.size()), im(xs.size()), ab(xs.size());
  parallel_for(xs.size(), o.jobs, [&](std::size_t i) {
    const std::complex<double> v = wavelet_hat(m0, xs[i]);
    re[i] = v.real();
    im[i] = v.imag();
    ab[i] = std::abs(v);
  });
  emit(o, out, table(o, {"xi", "re_psi_hat", "im_psi_hat", "abs_psi_hat"}, {xs, re, im, ab}));
  return kExitOk;
}

int cmd_synth(const Options& o, std::ostream& out, std::ostream& err) {
  const LowPassFilter m0(filter_config(o));
  const double x = o.xi_max_given ? o.xi_max : std::ldexp(kPi, 8);
  const SampledFunction psi = synthesize_time(m0, x, o.samples, o.jobs);
  std::vector<double> re(psi.values.size());
  for (std::size_t i = 0; i < re.size(); ++i) re[i] = psi.values[i].real();
  if (format_or(o, "csv") == "json") {
    nlohmann::json j;
    j["x"] = psi.abscissae;
    j["psi"] = re;
    put_number(j, "l2_mass", psi.l2_mass);
    put_number(j, "max_imag_residue", psi.max_imag_residue);
    put_number(j, "tail_bound", psi.tail_bound);
    put_number(j, "xi_max", psi.xi_max);
    emit(o, out, dump(j));
  } else {
    emit(o, out, table(o, {"x", "psi"}, {psi.abscissae, re}));
  }
  err << "l2_mass " << format_double(psi.l2_mass) << ", max |Im psi| "
      << format_double(psi.max_imag_residue) << ", tail bound " << format_double(psi.tail_bound)
      << '\n';
  return kExitOk;
}

int cmd_cycles(const Options& o, std::ostream& out) {
  const LowPassFilter m0(filter_config(o));
  const std::vector<Cycle> cycles = enumerate_cycles(o.max_len);
  if (format_or(o, "csv") == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const Cycle& c : cycles) {
      const auto members = c.members();
      const CycleProduct p = cycle_product(m0, members);
      nlohmann::json e;
      std::vector<std::string> names;
      for (const auto& a : members) names.push_back(a.to_string());
      e["cycle"] = names;
      e["length"] = c.length;
      put_number(e, "product", p.product);
      e["zero_at"] = p.zero_at ? nlohmann::json(p.zero_at->to_string()) : nlohmann::json(nullptr);
      list.push_back(e);
    }
    emit(o, out, dump(list));
    return kExitOk;
  }
  std::ostringstream os;
  os << "cycle,length,product,zero_at\n";
  for (const Cycle& c : cycles) {
    const auto members = c.members();
    const CycleProduct p = cycle_product(m0, members);
    for (std::size_t i = 0; i < members.size(); ++i) os << (i ? " " : "") << members[i].to_string();
    os << ',' << c.length << ',' << format_double(p.product) << ','
       << (p.zero_at ? p.zero_at->to_string() : "none") << '\n';
  }
  emit(o, out, os.str());
  return kExitOk;
}

int cmd_decay(const Options& o, std::ostream& out) {
  const LowPassFilter m0(filter_config(o));
  const DecayReport r = run_decay_suite(m0, o.eps, o.n_min, o.n_max, o.eta, o.jobs);
  if (format_or(o, "json") == "json") {
    emit(o, out, dump(to_json(r)));
    return kExitOk;
  }
  std::vector<double> n, xi, la, ru, rl;
  for (const auto& s : r.samples) {
    n.push_back(s.n);
    xi.push_back(s.xi);
    la.push_back(s.log_abs);
    ru.push_back(s.r_upper);
    rl.push_back(s.r_lower);
  }
  emit(o, out, table(o, {"n", "xi_n", "log_abs", "r_upper", "r_lower"}, {n, xi, la, ru, rl}));
  return kExitOk;
}

int cmd_verify(const Options& o, std::ostream& out, std::ostream& err) {
  VerifyOptions v;
  v.filter = filter_config(o);
  v.eps = o.eps;
  v.eta = o.eta;
  v.jobs = o.jobs;
  v.timing = &err;
  const auto t0 = std::chrono::steady_clock::now();
  const VerificationReport rep = run_verification(v);
  err << "verify total: "
      << std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count() << " s\n";
  emit(o, out, dump(rep.to_json()));
  for (const auto& c : rep.checks) {
    if (!c.pass) err << "FAILED " << c.name << " (" << format_double(c.measured) << ")\n";
  }
  return rep.pass() ? kExitOk : kExitFailure;
}

int cmd_plot(const Options& o, std::ostream& out) {
  const LowPassFilter m0(filter_config(o));
  const std::filesystem::path dir = o.out.empty() ? std::filesystem::path("figs") : std::filesystem::path(o.out);
  std::filesystem::create_directories(dir);
  for (const Figure& f : build_figures(m0, o.jobs)) {
    write_file(dir / f.file_name, render_svg(f.plot));
    out << (dir / f.file_name).string() << '\n';
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Orthonormal wavelet with extended Gevrey regularity"};
  app.name("gevrey-wavelet");
  app.add_option("--sigma", o.sigma, "Gevrey index sigma > 1")->capture_default_str();
  app.add_option("--d", o.d, "bump half-width d in (0, pi/6]")->capture_default_str();
  app.add_option("--tol", o.tol, "quadrature tolerance for the delta table")->capture_default_str();
  app.add_option("--grid-n", o.grid_n, "points in output grids")->capture_default_str();
  auto* xi_opt = app.add_option("--xi-max", o.xi_max, "frequency range [-xi_max, xi_max]");
  app.add_option("--eps", o.eps, "offset of the evaluation points xi_n")->capture_default_str();
  app.add_option("--eta", o.eta, "eta > 1 in sigma_eta")->capture_default_str();
  app.add_option("--out", o.out, "output file (plot: output directory)");
  app.add_option("--format", o.format, "csv or json");
  app.add_option("--jobs", o.jobs, "worker threads, 0 = all cores")->capture_default_str();
  app.add_option("--max-len", o.max_len, "longest cycle for `cycles`")->capture_default_str();
  app.add_option("--samples", o.samples, "time samples for `synth` (power of two)")->capture_default_str();
  app.add_option("--n-min", o.n_min, "first octave for `decay`")->capture_default_str();
  app.add_option("--n-max", o.n_max, "last octave for `decay`")->capture_default_str();

  const std::vector<std::pair<const char*, const char*>> names = {
      {"filter", "m0 on [-pi, pi] as xi,m0"},
      {"theta", "theta on [-pi, pi] as xi,theta"},
      {"scaling", "phi_hat as xi,phi_hat"},
      {"wavelet", "psi_hat as xi,re_psi_hat,im_psi_hat,abs_psi_hat"},
      {"synth", "psi by inverse FFT as x,psi"},
      {"cycles", "invariant cycles of the doubling map and their m0 products"},
      {"decay", "decay of phi_hat at the points xi_n"},
      {"verify", "full verification suite, JSON report"},
      {"plot", "write fig1_m0.svg ... fig5_psi.svg"}};
  std::map<std::string, CLI::App*> subs;
  for (const auto& [name, help] : names) subs[name] = app.add_subcommand(name, help)->fallthrough();
  app.require_subcommand(1, 1);

  std::vector<std::string> argv_store{"gevrey-wavelet"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_store) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }
  o.xi_max_given = xi_opt->count() > 0;

  try {
    check_ranges(o);
    if (subs["filter"]->parsed()) return cmd_filter(o, out, false);
    if (subs["theta"]->parsed()) return cmd_filter(o, out, true);
    if (subs["scaling"]->parsed()) return cmd_scaling(o, out);
    if (subs["wavelet"]->parsed()) return cmd_wavelet(o, out);
    if (subs["synth"]->parsed()) return cmd_synth(o, out, err);
    if (subs["cycles"]->parsed()) return cmd_cycles(o, out);
    if (subs["decay"]->parsed()) return cmd_decay(o, out);
    if (subs["verify"]->parsed()) return cmd_verify(o, out, err);
    if (subs["plot"]->parsed()) return cmd_plot(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

int run_cli(const std::vector<std::string>& args) { return run_cli(args, std::cout, std::cerr); }

}  // namespace gevrey
