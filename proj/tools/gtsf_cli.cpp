// gtsf: point evaluation, identity verification and parameter sweeps.
//
//   gtsf eval gtsf --p 0 --z 1
//   gtsf verify laplace --s 2 --c -1 --format json
//   gtsf sweep euler --grid p=0:1.5:4 --grid x=0.5:2:3 --out sweep.json
//   gtsf errata
//
// Exit codes: 0 success/pass, 1 verification failed, 2 usage or domain error.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gtsf/errata.hpp"
#include "gtsf/errors.hpp"
#include "gtsf/gtsf.hpp"
#include "gtsf/kernels.hpp"
#include "gtsf/report.hpp"
#include "gtsf/verifier.hpp"
#include "gtsf/wright.hpp"

namespace {

using gtsf::Error;
using gtsf::ErrorKind;
using gtsf::identities::Theorem;
using gtsf::identities::TransformCase;
using nlohmann::json;

constexpr int kExitPass = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

// Thrown for usage problems that CLI11 cannot detect itself.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int fail(std::string_view kind, const std::string& reason) {
  std::string line = reason;
  for (char& ch : line) {
    if (ch == '\n') ch = ' ';
  }
  std::cerr << "error: " << kind << ": " << line << '\n';
  return kExitUsage;
}

const std::vector<std::string> kCaseParams = {"lambda", "mu",   "xi",  "a",     "p",   "b",
                                              "c",      "x",    "r",   "s",     "zeta", "tau",
                                              "omega",  "rho",  "nu",  "order"};

// Named real-valued flags shared by the subcommands.
class ParamFlags {
 public:
  void add(CLI::App* app, const std::vector<std::string>& names) {
    for (const auto& n : names) {
      options_[n] = app->add_option("--" + n, values_[n], n);
    }
  }

  bool given(const std::string& name) const {
    auto it = options_.find(name);
    return it != options_.end() && it->second->count() > 0;
  }

  double get(const std::string& name) const { return values_.at(name); }

  std::optional<double> maybe(const std::string& name) const {
    if (!given(name)) return std::nullopt;
    return get(name);
  }

  double require(const std::string& name) const {
    if (!given(name)) throw UsageError("missing required flag --" + name);
    return get(name);
  }

  std::vector<std::string> given_names() const {
    std::vector<std::string> out;
    for (const auto& [n, opt] : options_) {
      if (opt->count() > 0) out.push_back(n);
    }
    return out;
  }

 private:
  std::map<std::string, double> values_;
  std::map<std::string, CLI::Option*> options_;
};

int as_int(const std::string& name, double v) {
  if (v != std::floor(v) || std::abs(v) > 1e9) {
    throw Error(ErrorKind::Domain, "--" + name + " must be an integer");
  }
  return int(v);
}

// Sets one named parameter of a transform case.
void set_param(TransformCase& c, const std::string& name, double v) {
  using namespace gtsf::identities;
  auto& g = c.gtsf;
  if (name == "lambda") return void(g.lambda = v);
  if (name == "mu") return void(g.mu = v);
  if (name == "xi") return void(g.xi = v);
  if (name == "a") return void(g.a = as_int(name, v));
  if (name == "p") return void(g.p = v);
  if (name == "b") return void(g.b = v);
  if (name == "c") return void(g.c = v);
  if (name == "x") return void(c.x = v);
  bool applied = false;
  std::visit(
      [&](auto& a) {
        using A = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<A, EulerArgs>) {
          if (name == "r") a.r = v, applied = true;
          if (name == "s") a.s = v, applied = true;
        } else if constexpr (std::is_same_v<A, LaplaceArgs>) {
          if (name == "s") a.s = v, applied = true;
        } else if constexpr (std::is_same_v<A, WhittakerArgs>) {
          if (name == "zeta") a.zeta = v, applied = true;
          if (name == "tau") a.tau = v, applied = true;
          if (name == "omega") a.omega = v, applied = true;
        } else if constexpr (std::is_same_v<A, KTransformArgs>) {
          if (name == "rho") a.rho = v, applied = true;
          if (name == "nu") a.nu = v, applied = true;
          if (name == "omega") a.omega = v, applied = true;
        } else {
          if (name == "order") a.order = v, applied = true;
          if (name == "omega") a.omega = v, applied = true;
        }
      },
      c.args);
  if (!applied) {
    throw UsageError("flag --" + name + " does not apply to " + to_string(c.theorem()));
  }
}

TransformCase case_from_flags(Theorem t, const ParamFlags& flags) {
  TransformCase c = gtsf::identities::canonical_case(t);
  for (const auto& n : flags.given_names()) set_param(c, n, flags.get(n));
  return c;
}

Theorem theorem_from(const std::string& name) {
  auto t = gtsf::identities::parse_theorem(name);
  if (!t) throw UsageError("unknown theorem '" + name + "'");
  return *t;
}

// ---------------------------------------------------------------------------
// eval

gtsf::WrightPair parse_pair(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("pair '" + text + "' is not a:alpha");
  try {
    std::size_t used = 0;
    const double a = std::stod(text.substr(0, colon), &used);
    if (used != colon) throw std::invalid_argument(text);
    const std::string rest = text.substr(colon + 1);
    const double alpha = std::stod(rest, &used);
    if (used != rest.size()) throw std::invalid_argument(text);
    return {a, alpha};
  } catch (const std::logic_error&) {
    throw UsageError("pair '" + text + "' is not a:alpha");
  }
}

struct EvalOutput {
  std::complex<double> value;
  std::optional<std::size_t> terms_used;
  std::optional<double> tail_estimate;
};

template <class V>
EvalOutput from_series(const gtsf::SeriesResult<V>& r) {
  return {std::complex<double>(r.value), r.terms_used, r.tail_estimate};
}

EvalOutput run_eval(const std::string& fn, const ParamFlags& f,
                    const std::vector<std::string>& upper, const std::vector<std::string>& lower,
                    double tol) {
  gtsf::SeriesOptions opts;
  opts.tol = tol;
  const double z = f.require("z");
  if (fn == "gtsf") {
    gtsf::GtsfParams g;
    if (auto v = f.maybe("a")) g.a = as_int("a", *v);
    if (auto v = f.maybe("p")) g.p = *v;
    if (auto v = f.maybe("b")) g.b = *v;
    if (auto v = f.maybe("c")) g.c = *v;
    if (auto v = f.maybe("lambda")) g.lambda = *v;
    if (auto v = f.maybe("mu")) g.mu = *v;
    if (auto v = f.maybe("xi")) g.xi = *v;
    return from_series(gtsf::eval_gtsf(g, z, opts));
  }
  if (fn == "struve_h") {
    return from_series(gtsf::eval_h_pbc(f.maybe("p").value_or(0.0), f.maybe("b").value_or(1.0),
                                        f.maybe("c").value_or(1.0), z, opts));
  }
  if (fn == "wright") {
    gtsf::WrightParams w;
    for (const auto& u : upper) w.upper.push_back(parse_pair(u));
    for (const auto& l : lower) w.lower.push_back(parse_pair(l));
    const std::complex<double> arg(z, f.maybe("z-im").value_or(0.0));
    return from_series(gtsf::eval_wright(w, arg, opts));
  }
  if (fn == "kummer") {
    std::size_t terms = 0;
    const double v = gtsf::kernels::kummer_1f1(f.require("alpha"), f.require("gamma"), z, tol, &terms);
    return {v, terms, std::nullopt};
  }
  if (fn == "whittaker_m") {
    return {gtsf::kernels::whittaker_m(f.require("tau"), f.require("omega"), z), {}, {}};
  }
  if (fn == "whittaker_w") {
    return {gtsf::kernels::whittaker_w(f.require("tau"), f.require("omega"), z), {}, {}};
  }
  if (fn == "bessel_k") {
    return {gtsf::kernels::bessel_k(f.require("nu"), z), {}, {}};
  }
  throw UsageError("unknown function '" + fn + "'");
}

void print_eval(const std::string& fn, const EvalOutput& out, const std::string& format) {
  using gtsf::report::format_complex;
  using gtsf::report::format_double;
  if (format == "json") {
    json j = {{"function", fn}};
    if (out.value.imag() == 0.0) {
      j["value"] = out.value.real();
    } else {
      j["value"] = {{"re", out.value.real()}, {"im", out.value.imag()}};
    }
    j["terms_used"] = out.terms_used ? json(*out.terms_used) : json(nullptr);
    j["tail_estimate"] = out.tail_estimate ? json(*out.tail_estimate) : json(nullptr);
    std::cout << j.dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    std::cout << "function,value,terms_used,tail_estimate\n"
              << fn << ',' << format_complex(out.value) << ','
              << (out.terms_used ? std::to_string(*out.terms_used) : "") << ','
              << (out.tail_estimate ? format_double(*out.tail_estimate) : "") << '\n';
    return;
  }
  std::cout << "value          " << format_complex(out.value) << '\n';
  if (out.terms_used) std::cout << "terms_used     " << *out.terms_used << '\n';
  if (out.tail_estimate) std::cout << "tail_estimate  " << format_double(*out.tail_estimate) << '\n';
}

// ---------------------------------------------------------------------------
// verify / sweep

void write_document(std::ostream& os, const gtsf::report::ReportDocument& doc,
                    const std::string& format) {
  if (format == "json") {
    os << gtsf::report::to_json(doc).dump(2) << '\n';
  } else if (format == "csv") {
    gtsf::report::write_csv(os, doc);
  } else {
    for (const auto& c : doc.cases) gtsf::report::write_text(os, c);
    os << "summary: " << doc.summary.passed << "/" << doc.summary.total << " passed\n";
  }
}

gtsf::identities::VerifyOptions verify_options(std::optional<double> tol) {
  gtsf::identities::VerifyOptions o;
  o.tol = tol;
  return o;
}

struct GridAxis {
  std::string name;
  double lo = 0.0;
  double hi = 0.0;
  std::size_t count = 1;

  double at(std::size_t i) const {
    if (count == 1) return lo;
    return lo + (hi - lo) * double(i) / double(count - 1);
  }
};

GridAxis parse_grid(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0) throw UsageError("grid '" + text + "' is not name=min:max:count");
  GridAxis g;
  g.name = text.substr(0, eq);
  std::vector<std::string> parts;
  std::stringstream ss(text.substr(eq + 1));
  for (std::string item; std::getline(ss, item, ':');) parts.push_back(item);
  if (parts.size() != 3) throw UsageError("grid '" + text + "' is not name=min:max:count");
  try {
    std::size_t used = 0;
    g.lo = std::stod(parts[0], &used);
    if (used != parts[0].size()) throw std::invalid_argument(text);
    g.hi = std::stod(parts[1], &used);
    if (used != parts[1].size()) throw std::invalid_argument(text);
    const long long n = std::stoll(parts[2], &used);
    if (used != parts[2].size() || n < 1) throw std::invalid_argument(text);
    g.count = std::size_t(n);
  } catch (const std::logic_error&) {
    throw UsageError("grid '" + text + "' is not name=min:max:count with count >= 1");
  }
  if (!std::isfinite(g.lo) || !std::isfinite(g.hi)) throw UsageError("grid '" + text + "' has non-finite bounds");
  if (std::find(kCaseParams.begin(), kCaseParams.end(), g.name) == kCaseParams.end()) {
    throw UsageError("grid parameter '" + g.name + "' is unknown");
  }
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized Galue-type Struve function: evaluation and transform identities"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(gtsf::report::kToolVersion));

  std::string format = "text";
  std::optional<double> tol_flag;
  double tol_value = 0.0;

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a function at a point");
  std::string fn;
  eval->add_option("function", fn, "function to evaluate")
      ->required()
      ->check(CLI::IsMember({"gtsf", "wright", "struve_h", "kummer", "whittaker_m", "whittaker_w",
                             "bessel_k"}));
  ParamFlags eval_flags;
  eval_flags.add(eval, {"lambda", "mu", "xi", "a", "p", "b", "c", "tau", "omega", "nu", "alpha",
                        "gamma", "z", "z-im"});
  std::vector<std::string> upper;
  std::vector<std::string> lower;
  eval->add_option("--upper", upper, "Wright upper pair a:alpha (repeatable)");
  eval->add_option("--lower", lower, "Wright lower pair b:beta (repeatable)");
  eval->add_option("--tol", tol_value, "series tolerance")->default_val(1e-12);
  eval->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

  // verify
  auto* verify = app.add_subcommand("verify", "verify one transform identity");
  std::string theorem_name;
  verify->add_option("theorem", theorem_name, "euler | laplace | whittaker | ktransform | frft")
      ->required();
  ParamFlags verify_flags;
  verify_flags.add(verify, kCaseParams);
  double verify_tol = 0.0;
  auto* verify_tol_opt = verify->add_option("--tol", verify_tol, "relative tolerance");
  verify->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

  // sweep
  auto* sweep = app.add_subcommand("sweep", "verify an identity over a parameter grid");
  sweep->add_option("theorem", theorem_name, "euler | laplace | whittaker | ktransform | frft")
      ->required();
  ParamFlags sweep_flags;
  sweep_flags.add(sweep, kCaseParams);
  std::vector<std::string> grids;
  sweep->add_option("--grid", grids, "name=min:max:count (repeatable, first is slowest)");
  std::string out_path;
  sweep->add_option("--out", out_path, "output file (stdout when omitted)");
  std::size_t cap = 10000;
  sweep->add_option("--cap", cap, "maximum number of cases")->default_val(10000);
  double sweep_tol = 0.0;
  auto* sweep_tol_opt = sweep->add_option("--tol", sweep_tol, "relative tolerance");
  sweep->add_option("--format", format)->check(CLI::IsMember({"text", "json", "csv"}));

  // errata
  auto* errata = app.add_subcommand("errata", "list the corrections applied to the closed forms");
  errata->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what());
  }

  try {
    if (*eval) {
      const auto out = run_eval(fn, eval_flags, upper, lower, tol_value);
      print_eval(fn, out, format);
      return kExitPass;
    }

    if (*errata) {
      if (format == "json") {
        json arr = json::array();
        for (const auto& e : gtsf::errata::kEntries) {
          arr.push_back({{"where", e.where}, {"stated", e.stated}, {"used", e.used}});
        }
        std::cout << arr.dump(2) << '\n';
      } else {
        for (const auto& e : gtsf::errata::kEntries) {
          std::cout << e.where << "\n  stated: " << e.stated << "\n  used:   " << e.used << '\n';
        }
      }
      return kExitPass;
    }

    if (*verify) {
      const Theorem t = theorem_from(theorem_name);
      if (verify_tol_opt->count()) tol_flag = verify_tol;
      const TransformCase c = case_from_flags(t, verify_flags);
      const auto start = std::chrono::steady_clock::now();
      auto rep = gtsf::identities::verify(c, verify_options(tol_flag));
      const double wall =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      write_document(std::cout, gtsf::report::make_document({rep}, wall), format);
      if (rep.status == gtsf::identities::ReportStatus::Invalid) {
        return fail("invalid_case", rep.notes);
      }
      return rep.passed ? kExitPass : kExitFailed;
    }

    if (*sweep) {
      const Theorem t = theorem_from(theorem_name);
      if (sweep_tol_opt->count()) tol_flag = sweep_tol;
      std::vector<GridAxis> axes;
      for (const auto& g : grids) axes.push_back(parse_grid(g));
      std::size_t total = 1;
      for (const auto& a : axes) {
        if (a.count > cap || total > cap / a.count) {
          throw UsageError("sweep exceeds the cap of " + std::to_string(cap) + " cases");
        }
        total *= a.count;
      }
      // Validate flags and grid names against the theorem before any work.
      const TransformCase base = case_from_flags(t, sweep_flags);
      for (const auto& a : axes) {
        TransformCase probe = base;
        set_param(probe, a.name, a.lo);
      }
      std::ofstream file;
      if (!out_path.empty()) {
        file.open(out_path);
        if (!file) return fail("io", "cannot open " + out_path + " for writing");
      }

      const auto start = std::chrono::steady_clock::now();
      std::vector<gtsf::identities::VerificationReport> reports;
      reports.reserve(total);
      std::vector<std::size_t> idx(axes.size(), 0);
      for (std::size_t n = 0; n < total; ++n) {
        TransformCase c = base;
        for (std::size_t i = 0; i < axes.size(); ++i) set_param(c, axes[i].name, axes[i].at(idx[i]));
        reports.push_back(gtsf::identities::verify(c, verify_options(tol_flag)));
        for (std::size_t i = axes.size(); i-- > 0;) {
          if (++idx[i] < axes[i].count) break;
          idx[i] = 0;
        }
      }
      const double wall =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
      const auto doc = gtsf::report::make_document(std::move(reports), wall);
      std::ostream& os = out_path.empty() ? std::cout : file;
      write_document(os, doc, format);
      if (!out_path.empty()) {
        file.close();
        if (!file) return fail("io", "failed writing " + out_path);
        std::cout << "wrote " << doc.summary.total << " cases to " << out_path << " ("
                  << doc.summary.passed << " passed)\n";
      }
      return doc.summary.failed == 0 ? kExitPass : kExitFailed;
    }
  } catch (const UsageError& e) {
    return fail("usage", e.what());
  } catch (const Error& e) {
    return fail(gtsf::to_string(e.kind()), e.what());
  }
  return kExitUsage;
}
