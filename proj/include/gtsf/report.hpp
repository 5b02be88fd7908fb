#pragma once

// Report documents: JSON (nlohmann) and CSV serialization of verification
// results.

#include <charconv>
#include <complex>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "gtsf/errors.hpp"
#include "gtsf/verifier.hpp"

namespace gtsf::report {

using identities::Complex;
using identities::TransformCase;
using identities::VerificationReport;
using nlohmann::json;

inline constexpr const char* kToolVersion = "0.1.0";

struct Summary {
  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t failed = 0;
  friend bool operator==(const Summary&, const Summary&) = default;
};

struct ReportDocument {
  std::string tool_version = kToolVersion;
  std::vector<VerificationReport> cases;
  Summary summary;
  double wall_time_seconds = 0.0;
  friend bool operator==(const ReportDocument&, const ReportDocument&) = default;
};

inline Summary summarize(const std::vector<VerificationReport>& cases) {
  Summary s;
  s.total = cases.size();
  for (const auto& c : cases) s.passed += c.passed ? 1 : 0;
  s.failed = s.total - s.passed;
  return s;
}

/// Shortest representation that reads back to the same double.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string out = format_double(z.real());
  if (!std::signbit(z.imag())) out += '+';
  return out + format_double(z.imag()) + "i";
}

// ---------------------------------------------------------------------------
// JSON

namespace detail {

inline json params_json(const TransformCase& c) {
  const auto& g = c.gtsf;
  json p = {{"a", g.a},           {"p", g.p},   {"b", g.b},   {"c", g.c},
            {"lambda", g.lambda}, {"mu", g.mu}, {"xi", g.xi}, {"x", c.x}};
  std::visit(
      [&](const auto& a) {
        using A = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<A, identities::EulerArgs>) {
          p["r"] = a.r;
          p["s"] = a.s;
        } else if constexpr (std::is_same_v<A, identities::LaplaceArgs>) {
          p["s"] = a.s;
        } else if constexpr (std::is_same_v<A, identities::WhittakerArgs>) {
          p["zeta"] = a.zeta;
          p["tau"] = a.tau;
          p["omega"] = a.omega;
        } else if constexpr (std::is_same_v<A, identities::KTransformArgs>) {
          p["rho"] = a.rho;
          p["nu"] = a.nu;
          p["omega"] = a.omega;
        } else {
          p["order"] = a.order;
          p["omega"] = a.omega;
        }
      },
      c.args);
  return p;
}

inline TransformCase case_from_json(const std::string& theorem, const json& p) {
  const auto t = identities::parse_theorem(theorem);
  if (!t) throw Error(ErrorKind::InvalidCase, "unknown theorem '" + theorem + "'");
  TransformCase c;
  c.gtsf.a = p.at("a").get<int>();
  c.gtsf.p = p.at("p").get<double>();
  c.gtsf.b = p.at("b").get<double>();
  c.gtsf.c = p.at("c").get<double>();
  c.gtsf.lambda = p.at("lambda").get<double>();
  c.gtsf.mu = p.at("mu").get<double>();
  c.gtsf.xi = p.at("xi").get<double>();
  c.x = p.at("x").get<double>();
  switch (*t) {
    case identities::Theorem::Euler:
      c.args = identities::EulerArgs{p.at("r").get<double>(), p.at("s").get<double>()};
      break;
    case identities::Theorem::Laplace:
      c.args = identities::LaplaceArgs{p.at("s").get<double>()};
      break;
    case identities::Theorem::Whittaker:
      c.args = identities::WhittakerArgs{p.at("zeta").get<double>(), p.at("tau").get<double>(),
                                         p.at("omega").get<double>()};
      break;
    case identities::Theorem::KTransform:
      c.args = identities::KTransformArgs{p.at("rho").get<double>(), p.at("nu").get<double>(),
                                          p.at("omega").get<double>()};
      break;
    case identities::Theorem::FracFourier:
      c.args = identities::FracFourierArgs{p.at("order").get<double>(),
                                           p.at("omega").get<double>()};
      break;
  }
  return c;
}

inline json complex_json(const std::optional<Complex>& z) {
  if (!z) return nullptr;
  return {{"re", z->real()}, {"im", z->imag()}};
}

inline std::optional<Complex> complex_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return Complex(j.at("re").get<double>(), j.at("im").get<double>());
}

inline json optional_json(const std::optional<double>& v) {
  if (!v) return nullptr;
  return *v;
}

inline std::optional<double> optional_from_json(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<double>();
}

inline identities::ReportStatus status_from_string(const std::string& s) {
  using identities::ReportStatus;
  for (auto st : {ReportStatus::Passed, ReportStatus::Failed, ReportStatus::Invalid}) {
    if (s == identities::to_string(st)) return st;
  }
  throw Error(ErrorKind::InvalidCase, "unknown status '" + s + "'");
}

}  // namespace detail

inline json to_json(const VerificationReport& r) {
  return {{"theorem", identities::to_string(r.case_.theorem())},
          {"params", detail::params_json(r.case_)},
          {"lhs", detail::complex_json(r.lhs)},
          {"rhs", detail::complex_json(r.rhs)},
          {"abs_residual", detail::optional_json(r.abs_residual)},
          {"rel_residual", detail::optional_json(r.rel_residual)},
          {"quad_error", detail::optional_json(r.quad_error)},
          {"series_terms", r.series_terms},
          {"passed", r.passed},
          {"status", identities::to_string(r.status)},
          {"notes", r.notes}};
}

inline VerificationReport report_from_json(const json& j) {
  VerificationReport r;
  r.case_ = detail::case_from_json(j.at("theorem").get<std::string>(), j.at("params"));
  r.lhs = detail::complex_from_json(j.at("lhs"));
  r.rhs = detail::complex_from_json(j.at("rhs"));
  r.abs_residual = detail::optional_from_json(j.at("abs_residual"));
  r.rel_residual = detail::optional_from_json(j.at("rel_residual"));
  r.quad_error = detail::optional_from_json(j.at("quad_error"));
  r.series_terms = j.at("series_terms").get<std::size_t>();
  r.passed = j.at("passed").get<bool>();
  r.status = detail::status_from_string(j.at("status").get<std::string>());
  r.notes = j.at("notes").get<std::string>();
  return r;
}

inline json to_json(const ReportDocument& d) {
  json cases = json::array();
  for (const auto& c : d.cases) cases.push_back(to_json(c));
  return {{"tool_version", d.tool_version},
          {"cases", std::move(cases)},
          {"summary",
           {{"total", d.summary.total}, {"passed", d.summary.passed}, {"failed", d.summary.failed}}},
          {"wall_time_seconds", d.wall_time_seconds}};
}

inline ReportDocument document_from_json(const json& j) {
  ReportDocument d;
  d.tool_version = j.at("tool_version").get<std::string>();
  for (const auto& c : j.at("cases")) d.cases.push_back(report_from_json(c));
  const auto& s = j.at("summary");
  d.summary.total = s.at("total").get<std::size_t>();
  d.summary.passed = s.at("passed").get<std::size_t>();
  d.summary.failed = s.at("failed").get<std::size_t>();
  d.wall_time_seconds = j.at("wall_time_seconds").get<double>();
  if (d.summary != summarize(d.cases)) {
    throw Error(ErrorKind::InvalidCase, "report summary does not match its cases");
  }
  return d;
}

inline ReportDocument make_document(std::vector<VerificationReport> cases, double wall_time) {
  ReportDocument d;
  d.summary = summarize(cases);
  d.cases = std::move(cases);
  d.wall_time_seconds = wall_time;
  return d;
}

// ---------------------------------------------------------------------------
// CSV

inline constexpr const char* kCsvHeader =
    "theorem,a,p,b,c,lambda,mu,xi,x,r,s,zeta,tau,omega,rho,nu,order,lhs,rhs,"
    "abs_residual,rel_residual,passed";

inline std::string csv_row(const VerificationReport& r) {
  const auto& c = r.case_;
  std::optional<double> r_, s_, zeta, tau, omega, rho, nu, order;
  std::visit(
      [&](const auto& a) {
        using A = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<A, identities::EulerArgs>) {
          r_ = a.r;
          s_ = a.s;
        } else if constexpr (std::is_same_v<A, identities::LaplaceArgs>) {
          s_ = a.s;
        } else if constexpr (std::is_same_v<A, identities::WhittakerArgs>) {
          zeta = a.zeta;
          tau = a.tau;
          omega = a.omega;
        } else if constexpr (std::is_same_v<A, identities::KTransformArgs>) {
          rho = a.rho;
          nu = a.nu;
          omega = a.omega;
        } else {
          order = a.order;
          omega = a.omega;
        }
      },
      c.args);
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string(); };
  auto optc = [](const std::optional<Complex>& v) { return v ? format_complex(*v) : std::string(); };
  std::string row = identities::to_string(c.theorem());
  for (const std::string& cell :
       {std::to_string(c.gtsf.a), format_double(c.gtsf.p), format_double(c.gtsf.b),
        format_double(c.gtsf.c), format_double(c.gtsf.lambda), format_double(c.gtsf.mu),
        format_double(c.gtsf.xi), format_double(c.x), opt(r_), opt(s_), opt(zeta), opt(tau),
        opt(omega), opt(rho), opt(nu), opt(order), optc(r.lhs), optc(r.rhs),
        opt(r.abs_residual), opt(r.rel_residual), std::string(r.passed ? "true" : "false")}) {
    row += ',';
    row += cell;
  }
  return row;
}

inline void write_csv(std::ostream& os, const ReportDocument& d) {
  os << kCsvHeader << '\n';
  for (const auto& c : d.cases) os << csv_row(c) << '\n';
}

// ---------------------------------------------------------------------------
// Text

inline void write_text(std::ostream& os, const VerificationReport& r) {
  auto opt = [](const std::optional<double>& v) { return v ? format_double(*v) : std::string("-"); };
  os << identities::to_string(r.case_.theorem()) << ": " << identities::to_string(r.status) << '\n';
  os << "  params        " << detail::params_json(r.case_).dump() << '\n';
  os << "  lhs           " << (r.lhs ? format_complex(*r.lhs) : "-") << '\n';
  os << "  rhs           " << (r.rhs ? format_complex(*r.rhs) : "-") << '\n';
  os << "  abs_residual  " << opt(r.abs_residual) << '\n';
  os << "  rel_residual  " << opt(r.rel_residual) << '\n';
  os << "  quad_error    " << opt(r.quad_error) << '\n';
  os << "  series_terms  " << r.series_terms << '\n';
  if (!r.notes.empty()) os << "  notes         " << r.notes << '\n';
}

}  // namespace gtsf::report
