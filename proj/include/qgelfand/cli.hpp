#pragma once

// Command-line front end: verify, eigenvalue, limit.
// Exit codes: 0 all pass, 1 verification failure, 2 usage or config error.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "qgelfand/suite.hpp"

namespace qgelfand {

using nlohmann::json;

inline constexpr int kExitPass = 0;
inline constexpr int kExitFail = 1;
inline constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// "3", "1..3", "1,2,4" or a mix such as "0,2..4".
inline std::vector<int> parse_int_list(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  static const std::regex single(R"(\s*(-?\d+)\s*)"), range(R"(\s*(-?\d+)\s*\.\.\s*(-?\d+)\s*)");
  while (std::getline(ss, item, ',')) {
    std::smatch m;
    if (std::regex_match(item, m, range)) {
      const int a = std::stoi(m[1]), b = std::stoi(m[2]);
      if (a > b) throw UsageError("empty range '" + item + "' in " + what);
      for (int x = a; x <= b; ++x) out.push_back(x);
    } else if (std::regex_match(item, m, single)) {
      out.push_back(std::stoi(m[1]));
    } else {
      throw UsageError("cannot parse '" + text + "' for " + what);
    }
  }
  if (out.empty()) throw UsageError("empty list for " + what);
  return out;
}

inline std::vector<std::string> split_names(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

inline BigRational parse_rational(const std::string& text) {
  static const std::regex re(R"(\s*(-?\d+)\s*(?:/\s*(\d+))?\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, re)) throw UsageError("cannot parse rational '" + text + "'");
  const BigInt num(m[1].str());
  const BigInt den(m[2].matched ? m[2].str() : std::string("1"));
  if (den == 0) throw UsageError("zero denominator in '" + text + "'");
  return BigRational(num, den);
}

// ---------------------------------------------------------------------------
// Reports.

inline json config_json(const SuiteConfig& c) {
  json j{{"n", c.ns},
         {"N_max", c.N_max},
         {"m_max", c.m_max},
         {"order", c.order},
         {"fseries_order", c.fseries_order},
         {"checks", c.checks},
         {"exclude", c.exclude}};
  if (c.fault != Fault::none) j["fault"] = fault_name(c.fault);
  return j;
}

inline json report_json(const Report& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json e{{"name", c.name}, {"context", c.context}, {"verdict", c.pass ? "pass" : "fail"}, {"lhs", c.lhs}, {"rhs", c.rhs}};
    if (!c.pass) e["witness"] = c.witness;
    checks.push_back(std::move(e));
  }
  return json{{"version", r.version},
              {"config", config_json(r.config)},
              {"checks", std::move(checks)},
              {"summary", {{"pass", r.pass}, {"fail", r.fail}}},
              {"runtime_ms", r.runtime_ms}};
}

// Rebuilds the records of a written report and recounts them.
inline Report report_from_json(const json& j) {
  Report r;
  r.version = j.at("version").get<std::string>();
  const auto& c = j.at("config");
  r.config.ns = c.at("n").get<std::vector<int>>();
  r.config.N_max = c.at("N_max").get<int>();
  r.config.m_max = c.at("m_max").get<int>();
  r.config.order = c.at("order").get<int>();
  r.config.fseries_order = c.at("fseries_order").get<int>();
  r.config.checks = c.at("checks").get<std::vector<std::string>>();
  r.config.exclude = c.at("exclude").get<std::vector<std::string>>();
  for (const auto& e : j.at("checks")) {
    CheckRecord rec{e.at("name"), e.at("context"), e.at("verdict") == "pass", e.at("lhs"), e.at("rhs"), {}};
    if (e.contains("witness")) rec.witness = e.at("witness");
    r.checks.push_back(std::move(rec));
  }
  tally(r);
  r.runtime_ms = j.at("runtime_ms").get<long long>();
  return r;
}

inline std::string report_text(const Report& r) {
  std::ostringstream os;
  os << "qgelfand " << r.version << " verify\n";
  os << "config: " << config_json(r.config).dump() << "\n";
  for (const auto& c : r.checks) {
    os << (c.pass ? "PASS  " : "FAIL  ") << c.name << "  [" << c.context << "]\n";
    if (!c.pass) {
      os << "      witness: " << c.witness << "\n";
      if (!c.lhs.empty() || !c.rhs.empty()) os << "      lhs: " << c.lhs << "\n      rhs: " << c.rhs << "\n";
    }
  }
  os << "summary: " << r.pass << " pass, " << r.fail << " fail\n";
  os << "runtime_ms: " << r.runtime_ms << "\n";
  return os.str();
}

// E_m over the denominator prod_{i<j} [l_i - l_j]_q, as "(num)/(den)".
inline std::string qnumber_form(const Weight& w, const Scalar& value) {
  const auto ell = w.ell();
  Scalar den(1);
  for (std::size_t i = 0; i < ell.size(); ++i)
    for (std::size_t j = i + 1; j < ell.size(); ++j) den = den * qnum(ell[i] - ell[j]);
  const Scalar num = value * den;
  if (den.is_one() || !num.is_laurent() || !den.is_laurent()) return value.str();
  auto wrap = [](const IntLaurent& p) { return p.is_monomial() ? p.str() : "(" + p.str() + ")"; };
  return wrap(num.num()) + "/" + wrap(den.num());
}

// ---------------------------------------------------------------------------
// Commands.

class OutputSink {
 public:
  OutputSink(const std::string& path, std::ostream& fallback) : path_(path), fallback_(fallback) {}
  std::ostream& stream() { return buffer_; }
  void flush() {
    if (path_.empty()) {
      fallback_ << buffer_.str();
      return;
    }
    std::ofstream f(path_);
    if (!f) throw UsageError("cannot write '" + path_ + "'");
    f << buffer_.str();
  }

 private:
  std::string path_;
  std::ostream& fallback_;
  std::ostringstream buffer_;
};

inline int cmd_verify(const SuiteConfig& c, const std::string& format, const std::string& out_path, std::ostream& out) {
  validate(c);
  const Report r = run_suite(c);
  OutputSink sink(out_path, out);
  if (format == "json")
    sink.stream() << report_json(r).dump(2) << "\n";
  else
    sink.stream() << report_text(r);
  sink.flush();
  if (!out_path.empty()) out << "summary: " << r.pass << " pass, " << r.fail << " fail\n";
  return r.fail == 0 ? kExitPass : kExitFail;
}

inline Weight weight_for(const std::vector<int>& lambda, const std::string& n_text) {
  Weight w{lambda};
  if (!n_text.empty()) {
    const auto ns = parse_int_list(n_text, "--n");
    if (ns.size() != 1) throw UsageError("--n must be a single rank here");
    if (ns[0] != w.n()) throw UsageError("lambda has " + std::to_string(w.n()) + " entries but n = " + std::to_string(ns[0]));
  }
  if (w.n() < 1) throw UsageError("lambda is empty");
  require_dominant(w);
  return w;
}

inline std::vector<int> m_values(const std::string& m_text, int m_max) {
  std::vector<int> ms;
  if (m_text.empty())
    for (int m = 0; m <= m_max; ++m) ms.push_back(m);
  else
    ms = parse_int_list(m_text, "--m");
  for (int m : ms)
    if (m < 0) throw UsageError("m must be nonnegative");
  return ms;
}

inline int cmd_eigenvalue(const Weight& w, const std::vector<int>& ms, const std::optional<BigRational>& q0,
                          const std::string& format, const std::string& out_path, std::ostream& out) {
  if (q0 && (*q0 == 0 || *q0 == 1 || *q0 == -1)) throw UsageError("--eval-q must differ from 0, 1 and -1");
  OutputSink sink(out_path, out);
  json values = json::array();
  std::ostringstream text;
  text << "n=" << w.n() << " lambda=" << w.str() << "\n";
  for (int m : ms) {
    const Scalar v = closed_form_value(w, m);
    const std::string reduced = v.str(), qform = qnumber_form(w, v);
    json e{{"m", m}, {"value", reduced}, {"qnumber_form", qform}};
    text << "m=" << m << ": " << reduced;
    if (qform != reduced) text << " = " << qform;
    if (q0) {
      try {
        const std::string at = rational_str(v.eval(*q0));
        e["at_q"] = at;
        text << "  [q=" << rational_str(*q0) << ": " << at << "]";
      } catch (const DivisionByZero&) {
        throw UsageError("E_" + std::to_string(m) + " has a pole at q = " + rational_str(*q0));
      }
    }
    text << "\n";
    values.push_back(std::move(e));
  }
  if (format == "json")
    sink.stream() << json{{"version", kVersion}, {"command", "eigenvalue"}, {"n", w.n()}, {"lambda", w.lambda}, {"values", values}}.dump(2)
                  << "\n";
  else
    sink.stream() << text.str();
  sink.flush();
  return kExitPass;
}

inline int cmd_limit(const Weight& w, const std::vector<int>& ms, const std::string& format, const std::string& out_path,
                     std::ostream& out) {
  OutputSink sink(out_path, out);
  json values = json::array();
  std::ostringstream text;
  text << "n=" << w.n() << " lambda=" << w.str() << "\n";
  bool all = true;
  for (int m : ms) {
    const BigRational lim = classical_limit_eigenvalue(w, m), direct = perelomov_popov(w, m);
    const bool agree = lim == direct;
    all = all && agree;
    values.push_back({{"m", m}, {"limit", rational_str(lim)}, {"direct", rational_str(direct)}, {"verdict", agree ? "pass" : "fail"}});
    text << "m=" << m << ": " << rational_str(lim) << (agree ? "  (agrees with the direct formula)" : "  MISMATCH: direct formula gives " + rational_str(direct))
         << "\n";
  }
  if (format == "json")
    sink.stream() << json{{"version", kVersion}, {"command", "limit"}, {"n", w.n()}, {"lambda", w.lambda}, {"values", values}}.dump(2) << "\n";
  else
    sink.stream() << text.str();
  sink.flush();
  return all ? kExitPass : kExitFail;
}

inline int run_cli(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Quantum Gelfand invariants of U_q(gl_n): exact verification and eigenvalues", "qgelfand"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  SuiteConfig cfg;
  std::string n_text, lambda_text, m_text, checks_text, exclude_text, format = "text", out_path, eval_q, fault = "none";
  int m_max = 3;

  auto* verify = app.add_subcommand("verify", "Run the verification suite");
  verify->add_option("--n", n_text, "Ranks, e.g. 2 or 1..3 or 1,3");
  verify->add_option("--N-max", cfg.N_max, "Largest tensor power");
  verify->add_option("--m-max", cfg.m_max, "Largest power m");
  verify->add_option("--order", cfg.order, "Order of the u-series checks");
  verify->add_option("--checks", checks_text, "Comma-separated checks to run");
  verify->add_option("--exclude", exclude_text, "Comma-separated checks to skip");
  verify->add_option("--jobs", cfg.jobs, "Worker threads");
  verify->add_option("--fault", fault)->group("")->check(CLI::IsMember({"none", "rmatrix", "generator", "qnumber"}));

  auto* eigen = app.add_subcommand("eigenvalue", "Print the eigenvalues of tr_q M^m");
  auto* limit = app.add_subcommand("limit", "Print the q -> 1 limits and compare with the classical formula");
  for (auto* sub : {eigen, limit}) {
    sub->add_option("--n", n_text, "Rank (defaults to the length of lambda)");
    sub->add_option("--lambda", lambda_text, "Highest weight, comma-separated integers")->required();
    sub->add_option("--m", m_text, "Powers, e.g. 0..3 or 1,2");
    sub->add_option("--m-max", m_max, "Largest power when --m is absent");
  }
  eigen->add_option("--eval-q", eval_q, "Also evaluate at q = NUM/DEN");
  for (auto* sub : {verify, eigen, limit}) {
    sub->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", out_path, "Write the report to PATH");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    app.exit(e, out, err);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    if (verify->parsed()) {
      if (!n_text.empty()) cfg.ns = parse_int_list(n_text, "--n");
      cfg.checks = split_names(checks_text);
      cfg.exclude = split_names(exclude_text);
      if (fault == "rmatrix") cfg.fault = Fault::rmatrix;
      if (fault == "generator") cfg.fault = Fault::generator;
      if (fault == "qnumber") cfg.fault = Fault::qnumber;
      return cmd_verify(cfg, format, out_path, out);
    }
    const Weight w = weight_for(parse_int_list(lambda_text, "--lambda"), n_text);
    const auto ms = m_values(m_text, m_max);
    if (eigen->parsed()) {
      std::optional<BigRational> q0;
      if (!eval_q.empty()) q0 = parse_rational(eval_q);
      return cmd_eigenvalue(w, ms, q0, format, out_path, out);
    }
    return cmd_limit(w, ms, format, out_path, out);
  } catch (const RepeatedShiftedWeight& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const MathError& e) {
    err << "error: " << e.what() << "\n";
    return kExitFail;
  }
}

}  // namespace qgelfand
