#pragma once

// The verification suite: a task list over (n, N, lambda, m), run on a
// worker pool, assembled into a report sorted by check name and context.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "qgelfand/central.hpp"
#include "qgelfand/hecke.hpp"
#include "qgelfand/representation.hpp"
#include "qgelfand/rmatrix.hpp"

namespace qgelfand {

inline constexpr const char* kVersion = "0.1.0";

inline const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names{"ybe",
                                               "crossing",
                                               "fseries",
                                               "antisymmetrizer",
                                               "fusion",
                                               "defining_relations",
                                               "comatrix",
                                               "lltr",
                                               "centrality",
                                               "liouville",
                                               "series_expansion",
                                               "eigenvalue_match",
                                               "partial_fractions",
                                               "classical_limit",
                                               "alternate_families",
                                               "shift_covariance"};
  return names;
}

enum class Fault { none, rmatrix, generator, qnumber };

inline const char* fault_name(Fault f) {
  switch (f) {
    case Fault::rmatrix: return "rmatrix";
    case Fault::generator: return "generator";
    case Fault::qnumber: return "qnumber";
    default: return "none";
  }
}

struct SuiteConfig {
  std::vector<int> ns{1, 2, 3};
  int N_max = 3;
  int m_max = 3;
  int order = 3;
  int fseries_order = 8;
  std::vector<std::string> checks;  // empty: all
  std::vector<std::string> exclude;
  int jobs = 1;
  Fault fault = Fault::none;

  bool selected(const std::string& name) const {
    const bool in = checks.empty() || std::find(checks.begin(), checks.end(), name) != checks.end();
    return in && std::find(exclude.begin(), exclude.end(), name) == exclude.end();
  }
};

// Throws std::invalid_argument on a bad configuration.
inline void validate(const SuiteConfig& c) {
  const auto& names = check_names();
  for (const auto* list : {&c.checks, &c.exclude})
    for (const auto& x : *list)
      if (std::find(names.begin(), names.end(), x) == names.end()) throw std::invalid_argument("unknown check '" + x + "'");
  if (c.ns.empty()) throw std::invalid_argument("empty n range");
  for (int n : c.ns)
    if (n < 1) throw std::invalid_argument("n must be positive");
  if (c.N_max < 1 || c.m_max < 0 || c.order < 1 || c.jobs < 1 || c.fseries_order < 0)
    throw std::invalid_argument("bounds must be positive");
}

struct CheckRecord {
  std::string name;
  std::string context;
  bool pass = true;
  std::string lhs, rhs, witness;

  friend bool operator<(const CheckRecord& a, const CheckRecord& b) {
    return std::tie(a.name, a.context) < std::tie(b.name, b.context);
  }
};

struct Report {
  std::string version = kVersion;
  SuiteConfig config;
  std::vector<CheckRecord> checks;
  int pass = 0, fail = 0;
  long long runtime_ms = 0;
};

// ---------------------------------------------------------------------------
// Fault injection.

inline RMatrixSet suite_rmatrix(int n, Fault f) {
  RMatrixSet s = build_rmatrix_set(n);
  if (f == Fault::rmatrix) s.R(0, 0) += Scalar::q();
  return s;
}

inline Representation suite_vector_rep(int n, Fault f) {
  Representation v = vector_rep(n);
  if (f == Fault::generator) {
    SMatrix& g = n >= 2 ? v.image(Sign::minus, 1, 0) : v.image(Sign::minus, 0, 0);
    g = g.scaled(Scalar::q());
  }
  return v;
}

inline QNumbers suite_qnumbers(Fault f) { return QNumbers{f == Fault::qnumber}; }

// ---------------------------------------------------------------------------
// Tasks.

struct Task {
  std::string name, context;  // used when the task throws
  std::function<std::vector<CheckRecord>()> run;
};

inline CheckRecord make_record(std::string name, std::string context, const Outcome& o) {
  return CheckRecord{std::move(name), std::move(context), o.pass, o.lhs, o.rhs, o.witness};
}

inline std::string sign_ctx(Sign s) { return std::string(" sign=") + sign_name(s); }

inline std::vector<Weight> dominant_weights(int n, int total) {
  std::vector<Weight> out;
  std::vector<int> lam(static_cast<std::size_t>(n), 0);
  std::function<void(int, int, int)> rec = [&](int pos, int left, int cap) {
    if (pos == n) {
      if (left == 0) out.push_back({lam});
      return;
    }
    for (int x = std::min(left, cap); x >= 0; --x) {
      lam[static_cast<std::size_t>(pos)] = x;
      rec(pos + 1, left - x, x);
    }
  };
  rec(0, total, total);
  return out;
}

namespace detail {

inline std::string nctx(int n) { return "n=" + std::to_string(n); }
inline std::string nNctx(int n, int N) { return nctx(n) + " N=" + std::to_string(N); }
inline std::string lctx(const Weight& w) { return nctx(w.n()) + " lambda=" + w.str(); }

inline void structure_tasks(const SuiteConfig& c, int n, std::vector<Task>& tasks) {
  const Fault f = c.fault;
  if (c.selected("ybe"))
    tasks.push_back({"ybe", nctx(n), [=] { return std::vector{make_record("ybe", nctx(n), check_yang_baxter(suite_rmatrix(n, f)))}; }});
  if (c.selected("crossing"))
    tasks.push_back({"crossing", nctx(n), [=] {
                       const auto r = crossing_scalar(suite_rmatrix(n, f));
                       OutcomeAccumulator acc;
                       acc.add(r.proportional, "proportional to D2");
                       acc.add(r.prediction, "c(x)");
                       return std::vector{make_record("crossing", nctx(n), acc.result("c(x) = " + render_x(r.c), render_x(predicted_crossing_scalar(n))))};
                     }});
  if (c.selected("fseries")) {
    const std::string ctx = nctx(n) + " order=" + std::to_string(c.fseries_order);
    tasks.push_back({"fseries", ctx, [=] {
                       const FSeries fs = f_series(n, c.fseries_order);
                       OutcomeAccumulator acc;
                       const auto res = f_series_residual(fs);
                       for (std::size_t k = 0; k < res.size(); ++k)
                         acc.add(res[k].is_zero() ? Outcome::ok() : Outcome::fail("nonzero", res[k].str(), "0"),
                                 "residual coefficient of x^" + std::to_string(k));
                       acc.add(check_crossing_with_f(fs, crossing_scalar(suite_rmatrix(n, f)).c), "crossing with f");
                       std::string lhs = "f = 1";
                       for (std::size_t k = 1; k < fs.f.size() && k <= 2; ++k) lhs += " + (" + fs.f[k].str() + ")x^" + std::to_string(k);
                       return std::vector{make_record("fseries", ctx, acc.result(lhs + " + ...", "f(xq^2n)(1-x)(1-xq^2n) = f(x)(1-xq^2)(1-xq^(2n-2))"))};
                     }});
  }
  if (c.selected("antisymmetrizer"))
    for (int k = 1; k <= std::min(n + 1, 4); ++k) {
      const std::string ctx = nctx(n) + " k=" + std::to_string(k);
      tasks.push_back({"antisymmetrizer", ctx, [=] {
                         return std::vector{make_record("antisymmetrizer", ctx, antisymmetrizer_check(suite_rmatrix(n, f), k))};
                       }});
    }
  if (c.selected("fusion"))
    for (int N = 1; N <= std::min(c.N_max, n <= 2 ? 2 : 1); ++N)
      for (int k = 2; k <= n; ++k)
        for (Sign s : {Sign::plus, Sign::minus}) {
          const std::string ctx = nNctx(n, N) + " k=" + std::to_string(k) + sign_ctx(s);
          tasks.push_back({"fusion", ctx, [=] {
                             const Representation rep = tensor_power(suite_vector_rep(n, f), N);
                             return std::vector{make_record("fusion", ctx, check_fusion(rep, build_rmatrix_set(n), k, s))};
                           }});
        }
}

inline void representation_tasks(const SuiteConfig& c, int n, std::vector<Task>& tasks) {
  const Fault f = c.fault;
  const QNumbers qn = suite_qnumbers(f);
  if (c.selected("defining_relations")) {
    for (int N = 0; N <= c.N_max; ++N) {
      const std::string ctx = nNctx(n, N);
      tasks.push_back({"defining_relations", ctx, [=] {
                         return std::vector{make_record("defining_relations", ctx,
                                                        verify_defining_relations(tensor_power(suite_vector_rep(n, f), N), suite_rmatrix(n, f)))};
                       }});
    }
    const std::string ctx = nctx(n) + " dual";
    tasks.push_back({"defining_relations", ctx, [=] {
                       return std::vector{make_record("defining_relations", ctx, verify_defining_relations(dual_vector_rep(n), suite_rmatrix(n, f)))};
                     }});
  }
  for (int N = 1; N <= std::min(c.N_max, 2); ++N)
    for (Sign s : {Sign::plus, Sign::minus}) {
      const std::string ctx = nNctx(n, N) + sign_ctx(s);
      if (c.selected("comatrix"))
        tasks.push_back({"comatrix", ctx, [=] {
                           return std::vector{make_record("comatrix", ctx, comatrix_check(tensor_power(suite_vector_rep(n, f), N), s))};
                         }});
      if (c.selected("lltr"))
        tasks.push_back({"lltr", ctx, [=] {
                           const Representation rep = tensor_power(suite_vector_rep(n, f), N);
                           OutcomeAccumulator acc;
                           const Outcome o = z_matrix_check(rep, s, qn);
                           acc.add(z_operator(rep, s, qn).inverse_ok, "L(u) L(u)^-1 = 1");
                           acc.add(o);
                           return std::vector{make_record("lltr", ctx, acc.result(o.lhs, o.rhs))};
                         }});
    }
  for (int N = 1; N <= c.N_max; ++N) {
    if (c.selected("centrality"))
      for (Sign s : {Sign::plus, Sign::minus}) {
        const std::string ctx = nNctx(n, N) + sign_ctx(s);
        tasks.push_back({"centrality", ctx, [=] {
                           const Representation rep = tensor_power(suite_vector_rep(n, f), N);
                           OutcomeAccumulator acc;
                           if (s == Sign::plus) {
                             const auto inv = gelfand_invariants(rep, c.m_max);
                             for (int m = 0; m <= c.m_max; ++m)
                               acc.add(centrality_check(rep, inv[static_cast<std::size_t>(m)]), "tr_q M^" + std::to_string(m));
                           }
                           const auto z = z_series_coefficients(rep, s, c.order, qn);
                           for (int m = 0; m <= c.order; ++m)
                             acc.add(centrality_check(rep, z[static_cast<std::size_t>(m)]), "z coefficient " + std::to_string(m));
                           return std::vector{make_record("centrality", ctx,
                                                          acc.result(s == Sign::plus ? "[tr_q M^m, l+-_ij], [z_k, l+-_ij]" : "[z_k, l+-_ij]",
                                                                     "0 on evaluated images"))};
                         }});
      }
    if (c.selected("alternate_families")) {
      const std::string ctx = nNctx(n, N) + " (a,b)";
      tasks.push_back({"alternate_families", ctx, [=] {
                         return std::vector{make_record("alternate_families", ctx,
                                                        alternate_operator_check(tensor_power(suite_vector_rep(n, f), N), c.m_max))};
                       }});
    }
  }
}

inline void weight_tasks(const SuiteConfig& c, int n, std::vector<Task>& tasks) {
  const Fault f = c.fault;
  const QNumbers qn = suite_qnumbers(f);
  const bool need_rep = c.selected("liouville") || c.selected("series_expansion") || c.selected("eigenvalue_match") ||
                        c.selected("alternate_families");
  for (int N = 0; N <= c.N_max; ++N)
    for (const Weight& w : dominant_weights(n, N)) {
      const std::string lc = lctx(w);
      if (need_rep)
        tasks.push_back({"liouville", lc, [=] {
                           std::vector<CheckRecord> out;
                           const Representation rep = tensor_power(suite_vector_rep(n, f), N);
                           const SVector xi = highest_weight_vector(rep, w);
                           auto guarded = [&](const std::string& name, const std::string& ctx, const std::function<Outcome()>& fn) {
                             try {
                               out.push_back(make_record(name, ctx, fn()));
                             } catch (const MathError& e) {
                               out.push_back(make_record(name, ctx, Outcome::fail(e.what())));
                             }
                           };
                           if (c.selected("liouville"))
                             for (Sign s : {Sign::plus, Sign::minus})
                               guarded("liouville", lc + sign_ctx(s), [&] { return liouville_check(rep, xi, w, s, qn); });
                           if (c.selected("series_expansion"))
                             guarded("series_expansion", lc + " order=" + std::to_string(c.order),
                                     [&] { return series_expansion_check(rep, xi, c.order, qn); });
                           if (c.selected("eigenvalue_match")) {
                             const auto vals = gelfand_scalars(rep, xi, c.m_max);
                             for (int m = 0; m <= c.m_max; ++m)
                               guarded("eigenvalue_match", lc + " m=" + std::to_string(m), [&] {
                                 return compare(vals[static_cast<std::size_t>(m)], closed_form_value(w, m, qn),
                                                [](const Scalar& x) { return x.str(); }, "hwv scalar differs from the closed form");
                               });
                           }
                           if (c.selected("alternate_families"))
                             guarded("alternate_families", lc + " (c)", [&] { return alternate_eigenvalue_check(rep, xi, w, c.m_max, qn); });
                           return out;
                         }});
      if (c.selected("partial_fractions"))
        tasks.push_back({"partial_fractions", lc, [=] {
                           return std::vector{make_record("partial_fractions", lc, partial_fraction_check(w, c.order, qn))};
                         }});
      for (int m = 0; m <= c.m_max; ++m) {
        const std::string mc = lc + " m=" + std::to_string(m);
        if (c.selected("classical_limit"))
          tasks.push_back({"classical_limit", mc, [=] { return std::vector{make_record("classical_limit", mc, classical_limit_check(w, m, qn))}; }});
        if (c.selected("shift_covariance"))
          for (int s : {-1, 2}) {
            const std::string sc = mc + " s=" + std::to_string(s);
            tasks.push_back({"shift_covariance", sc, [=] {
                               return std::vector{make_record("shift_covariance", sc, shift_covariance_check(w, m, s, qn))};
                             }});
          }
      }
    }
}

}  // namespace detail

inline std::vector<Task> build_tasks(const SuiteConfig& c) {
  std::vector<Task> tasks;
  for (int n : c.ns) {
    detail::structure_tasks(c, n, tasks);
    detail::representation_tasks(c, n, tasks);
    detail::weight_tasks(c, n, tasks);
  }
  return tasks;
}

inline std::vector<CheckRecord> run_task(const Task& t) {
  try {
    return t.run();
  } catch (const MathError& e) {
    return {make_record(t.name, t.context, Outcome::fail(e.what()))};
  } catch (const std::invalid_argument& e) {
    return {make_record(t.name, t.context, Outcome::fail(e.what()))};
  }
}

inline void tally(Report& r) {
  std::sort(r.checks.begin(), r.checks.end());
  r.pass = r.fail = 0;
  for (const auto& c : r.checks) (c.pass ? r.pass : r.fail) += 1;
}

inline Report run_suite(const SuiteConfig& c) {
  validate(c);
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Task> tasks = build_tasks(c);
  std::vector<std::vector<CheckRecord>> results(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) results[i] = run_task(tasks[i]);
  };
  std::vector<std::thread> pool;
  for (int j = 1; j < c.jobs; ++j) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  Report r;
  r.config = c;
  for (auto& v : results)
    for (auto& rec : v) r.checks.push_back(std::move(rec));
  tally(r);
  r.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace qgelfand
