// Acceptance run: one PASS/FAIL line per criterion, with timing.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "qgelfand/qgelfand.hpp"

using namespace qgelfand;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
  int checked = 0;

  void require(const Outcome& o, const std::string& what) {
    ++checked;
    if (!o.pass && pass) {
      pass = false;
      detail = what + ": " + o.witness + (o.lhs.empty() ? "" : " [lhs " + o.lhs + "; rhs " + o.rhs + "]");
    }
  }
  void require(bool ok, const std::string& what) { require(ok ? Outcome::ok() : Outcome::fail("failed"), what); }
};

int failures = 0;

void criterion(int id, const std::string& title, double target_s, const std::function<void(Verdict&)>& body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    body(v);
  } catch (const std::exception& e) {
    v.pass = false;
    v.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (v.pass && secs > target_s) {
    v.pass = false;
    v.detail = "runtime target exceeded";
  }
  if (!v.pass) ++failures;
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s, target < %.0f s", secs, target_s);
  std::cout << (v.pass ? "PASS" : "FAIL") << "  criterion " << id << " (" << timing << ", " << v.checked << " checks): " << title;
  if (!v.pass) std::cout << " -- " << v.detail;
  std::cout << std::endl;
}

std::string tag(int n, int N = -1) { return "n=" + std::to_string(n) + (N >= 0 ? " N=" + std::to_string(N) : ""); }

// The lambda set of the eigenvalue criteria.
std::vector<Weight> weight_set() {
  std::vector<Weight> out;
  for (int s = 0; s <= 5; ++s)
    for (const auto& w : dominant_weights(2, s)) out.push_back(w);
  for (int s = 0; s <= 4; ++s)
    for (const auto& w : dominant_weights(3, s)) out.push_back(w);
  out.push_back(Weight{{1, 0, 0, 0}});
  out.push_back(Weight{{1, 1, 0, 0}});
  return out;
}

struct HighestVector {
  Weight w;
  Representation rep;
  SVector xi;
};

const std::vector<HighestVector>& highest_vectors() {
  static const std::vector<HighestVector> hv = [] {
    std::vector<HighestVector> out;
    for (const auto& w : weight_set()) {
      Representation rep = tensor_power(vector_rep(w.n()), w.size());
      SVector xi = highest_weight_vector(rep, w);
      out.push_back({w, std::move(rep), std::move(xi)});
    }
    return out;
  }();
  return hv;
}

int cli(const std::vector<std::string>& args, std::string* out_text = nullptr) {
  std::vector<const char*> argv{"qgelfand"};
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  if (out_text) *out_text = out.str();
  return code;
}

json strip_runtime(json j) {
  j.erase("runtime_ms");
  return j;
}

}  // namespace

int main() {
  criterion(1, "defining relations on vector reps and tensor powers", 60, [](Verdict& v) {
    for (int n = 1; n <= 4; ++n) {
      const RMatrixSet rs = build_rmatrix_set(n);
      v.require(verify_defining_relations(vector_rep(n), rs), "vector_rep " + tag(n));
      v.require(verify_defining_relations(dual_vector_rep(n), rs), "dual_vector_rep " + tag(n));
    }
    for (auto [n, nmax] : std::vector<std::pair<int, int>>{{2, 5}, {3, 4}, {4, 2}}) {
      const RMatrixSet rs = build_rmatrix_set(n);
      for (int N = 0; N <= nmax; ++N) v.require(verify_defining_relations(tensor_power(vector_rep(n), N), rs), "tensor power " + tag(n, N));
    }
  });

  criterion(2, "Yang-Baxter, crossing scalar and f-series", 60, [](Verdict& v) {
    for (int n : {2, 3}) v.require(check_yang_baxter(build_rmatrix_set(n)), "YBE " + tag(n));
    for (int n = 1; n <= 4; ++n) {
      const auto r = crossing_scalar(build_rmatrix_set(n));
      v.require(r.proportional, "crossing proportional " + tag(n));
      v.require(r.prediction, "crossing c(x) " + tag(n));
      if (n == 2 || n == 3) {
        const FSeries f = f_series(n, 8);
        for (const auto& c : f_series_residual(f)) v.require(c.is_zero(), "f residual " + tag(n));
        v.require(check_crossing_with_f(f, r.c), "crossing with f " + tag(n));
      }
    }
  });

  criterion(3, "antisymmetrizer ranks, reduced words, P^q action, fusion", 120, [](Verdict& v) {
    for (int n = 1; n <= 4; ++n) {
      const RMatrixSet rs = build_rmatrix_set(n);
      for (int k = 1; k <= n; ++k)
        v.require(content_block_rank(antisymmetrizer(rs, k), n, k) == binomial(n, k), "rank A^(k) " + tag(n) + " k=" + std::to_string(k));
    }
    v.require(antisymmetrizer(build_rmatrix_set(2), 3).is_zero(), "A^(3) = 0 for n=2");
    for (int n : {2, 3})
      for (int k : {3, 4}) {
        const RMatrixSet rs = build_rmatrix_set(n);
        for (const auto& p : all_perms(k)) {
          const SMatrix ref = q_perm(rs, p);
          for (const auto& w : all_reduced_words(p)) v.require(q_perm_word(rs, k, w) == ref, "reduced words S" + std::to_string(k) + " " + tag(n));
        }
      }
    for (int n = 1; n <= 3; ++n)
      for (int k = 1; k <= 3; ++k) v.require(check_pq_action(build_rmatrix_set(n), k), "P^q action " + tag(n) + " k=" + std::to_string(k));
    for (int n : {2, 3})
      for (Sign s : {Sign::plus, Sign::minus})
        v.require(check_fusion(vector_rep(n), build_rmatrix_set(n), 2, s), "fusion k=2 " + tag(n) + sign_ctx(s));
  });

  criterion(4, "comatrix and transposed comatrix identities", 120, [](Verdict& v) {
    for (int n : {2, 3})
      for (int N = 1; N <= 2; ++N)
        for (Sign s : {Sign::plus, Sign::minus}) v.require(comatrix_check(tensor_power(vector_rep(n), N), s), "comatrix " + tag(n, N) + sign_ctx(s));
  });

  criterion(5, "centrality of tr_q M^m and of the z(u) coefficients", 300, [](Verdict& v) {
    for (int n : {2, 3})
      for (int N = 1; N <= 3; ++N) {
        const Representation rep = tensor_power(vector_rep(n), N);
        const auto inv = gelfand_invariants(rep, 4);
        for (int m = 0; m <= 4; ++m) v.require(centrality_check(rep, inv[static_cast<std::size_t>(m)]), "tr_q M^" + std::to_string(m) + " " + tag(n, N));
        for (Sign s : {Sign::plus, Sign::minus}) {
          const auto z = z_series_coefficients(rep, s, 4);
          for (int m = 0; m <= 4; ++m)
            v.require(centrality_check(rep, z[static_cast<std::size_t>(m)]), "z coefficient " + std::to_string(m) + " " + tag(n, N) + sign_ctx(s));
        }
      }
  });

  criterion(6, "hwv scalar of tr_q M^m equals the closed form", 600, [](Verdict& v) {
    for (const auto& h : highest_vectors()) {
      const auto vals = gelfand_scalars(h.rep, h.xi, 4);
      for (int m = 0; m <= 4; ++m)
        v.require(compare(vals[static_cast<std::size_t>(m)], closed_form_value(h.w, m), [](const Scalar& x) { return x.str(); }),
                  "lambda=" + h.w.str() + " m=" + std::to_string(m));
    }
  });

  criterion(7, "Liouville formula, qdet eigenvalue, series expansion, partial fractions", 600, [](Verdict& v) {
    for (const auto& h : highest_vectors()) {
      for (Sign s : {Sign::plus, Sign::minus}) v.require(liouville_check(h.rep, h.xi, h.w, s), "Liouville lambda=" + h.w.str() + sign_ctx(s));
      v.require(series_expansion_check(h.rep, h.xi, 4), "series lambda=" + h.w.str());
      v.require(partial_fraction_check(h.w, 4), "partial fractions lambda=" + h.w.str());
    }
  });

  criterion(8, "classical limit equals the Perelomov-Popov value", 60, [](Verdict& v) {
    for (const auto& w : weight_set())
      for (int m = 0; m <= 4; ++m) v.require(classical_limit_check(w, m), "lambda=" + w.str() + " m=" + std::to_string(m));
    v.require(classical_limit_eigenvalue(Weight{{1, 0}}, 1) == 1, "n=2 lambda=(1,0) m=1 -> 1");
    v.require(classical_limit_eigenvalue(Weight{{1, 0}}, 2) == 2, "n=2 lambda=(1,0) m=2 -> 2");
  });

  criterion(9, "alternate families (a), (b), (c)", 300, [](Verdict& v) {
    for (int n : {2, 3})
      for (int N = 1; N <= 3; ++N) {
        const Representation rep = tensor_power(vector_rep(n), N);
        v.require(alternate_operator_check(rep, 3), "(a),(b) " + tag(n, N));
        for (const auto& w : dominant_weights(n, N))
          v.require(alternate_eigenvalue_check(rep, highest_weight_vector(rep, w), w, 3), "(c) lambda=" + w.str());
      }
  });

  criterion(10, "every suite category fails under some injected fault", 60, [](Verdict& v) {
    std::set<std::string> caught;
    for (Fault f : {Fault::rmatrix, Fault::generator, Fault::qnumber}) {
      SuiteConfig c;
      c.fault = f;
      const Report r = run_suite(c);
      v.require(r.fail > 0, std::string("fault ") + fault_name(f) + " detected");
      for (const auto& rec : r.checks)
        if (!rec.pass && !rec.witness.empty()) caught.insert(rec.name);
    }
    for (const auto& name : check_names()) v.require(caught.count(name) == 1, "category " + name + " fails under a fault");
  });

  criterion(11, "CLI exit codes, determinism across --jobs, JSON round-trip", 30, [](Verdict& v) {
    v.require(cli({"verify", "--n", "1..2", "--N-max", "2"}) == 0, "verify exit 0");
    v.require(cli({"verify", "--checks", "nonexistent"}) == 2, "unknown check exit 2");
    v.require(cli({"verify", "--n", "0"}) == 2, "bad n exit 2");
    v.require(cli({"verify", "--bogus-flag"}) == 2, "unknown flag exit 2");
    v.require(cli({"verify", "--n", "2", "--fault", "rmatrix"}) == 1, "fault exit 1");
    v.require(cli({"eigenvalue", "--lambda", "0,1"}) == 2, "repeated l exit 2");
    v.require(cli({"limit", "--lambda", "1,0", "--m", "1,2"}) == 0, "limit exit 0");
    std::string one, four;
    cli({"verify", "--format", "json", "--jobs", "1"}, &one);
    cli({"verify", "--format", "json", "--jobs", "4"}, &four);
    v.require(strip_runtime(json::parse(one)) == strip_runtime(json::parse(four)), "reports identical across --jobs");
    const auto path = (std::filesystem::temp_directory_path() / "qgelfand_acceptance_report.json").string();
    cli({"verify", "--n", "2", "--fault", "generator", "--format", "json", "--out", path});
    std::ifstream in(path);
    const json j = json::parse(in);
    const Report back = report_from_json(j);
    v.require(back.pass == j["summary"]["pass"].get<int>() && back.fail == j["summary"]["fail"].get<int>(), "JSON round-trip summary");
    v.require(back.fail > 0, "round-trip report has failures");
    std::filesystem::remove(path);
  });

  std::cout << (failures == 0 ? "ALL CRITERIA PASS" : std::to_string(failures) + " CRITERIA FAIL") << std::endl;
  return failures == 0 ? 0 : 1;
}
