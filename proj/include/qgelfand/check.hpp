#pragma once

// Result of an identity check: both sides in canonical text, and where the
// first disagreement was found.

#include <optional>
#include <string>

namespace qgelfand {

struct Outcome {
  bool pass = true;
  std::string lhs;
  std::string rhs;
  std::string witness;  // empty on pass

  static Outcome ok(std::string lhs = {}, std::string rhs = {}) { return {true, std::move(lhs), std::move(rhs), {}}; }
  static Outcome fail(std::string witness, std::string lhs = {}, std::string rhs = {}) {
    return {false, std::move(lhs), std::move(rhs), std::move(witness)};
  }
};

// Compare two values with a canonical rendering.
template <class T, class Render>
Outcome compare(const T& lhs, const T& rhs, Render render, const std::string& what = "values differ") {
  if (lhs == rhs) return Outcome::ok(render(lhs), render(rhs));
  return Outcome::fail(what, render(lhs), render(rhs));
}

// Folds several sub-checks into one verdict; keeps the first failure.
class OutcomeAccumulator {
 public:
  void add(const Outcome& o, const std::string& label = {}) {
    ++count_;
    if (!o.pass && !failed_) {
      failed_ = o;
      if (!label.empty()) failed_->witness = label + ": " + failed_->witness;
    }
  }
  bool pass() const { return !failed_; }
  Outcome result(std::string lhs_summary, std::string rhs_summary) const {
    if (failed_) return *failed_;
    return Outcome::ok(std::move(lhs_summary), std::move(rhs_summary));
  }
  int count() const { return count_; }

 private:
  std::optional<Outcome> failed_;
  int count_ = 0;
};

}  // namespace qgelfand
