#pragma once

#include <string>
#include <vector>

namespace mlat {

/// Where an expected value comes from: a value published for the loop, or one
/// recomputed here by an independent route (a formula, a second algorithm).
enum class Basis { Published, Derived };

std::string to_string(Basis b);

struct Check {
  std::string id;
  std::string expected;
  std::string computed;
  bool pass = false;
  Basis basis = Basis::Derived;
  std::string source;
};

/// Ordered list of checks. A report passes iff every check passes.
class Report {
public:
  Report() = default;
  explicit Report(std::string title) : title_(std::move(title)) {}

  const std::string& title() const { return title_; }
  const std::vector<Check>& checks() const { return checks_; }

  void add(Check c) { checks_.push_back(std::move(c)); }

  template <class T>
  bool expect_eq(std::string id, const T& expected, const T& computed, Basis basis, std::string source) {
    const bool pass = expected == computed;
    add({std::move(id), show(expected), show(computed), pass, basis, std::move(source)});
    return pass;
  }

  bool expect_true(std::string id, bool computed, Basis basis, std::string source) {
    return expect_eq(std::move(id), true, computed, basis, std::move(source));
  }

  void append(const Report& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  }

  bool ok() const;
  std::size_t failures() const;

  /// One line per check; failing checks also name their source.
  std::string render() const;

private:
  static std::string show(bool v) { return v ? "true" : "false"; }
  static std::string show(const std::string& v) { return v; }
  static std::string show(const char* v) { return v; }
  template <class T>
  static std::string show(const T& v) {
    using std::to_string;
    return to_string(v);
  }

  std::string title_;
  std::vector<Check> checks_;
};

} // namespace mlat
