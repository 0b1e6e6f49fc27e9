#include "mlat/report.hpp"

#include <algorithm>

namespace mlat {

std::string to_string(Basis b) { return b == Basis::Published ? "published" : "derived"; }

bool Report::ok() const { return failures() == 0; }

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.pass; }));
}

std::string Report::render() const {
  std::string out;
  if (!title_.empty())
    out += "== " + title_ + "\n";
  for (const Check& c : checks_) {
    out += c.pass ? "PASS " : "FAIL ";
    out += c.id + ": computed " + c.computed;
    if (!c.pass)
      out += ", expected " + c.expected + " (" + to_string(c.basis) + ": " + c.source + ")";
    out += "\n";
  }
  out += std::to_string(checks_.size() - failures()) + "/" + std::to_string(checks_.size()) + " checks passed\n";
  return out;
}

} // namespace mlat
