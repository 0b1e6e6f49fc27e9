#pragma once

#include <memory>
#include <span>
#include <string_view>

#include "mlat/lattice.hpp"
#include "mlat/report.hpp"

namespace mlat::verify {

/// Section names in run order: zorn, loopcore, paige, table1, chein,
/// autgroup, hasse, lattice.
std::span<const std::string_view> sections();

/// Holds the lattice analysis, built on first use by a section that needs it.
class Context {
public:
  explicit Context(unsigned threads = 1) : threads_(threads) {}
  const lattice::Analysis& analysis();

private:
  unsigned threads_;
  std::unique_ptr<lattice::Analysis> analysis_;
};

/// Throws std::invalid_argument for an unknown section.
Report run_section(std::string_view name, Context& ctx);
Report run_all(Context& ctx);

/// Table 1 as shipped in data/table1.csv.
std::string_view expected_table1_csv();

/// The order-5 loop used as a non-Moufang fixture.
std::string_view non_moufang_loop_text();

} // namespace mlat::verify
