#include "mlat/catalog.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <stdexcept>

#include "mlat/chein.hpp"

namespace mlat::catalog {

// Generated at configure time from data/groups/*.tbl.
std::string_view embedded_fixture(std::string_view name);

namespace {

constexpr std::array kGroups{IsoType::C2, IsoType::C3, IsoType::C4, IsoType::E4,
                             IsoType::C2xC4, IsoType::S3, IsoType::E8, IsoType::A4};

} // namespace

std::span<const IsoType> groups() { return kGroups; }

std::string_view fixture_text(IsoType group) {
  if (std::find(kGroups.begin(), kGroups.end(), group) == kGroups.end())
    throw std::invalid_argument("no fixture for type " + to_string(group));
  return embedded_fixture(to_string(group));
}

bool has_table(IsoType type) {
  return type == IsoType::MS3 || type == IsoType::MA4 ||
         std::find(kGroups.begin(), kGroups.end(), type) != kGroups.end();
}

const CayleyTable& table(IsoType type) {
  static std::mutex mu;
  static std::map<IsoType, CayleyTable> cache;
  std::lock_guard lock(mu);
  if (auto it = cache.find(type); it != cache.end())
    return it->second;
  if (!has_table(type))
    throw std::invalid_argument("no reference table for type " + to_string(type));
  CayleyTable t;
  if (type == IsoType::MS3)
    t = chein::chein_double(parse_cayley(embedded_fixture("S3")));
  else if (type == IsoType::MA4)
    t = chein::chein_double(parse_cayley(embedded_fixture("A4")));
  else
    t = parse_cayley(embedded_fixture(to_string(type)));
  return cache.emplace(type, std::move(t)).first->second;
}

} // namespace mlat::catalog
