#include "mlat/catalog.hpp"
#include "mlat/loop.hpp"

namespace mlat {

namespace {

IsoType classify_group(const Fingerprint& fp) {
  const auto& p = fp.profile;
  auto count = [&](int order) -> std::size_t {
    auto it = p.find(order);
    return it == p.end() ? 0 : it->second;
  };
  switch (fp.order) {
  case 1: return IsoType::Trivial;
  case 2: return IsoType::C2;
  case 3: return IsoType::C3;
  case 4: return count(4) ? IsoType::C4 : IsoType::E4;
  case 6: return fp.commutative ? IsoType::C6 : IsoType::S3;
  case 8:
    if (fp.commutative && count(2) == 7)
      return IsoType::E8;
    if (fp.commutative && count(2) == 3 && count(4) == 4)
      return IsoType::C2xC4;
    return IsoType::Other;
  case 12:
    if (!fp.commutative && count(2) == 3 && count(3) == 8)
      return IsoType::A4;
    return IsoType::Other;
  default: return IsoType::Other;
  }
}

bool matches_reference(const CayleyTable& sub, const Fingerprint& fp, IsoType ref) {
  const CayleyTable& t = catalog::table(ref);
  return fp == fingerprint(t) && are_isomorphic(sub, t).has_value();
}

} // namespace

IsoType classify(const CayleyTable& table, const ElementSet& subloop) {
  const Fingerprint fp = fingerprint(table, subloop);
  if (fp.associative)
    return classify_group(fp);
  if (fp.order == 12 || fp.order == 24) {
    const CayleyTable sub = induced(table, subloop);
    const IsoType ref = fp.order == 12 ? IsoType::MS3 : IsoType::MA4;
    return matches_reference(sub, fp, ref) ? ref : IsoType::Other;
  }
  if (fp.order == 120 && !fp.commutative && fp.profile == OrderProfile{{1, 1}, {2, 63}, {3, 56}})
    return IsoType::Ambient;
  return IsoType::Other;
}

IsoType classify(const CayleyTable& table) { return classify(table, full_set(table)); }

} // namespace mlat
