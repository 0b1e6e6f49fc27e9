#pragma once

#include <span>
#include <string_view>

#include "mlat/loop.hpp"

namespace mlat::catalog {

/// The small groups shipped as Cayley-table fixtures: C2, C3, C4, E4, C2xC4,
/// S3, E8, A4.
std::span<const IsoType> groups();

/// Fixture text for a catalog group, in the parse_cayley format.
std::string_view fixture_text(IsoType group);

/// Reference table for a catalog type: the fixture groups, plus the Chein
/// doubles M(S3) and M(A4). Throws std::invalid_argument for any other type.
/// Tables are built once and cached.
const CayleyTable& table(IsoType type);

bool has_table(IsoType type);

} // namespace mlat::catalog
