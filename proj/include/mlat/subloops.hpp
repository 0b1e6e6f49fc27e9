#pragma once

#include <vector>

#include "mlat/loop.hpp"

namespace mlat {

/// 0 means one thread per hardware thread.
unsigned resolve_threads(unsigned requested);

/// Every subloop of table, including {e} and the whole loop, sorted by
/// (size, member list).
///
/// Saturation: start from the cyclic subloops and keep replacing each newly
/// found H by closure(H u {g}) for every g outside H until nothing new
/// appears. Any subloop K > 1 is closure(H u {g}) for a maximal H < K, so the
/// fixpoint is the whole lattice. Each round is split across threads.
std::vector<ElementSet> enumerate_subloops(const CayleyTable& table, unsigned threads = 1);

} // namespace mlat
