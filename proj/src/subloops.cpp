#include "mlat/subloops.hpp"

#include <algorithm>
#include <thread>
#include <unordered_set>

namespace mlat {

unsigned resolve_threads(unsigned requested) {
  if (requested != 0)
    return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

std::vector<ElementSet> enumerate_subloops(const CayleyTable& table, unsigned threads) {
  threads = resolve_threads(threads);
  std::unordered_set<ElementSet, ElementSetHash> known;
  std::vector<ElementSet> frontier;

  auto add = [&](ElementSet s) {
    if (known.insert(s).second)
      frontier.push_back(std::move(s));
  };
  add(closure(table, {}));
  for (Element x = 0; x < table.size(); ++x)
    add(closure(table, {x}));

  while (!frontier.empty()) {
    std::vector<ElementSet> current;
    current.swap(frontier);
    std::vector<std::vector<ElementSet>> found(std::min<std::size_t>(threads, current.size()));

    auto work = [&](std::size_t t) {
      std::unordered_set<ElementSet, ElementSetHash> local;
      for (std::size_t i = t; i < current.size(); i += found.size()) {
        const ElementSet& h = current[i];
        for (Element g = 0; g < table.size(); ++g) {
          if (h.contains(g))
            continue;
          ElementSet k = extend_closure(table, h, g);
          if (!known.contains(k) && local.insert(k).second)
            found[t].push_back(std::move(k));
        }
      }
    };
    if (found.size() <= 1) {
      work(0);
    } else {
      std::vector<std::jthread> pool;
      for (std::size_t t = 0; t < found.size(); ++t)
        pool.emplace_back(work, t);
    }
    // Merge in thread order so the run does not depend on scheduling.
    for (auto& part : found)
      for (auto& k : part)
        add(std::move(k));
  }

  std::vector<ElementSet> all(known.begin(), known.end());
  std::sort(all.begin(), all.end(), [](const ElementSet& a, const ElementSet& b) {
    if (a.size() != b.size())
      return a.size() < b.size();
    return lex_less(a, b);
  });
  return all;
}

} // namespace mlat
