#include "tsys/enumerator.hpp"

#include <algorithm>
#include <unordered_map>

#include "tsys/recursions.hpp"

namespace tsys {

EnumerationResult enumerate_all(Carrier carrier, EnumerationOptions options) {
  std::unordered_map<TransferSystem::Rows, std::size_t, RowsHash> seen;
  std::vector<TransferSystem> found;

  TransferSystem start(carrier);
  seen.emplace(start.rows(), 0);
  found.push_back(start);
  std::vector<std::size_t> hits{0};

  std::vector<ElementPair> comparable;
  for (Element x = 0; x < carrier->size(); ++x)
    for (Element y = 0; y < carrier->size(); ++y)
      if (carrier->less(x, y)) comparable.emplace_back(x, y);

  std::vector<std::size_t> frontier{0};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      const TransferSystem current = found[idx];
      for (const auto& [x, y] : comparable) {
        if (current.related(x, y)) continue;
        TransferSystem grown = extend(current, x, y);
        auto [it, inserted] = seen.emplace(grown.rows(), found.size());
        if (inserted) {
          if (found.size() >= options.budget) throw BudgetExceeded(found.size());
          found.push_back(std::move(grown));
          hits.push_back(0);
          next.push_back(it->second);
        }
        ++hits[it->second];
      }
    }
    std::sort(next.begin(), next.end(),
              [&](std::size_t a, std::size_t b) { return found[a] < found[b]; });
    frontier = std::move(next);
  }

  std::vector<std::size_t> order(found.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return found[a] < found[b]; });

  EnumerationResult result;
  result.systems.reserve(found.size());
  result.discoveries.reserve(found.size());
  for (std::size_t i : order) {
    result.systems.push_back(std::move(found[i]));
    result.discoveries.push_back(hits[i]);
  }
  if (carrier->grid_n()) result.strata = stratify(result.systems);
  return result;
}

StrataMap stratify(const std::vector<TransferSystem>& systems) {
  StrataMap strata;
  for (const auto& t : systems) {
    const Stats s = stats(t);
    StrataCell cell{s.stationary, s.extendable, s.minimal_fibrant,
                    s.liftable,   s.saturated,  has_full_right_vertical(t)};
    ++strata[cell];
  }
  return strata;
}

bool count_catalan_check(int n) {
  if (n < 0 || n > 10) throw std::invalid_argument("count_catalan_check: n must be in [0, 10]");
  auto chain = std::make_shared<const Lattice>(make_chain(n));
  return BigCount(enumerate_all(chain).systems.size()) == catalan(n + 1);
}

}  // namespace tsys
