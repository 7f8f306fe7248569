#include "genbinom/grid.hpp"

#include <stdexcept>

namespace genbinom {

std::optional<std::vector<Rational>> find_grid_mismatch(const GridFunction& p, const GridFunction& q,
                                                        std::span<const int> degrees) {
  for (int d : degrees)
    if (d < 0) throw std::invalid_argument("grid degree bound must be non-negative");
  std::vector<int> idx(degrees.size(), 0);
  std::vector<Rational> point(degrees.size());
  for (;;) {
    for (std::size_t v = 0; v < idx.size(); ++v) point[v] = Rational(idx[v]);
    if (p(point) != q(point)) return point;
    std::size_t v = idx.size();
    while (v > 0) {
      --v;
      if (idx[v] < degrees[v]) {
        ++idx[v];
        break;
      }
      idx[v] = 0;
      if (v == 0) return std::nullopt;
    }
    if (idx.empty()) return std::nullopt;
  }
}

bool poly_equal_on_grid(const GridFunction& p, const GridFunction& q, std::span<const int> degrees) {
  return !find_grid_mismatch(p, q, degrees).has_value();
}

}  // namespace genbinom
