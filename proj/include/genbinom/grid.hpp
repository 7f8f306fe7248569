#ifndef GENBINOM_GRID_HPP
#define GENBINOM_GRID_HPP

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "genbinom/rational.hpp"

namespace genbinom {

using GridFunction = std::function<Rational(std::span<const Rational>)>;

/// First point of the grid {0..d_0} x {0..d_1} x ... where p and q differ,
/// in lexicographic order. If p - q has degree at most d_v in variable v,
/// no mismatch means p = q as polynomials.
std::optional<std::vector<Rational>> find_grid_mismatch(const GridFunction& p, const GridFunction& q,
                                                        std::span<const int> degrees);

bool poly_equal_on_grid(const GridFunction& p, const GridFunction& q, std::span<const int> degrees);

}  // namespace genbinom

#endif  // GENBINOM_GRID_HPP
