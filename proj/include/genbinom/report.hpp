#ifndef GENBINOM_REPORT_HPP
#define GENBINOM_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace genbinom {

/// Outcome of one identity check. A failed check carries both sides
/// verbatim; grid-based checks also carry the degree bounds they used.
struct IdentityReport {
  std::string identity_id;
  std::vector<std::pair<std::string, nlohmann::json>> parameters;
  bool holds = false;
  nlohmann::json lhs;
  nlohmann::json rhs;
  std::optional<std::vector<int>> degree_bounds;

  IdentityReport& param(std::string name, nlohmann::json value) {
    parameters.emplace_back(std::move(name), std::move(value));
    return *this;
  }

  /// Records the verdict; both sides are kept only when they differ.
  template <class L, class R>
  IdentityReport& compare(const L& left, const R& right) {
    holds = left == right;
    if (!holds) {
      lhs = left;
      rhs = right;
    }
    return *this;
  }
};

void to_json(nlohmann::json& j, const IdentityReport& r);

}  // namespace genbinom

#endif  // GENBINOM_REPORT_HPP
