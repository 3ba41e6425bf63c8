#include "schurlab/report.hpp"

#include <algorithm>
#include <cmath>

namespace schurlab {

bool BoundReport::has_flag(std::string_view f) const {
  return std::find(flags.begin(), flags.end(), f) != flags.end();
}

bool BoundReport::asserted() const {
  return !has_flag(flags::near_boundary) && !has_flag(flags::ill_conditioned) &&
         !has_flag(flags::observational);
}

bool BoundReport::violates(double tol) const {
  if (!asserted()) return false;
  if (std::isnan(slack)) return true;
  return slack < -tol * std::max(1.0, std::abs(rhs));
}

BoundReport make_report(std::string_view tag, const Point& z, std::vector<int> alpha, double lhs,
                        double rhs, std::vector<std::string> flags) {
  BoundReport r;
  r.theorem_tag = std::string(tag);
  r.z = z;
  r.alpha = std::move(alpha);
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  r.ratio = rhs == 0.0 ? 0.0 : lhs / rhs;
  r.flags = std::move(flags);
  return r;
}

}  // namespace schurlab
