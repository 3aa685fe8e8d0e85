#pragma once

#include <functional>
#include <string>
#include <vector>

namespace sphcav::detail {

/// Sign-scan then bracket refinement. `companion` must alternate sign between consecutive roots.
std::vector<double> scan_roots(const std::function<double(double)>& f, const std::function<double(double)>& companion,
                               int count, double x0, double step, const std::string& label);

}  // namespace sphcav::detail
