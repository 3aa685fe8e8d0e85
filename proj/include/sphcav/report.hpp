#pragma once

#include <string>

namespace sphcav {

/// Named verification result; pass iff max_residual < tolerance.
struct CheckReport {
    std::string name;
    double max_residual{0.0};
    double tolerance{0.0};
    bool pass{false};
    std::string details;

    static CheckReport make(std::string name, double residual, double tolerance, std::string details = {});
};

}  // namespace sphcav
