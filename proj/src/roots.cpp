#include "roots.hpp"

#include <boost/math/tools/roots.hpp>

#include <cmath>
#include <cstdint>
#include <sstream>

#include "sphcav/types.hpp"

namespace sphcav::detail {

namespace {

std::string bracket_text(const std::string& label, double a, double b) {
    std::ostringstream os;
    os.precision(12);
    os << label << ": bracket [" << a << ", " << b << "]";
    return os.str();
}

int sgn(double v) { return (v > 0.0) - (v < 0.0); }

}  // namespace

std::vector<double> scan_roots(const std::function<double(double)>& f, const std::function<double(double)>& companion,
                               int count, double x0, double step, const std::string& label) {
    std::vector<double> roots;
    double a = x0;
    double fa = f(a);
    if (fa == 0.0) throw Error(ErrorCode::Convergence, bracket_text(label + " vanishes at scan start", a, a));
    const double limit = x0 + step * (count + 8) * 16;
    while (static_cast<int>(roots.size()) < count) {
        const double b = a + step;
        if (b > limit) throw Error(ErrorCode::Convergence, bracket_text(label + " scan exhausted", x0, b));
        const double fb = f(b);
        if (fb == 0.0) {
            roots.push_back(b);
            a = b + 1e-3 * step;
            fa = f(a);
            continue;
        }
        if (sgn(fa) != sgn(fb)) {
            std::uintmax_t iters = 200;
            auto tol = [](double lo, double hi) { return std::abs(hi - lo) < 1e-13 * std::max(1.0, std::abs(lo)); };
            const auto r = boost::math::tools::toms748_solve(f, a, b, fa, fb, tol, iters);
            if (iters >= 200 || !tol(r.first, r.second))
                throw Error(ErrorCode::Convergence, bracket_text(label + " refinement did not converge", a, b));
            roots.push_back(0.5 * (r.first + r.second));
        }
        a = b;
        fa = fb;
    }
    for (std::size_t k = 1; k < roots.size(); ++k) {
        if (sgn(companion(roots[k])) == sgn(companion(roots[k - 1])) || !(roots[k] - roots[k - 1] > step))
            throw Error(ErrorCode::Convergence,
                        bracket_text(label + " interlacing check failed, possible skipped root", roots[k - 1], roots[k]));
    }
    return roots;
}

}  // namespace sphcav::detail
