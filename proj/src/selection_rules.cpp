#include "sphcav/selection_rules.hpp"

#include <cmath>

namespace sphcav {

void TransitionQuery::validate() const {
    if (std::abs(parity_initial) != 1 || std::abs(parity_final) != 1)
        throw Error(ErrorCode::InvalidArgument, "parities must be +1 or -1");
    if (j < 1) throw Error(ErrorCode::Domain, "photon multipole order must be >= 1");
    if (!(ka > 0.0) || !std::isfinite(ka)) throw Error(ErrorCode::Domain, "ka must be finite and > 0");
}

int photon_parity(Tau tau, int j) {
    if (j < 1) throw Error(ErrorCode::Domain, "photon multipole order must be >= 1");
    const int e = j % 2 == 0 ? 1 : -1;
    return tau == Tau::Electric ? e : -e;
}

bool transition_allowed(const TransitionQuery& q) {
    q.validate();
    return q.parity_initial * q.parity_final == photon_parity(q.tau, q.j);
}

double scaling_ratio(RatioKind kind, int j, double ka) {
    if (j < 1) throw Error(ErrorCode::Domain, "scaling_ratio needs j >= 1");
    if (!(ka > 0.0) || !std::isfinite(ka)) throw Error(ErrorCode::Domain, "scaling_ratio needs finite ka > 0");
    const double k2 = ka * ka;
    const double J = j;
    switch (kind) {
        case RatioKind::MOverE: return k2 / ((J + 1) * (2 * J + 1));
        case RatioKind::EStep: return (J + 2) * k2 / ((J + 1) * (2 * J + 1) * (2 * J + 3));
        case RatioKind::MStep: return k2 / ((2 * J + 3) * (2 * J + 3));
    }
    throw Error(ErrorCode::InvalidArgument, "unknown ratio kind");
}

}  // namespace sphcav
