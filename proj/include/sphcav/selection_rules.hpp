#pragma once

#include "sphcav/modes.hpp"

namespace sphcav {

enum class RatioKind { MOverE, EStep, MStep };

/// Above this ka the leading-order ratios are outside their range of validity.
inline constexpr double kSmallKaLimit = 0.1;

struct TransitionQuery {
    int parity_initial{1};
    int parity_final{1};
    Tau tau{Tau::Electric};
    int j{1};
    double ka{1e-3};

    void validate() const;
};

/// Electric: (-1)^j; Magnetic: (-1)^(j+1).
int photon_parity(Tau tau, int j);

bool transition_allowed(const TransitionQuery& q);

/// Leading-order absorption probability ratios.
double scaling_ratio(RatioKind kind, int j, double ka);

inline bool ka_outside_validity(double ka) { return ka > kSmallKaLimit; }

}  // namespace sphcav
