#pragma once

#include <algorithm>
#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "sphcav/modes.hpp"
#include "sphcav/report.hpp"

namespace sphcav {

enum class Field { Tau = 0, Omega = 1, J = 2, M = 3 };

struct QuantumLabel {
    Tau tau{Tau::Electric};
    int omega_idx{1};
    int j{1};
    int m{0};

    auto operator<=>(const QuantumLabel&) const = default;

    [[nodiscard]] int get(Field f) const;
    void set(Field f, int value);
    void validate() const;
};

/// Discrete plane-wave label: momentum index and helicity.
struct HelicityLabel {
    int k_idx{0};
    int lambda{1};

    auto operator<=>(const HelicityLabel&) const = default;
};

/// Split of (tau, omega, j, m) into entangling fields alpha and spectator fields gamma.
struct PartitionSpec {
    unsigned alpha_mask{0};  ///< bit f set when Field f is in alpha

    [[nodiscard]] bool is_alpha(Field f) const { return (alpha_mask >> static_cast<unsigned>(f)) & 1U; }
    [[nodiscard]] unsigned gamma_mask() const { return ~alpha_mask & 0xFU; }
    [[nodiscard]] std::vector<Field> alpha_fields() const;
    [[nodiscard]] std::vector<Field> gamma_fields() const;
    [[nodiscard]] std::string name() const;

    bool operator==(const PartitionSpec&) const = default;
};

enum class BellType { PsiMinus, PsiPlus, PhiPlus, PhiMinus };

struct CatalogEntry {
    PartitionSpec partition;
    BellType bell{BellType::PsiMinus};
    std::string id;
    int sign{1};       ///< overall sign in front of the factored product
    int form{1}; ///< 1..4 in the order Psi^-Psi^-, Psi^+Psi^+, Psi^+Phi^+, Psi^+Phi^-
};

/// Exchange-symmetric two-photon amplitude map keyed by unordered label pairs.
template <class Label>
class BasicTwoPhotonState {
public:
    using Key = std::pair<Label, Label>;

    [[nodiscard]] cplx amplitude(const Label& a, const Label& b) const {
        const auto it = amps_.find(key(a, b));
        return it == amps_.end() ? cplx{} : it->second;
    }
    void set(const Label& a, const Label& b, cplx v) { amps_[key(a, b)] = v; }

    [[nodiscard]] const std::map<Key, cplx>& terms() const { return amps_; }
    [[nodiscard]] bool empty() const { return amps_.empty(); }
    [[nodiscard]] std::vector<Label> labels() const {
        std::vector<Label> out;
        for (const auto& [k, v] : amps_) {
            out.push_back(k.first);
            out.push_back(k.second);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }

    /// Sum over ordered pairs of |psi(L, L')|^2.
    [[nodiscard]] double norm2() const {
        double s = 0.0;
        for (const auto& [k, v] : amps_) s += (k.first == k.second ? 1.0 : 2.0) * std::norm(v);
        return s;
    }

    /// Ordered-pair inner product <this|other>.
    [[nodiscard]] cplx overlap(const BasicTwoPhotonState& other) const {
        cplx s{};
        for (const auto& [k, v] : amps_) s += (k.first == k.second ? 1.0 : 2.0) * std::conj(v) * other.amplitude(k.first, k.second);
        return s;
    }

    /// Max |psi(L,L') - psi(L',L)| seen in the ordered expansion before folding.
    double exchange_residual{0.0};

private:
    static Key key(const Label& a, const Label& b) { return b < a ? Key{b, a} : Key{a, b}; }

    std::map<Key, cplx> amps_;
};

using TwoPhotonState = BasicTwoPhotonState<QuantumLabel>;
using HelicityTwoPhotonState = BasicTwoPhotonState<HelicityLabel>;

std::vector<PartitionSpec> enumerate_partitions();
std::vector<CatalogEntry> enumerate_catalog();

std::string bell_name(BellType b);
BellType bell_from_name(const std::string& name);
PartitionSpec partition_from_name(const std::string& name);
int bell_sign(BellType b);

/// Operator-product construction, normalized, carrying the factored-form sign.
/// Only alpha fields are read from a1/a2 and only gamma fields from g1/g2.
TwoPhotonState build_state(const PartitionSpec& partition, BellType bell, const QuantumLabel& a1,
                           const QuantumLabel& a2, const QuantumLabel& g1, const QuantumLabel& g2);

/// Compares against sign x BellSpace(gamma) x BellEntangling(alpha) over all ordered label pairs.
CheckReport factorization_check(const TwoPhotonState& state, const PartitionSpec& partition, BellType bell,
                                const QuantumLabel& a1, const QuantumLabel& a2, const QuantumLabel& g1,
                                const QuantumLabel& g2, double tolerance = 1e-14);

/// Plane-wave instantiation: gamma = momentum index, alpha = helicity (+1 or -1).
HelicityTwoPhotonState build_helicity_state(BellType bell, int k1, int k2, int lambda1, int lambda2);

CheckReport helicity_factorization_check(const HelicityTwoPhotonState& state, BellType bell, int k1, int k2,
                                         int lambda1, int lambda2, double tolerance = 1e-14);

}  // namespace sphcav
