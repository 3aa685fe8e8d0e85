#include "sphcav/entangle.hpp"

#include <array>
#include <climits>
#include <cmath>
#include <sstream>

namespace sphcav {

namespace {

constexpr std::array<const char*, 4> kFieldNames{"tau", "omega", "j", "m"};
constexpr std::array<BellType, 4> kBells{BellType::PsiMinus, BellType::PsiPlus, BellType::PhiPlus, BellType::PhiMinus};

using Projection = std::array<int, 4>;
constexpr int kUnset = INT_MIN;

Projection project(const QuantumLabel& l, unsigned mask) {
    Projection p{kUnset, kUnset, kUnset, kUnset};
    for (int f = 0; f < 4; ++f)
        if ((mask >> f) & 1U) p[static_cast<std::size_t>(f)] = l.get(static_cast<Field>(f));
    return p;
}

QuantumLabel compose(const Projection& g, const Projection& a) {
    QuantumLabel l;
    for (int f = 0; f < 4; ++f) {
        const int v = g[static_cast<std::size_t>(f)] != kUnset ? g[static_cast<std::size_t>(f)] : a[static_cast<std::size_t>(f)];
        l.set(static_cast<Field>(f), v);
    }
    return l;
}

/// a-dagger pair (g, a)(gp, ap) with coefficient c.
template <class G, class A>
struct OperatorTerm {
    G g;
    A a;
    G gp;
    A ap;
    double c;
};

template <class G, class A>
std::vector<OperatorTerm<G, A>> operator_terms(BellType bell, const G& g1, const G& g2, const A& a1, const A& a2) {
    switch (bell) {
        case BellType::PsiMinus: return {{g1, a1, g2, a2, 1.0}, {g1, a2, g2, a1, -1.0}};
        case BellType::PsiPlus: return {{g1, a1, g2, a2, 1.0}, {g1, a2, g2, a1, 1.0}};
        case BellType::PhiPlus: return {{g1, a1, g2, a1, 1.0}, {g1, a2, g2, a2, 1.0}};
        case BellType::PhiMinus: return {{g1, a1, g2, a1, 1.0}, {g1, a2, g2, a2, -1.0}};
    }
    return {};
}

template <class Label, class G, class A, class Compose>
BasicTwoPhotonState<Label> construct(BellType bell, const G& g1, const G& g2, const A& a1, const A& a2,
                                     Compose compose_fn) {
    std::map<std::pair<Label, Label>, double> ordered;
    for (const auto& t : operator_terms(bell, g1, g2, a1, a2)) {
        const Label l1 = compose_fn(t.g, t.a);
        const Label l2 = compose_fn(t.gp, t.ap);
        ordered[{l1, l2}] += t.c;
        ordered[{l2, l1}] += t.c;
    }
    BasicTwoPhotonState<Label> state;
    double norm2 = 0.0;
    for (const auto& [k, v] : ordered) {
        const auto it = ordered.find({k.second, k.first});
        const double swapped = it == ordered.end() ? 0.0 : it->second;
        state.exchange_residual = std::max(state.exchange_residual, std::abs(v - swapped));
        norm2 += v * v;
    }
    if (norm2 == 0.0)
        throw Error(ErrorCode::Degenerate, "state symmetrizes to zero (degenerate labels for " + bell_name(bell) + ")");
    const double scale = bell_sign(bell) / std::sqrt(norm2);
    for (const auto& [k, v] : ordered)
        if (v != 0.0 && !(k.second < k.first)) state.set(k.first, k.second, scale * v);
    return state;
}

template <class T>
double bell_factor(bool antisym_or_minus, bool phi, const T& x, const T& xp, const T& v1, const T& v2) {
    const double s = 1.0 / std::sqrt(2.0);
    const double pm = antisym_or_minus ? -1.0 : 1.0;
    if (phi) return s * ((x == v1 && xp == v1 ? 1.0 : 0.0) + pm * (x == v2 && xp == v2 ? 1.0 : 0.0));
    return s * ((x == v1 && xp == v2 ? 1.0 : 0.0) + pm * (x == v2 && xp == v1 ? 1.0 : 0.0));
}

template <class Label, class G, class A, class Split>
CheckReport factor_check(const BasicTwoPhotonState<Label>& st, BellType bell, const G& g1, const G& g2, const A& a1,
                         const A& a2, std::vector<Label> universe, Split split, double tol, const std::string& name) {
    for (const auto& l : st.labels()) universe.push_back(l);
    std::sort(universe.begin(), universe.end());
    universe.erase(std::unique(universe.begin(), universe.end()), universe.end());

    const bool space_minus = bell == BellType::PsiMinus;
    const bool alpha_phi = bell == BellType::PhiPlus || bell == BellType::PhiMinus;
    const bool alpha_minus = bell == BellType::PsiMinus || bell == BellType::PhiMinus;
    std::map<std::pair<Label, Label>, double> ref;
    double norm2 = 0.0;
    for (const auto& l : universe)
        for (const auto& lp : universe) {
            const auto [g, a] = split(l);
            const auto [gp, ap] = split(lp);
            const double v = bell_sign(bell) * bell_factor(space_minus, false, g, gp, g1, g2) *
                             bell_factor(alpha_minus, alpha_phi, a, ap, a1, a2);
            ref[{l, lp}] = v;
            norm2 += v * v;
        }
    double residual = st.exchange_residual;
    const double scale = norm2 > 0.0 ? 1.0 / std::sqrt(norm2) : 0.0;
    for (const auto& [k, v] : ref) {
        residual = std::max(residual, std::abs(st.amplitude(k.first, k.second) - scale * v));
        residual = std::max(residual, std::abs(st.amplitude(k.first, k.second) - st.amplitude(k.second, k.first)));
    }
    std::ostringstream os;
    os << bell_name(bell) << " labels=" << universe.size() << " pairs=" << ref.size()
       << " exchange=" << st.exchange_residual;
    return CheckReport::make(name, residual, tol, os.str());
}

}  // namespace

int QuantumLabel::get(Field f) const {
    switch (f) {
        case Field::Tau: return tau == Tau::Electric ? 0 : 1;
        case Field::Omega: return omega_idx;
        case Field::J: return j;
        case Field::M: return m;
    }
    return 0;
}

void QuantumLabel::set(Field f, int value) {
    switch (f) {
        case Field::Tau: tau = value == 0 ? Tau::Electric : Tau::Magnetic; break;
        case Field::Omega: omega_idx = value; break;
        case Field::J: j = value; break;
        case Field::M: m = value; break;
    }
}

void QuantumLabel::validate() const {
    if (j < 1) throw Error(ErrorCode::InvalidArgument, "label j must be >= 1");
    if (std::abs(m) > j) throw Error(ErrorCode::InvalidArgument, "label needs |m| <= j");
    if (omega_idx < 1) throw Error(ErrorCode::InvalidArgument, "label omega index must be >= 1");
}

std::vector<Field> PartitionSpec::alpha_fields() const {
    std::vector<Field> out;
    for (int f = 0; f < 4; ++f)
        if (is_alpha(static_cast<Field>(f))) out.push_back(static_cast<Field>(f));
    return out;
}

std::vector<Field> PartitionSpec::gamma_fields() const {
    std::vector<Field> out;
    for (int f = 0; f < 4; ++f)
        if (!is_alpha(static_cast<Field>(f))) out.push_back(static_cast<Field>(f));
    return out;
}

std::string PartitionSpec::name() const {
    std::string s;
    for (Field f : alpha_fields()) {
        if (!s.empty()) s += '+';
        s += kFieldNames[static_cast<std::size_t>(f)];
    }
    return s;
}

std::vector<PartitionSpec> enumerate_partitions() {
    std::vector<PartitionSpec> out;
    for (unsigned f = 0; f < 4; ++f) out.push_back({1U << f});
    for (unsigned f = 0; f < 4; ++f)
        for (unsigned g = f + 1; g < 4; ++g) out.push_back({(1U << f) | (1U << g)});
    return out;
}

std::string bell_name(BellType b) {
    switch (b) {
        case BellType::PsiMinus: return "psi-minus";
        case BellType::PsiPlus: return "psi-plus";
        case BellType::PhiPlus: return "phi-plus";
        case BellType::PhiMinus: return "phi-minus";
    }
    return "?";
}

BellType bell_from_name(const std::string& name) {
    for (BellType b : kBells)
        if (bell_name(b) == name) return b;
    throw Error(ErrorCode::InvalidArgument, "unknown Bell type '" + name + "'");
}

PartitionSpec partition_from_name(const std::string& name) {
    for (const auto& p : enumerate_partitions())
        if (p.name() == name) return p;
    throw Error(ErrorCode::InvalidArgument, "unknown partition '" + name + "'");
}

int bell_sign(BellType b) { return (b == BellType::PsiPlus || b == BellType::PhiPlus) ? -1 : 1; }

std::vector<CatalogEntry> enumerate_catalog() {
    std::vector<CatalogEntry> out;
    for (const auto& p : enumerate_partitions())
        for (std::size_t k = 0; k < kBells.size(); ++k)
            out.push_back({p, kBells[k], p.name() + "/" + bell_name(kBells[k]), bell_sign(kBells[k]),
                           static_cast<int>(k) + 1});
    return out;
}

TwoPhotonState build_state(const PartitionSpec& partition, BellType bell, const QuantumLabel& a1,
                           const QuantumLabel& a2, const QuantumLabel& g1, const QuantumLabel& g2) {
    if (partition.alpha_mask == 0 || partition.alpha_mask >= 0xFU)
        throw Error(ErrorCode::InvalidArgument, "alpha fields must be a nonempty proper subset");
    const Projection pa1 = project(a1, partition.alpha_mask);
    const Projection pa2 = project(a2, partition.alpha_mask);
    const Projection pg1 = project(g1, partition.gamma_mask());
    const Projection pg2 = project(g2, partition.gamma_mask());
    if ((bell == BellType::PsiMinus || bell == BellType::PsiPlus) && pa1 == pa2)
        throw Error(ErrorCode::InvalidArgument, "entangling values a1 and a2 must differ for " + bell_name(bell));
    for (const auto& g : {pg1, pg2})
        for (const auto& a : {pa1, pa2}) compose(g, a).validate();
    return construct<QuantumLabel>(bell, pg1, pg2, pa1, pa2, compose);
}

CheckReport factorization_check(const TwoPhotonState& state, const PartitionSpec& partition, BellType bell,
                                const QuantumLabel& a1, const QuantumLabel& a2, const QuantumLabel& g1,
                                const QuantumLabel& g2, double tolerance) {
    const Projection pa1 = project(a1, partition.alpha_mask);
    const Projection pa2 = project(a2, partition.alpha_mask);
    const Projection pg1 = project(g1, partition.gamma_mask());
    const Projection pg2 = project(g2, partition.gamma_mask());
    std::vector<QuantumLabel> universe;
    for (const auto& g : {pg1, pg2})
        for (const auto& a : {pa1, pa2}) universe.push_back(compose(g, a));
    auto split = [&](const QuantumLabel& l) {
        return std::pair{project(l, partition.gamma_mask()), project(l, partition.alpha_mask)};
    };
    return factor_check(state, bell, pg1, pg2, pa1, pa2, universe, split, tolerance,
                        "entangle.factorization." + partition.name() + "/" + bell_name(bell));
}

HelicityTwoPhotonState build_helicity_state(BellType bell, int k1, int k2, int lambda1, int lambda2) {
    for (int l : {lambda1, lambda2})
        if (l != 1 && l != -1) throw Error(ErrorCode::Domain, "helicity labels must be +1 or -1 (transverse photons)");
    if ((bell == BellType::PsiMinus || bell == BellType::PsiPlus) && lambda1 == lambda2)
        throw Error(ErrorCode::InvalidArgument, "entangling helicities must differ for " + bell_name(bell));
    return construct<HelicityLabel>(bell, k1, k2, lambda1, lambda2,
                                    [](int k, int lambda) { return HelicityLabel{k, lambda}; });
}

CheckReport helicity_factorization_check(const HelicityTwoPhotonState& state, BellType bell, int k1, int k2,
                                         int lambda1, int lambda2, double tolerance) {
    std::vector<HelicityLabel> universe;
    for (int k : {k1, k2})
        for (int l : {lambda1, lambda2}) universe.push_back({k, l});
    auto split = [](const HelicityLabel& l) { return std::pair{l.k_idx, l.lambda}; };
    return factor_check(state, bell, k1, k2, lambda1, lambda2, universe, split, tolerance,
                        "entangle.helicity." + bell_name(bell));
}

}  // namespace sphcav
