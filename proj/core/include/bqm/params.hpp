#pragma once

// Hecke parameter bundles for the reduced (A1) and nonreduced (C1v,C1)
// rank-one settings, with the duality star map and the reciprocal map.

#include "bqm/scalar.hpp"

#include <string>
#include <vector>

namespace bqm {

enum class RootType { A1, CC };

inline const char* to_string(RootType t) { return t == RootType::A1 ? "a1" : "cc"; }

template <class R>
struct HeckeParams {
    RootType type = RootType::A1;
    R nu = scalar_traits<R>::one();  // nu = q^{1/2}
    // A1 uses k1 as its single parameter k; k0,u1,u0 stay 1.
    R k1 = scalar_traits<R>::one();
    R k0 = scalar_traits<R>::one();
    R u1 = scalar_traits<R>::one();
    R u0 = scalar_traits<R>::one();

    static HeckeParams a1(const R& nu, const R& k) {
        HeckeParams p;
        p.type = RootType::A1;
        p.nu = nu;
        p.k1 = k;
        return p;
    }
    static HeckeParams cc(const R& nu, const R& k1, const R& k0, const R& u1, const R& u0) {
        HeckeParams p;
        p.type = RootType::CC;
        p.nu = nu;
        p.k1 = k1;
        p.k0 = k0;
        p.u1 = u1;
        p.u0 = u0;
        return p;
    }

    R q() const { return nu * nu; }
    const R& k() const { return k1; }

    // Duality anti-involution on parameters: (k1,k0,u1,u0) -> (k1,u1,k0,u0);
    // the identity for A1.
    HeckeParams star() const {
        HeckeParams p = *this;
        if (type == RootType::CC) std::swap(p.k0, p.u1);
        return p;
    }

    HeckeParams reciprocal() const {
        HeckeParams p = *this;
        p.k1 = scalar_traits<R>::inv(k1);
        p.k0 = scalar_traits<R>::inv(k0);
        p.u1 = scalar_traits<R>::inv(u1);
        p.u0 = scalar_traits<R>::inv(u0);
        return p;
    }

    bool operator==(const HeckeParams&) const = default;
};

// Rejects parameter sets where a denominator family of the cocycles or the
// q-difference operators vanishes on the tested shift lattice, or where a
// PBW/eigenvalue solve would collide (q-power resonances).
template <class R>
std::vector<std::string> genericity_failures(const HeckeParams<R>& p, int shift_range = 40) {
    std::vector<std::string> bad;
    auto nz = [](const R& v) { return !scalar_traits<R>::is_zero(v); };
    if (!nz(p.nu)) bad.push_back("nu = 0");
    if (!nz(p.k1) || !nz(p.k0) || !nz(p.u1) || !nz(p.u0)) bad.push_back("zero Hecke parameter");
    if (!bad.empty()) return bad;

    const Tolerance tight{1e-9, 1e-9};
    auto unit_like = [&](const R& v) {
        return scalar_traits<R>::eq(v, scalar_traits<R>::one(), tight) ||
               scalar_traits<R>::eq(v, -scalar_traits<R>::one(), tight);
    };

    // nu must not be a root of unity within the tested range (q != 1 included).
    {
        R w = p.nu;
        for (int j = 1; j <= 2 * shift_range; ++j) {
            if (unit_like(w)) {
                bad.push_back("nu^" + std::to_string(j) + " = +/-1");
                break;
            }
            w = w * p.nu;
        }
    }

    std::vector<std::pair<std::string, R>> prods;
    auto I = [](const R& v) { return scalar_traits<R>::inv(v); };
    if (p.type == RootType::A1) {
        prods = {{"k^2", p.k1 * p.k1}};
    } else {
        prods = {{"k1*u1", p.k1 * p.u1}, {"k1/u1", p.k1 * I(p.u1)}, {"k0*u0", p.k0 * p.u0},
                 {"k0/u0", p.k0 * I(p.u0)}, {"k1*k0", p.k1 * p.k0}, {"k1/k0", p.k1 * I(p.k0)},
                 {"u1*u0", p.u1 * p.u0}, {"u1/u0", p.u1 * I(p.u0)}, {"k1^2", p.k1 * p.k1},
                 {"k0^2", p.k0 * p.k0}, {"u1^2", p.u1 * p.u1}, {"u0^2", p.u0 * p.u0}};
    }
    for (const auto& [name, v] : prods) {
        R w = v * pow_int(p.nu, -static_cast<long>(shift_range));
        for (int j = -shift_range; j <= shift_range; ++j) {
            if (unit_like(w)) {
                bad.push_back(name + " * nu^" + std::to_string(j) + " = +/-1");
                break;
            }
            w = w * p.nu;
        }
    }
    return bad;
}

template <class R>
bool is_generic(const HeckeParams<R>& p, int shift_range = 40) {
    return genericity_failures(p, shift_range).empty();
}

}  // namespace bqm
