#pragma once

// Affine intertwiners, the GL(H0)-valued cocycle of the doubled Weyl group,
// its closed forms and asymptotic limits, and the chi_+ functional layer.

#include "bqm/h0.hpp"

#include <optional>
#include <vector>

namespace bqm {

// A letter of the doubled group W x W x| Z2: a generator acting on the x-copy
// or the xi-copy, or the swap iota.
struct BLetter {
    enum Kind { Xcopy, XIcopy, Iota } kind = Xcopy;
    Letter g = Letter::s1;

    static BLetter x(Letter g) { return {Xcopy, g}; }
    static BLetter xi(Letter g) { return {XIcopy, g}; }
    static BLetter iota() { return {Iota, Letter::s1}; }
};

using BWord = std::vector<BLetter>;

// ---- intertwiners ----------------------------------------------------------

template <class R>
RatFunc2<R> intertwiner_d(const Rep<R>& rep, Letter g) {
    const HeckeParams<R>& p = rep.params;
    auto one = RatFunc2<R>::one();
    if (g == Letter::u) return one;  // length-zero diagram automorphism
    int i = (g == Letter::s1) ? 1 : 0;
    if (rep.spec.type == RootType::A1) {
        RatFunc2<R> zi = (i == 1) ? rep.arg_x1() : rep.arg_x0();
        return RatFunc2<R>(scalar_traits<R>::inv(p.k1)) - RatFunc2<R>(p.k1) * zi;
    }
    const R k = (i == 1) ? p.k1 : p.k0;
    const R u = (i == 1) ? p.u1 : p.u0;
    RatFunc2<R> w = (i == 1) ? rep.arg_x1_half() : rep.arg_x0_half();
    return RatFunc2<R>(scalar_traits<R>::inv(k)) * (one - RatFunc2<R>(k * u) * w) *
           (one + RatFunc2<R>(k * scalar_traits<R>::inv(u)) * w);
}

// d_w(x) = d_{j1} (s_{j1} d_{j2}) ... along a reduced word; independent of the
// chosen word.
template <class R>
RatFunc2<R> d_w(const Rep<R>& rep, const WeylWord& w) {
    RatFunc2<R> acc = RatFunc2<R>::one();
    Action prefix = Action::id();
    for (Letter g : w.letters) {
        acc *= intertwiner_d(rep, g).subst_x(prefix, rep.nu());
        prefix = Action::then(prefix, letter_action(rep.spec.type, g, rep.bs()));
    }
    return acc;
}

// S~_w = d_w(x) w, also equal to the product of the letter intertwiners.
template <class R>
CrossedOp<R> intertwiner_S(const Rep<R>& rep, const WeylWord& w) {
    CrossedOp<R> d = CrossedOp<R>::scalar(rep.nu(), d_w(rep, w));
    return d * CrossedOp<R>::substitution(rep.nu(), word_op_action(w, rep.bs()));
}

template <class R>
CrossedOp<R> intertwiner_S_product(const Rep<R>& rep, const WeylWord& w) {
    CrossedOp<R> acc = CrossedOp<R>::identity(rep.nu());
    for (Letter g : w.letters) {
        WeylWord one{w.type, {g}};
        acc = acc * intertwiner_S(rep, one);
    }
    return acc;
}

// Star image of the finite intertwiner S~_1, used for the Y-eigenbasis
// tau_w = eta_L(S~*_{w^{-1}}) T_e.
template <class R>
CrossedOp<R> star_intertwiner_S1(const Rep<R>& rep) {
    const HeckeParams<R>& p = rep.params;
    const R& nu = rep.nu();
    CrossedOp<R> I = CrossedOp<R>::identity(nu);
    CrossedOp<R> T1s = star_gen(rep, Gen::T1);
    CrossedOp<R> X2s = star_gen(rep, Gen::X) * star_gen(rep, Gen::X);  // (X^2)* = Y^{-2}*
    if (rep.spec.type == RootType::A1) {
        // ((1 - X^2)(T1 - k))* = (T1 - k)(1 - (X^2)*)
        CrossedOp<R> lhs = (T1s - p.k1 * I) * (I - X2s);
        return lhs + scalar_traits<R>::inv(p.k1) * I - p.k1 * X2s;
    }
    CrossedOp<R> Xs = star_gen(rep, Gen::X);
    CrossedOp<R> lhs = T1s * (I - X2s);
    return lhs - (p.k1 - scalar_traits<R>::inv(p.k1)) * I -
           (p.u1 - scalar_traits<R>::inv(p.u1)) * Xs;
}

// ---- cocycle ----------------------------------------------------------------

template <class R>
class CocycleCtx {
  public:
    explicit CocycleCtx(const HeckeParams<R>& params)
        : rep_{RepSpec{params.type, +1}, params}, eng_(rep_) {}

    const Rep<R>& rep() const { return rep_; }
    const PBWEngine<R>& engine() const { return eng_; }
    const HeckeParams<R>& params() const { return rep_.params; }
    RootType type() const { return rep_.spec.type; }
    const R& nu() const { return rep_.params.nu; }

    // Hecke eigenvalue entering chi_+ and the R-matrix normalizations.
    R chi1() const { return rep_.params.k1; }

    H0Mat<R> eta_L_of(const CrossedOp<R>& A) const { return eta_L(eng_, A); }
    H0Mat<R> eta_R_of(const CrossedOp<R>& A) const { return eta_R(eng_, A); }

    // Baxterized left factors R^L_i(z) = c_i(z)^{-1}(eta_L(T_i) - b_i(z)).
    H0Mat<R> RL(int i, const RatFunc2<R>& z_or_half) const {
        auto [c, b] = cb(i, z_or_half, rep_.params);
        return (RatFunc2<R>::one() / c) * (etaL_T(i) - H0Mat<R>::scalar(b));
    }
    // Right factors at starred parameters: R^R_i(z) = c*_i(z)^{-1}(eta_R(T_i*) - b*_i(z)).
    H0Mat<R> RR(int i, const RatFunc2<R>& z_or_half) const {
        auto [c, b] = cb(i, z_or_half, rep_.params.star());
        return (RatFunc2<R>::one() / c) * (etaR_Tstar(i) - H0Mat<R>::scalar(b));
    }

    // Generator values of the cocycle.
    H0Mat<R> generator_value(const BLetter& l) const {
        const R q = rep_.params.q();
        const R& nu = rep_.params.nu;
        switch (l.kind) {
            case BLetter::Iota:
                return H0Mat<R>::identity();
            case BLetter::Xcopy:
                switch (l.g) {
                    case Letter::s1:
                        return RL(1, type() == RootType::A1 ? RatFunc2<R>::x(2)
                                                            : RatFunc2<R>::x(1));
                    case Letter::s0:
                        return RL(0, type() == RootType::A1
                                         ? RatFunc2<R>(q) * RatFunc2<R>::x(-2)
                                         : RatFunc2<R>(nu) * RatFunc2<R>::x(-1));
                    case Letter::u:
                        return eta_L_of(rho_U(rep_));
                }
                break;
            case BLetter::XIcopy:
                switch (l.g) {
                    case Letter::s1:
                        return RR(1, type() == RootType::A1 ? RatFunc2<R>::xi(-2)
                                                            : RatFunc2<R>::xi(-1));
                    case Letter::s0:
                        return RR(0, type() == RootType::A1
                                         ? RatFunc2<R>(q) * RatFunc2<R>::xi(2)
                                         : RatFunc2<R>(nu) * RatFunc2<R>::xi(1));
                    case Letter::u:
                        return eta_R_of(star_gen(rep_, Gen::U));
                }
                break;
        }
        throw weyl_error("bad cocycle letter");
    }

    // Action of a doubled-group letter on matrix entries: the xi-copy acts
    // through the translation-inverting twist, iota swaps the variables.
    H0Mat<R> act(const BLetter& l, const H0Mat<R>& m) const {
        switch (l.kind) {
            case BLetter::Iota:
                return m.subst_iota();
            case BLetter::Xcopy:
                return m.subst_x(letter_action(type(), l.g, +1), nu());
            case BLetter::XIcopy:
                return m.subst_xi(letter_action(type(), l.g, +1).diamond(), nu());
        }
        throw weyl_error("bad cocycle letter");
    }

    // C_{w w'} = C_w . w(C_{w'}) along the word, left letter outermost.
    H0Mat<R> cocycle(const BWord& word) const {
        H0Mat<R> acc = H0Mat<R>::identity();
        for (auto it = word.rbegin(); it != word.rend(); ++it)
            acc = generator_value(*it) * act(*it, acc);
        return acc;
    }

    // Words for the translation cocycles C_{l,m}.
    BWord translation_bword(int l, int m) const {
        BWord w;
        WeylWord wx = translation_word(type(), l);
        for (Letter g : wx.letters) w.push_back(BLetter::x(g));
        WeylWord wxi = translation_word(type(), m);
        for (Letter g : wxi.letters) w.push_back(BLetter::xi(g));
        return w;
    }
    H0Mat<R> C(int l, int m) const { return cocycle(translation_bword(l, m)); }

    // Closed forms of the first translation cocycles.
    enum class ClosedKind { C10, C01, C20, C02 };
    H0Mat<R> closed(ClosedKind kind) const {
        const R q = rep_.params.q();
        const R& nu = rep_.params.nu;
        auto rf = [](const R& c) { return RatFunc2<R>(c); };
        if (type() == RootType::A1) {
            switch (kind) {
                case ClosedKind::C10:
                    return RL(0, rf(q) * RatFunc2<R>::x(-2)) * eta_L_of(rho_U(rep_));
                case ClosedKind::C01:
                    return RR(0, rf(q) * RatFunc2<R>::xi(2)) * eta_R_of(star_gen(rep_, Gen::U));
                case ClosedKind::C20:
                    return RL(0, rf(q) * RatFunc2<R>::x(-2)) * RL(1, rf(q * q) * RatFunc2<R>::x(-2));
                case ClosedKind::C02:
                    return RR(0, rf(q) * RatFunc2<R>::xi(2)) * RR(1, rf(q * q) * RatFunc2<R>::xi(2));
            }
        } else {
            switch (kind) {
                case ClosedKind::C10:
                    return RL(0, rf(nu) * RatFunc2<R>::x(-1)) * RL(1, rf(q) * RatFunc2<R>::x(-1));
                case ClosedKind::C01:
                    return RR(0, rf(nu) * RatFunc2<R>::xi(1)) * RR(1, rf(q) * RatFunc2<R>::xi(1));
                case ClosedKind::C20:
                case ClosedKind::C02:
                    throw std::invalid_argument("closed C20/C02 are A1-only");
            }
        }
        throw std::invalid_argument("bad closed-form kind");
    }

  private:
    std::pair<RatFunc2<R>, RatFunc2<R>> cb(int i, const RatFunc2<R>& z, const HeckeParams<R>& p) const {
        if (type() == RootType::A1) {
            RatFunc2<R> c = c_a1(z, p.k1);
            return {c, RatFunc2<R>(p.k1) - c};
        }
        const R k = (i == 1) ? p.k1 : p.k0;
        const R u = (i == 1) ? p.u1 : p.u0;
        RatFunc2<R> c = c_cc(z, k, u);  // z is the half-power argument here
        return {c, RatFunc2<R>(k) - c};
    }

    const H0Mat<R>& etaL_T(int i) const {
        auto& slot = etaL_T_[i];
        if (!slot) slot = eta_L(eng_, rho_T(rep_, i));
        return *slot;
    }
    const H0Mat<R>& etaR_Tstar(int i) const {
        auto& slot = etaR_Ts_[i];
        if (!slot) slot = eta_R(eng_, star_gen(rep_, i == 1 ? Gen::T1 : Gen::T0));
        return *slot;
    }

    Rep<R> rep_;
    PBWEngine<R> eng_;
    mutable std::array<std::optional<H0Mat<R>>, 2> etaL_T_{};
    mutable std::array<std::optional<H0Mat<R>>, 2> etaR_Ts_{};
};

// ---- exact asymptotic limits ------------------------------------------------

struct limit_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Limit of f as x -> infinity, as a rational function of xi.
template <class R>
RatFunc2<R> limit_x_inf(const RatFunc2<R>& f) {
    if (f.is_zero()) return f;
    int dn = f.num().max_ex(), dd = f.den().max_ex();
    if (dn > dd) throw limit_error("limit x->inf does not exist");
    if (dn < dd) return RatFunc2<R>();
    Laurent2<R> ln, ld;
    for (const auto& [e, c] : f.num().terms())
        if (e.ex == dn) ln.add_term(Expo2{0, e.exi}, c);
    for (const auto& [e, c] : f.den().terms())
        if (e.ex == dd) ld.add_term(Expo2{0, e.exi}, c);
    return RatFunc2<R>(ln, ld);
}

// Limit of f as xi -> 0, as a rational function of x.
template <class R>
RatFunc2<R> limit_xi_zero(const RatFunc2<R>& f) {
    if (f.is_zero()) return f;
    int dn = f.num().min_exi(), dd = f.den().min_exi();
    if (dn < dd) throw limit_error("limit xi->0 does not exist");
    if (dn > dd) return RatFunc2<R>();
    Laurent2<R> ln, ld;
    for (const auto& [e, c] : f.num().terms())
        if (e.exi == dn) ln.add_term(Expo2{e.ex, 0}, c);
    for (const auto& [e, c] : f.den().terms())
        if (e.exi == dd) ld.add_term(Expo2{e.ex, 0}, c);
    return RatFunc2<R>(ln, ld);
}

template <class R>
H0Mat<R> limit_x_inf(const H0Mat<R>& m) {
    H0Mat<R> r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = limit_x_inf(m.m[i][j]);
    return r;
}
template <class R>
H0Mat<R> limit_xi_zero(const H0Mat<R>& m) {
    H0Mat<R> r;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) r.m[i][j] = limit_xi_zero(m.m[i][j]);
    return r;
}

// ---- Yang-Baxter (reduced type) ----------------------------------------------
//
// Baxterized generators R_i(z) = c(z;k)^{-1}(rho(T_i) - b(z;k)) composed as
// crossed operators; the residual of the braid-type relation is reported.
template <class R>
CrossedOp<R> baxterized(const Rep<R>& rep, int i, const R& z) {
    RatFunc2<R> zf{z};
    RatFunc2<R> c = c_a1(zf, rep.params.k1), b = b_a1(zf, rep.params.k1);
    CrossedOp<R> t = rho_T(rep, i);
    return (RatFunc2<R>::one() / c) * (t - CrossedOp<R>::scalar(rep.nu(), b));
}

template <class R>
CrossedOp<R> yang_baxter_residual(const Rep<R>& rep, const R& z, const R& zp) {
    CrossedOp<R> lhs = baxterized(rep, 0, z) * baxterized(rep, 1, z * zp) * baxterized(rep, 0, zp);
    CrossedOp<R> rhs = baxterized(rep, 1, zp) * baxterized(rep, 0, z * zp) * baxterized(rep, 1, z);
    return lhs - rhs;
}

}  // namespace bqm
