#pragma once

// The crossed-product algebra C(x) x| W of rational-function coefficients and
// affine substitutions, holding the basic representations of the rank-one
// affine Hecke algebras and both DAHAs.
//
// A term f * a stands for "form f, then substitute through a"; the product is
// taken in written order, (f*a)(g*b) = (f * (g o m_a)) * (a then b), which is
// the calculus the cocycle and restriction formulas are written in. Applying
// a word to a polynomial feeds it through the factors left to right.

#include "bqm/params.hpp"
#include "bqm/ratfunc.hpp"
#include "bqm/weyl.hpp"

#include <map>
#include <vector>

namespace bqm {

// Which variable a representation acts on, and with which base: the
// spectral-variable realizations use base 1/q.
struct RepSpec {
    RootType type = RootType::A1;
    int base_sign = 1;  // +1: base q, -1: base 1/q
};

template <class R>
class CrossedOp {
  public:
    using Terms = std::map<Action, RatFunc2<R>>;

    CrossedOp() = default;
    explicit CrossedOp(const R& nu) : nu_(nu) {}
    CrossedOp(const R& nu, Terms terms) : nu_(nu), terms_(std::move(terms)) { prune(); }

    static CrossedOp identity(const R& nu) {
        CrossedOp d(nu);
        d.terms_[Action::id()] = RatFunc2<R>::one();
        return d;
    }
    static CrossedOp scalar(const R& nu, const RatFunc2<R>& f) {
        CrossedOp d(nu);
        if (!f.is_zero()) d.terms_[Action::id()] = f;
        return d;
    }
    // Multiplication by x^{e}.
    static CrossedOp x_mult(const R& nu, int e) {
        return scalar(nu, RatFunc2<R>::x(e));
    }
    static CrossedOp substitution(const R& nu, const Action& a) {
        CrossedOp d(nu);
        d.terms_[a] = RatFunc2<R>::one();
        return d;
    }

    const R& nu() const { return nu_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Action& a, const RatFunc2<R>& f) {
        if (f.is_zero()) return;
        auto [it, fresh] = terms_.emplace(a, f);
        if (!fresh) {
            it->second += f;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    CrossedOp operator-() const {
        CrossedOp r(nu_);
        for (const auto& [a, f] : terms_) r.terms_[a] = -f;
        return r;
    }
    friend CrossedOp operator+(const CrossedOp& a, const CrossedOp& b) {
        CrossedOp r = a;
        for (const auto& [ac, f] : b.terms_) r.add_term(ac, f);
        return r;
    }
    friend CrossedOp operator-(const CrossedOp& a, const CrossedOp& b) { return a + (-b); }
    CrossedOp& operator+=(const CrossedOp& o) { return *this = *this + o; }
    CrossedOp& operator-=(const CrossedOp& o) { return *this = *this - o; }

    friend CrossedOp operator*(const RatFunc2<R>& c, const CrossedOp& d) {
        CrossedOp r(d.nu_);
        for (const auto& [a, f] : d.terms_) r.add_term(a, c * f);
        return r;
    }
    friend CrossedOp operator*(const R& c, const CrossedOp& d) {
        return RatFunc2<R>(c) * d;
    }

    // Written-order product: the left factor acts first.
    friend CrossedOp operator*(const CrossedOp& A, const CrossedOp& B) {
        CrossedOp r(A.nu_);
        for (const auto& [a, f] : A.terms_)
            for (const auto& [b, g] : B.terms_)
                r.add_term(Action::then(a, b), f * g.subst_x(a, A.nu_));
        return r;
    }
    CrossedOp& operator*=(const CrossedOp& o) { return *this = *this * o; }

    // Application to a Laurent polynomial: sum of f_a * (p o m_a).
    RatFunc2<R> apply(const Laurent2<R>& p) const {
        RatFunc2<R> acc;
        for (const auto& [a, f] : terms_) acc += f * RatFunc2<R>(p.subst_x(a, nu_));
        return acc;
    }

    // Equality on the monomial slice x^j, |j| <= J; faithful once J exceeds
    // the translation support by a margin.
    bool agrees_on_slice(const CrossedOp& o, int J, const Tolerance& tol = {}) const {
        for (int j = -J; j <= J; ++j) {
            if (!apply(Laurent2<R>::x(j)).identical(o.apply(Laurent2<R>::x(j)), tol))
                return false;
        }
        return true;
    }
    bool identical(const CrossedOp& o, const Tolerance& tol = {}) const {
        CrossedOp d = *this - o;
        for (const auto& [a, f] : d.terms_)
            if (!f.identical(RatFunc2<R>(), tol)) return false;
        return true;
    }

    int max_abs_r2() const {
        int m = 0;
        for (const auto& [a, f] : terms_) m = std::max(m, std::abs(a.r2));
        return m;
    }

  private:
    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();)
            it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }

    R nu_{};
    Terms terms_;
};

// ---- basic representation ------------------------------------------------

template <class R>
struct Rep {
    RepSpec spec;
    HeckeParams<R> params;

    const R& nu() const { return params.nu; }
    int bs() const { return spec.base_sign; }

    // x1 = x^2 and x0 = q^{+-1} x^{-2} with the fixed half-power convention
    // x1^{1/2} = x, x0^{1/2} = q^{+-1/2} x^{-1}.
    RatFunc2<R> arg_x1() const { return RatFunc2<R>::x(2); }
    RatFunc2<R> arg_x1_half() const { return RatFunc2<R>::x(1); }
    RatFunc2<R> arg_x0() const {
        return RatFunc2<R>(pow_int(params.q(), static_cast<long>(bs()))) * RatFunc2<R>::x(-2);
    }
    RatFunc2<R> arg_x0_half() const {
        return RatFunc2<R>(pow_int(params.nu, static_cast<long>(bs()))) * RatFunc2<R>::x(-1);
    }

    RatFunc2<R> c_of(int i) const {
        if (spec.type == RootType::A1)
            return c_a1(i == 1 ? arg_x1() : arg_x0(), params.k1);
        return i == 1 ? c_cc(arg_x1_half(), params.k1, params.u1)
                      : c_cc(arg_x0_half(), params.k0, params.u0);
    }
    RatFunc2<R> b_of(int i) const {
        const R& ki = (i == 1) ? params.k1 : (spec.type == RootType::A1 ? params.k1 : params.k0);
        return RatFunc2<R>(ki) - c_of(i);
    }
    R hecke_k(int i) const {
        return (i == 1) ? params.k1 : (spec.type == RootType::A1 ? params.k1 : params.k0);
    }
};

template <class R>
CrossedOp<R> rho_s(const Rep<R>& rep, Letter g) {
    CrossedOp<R> d(rep.nu());
    d.add_term(letter_action(rep.spec.type, g, rep.bs()), RatFunc2<R>::one());
    return d;
}

// rho(T_i) = c(x_i) s_i + b(x_i); rho(U) = u (A1 only).
template <class R>
CrossedOp<R> rho_T(const Rep<R>& rep, int i, int power = 1) {
    Letter s = (i == 1) ? Letter::s1 : Letter::s0;
    CrossedOp<R> d(rep.nu());
    d.add_term(letter_action(rep.spec.type, s, rep.bs()), rep.c_of(i));
    d.add_term(Action::id(), rep.b_of(i));
    if (power == -1) {
        // T^{-1} = T - k + k^{-1}
        const R k = rep.hecke_k(i);
        d.add_term(Action::id(), RatFunc2<R>(scalar_traits<R>::inv(k) - k));
    } else if (power != 1) {
        throw std::invalid_argument("rho_T: power must be +-1");
    }
    return d;
}

template <class R>
CrossedOp<R> rho_U(const Rep<R>& rep) {
    if (rep.spec.type != RootType::A1) throw weyl_error("U is A1-only");
    return rho_s(rep, Letter::u);
}

// Dunkl operator Y = U T1 (A1) or T0 T1 (CC), and its inverse.
template <class R>
CrossedOp<R> dunkl_Y(const Rep<R>& rep, int power = 1) {
    if (power == 0) return CrossedOp<R>::identity(rep.nu());
    CrossedOp<R> one;
    if (power > 0) {
        CrossedOp<R> y = (rep.spec.type == RootType::A1) ? rho_U(rep) * rho_T(rep, 1)
                                                         : rho_T(rep, 0) * rho_T(rep, 1);
        CrossedOp<R> acc = y;
        for (int i = 1; i < power; ++i) acc = acc * y;
        return acc;
    }
    CrossedOp<R> yinv = (rep.spec.type == RootType::A1)
                            ? rho_T(rep, 1, -1) * rho_U(rep)
                            : rho_T(rep, 1, -1) * rho_T(rep, 0, -1);
    CrossedOp<R> acc = yinv;
    for (int i = 1; i < -power; ++i) acc = acc * yinv;
    return acc;
}

// Generators as named handles, for star images and word builders.
enum class Gen { T1, T0, U, X, Y, T1inv, T0inv, Uinv, Xinv, Yinv };

template <class R>
CrossedOp<R> rho_gen(const Rep<R>& rep, Gen g) {
    switch (g) {
        case Gen::T1: return rho_T(rep, 1);
        case Gen::T1inv: return rho_T(rep, 1, -1);
        case Gen::T0: return rho_T(rep, 0);
        case Gen::T0inv: return rho_T(rep, 0, -1);
        case Gen::U:
        case Gen::Uinv: return rho_U(rep);
        case Gen::X: return CrossedOp<R>::x_mult(rep.nu(), 1);
        case Gen::Xinv: return CrossedOp<R>::x_mult(rep.nu(), -1);
        case Gen::Y: return dunkl_Y(rep, 1);
        case Gen::Yinv: return dunkl_Y(rep, -1);
    }
    throw std::invalid_argument("rho_gen: bad generator");
}

template <class R>
CrossedOp<R> rho_word(const Rep<R>& rep, const std::vector<Gen>& word) {
    CrossedOp<R> acc = CrossedOp<R>::identity(rep.nu());
    for (Gen g : word) acc = acc * rho_gen(rep, g);
    return acc;
}

// ---- duality anti-involution ----------------------------------------------
//
// Operator realization of g* inside the starred-parameter DAHA:
// T1* = T1, Y* = X^{-1}, X* = Y^{-1}, with the derived images
// U* = T1^{-1} X^{-1} (A1), T0* = T1^{-1} X^{-2} (A1), T0* = T1^{-1} X^{-1} (CC).
template <class R>
CrossedOp<R> star_gen(const Rep<R>& rep, Gen g) {
    Rep<R> srep{rep.spec, rep.params.star()};
    switch (g) {
        case Gen::T1: return rho_T(srep, 1);
        case Gen::T1inv: return rho_T(srep, 1, -1);
        case Gen::Y: return CrossedOp<R>::x_mult(srep.nu(), -1);
        case Gen::Yinv: return CrossedOp<R>::x_mult(srep.nu(), 1);
        case Gen::X: return dunkl_Y(srep, -1);
        case Gen::Xinv: return dunkl_Y(srep, 1);
        case Gen::U:
        case Gen::Uinv:
            if (rep.spec.type != RootType::A1) throw weyl_error("U is A1-only");
            return rho_T(srep, 1, -1) * CrossedOp<R>::x_mult(srep.nu(), -1);
        case Gen::T0:
            if (rep.spec.type == RootType::A1)
                return rho_T(srep, 1, -1) * CrossedOp<R>::x_mult(srep.nu(), -2);
            return rho_T(srep, 1, -1) * CrossedOp<R>::x_mult(srep.nu(), -1);
        case Gen::T0inv: {
            if (rep.spec.type == RootType::A1)
                return CrossedOp<R>::x_mult(srep.nu(), 2) * rho_T(srep, 1);
            return CrossedOp<R>::x_mult(srep.nu(), 1) * rho_T(srep, 1);
        }
    }
    throw std::invalid_argument("star_gen: bad generator");
}

// (g1 g2 ... gl)* = gl* ... g1*.
template <class R>
CrossedOp<R> star_word(const Rep<R>& rep, const std::vector<Gen>& word) {
    CrossedOp<R> acc = CrossedOp<R>::identity(rep.nu());
    for (auto it = word.rbegin(); it != word.rend(); ++it) acc = acc * star_gen(rep, *it);
    return acc;
}

}  // namespace bqm
