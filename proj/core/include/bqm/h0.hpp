#pragma once

// H0-valued vectors and 2x2 matrices over the rational function field in
// (x, xi), in the ordered basis (T_e, T_1). Cocycles, the left/right
// multiplication maps eta_L / eta_R, and the functional chi_+ live here.

#include "bqm/pbw.hpp"

#include <array>

namespace bqm {

template <class R>
struct H0Vec {
    RatFunc2<R> ce, c1;

    H0Vec() = default;
    H0Vec(RatFunc2<R> e, RatFunc2<R> s1) : ce(std::move(e)), c1(std::move(s1)) {}
    static H0Vec Te() { return {RatFunc2<R>::one(), RatFunc2<R>()}; }
    static H0Vec T1() { return {RatFunc2<R>(), RatFunc2<R>::one()}; }

    friend H0Vec operator+(const H0Vec& a, const H0Vec& b) { return {a.ce + b.ce, a.c1 + b.c1}; }
    friend H0Vec operator-(const H0Vec& a, const H0Vec& b) { return {a.ce - b.ce, a.c1 - b.c1}; }
    friend H0Vec operator*(const RatFunc2<R>& f, const H0Vec& v) { return {f * v.ce, f * v.c1}; }
    bool identical(const H0Vec& o, const Tolerance& tol = {}) const {
        return ce.identical(o.ce, tol) && c1.identical(o.c1, tol);
    }
};

template <class R>
struct H0Mat {
    // m[row][col], columns are images of T_e and T_1.
    std::array<std::array<RatFunc2<R>, 2>, 2> m{};

    static H0Mat identity() {
        H0Mat r;
        r.m[0][0] = RatFunc2<R>::one();
        r.m[1][1] = RatFunc2<R>::one();
        return r;
    }
    static H0Mat scalar(const RatFunc2<R>& f) {
        H0Mat r;
        r.m[0][0] = f;
        r.m[1][1] = f;
        return r;
    }

    H0Vec<R> apply(const H0Vec<R>& v) const {
        return {m[0][0] * v.ce + m[0][1] * v.c1, m[1][0] * v.ce + m[1][1] * v.c1};
    }
    friend H0Mat operator*(const H0Mat& a, const H0Mat& b) {
        H0Mat r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                r.m[i][j] = a.m[i][0] * b.m[0][j] + a.m[i][1] * b.m[1][j];
        return r;
    }
    friend H0Mat operator+(const H0Mat& a, const H0Mat& b) {
        H0Mat r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][j] + b.m[i][j];
        return r;
    }
    friend H0Mat operator-(const H0Mat& a, const H0Mat& b) {
        H0Mat r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = a.m[i][j] - b.m[i][j];
        return r;
    }
    friend H0Mat operator*(const RatFunc2<R>& f, const H0Mat& a) {
        H0Mat r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = f * a.m[i][j];
        return r;
    }

    H0Mat subst_x(const Action& a, const R& nu) const {
        H0Mat r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j].subst_x(a, nu);
        return r;
    }
    H0Mat subst_xi(const Action& a, const R& nu) const {
        H0Mat r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j].subst_xi(a, nu);
        return r;
    }
    // Entrywise (x,xi) -> (xi^{-1}, x^{-1}); the basis transport T_w -> T_{w^{-1}}
    // is the identity in rank one.
    H0Mat subst_iota() const {
        H0Mat r;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) r.m[i][j] = m[i][j].subst_iota();
        return r;
    }

    bool identical(const H0Mat& o, const Tolerance& tol = {}) const {
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j)
                if (!m[i][j].identical(o.m[i][j], tol)) return false;
        return true;
    }

    template <class S>
    std::array<S, 4> eval(const S& x0, const S& xi0) const {
        return {m[0][0].template eval<S>(x0, xi0), m[0][1].template eval<S>(x0, xi0),
                m[1][0].template eval<S>(x0, xi0), m[1][1].template eval<S>(x0, xi0)};
    }
};

// PBW coefficients read into H0 with the module rule: a right factor Y^b acts
// as multiplication by xi^b.
template <class R>
H0Vec<R> pbw_to_h0(const PBWElement<R>& e) {
    H0Vec<R> v;
    for (const auto& [key, g] : e.coeff) {
        RatFunc2<R> entry = g * RatFunc2<R>::xi(key.second);
        if (key.first == 0)
            v.ce += entry;
        else
            v.c1 += entry;
    }
    return v;
}

// Left-multiplication matrix of an operator A in the DAHA.
template <class R>
H0Mat<R> eta_L(const PBWEngine<R>& eng, const CrossedOp<R>& A) {
    H0Vec<R> col0 = pbw_to_h0(eng.normal_form(A));
    H0Vec<R> col1 = pbw_to_h0(eng.normal_form(A * rho_T(eng.rep(), 1)));
    H0Mat<R> r;
    r.m[0][0] = col0.ce;
    r.m[1][0] = col0.c1;
    r.m[0][1] = col1.ce;
    r.m[1][1] = col1.c1;
    return r;
}

// Right-multiplication matrix; A is typically a star image.
template <class R>
H0Mat<R> eta_R(const PBWEngine<R>& eng, const CrossedOp<R>& A) {
    H0Vec<R> col0 = pbw_to_h0(eng.normal_form(A));
    H0Vec<R> col1 = pbw_to_h0(eng.normal_form(rho_T(eng.rep(), 1) * A));
    H0Mat<R> r;
    r.m[0][0] = col0.ce;
    r.m[1][0] = col0.c1;
    r.m[0][1] = col1.ce;
    r.m[1][1] = col1.c1;
    return r;
}

// chi_+(T_w) = chi1^{l(w)} where chi1 is the Hecke eigenvalue of the system's
// own parameters (k for A1, k1 for CC); on the reciprocal-parameter side this
// is the k^{-l(w)} convention.
template <class R>
RatFunc2<R> chi_plus(const H0Vec<R>& v, const R& chi1) {
    return v.ce + RatFunc2<R>(chi1) * v.c1;
}

}  // namespace bqm
