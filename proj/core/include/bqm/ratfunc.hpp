#pragma once

// Rational functions num/den over Laurent2. Kept unreduced: equality is by
// cross-multiplication on the exact backend and by sampling on the numeric
// one. A light normalization (common monomial content, den pseudo-monic)
// tames growth without needing two-variable gcd.

#include "bqm/laurent.hpp"

#include <stdexcept>

namespace bqm {

struct pole_error : std::domain_error {
    using std::domain_error::domain_error;
};

template <class R>
class RatFunc2 {
  public:
    RatFunc2() : num_(), den_(Laurent2<R>::one()) {}
    explicit RatFunc2(const R& c) : num_(Laurent2<R>(c)), den_(Laurent2<R>::one()) {}
    RatFunc2(Laurent2<R> num, Laurent2<R> den = Laurent2<R>::one())
        : num_(std::move(num)), den_(std::move(den)) {
        if (den_.is_zero()) throw std::invalid_argument("RatFunc2: zero denominator");
        normalize();
    }

    static RatFunc2 x(int e = 1) { return RatFunc2(Laurent2<R>::x(e)); }
    static RatFunc2 xi(int e = 1) { return RatFunc2(Laurent2<R>::xi(e)); }
    static RatFunc2 one() { return RatFunc2(scalar_traits<R>::one()); }

    const Laurent2<R>& num() const { return num_; }
    const Laurent2<R>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool den_is_one() const { return den_ == Laurent2<R>::one(); }

    RatFunc2 operator-() const { return RatFunc2(-num_, den_, no_normalize{}); }

    friend RatFunc2 operator+(const RatFunc2& a, const RatFunc2& b) {
        if (a.den_ == b.den_) return RatFunc2(a.num_ + b.num_, a.den_);
        return RatFunc2(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc2 operator-(const RatFunc2& a, const RatFunc2& b) {
        if (a.den_ == b.den_) return RatFunc2(a.num_ - b.num_, a.den_);
        return RatFunc2(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc2 operator*(const RatFunc2& a, const RatFunc2& b) {
        return RatFunc2(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc2 operator/(const RatFunc2& a, const RatFunc2& b) {
        if (b.num_.is_zero()) throw std::domain_error("RatFunc2: division by zero function");
        return RatFunc2(a.num_ * b.den_, a.den_ * b.num_);
    }
    RatFunc2& operator+=(const RatFunc2& o) { return *this = *this + o; }
    RatFunc2& operator-=(const RatFunc2& o) { return *this = *this - o; }
    RatFunc2& operator*=(const RatFunc2& o) { return *this = *this * o; }
    RatFunc2& operator/=(const RatFunc2& o) { return *this = *this / o; }

    friend RatFunc2 operator*(const R& c, const RatFunc2& a) {
        return RatFunc2(c * a.num_, a.den_);
    }

    RatFunc2 subst_x(const Action& a, const R& nu) const {
        return RatFunc2(num_.subst_x(a, nu), den_.subst_x(a, nu));
    }
    RatFunc2 subst_xi(const Action& a, const R& nu) const {
        return RatFunc2(num_.subst_xi(a, nu), den_.subst_xi(a, nu));
    }
    RatFunc2 subst_iota() const { return RatFunc2(num_.subst_iota(), den_.subst_iota()); }

    template <class S>
    S eval(const S& x0, const S& xi0) const {
        S d = den_.template eval<S>(x0, xi0);
        if (scalar_traits<S>::is_zero(d)) throw pole_error("RatFunc2: pole at evaluation point");
        return num_.template eval<S>(x0, xi0) / d;
    }

    // Identity of meromorphic functions; cross-multiplication on the exact
    // backend, sampled on the numeric one.
    bool identical(const RatFunc2& o, const Tolerance& tol = {}, int n_sample = 20,
                   std::uint64_t seed = 0x5eed) const {
        if (den_.is_zero() || o.den_.is_zero())
            throw std::domain_error("RatFunc2: zero denominator detected");
        if constexpr (scalar_traits<R>::is_exact) {
            (void)tol;
            (void)n_sample;
            (void)seed;
            return (num_ * o.den_) == (o.num_ * den_);
        } else {
            std::mt19937_64 rng(seed);
            Laurent2<R> lhs = num_ * o.den_, rhs = o.num_ * den_;
            for (int i = 0; i < n_sample; ++i) {
                Cx x0 = sample_point(rng), xi0 = sample_point(rng);
                if (!scalar_traits<R>::eq(lhs.template eval<R>(x0, xi0),
                                          rhs.template eval<R>(x0, xi0), tol))
                    return false;
            }
            return true;
        }
    }

    std::string str() const { return "(" + num_.str() + ") / (" + den_.str() + ")"; }

  private:
    struct no_normalize {};
    RatFunc2(Laurent2<R> num, Laurent2<R> den, no_normalize)
        : num_(std::move(num)), den_(std::move(den)) {}

    // Strips common monomial content, cancels the univariate polynomial gcd
    // when both parts depend on at most one variable, and scales so den's
    // lexicographically first coefficient is one. Values are unchanged; no
    // two-variable gcd is attempted.
    void normalize() {
        if (num_.is_zero()) {
            den_ = Laurent2<R>::one();
            return;
        }
        int sx = std::min(num_.min_ex(), den_.min_ex());
        int sxi = std::min(num_.min_exi(), den_.min_exi());
        if (sx || sxi) {
            num_ = num_.shifted(-sx, -sxi);
            den_ = den_.shifted(-sx, -sxi);
        }
        if constexpr (scalar_traits<R>::is_exact) reduce_univariate();
        const R lead = den_.terms().begin()->second;
        if (!scalar_traits<R>::eq(lead, scalar_traits<R>::one(), Tolerance{0.0, 0.0})) {
            R inv = scalar_traits<R>::inv(lead);
            num_ = inv * num_;
            den_ = inv * den_;
        }
    }

    static bool univariate_x(const Laurent2<R>& p) {
        for (const auto& [e, c] : p.terms())
            if (e.exi != 0) return false;
        return true;
    }
    static bool univariate_xi(const Laurent2<R>& p) {
        for (const auto& [e, c] : p.terms())
            if (e.ex != 0) return false;
        return true;
    }

    void reduce_univariate() {
        bool in_x = univariate_x(num_) && univariate_x(den_);
        bool in_xi = !in_x && univariate_xi(num_) && univariate_xi(den_);
        if (!in_x && !in_xi) return;
        auto to_vec = [&](const Laurent2<R>& p) {
            int lo = in_x ? p.min_ex() : p.min_exi();
            int hi = in_x ? p.max_ex() : p.max_exi();
            std::vector<R> v(static_cast<std::size_t>(hi - lo + 1), scalar_traits<R>::zero());
            for (const auto& [e, c] : p.terms()) v[(in_x ? e.ex : e.exi) - lo] = c;
            return std::make_pair(v, lo);
        };
        auto [a, la] = to_vec(num_);
        auto [b, lb] = to_vec(den_);
        std::vector<R> g = poly_gcd(a, b);
        if (g.size() <= 1) return;
        auto n2 = poly_div_exact(a, g);
        auto d2 = poly_div_exact(b, g);
        auto from_vec = [&](const std::vector<R>& v, int lo) {
            Laurent2<R> p;
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (scalar_traits<R>::is_zero(v[i])) continue;
                int e = lo + static_cast<int>(i);
                p.add_term(in_x ? Expo2{e, 0} : Expo2{0, e}, v[i]);
            }
            return p;
        };
        num_ = from_vec(n2, la);
        den_ = from_vec(d2, lb);
        int sx = std::min(num_.min_ex(), den_.min_ex());
        int sxi = std::min(num_.min_exi(), den_.min_exi());
        if (sx || sxi) {
            num_ = num_.shifted(-sx, -sxi);
            den_ = den_.shifted(-sx, -sxi);
        }
    }

    static std::vector<R> poly_trim(std::vector<R> v) {
        while (!v.empty() && scalar_traits<R>::is_zero(v.back())) v.pop_back();
        return v;
    }
    // Euclidean gcd of dense univariate polynomials, monic output.
    static std::vector<R> poly_gcd(std::vector<R> a, std::vector<R> b) {
        a = poly_trim(std::move(a));
        b = poly_trim(std::move(b));
        while (!b.empty()) {
            // a mod b
            while (a.size() >= b.size() && !a.empty()) {
                R f = a.back() / b.back();
                std::size_t off = a.size() - b.size();
                for (std::size_t i = 0; i < b.size(); ++i) a[off + i] = a[off + i] - f * b[i];
                a = poly_trim(std::move(a));
            }
            std::swap(a, b);
        }
        if (!a.empty()) {
            R inv = scalar_traits<R>::inv(a.back());
            for (R& c : a) c = c * inv;
        }
        return a;
    }
    static std::vector<R> poly_div_exact(std::vector<R> a, const std::vector<R>& g) {
        std::vector<R> q(a.size() >= g.size() ? a.size() - g.size() + 1 : 0,
                         scalar_traits<R>::zero());
        while (a.size() >= g.size() && !a.empty()) {
            R f = a.back() / g.back();
            q[a.size() - g.size()] = f;
            std::size_t off = a.size() - g.size();
            for (std::size_t i = 0; i < g.size(); ++i) a[off + i] = a[off + i] - f * g[i];
            a = poly_trim(std::move(a));
        }
        return q;
    }

    Laurent2<R> num_, den_;
};

// c(z;k) = (k^{-1} - k z)/(1 - z) and b = k - c of the reduced rank-one
// Hecke operators; z is passed as a rational function of x or xi.
template <class R>
RatFunc2<R> c_a1(const RatFunc2<R>& z, const R& k) {
    RatFunc2<R> one = RatFunc2<R>::one();
    return (RatFunc2<R>(scalar_traits<R>::inv(k)) - RatFunc2<R>(k) * z) / (one - z);
}

template <class R>
RatFunc2<R> b_a1(const RatFunc2<R>& z, const R& k) {
    return RatFunc2<R>(k) - c_a1(z, k);
}

// Nonreduced version, taking the half-power argument w with z = w^2:
// c(z;k,u) = k^{-1}(1 - k u w)(1 + k u^{-1} w)/(1 - w^2).
template <class R>
RatFunc2<R> c_cc(const RatFunc2<R>& w, const R& k, const R& u) {
    RatFunc2<R> one = RatFunc2<R>::one();
    RatFunc2<R> n1 = one - RatFunc2<R>(k * u) * w;
    RatFunc2<R> n2 = one + RatFunc2<R>(k * scalar_traits<R>::inv(u)) * w;
    return RatFunc2<R>(scalar_traits<R>::inv(k)) * n1 * n2 / (one - w * w);
}

template <class R>
RatFunc2<R> b_cc(const RatFunc2<R>& w, const R& k, const R& u) {
    return RatFunc2<R>(k) - c_cc(w, k, u);
}

}  // namespace bqm
