#pragma once

// Sparse Laurent polynomials in the geometric variable x and the spectral
// variable xi, with exact or numeric coefficients. Half-integer q-powers are
// tracked as integer powers of nu = q^{1/2} throughout.

#include "bqm/scalar.hpp"

#include <map>
#include <sstream>
#include <utility>

namespace bqm {

struct Expo2 {
    int ex = 0;   // power of x
    int exi = 0;  // power of xi
    auto operator<=>(const Expo2&) const = default;
};

// Affine substitution z -> nu^{r2} z^{eps} acting on one variable.
struct Action {
    int eps = 1;  // +1 or -1
    int r2 = 0;   // power of nu
    auto operator<=>(const Action&) const = default;

    static Action id() { return {1, 0}; }
    // Operator composition: the substitution carried by the product A.B of
    // two substitution operators (B applied to the argument first), i.e.
    // m = m_b o m_a.
    static Action then(const Action& a, const Action& b) {
        return {a.eps * b.eps, b.r2 + b.eps * a.r2};
    }
    // Composition of the substitution expressions themselves, m_a o m_b;
    // this is the convention the group-word displays use (t(pi) = u s1
    // carries x -> q^{1/2} x).
    static Action display_then(const Action& a, const Action& b) {
        return {a.eps * b.eps, a.r2 + a.eps * b.r2};
    }
    Action inverse() const { return {eps, -eps * r2}; }
    // Conjugate by the translation-inverting involution (x-copy vs xi-copy).
    Action diamond() const { return {eps, -r2}; }
};

template <class R>
class Laurent2 {
  public:
    using Terms = std::map<Expo2, R>;

    Laurent2() = default;
    explicit Laurent2(const R& c) {
        if (!scalar_traits<R>::is_zero(c)) terms_[Expo2{0, 0}] = c;
    }

    static Laurent2 monomial(const R& c, int ex, int exi = 0) {
        Laurent2 p;
        if (!scalar_traits<R>::is_zero(c)) p.terms_[Expo2{ex, exi}] = c;
        return p;
    }
    static Laurent2 x(int e = 1) { return monomial(scalar_traits<R>::one(), e, 0); }
    static Laurent2 xi(int e = 1) { return monomial(scalar_traits<R>::one(), 0, e); }
    static Laurent2 one() { return Laurent2(scalar_traits<R>::one()); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Expo2{0, 0});
    }
    R constant_term() const {
        auto it = terms_.find(Expo2{0, 0});
        return it == terms_.end() ? scalar_traits<R>::zero() : it->second;
    }

    void add_term(const Expo2& e, const R& c) {
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second = it->second + c;
            if (scalar_traits<R>::is_zero(it->second)) terms_.erase(it);
        } else if (scalar_traits<R>::is_zero(c)) {
            terms_.erase(it);
        }
    }

    Laurent2 operator-() const {
        Laurent2 r = *this;
        for (auto& [e, c] : r.terms_) c = -c;
        return r;
    }
    Laurent2& operator+=(const Laurent2& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Laurent2& operator-=(const Laurent2& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Laurent2 operator+(Laurent2 a, const Laurent2& b) { return a += b; }
    friend Laurent2 operator-(Laurent2 a, const Laurent2& b) { return a -= b; }

    friend Laurent2 operator*(const Laurent2& a, const Laurent2& b) {
        Laurent2 r;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                r.add_term(Expo2{ea.ex + eb.ex, ea.exi + eb.exi}, ca * cb);
        return r;
    }
    Laurent2& operator*=(const Laurent2& o) { return *this = *this * o; }

    friend Laurent2 operator*(const R& c, const Laurent2& a) {
        Laurent2 r;
        for (const auto& [e, ca] : a.terms_) r.add_term(e, c * ca);
        return r;
    }

    // x -> nu^{r2} x^{eps}; each monomial x^a xi^b picks up nu^{r2 a}.
    Laurent2 subst_x(const Action& a, const R& nu) const {
        Laurent2 r;
        for (const auto& [e, c] : terms_)
            r.add_term(Expo2{a.eps * e.ex, e.exi}, c * pow_int(nu, static_cast<long>(a.r2) * e.ex));
        return r;
    }
    Laurent2 subst_xi(const Action& a, const R& nu) const {
        Laurent2 r;
        for (const auto& [e, c] : terms_)
            r.add_term(Expo2{e.ex, a.eps * e.exi}, c * pow_int(nu, static_cast<long>(a.r2) * e.exi));
        return r;
    }
    // (x, xi) -> (xi^{-1}, x^{-1})
    Laurent2 subst_iota() const {
        Laurent2 r;
        for (const auto& [e, c] : terms_) r.add_term(Expo2{-e.exi, -e.ex}, c);
        return r;
    }

    template <class S>
    S eval(const S& x0, const S& xi0) const {
        S acc = scalar_traits<S>::zero();
        for (const auto& [e, c] : terms_) {
            S coeff;
            if constexpr (std::is_same_v<R, Rat> && std::is_same_v<S, Cx>)
                coeff = scalar_traits<Cx>::from_rat(c);
            else
                coeff = c;
            acc = acc + coeff * pow_int(x0, e.ex) * pow_int(xi0, e.exi);
        }
        return acc;
    }

    int min_ex() const {
        int m = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first || e.ex < m) m = e.ex;
            first = false;
        }
        return m;
    }
    int max_ex() const {
        int m = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first || e.ex > m) m = e.ex;
            first = false;
        }
        return m;
    }
    int min_exi() const {
        int m = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first || e.exi < m) m = e.exi;
            first = false;
        }
        return m;
    }
    int max_exi() const {
        int m = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first || e.exi > m) m = e.exi;
            first = false;
        }
        return m;
    }

    // Multiplies by the monomial x^{dx} xi^{dxi}.
    Laurent2 shifted(int dx, int dxi) const {
        Laurent2 r;
        for (const auto& [e, c] : terms_) r.terms_[Expo2{e.ex + dx, e.exi + dxi}] = c;
        return r;
    }

    bool operator==(const Laurent2& o) const {
        if constexpr (scalar_traits<R>::is_exact) {
            return terms_ == o.terms_;
        } else {
            Laurent2 d = *this - o;
            for (const auto& [e, c] : d.terms_)
                if (!scalar_traits<R>::eq(c, scalar_traits<R>::zero())) return false;
            return true;
        }
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << "(" << c << ")";
            if (e.ex) os << "*x^" << e.ex;
            if (e.exi) os << "*xi^" << e.exi;
        }
        return os.str();
    }

  private:
    Terms terms_;
};

}  // namespace bqm
