#pragma once

// q-shifted factorials, Jacobi theta, basic and very-well-poised
// hypergeometric series, with a loud geometric-tail truncation policy.

#include "bqm/scalar.hpp"

#include <functional>
#include <vector>

namespace bqm {

struct TruncationPolicy {
    int product_terms = 200;
    int series_terms = 80;
    bool tail_bound_check = true;
    double atol = 1e-12;
};

struct convergence_error : std::domain_error {
    using std::domain_error::domain_error;
};

// (x;q)_n, finite n >= 0.
template <class R>
R qpoch(const R& x, const R& q, int n) {
    if (n < 0) throw std::invalid_argument("qpoch: negative order");
    R acc = scalar_traits<R>::one();
    R xq = x;
    for (int j = 0; j < n; ++j) {
        acc = acc * (scalar_traits<R>::one() - xq);
        xq = xq * q;
    }
    return acc;
}

// (x;q)_infty by truncated product; requires |q| < 1.
inline Cx qpoch_inf(Cx x, Cx q, const TruncationPolicy& pol = {}) {
    if (std::abs(q) >= 1.0) throw convergence_error("qpoch_inf: |q| >= 1");
    Cx acc = 1.0;
    Cx xq = x;
    for (int j = 0; j < pol.product_terms; ++j) {
        acc *= (1.0 - xq);
        xq *= q;
    }
    if (pol.tail_bound_check) {
        // log(1-t) tail dominated by geometric series in |q|
        double tail = std::abs(xq) / (1.0 - std::abs(q));
        if (tail > pol.atol / 10.0)
            throw convergence_error("qpoch_inf: truncation tail above tolerance");
    }
    return acc;
}

inline Cx qpoch_inf(std::initializer_list<Cx> xs, Cx q, const TruncationPolicy& pol = {}) {
    Cx acc = 1.0;
    for (Cx x : xs) acc *= qpoch_inf(x, q, pol);
    return acc;
}

// q-binomial [beta; n]_q = (q^{beta-n+1};q)_n / (q;q)_n with q^beta given
// directly (so beta need not be an integer on the exact backend).
template <class R>
R qbinom_qpow(const R& q_to_beta, int n, const R& q) {
    R arg = q_to_beta * pow_int(q, static_cast<long>(1 - n));
    return qpoch(arg, q, n) / qpoch(q, q, n);
}

// theta(z;q) = (q, z, q/z; q)_infty.
inline Cx theta(Cx z, Cx q, const TruncationPolicy& pol = {}) {
    if (scalar_traits<Cx>::is_zero(z)) throw std::domain_error("theta: z = 0");
    return qpoch_inf(q, q, pol) * qpoch_inf(z, q, pol) * qpoch_inf(q / z, q, pol);
}

// ---- basic hypergeometric series ------------------------------------------

template <class R>
struct HypergeomSpec {
    std::vector<R> num;  // a_1, ..., a_{r+1}
    std::vector<R> den;  // b_1, ..., b_r
    R q;
    R z;
};

// Smallest n with |a - q^{-n}| within tolerance, if any; exact backends match
// exactly. Termination detection for numerator parameters.
template <class R>
std::optional<int> q_negative_power(const R& a, const R& q, int max_n) {
    R probe = scalar_traits<R>::one();
    for (int n = 0; n <= max_n; ++n) {
        if constexpr (scalar_traits<R>::is_exact) {
            if (a * probe == scalar_traits<R>::one()) return n;  // a = q^{-n}
        } else {
            if (std::abs(a * probe - scalar_traits<R>::one()) < 1e-11) return n;
        }
        probe = probe * q;
    }
    return std::nullopt;
}

// Generic {r+1}phi{r}; terminating series are summed exactly on the exact
// backend, non-terminating ones respect the tail policy. An explicit
// termination order wins over detection.
template <class R>
R rphis(const HypergeomSpec<R>& s, const TruncationPolicy& pol = {},
        std::optional<int> terminate_at = std::nullopt) {
    int stop = -1;
    if (terminate_at) {
        stop = *terminate_at;
    } else {
        for (const R& a : s.num) {
            auto n = q_negative_power(a, s.q, pol.series_terms);
            if (n && (stop < 0 || *n < stop)) stop = *n;
        }
    }
    if constexpr (scalar_traits<R>::is_exact) {
        if (stop < 0) throw convergence_error("rphis: non-terminating series on exact backend");
    } else {
        if (stop < 0 && std::abs(s.z) >= 1.0)
            throw convergence_error("rphis: |z| >= 1 and series does not terminate");
    }
    const int n_max = stop >= 0 ? stop : pol.series_terms;
    R sum = scalar_traits<R>::one();
    R term = scalar_traits<R>::one();
    R qn = scalar_traits<R>::one();  // q^n
    double prev_mag = 1.0, last_ratio = 0.0;
    for (int n = 0; n < n_max; ++n) {
        R factor = s.z;
        for (const R& a : s.num) factor = factor * (scalar_traits<R>::one() - a * qn);
        for (const R& b : s.den) factor = factor / (scalar_traits<R>::one() - b * qn);
        factor = factor / (scalar_traits<R>::one() - s.q * qn);
        term = term * factor;
        sum = sum + term;
        if constexpr (!scalar_traits<R>::is_exact) {
            double mag = scalar_traits<R>::mag(term);
            last_ratio = prev_mag > 0 ? mag / prev_mag : 0.0;
            prev_mag = mag;
        }
        qn = qn * s.q;
    }
    if (stop < 0 && pol.tail_bound_check) {
        if constexpr (!scalar_traits<R>::is_exact) {
            if (last_ratio >= 1.0)
                throw convergence_error("rphis: terms not decaying at truncation");
            double tail = prev_mag * last_ratio / (1.0 - last_ratio);
            if (tail > pol.atol / 10.0)
                throw convergence_error("rphis: truncation tail above tolerance");
        }
    }
    return sum;
}

// Very-well-poised 8W7(a1; a4,...,a8; q, z), summed through the classical
// kernel (1 - a1 q^{2n})/(1 - a1) so no square roots of a1 are needed.
template <class R>
R vwp87(const R& a1, const std::array<R, 5>& as, const R& q, const R& z,
        const TruncationPolicy& pol = {}, std::optional<int> terminate_at = std::nullopt) {
    int stop = -1;
    if (terminate_at) {
        stop = *terminate_at;
    } else {
        for (const R& a : as) {
            auto n = q_negative_power(a, q, pol.series_terms);
            if (n && (stop < 0 || *n < stop)) stop = *n;
        }
    }
    if constexpr (scalar_traits<R>::is_exact) {
        if (stop < 0) throw convergence_error("vwp87: non-terminating series on exact backend");
    } else {
        if (stop < 0 && std::abs(z) >= 1.0)
            throw convergence_error("vwp87: |z| >= 1 and series does not terminate");
    }
    const int n_max = stop >= 0 ? stop : pol.series_terms;
    const R one = scalar_traits<R>::one();
    double prev_mag = 0.0, last_ratio = 0.0;
    R sum = scalar_traits<R>::zero();
    R poch_a1 = one, poch_q = one, z_pow = one;
    std::array<R, 5> poch_as;
    std::array<R, 5> poch_bs;
    poch_as.fill(one);
    poch_bs.fill(one);
    R qn = one;
    for (int n = 0; n <= n_max; ++n) {
        R kernel = (one - a1 * qn * qn) / (one - a1);
        R term = kernel * poch_a1 * z_pow / poch_q;
        for (int i = 0; i < 5; ++i) term = term * poch_as[i] / poch_bs[i];
        sum = sum + term;
        if constexpr (!scalar_traits<R>::is_exact) {
            double mag = scalar_traits<R>::mag(term);
            last_ratio = prev_mag > 0 ? mag / prev_mag : 0.0;
            prev_mag = mag;
        }
        // advance Pochhammer symbols to order n+1
        poch_a1 = poch_a1 * (one - a1 * qn);
        poch_q = poch_q * (one - q * qn);
        for (int i = 0; i < 5; ++i) {
            poch_as[i] = poch_as[i] * (one - as[i] * qn);
            poch_bs[i] = poch_bs[i] * (one - (q * a1 / as[i]) * qn);
        }
        z_pow = z_pow * z;
        qn = qn * q;
    }
    if (stop < 0 && pol.tail_bound_check) {
        if constexpr (!scalar_traits<R>::is_exact) {
            if (last_ratio >= 1.0)
                throw convergence_error("vwp87: terms not decaying at truncation");
            double tail = prev_mag * last_ratio / (1.0 - last_ratio);
            if (tail > pol.atol / 10.0)
                throw convergence_error("vwp87: truncation tail above tolerance");
        }
    }
    return sum;
}

}  // namespace bqm
