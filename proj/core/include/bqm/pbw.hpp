#pragma once

// Poincare-Birkhoff-Witt normal form: writes a crossed operator with bounded
// translation support as sum_{w,b} g_{w,b}(x) T_w Y^b. The basis elements
// T_w Y^{+-b} are the only ones whose crossed expansion reaches translation
// level |r2| = unit*b, so the coefficients fall out of a 4x4 solve per level,
// top level inward.

#include "bqm/crossed.hpp"

#include <array>
#include <map>
#include <stdexcept>

namespace bqm {

struct pbw_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class R>
struct PBWElement {
    // key: (w, b) with w = 0 (T_e) or 1 (T_1), b the Y-exponent
    std::map<std::pair<int, int>, RatFunc2<R>> coeff;
};

namespace detail {

// Dense Gaussian elimination over the rational-function field; n <= 4.
template <class R, std::size_t N>
std::array<RatFunc2<R>, N> solve_linear(std::array<std::array<RatFunc2<R>, N>, N> m,
                                        std::array<RatFunc2<R>, N> rhs, std::size_t n) {
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) throw pbw_error("pbw: singular solve (non-generic parameters?)");
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || m[row][col].is_zero()) continue;
            RatFunc2<R> f = m[row][col] / m[col][col];
            for (std::size_t c2 = col; c2 < n; ++c2) m[row][c2] -= f * m[col][c2];
            rhs[row] -= f * rhs[col];
        }
    }
    std::array<RatFunc2<R>, N> out{};
    for (std::size_t i = 0; i < n; ++i) out[i] = rhs[i] / m[i][i];
    return out;
}

}  // namespace detail

template <class R>
class PBWEngine {
  public:
    explicit PBWEngine(const Rep<R>& rep) : rep_(rep) {
        unit_ = (rep.spec.type == RootType::A1) ? 1 : 2;
    }

    const Rep<R>& rep() const { return rep_; }
    int unit() const { return unit_; }

    const CrossedOp<R>& basis_op(int w, int b) {
        auto key = std::make_pair(w, b);
        auto it = cache_.find(key);
        if (it != cache_.end()) return it->second;
        CrossedOp<R> op = dunkl_Y(rep_, b);
        if (w == 1) op = rho_T(rep_, 1) * op;
        return cache_.emplace(key, std::move(op)).first->second;
    }

    PBWElement<R> normal_form(CrossedOp<R> d) const {
        PBWElement<R> out;
        auto& self = const_cast<PBWEngine&>(*this);
        int guard = 0;
        while (!d.is_zero()) {
            if (++guard > 512) throw pbw_error("pbw: no convergence");
            int level = d.max_abs_r2();
            if (level % unit_ != 0)
                throw pbw_error("pbw: translation level outside the lattice");
            int b = level / unit_;
            if (b == 0) {
                solve_level0(d, out);
                break;
            }
            solve_level(self, d, b, out);
        }
        return out;
    }

    CrossedOp<R> expand(const PBWElement<R>& e) const {
        auto& self = const_cast<PBWEngine&>(*this);
        CrossedOp<R> acc(rep_.nu());
        for (const auto& [key, g] : e.coeff)
            acc += g * self.basis_op(key.first, key.second);
        return acc;
    }

  private:
    static RatFunc2<R> coeff_at(const CrossedOp<R>& d, const Action& a) {
        auto it = d.terms().find(a);
        return it == d.terms().end() ? RatFunc2<R>() : it->second;
    }

    void solve_level(PBWEngine& self, CrossedOp<R>& d, int b, PBWElement<R>& out) const {
        const int R2 = unit_ * b;
        const std::array<Action, 4> eqs = {
            Action{+1, R2}, Action{-1, R2}, Action{+1, -R2}, Action{-1, -R2}};
        const std::array<std::pair<int, int>, 4> unknowns = {
            std::make_pair(0, b), {1, b}, {0, -b}, {1, -b}};
        std::array<std::array<RatFunc2<R>, 4>, 4> m{};
        std::array<RatFunc2<R>, 4> rhs{};
        for (std::size_t i = 0; i < 4; ++i) {
            rhs[i] = coeff_at(d, eqs[i]);
            for (std::size_t j = 0; j < 4; ++j)
                m[i][j] = coeff_at(self.basis_op(unknowns[j].first, unknowns[j].second), eqs[i]);
        }
        auto g = detail::solve_linear<R, 4>(m, rhs, 4);
        for (std::size_t j = 0; j < 4; ++j) {
            if (g[j].is_zero()) continue;
            out.coeff[unknowns[j]] += g[j];
            d -= g[j] * self.basis_op(unknowns[j].first, unknowns[j].second);
        }
        if (d.max_abs_r2() >= R2 && !d.is_zero()) {
            // level was not cleared: degenerate block
            for (std::size_t i = 0; i < 4; ++i)
                if (!coeff_at(d, eqs[i]).is_zero())
                    throw pbw_error("pbw: level not cleared (support bound too small?)");
        }
    }

    void solve_level0(CrossedOp<R>& d, PBWElement<R>& out) const {
        Rep<R> rep = rep_;
        RatFunc2<R> fplus = coeff_at(d, Action{+1, 0});
        RatFunc2<R> fminus = coeff_at(d, Action{-1, 0});
        RatFunc2<R> c1 = rep.c_of(1), b1 = rep.b_of(1);
        RatFunc2<R> g1 = fminus / c1;
        RatFunc2<R> ge = fplus - g1 * b1;
        if (!g1.is_zero()) out.coeff[{1, 0}] += g1;
        if (!ge.is_zero()) out.coeff[{0, 0}] += ge;
        CrossedOp<R> rem = d;
        rem -= g1 * rho_T(rep, 1);
        rem -= CrossedOp<R>::scalar(rep.nu(), ge);
        for (const auto& [a, f] : rem.terms())
            if (!f.identical(RatFunc2<R>()))
                throw pbw_error("pbw: nonzero remainder at level 0");
    }

    Rep<R> rep_;
    int unit_ = 1;
    std::map<std::pair<int, int>, CrossedOp<R>> cache_;
};

}  // namespace bqm
