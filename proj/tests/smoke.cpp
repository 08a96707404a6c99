#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bqm/cocycle.hpp"

using namespace bqm;
using RF = RatFunc2<Rat>;
using Op = CrossedOp<Rat>;

static HeckeParams<Rat> pa1() { return HeckeParams<Rat>::a1(Rat(2, 5), Rat(3, 7)); }
static HeckeParams<Rat> pcc() {
    return HeckeParams<Rat>::cc(Rat(2, 5), Rat(3, 7), Rat(2, 3), Rat(5, 4), Rat(4, 9));
}

TEST_CASE("a1 defining relations on the monomial slice") {
    Rep<Rat> rep{RepSpec{RootType::A1, +1}, pa1()};
    const Rat k = rep.params.k1, nu = rep.params.nu;
    Op I = Op::identity(nu);
    Op T1 = rho_T(rep, 1), T0 = rho_T(rep, 0), U = rho_U(rep);
    Op X = Op::x_mult(nu, 1), Xinv = Op::x_mult(nu, -1);

    CHECK(((T1 - k * I) * (T1 + scalar_traits<Rat>::inv(k) * I)).agrees_on_slice(Op(nu), 8));
    CHECK(((T0 - k * I) * (T0 + scalar_traits<Rat>::inv(k) * I)).agrees_on_slice(Op(nu), 8));
    CHECK((U * U).agrees_on_slice(I, 8));
    CHECK((U * T1).agrees_on_slice(T0 * U, 8));
    CHECK((T1 * X * T1).agrees_on_slice(Xinv, 8));
    CHECK((U * X * U).agrees_on_slice(nu * Xinv, 8));  // UXU = q^{1/2} X^{-1}
    // Y^2 = T0 T1 and Y Y^{-1} = 1
    CHECK((dunkl_Y(rep, 2)).agrees_on_slice(T0 * T1, 8));
    CHECK((dunkl_Y(rep, 1) * dunkl_Y(rep, -1)).agrees_on_slice(I, 8));
    // rho(T1) 1 = k, rho(T1) x = k^{-1} x^{-1}, rho(U) x = q^{1/2} x^{-1}
    CHECK(T1.apply(Laurent2<Rat>::one()).identical(RF(k)));
    CHECK(T1.apply(Laurent2<Rat>::x(1)).identical(RF(scalar_traits<Rat>::inv(k)) * RF::x(-1)));
    CHECK(U.apply(Laurent2<Rat>::x(1)).identical(RF(nu) * RF::x(-1)));
    CHECK(dunkl_Y(rep, 1).apply(Laurent2<Rat>::one()).identical(RF(k)));
}

TEST_CASE("cc defining relations on the monomial slice") {
    Rep<Rat> rep{RepSpec{RootType::CC, +1}, pcc()};
    const auto& p = rep.params;
    const Rat nu = p.nu;
    auto inv = [](const Rat& v) { return scalar_traits<Rat>::inv(v); };
    Op I = Op::identity(nu);
    Op T1 = rho_T(rep, 1), T0 = rho_T(rep, 0);
    Op X = Op::x_mult(nu, 1), Xinv = Op::x_mult(nu, -1);
    Op T1v = Xinv * rho_T(rep, 1, -1);           // T1^vee = X^{-1} T1^{-1}
    Op T0v = inv(nu) * (rho_T(rep, 0, -1) * X);  // T0^vee = q^{-1/2} T0^{-1} X

    CHECK(((T1 - p.k1 * I) * (T1 + inv(p.k1) * I)).agrees_on_slice(Op(nu), 8));
    CHECK(((T0 - p.k0 * I) * (T0 + inv(p.k0) * I)).agrees_on_slice(Op(nu), 8));
    CHECK(((T1v - p.u1 * I) * (T1v + inv(p.u1) * I)).agrees_on_slice(Op(nu), 8));
    CHECK(((T0v - p.u0 * I) * (T0v + inv(p.u0) * I)).agrees_on_slice(Op(nu), 8));
    CHECK((T1v * T1 * T0 * T0v).agrees_on_slice(inv(nu) * I, 8));
}

TEST_CASE("pbw round trip and eta values") {
    Rep<Rat> rep{RepSpec{RootType::A1, +1}, pa1()};
    PBWEngine<Rat> eng(rep);
    const Rat k = rep.params.k1;

    auto nf = eng.normal_form(dunkl_Y(rep, 1));
    CHECK(nf.coeff.size() == 1);
    CHECK(nf.coeff.count({0, 1}) == 1);
    CHECK(nf.coeff[{0, 1}].identical(RF::one()));

    auto d = dunkl_Y(rep, 1) * rho_T(rep, 1);
    auto nf2 = eng.normal_form(d);
    CHECK(eng.expand(nf2).identical(d));

    auto u = eng.normal_form(rho_U(rep));
    CHECK(u.coeff.size() == 1);
    CHECK(u.coeff.count({1, -1}) == 1);

    // eta_L(U) = antidiag(xi, xi^{-1}), eta_L(Y)(T_e) = xi T_e
    auto MU = eta_L(eng, rho_U(rep));
    CHECK(MU.m[0][0].identical(RF()));
    CHECK(MU.m[0][1].identical(RF::xi(1)));
    CHECK(MU.m[1][0].identical(RF::xi(-1)));
    CHECK(MU.m[1][1].identical(RF()));

    auto MY = eta_L(eng, dunkl_Y(rep, 1));
    CHECK(MY.m[0][0].identical(RF::xi(1)));
    CHECK(MY.m[1][0].identical(RF()));
    // eta_L(T1)(T1) = T_e + (k - k^{-1}) T1
    auto MT = eta_L(eng, rho_T(rep, 1));
    CHECK(MT.m[0][1].identical(RF::one()));
    CHECK(MT.m[1][1].identical(RF(k - scalar_traits<Rat>::inv(k))));
}

TEST_CASE("a1 cocycle words, closed forms, limits") {
    CocycleCtx<Rat> ctx(pa1());
    const Rat k = ctx.params().k1;

    // well-definedness: the two reduced words of t(pi)
    auto via_us1 = ctx.cocycle({BLetter::x(Letter::u), BLetter::x(Letter::s1)});
    auto via_s0u = ctx.cocycle({BLetter::x(Letter::s0), BLetter::x(Letter::u)});
    CHECK(via_us1.identical(via_s0u));
    CHECK(via_us1.identical(ctx.closed(CocycleCtx<Rat>::ClosedKind::C10)));
    CHECK(ctx.C(0, 1).identical(ctx.closed(CocycleCtx<Rat>::ClosedKind::C01)));
    CHECK(ctx.C(2, 0).identical(ctx.closed(CocycleCtx<Rat>::ClosedKind::C20)));
    CHECK(ctx.C(0, 2).identical(ctx.closed(CocycleCtx<Rat>::ClosedKind::C02)));

    // C^{(0)}_{1,0} = k eta_L(T1 Y^{-1} T1^{-1}), C^{(0)}_{0,1} = k eta_R((T1 Y^{-1} T1^{-1})*)
    Rep<Rat> rep = ctx.rep();
    auto lim10 = limit_x_inf(ctx.C(1, 0));
    auto tgt10 = RF(k) * ctx.eta_L_of(rho_word(rep, {Gen::T1, Gen::Yinv, Gen::T1inv}));
    CHECK(lim10.identical(tgt10));
    auto lim01 = limit_xi_zero(ctx.C(0, 1));
    auto tgt01 = RF(k) * ctx.eta_R_of(star_word(rep, {Gen::T1, Gen::Yinv, Gen::T1inv}));
    CHECK(lim01.identical(tgt01));
}

TEST_CASE("cc cocycle closed forms and limits") {
    CocycleCtx<Rat> ctx(pcc());
    const auto& p = ctx.params();
    CHECK(ctx.C(1, 0).identical(ctx.closed(CocycleCtx<Rat>::ClosedKind::C10)));
    CHECK(ctx.C(0, 1).identical(ctx.closed(CocycleCtx<Rat>::ClosedKind::C01)));

    Rep<Rat> rep = ctx.rep();
    auto lim10 = limit_x_inf(ctx.C(1, 0));
    auto tgt10 = RF(p.k1 * p.k0) * ctx.eta_L_of(rho_word(rep, {Gen::T1, Gen::Yinv, Gen::T1inv}));
    CHECK(lim10.identical(tgt10));
    auto lim01 = limit_xi_zero(ctx.C(0, 1));
    auto tgt01 = RF(p.k1 * p.u1) * ctx.eta_R_of(star_word(rep, {Gen::T1, Gen::Yinv, Gen::T1inv}));
    CHECK(lim01.identical(tgt01));
}

TEST_CASE("cocycle identity on random word pairs") {
    CocycleCtx<Rat> ctx(pcc());
    std::mt19937_64 rng(7);
    std::vector<BLetter> alphabet = {BLetter::x(Letter::s0), BLetter::x(Letter::s1),
                                     BLetter::xi(Letter::s0), BLetter::xi(Letter::s1),
                                     BLetter::iota()};
    for (int trial = 0; trial < 6; ++trial) {
        BWord w1, w2;
        std::uniform_int_distribution<int> len(0, 3), pick(0, 4);
        for (int i = 0, n = len(rng); i < n; ++i) w1.push_back(alphabet[pick(rng)]);
        for (int i = 0, n = len(rng); i < n; ++i) w2.push_back(alphabet[pick(rng)]);
        BWord cat = w1;
        cat.insert(cat.end(), w2.begin(), w2.end());
        H0Mat<Rat> rhs = ctx.cocycle(w2);
        for (auto it = w1.rbegin(); it != w1.rend(); ++it) rhs = ctx.act(*it, rhs);
        rhs = ctx.cocycle(w1) * rhs;
        CHECK(ctx.cocycle(cat).identical(rhs));
    }
}
