#include <doctest.h>

#include <algorithm>
#include <random>

#include "helpers.hpp"
#include "vgb/elimination.hpp"
#include "vgb/errors.hpp"
#include "vgb/fourier_motzkin.hpp"
#include "vgb/veronese.hpp"

using namespace vgb;
using vgb::test::parse_all;
using vgb::test::print_all;
using vgb::test::var;

TEST_CASE("normal_form") {
    auto R = Ring::veronese(2, 2);
    auto order = TermOrder::gamma(2, 2);
    auto G = build_g_gamma(2, 2);
    auto f = parse_polynomial("x[1,1]^2", R);
    CHECK(normal_form(f, G, order) == f);
    CHECK(normal_form(G[0] * f, G, order).is_zero());
    CHECK(normal_form(Polynomial(R, order), G, order).is_zero());
    CHECK(to_string(normal_form(parse_polynomial("x[2,0]*x[0,2] + x[1,1]", R), G, order)) == "x[1,1]^2 + x[1,1]");
    CHECK_THROWS_AS((normal_form(parse_polynomial("y1", Ring::base(2)), G, order)), RingMismatch);
}

TEST_CASE("s_polynomial") {
    auto R = Ring::veronese(2, 3);
    auto order = TermOrder::gamma(2, 3);
    auto G = build_g_gamma(2, 3);
    auto f = parse_polynomial("x[3,0]*x[1,2] - x[2,1]^2", R);
    auto g = parse_polynomial("x[1,2]^2 - x[2,1]*x[0,3]", R);
    auto sp = s_polynomial(f, g, order);
    CHECK_FALSE(sp.is_zero());
    CHECK(normal_form(sp, G, order).is_zero());
    CHECK(s_polynomial(f, f, order).is_zero());

    auto S = Ring::base(3);
    auto a = parse_polynomial("y1 - y2", S);
    auto b = parse_polynomial("y3^2 - y2*y3", S);
    auto coprime = s_polynomial(a, b, S->default_order());
    CHECK(normal_form(coprime, std::vector<Polynomial>{a, b}, S->default_order()).is_zero());
}

TEST_CASE("buchberger basics") {
    auto S = Ring::base(3);
    auto order = S->default_order();
    CHECK(buchberger(std::vector<Polynomial>{}, order).basis.empty());
    auto principal = buchberger(std::vector<Polynomial>{parse_polynomial("2*y1^2 - 4*y2*y3", S)}, order);
    CHECK(print_all(principal.basis) == std::vector<std::string>{"y1^2 - 2*y2*y3"});
    auto twisted = parse_all({"y1*y3 - y2^2", "y2*y3 - y1*y2", "y3^2 - y1^2"}, S, order);
    auto res = buchberger(twisted, order);
    for (const auto& g : res.basis) CHECK(g.leading_coefficient() == 1);
    CHECK(is_groebner_basis(res.basis, order).is_groebner);
    CHECK(reduce_basis(res.basis, order) == res.basis);
    for (std::size_t i = 1; i < res.basis.size(); ++i)
        CHECK(order.less(res.basis[i - 1].leading_monomial(), res.basis[i].leading_monomial()));
}

TEST_CASE("buchberger on the kernel presentation for s=2, d=2") {
    KernelOracle oracle(2, 2);
    CHECK(oracle.kernel_basis() == build_g_gamma(2, 2));
}

TEST_CASE("is_groebner_basis") {
    auto R = Ring::veronese(2, 3);
    auto order = TermOrder::gamma(2, 3);
    CHECK(is_groebner_basis(build_g_gamma(2, 3), order).is_groebner);

    auto R2 = Ring::veronese(2, 2);
    // x[1,1] sits at position 0, so plain lex makes it the largest variable
    auto flipped = TermOrder::lex(3);
    auto single = parse_polynomial("x[2,0]*x[0,2] - x[1,1]^2", R2, flipped);
    CHECK(single.leading_monomial() == var(R2, {1, 1}) + var(R2, {1, 1}));
    CHECK(is_groebner_basis(std::vector<Polynomial>{single}, flipped).is_groebner);

    // drop one element of a reduced basis with three elements
    auto G = build_g_gamma(2, 3);
    auto middle = var(R, {3, 0}) + var(R, {0, 3});
    std::vector<Polynomial> partial;
    std::copy_if(G.begin(), G.end(), std::back_inserter(partial),
                 [&](const Polynomial& g) { return g.leading_monomial() != middle; });
    REQUIRE(partial.size() == 2);
    auto cert = is_groebner_basis(partial, order);
    CHECK_FALSE(cert.is_groebner);
    REQUIRE(cert.remainder.has_value());
    CHECK_FALSE(cert.remainder->is_zero());
}

TEST_CASE("budget cap is a clean error") {
    auto S = Ring::base(3);
    auto gens = parse_all({"y1*y3 - y2^2", "y2*y3 - y1*y2", "y3^2 - y1^2"}, S, S->default_order());
    GroebnerOptions tiny;
    tiny.spair_cap = 1;
    CHECK_THROWS_AS((buchberger(gens, S->default_order(), tiny)), BudgetExceeded);
    GroebnerOptions bits;
    bits.coefficient_bit_cap = 4;
    auto big = parse_all({"y1^2 - 1000*y2*y3", "y1*y2 - 999*y3^2"}, S, S->default_order());
    CHECK_THROWS_AS((buchberger(big, S->default_order(), bits)), BudgetExceeded);
}

TEST_CASE("eliminate t from <y1 - t, y2 - t^2>") {
    auto ring = Ring::custom({"t", "y1", "y2"});
    auto order = TermOrder::elimination(3, {0}, TermOrder::grevlex(3, {1, 2, 0}));
    Ideal I(ring, parse_all({"y1 - t", "y2 - t^2"}, ring, order));
    auto back = Ring::base(2);
    auto E = eliminate(I, order, std::vector<std::size_t>{0}, back, back->default_order());
    CHECK(print_all(E.groebner_basis(back->default_order())) == std::vector<std::string>{"y1^2 - y2"});

    CHECK_THROWS_AS((eliminate(I, TermOrder::grevlex(3), std::vector<std::size_t>{0}, back, back->default_order())),
                    ConfigurationError);
}

TEST_CASE("eliminating nothing is the identity") {
    auto S = Ring::base(3);
    auto order = S->default_order();
    Ideal I(S, parse_all({"y1*y3 - y2^2", "y1^2 - y2*y3"}, S, order));
    auto E = eliminate(I, order, std::vector<std::size_t>{}, S, order);
    CHECK(E.groebner_basis(order) == I.groebner_basis(order));
}

TEST_CASE("initial ideals") {
    auto R = Ring::veronese(2, 3);
    KernelOracle oracle(2, 3);
    auto in = lead_ideal(R, oracle.kernel_basis());
    MonomialIdeal want(R, {var(R, {3, 0}) + var(R, {1, 2}), var(R, {3, 0}) + var(R, {0, 3}),
                           var(R, {1, 2}) + var(R, {1, 2})});
    CHECK(in == want);

    auto S = Ring::base(3);
    Ideal I(S, {parse_polynomial("y1^2 - y2*y3", S)});
    std::vector<std::int64_t> w{2, 1, 1};
    auto in_w = initial_ideal(I, w, S->default_order());
    REQUIRE(in_w.is_monomial);
    CHECK(*in_w.monomial == MonomialIdeal(S, {{2, 0, 0}}));
    CHECK(initial_ideal(Ideal(S), S->default_order()).is_zero());

    std::vector<std::int64_t> flat{1, 1, 1};
    CHECK_FALSE(initial_ideal(I, flat, S->default_order()).is_monomial);
}

TEST_CASE("find_weight_vector") {
    auto S = Ring::base(3);
    auto lex = TermOrder::lex(3);
    Ideal I(S, {parse_polynomial("y1^2 - y2*y3", S, lex)});
    auto w = find_weight_vector(I, lex);
    CHECK(2 * w[0] > w[1] + w[2]);

    Ideal mono(S, {parse_polynomial("y1*y2", S)});
    CHECK(find_weight_vector(mono, S->default_order()) == std::vector<std::int64_t>{1, 1, 1});

    auto S2 = Ring::base(2);
    Ideal lin(S2, {parse_polynomial("y1 - y2", S2, TermOrder::lex(2))});
    auto w2 = find_weight_vector(lin, TermOrder::lex(2));
    CHECK(w2[0] > w2[1]);

    auto grevlex = S->default_order();
    Ideal twisted(S, parse_all({"y1*y3 - y2^2", "y2*y3 - y1*y2", "y3^2 - y1^2"}, S, grevlex));
    auto w3 = find_weight_vector(twisted, grevlex);
    auto in = initial_ideal(twisted, w3, grevlex);
    REQUIRE(in.is_monomial);
    CHECK(*in.monomial == initial_ideal(twisted, grevlex));
}

TEST_CASE("fourier_motzkin") {
    // x - y >= 1, y >= 1
    std::vector<LinearInequality> sys{{{1, -1}, 1}, {{0, 1}, 1}};
    auto sol = fourier_motzkin_solve(sys, 2);
    REQUIRE(sol.has_value());
    CHECK((*sol)[0] - (*sol)[1] >= 1);
    CHECK((*sol)[1] >= 1);
    // x >= 1, -x >= 0
    std::vector<LinearInequality> bad{{{1}, 1}, {{-1}, 0}};
    CHECK_FALSE(fourier_motzkin_solve(bad, 1).has_value());
}

TEST_CASE("monomial ideal data") {
    auto S2 = Ring::base(2);
    MonomialIdeal a(S2, {{2, 2}});
    CHECK(a.delta() == 4);
    CHECK(a.max_exponent() == 2);
    MonomialIdeal b(S2, {{1, 0}, {0, 3}, {2, 1}});
    CHECK(b.generators().size() == 2);
    CHECK(b.delta() == 3);
    CHECK(b.max_exponent() == 3);
    auto S3 = Ring::base(3);
    MonomialIdeal c(S3, {{1, 1, 0}, {1, 0, 1}});
    CHECK(c.delta() == 2);
    CHECK(c.max_exponent() == 1);
    CHECK(c.is_squarefree());
    CHECK_THROWS_AS((MonomialIdeal(S2).delta()), UndefinedInput);
    CHECK_THROWS_AS((MonomialIdeal(S2).max_exponent()), UndefinedInput);
}

TEST_CASE("ideal cache and membership") {
    auto S = Ring::base(3);
    auto order = S->default_order();
    Ideal I(S, parse_all({"y1*y3 - y2^2", "y2*y3 - y1*y2"}, S, order));
    auto f = parse_polynomial("y1*y3 - y2^2", S) * parse_polynomial("y1 + 3*y2", S);
    CHECK(I.contains(f));
    CHECK_FALSE(I.contains(parse_polynomial("y1", S)));
    const auto& first = I.groebner_basis(order);
    CHECK(&first == &I.groebner_basis(order));
    Ideal copy = I;
    CHECK(copy.same_ideal(I, order));
}

TEST_CASE("reduced basis is independent of generator order") {
    auto S = Ring::base(3);
    auto order = S->default_order();
    auto gens = parse_all({"y1*y3 - y2^2", "y2*y3 - y1*y2", "y3^2 - y1^2", "y1^3 - y2*y3^2"}, S, order);
    auto base = buchberger(gens, order).basis;
    std::mt19937 rng(7);
    for (int i = 0; i < 10; ++i) {
        std::shuffle(gens.begin(), gens.end(), rng);
        CHECK(buchberger(gens, order).basis == base);
    }
}
