#include <doctest.h>

#include <set>

#include "isocensus/census.hpp"

using namespace isocensus;

TEST_CASE("ordinary action ring")
{
    auto R = make_ordinary_ring(-11, 3, 3);
    CHECK(R.rank() == 2);
    /* w^2 = D w - N(w) */
    zmat w2 = mat_mul(R.omega, R.omega, R.ring.n);
    zmat rhs = mat_add(mat_scale(R.omega, -11, R.ring.n),
                       mat_scale(zmat::identity(2), -33, R.ring.n), R.ring.n);
    CHECK(w2 == rhs);
    for (auto const & e : ordinary_elements(-11, 3, 1, false))
        CHECK(quadratic_norm(-11, e[0], e[1]) == 3);
    CHECK(ordinary_elements(-11, 3, 1, true).size() == 2);
    CHECK_THROWS_AS(make_ordinary_ring(-5, 3, 2), error);
}

TEST_CASE("supersingular block is a ring action")
{
    auto R = make_surface_ring(-11, 5, 3, 3);
    REQUIRE(R.ss);
    i64 n = R.ring.n;
    auto const & O = *R.ss;
    for (int a = 0; a < 4; a++)
        for (int b = 0; b < 4; b++) {
            qelem x{}, y{};
            x[a] = 1;
            y[b] = 1;
            CHECK(ss_action(R, qmul(O, x, y)) ==
                  mat_mul(ss_action(R, x), ss_action(R, y), n));
        }
    qelem pi = ss_frobenius_element(O, 5, 0);
    CHECK(qnorm(O, pi) == 5);
    CHECK(qtrace(O, pi) == 0);
    /* pi^2 = -5 */
    CHECK(qpow(O, pi, 2) == qelem{-5, 0, 0, 0});
    CHECK(ss_action(R, qpow(O, pi, 2)) == mat_scale(zmat::identity(2), -5, n));
    for (auto const & b : ss_elements(O, 3, 1, false))
        CHECK(qnorm(O, b) == 3);
}

TEST_CASE("templates")
{
    auto standard = make_templates({1, template_mode::standard, 64}, true);
    auto full = make_templates({1, template_mode::full, 64}, true);
    CHECK(standard.size() <= full.size());
    for (auto const & t : full) {
        CHECK(2 * t.c_o + t.j_o + 2 * t.c_s + t.j_s == 4 * t.k);
        CHECK(t.k <= 1);
    }
    for (auto const & t : make_templates({2, template_mode::standard, 64}, false))
        CHECK(t.c_s + t.j_s == 0);
    CHECK(parse_template_mode("full") == template_mode::full);
    CHECK_THROWS_AS(parse_template_mode("fast"), error);
}

TEST_CASE("Waterhouse relation")
{
    auto R = make_surface_ring(-11, 5, 2, 3);
    search_space S{1, template_mode::full, 4096};
    auto M = make_symplectic_module(2, 1);
    auto lags = enumerate_lagrangians(M);
    auto same = waterhouse_equivalent(lags[0], lags[0], R, S);
    CHECK(same.equivalent);
    REQUIRE(same.witness);
    CHECK(same.witness->k == 0);
    CHECK(same.witness->rho == zmat::identity(4));

    /* images under automorphisms are related */
    i64 n2 = 2;
    auto units = representations(R.ss->norm_form, 1);
    CHECK(units.size() >= 2);
    for (auto const & u : units) {
        zmat g = mat_reduce(mat_block(mat_scale(zmat::identity(2), -1, R.ring.n), ss_action(R, u)), n2);
        for (auto const & H : lags) {
            std::vector<zvec> gens;
            for (auto const & r : H.rows())
                gens.push_back(mat_apply(g, r, n2));
            submodule gH(H.ring(), 4, gens);
            CHECK(waterhouse_equivalent(gH, H, R, S).equivalent);
        }
    }

    /* a relation found with the standard templates is also found with the full set */
    search_space P{1, template_mode::standard, 4096};
    for (std::size_t i = 0; i < lags.size(); i++)
        for (std::size_t j = i + 1; j < lags.size(); j += 3)
            if (waterhouse_equivalent(lags[i], lags[j], R, P).equivalent)
                CHECK(waterhouse_equivalent(lags[i], lags[j], R, S).equivalent);

    /* two non-product planes that full search separates */
    auto cl = waterhouse_closure(lags, R, S);
    std::set<std::size_t> graph_classes;
    std::vector<std::size_t> reps;
    for (std::size_t i = 0; i < lags.size(); i++)
        if (classify_type(lags[i], M).tag == isotropy_type::kind::non_product &&
            graph_classes.insert(cl.class_of[i]).second)
            reps.push_back(i);
    REQUIRE(reps.size() >= 2);
    CHECK_FALSE(waterhouse_equivalent(lags[reps[0]], lags[reps[1]], R, S).equivalent);
}

TEST_CASE("closure respects the relation and the budget")
{
    auto R = make_surface_ring(-11, 5, 2, 3);
    auto lags = enumerate_lagrangians(make_symplectic_module(2, 1));
    auto big = waterhouse_closure(lags, R, {1, template_mode::standard, 4096});
    CHECK_FALSE(big.budget_limited);
    CHECK(big.classes == 5);
    for (std::size_t i = 0; i < lags.size(); i++)
        CHECK(big.class_of[i] <= i);
    /* truncated element lists can only merge less */
    auto small = waterhouse_closure(lags, R, {1, template_mode::standard, 1});
    CHECK(small.budget_limited);
    CHECK(small.classes >= big.classes);
    for (std::size_t i = 0; i < lags.size(); i++)
        for (std::size_t j = 0; j < lags.size(); j++)
            if (small.class_of[i] == small.class_of[j])
                CHECK(big.class_of[i] == big.class_of[j]);
    auto T = make_trivial_ring(2, 3, 4);
    CHECK(waterhouse_closure(lags, T, {1, template_mode::standard, 4096}).classes == lags.size());
}

TEST_CASE("surface census")
{
    surface_params P;
    P.ell = 2;
    P.m = 1;
    auto r = surface_census(P);
    CHECK(r.kind == "surface");
    CHECK(r.count == 15);
    CHECK(r.type1 == 9);
    CHECK(r.type2 == 6);
    CHECK(r.stable == 15);
    CHECK(r.N0 == 5);
    CHECK(r.N1 + r.N2 == r.N0);
    CHECK(r.verdict == "PASS");
    for (auto const & [k, v] : r.checks)
        CHECK_MESSAGE(v, k);
    P.trivial_ring = true;
    auto t = surface_census(P);
    CHECK(t.N0 == t.stable);
    P.trivial_ring = false;
    P.n = 1;
    auto s = surface_census(P);
    CHECK(s.stable < s.count);
}

TEST_CASE("elliptic curve census")
{
    CHECK(geometrically_isogenous(3, -3, 5));
    CHECK_FALSE(geometrically_isogenous(3, 1, 5));
    auto classes = curve_classes(5, 1);
    /* orbits of (u^4 a, u^6 b) cover the q^2 - q nonsingular pairs */
    i64 total = 0;
    for (auto const & c : classes)
        total += (5 - 1) / c.aut;
    CHECK(total == 20);
    ec_params P;
    P.q = 5;
    P.n = 2;
    P.t = 3;
    auto r = ec_census(P);
    CHECK(r.N0 == 6);
    CHECK(r.predicted == 6);
    CHECK(r.verdict == "PASS");
    CHECK(r.checks.at("contains_reference"));
    CHECK(r.checks.at("twist_counted"));
    CHECK(r.N0 >= 1);
}

TEST_CASE("Deuring table")
{
    for (i64 q : {5, 7}) {
        for (auto const & row : deuring_table(q)) {
            CHECK(row.weighted == row.hurwitz);
            CHECK(row.classes == row.kronecker);
        }
    }
    auto t2 = deuring_table(5);
    bool found = false;
    for (auto const & row : t2)
        if (row.t == 2) {
            found = true;
            CHECK(row.hurwitz == rational(3, 2));
        }
    CHECK(found);
}

TEST_CASE("predictions")
{
    auto p = predicted_ec_size(make_frobenius_data(1, 5, 1));
    CHECK(p.unramified == 1);
    CHECK(p.class_number == 1);
    auto g = predicted_ec_size(make_frobenius_data(2, 5, 2));
    CHECK(g.unramified == 1);
    CHECK_THROWS_AS(predicted_ec_size(make_frobenius_data(0, 5, 2)), error);
}

TEST_CASE("verdicts")
{
    CHECK(conjectured_exponent("ordinary-times-supersingular") == rational(1));
    CHECK(conjectured_exponent("ordinary-ec") == rational(1, 2));
    CHECK_THROWS_AS(conjectured_exponent("abelian-3fold"), error);
    census_report r;
    r.kind = "ec";
    r.N0 = 1;
    r.exponent = approximate_exponent(0.0);
    CHECK(theorem_verdict(r).verdict == "INCONCLUSIVE");
    r.exponent = approximate_exponent(0.55);
    CHECK(theorem_verdict(r).verdict == "PASS");
    CHECK(theorem_verdict(r, 0.01).verdict == "INCONCLUSIVE");
    CHECK(approximate_exponent(0.5) == exponent_value{1, 2, 1000000});
    r.kind = "threefold";
    CHECK_THROWS_AS(theorem_verdict(r), error);
}
