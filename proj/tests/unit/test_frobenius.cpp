#include <doctest.h>

#include <random>

#include "isocensus/frobenius.hpp"

using namespace isocensus;

namespace {

zmat conj(zmat const & A, zmat const & P, i64 n)
{
    zmat Pi(2, 2);
    i64 d = invmod(mod(det2(P, n), n), n);
    Pi(0, 0) = mod(P(1, 1) * d, n);
    Pi(1, 1) = mod(P(0, 0) * d, n);
    Pi(0, 1) = mod(-P(0, 1) * d, n);
    Pi(1, 0) = mod(-P(1, 0) * d, n);
    return mat_mul(mat_mul(Pi, A, n), P, n);
}

} // namespace

TEST_CASE("companion and curve matrices")
{
    auto fd = make_frobenius_data(1, 5, 1);
    CHECK(companion_matrix(fd, 3, 1).entries == zmat::from_rows({{0, 1}, {1, 1}}));
    auto E = make_curve(make_field(5, 1), 1, 0);
    auto fm = explicit_frobenius_matrix(E, 1, 3, 1);
    i64 tr = mod(fm.entries(0, 0) + fm.entries(1, 1), 3);
    CHECK(tr == 2);
    CHECK(det2(fm.entries, 3) == 2);
    CHECK_THROWS_AS(explicit_frobenius_matrix(E, 1, 5, 1), error);
}

TEST_CASE("classification examples")
{
    CHECK(classify({2, 1, zmat::from_rows({{0, 1}, {1, 1}})}).tag == frobenius_tag::irreducible);
    auto b1 = classify({3, 1, zmat::from_rows({{1, 0}, {0, 2}})});
    CHECK(b1.tag == frobenius_tag::distinct_eigen);
    CHECK(*b1.lambda == 1);
    CHECK(*b1.mu == 2);
    auto b2 = classify({3, 2, zmat::from_rows({{4, 0}, {0, 4}})});
    CHECK(b2.tag == frobenius_tag::scalar);
    CHECK(b2.r == 2);
    auto b3 = classify({3, 2, zmat::from_rows({{1, 0}, {0, 4}})});
    CHECK(b3.tag == frobenius_tag::congruent_eigen);
    CHECK(b3.r == 1);
    CHECK(*b3.lambda == 1);
    CHECK(*b3.mu == 4);
    auto ns = classify({3, 1, zmat::from_rows({{1, 1}, {0, 1}})});
    CHECK(ns.tag == frobenius_tag::non_semisimple);
    CHECK(case_label(frobenius_tag::congruent_eigen) == "b3");
    /* 19 | delta: repeated eigenvalue of the companion matrix */
    CHECK(classify(companion_matrix(make_frobenius_data(1, 5, 1), 19, 1)).tag ==
          frobenius_tag::non_semisimple);
}

TEST_CASE("ramified prime: pi^2 = -3 + 4i is scalar only mod 4")
{
    auto fd = make_frobenius_data(2, 5, 2);
    CHECK(discriminant_level(fd, 2) == 3);
    CHECK_THROWS_AS(scalar_level(fd, 2), error);
    auto fm = order_model_matrix(fd, 2, 3);
    CHECK(fm.entries == zmat::from_rows({{5, 4}, {4, 5}}));
    auto c = classify(fm);
    CHECK(c.scalar_level == 2);
    CHECK(*c.lambda == mod(-3, 4));
    CHECK(c.tag == frobenius_tag::non_semisimple);
    CHECK(classify(order_model_matrix(fd, 2, 2)).tag == frobenius_tag::scalar);
}

TEST_CASE("scalar level")
{
    CHECK(scalar_level(make_frobenius_data(1, 5, 1), 3) == 0);
    CHECK(scalar_level(make_frobenius_data(3, 5, 12), 3) == 2);
    CHECK_THROWS_AS(scalar_level(make_frobenius_data(0, 5, 2), 3), error);
}

TEST_CASE("classification is invariant under conjugation")
{
    std::mt19937_64 rng(11);
    for (auto [ell, m] : {std::pair<i64, unsigned>{2, 3}, {3, 2}, {5, 2}, {7, 1}}) {
        i64 n = ipow(ell, m);
        for (int trial = 0; trial < 200; trial++) {
            zmat A(2, 2);
            for (auto & x : A.a)
                x = i64(rng() % n);
            if (trial % 4 == 0) {
                A(0, 1) = mod(A(0, 1) * ell, n);
                A(1, 0) = mod(A(1, 0) * ell, n);
                A(1, 1) = mod(A(0, 0) + ell * A(1, 1), n);
            }
            zmat P(2, 2);
            do
                for (auto & x : P.a)
                    x = i64(rng() % n);
            while (mod(det2(P, n), ell) == 0);
            auto c1 = classify({ell, m, A});
            auto c2 = classify({ell, m, conj(A, P, n)});
            CHECK(c1.tag == c2.tag);
            CHECK(c1.r == c2.r);
            CHECK(c1.lambda == c2.lambda);
            CHECK(c1.mu == c2.mu);
        }
    }
}

TEST_CASE("stable subgroups and horizontal counts")
{
    CHECK(stable_cyclic_subgroups({2, 1, zmat::from_rows({{0, 1}, {1, 1}})}, 1).empty());
    CHECK(stable_cyclic_subgroups({2, 1, zmat::identity(2)}, 1).size() == 3);
    auto b1 = frobenius_matrix{3, 1, zmat::from_rows({{1, 0}, {0, 2}})};
    auto st = stable_cyclic_subgroups(b1, 1);
    CHECK(st.size() == 2);
    CHECK(horizontal_count(classify(b1)) == 2);
    CHECK(horizontal_count(classify({3, 1, zmat::identity(2)})) == 1);
    CHECK(horizontal_count(classify({2, 1, zmat::from_rows({{0, 1}, {1, 1}})})) == 0);
    CHECK_THROWS_AS(horizontal_count(classify({3, 1, zmat::from_rows({{1, 1}, {0, 1}})})),
                    error);
}

TEST_CASE("b1 kernels are complementary")
{
    /* eigenvalues 2 and 8 mod 25 after conjugation */
    i64 n = 25;
    zmat D = zmat::from_rows({{2, 0}, {0, 8}});
    zmat P = zmat::from_rows({{1, 3}, {2, 5}});
    zmat A = conj(D, P, n);
    auto c = classify({5, 2, A});
    REQUIRE(c.tag == frobenius_tag::distinct_eigen);
    zmod_ring R(5, 2);
    auto K1 = kernel(mat_add(A, mat_scale(zmat::identity(2), -*c.lambda, n), n), R);
    auto K2 = kernel(mat_add(A, mat_scale(zmat::identity(2), -*c.mu, n), n), R);
    CHECK(K1.log_size() == 2);
    CHECK(K2.log_size() == 2);
    CHECK(intersect(K1, K2).log_size() == 0);
    CHECK(sum(K1, K2) == submodule::whole(R, 2));
    auto st = stable_cyclic_subgroups({5, 2, A}, 2);
    REQUIRE(st.size() == 2);
    CHECK(((st[0] == K1 && st[1] == K2) || (st[0] == K2 && st[1] == K1)));
}

TEST_CASE("unramified part and growth report")
{
    CHECK(unramified_part(make_frobenius_data(2, 5, 2), -4) == 1);
    CHECK(unramified_part(make_frobenius_data(1, 5, 1), -19) == 1);
    CHECK(unramified_part(make_frobenius_data(2, 5, 4), -4) == 3);
    CHECK(ramified_growth_report(2, 5, -4, 3, 1, n_filter::all).empty());
    auto rows = ramified_growth_report(2, 5, -4, 1, 12, n_filter::coprime);
    CHECK(rows.size() == 6);
    for (auto const & r : rows) {
        CHECK(r.ell == 2);
        CHECK(r.n % 2 == 1);
        CHECK(r.valuation <= 4);
    }
    CHECK(passes_filter(6, -4, n_filter::non_coprime));
    CHECK_FALSE(passes_filter(6, -12, n_filter::coprime));
    CHECK(parse_n_filter("non-coprime") == n_filter::non_coprime);
    CHECK_THROWS_AS(parse_n_filter("odd"), error);
}
