#include <cmath>
#include <set>

#include "isocensus/census.hpp"

namespace isocensus {

zmat surface_frobenius(endo_action_ring const & R, frobenius_data const & fd)
{
    if (!R.ss || !R.ss_frobenius)
        fail(error_code::invalid_argument, "ring has no supersingular Frobenius");
    zmat E = order_model_matrix(fd, R.ell, R.M, R.disc).entries;
    return mat_block(E, ss_action(R, *R.ss_frobenius));
}

census_report surface_census(surface_params const & P)
{
    auto pp = make_prime_power(P.q);
    if (!is_prime(P.ell) || P.ell == pp.p)
        fail(error_code::invalid_argument, "ell must be a prime different from p");
    if (P.m < 1 || P.n < 1)
        fail(error_code::invalid_argument, "need m >= 1 and n >= 1");
    auto fd = make_frobenius_data(P.t, P.q, P.n);
    if (!is_ordinary(fd))
        fail(error_code::invalid_argument, "the elliptic factor must be ordinary");
    auto ss_fd = make_frobenius_data(P.t_ss, P.q, 1);
    if (is_ordinary(ss_fd))
        fail(error_code::invalid_argument, "the second factor must be supersingular");
    i64 dk = frobenius_field_disc(fd);
    if (dk % P.ell == 0)
        fail(error_code::ramified_prime, "ell ramifies in the Frobenius field");
    if (!passes_filter(P.n, dk, P.filter))
        fail(error_code::invalid_argument, "n is excluded by the " +
                                               std::string(to_string(P.filter)) + " filter");
    i64 disc = P.disc ? P.disc : dk;

    search_space space = P.space;
    space.m = P.m;
    unsigned M = 2 * P.m + 1;
    endo_action_ring R = make_surface_ring(disc, pp.p, P.ell, M);
    qelem pi_ss = ss_frobenius_element(*R.ss, P.q, P.t_ss);
    R.ss_frobenius = qpow(*R.ss, pi_ss, P.n);
    R.trivial = P.trivial_ring;

    zmod_ring Rm(P.ell, P.m);
    zmat F = mat_reduce(surface_frobenius(R, fd), Rm.n);

    auto mod = make_symplectic_module(P.ell, P.m);
    auto lag = enumerate_lagrangians(mod);
    std::vector<submodule> stable;
    for (auto const & H : lag) {
        bool ok = true;
        for (auto const & r : H.rows())
            if (!H.contains(mat_apply(F, r, Rm.n))) {
                ok = false;
                break;
            }
        if (ok)
            stable.push_back(H);
    }

    std::vector<bool> product(stable.size());
    i64 type1 = 0, graphs = 0;
    for (std::size_t i = 0; i < stable.size(); i++) {
        auto ty = classify_type(stable[i], mod);
        product[i] = ty.tag == isotropy_type::kind::product;
        type1 += product[i];
        graphs += ty.graph.has_value();
    }

    auto cl = waterhouse_closure(stable, R, space);
    std::set<std::size_t> with_product;
    for (std::size_t i = 0; i < stable.size(); i++)
        if (product[i])
            with_product.insert(cl.class_of[i]);

    census_report r;
    r.kind = "surface";
    r.q = P.q;
    r.n = P.n;
    r.ell = P.ell;
    r.m = P.m;
    r.t = P.t;
    r.t_n = fd.t_n;
    r.count = static_cast<i64>(lag.size());
    r.stable = static_cast<i64>(stable.size());
    r.type1 = type1;
    r.type2 = r.stable - type1;
    r.N0 = static_cast<i64>(cl.classes);
    r.N1 = static_cast<i64>(with_product.size());
    r.N2 = r.N0 - r.N1;
    i64 lm = ipow(P.ell, P.m);
    r.predicted = lm * lm;
    r.exponent = approximate_exponent(r.N0 > 0 ? std::log(double(r.N0)) /
                                                     (P.n * std::log(double(P.q)))
                                               : 0.0);
    r.budget_limited = cl.budget_limited;

    auto fc = classify(frobenius_matrix{P.ell, P.m, mat_reduce(order_model_matrix(fd, P.ell, P.m, disc).entries, Rm.n)});
    r.details["t_ss"] = P.t_ss;
    r.details["disc_K"] = dk;
    r.details["disc_order"] = disc;
    r.details["working_level"] = M;
    r.details["scalar_level"] = fc.scalar_level;
    r.details["graph_planes"] = graphs;
    r.details["lagrangian_formula"] = lagrangian_count_formula(P.ell, P.m);
    r.details["bracket_n1"] = P.bracket_n1;
    r.details["bracket_n2"] = P.bracket_n2;
    r.details["budget"] = static_cast<i64>(space.budget);
    r.details["full_templates"] = space.mode == template_mode::full;
    r.details["trivial_ring"] = P.trivial_ring;

    i64 c1 = P.bracket_n1, c2 = P.bracket_n2;
    r.checks["all_stable"] = r.stable == r.count;
    r.checks["n0_split"] = r.N1 + r.N2 == r.N0 && r.N0 <= r.stable;
    r.checks["n1_bracket"] = lm <= c1 * r.N1 && r.N1 <= c1 * (lm + 1) * (lm + 1);
    r.checks["n2_bracket"] = c2 * r.N2 >= lm * lm;
    r.verdict = theorem_verdict(r).verdict;
    return r;
}

} // namespace isocensus
