#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "isocensus/census.hpp"
#include "isocensus/parallel.hpp"

namespace isocensus {

std::string_view to_string(template_mode t)
{
    return t == template_mode::standard ? "standard" : "full";
}

template_mode parse_template_mode(std::string_view s)
{
    if (s == "standard")
        return template_mode::standard;
    if (s == "full")
        return template_mode::full;
    fail(error_code::invalid_argument, "unknown template mode: " + std::string(s));
}

std::vector<template_entry> make_templates(search_space const & S, bool surface)
{
    std::vector<template_entry> out;
    unsigned m = S.m;
    for (unsigned k = 0; k <= m; k++) {
        if (!surface) {
            for (unsigned i = 0; i <= k; i++)
                out.push_back({k, k - i, 2 * i, 0, 0});
            continue;
        }
        if (S.mode == template_mode::standard) {
            /* kernel (ell^(k+i), ell^(k-i)) per block; below k = m one block is scalar */
            for (unsigned io = 0; io <= k; io++)
                for (unsigned is = 0; is <= k; is++) {
                    if (k < m && std::min(io, is) != 0)
                        continue;
                    out.push_back({k, k - io, 2 * io, k - is, 2 * is});
                }
            continue;
        }
        /* every degree split 2c_o + j_o + 2c_s + j_s = 4k with kernels inside A[ell^(k+m)] */
        for (unsigned co = 0; co <= k + m; co++)
            for (unsigned jo = 0; co + jo <= k + m; jo++)
                for (unsigned cs = 0; cs <= k + m; cs++) {
                    unsigned used = 2 * co + jo + 2 * cs;
                    if (used > 4 * k)
                        continue;
                    unsigned js = 4 * k - used;
                    if (cs + js > k + m)
                        continue;
                    out.push_back({k, co, jo, cs, js});
                }
    }
    return out;
}

namespace {

struct rho_entry {
    template_entry shape;
    std::array<i64, 2> ord;
    qelem ss;
    zmat rho;
};

struct rho_lists {
    std::vector<std::vector<rho_entry>> by_k;
    bool limited = false;
};

template <typename T>
void truncate(std::vector<T> & v, std::size_t budget, bool & limited)
{
    if (v.size() > budget) {
        v.resize(budget);
        limited = true;
    }
}

rho_lists build_lists(endo_action_ring const & R, search_space const & S, bool reduced)
{
    rho_lists L;
    L.by_k.resize(S.m + 1);
    unsigned rank = R.rank();
    i64 n = R.ring.n;
    if (R.trivial) {
        L.by_k[0].push_back({{0, 0, 0, 0, 0}, {1, 0}, {1, 0, 0, 0}, zmat::identity(rank)});
        return L;
    }
    std::vector<std::set<std::vector<i64>>> seen(S.m + 1);
    for (auto const & tp : make_templates(S, rank == 4)) {
        bool red = reduced && tp.k > 0;
        auto ords = ordinary_elements(R.disc, R.ell, tp.j_o, red);
        truncate(ords, S.budget, L.limited);
        std::vector<qelem> sss{{1, 0, 0, 0}};
        if (rank == 4) {
            sss.clear();
            for (auto const & b : ss_elements(*R.ss, R.ell, tp.j_s, red)) {
                if (R.ss_frobenius &&
                    qmul(*R.ss, b, *R.ss_frobenius) != qmul(*R.ss, *R.ss_frobenius, b))
                    continue;
                sss.push_back(b);
            }
            truncate(sss, S.budget, L.limited);
        }
        i64 so = ipow(R.ell, tp.c_o) % n, sc = ipow(R.ell, tp.c_s) % n;
        for (auto const & a : ords) {
            zmat A = mat_scale(ordinary_action(R, a[0], a[1]), so, n);
            for (auto const & b : sss) {
                zmat rho = rank == 4 ? mat_block(A, mat_scale(ss_action(R, b), sc, n)) : A;
                if (!seen[tp.k].insert(rho.a).second)
                    continue;
                L.by_k[tp.k].push_back({tp, a, b, std::move(rho)});
            }
        }
    }
    return L;
}

void check_input(submodule const & H, endo_action_ring const & R, search_space const & S)
{
    if (H.cols() != R.rank() || H.ring().ell != R.ell || H.ring().e != S.m)
        fail(error_code::invalid_argument, "subgroup does not match the ring and level");
    if (R.M < 2 * S.m)
        fail(error_code::invalid_argument, "working level must be at least 2m");
}

bool inside_level(submodule const & H, unsigned m)
{
    i64 s = ipow(H.ring().ell, H.ring().e - m);
    for (auto const & r : H.rows())
        for (i64 x : r)
            if (x % s)
                return false;
    return true;
}

std::size_t find_root(std::vector<std::size_t> & parent, std::size_t x)
{
    while (parent[x] != x) {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    return x;
}

} // namespace

waterhouse_result waterhouse_equivalent(submodule const & H1, submodule const & H2,
                                        endo_action_ring const & R, search_space const & S)
{
    check_input(H1, R, S);
    check_input(H2, R, S);
    waterhouse_result res;
    if (H1 == H2) {
        res.equivalent = true;
        res.witness = waterhouse_witness{0, {0, 0, 0, 0, 0}, {1, 0}, {1, 0, 0, 0},
                                         zmat::identity(R.rank())};
        return res;
    }
    auto L = build_lists(R, S, false);
    submodule target = lift_level(H1, R.M);
    submodule base = lift_level(H2, R.M);
    for (unsigned k = 0; k <= S.m; k++) {
        submodule K = divide_by_power(base, k);
        for (auto const & e : L.by_k[k]) {
            if (image(e.rho, K) == target) {
                res.equivalent = true;
                res.witness = waterhouse_witness{k, e.shape, e.ord, e.ss, e.rho};
                return res;
            }
        }
    }
    if (L.limited)
        fail(error_code::budget_exhausted, "no witness within the truncated search space");
    return res;
}

closure_result waterhouse_closure(std::vector<submodule> const & planes,
                                  endo_action_ring const & R, search_space const & S)
{
    closure_result out;
    std::size_t N = planes.size();
    out.class_of.assign(N, 0);
    if (N == 0)
        return out;
    for (auto const & H : planes)
        check_input(H, R, S);
    std::map<submodule, std::size_t> index;
    for (std::size_t i = 0; i < N; i++)
        index.emplace(planes[i], i);

    auto L = build_lists(R, S, true);
    out.budget_limited = L.limited;

    using edge_list = std::vector<std::pair<std::size_t, std::size_t>>;
    auto parts = parallel_chunks<edge_list>(N, [&](std::size_t lo, std::size_t hi) {
        edge_list edges;
        for (std::size_t h = lo; h < hi; h++) {
            submodule base = lift_level(planes[h], R.M);
            for (unsigned k = 0; k <= S.m; k++) {
                submodule K = divide_by_power(base, k);
                for (auto const & e : L.by_k[k]) {
                    submodule img = image(e.rho, K);
                    if (img.log_size() != planes[h].log_size() || !inside_level(img, S.m))
                        continue;
                    auto it = index.find(lower_level(img, S.m));
                    if (it != index.end() && it->second != h)
                        edges.emplace_back(h, it->second);
                }
            }
        }
        return edges;
    });

    std::vector<std::size_t> parent(N);
    std::iota(parent.begin(), parent.end(), 0);
    for (auto const & part : parts)
        for (auto [a, b] : part) {
            std::size_t ra = find_root(parent, a), rb = find_root(parent, b);
            if (ra != rb)
                parent[std::max(ra, rb)] = std::min(ra, rb);
        }
    std::map<std::size_t, std::size_t> label;
    for (std::size_t i = 0; i < N; i++) {
        std::size_t r = find_root(parent, i);
        auto it = label.try_emplace(r, label.size()).first;
        out.class_of[i] = it->second;
    }
    out.classes = label.size();
    return out;
}

} // namespace isocensus
