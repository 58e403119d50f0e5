#include <set>
#include <string>

#include "isocensus/parallel.hpp"
#include "isocensus/symplectic.hpp"

namespace isocensus {

symplectic_module make_symplectic_module(i64 ell, unsigned m)
{
    if (!is_prime(ell))
        fail(error_code::invalid_argument, "ell must be prime");
    if (m < 1)
        fail(error_code::invalid_argument, "level m must be at least 1");
    symplectic_module M;
    M.ell = ell;
    M.m = m;
    M.ring = zmod_ring(ell, m);
    M.gram = zmat(4, 4);
    M.gram(0, 1) = 1;
    M.gram(1, 0) = M.ring.n - 1;
    M.gram(2, 3) = 1;
    M.gram(3, 2) = M.ring.n - 1;
    return M;
}

i64 pairing(zvec const & x, zvec const & y, symplectic_module const & M)
{
    i64 n = M.ring.n;
    i64 s = mulmod(x[0], y[1], n) - mulmod(x[1], y[0], n) + mulmod(x[2], y[3], n) -
            mulmod(x[3], y[2], n);
    return mod(s, n);
}

submodule orthogonal_complement(submodule const & H, symplectic_module const & M)
{
    /* rows h^T G; the complement is the kernel of y -> (h^T G y)_h */
    std::vector<zvec> rows;
    for (auto const & h : H.rows()) {
        zvec r(4, 0);
        for (unsigned j = 0; j < 4; j++) {
            i64 s = 0;
            for (unsigned i = 0; i < 4; i++)
                s += h[i] * M.gram(i, j);
            r[j] = mod(s, M.ring.n);
        }
        rows.push_back(r);
    }
    if (rows.empty())
        return submodule::whole(M.ring, 4);
    return kernel(zmat::from_rows(rows), M.ring);
}

bool is_isotropic(submodule const & H, symplectic_module const & M)
{
    auto const & r = H.rows();
    for (std::size_t i = 0; i < r.size(); i++)
        for (std::size_t j = i + 1; j < r.size(); j++)
            if (pairing(r[i], r[j], M) != 0)
                return false;
    return true;
}

i64 lagrangian_count_formula(i64 ell, unsigned m)
{
    return ipow(ell, 3 * m) + ipow(ell, 3 * m - 1) + ipow(ell, 3 * m - 2) + ipow(ell, 3 * m - 3);
}

std::vector<submodule> cyclic_subgroups(i64 ell, unsigned m, unsigned rank, unsigned j)
{
    zmod_ring R(ell, m);
    std::vector<submodule> out;
    if (j == 0) {
        out.push_back(submodule::zero(R, rank));
        return out;
    }
    if (j > m)
        fail(error_code::invalid_argument, "subgroup order exceeds the module exponent");
    i64 nj = ipow(ell, j);
    i64 s = ipow(ell, m - j);
    for (unsigned lead = 0; lead < rank; lead++) {
        /* coordinates before lead in ell*Z/ell^j, after lead free mod ell^j */
        i64 before = nj / ell, after = nj;
        i64 total = ipow(before, lead) * ipow(after, rank - 1 - lead);
        for (i64 idx = 0; idx < total; idx++) {
            zvec v(rank, 0);
            i64 x = idx;
            for (unsigned c = 0; c < rank; c++) {
                if (c < lead) {
                    v[c] = (x % before) * ell;
                    x /= before;
                } else if (c == lead) {
                    v[c] = 1;
                } else {
                    v[c] = x % after;
                    x /= after;
                }
            }
            for (auto & y : v)
                y = mulmod(y, s, R.n);
            out.emplace_back(R, rank, std::vector<zvec>{v});
        }
    }
    return out;
}

namespace {

void check_bound(symplectic_module const & M, i64 bound)
{
    i128 size = 1;
    for (unsigned i = 0; i < 4; i++)
        size *= M.ring.n;
    if (size > bound)
        fail(error_code::bound_exceeded,
             "ell^(4m) = " + std::to_string(static_cast<long long>(size)) +
                 " exceeds the enumeration bound");
}

/* every element of H, each exactly once */
std::vector<zvec> elements(submodule const & H)
{
    std::vector<zvec> out{zvec(H.cols(), 0)};
    i64 n = H.ring().n;
    for (std::size_t i = 0; i < H.rows().size(); i++) {
        auto const & r = H.rows()[i];
        i64 ord = n / r[H.pivots()[i]];
        std::vector<zvec> next;
        next.reserve(out.size() * static_cast<std::size_t>(ord));
        for (auto const & v : out)
            for (i64 a = 0; a < ord; a++) {
                zvec w = v;
                for (std::size_t c = 0; c < w.size(); c++)
                    w[c] = mod(w[c] + a * r[c], n);
                next.push_back(std::move(w));
            }
        out = std::move(next);
    }
    return out;
}

} // namespace

std::vector<submodule> enumerate_isotropic_lines(symplectic_module const & M, i64 bound)
{
    check_bound(M, bound);
    /* the pairing is alternating, so every line is isotropic */
    return cyclic_subgroups(M.ell, M.m, 4, M.m);
}

std::vector<submodule> enumerate_lagrangians(symplectic_module const & M, i64 bound)
{
    check_bound(M, bound);
    auto lines = cyclic_subgroups(M.ell, M.m, 4, M.m);
    unsigned want = 2 * M.m;
    auto parts = parallel_chunks<std::set<submodule>>(
        lines.size(), [&](std::size_t lo, std::size_t hi) {
            std::set<submodule> found;
            for (std::size_t i = lo; i < hi; i++) {
                auto const & L = lines[i];
                zvec v = L.rows()[0];
                for (auto const & w : elements(orthogonal_complement(L, M))) {
                    if (L.contains(w))
                        continue;
                    submodule H(M.ring, 4, {v, w});
                    if (H.log_size() == want && H.shape() == std::vector<unsigned>{M.m, M.m})
                        found.insert(std::move(H));
                }
            }
            return found;
        });
    std::set<submodule> all;
    for (auto & s : parts)
        all.merge(s);
    return {all.begin(), all.end()};
}

isotropy_type classify_type(submodule const & H, symplectic_module const & M)
{
    isotropy_type t;
    zvec e1{1, 0, 0, 0}, e2{0, 1, 0, 0}, f1{0, 0, 1, 0}, f2{0, 0, 0, 1};
    submodule Eb(M.ring, 4, {e1, e2}), Sb(M.ring, 4, {f1, f2});
    submodule he = intersect(H, Eb), hs = intersect(H, Sb);
    if (he.log_size() + hs.log_size() == H.log_size()) {
        t.tag = isotropy_type::kind::product;
        t.line_e = permute(he, {0, 1});
        t.line_ss = permute(hs, {2, 3});
        return t;
    }
    t.tag = isotropy_type::kind::non_product;
    if (he.log_size() == 0 && hs.log_size() == 0 && H.log_size() == 2 * M.m) {
        auto const & r = H.rows();
        zmat G(2, 2);
        G(0, 0) = r[0][2];
        G(1, 0) = r[0][3];
        G(0, 1) = r[1][2];
        G(1, 1) = r[1][3];
        t.graph = G;
    }
    return t;
}

i64 graph_plane_count(i64 ell, unsigned m)
{
    /* |SL_2(Z/ell^m)| = ell^(3m) (1 - 1/ell^2) */
    return ipow(ell, 3 * m - 2) * (ell * ell - 1);
}

} // namespace isocensus
