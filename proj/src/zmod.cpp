#include <algorithm>
#include <sstream>

#include "isocensus/zmod.hpp"

namespace isocensus {

unsigned zmod_ring::val(i64 a) const
{
    a = red(a);
    if (a == 0)
        return e;
    unsigned v = 0;
    while (a % ell == 0) {
        a /= ell;
        v++;
    }
    return v;
}

zmat zmat::identity(unsigned n)
{
    zmat I(n, n);
    for (unsigned i = 0; i < n; i++)
        I(i, i) = 1;
    return I;
}

zmat zmat::from_rows(std::vector<zvec> const & r)
{
    zmat A(static_cast<unsigned>(r.size()), r.empty() ? 0 : static_cast<unsigned>(r[0].size()));
    for (unsigned i = 0; i < A.rows; i++)
        for (unsigned j = 0; j < A.cols; j++)
            A(i, j) = r[i][j];
    return A;
}

zmat mat_mul(zmat const & A, zmat const & B, i64 n)
{
    zmat C(A.rows, B.cols);
    for (unsigned i = 0; i < A.rows; i++)
        for (unsigned k = 0; k < A.cols; k++) {
            i64 x = A(i, k);
            if (x == 0)
                continue;
            for (unsigned j = 0; j < B.cols; j++)
                C(i, j) = mod(C(i, j) + mulmod(x, B(k, j), n), n);
        }
    return C;
}

zvec mat_apply(zmat const & A, zvec const & x, i64 n)
{
    zvec y(A.rows, 0);
    for (unsigned i = 0; i < A.rows; i++) {
        i64 s = 0;
        for (unsigned j = 0; j < A.cols; j++)
            s = mod(s + mulmod(A(i, j), x[j], n), n);
        y[i] = s;
    }
    return y;
}

zmat mat_reduce(zmat A, i64 n)
{
    for (auto & x : A.a)
        x = mod(x, n);
    return A;
}

zmat mat_scale(zmat A, i64 s, i64 n)
{
    for (auto & x : A.a)
        x = mulmod(x, s, n);
    return A;
}

zmat mat_add(zmat const & A, zmat const & B, i64 n)
{
    zmat C = A;
    for (std::size_t i = 0; i < C.a.size(); i++)
        C.a[i] = mod(A.a[i] + B.a[i], n);
    return C;
}

zmat mat_block(zmat const & A, zmat const & B)
{
    zmat C(A.rows + B.rows, A.cols + B.cols);
    for (unsigned i = 0; i < A.rows; i++)
        for (unsigned j = 0; j < A.cols; j++)
            C(i, j) = A(i, j);
    for (unsigned i = 0; i < B.rows; i++)
        for (unsigned j = 0; j < B.cols; j++)
            C(A.rows + i, A.cols + j) = B(i, j);
    return C;
}

i64 det2(zmat const & A, i64 n)
{
    return mod(mulmod(A(0, 0), A(1, 1), n) - mulmod(A(0, 1), A(1, 0), n), n);
}

namespace {

void axpy(zvec & y, i64 f, zvec const & x, i64 n)
{
    if (f == 0)
        return;
    for (std::size_t i = 0; i < y.size(); i++)
        y[i] = mod(y[i] - mulmod(f, x[i], n), n);
}

bool is_zero(zvec const & v)
{
    return std::all_of(v.begin(), v.end(), [](i64 x) { return x == 0; });
}

} // namespace

submodule::submodule(zmod_ring R, unsigned cols, std::vector<zvec> gens)
    : R_(R), cols_(cols)
{
    i64 n = R.n;
    std::vector<zvec> w;
    w.reserve(gens.size() + cols);
    for (auto & g : gens) {
        if (g.size() != cols)
            fail(error_code::invalid_argument, "generator has wrong length");
        for (auto & x : g)
            x = mod(x, n);
        if (!is_zero(g))
            w.push_back(std::move(g));
    }
    std::size_t r = 0;
    for (unsigned c = 0; c < cols && r < w.size(); c++) {
        std::size_t best = w.size();
        unsigned bv = R.e;
        for (std::size_t i = r; i < w.size(); i++) {
            unsigned v = R.val(w[i][c]);
            if (v < bv) {
                bv = v;
                best = i;
            }
        }
        if (best == w.size())
            continue;
        std::swap(w[r], w[best]);
        i64 pv = ipow(R.ell, bv);
        i64 u = w[r][c] / pv;
        i64 uinv = invmod(u, n);
        for (auto & x : w[r])
            x = mulmod(x, uinv, n);
        for (std::size_t i = r + 1; i < w.size(); i++) {
            if (w[i][c] != 0)
                axpy(w[i], w[i][c] / pv, w[r], n);
        }
        if (bv > 0) {
            zvec ann = w[r];
            i64 s = ipow(R.ell, R.e - bv);
            for (auto & x : ann)
                x = mulmod(x, s, n);
            if (!is_zero(ann))
                w.push_back(std::move(ann));
        }
        piv_.push_back(c);
        r++;
    }
    w.resize(r);
    for (std::size_t i = 0; i < r; i++) {
        unsigned c = piv_[i];
        i64 pv = w[i][c];
        for (std::size_t j = 0; j < i; j++) {
            i64 f = w[j][c] / pv;
            if (f)
                axpy(w[j], f, w[i], n);
        }
    }
    rows_ = std::move(w);
}

submodule submodule::whole(zmod_ring R, unsigned cols)
{
    std::vector<zvec> g;
    for (unsigned i = 0; i < cols; i++) {
        zvec v(cols, 0);
        v[i] = 1;
        g.push_back(v);
    }
    return submodule(R, cols, g);
}

bool submodule::contains(zvec v) const
{
    i64 n = R_.n;
    for (auto & x : v)
        x = mod(x, n);
    for (std::size_t i = 0; i < rows_.size(); i++) {
        unsigned c = piv_[i];
        i64 pv = rows_[i][c];
        for (unsigned j = (i == 0 ? 0 : piv_[i - 1] + 1); j < c; j++)
            if (v[j] != 0)
                return false;
        if (v[c] % pv != 0)
            return false;
        axpy(v, v[c] / pv, rows_[i], n);
    }
    return is_zero(v);
}

bool submodule::contains(submodule const & other) const
{
    for (auto const & r : other.rows_)
        if (!contains(r))
            return false;
    return true;
}

unsigned submodule::log_size() const
{
    unsigned s = 0;
    for (std::size_t i = 0; i < rows_.size(); i++)
        s += R_.e - R_.val(rows_[i][piv_[i]]);
    return s;
}

std::vector<unsigned> submodule::shape() const
{
    /* elementary divisors via Smith form over the local ring: repeatedly
     * take the entry of least valuation */
    std::vector<zvec> w = rows_;
    i64 n = R_.n;
    std::vector<unsigned> out;
    std::vector<bool> used_col(cols_, false);
    while (true) {
        unsigned bv = R_.e;
        std::size_t bi = 0, bj = 0;
        for (std::size_t i = 0; i < w.size(); i++)
            for (unsigned j = 0; j < cols_; j++) {
                unsigned v = R_.val(w[i][j]);
                if (v < bv) {
                    bv = v;
                    bi = i;
                    bj = j;
                }
            }
        if (bv == R_.e)
            break;
        out.push_back(R_.e - bv);
        i64 pv = ipow(R_.ell, bv);
        zvec prow = w[bi];
        i64 u = invmod(prow[bj] / pv, n);
        for (auto & x : prow)
            x = mulmod(x, u, n);
        /* clear column bj in other rows, then row bi across columns */
        for (std::size_t i = 0; i < w.size(); i++)
            if (i != bi && w[i][bj] != 0)
                axpy(w[i], w[i][bj] / pv, prow, n);
        w.erase(w.begin() + static_cast<long>(bi));
        for (auto & row : w)
            row[bj] = 0;
    }
    std::sort(out.rbegin(), out.rend());
    return out;
}

bool submodule::is_free_direct_summand() const
{
    for (std::size_t i = 0; i < rows_.size(); i++)
        if (rows_[i][piv_[i]] != 1)
            return false;
    return true;
}

std::string submodule::key() const
{
    std::ostringstream os;
    for (auto const & r : rows_) {
        for (auto x : r)
            os << x << ',';
        os << ';';
    }
    return os.str();
}

submodule sum(submodule const & A, submodule const & B)
{
    auto g = A.rows();
    g.insert(g.end(), B.rows().begin(), B.rows().end());
    return submodule(A.ring(), A.cols(), g);
}

submodule intersect(submodule const & A, submodule const & B)
{
    unsigned c = A.cols();
    std::vector<zvec> g;
    for (auto const & a : A.rows()) {
        zvec v(2 * c);
        std::copy(a.begin(), a.end(), v.begin());
        std::copy(a.begin(), a.end(), v.begin() + c);
        g.push_back(v);
    }
    for (auto const & b : B.rows()) {
        zvec v(2 * c, 0);
        std::copy(b.begin(), b.end(), v.begin());
        g.push_back(v);
    }
    submodule S(A.ring(), 2 * c, g);
    std::vector<zvec> out;
    for (std::size_t i = 0; i < S.rows().size(); i++)
        if (S.pivots()[i] >= c)
            out.emplace_back(S.rows()[i].begin() + c, S.rows()[i].end());
    return submodule(A.ring(), c, out);
}

submodule preimage(zmat const & A, submodule const & H)
{
    unsigned d = A.rows, c = A.cols;
    i64 n = H.ring().n;
    std::vector<zvec> g;
    for (unsigned j = 0; j < c; j++) {
        zvec v(d + c, 0);
        for (unsigned i = 0; i < d; i++)
            v[i] = mod(A(i, j), n);
        v[d + j] = 1;
        g.push_back(v);
    }
    for (auto const & h : H.rows()) {
        zvec v(d + c, 0);
        std::copy(h.begin(), h.end(), v.begin());
        g.push_back(v);
    }
    submodule S(H.ring(), d + c, g);
    std::vector<zvec> out;
    for (std::size_t i = 0; i < S.rows().size(); i++)
        if (S.pivots()[i] >= d)
            out.emplace_back(S.rows()[i].begin() + d, S.rows()[i].end());
    return submodule(H.ring(), c, out);
}

submodule kernel(zmat const & A, zmod_ring R)
{
    return preimage(A, submodule::zero(R, A.rows));
}

submodule image(zmat const & A, submodule const & K)
{
    std::vector<zvec> g;
    for (auto const & r : K.rows())
        g.push_back(mat_apply(A, r, K.ring().n));
    return submodule(K.ring(), A.rows, g);
}

submodule permute(submodule const & H, std::vector<unsigned> const & perm)
{
    std::vector<zvec> g;
    for (auto const & r : H.rows()) {
        zvec v(perm.size());
        for (std::size_t i = 0; i < perm.size(); i++)
            v[i] = r[perm[i]];
        g.push_back(v);
    }
    return submodule(H.ring(), static_cast<unsigned>(perm.size()), g);
}

submodule scale(submodule const & H, i64 s)
{
    std::vector<zvec> g = H.rows();
    for (auto & r : g)
        for (auto & x : r)
            x = mulmod(x, s, H.ring().n);
    return submodule(H.ring(), H.cols(), g);
}

submodule lift_level(submodule const & H, unsigned M)
{
    zmod_ring R(H.ring().ell, M);
    i64 s = ipow(H.ring().ell, M - H.ring().e);
    std::vector<zvec> g = H.rows();
    for (auto & r : g)
        for (auto & x : r)
            x = mulmod(x, s, R.n);
    /* the ell^(M-m) multiples of A[ell^m] already carry the annihilators */
    return submodule(R, H.cols(), g);
}

submodule divide_by_power(submodule const & H, unsigned k)
{
    unsigned c = H.cols();
    zmat A = mat_scale(zmat::identity(c), ipow(H.ring().ell, k), H.ring().n);
    return preimage(A, H);
}

submodule lower_level(submodule const & H, unsigned m)
{
    zmod_ring R(H.ring().ell, m);
    i64 s = ipow(H.ring().ell, H.ring().e - m);
    std::vector<zvec> g = H.rows();
    for (auto & r : g)
        for (auto & x : r) {
            if (x % s != 0)
                fail(error_code::invalid_argument, "submodule not inside the lower torsion");
            x = mod(x / s, R.n);
        }
    return submodule(R, H.cols(), g);
}

} // namespace isocensus
