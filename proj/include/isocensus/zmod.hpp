#ifndef ISOCENSUS_ZMOD_HPP
#define ISOCENSUS_ZMOD_HPP

#include <string>
#include <vector>

#include "isocensus/arith.hpp"

namespace isocensus {

using zvec = std::vector<i64>;

/* Z/ell^e as a local ring */
struct zmod_ring {
    i64 ell = 2;
    unsigned e = 1;
    i64 n = 2;

    zmod_ring() = default;
    zmod_ring(i64 ell_, unsigned e_) : ell(ell_), e(e_), n(ipow(ell_, e_)) {}

    i64 red(i64 a) const { return mod(a, n); }
    /* valuation of a mod n; e for zero */
    unsigned val(i64 a) const;
    bool operator==(zmod_ring const &) const = default;
};

/* Dense matrix acting on column vectors. */
struct zmat {
    unsigned rows = 0, cols = 0;
    std::vector<i64> a;

    zmat() = default;
    zmat(unsigned r, unsigned c) : rows(r), cols(c), a(std::size_t(r) * c, 0) {}
    static zmat identity(unsigned n);
    static zmat from_rows(std::vector<zvec> const & r);

    i64 & operator()(unsigned i, unsigned j) { return a[std::size_t(i) * cols + j]; }
    i64 operator()(unsigned i, unsigned j) const { return a[std::size_t(i) * cols + j]; }
    bool operator==(zmat const &) const = default;
};

zmat mat_mul(zmat const & A, zmat const & B, i64 n);
zvec mat_apply(zmat const & A, zvec const & x, i64 n);
zmat mat_reduce(zmat A, i64 n);
zmat mat_scale(zmat A, i64 s, i64 n);
zmat mat_add(zmat const & A, zmat const & B, i64 n);
/* block diagonal of A and B */
zmat mat_block(zmat const & A, zmat const & B);
i64 det2(zmat const & A, i64 n);

/* Submodule of (Z/ell^e)^cols kept in Howell normal form: rows in echelon
 * shape, each pivot a power of ell, entries above a pivot reduced below it,
 * and the form closed under the annihilator rows, so that the form is unique
 * and membership is decided by reduction. */
class submodule
{
  public:
    submodule() = default;
    submodule(zmod_ring R, unsigned cols, std::vector<zvec> gens);

    static submodule zero(zmod_ring R, unsigned cols) { return submodule(R, cols, {}); }
    static submodule whole(zmod_ring R, unsigned cols);

    zmod_ring const & ring() const { return R_; }
    unsigned cols() const { return cols_; }
    std::vector<zvec> const & rows() const { return rows_; }
    std::vector<unsigned> const & pivots() const { return piv_; }

    bool contains(zvec v) const;
    bool contains(submodule const & other) const;
    /* log_ell of the cardinality */
    unsigned log_size() const;
    /* elementary divisor exponents, sorted decreasing */
    std::vector<unsigned> shape() const;
    /* true when the quotient (Z/ell^e)^cols / this is free, i.e. all pivots 1 */
    bool is_free_direct_summand() const;

    std::string key() const;

    bool operator==(submodule const & o) const { return cols_ == o.cols_ && rows_ == o.rows_; }
    bool operator<(submodule const & o) const { return rows_ < o.rows_; }

  private:
    zmod_ring R_;
    unsigned cols_ = 0;
    std::vector<zvec> rows_;
    std::vector<unsigned> piv_;
};

submodule sum(submodule const & A, submodule const & B);
submodule intersect(submodule const & A, submodule const & B);
/* {x : A x in H} for A mapping (Z/n)^A.cols to (Z/n)^A.rows */
submodule preimage(zmat const & A, submodule const & H);
submodule kernel(zmat const & A, zmod_ring R);
submodule image(zmat const & A, submodule const & K);
/* permute coordinates: result coordinate i is input coordinate perm[i] */
submodule permute(submodule const & H, std::vector<unsigned> const & perm);
/* multiply every generator by s */
submodule scale(submodule const & H, i64 s);
/* reinterpret a submodule of (Z/ell^m)^c inside (Z/ell^M)^c, M >= m, via
 * multiplication by ell^(M-m) */
submodule lift_level(submodule const & H, unsigned M);
/* [ell^k]^{-1} H inside (Z/ell^e)^c */
submodule divide_by_power(submodule const & H, unsigned k);
/* reduction of H inside (Z/ell^M) back to level m; requires H in the ell^(M-m)-multiples */
submodule lower_level(submodule const & H, unsigned m);

} // namespace isocensus

#endif
