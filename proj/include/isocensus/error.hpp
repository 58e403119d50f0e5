#ifndef ISOCENSUS_ERROR_HPP
#define ISOCENSUS_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace isocensus {

enum class error_code {
    invalid_argument,
    hasse_violation,
    bound_exceeded,
    not_a_subgroup,
    kernel_order_divisible_by_p,
    torsion_not_found,
    ramified_prime,
    zero_discriminant,
    budget_exhausted,
    unknown_stratum,
    io,
};

std::string_view to_string(error_code c);

/* All library failures are reported through this one exception type; the
 * code tells the CLI which exit status to use. */
class error : public std::runtime_error
{
    error_code code_;

  public:
    error(error_code c, std::string const & what)
        : std::runtime_error(what), code_(c)
    {
    }

    error_code code() const noexcept { return code_; }
};

[[noreturn]] inline void fail(error_code c, std::string const & what)
{
    throw error(c, what);
}

inline void require(bool cond, std::string const & what)
{
    if (!cond)
        fail(error_code::invalid_argument, what);
}

} // namespace isocensus

#endif
