#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace rwrs
{
//---------------------------------------------------------------------------//
/*!
 * Failure categories raised by the library.
 *
 * The first group comes from distribution validation; the rest are raised by
 * individual operations when their preconditions are not met.
 */
enum class ErrorCode
{
    invalid_atoms,
    non_summing_probabilities,
    asymmetric_scenery,
    nonzero_mean_step,
    zero_variance,
    proper_subgroup_support,
    domain_error,
    method_unavailable,
    budget_exceeded,
    degenerate_input,
    config_error,
    io_error,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error
{
  public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what)
        , code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace rwrs
