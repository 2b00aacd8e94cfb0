#include "rwrs/core/error.hpp"

namespace rwrs
{
std::string_view to_string(ErrorCode code)
{
    switch (code)
    {
        case ErrorCode::invalid_atoms:
            return "InvalidAtoms";
        case ErrorCode::non_summing_probabilities:
            return "NonSummingProbabilities";
        case ErrorCode::asymmetric_scenery:
            return "AsymmetricScenery";
        case ErrorCode::nonzero_mean_step:
            return "NonzeroMeanStep";
        case ErrorCode::zero_variance:
            return "ZeroVariance";
        case ErrorCode::proper_subgroup_support:
            return "ProperSubgroupSupport";
        case ErrorCode::domain_error:
            return "DomainError";
        case ErrorCode::method_unavailable:
            return "MethodUnavailable";
        case ErrorCode::budget_exceeded:
            return "BudgetExceeded";
        case ErrorCode::degenerate_input:
            return "DegenerateInput";
        case ErrorCode::config_error:
            return "ConfigError";
        case ErrorCode::io_error:
            return "IoError";
    }
    return "Error";
}

}  // namespace rwrs
