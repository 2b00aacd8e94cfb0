#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rwrs
{
//---------------------------------------------------------------------------//
//! Role a distribution plays in a model; scenery laws must be symmetric,
//! step and vertical laws must be centered.
enum class LawKind
{
    scenery,
    step,
    vertical,
};

std::string_view to_string(LawKind kind);

struct Atom
{
    std::int64_t value;
    double prob;
};

//---------------------------------------------------------------------------//
/*!
 * Finite integer-valued probability mass function.
 *
 * Instances only exist in validated form: probabilities positive and summing
 * to one, distinct values, positive variance, support generating the whole
 * integer lattice, plus symmetry (scenery) or zero mean (step, vertical).
 * Construct through \c validate, which reports the first violated
 * condition.
 *
 * Sampling maps a uniform 64-bit word onto the atoms by inverse CDF over
 * fixed-point cumulative thresholds, so draws are bit-reproducible.
 */
class LatticeDistribution
{
  public:
    static LatticeDistribution validate(std::vector<Atom> atoms, LawKind kind);

    //! Symmetric two-point law on {-1, +1}.
    static LatticeDistribution rademacher(LawKind kind = LawKind::scenery);
    //! Uniform law on the given values.
    static LatticeDistribution uniform(std::vector<std::int64_t> values,
                                       LawKind kind);

    std::span<Atom const> atoms() const { return atoms_; }
    LawKind kind() const { return kind_; }
    std::size_t size() const { return atoms_.size(); }

    double prob(std::int64_t value) const;
    double mean() const;
    double variance() const;
    double std_dev() const;
    //! E|X|^p
    double abs_moment(double p) const;
    std::int64_t min_value() const { return atoms_.front().value; }
    std::int64_t max_value() const { return atoms_.back().value; }
    std::int64_t max_abs() const;

    //! True for the symmetric {-1,+1} law (the simple random walk step).
    bool is_rademacher() const;

    std::int64_t sample(std::uint64_t bits) const
    {
        std::size_t const last = atoms_.size() - 1;
        for (std::size_t i = 0; i < last; ++i)
        {
            if (bits < thresholds_[i])
                return atoms_[i].value;
        }
        return atoms_[last].value;
    }

    //! Text form "v:p, v:p, ..." accepted back by \c parse_atoms.
    std::string to_string() const;

  private:
    LatticeDistribution(std::vector<Atom> atoms, LawKind kind);

    std::vector<Atom> atoms_;
    std::vector<std::uint64_t> thresholds_;
    LawKind kind_;
};

//---------------------------------------------------------------------------//
/*!
 * Parse a list of "value:probability" pairs separated by commas or
 * whitespace. Probabilities may be decimal or a rational "a/b". Surrounding
 * braces or brackets are ignored.
 */
std::vector<Atom> parse_atoms(std::string_view text);

//! Divide all values by the gcd of their nonzero magnitudes.
std::vector<Atom> normalize(std::vector<Atom> atoms);

//! Positive generator of the group spanned by differences of support points.
int detect_period(LatticeDistribution const& scenery);

//! Characteristic function of a symmetric law (real valued).
double char_fn(LatticeDistribution const& scenery, double u);

//! H(t) = E[e^xi 1{e^xi > t}]
double h_eval(LatticeDistribution const& scenery, double t);

//! inf{t > 0 : H(t) < x}; returns 0 when H is already below x near 0.
double h_inverse(LatticeDistribution const& scenery, double x);

}  // namespace rwrs
