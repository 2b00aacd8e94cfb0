#include "rwrs/core/lattice_distribution.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <sstream>

#include "rwrs/core/error.hpp"

namespace rwrs
{
namespace
{
constexpr double sum_tolerance = 1e-12;
constexpr double exactness_tolerance = 1e-12;

std::uint64_t abs_u64(std::int64_t v)
{
    return v < 0 ? std::uint64_t(0) - std::uint64_t(v) : std::uint64_t(v);
}

std::uint64_t support_gcd(std::span<Atom const> atoms)
{
    std::uint64_t g = 0;
    for (auto const& a : atoms)
        g = std::gcd(g, abs_u64(a.value));
    return g;
}

double parse_number(std::string_view tok, std::string_view context)
{
    auto fail = [&] {
        throw Error(ErrorCode::invalid_atoms,
                    "cannot parse '" + std::string(tok) + "' in '"
                        + std::string(context) + "'");
    };
    if (tok.empty())
        fail();
    double out{};
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        fail();
    return out;
}

double parse_probability(std::string_view tok, std::string_view context)
{
    auto slash = tok.find('/');
    if (slash == std::string_view::npos)
        return parse_number(tok, context);
    double num = parse_number(tok.substr(0, slash), context);
    double den = parse_number(tok.substr(slash + 1), context);
    if (den == 0)
    {
        throw Error(ErrorCode::invalid_atoms,
                    "zero denominator in '" + std::string(context) + "'");
    }
    return num / den;
}

}  // namespace

std::string_view to_string(LawKind kind)
{
    switch (kind)
    {
        case LawKind::scenery:
            return "scenery";
        case LawKind::step:
            return "step";
        case LawKind::vertical:
            return "vertical";
    }
    return "?";
}

//---------------------------------------------------------------------------//
LatticeDistribution::LatticeDistribution(std::vector<Atom> atoms, LawKind kind)
    : atoms_(std::move(atoms)), kind_(kind)
{
    thresholds_.reserve(atoms_.size());
    long double cum = 0;
    for (auto const& a : atoms_)
    {
        cum += a.prob;
        long double scaled = std::ldexp(cum, 64);
        if (scaled >= std::ldexp(1.0L, 64))
            thresholds_.push_back(std::numeric_limits<std::uint64_t>::max());
        else
            thresholds_.push_back(static_cast<std::uint64_t>(scaled));
    }
}

LatticeDistribution
LatticeDistribution::validate(std::vector<Atom> atoms, LawKind kind)
{
    if (atoms.empty())
        throw Error(ErrorCode::invalid_atoms, "empty atom list");

    std::sort(atoms.begin(), atoms.end(), [](Atom const& a, Atom const& b) {
        return a.value < b.value;
    });
    for (std::size_t i = 0; i < atoms.size(); ++i)
    {
        if (!(atoms[i].prob > 0) || !std::isfinite(atoms[i].prob))
        {
            throw Error(ErrorCode::invalid_atoms,
                        "probability of value " + std::to_string(atoms[i].value)
                            + " is not positive");
        }
        if (i > 0 && atoms[i].value == atoms[i - 1].value)
        {
            throw Error(ErrorCode::invalid_atoms,
                        "duplicate value " + std::to_string(atoms[i].value));
        }
    }

    double total = 0;
    for (auto const& a : atoms)
        total += a.prob;
    if (std::abs(total - 1.0) > sum_tolerance)
    {
        std::ostringstream os;
        os.precision(17);
        os << "probabilities sum to " << total;
        throw Error(ErrorCode::non_summing_probabilities, os.str());
    }

    LatticeDistribution result(std::move(atoms), kind);
    if (!(result.variance() > 0))
        throw Error(ErrorCode::zero_variance, "support is a single point");

    if (auto g = support_gcd(result.atoms_); g > 1)
    {
        throw Error(ErrorCode::proper_subgroup_support,
                    "support generates " + std::to_string(g)
                        + "Z; divide values by " + std::to_string(g));
    }

    auto scale = static_cast<double>(result.max_abs());
    if (kind == LawKind::scenery)
    {
        for (auto const& a : result.atoms_)
        {
            if (std::abs(a.prob - result.prob(-a.value)) > exactness_tolerance)
            {
                throw Error(ErrorCode::asymmetric_scenery,
                            "P(" + std::to_string(a.value) + ") != P("
                                + std::to_string(-a.value) + ")");
            }
        }
    }
    else if (std::abs(result.mean()) > exactness_tolerance * scale)
    {
        std::ostringstream os;
        os.precision(17);
        os << "mean is " << result.mean();
        throw Error(ErrorCode::nonzero_mean_step, os.str());
    }
    return result;
}

LatticeDistribution LatticeDistribution::rademacher(LawKind kind)
{
    return validate({{-1, 0.5}, {1, 0.5}}, kind);
}

LatticeDistribution
LatticeDistribution::uniform(std::vector<std::int64_t> values, LawKind kind)
{
    std::vector<Atom> atoms;
    atoms.reserve(values.size());
    for (auto v : values)
        atoms.push_back({v, 1.0 / static_cast<double>(values.size())});
    return validate(std::move(atoms), kind);
}

double LatticeDistribution::prob(std::int64_t value) const
{
    auto it = std::lower_bound(
        atoms_.begin(), atoms_.end(), value, [](Atom const& a, std::int64_t v) {
            return a.value < v;
        });
    return (it != atoms_.end() && it->value == value) ? it->prob : 0.0;
}

double LatticeDistribution::mean() const
{
    double m = 0;
    for (auto const& a : atoms_)
        m += a.prob * static_cast<double>(a.value);
    return m;
}

double LatticeDistribution::variance() const
{
    double m = this->mean();
    double v = 0;
    for (auto const& a : atoms_)
    {
        double d = static_cast<double>(a.value) - m;
        v += a.prob * d * d;
    }
    return v;
}

double LatticeDistribution::std_dev() const
{
    return std::sqrt(this->variance());
}

double LatticeDistribution::abs_moment(double p) const
{
    double m = 0;
    for (auto const& a : atoms_)
        m += a.prob * std::pow(std::abs(static_cast<double>(a.value)), p);
    return m;
}

std::int64_t LatticeDistribution::max_abs() const
{
    return std::max(std::abs(atoms_.front().value),
                    std::abs(atoms_.back().value));
}

bool LatticeDistribution::is_rademacher() const
{
    return atoms_.size() == 2 && atoms_[0].value == -1 && atoms_[1].value == 1
           && atoms_[0].prob == 0.5 && atoms_[1].prob == 0.5;
}

std::string LatticeDistribution::to_string() const
{
    std::ostringstream os;
    os.precision(17);
    for (std::size_t i = 0; i < atoms_.size(); ++i)
    {
        if (i)
            os << ", ";
        os << atoms_[i].value << ':' << atoms_[i].prob;
    }
    return os.str();
}

//---------------------------------------------------------------------------//
std::vector<Atom> parse_atoms(std::string_view text)
{
    std::vector<Atom> atoms;
    std::string cleaned(text);
    for (char& c : cleaned)
    {
        if (c == ',' || c == '{' || c == '}' || c == '[' || c == ']'
            || c == ';')
        {
            c = ' ';
        }
    }
    // Allow "v : p" by gluing whitespace around the colon.
    std::string glued;
    for (std::size_t i = 0; i < cleaned.size(); ++i)
    {
        if (std::isspace(static_cast<unsigned char>(cleaned[i])))
        {
            auto next = cleaned.find_first_not_of(" \t\r\n", i);
            bool before_colon = next != std::string::npos && cleaned[next] == ':';
            bool after_colon = !glued.empty() && glued.back() == ':';
            if (before_colon || after_colon)
                continue;
        }
        glued.push_back(cleaned[i]);
    }
    cleaned = std::move(glued);
    std::istringstream is(cleaned);
    std::string tok;
    while (is >> tok)
    {
        auto colon = tok.find(':');
        if (colon == std::string::npos)
        {
            throw Error(ErrorCode::invalid_atoms,
                        "expected value:probability, got '" + tok + "'");
        }
        std::string_view sv(tok);
        auto vtok = sv.substr(0, colon);
        std::int64_t value{};
        auto [ptr, ec]
            = std::from_chars(vtok.data(), vtok.data() + vtok.size(), value);
        if (ec != std::errc{} || ptr != vtok.data() + vtok.size())
        {
            throw Error(ErrorCode::invalid_atoms,
                        "bad integer value in '" + tok + "'");
        }
        atoms.push_back({value, parse_probability(sv.substr(colon + 1), tok)});
    }
    if (atoms.empty())
        throw Error(ErrorCode::invalid_atoms, "no atoms in '" + cleaned + "'");
    return atoms;
}

std::vector<Atom> normalize(std::vector<Atom> atoms)
{
    auto g = support_gcd(atoms);
    if (g > 1)
    {
        for (auto& a : atoms)
            a.value /= static_cast<std::int64_t>(g);
    }
    return atoms;
}

int detect_period(LatticeDistribution const& scenery)
{
    auto atoms = scenery.atoms();
    std::uint64_t g = 0;
    for (auto const& a : atoms)
        g = std::gcd(g, abs_u64(a.value - atoms.front().value));
    return static_cast<int>(g);
}

double char_fn(LatticeDistribution const& scenery, double u)
{
    double r = 0;
    for (auto const& a : scenery.atoms())
        r += a.prob * std::cos(static_cast<double>(a.value) * u);
    return r;
}

double h_eval(LatticeDistribution const& scenery, double t)
{
    double h = 0;
    for (auto const& a : scenery.atoms())
    {
        double e = std::exp(static_cast<double>(a.value));
        if (e > t)
            h += a.prob * e;
    }
    return h;
}

double h_inverse(LatticeDistribution const& scenery, double x)
{
    if (!(x > 0))
        throw Error(ErrorCode::domain_error, "h_inverse needs x > 0");

    // H is a right-continuous step function, constant on [e^{k_j},
    // e^{k_{j+1}}), so the infimum is 0 or one of the breakpoints e^{k_j}.
    auto atoms = scenery.atoms();
    double tail = 0;
    for (auto const& a : atoms)
        tail += a.prob * std::exp(static_cast<double>(a.value));
    if (tail < x)
        return 0.0;
    for (auto const& a : atoms)
    {
        double e = std::exp(static_cast<double>(a.value));
        tail -= a.prob * e;
        if (tail < x)
            return e;
    }
    return std::exp(static_cast<double>(atoms.back().value));
}

}  // namespace rwrs
