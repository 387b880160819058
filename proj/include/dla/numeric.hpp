#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace dla {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Closed interval of exact rationals, used to enclose limit values
/// (density indices of dense exhaustions) that have no finite closed form.
struct RationalInterval {
    Rational lo;
    Rational hi;

    RationalInterval() = default;
    RationalInterval(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::invalid_argument("RationalInterval: lo > hi");
    }

    Rational width() const { return hi - lo; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool is_point() const { return lo == hi; }

    bool operator==(const RationalInterval& o) const { return lo == o.lo && hi == o.hi; }
};

std::string to_string(const Rational& q);
std::string to_string(const RationalInterval& iv);

// Errors named by the operation contracts.
struct NotDivisible : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotFinite : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InconsistentProfile : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotEmbeddable : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnsupportedConstruction : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct EpsilonBoundViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TargetTooSmall : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OracleTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parse failure in any of the textual grammars; positions are 1-based.
struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(const std::string& msg, int line_, int col_)
        : std::runtime_error(msg + " (line " + std::to_string(line_) + ", column " +
                             std::to_string(col_) + ")"),
          line(line_),
          column(col_) {}
};

}  // namespace dla
