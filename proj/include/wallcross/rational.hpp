#pragma once

// Exact arithmetic used throughout: arbitrary-precision integers and
// rationals. Wall membership and signature checks are sign conditions,
// so nothing here may round.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace wallcross {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

// num/den with any signs; cpp_rational's own two-argument constructor
// rejects negative denominators.
inline Rat make_rat(Int num, Int den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return Rat(num, den);
}

// floor(a/b) for b > 0.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;
    if (a % b != 0 && ((a < 0) != (b < 0))) --q;
    return q;
}

inline Int floor_rat(const Rat& r) { return floor_div(rat_num(r), rat_den(r)); }

inline Int ceil_rat(const Rat& r) {
    Int f = floor_rat(r);
    return (Rat(f) == r) ? f : f + 1;
}

// floor(sqrt(r)) for r >= 0, exact.
inline Int isqrt_floor(const Int& n) {
    if (n < 0) throw std::domain_error("isqrt of negative value");
    return boost::multiprecision::sqrt(n);
}

inline std::string int_str(const Int& n) { return n.str(); }

// "num/den" for proper fractions, plain integer string otherwise.
inline std::string rat_str(const Rat& r) {
    if (rat_den(r) == 1) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

inline Rat parse_rat(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        return make_rat(num, den);
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse rational: '" + s + "'");
    }
}

inline long long to_i64(const Int& n) {
    if (n > Int(std::numeric_limits<long long>::max()) ||
        n < Int(std::numeric_limits<long long>::min()))
        throw std::overflow_error("integer does not fit in 64 bits: " + n.str());
    return n.convert_to<long long>();
}

// Errors that the CLI maps to exit codes: input_error -> 1,
// degenerate_segment_error -> 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct degenerate_segment_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when ampleness of a class on a custom lattice cannot be
// decided from the asserted list; never silently answers false.
struct ample_uncertainty_error : input_error {
    using input_error::input_error;
};

}  // namespace wallcross
