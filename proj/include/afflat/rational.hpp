#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace afflat {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;

/// num/den in lowest terms. Throws InvalidInput when den == 0.
Rat make_rat(const Int& num, const Int& den);

/// Parses "p", "-p" or "p/q".
Rat parse_rat(std::string_view text);
std::string to_string(const Rat& r);
std::string to_string(const Int& z);

Int floor_rat(const Rat& r);
Int ceil_rat(const Rat& r);
bool is_integer(const Rat& r);
int sign(const Rat& r);
int sign(const Int& z);

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);

/// Exact square root when r is the square of a rational.
std::optional<Rat> rational_sqrt(const Rat& r);
/// Smallest integer s >= 0 with s*s >= z (z >= 0).
Int isqrt_ceil(const Int& z);

IntVec to_int_vec(const RatVec& v);  // throws InternalError on a non-integer
RatVec to_rat_vec(const IntVec& v);

/// Scales a nonzero rational vector to the primitive integer vector
/// pointing the same way.
IntVec primitive_direction(const RatVec& v);
Int content(const IntVec& v);  // gcd of the entries (0 for the zero vector)
bool is_zero(const IntVec& v);
bool is_zero(const RatVec& v);

/// Lexicographic order on vectors.
bool lex_less(const RatVec& a, const RatVec& b);
bool lex_less(const IntVec& a, const IntVec& b);

}  // namespace afflat
