#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace graphk {

// All exact integer arithmetic runs on arbitrary precision; intermediate
// entries in normal-form computations outgrow any fixed width even for
// small inputs.
using Int = boost::multiprecision::cpp_int;

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

Int gcd_int(Int a, Int b);

// Canonical residue in [0, m) for m >= 1.
Int mod_floor(const Int& a, const Int& m);

// p-adic valuation; requires p >= 2 and n != 0.
int valuation(Int n, const Int& p);

bool is_probable_prime(const Int& n);

// Prime factorization (trial division plus Pollard rho); n >= 1.
std::map<Int, int> factorize(Int n);

// True iff q = p^k for a prime p and k >= 1; reports the prime.
bool is_prime_power(const Int& q, Int* prime_out = nullptr);

std::string to_string(const Int& v);

}  // namespace graphk
