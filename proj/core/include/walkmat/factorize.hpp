#pragma once

#include <gmpxx.h>

#include <map>

namespace walkmat {

/// Complete prime factorization of x >= 1, as prime -> exponent.
/// Trial division by primes below 10^6, then Brent's variant of the
/// Pollard rho method on what remains. Deterministic.
std::map<mpz_class, unsigned> factorize(const mpz_class& x);

/// Miller-Rabin with a base set proven deterministic below 2^64;
/// larger inputs fall back to GMP's probabilistic test with 64 rounds.
bool is_prime(const mpz_class& x);

/// No prime square divides x; requires x >= 1.
bool is_square_free(const mpz_class& x);

/// x is odd and square-free; requires x >= 1, throws std::domain_error otherwise.
bool is_odd_square_free(const mpz_class& x);

/// Exponent of the largest power of two dividing x; x must be positive.
unsigned long two_adic_valuation(const mpz_class& x);

}  // namespace walkmat
