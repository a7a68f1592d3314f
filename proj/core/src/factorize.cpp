#include "walkmat/factorize.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace walkmat {

namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (std::uint32_t p = 2; p <= kTrialLimit; ++p) {
      if (composite[p]) continue;
      out.push_back(p);
      for (std::uint64_t q = std::uint64_t{p} * p; q <= kTrialLimit; q += p)
        composite[static_cast<std::size_t>(q)] = true;
    }
    return out;
  }();
  return primes;
}

bool miller_rabin_witness(const mpz_class& n, const mpz_class& a) {
  // returns true when a proves n composite
  mpz_class d = n - 1;
  const unsigned long r = mpz_scan1(d.get_mpz_t(), 0);
  mpz_tdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), r);

  mpz_class x;
  mpz_powm(x.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  if (x == 1 || x == n - 1) return false;
  for (unsigned long i = 1; i < r; ++i) {
    x = (x * x) % n;
    if (x == n - 1) return false;
  }
  return true;
}

// Brent's cycle detection; returns a non-trivial factor of composite odd n.
mpz_class pollard_brent(const mpz_class& n) {
  for (unsigned long c = 1;; ++c) {
    mpz_class y(2), factor(1);
    mpz_class x, ys, q(1);
    unsigned long r = 1;
    const unsigned long batch = 128;
    while (factor == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = (y * y + c) % n;
      for (unsigned long k = 0; k < r && factor == 1; k += batch) {
        ys = y;
        const unsigned long limit = std::min(batch, r - k);
        for (unsigned long i = 0; i < limit; ++i) {
          y = (y * y + c) % n;
          q = (q * abs(x - y)) % n;
        }
        mpz_gcd(factor.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      }
      r *= 2;
    }
    if (factor == n) {
      // backtrack one step at a time
      do {
        ys = (ys * ys + c) % n;
        mpz_class diff = abs(x - ys);
        mpz_gcd(factor.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (factor == 1);
    }
    if (factor != n) return factor;
    // cycle collapsed for this c, retry with the next polynomial
  }
}

void factor_into(const mpz_class& n, std::map<mpz_class, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  const mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(const mpz_class& x) {
  if (x < 2) return false;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    if (x == p) return true;
    if (mpz_divisible_ui_p(x.get_mpz_t(), p)) return false;
  }
  if (mpz_sizeinbase(x.get_mpz_t(), 2) <= 64) {
    // Deterministic for n < 2^64 with this base set (Sinclair/Sorenson-Webster).
    for (std::uint32_t a : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u})
      if (miller_rabin_witness(x, mpz_class(a))) return false;
    return true;
  }
  return mpz_probab_prime_p(x.get_mpz_t(), 64) != 0;
}

std::map<mpz_class, unsigned> factorize(const mpz_class& x) {
  if (x < 1) throw std::domain_error("factorization requires a positive integer");
  std::map<mpz_class, unsigned> out;
  mpz_class rest = x;
  for (std::uint32_t p : small_primes()) {
    if (mpz_class(p) * p > rest) break;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      ++out[mpz_class(p)];
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    }
  }
  if (rest > 1) {
    if (mpz_class(kTrialLimit) * kTrialLimit > rest) {
      ++out[rest];  // below the square of the trial bound, so prime
    } else {
      factor_into(rest, out);
    }
  }
  return out;
}

bool is_square_free(const mpz_class& x) {
  if (x < 1) throw std::domain_error("square-freeness requires a positive integer");
  for (const auto& [prime, exponent] : factorize(x))
    if (exponent > 1) return false;
  return true;
}

bool is_odd_square_free(const mpz_class& x) {
  if (x < 1) throw std::domain_error("odd square-free test requires a positive integer");
  if (mpz_even_p(x.get_mpz_t())) return false;
  return is_square_free(x);
}

unsigned long two_adic_valuation(const mpz_class& x) {
  if (x == 0) throw std::domain_error("the 2-adic valuation of zero is undefined");
  mpz_class a = abs(x);
  return mpz_scan1(a.get_mpz_t(), 0);
}

}  // namespace walkmat
