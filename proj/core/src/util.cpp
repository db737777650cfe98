#include "wreathcert/util.hpp"

namespace wreathcert {

std::vector<unsigned long> prime_factors(unsigned long n) {
  std::vector<unsigned long> primes;
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      primes.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) primes.push_back(n);
  return primes;
}

bool is_prime(unsigned long n) {
  if (n < 2) return false;
  for (unsigned long p = 2; p * p <= n; ++p)
    if (n % p == 0) return false;
  return true;
}

}  // namespace wreathcert
