#pragma once

// Big-integer number theory: square roots, divisor enumeration and
// squarefree kernels.

#include <cstdint>
#include <optional>
#include <vector>

#include "cubicdio/polyring.hpp"

namespace cubicdio {

/// Largest trial divisor used when factoring. Factoring fails loudly with
/// BudgetExceeded when a composite cofactor above max_trial^2 survives.
class DivisorBudget {
 public:
  static constexpr std::uint64_t kDefaultMaxTrial = std::uint64_t{1} << 32;

  DivisorBudget() = default;
  explicit DivisorBudget(std::uint64_t max_trial);

  std::uint64_t max_trial() const noexcept { return max_trial_; }

 private:
  std::uint64_t max_trial_ = kDefaultMaxTrial;
};

struct PrimePower {
  Integer prime;
  unsigned exponent;
};

/// Factorization of |n| by trial division up to the budget. n must be nonzero.
std::vector<PrimePower> factorize(const Integer& n, const DivisorBudget& budget = {});

/// floor(sqrt(n)); NegativeInput when n < 0.
Integer isqrt(const Integer& n);

/// w >= 0 with w^2 = n, or empty.
std::optional<Integer> perfect_square(const Integer& n);

/// Ascending positive divisors of |n|; ZeroInput when n = 0.
std::vector<Integer> divisors(const Integer& n, const DivisorBudget& budget = {});

/// Signed product of the primes dividing n to an odd power.
Integer squarefree_kernel(const Integer& n, const DivisorBudget& budget = {});

/// Number of times 3 divides n (n nonzero).
unsigned valuation3(const Integer& n);

}  // namespace cubicdio
