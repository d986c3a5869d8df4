#include "cubicdio/intarith.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "cubicdio/error.hpp"

namespace cubicdio {

DivisorBudget::DivisorBudget(std::uint64_t max_trial) : max_trial_(max_trial) {
  if (max_trial < 2) throw Error(ErrorKind::InvalidArgument, "divisor budget max_trial must be >= 2");
}

Integer isqrt(const Integer& n) {
  if (sgn(n) < 0) throw Error(ErrorKind::NegativeInput, "isqrt of a negative integer");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

namespace {

// Quadratic residue tables for the rejection pre-filters.
template <unsigned M>
constexpr std::array<bool, M> residue_table() {
  std::array<bool, M> t{};
  for (unsigned i = 0; i < M; ++i) t[(i * i) % M] = true;
  return t;
}

constexpr auto kSq64 = residue_table<64>();
constexpr auto kSq63 = residue_table<63>();
constexpr auto kSq65 = residue_table<65>();
constexpr auto kSq11 = residue_table<11>();

}  // namespace

std::optional<Integer> perfect_square(const Integer& n) {
  if (sgn(n) < 0) return std::nullopt;
  const mpz_srcptr z = n.get_mpz_t();
  if (!kSq64[mpz_fdiv_ui(z, 64)]) return std::nullopt;
  const unsigned long m = mpz_fdiv_ui(z, 63UL * 65UL * 11UL);
  if (!kSq63[m % 63] || !kSq65[m % 65] || !kSq11[m % 11]) return std::nullopt;
  Integer r, rem;
  mpz_sqrtrem(r.get_mpz_t(), rem.get_mpz_t(), z);
  if (sgn(rem) != 0) return std::nullopt;
  return r;
}

std::vector<PrimePower> factorize(const Integer& n, const DivisorBudget& budget) {
  if (sgn(n) == 0) throw Error(ErrorKind::ZeroInput, "cannot factor zero");
  Integer rest = abs(n);
  std::vector<PrimePower> out;

  auto strip = [&](unsigned long d) {
    if (!mpz_divisible_ui_p(rest.get_mpz_t(), d)) return false;
    unsigned e = 0;
    while (mpz_divisible_ui_p(rest.get_mpz_t(), d)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), d);
      ++e;
    }
    out.push_back({Integer(d), e});
    return true;
  };

  strip(2);
  if (budget.max_trial() >= 3) strip(3);
  bool changed = true;
  Integer root = isqrt(rest);
  // Candidates 6k +- 1; stop once d exceeds sqrt of the cofactor, the budget
  // runs out, or the cofactor is (BPSW probable) prime.
  const std::uint64_t limit = budget.max_trial();
  for (std::uint64_t d = 5; d <= limit && rest > 1; d += 6) {
    if (changed) {
      if (mpz_probab_prime_p(rest.get_mpz_t(), 25) > 0) break;
      root = isqrt(rest);
      changed = false;
    }
    if (mpz_cmp_ui(root.get_mpz_t(), static_cast<unsigned long>(d)) < 0) break;
    changed = strip(static_cast<unsigned long>(d));
    if (d + 2 <= limit) changed = strip(static_cast<unsigned long>(d + 2)) || changed;
  }
  if (rest > 1) {
    const Integer lim(static_cast<unsigned long>(limit));
    // No divisor up to min(limit, sqrt(rest)) remains, so rest <= limit^2 is prime.
    const bool prime = rest <= lim * lim || mpz_probab_prime_p(rest.get_mpz_t(), 25) > 0;
    if (!prime) {
      throw Error(ErrorKind::BudgetExceeded,
                  "unfactored cofactor " + rest.get_str() + " exceeds trial budget " + std::to_string(limit) + "^2");
    }
    out.push_back({rest, 1});
  }
  std::sort(out.begin(), out.end(), [](const PrimePower& a, const PrimePower& b) { return a.prime < b.prime; });
  return out;
}

std::vector<Integer> divisors(const Integer& n, const DivisorBudget& budget) {
  const auto factors = factorize(n, budget);
  std::vector<Integer> out{Integer(1)};
  for (const auto& [prime, exponent] : factors) {
    const std::size_t base = out.size();
    Integer pk = 1;
    for (unsigned e = 1; e <= exponent; ++e) {
      pk *= prime;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Integer squarefree_kernel(const Integer& n, const DivisorBudget& budget) {
  Integer m = 1;
  for (const auto& [prime, exponent] : factorize(n, budget)) {
    if (exponent % 2 == 1) m *= prime;
  }
  return sgn(n) < 0 ? Integer(-m) : m;
}

unsigned valuation3(const Integer& n) {
  if (sgn(n) == 0) throw Error(ErrorKind::ZeroInput, "3-adic valuation of zero");
  Integer rest = n;
  unsigned v = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), 3)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), 3);
    ++v;
  }
  return v;
}

}  // namespace cubicdio
