#include "cubicdio/solver.hpp"

#include <algorithm>
#include <exception>
#include <iterator>

#include <omp.h>

#include "cubicdio/error.hpp"
#include "search_kernel.hpp"

namespace cubicdio {

const char* to_string(SearchMode mode) noexcept {
  return mode == SearchMode::Filtered ? "filtered" : "exhaustive";
}

std::vector<std::string> HypothesisReport::violations() const {
  std::vector<std::string> out;
  if (obstruction) {
    out.emplace_back("p(y) is never divisible by 3, so -3D(y0) is never a square: no bound is available");
  }
  if (simple_root_count < 3) {
    out.emplace_back("D(y) has " + std::to_string(simple_root_count) + " simple roots, at least 3 are required");
  }
  if (!irreducibility_witness) {
    out.emplace_back("no specialization with |y0| <= 20 proves f irreducible over Q(y)");
  }
  return out;
}

std::vector<std::string> HypothesisReport::warnings() const {
  std::vector<std::string> out;
  if (mod3.kind == Mod3Class::Kind::SometimesZero) {
    std::string residues;
    for (unsigned r : mod3.vanishing_residues) {
      if (!residues.empty()) residues += ",";
      residues += std::to_string(r);
    }
    out.push_back("p(y) = 0 mod 3 only for y = {" + residues + "} mod 3; the filter applies pointwise");
  }
  return out;
}

HypothesisReport validate_hypotheses(const CubicFamily& fam, const DivisorBudget& budget) {
  if (fam.p().is_zero() && fam.q().is_zero()) {
    throw Error(ErrorKind::DegenerateFamily, "p and q are both zero");
  }
  HypothesisReport rep;
  rep.mod3 = mod3_classify(fam.p());
  rep.obstruction = rep.mod3.kind == Mod3Class::Kind::NowhereZero;
  rep.simple_root_count = count_simple_roots(fam.disc());

  // A linear factor x - r(y) over Q(y) would give an integer root at every
  // specialization, so one irreducible specialization is a certificate.
  for (std::int64_t k = 0; k <= 40; ++k) {
    const SpecializedCubic spec = specialize(fam, Integer(static_cast<long>(y_at_index(k))));
    if (sgn(spec.d0) == 0) continue;
    try {
      if (integer_roots(spec, budget).empty()) {
        rep.irreducibility_witness = spec.y0;
        break;
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
    }
  }
  return rep;
}

bool SearchReport::suppressed_candidates() const {
  return std::any_of(budget_warnings.begin(), budget_warnings.end(),
                     [](const BudgetWarning& w) { return w.stage == BudgetWarning::Stage::Roots; });
}

std::int64_t y_at_index(std::int64_t k) noexcept { return (k % 2 == 1) ? (k + 1) / 2 : -(k / 2); }

namespace detail {

void PartialResult::merge(PartialResult&& other) {
  solutions.insert(solutions.end(), std::make_move_iterator(other.solutions.begin()),
                   std::make_move_iterator(other.solutions.end()));
  warnings.insert(warnings.end(), std::make_move_iterator(other.warnings.begin()),
                  std::make_move_iterator(other.warnings.end()));
  tested += other.tested;
  filter_pass += other.filter_pass;
}

SearchReport begin_search(const CubicFamily& fam, const SearchConfig& cfg) {
  if (cfg.bound < 1) throw Error(ErrorKind::InvalidBound, "search bound must be >= 1");
  if (cfg.worker_count < 1) throw Error(ErrorKind::InvalidArgument, "worker count must be >= 1");
  if (!(cfg.cardano_tol > 0)) throw Error(ErrorKind::InvalidArgument, "Cardano tolerance must be positive");
  SearchReport report;
  report.mode = cfg.mode;
  report.bound = cfg.bound;
  report.hypotheses = validate_hypotheses(fam, cfg.divisor_budget);
  if (cfg.strict_hypotheses && !report.hypotheses.passed()) {
    std::string msg = "hypotheses violated:";
    for (const auto& v : report.hypotheses.violations()) msg += " " + v + ";";
    throw Error(ErrorKind::HypothesisViolation, msg);
  }
  return report;
}

namespace {

// Power-sum evaluation, deliberately not Horner, for the emission re-check.
Integer eval_power_sum(const Poly& p, const Integer& y) {
  Integer acc = 0;
  Integer power = 1;
  for (const auto& c : p.coeffs()) {
    acc += c * power;
    power *= y;
  }
  return acc;
}

}  // namespace

void scan_y(const CubicFamily& fam, const Integer& y0, const SearchConfig& cfg, PartialResult& out) {
  const SpecializedCubic spec = specialize(fam, y0);
  ++out.tested;
  const std::optional<Integer> w0 = w_filter(spec);
  if (w0) ++out.filter_pass;
  if (cfg.mode == SearchMode::Filtered && !w0) return;

  std::vector<Integer> roots;
  try {
    roots = integer_roots(spec, cfg.divisor_budget);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::BudgetExceeded) throw;
    out.warnings.push_back({y0, BudgetWarning::Stage::Roots, e.what()});
    return;
  }
  if (roots.empty()) return;
  const RootClassification cls = classify_specialization(spec, roots);

  std::optional<double> cardano;
  if (sgn(spec.d0) <= 0) cardano = static_cast<double>(cardano_real_root(spec, cfg.cardano_tol).value);

  const Integer p0 = eval_power_sum(fam.p(), y0);
  const Integer q0 = eval_power_sum(fam.q(), y0);
  for (const auto& x0 : roots) {
    if (sgn(Integer(x0 * x0 * x0 + p0 * x0 + q0)) != 0) {
      throw Error(ErrorKind::InconsistentInput, "emitted solution fails the defining equation");
    }
    Solution sol{y0, x0, w0, cls.kind, std::nullopt, cardano};
    try {
      sol.cofactor = cofactor_field_disc(spec, x0, cfg.divisor_budget);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::BudgetExceeded) throw;
      out.warnings.push_back({y0, BudgetWarning::Stage::Cofactor, e.what()});
    }
    out.solutions.push_back(std::move(sol));
  }
}

void finish_search(SearchReport& report, PartialResult&& all) {
  std::sort(all.solutions.begin(), all.solutions.end(), [](const Solution& a, const Solution& b) {
    return a.y0 != b.y0 ? a.y0 < b.y0 : a.x0 < b.x0;
  });
  std::stable_sort(all.warnings.begin(), all.warnings.end(), [](const BudgetWarning& a, const BudgetWarning& b) {
    return a.y0 != b.y0 ? a.y0 < b.y0 : a.stage < b.stage;
  });
  report.solutions = std::move(all.solutions);
  report.budget_warnings = std::move(all.warnings);
  report.tested_count = all.tested;
  report.filter_pass_count = all.filter_pass;
  report.solution_count = report.solutions.size();
  if (report.mode == SearchMode::Exhaustive && !report.solutions.empty()) {
    const auto rational = std::count_if(report.solutions.begin(), report.solutions.end(),
                                        [](const Solution& s) { return s.w0.has_value(); });
    report.rational_w_fraction = static_cast<double>(rational) / static_cast<double>(report.solutions.size());
  }
}

}  // namespace detail

SearchReport run_search(const CubicFamily& fam, const SearchConfig& cfg) {
  SearchReport report = detail::begin_search(fam, cfg);
  const std::int64_t count = 2 * cfg.bound + 1;

  detail::PartialResult all;
  std::exception_ptr failure;
#pragma omp parallel num_threads(cfg.worker_count)
  {
    detail::PartialResult local;
#pragma omp for schedule(static)
    for (std::int64_t k = 0; k < count; ++k) {
      try {
        detail::scan_y(fam, Integer(static_cast<long>(y_at_index(k))), cfg, local);
      } catch (...) {
#pragma omp critical(cubicdio_search_failure)
        if (!failure) failure = std::current_exception();
      }
    }
#pragma omp critical(cubicdio_search_merge)
    all.merge(std::move(local));
  }
  if (failure) std::rethrow_exception(failure);

  detail::finish_search(report, std::move(all));
  return report;
}

}  // namespace cubicdio
