#include "cubicdio/solver.hpp"

#include "search_kernel.hpp"

namespace cubicdio {

SearchReport run_search_serial(const CubicFamily& fam, const SearchConfig& cfg) {
  SearchReport report = detail::begin_search(fam, cfg);
  detail::PartialResult all;
  for (std::int64_t k = 0; k <= 2 * cfg.bound; ++k) {
    detail::scan_y(fam, Integer(static_cast<long>(y_at_index(k))), cfg, all);
  }
  detail::finish_search(report, std::move(all));
  return report;
}

}  // namespace cubicdio
