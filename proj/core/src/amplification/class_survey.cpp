#include "rarecase/amplification/class_survey.hpp"

#include <cmath>

#include "rarecase/graphs/graph_universe.hpp"

namespace rarecase {

ClassSurvey survey_large_classes(const CorruptOracle& o, double min_class_size, double floor) {
  const auto& uni = shared_universe(o.n());
  std::vector<u64> right(uni.class_count(), 0);
  for (u64 i = 0; i < uni.size(); ++i) right[uni.class_of(i)] += o.index_in_correct_set(i) ? 1 : 0;
  ClassSurvey s;
  for (std::uint32_t id = 0; id < uni.class_count(); ++id) {
    const double size = static_cast<double>(uni.class_size(id));
    if (size < min_class_size) continue;
    const double f = static_cast<double>(right[id]) / size;
    ++s.classes_checked;
    if (f <= floor) ++s.classes_below;
    s.min_correctness = std::min(s.min_correctness, f);
  }
  return s;
}

double large_class_threshold(int n, double epsilon, u64 oracles) {
  if (!(epsilon > 0.0)) throw UsageError("epsilon must be positive");
  if (oracles == 0) throw UsageError("need at least one oracle");
  const auto classes = static_cast<double>(shared_universe(n).class_count());
  return 8.0 / (epsilon * epsilon) * std::log(static_cast<double>(oracles) * classes);
}

}  // namespace rarecase
