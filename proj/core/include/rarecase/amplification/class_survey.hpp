#pragma once

#include "rarecase/oracle/corrupt_oracle.hpp"

namespace rarecase {

struct ClassSurvey {
  u64 classes_checked = 0;
  u64 classes_below = 0;  // correct fraction <= floor
  double min_correctness = 1.0;
};

// Classes of at least min_class_size graphs. Exact-table oracles, n <= 7.
ClassSurvey survey_large_classes(const CorruptOracle& o, double min_class_size, double floor);

// 8/eps^2 * ln(oracles * #classes)
double large_class_threshold(int n, double epsilon, u64 oracles);

}  // namespace rarecase
