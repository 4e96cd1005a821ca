#ifndef PSOLAB_FIXTURE_HPP
#define PSOLAB_FIXTURE_HPP

#include <vector>

#include "psolab/experiment.hpp"
#include "psolab/stats.hpp"

namespace psolab::fixture {

/// The bundled reference dataset: evaluation counts from a 30-run benchmark
/// of the four Full-model variants on Schaffer F6 (budget 4000). The
/// statistics pipeline's regression anchors all derive from this dataset.
/// Groups come back in RS, RA, SS, SA order.
std::vector<stats::SampleGroup> fixture_groups();

/// The same dataset as 120 run records (variant, run_index 1..30,
/// evaluations; seed/fitness/runtime are not part of the dataset and are
/// recorded as zero; success = evaluations < 4000).
std::vector<experiment::RunRecord> fixture_records();

} // namespace psolab::fixture

#endif // PSOLAB_FIXTURE_HPP
