#pragma once

#include <cstdint>
#include <vector>

#include "cmint/quadcm.hpp"

namespace cmint {

/// Every admissible (D, Delta, w) with Norm(Delta) <= bound, Delta taken up
/// to multiplication by totally positive units (see canonical_delta) and w up
/// to 2 O_F. Delta and its conjugate are both listed. Sorted by
/// (Dtilde, u, v). An inadmissible D yields an empty list.
std::vector<CmFieldData> enumerate_fields(std::int64_t D, std::int64_t bound);

}  // namespace cmint
