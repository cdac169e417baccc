#ifndef SIGINV_SIGNATURE_HPP
#define SIGINV_SIGNATURE_HPP

#include "siginv/path.hpp"
#include "siginv/tensor_series.hpp"

namespace siginv {

// truncated signature of a piecewise-linear path: left-to-right Chen product
// of the segment exponentials. Pass first_letter 0 for time-augmented paths
// so words address coordinate 0 with letter 0.
TensorSeries signature(const PiecewisePath& path, int truncation_level, Letter first_letter = 1);

}  // namespace siginv

#endif
