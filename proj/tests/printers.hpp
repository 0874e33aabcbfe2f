#pragma once

#include <ostream>

#include "wwlab/partition.hpp"
#include "wwlab/qseries.hpp"
#include "wwlab/series_io.hpp"

// Readable gtest failure messages.
namespace wwlab {
inline void PrintTo(const ColouredPartition& p, std::ostream* os) { *os << '"' << to_string(p) << '"'; }
inline void PrintTo(const QSeries& s, std::ostream* os) { *os << to_text(s); }
inline void PrintTo(const CoeffPoly& c, std::ostream* os) { *os << to_text(c); }
}  // namespace wwlab
