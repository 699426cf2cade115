#pragma once

#include "bbw/numeric.hpp"

#include <vector>

namespace bbw::qla {

using QRow = std::vector<Rat>;
using QMat = std::vector<QRow>;

// Rank over Q by fraction-free (Bareiss) elimination on denominator-cleared
// integer rows.
std::size_t rank(const QMat& m);

// Rank of the reduction mod a fixed 61-bit prime: a lower bound for the
// rank over Q, computed in machine words.  Callers with a matching upper
// bound can promote it to an exact rank.
std::size_t rank_lower_bound(const QMat& m);

// row_space(a) contains row_space(b)
bool row_space_contains(const QMat& a, const QMat& b);

// equality of row spaces
bool same_row_space(const QMat& a, const QMat& b);

}  // namespace bbw::qla
