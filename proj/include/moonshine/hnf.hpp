#pragma once

#include "moonshine/matrix.hpp"

namespace moonshine {

struct HermiteResult {
    IntMatrix h;  // = u * m
    IntMatrix u;  // unimodular, rows x rows
    std::size_t rank = 0;
};

/// Row-style Hermite normal form H = U M.
///
/// H is in echelon form: the first `rank` rows are nonzero, each pivot is
/// positive and lies strictly right of the pivot above it, and every entry
/// above a pivot is reduced into [0, pivot). Rows beyond `rank` are zero, so
/// the matching rows of U span the left kernel of M.
HermiteResult hermiteNormalForm(const IntMatrix& m);

/// Shape predicate for the form produced above.
bool isHermiteNormalForm(const IntMatrix& h);

}  // namespace moonshine
