#include "moonshine/hnf.hpp"

namespace moonshine {

HermiteResult hermiteNormalForm(const IntMatrix& m) {
    IntMatrix h = m;
    IntMatrix u = IntMatrix::identity(m.rows());
    const std::size_t rows = m.rows();
    std::size_t pivotRow = 0;
    ExactInt q;

    for (std::size_t col = 0; col < m.cols() && pivotRow < rows; ++col) {
        // Euclid down the column: keep the smallest nonzero entry as pivot and
        // reduce everything below it until only the pivot survives.
        while (true) {
            std::size_t best = rows;
            for (std::size_t r = pivotRow; r < rows; ++r) {
                if (h(r, col) == 0) continue;
                if (best == rows || mpz_cmpabs(h(r, col).get_mpz_t(), h(best, col).get_mpz_t()) < 0) best = r;
            }
            if (best == rows) break;
            h.swapRows(pivotRow, best);
            u.swapRows(pivotRow, best);
            bool done = true;
            for (std::size_t r = pivotRow + 1; r < rows; ++r) {
                if (h(r, col) == 0) continue;
                mpz_fdiv_q(q.get_mpz_t(), h(r, col).get_mpz_t(), h(pivotRow, col).get_mpz_t());
                q = -q;
                h.addRowMultiple(r, pivotRow, q);
                u.addRowMultiple(r, pivotRow, q);
                if (h(r, col) != 0) done = false;
            }
            if (done) break;
        }
        if (h(pivotRow, col) == 0) continue;
        if (h(pivotRow, col) < 0) {
            h.negateRow(pivotRow);
            u.negateRow(pivotRow);
        }
        for (std::size_t r = 0; r < pivotRow; ++r) {
            mpz_fdiv_q(q.get_mpz_t(), h(r, col).get_mpz_t(), h(pivotRow, col).get_mpz_t());
            q = -q;
            h.addRowMultiple(r, pivotRow, q);
            u.addRowMultiple(r, pivotRow, q);
        }
        ++pivotRow;
    }
    return {std::move(h), std::move(u), pivotRow};
}

bool isHermiteNormalForm(const IntMatrix& h) {
    std::size_t lastPivot = 0;
    bool seenZeroRow = false;
    for (std::size_t r = 0; r < h.rows(); ++r) {
        std::size_t c = 0;
        while (c < h.cols() && h(r, c) == 0) ++c;
        if (c == h.cols()) {
            seenZeroRow = true;
            continue;
        }
        if (seenZeroRow) return false;
        if (r > 0 && c <= lastPivot) return false;
        if (h(r, c) <= 0) return false;
        for (std::size_t above = 0; above < r; ++above) {
            if (h(above, c) < 0 || h(above, c) >= h(r, c)) return false;
        }
        lastPivot = c;
    }
    return true;
}

}  // namespace moonshine
