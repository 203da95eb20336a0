#include "moonshine/matrix.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace moonshine {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw std::invalid_argument("IntMatrix: ragged initializer");
        for (long v : r) data_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

void IntMatrix::swapRows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::addRowMultiple(std::size_t target, std::size_t source, const ExactInt& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < cols_; ++j) {
        mpz_addmul((*this)(target, j).get_mpz_t(), factor.get_mpz_t(), (*this)(source, j).get_mpz_t());
    }
}

void IntMatrix::negateRow(std::size_t i) {
    for (auto& v : row(i)) v = -v;
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("IntMatrix product: shape mismatch");
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t k = 0; k < a.cols(); ++k) {
            if (a(i, k) == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j)
                mpz_addmul(c(i, j).get_mpz_t(), a(i, k).get_mpz_t(), b(k, j).get_mpz_t());
        }
    return c;
}

ExactInt determinant(const IntMatrix& m) {
    if (!m.isSquare()) throw std::invalid_argument("determinant: matrix is not square");
    const std::size_t n = m.rows();
    if (n == 0) return 1;
    IntMatrix a = m;
    ExactInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0) ++p;
            if (p == n) return 0;
            a.swapRows(k, p);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                ExactInt v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
            }
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

namespace {

using RationalMatrix = std::vector<std::vector<ExactRational>>;

RationalMatrix toRational(const IntMatrix& m) {
    RationalMatrix r(m.rows(), std::vector<ExactRational>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r[i][j] = m(i, j);
    return r;
}

// Gauss-Jordan on [a | b]; returns false when a is singular.
bool gaussJordan(RationalMatrix& a, RationalMatrix& b) {
    const std::size_t n = a.size();
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && a[p][k] == 0) ++p;
        if (p == n) return false;
        std::swap(a[k], a[p]);
        std::swap(b[k], b[p]);
        const ExactRational inv = 1 / a[k][k];
        for (auto& v : a[k]) v *= inv;
        for (auto& v : b[k]) v *= inv;
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || a[i][k] == 0) continue;
            const ExactRational f = a[i][k];
            for (std::size_t j = 0; j < n; ++j) a[i][j] -= f * a[k][j];
            for (std::size_t j = 0; j < b[i].size(); ++j) b[i][j] -= f * b[k][j];
        }
    }
    return true;
}

}  // namespace

std::optional<IntMatrix> inverseUnimodular(const IntMatrix& m) {
    if (!m.isSquare()) return std::nullopt;
    const std::size_t n = m.rows();
    RationalMatrix a = toRational(m);
    RationalMatrix b = toRational(IntMatrix::identity(n));
    if (!gaussJordan(a, b)) return std::nullopt;
    IntMatrix inv(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (b[i][j].get_den() != 1) return std::nullopt;
            inv(i, j) = b[i][j].get_num();
        }
    const ExactInt d = determinant(inv);
    if (d != 1 && d != -1) return std::nullopt;
    return inv;
}

std::optional<std::vector<ExactRational>> solveLeft(const IntMatrix& m, std::span<const ExactInt> target) {
    // x m = t  <=>  m^T x^T = t^T
    if (!m.isSquare() || target.size() != m.cols()) throw std::invalid_argument("solveLeft: shape mismatch");
    RationalMatrix a = toRational(m.transposed());
    RationalMatrix b(target.size(), std::vector<ExactRational>(1));
    for (std::size_t i = 0; i < target.size(); ++i) b[i][0] = target[i];
    if (!gaussJordan(a, b)) return std::nullopt;
    std::vector<ExactRational> x(target.size());
    for (std::size_t i = 0; i < x.size(); ++i) x[i] = b[i][0];
    return x;
}

GramMatrix::GramMatrix(IntMatrix entries) : entries_(std::move(entries)) {
    if (!entries_.isSquare()) throw std::invalid_argument("GramMatrix: not square");
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = i + 1; j < dim(); ++j)
            if (entries_(i, j) != entries_(j, i)) throw std::invalid_argument("GramMatrix: not symmetric");
}

bool GramMatrix::isEven() const {
    for (std::size_t i = 0; i < dim(); ++i)
        if (mpz_even_p(entries_(i, i).get_mpz_t()) == 0) return false;
    return true;
}

Inertia GramMatrix::inertia() const {
    const std::size_t n = dim();
    RationalMatrix a = toRational(entries_);
    auto symmetricSwap = [&](std::size_t x, std::size_t y) {
        std::swap(a[x], a[y]);
        for (auto& r : a) std::swap(r[x], r[y]);
    };
    Inertia out;
    for (std::size_t k = 0; k < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && a[p][p] == 0) ++p;
            if (p < n) {
                symmetricSwap(k, p);
            } else {
                std::size_t q = k + 1;
                while (q < n && a[k][q] == 0) ++q;
                if (q == n) {
                    ++out.zero;
                    continue;
                }
                // basis change e_k -> e_k + e_q makes the pivot 2 a[k][q]
                for (std::size_t j = 0; j < n; ++j) a[k][j] += a[q][j];
                for (std::size_t i = 0; i < n; ++i) a[i][k] += a[i][q];
            }
        }
        const ExactRational pivot = a[k][k];
        (pivot > 0 ? out.positive : out.negative)++;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (a[i][k] == 0) continue;
            const ExactRational f = a[i][k] / pivot;
            // Schur complement; the trailing block stays symmetric
            for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return out;
}

bool GramMatrix::isPositiveDefinite() const { return inertia().positive == dim(); }

ExactInt GramMatrix::norm(std::span<const ExactInt> x) const {
    if (x.size() != dim()) throw std::invalid_argument("GramMatrix::norm: dimension mismatch");
    ExactInt total = 0;
    ExactInt rowSum;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (x[i] == 0) continue;
        rowSum = 0;
        for (std::size_t j = 0; j < dim(); ++j)
            mpz_addmul(rowSum.get_mpz_t(), entries_(i, j).get_mpz_t(), x[j].get_mpz_t());
        mpz_addmul(total.get_mpz_t(), rowSum.get_mpz_t(), x[i].get_mpz_t());
    }
    return total;
}

GramMatrix GramMatrix::transformed(const IntMatrix& t) const {
    return GramMatrix(t * entries_ * t.transposed());
}

nlohmann::json toJson(const GramMatrix& g) {
    nlohmann::json rows = nlohmann::json::array();
    for (std::size_t i = 0; i < g.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < g.dim(); ++j) row.push_back(g(i, j).get_str());
        rows.push_back(std::move(row));
    }
    return {{"dim", std::to_string(g.dim())}, {"entries", std::move(rows)}};
}

namespace {

ExactInt integerFromJson(const nlohmann::json& v) {
    if (v.is_string()) return ExactInt(v.get<std::string>());
    if (v.is_number_integer()) return ExactInt(v.dump());
    throw std::invalid_argument("expected a decimal-string integer");
}

}  // namespace

GramMatrix gramFromJson(const nlohmann::json& j) {
    const ExactInt dimValue = integerFromJson(j.at("dim"));
    const auto& rows = j.at("entries");
    if (dimValue < 0 || rows.size() != dimValue.get_ui()) throw std::invalid_argument("gram json: dim mismatch");
    const std::size_t n = rows.size();
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (rows[i].size() != n) throw std::invalid_argument("gram json: row length mismatch");
        for (std::size_t k = 0; k < n; ++k) m(i, k) = integerFromJson(rows[i][k]);
    }
    return GramMatrix(std::move(m));
}

ExactInt floorOf(const ExactRational& q) {
    ExactInt r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

ExactInt ceilOf(const ExactRational& q) {
    ExactInt r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

}  // namespace moonshine
