#include "moonshine/lorentz.hpp"

#include "moonshine/hnf.hpp"

#include <stdexcept>
#include <string>

namespace moonshine {

bool isMember(std::span<const ExactInt> doubled) {
    if (doubled.size() != kLorentzDim) return false;
    const int parity = mpz_odd_p(doubled[0].get_mpz_t()) != 0;
    ExactInt s = -doubled[0];
    for (std::size_t i = 1; i < kLorentzDim; ++i) {
        if ((mpz_odd_p(doubled[i].get_mpz_t()) != 0) != parity) return false;
        s += doubled[i];
    }
    return mpz_divisible_ui_p(s.get_mpz_t(), 4) != 0;
}

LorentzVector LorentzVector::fromDoubled(Doubled doubled) {
    if (!isMember(doubled)) throw std::invalid_argument("LorentzVector: coordinates are not in II_{25,1}");
    LorentzVector v;
    v.d_ = std::move(doubled);
    return v;
}

LorentzVector LorentzVector::fromDoubled(std::span<const long> doubled) {
    if (doubled.size() != kLorentzDim) throw std::invalid_argument("LorentzVector: expected 26 coordinates");
    Doubled d;
    for (std::size_t i = 0; i < kLorentzDim; ++i) d[i] = doubled[i];
    return fromDoubled(std::move(d));
}

bool LorentzVector::isZero() const {
    for (const auto& x : d_)
        if (x != 0) return false;
    return true;
}

LorentzVector operator+(const LorentzVector& a, const LorentzVector& b) {
    LorentzVector r;
    for (std::size_t i = 0; i < kLorentzDim; ++i) r.d_[i] = a.d_[i] + b.d_[i];
    return r;
}

LorentzVector operator-(const LorentzVector& a, const LorentzVector& b) {
    LorentzVector r;
    for (std::size_t i = 0; i < kLorentzDim; ++i) r.d_[i] = a.d_[i] - b.d_[i];
    return r;
}

LorentzVector operator*(const ExactInt& c, const LorentzVector& v) {
    LorentzVector r;
    for (std::size_t i = 0; i < kLorentzDim; ++i) r.d_[i] = c * v.d_[i];
    return r;
}

ExactInt innerProduct(const LorentzVector& a, const LorentzVector& b) {
    ExactInt s = -(a[0] * b[0]);
    for (std::size_t i = 1; i < kLorentzDim; ++i) mpz_addmul(s.get_mpz_t(), a[i].get_mpz_t(), b[i].get_mpz_t());
    if (mpz_divisible_ui_p(s.get_mpz_t(), 4) == 0) {
        throw std::logic_error("innerProduct: non-integral pairing; inputs are not lattice members");
    }
    mpz_divexact_ui(s.get_mpz_t(), s.get_mpz_t(), 4);
    return s;
}

LorentzVector weylVector() {
    LorentzVector::Doubled d;
    d[0] = 140;
    for (std::size_t i = 1; i < kLorentzDim; ++i) d[i] = 2 * static_cast<long>(i - 1);
    return LorentzVector::fromDoubled(std::move(d));
}

GramMatrix gramOf(std::span<const LorentzVector> vectors) {
    IntMatrix g(vectors.size(), vectors.size());
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = i; j < vectors.size(); ++j) {
            g(i, j) = innerProduct(vectors[i], vectors[j]);
            g(j, i) = g(i, j);
        }
    return GramMatrix(std::move(g));
}

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw std::logic_error(std::string("construction self-check failed: ") + what);
}

IntMatrix doubledRows(std::span<const LorentzVector> vectors) {
    IntMatrix m(vectors.size(), kLorentzDim);
    for (std::size_t i = 0; i < vectors.size(); ++i)
        for (std::size_t j = 0; j < kLorentzDim; ++j) m(i, j) = vectors[i][j];
    return m;
}

LorentzBasis buildLatticeBasis() {
    // Generators in doubled coordinates: the D_26 simple roots plus the glue
    // vector (1/2, ..., 1/2). The HNF of the generator rows is a basis.
    const std::size_t n = kLorentzDim;
    IntMatrix gens(n + 1, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        gens(i, i) = 2;
        gens(i, i + 1) = -2;
    }
    gens(n - 1, n - 2) = 2;
    gens(n - 1, n - 1) = 2;
    for (std::size_t j = 0; j < n; ++j) gens(n, j) = 1;

    const HermiteResult hnf = hermiteNormalForm(gens);
    require(hnf.rank == n, "generators have full rank");

    LorentzBasis basis;
    for (std::size_t i = 0; i < n; ++i) {
        LorentzVector::Doubled d;
        for (std::size_t j = 0; j < n; ++j) d[j] = hnf.h(i, j);
        require(isMember(d), "basis vector is a lattice member");
        basis.vectors.push_back(LorentzVector::fromDoubled(std::move(d)));
    }
    basis.gram = gramOf(basis.vectors);
    require(basis.gram.determinant() == -1, "Gram determinant is -1");
    require(basis.gram.isEven(), "Gram diagonal is even");
    const Inertia in = basis.gram.inertia();
    require(in.positive == 25 && in.negative == 1 && in.zero == 0, "signature is (25,1)");
    return basis;
}

}  // namespace

const LorentzBasis& latticeBasis() {
    static const LorentzBasis basis = buildLatticeBasis();
    return basis;
}

std::vector<ExactInt> basisCoordinates(const LorentzVector& v) {
    static const IntMatrix rows = doubledRows(latticeBasis().vectors);
    const auto x = solveLeft(rows, v.doubled());
    if (!x) throw std::logic_error("basisCoordinates: lattice basis is singular");
    std::vector<ExactInt> out;
    out.reserve(x->size());
    for (const auto& q : *x) {
        if (q.get_den() != 1) throw std::invalid_argument("basisCoordinates: vector is not in the lattice");
        out.push_back(q.get_num());
    }
    return out;
}

LorentzVector fromBasisCoordinates(std::span<const ExactInt> coords) {
    const auto& basis = latticeBasis().vectors;
    if (coords.size() != basis.size()) throw std::invalid_argument("fromBasisCoordinates: expected 26 coordinates");
    LorentzVector::Doubled d;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        if (coords[i] == 0) continue;
        for (std::size_t j = 0; j < kLorentzDim; ++j)
            mpz_addmul(d[j].get_mpz_t(), coords[i].get_mpz_t(), basis[i][j].get_mpz_t());
    }
    return LorentzVector::fromDoubled(std::move(d));
}

namespace {

ExactInt gcdOf(std::span<const ExactInt> xs) {
    ExactInt g = 0;
    for (const auto& x : xs) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    return g;
}

// Unimodular U (rows = new basis in old coordinates) with U f = (1, 0, ..., 0)^T.
IntMatrix splittingTransform(std::span<const ExactInt> f) {
    IntMatrix column(f.size(), 1);
    for (std::size_t i = 0; i < f.size(); ++i) column(i, 0) = f[i];
    HermiteResult hnf = hermiteNormalForm(column);
    require(hnf.rank == 1 && hnf.h(0, 0) == 1, "functional is primitive");
    return std::move(hnf.u);
}

struct ComplementCoordinates {
    IntMatrix kernel;  // 25 x 26, rows are complement vectors in lattice-basis coordinates
    IntMatrix transform;  // the full 26 x 26 splitting transform
};

ComplementCoordinates complementCoordinates(const LorentzVector& w) {
    if (w.isZero()) throw std::invalid_argument("orthogonalComplementBasis: w = 0");
    const std::vector<ExactInt> coords = basisCoordinates(w);
    if (gcdOf(coords) != 1) throw std::invalid_argument("orthogonalComplementBasis: non-primitive vector");

    const auto& basis = latticeBasis().vectors;
    std::vector<ExactInt> functional;
    functional.reserve(basis.size());
    for (const auto& b : basis) functional.push_back(innerProduct(b, w));

    IntMatrix u = splittingTransform(functional);
    IntMatrix kernel(kLorentzDim - 1, kLorentzDim);
    for (std::size_t r = 1; r < kLorentzDim; ++r)
        for (std::size_t c = 0; c < kLorentzDim; ++c) kernel(r - 1, c) = u(r, c);
    return {std::move(kernel), std::move(u)};
}

std::vector<LorentzVector> vectorsFromCoordinates(const IntMatrix& coords) {
    std::vector<LorentzVector> out;
    out.reserve(coords.rows());
    for (std::size_t r = 0; r < coords.rows(); ++r) out.push_back(fromBasisCoordinates(coords.row(r)));
    return out;
}

std::vector<LorentzVector> buildLeechQuotientBasis() {
    const LorentzVector w = weylVector();
    const ComplementCoordinates cc = complementCoordinates(w);

    // w in the coordinates of the full transform; its first entry is w . w = 0.
    const auto uInverse = inverseUnimodular(cc.transform);
    require(uInverse.has_value(), "splitting transform is unimodular");
    const std::vector<ExactInt> wCoords = basisCoordinates(w);
    IntMatrix wRow(1, kLorentzDim);
    for (std::size_t j = 0; j < kLorentzDim; ++j) wRow(0, j) = wCoords[j];
    const IntMatrix inTransform = wRow * *uInverse;
    require(inTransform(0, 0) == 0, "w lies in its own orthogonal complement");

    // Extend w's kernel coordinates a to a unimodular W with first row a.
    std::vector<ExactInt> a(kLorentzDim - 1);
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = inTransform(0, i + 1);
    const IntMatrix v = splittingTransform(a);
    const auto vInverse = inverseUnimodular(v);
    require(vInverse.has_value(), "extension transform is unimodular");
    const IntMatrix extended = vInverse->transposed() * cc.kernel;

    std::vector<LorentzVector> out = vectorsFromCoordinates(extended);
    require(out.front() == w, "w is the first basis vector of its complement");
    return out;
}

}  // namespace

std::vector<LorentzVector> orthogonalComplementBasis(const LorentzVector& w) {
    std::vector<LorentzVector> out = vectorsFromCoordinates(complementCoordinates(w).kernel);
    for (const auto& x : out) require(innerProduct(x, w) == 0, "complement vector is orthogonal to w");
    return out;
}

const std::vector<LorentzVector>& leechQuotientBasis() {
    static const std::vector<LorentzVector> basis = buildLeechQuotientBasis();
    return basis;
}

GramMatrix quotientGram(const LorentzVector& w, std::span<const LorentzVector> representatives) {
    if (innerProduct(w, w) != 0) throw std::invalid_argument("quotientGram: w is not isotropic");
    for (const auto& b : representatives) {
        if (innerProduct(b, w) != 0) throw std::invalid_argument("quotientGram: representative not orthogonal to w");
    }
    return gramOf(representatives);
}

namespace {

GramMatrix buildLeechGram() {
    const auto& basis = leechQuotientBasis();
    const std::span<const LorentzVector> reps(basis.begin() + 1, basis.end());
    GramMatrix g = quotientGram(basis.front(), reps);
    require(g.dim() == kLeechDim, "quotient has rank 24");
    require(g.isEven(), "quotient form is even");
    require(g.determinant() == 1, "quotient form is unimodular");
    require(g.isPositiveDefinite(), "quotient form is positive definite");
    return g;
}

}  // namespace

const GramMatrix& leechGram() {
    static const GramMatrix g = buildLeechGram();
    return g;
}

}  // namespace moonshine
