#pragma once

// The even unimodular Lorentzian lattice II_{25,1}, its isotropic Weyl vector
// and the Leech lattice as the quotient w^perp / w.
//
// Coordinate model: x = (x_0; x_1, ..., x_25) with x_0 timelike. Members have
// all-integer or all-half-integer coordinates with sum_{i>=1} x_i - x_0 even,
// and the form is sum_{i>=1} x_i y_i - x_0 y_0. Vectors are stored as doubled
// coordinates d = 2x so everything stays in Z.

#include "moonshine/matrix.hpp"

#include <array>
#include <span>
#include <vector>

namespace moonshine {

inline constexpr std::size_t kLorentzDim = 26;
inline constexpr std::size_t kLeechDim = 24;

/// Doubled-coordinate membership test for II_{25,1}; index 0 is timelike.
bool isMember(std::span<const ExactInt> doubled);

class LorentzVector {
  public:
    using Doubled = std::array<ExactInt, kLorentzDim>;

    LorentzVector() = default;  // the zero vector

    /// Throws std::invalid_argument unless the coordinates describe a member.
    static LorentzVector fromDoubled(Doubled doubled);
    static LorentzVector fromDoubled(std::span<const long> doubled);

    const Doubled& doubled() const noexcept { return d_; }
    const ExactInt& operator[](std::size_t i) const { return d_[i]; }
    bool isZero() const;

    friend LorentzVector operator+(const LorentzVector& a, const LorentzVector& b);
    friend LorentzVector operator-(const LorentzVector& a, const LorentzVector& b);
    friend LorentzVector operator*(const ExactInt& c, const LorentzVector& v);
    friend bool operator==(const LorentzVector&, const LorentzVector&) = default;

  private:
    Doubled d_{};
};

/// sum_{i>=1} x_i y_i - x_0 y_0; always an integer for members.
ExactInt innerProduct(const LorentzVector& a, const LorentzVector& b);

/// (0, 1, 2, ..., 24 ; 70), the isotropic Weyl vector.
LorentzVector weylVector();

/// Gram matrix of an arbitrary family of members.
GramMatrix gramOf(std::span<const LorentzVector> vectors);

struct LorentzBasis {
    std::vector<LorentzVector> vectors;  // 26 members
    GramMatrix gram;                      // det -1, even, signature (25, 1)
};

/// A fixed integral basis of II_{25,1}, self-checked on construction.
const LorentzBasis& latticeBasis();

/// Coordinates of a member in latticeBasis().
std::vector<ExactInt> basisCoordinates(const LorentzVector& v);

/// Integral linear combination of latticeBasis() vectors.
LorentzVector fromBasisCoordinates(std::span<const ExactInt> coords);

/// A basis of { x in II_{25,1} : x . w = 0 } (25 vectors). w must be a nonzero
/// primitive member.
std::vector<LorentzVector> orthogonalComplementBasis(const LorentzVector& w);

/// Basis {w, b_1, ..., b_24} of w^perp for w = weylVector(), with w first.
/// Deterministic (HNF-derived) representatives.
const std::vector<LorentzVector>& leechQuotientBasis();

/// Gram matrix of b_1..b_24 on w^perp / w. Positive definite, even, det 1.
const GramMatrix& leechGram();

/// Gram of the images of b_1..b_24 in the quotient, validated as a lattice
/// form on w^perp / w (every b_i orthogonal to w, w isotropic).
GramMatrix quotientGram(const LorentzVector& w, std::span<const LorentzVector> representatives);

}  // namespace moonshine
