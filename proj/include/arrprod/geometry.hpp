#pragma once

#include <array>
#include <compare>
#include <string>

#include "arrprod/rational.hpp"

namespace arrprod {

using Triple = std::array<Rational, 3>;

/// Scales a nonzero triple to coprime integers whose first nonzero entry is
/// positive. Proportional triples map to the same result.
Triple canonical_triple(const Triple& raw);

Rational dot(const Triple& a, const Triple& b);
Triple cross(const Triple& a, const Triple& b);

/// The line a*x + b*y + c*z = 0 of the projective plane, in canonical form.
/// Equality compares coefficients only; the label is carried along for
/// reporting.
class ProjLine {
 public:
  ProjLine(const Triple& raw, std::string label = {});

  const Triple& coeffs() const { return coeffs_; }
  const std::string& label() const { return label_; }

  friend bool operator==(const ProjLine& a, const ProjLine& b) { return a.coeffs_ == b.coeffs_; }

 private:
  Triple coeffs_;
  std::string label_;
};

/// Homogeneous point [x:y:z] in canonical form.
class ProjPoint {
 public:
  explicit ProjPoint(const Triple& raw);

  const Triple& coords() const { return coords_; }
  /// `[x:y:z]` with exact integer entries.
  std::string to_string() const;

  friend bool operator==(const ProjPoint&, const ProjPoint&) = default;
  /// Lexicographic on canonical coordinates.
  friend std::strong_ordering operator<=>(const ProjPoint& a, const ProjPoint& b) {
    return a.coords_ <=> b.coords_;
  }

 private:
  Triple coords_;
};

/// The affine line a*x + b*y + c = 0, stored with the same canonical scaling
/// as ProjLine. (a, b) must not both vanish.
class AffLine {
 public:
  AffLine(const Triple& raw, std::string label = {});

  const Triple& coeffs() const { return coeffs_; }
  const std::string& label() const { return label_; }

  friend bool operator==(const AffLine& a, const AffLine& b) { return a.coeffs_ == b.coeffs_; }

 private:
  Triple coeffs_;
  std::string label_;
};

ProjLine normalize_line(const Triple& raw, std::string label = {});

/// Unique common point of two distinct lines. Throws EqualLines otherwise.
ProjPoint intersect(const ProjLine& l1, const ProjLine& l2);

bool point_on_line(const ProjPoint& p, const ProjLine& l);

/// a*x + b*y + c = 0  ->  a*x + b*y + c*z = 0.
ProjLine projectivize(const AffLine& l);

/// Expresses `l` in the affine chart that sends `infinity` to z = 0.
///
/// When `infinity` is z = 0 the chart is the identity. Otherwise, with k the
/// largest index where `infinity` has a nonzero coefficient and i < j the two
/// remaining indices, the new coordinates are (u, v, w) = (X_i, X_j,
/// infinity . X). That change of basis is invertible because infinity_k != 0,
/// and setting w = 1 yields the affine line.
AffLine restrict_to_affine(const ProjLine& l, const ProjLine& infinity);

}  // namespace arrprod
