#include "arrprod/geometry.hpp"

#include <sstream>

#include "arrprod/error.hpp"

namespace arrprod {

Triple canonical_triple(const Triple& raw) {
  Integer common_den = 1;
  for (const auto& r : raw) common_den = lcm(common_den, r.denominator());

  std::array<Integer, 3> ints;
  Integer g = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    ints[i] = raw[i].numerator() * (common_den / raw[i].denominator());
    g = gcd(g, ints[i]);
  }
  if (sgn(g) == 0) throw Error(ErrorCode::ZeroTriple, "triple (0, 0, 0) does not define a line or point");

  int leading_sign = 0;
  for (const auto& v : ints) {
    if (sgn(v) != 0) {
      leading_sign = sgn(v);
      break;
    }
  }
  if (leading_sign < 0) g = -g;

  Triple out;
  for (std::size_t i = 0; i < 3; ++i) out[i] = Rational(Integer(ints[i] / g));
  return out;
}

Rational dot(const Triple& a, const Triple& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Triple cross(const Triple& a, const Triple& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

ProjLine::ProjLine(const Triple& raw, std::string label)
    : coeffs_(canonical_triple(raw)), label_(std::move(label)) {}

ProjPoint::ProjPoint(const Triple& raw) : coords_(canonical_triple(raw)) {}

std::string ProjPoint::to_string() const {
  std::ostringstream os;
  os << '[' << coords_[0] << ':' << coords_[1] << ':' << coords_[2] << ']';
  return os.str();
}

AffLine::AffLine(const Triple& raw, std::string label) : label_(std::move(label)) {
  if (raw[0].is_zero() && raw[1].is_zero()) {
    throw Error(ErrorCode::DegenerateLine, "affine line needs a nonzero x or y coefficient");
  }
  coeffs_ = canonical_triple(raw);
}

ProjLine normalize_line(const Triple& raw, std::string label) { return ProjLine(raw, std::move(label)); }

ProjPoint intersect(const ProjLine& l1, const ProjLine& l2) {
  if (l1 == l2) throw Error(ErrorCode::EqualLines, "cannot intersect a line with itself");
  return ProjPoint(cross(l1.coeffs(), l2.coeffs()));
}

bool point_on_line(const ProjPoint& p, const ProjLine& l) { return dot(p.coords(), l.coeffs()).is_zero(); }

ProjLine projectivize(const AffLine& l) { return ProjLine(l.coeffs(), l.label()); }

AffLine restrict_to_affine(const ProjLine& l, const ProjLine& infinity) {
  if (l == infinity) {
    throw Error(ErrorCode::LineAtInfinity, "line '" + l.label() + "' is the line at infinity");
  }
  const Triple& inf = infinity.coeffs();
  const Triple& m = l.coeffs();

  std::size_t k = 2;
  while (inf[k].is_zero()) --k;
  std::size_t i = (k == 0) ? 1 : 0;
  std::size_t j = (k == 2) ? 1 : 2;

  // X_k = (w - inf_i u - inf_j v) / inf_k, substituted into m . X.
  const Rational ratio = m[k] / inf[k];
  return AffLine({m[i] - ratio * inf[i], m[j] - ratio * inf[j], ratio}, l.label());
}

}  // namespace arrprod
