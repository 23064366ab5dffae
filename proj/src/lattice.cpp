#include "polynorm/lattice.hpp"

#include "polynorm/error.hpp"

namespace polynorm {

LatticePoint::LatticePoint(std::initializer_list<long> coords) {
  coords_.reserve(coords.size());
  for (long c : coords) coords_.emplace_back(c);
}

bool LatticePoint::is_zero() const {
  for (const auto& c : coords_) {
    if (c != 0) return false;
  }
  return true;
}

LatticePoint LatticePoint::drop_last() const {
  if (coords_.empty()) throw_dimension_mismatch(1, 0);
  return LatticePoint(std::vector<Integer>(coords_.begin(), coords_.end() - 1));
}

LatticePoint LatticePoint::append(const Integer& value) const {
  std::vector<Integer> out = coords_;
  out.push_back(value);
  return LatticePoint(std::move(out));
}

LatticePoint LatticePoint::operator-() const {
  std::vector<Integer> out;
  out.reserve(coords_.size());
  for (const auto& c : coords_) out.emplace_back(-c);
  return LatticePoint(std::move(out));
}

LatticePoint operator+(const LatticePoint& a, const LatticePoint& b) {
  require_same_dim(a.dim(), b.dim());
  std::vector<Integer> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a.coords_[i] + b.coords_[i];
  return LatticePoint(std::move(out));
}

LatticePoint operator-(const LatticePoint& a, const LatticePoint& b) {
  require_same_dim(a.dim(), b.dim());
  std::vector<Integer> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) out[i] = a.coords_[i] - b.coords_[i];
  return LatticePoint(std::move(out));
}

std::strong_ordering operator<=>(const LatticePoint& a, const LatticePoint& b) {
  if (a.dim() != b.dim()) return a.dim() <=> b.dim();
  for (std::size_t i = 0; i < a.dim(); ++i) {
    const int c = cmp(a.coords_[i], b.coords_[i]);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::string LatticePoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += coords_[i].get_str();
  }
  return s + ")";
}

RationalPoint::RationalPoint(std::vector<Rational> coords) : coords_(std::move(coords)) {
  for (auto& c : coords_) c.canonicalize();
}

RationalPoint::RationalPoint(const LatticePoint& p) {
  coords_.reserve(p.dim());
  for (const auto& c : p.coords()) coords_.emplace_back(c);
}

RationalPoint::RationalPoint(std::initializer_list<Rational> coords)
    : RationalPoint(std::vector<Rational>(coords)) {}

std::string RationalPoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) s += ",";
    s += coords_[i].get_str();
  }
  return s + ")";
}

Integer dot(const LatticePoint& a, const LatticePoint& b) {
  require_same_dim(a.dim(), b.dim());
  Integer sum = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) sum += a[i] * b[i];
  return sum;
}

}  // namespace polynorm
