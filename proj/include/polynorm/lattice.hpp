#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace polynorm {

using Integer = mpz_class;
using Rational = mpq_class;

/// A point of the integer lattice Z^n. Dimension 0 is legal and denotes the
/// single point of R^0.
class LatticePoint {
 public:
  LatticePoint() = default;
  explicit LatticePoint(std::vector<Integer> coords) : coords_(std::move(coords)) {}
  LatticePoint(std::initializer_list<long> coords);

  static LatticePoint zero(std::size_t dim) {
    return LatticePoint(std::vector<Integer>(dim, Integer(0)));
  }

  std::size_t dim() const noexcept { return coords_.size(); }
  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Integer> coords() const noexcept { return coords_; }

  bool is_zero() const;

  /// Forgets the last coordinate. Requires dim() >= 1.
  LatticePoint drop_last() const;
  /// Appends one coordinate.
  LatticePoint append(const Integer& value) const;

  LatticePoint operator-() const;
  friend LatticePoint operator+(const LatticePoint& a, const LatticePoint& b);
  friend LatticePoint operator-(const LatticePoint& a, const LatticePoint& b);

  friend bool operator==(const LatticePoint& a, const LatticePoint& b) {
    return a.coords_ == b.coords_;
  }
  /// Lexicographic on coordinates; shorter vectors first.
  friend std::strong_ordering operator<=>(const LatticePoint& a,
                                          const LatticePoint& b);

  std::string to_string() const;

 private:
  std::vector<Integer> coords_;
};

/// A point of Q^n; every coordinate is kept in lowest terms.
class RationalPoint {
 public:
  RationalPoint() = default;
  explicit RationalPoint(std::vector<Rational> coords);
  explicit RationalPoint(const LatticePoint& p);
  RationalPoint(std::initializer_list<Rational> coords);

  std::size_t dim() const noexcept { return coords_.size(); }
  const Rational& operator[](std::size_t i) const { return coords_[i]; }
  std::span<const Rational> coords() const noexcept { return coords_; }

  friend bool operator==(const RationalPoint& a, const RationalPoint& b) {
    return a.coords_ == b.coords_;
  }

  std::string to_string() const;

 private:
  std::vector<Rational> coords_;
};

Integer dot(const LatticePoint& a, const LatticePoint& b);

}  // namespace polynorm
