#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fatpoints {

inline constexpr int kMaxPoints = 8;

/// A class dL - m_1 E_1 - ... - m_r E_r in the divisor class group of the
/// blow-up of the plane at r <= 8 points. The multiplicities are stored with
/// the sign of the fat-point notation, so F.E_i == m_i.
class DivisorClass {
 public:
  DivisorClass() = default;
  DivisorClass(int degree, std::vector<int> mults);

  static DivisorClass zero(int r);
  static DivisorClass line(int r);
  /// E_i for 1 <= i <= r.
  static DivisorClass exceptional(int r, int i);

  int r() const { return static_cast<int>(mults_.size()); }
  int degree() const { return degree_; }
  std::span<const int> mults() const { return mults_; }
  /// m_i, 1-based.
  int mult(int i) const;

  bool is_zero() const;
  /// Multiplicities sorted nonincreasing.
  DivisorClass sorted() const;
  /// Drops E_i (1-based), giving a class on the blow-up at r-1 points.
  DivisorClass drop_point(int i) const;

  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator-(const DivisorClass& a);
  friend DivisorClass operator*(int k, const DivisorClass& a);

  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;

 private:
  int degree_ = 0;
  std::vector<int> mults_;
};

/// Deterministic total order: degree, then sorted multiplicities, then the
/// multiplicities as given.
std::strong_ordering compare(const DivisorClass& a, const DivisorClass& b);

struct ClassLess {
  bool operator()(const DivisorClass& a, const DivisorClass& b) const {
    return compare(a, b) < 0;
  }
};

/// Parses "d; m1,m2,...,mr" (spaces optional, "d" or "d;" for r = 0).
DivisorClass parse_class(std::string_view text);
std::string format_class(const DivisorClass& f);
std::ostream& operator<<(std::ostream& os, const DivisorClass& f);

/// Parses a comma-separated integer list such as "1,1,2". Empty text is the empty list.
std::vector<int> parse_int_list(std::string_view text);

}  // namespace fatpoints
