#include "fatpoints/divisor_class.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <ostream>
#include <sstream>

#include "fatpoints/errors.hpp"

namespace fatpoints {

DivisorClass::DivisorClass(int degree, std::vector<int> mults)
    : degree_(degree), mults_(std::move(mults)) {
  if (mults_.size() > static_cast<std::size_t>(kMaxPoints))
    throw UnsupportedError("at most " + std::to_string(kMaxPoints) +
                           " points are supported, got r = " + std::to_string(mults_.size()));
}

DivisorClass DivisorClass::zero(int r) {
  if (r < 0) throw ArgumentError("r must be nonnegative");
  return DivisorClass(0, std::vector<int>(static_cast<std::size_t>(r), 0));
}

DivisorClass DivisorClass::line(int r) {
  auto f = zero(r);
  f.degree_ = 1;
  return f;
}

DivisorClass DivisorClass::exceptional(int r, int i) {
  if (i < 1 || i > r)
    throw ArgumentError("E_" + std::to_string(i) + " does not exist for r = " + std::to_string(r));
  auto f = zero(r);
  f.mults_[static_cast<std::size_t>(i - 1)] = -1;
  return f;
}

int DivisorClass::mult(int i) const {
  if (i < 1 || i > r()) throw ArgumentError("multiplicity index out of range");
  return mults_[static_cast<std::size_t>(i - 1)];
}

bool DivisorClass::is_zero() const {
  return degree_ == 0 && std::all_of(mults_.begin(), mults_.end(), [](int m) { return m == 0; });
}

DivisorClass DivisorClass::sorted() const {
  auto f = *this;
  std::stable_sort(f.mults_.begin(), f.mults_.end(), std::greater<>());
  return f;
}

DivisorClass DivisorClass::drop_point(int i) const {
  if (i < 1 || i > r()) throw ArgumentError("cannot drop a point that does not exist");
  auto f = *this;
  f.mults_.erase(f.mults_.begin() + (i - 1));
  return f;
}

namespace {
void require_same_r(const DivisorClass& a, const DivisorClass& b) {
  if (a.r() != b.r())
    throw ArgumentError("classes live on different surfaces (r = " + std::to_string(a.r()) +
                        " vs r = " + std::to_string(b.r()) + ")");
}
}  // namespace

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  require_same_r(*this, o);
  degree_ += o.degree_;
  for (std::size_t i = 0; i < mults_.size(); ++i) mults_[i] += o.mults_[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  require_same_r(*this, o);
  degree_ -= o.degree_;
  for (std::size_t i = 0; i < mults_.size(); ++i) mults_[i] -= o.mults_[i];
  return *this;
}

DivisorClass operator-(const DivisorClass& a) { return -1 * a; }

DivisorClass operator*(int k, const DivisorClass& a) {
  auto f = a;
  f.degree_ *= k;
  for (auto& m : f.mults_) m *= k;
  return f;
}

std::strong_ordering compare(const DivisorClass& a, const DivisorClass& b) {
  if (auto c = a.r() <=> b.r(); c != 0) return c;
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  auto sa = a.sorted(), sb = b.sorted();
  auto ma = sa.mults(), mb = sb.mults();
  if (auto c = std::lexicographical_compare_three_way(ma.begin(), ma.end(), mb.begin(), mb.end());
      c != 0)
    return c;
  return std::lexicographical_compare_three_way(a.mults().begin(), a.mults().end(),
                                                b.mults().begin(), b.mults().end());
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n'))
    s.remove_suffix(1);
  return s;
}

int parse_int(std::string_view s, std::string_view context) {
  s = trim(s);
  int value = 0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), value);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw ArgumentError("malformed integer '" + std::string(s) + "' in " + std::string(context));
  return value;
}

}  // namespace

std::vector<int> parse_int_list(std::string_view text) {
  std::vector<int> out;
  text = trim(text);
  if (text.empty()) return out;
  while (true) {
    auto comma = text.find(',');
    out.push_back(parse_int(text.substr(0, comma), "integer list"));
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

DivisorClass parse_class(std::string_view text) {
  auto semi = text.find(';');
  auto degree = parse_int(text.substr(0, semi), "class degree");
  std::vector<int> mults;
  if (semi != std::string_view::npos) mults = parse_int_list(text.substr(semi + 1));
  return DivisorClass(degree, std::move(mults));
}

std::string format_class(const DivisorClass& f) {
  std::ostringstream os;
  os << f.degree() << ';';
  bool first = true;
  for (int m : f.mults()) {
    if (!first) os << ',';
    os << m;
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const DivisorClass& f) { return os << format_class(f); }

}  // namespace fatpoints
