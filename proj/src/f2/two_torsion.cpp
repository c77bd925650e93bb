#include "thetalab/f2/two_torsion.hpp"

#include <bit>
#include <charconv>
#include <stdexcept>

#include <fmt/format.h>

namespace thetalab::f2 {

Mask full_mask(int g) { return (Mask{1} << (2 * g + 2)) - 1; }

namespace {

void check_genus(int g) {
  if (g < 1 || g > kMaxGenus) throw OutOfRange(fmt::format("genus {} out of range", g));
}

Mask top_bit(int g) { return Mask{1} << (2 * g + 1); }

}  // namespace

TwoTorsionClass::TwoTorsionClass(int g, Mask bits) : g_(g) {
  check_genus(g);
  if (bits & ~full_mask(g)) throw OutOfRange(fmt::format("index beyond {} in subset", 2 * g + 2));
  if (std::popcount(bits) % 2) throw OddCardinality("subset has odd cardinality");
  key_ = (bits & top_bit(g)) ? (bits ^ full_mask(g)) : bits;
}

TwoTorsionClass TwoTorsionClass::zero(int g) { return TwoTorsionClass(g, 0); }

TwoTorsionClass TwoTorsionClass::from_indices(int g, const std::vector<int>& indices) {
  check_genus(g);
  Mask bits = 0;
  for (int i : indices) {
    if (i < 1 || i > 2 * g + 2) throw OutOfRange(fmt::format("index {} not in 1..{}", i, 2 * g + 2));
    if (bits >> (i - 1) & 1u) throw std::invalid_argument(fmt::format("repeated index {}", i));
    bits |= Mask{1} << (i - 1);
  }
  return TwoTorsionClass(g, bits);
}

TwoTorsionClass TwoTorsionClass::from_key(int g, Mask key) {
  check_genus(g);
  if (key & ~(top_bit(g) - 1)) throw OutOfRange("key uses the base index");
  if (std::popcount(key) % 2) throw OddCardinality("key has odd cardinality");
  return TwoTorsionClass(g, key, 0);
}

Mask TwoTorsionClass::bits() const {
  const Mask other = key_ ^ full_mask(g_);
  const int a = std::popcount(key_), b = std::popcount(other);
  if (a != b) return a < b ? key_ : other;
  return (key_ & 1u) ? key_ : other;
}

std::vector<int> TwoTorsionClass::indices() const {
  std::vector<int> out;
  Mask b = bits();
  for (int i = 0; b; ++i, b >>= 1)
    if (b & 1u) out.push_back(i + 1);
  return out;
}

int TwoTorsionClass::weight() const { return std::popcount(bits()); }

std::string TwoTorsionClass::str() const {
  auto idx = indices();
  return fmt::format("{{{}}}", fmt::join(idx, ","));
}

TwoTorsionClass class_from_pair(int g, int i, int j) {
  if (i == j) throw std::invalid_argument("pair needs two distinct indices");
  return TwoTorsionClass::from_indices(g, {i, j});
}

TwoTorsionClass class_add(const TwoTorsionClass& s, const TwoTorsionClass& t) {
  if (s.genus() != t.genus()) throw GenusMismatch("classes of different genera");
  return TwoTorsionClass::from_key(s.genus(), s.key() ^ t.key());
}

int weil(const TwoTorsionClass& s, const TwoTorsionClass& t) {
  if (s.genus() != t.genus()) throw GenusMismatch("classes of different genera");
  return std::popcount(s.bits() & t.bits()) & 1;
}

bool is_weierstrass_difference(const TwoTorsionClass& s) { return s.is_zero() || s.weight() == 2; }

bool double_cover_is_hyperelliptic(const TwoTorsionClass& eta) {
  if (eta.is_zero()) throw ZeroClass("the trivial class defines no double cover");
  return is_weierstrass_difference(eta);
}

std::vector<TwoTorsionClass> all_classes(int g) {
  check_genus(g);
  if (g > 10) throw TooLarge("refusing to list more than 2^20 classes");
  std::vector<TwoTorsionClass> out;
  out.reserve(std::size_t{1} << (2 * g));
  for (Mask k = 0; k < top_bit(g); ++k)
    if (std::popcount(k) % 2 == 0) out.push_back(TwoTorsionClass::from_key(g, k));
  return out;
}

TwoTorsionClass parse_class(int g, std::string_view text) {
  if (!text.empty() && text.front() == '{') text.remove_prefix(1);
  if (!text.empty() && text.back() == '}') text.remove_suffix(1);
  std::vector<int> idx;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto tok = text.substr(0, comma);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      throw std::invalid_argument(fmt::format("bad index '{}'", tok));
    idx.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return TwoTorsionClass::from_indices(g, idx);
}

}  // namespace thetalab::f2
