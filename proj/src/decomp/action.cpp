#include "thetalab/decomp/action.hpp"

#include <algorithm>
#include <bit>

#include <fmt/format.h>

namespace thetalab::decomp {

std::string element_name(Element a) {
  if (a == 0) return "1";
  std::string s;
  if (a & kIota) s += 'i';
  if (a & kSigma) s += 's';
  if (a & kTau) s += 't';
  return s;
}

CharacterLabel CharacterLabel::from_signs(int iota, int sigma, int tau) {
  return {unsigned(iota < 0) | unsigned(sigma < 0) << 1 | unsigned(tau < 0) << 2};
}

int CharacterLabel::operator()(Element a) const { return (std::popcount(mask & a) & 1) ? -1 : 1; }

std::string CharacterLabel::str() const {
  auto c = [](int s) { return s > 0 ? '+' : '-'; };
  return fmt::format("({},{},{})", c(sign_iota()), c(sign_sigma()), c(sign_tau()));
}

std::array<CharacterLabel, 8> all_characters() {
  std::array<CharacterLabel, 8> out;
  for (unsigned m = 0; m < 8; ++m) out[m] = {m};
  return out;
}

ActionData ActionData::genus_five() {
  ActionData a;
  a.genus = 5;
  a.fixed_counts[kIota] = 12;
  a.fixed_counts[kIota | kSigma] = 4;
  a.fixed_counts[kIota | kTau] = 4;
  a.fixed_counts[kIota | kSigma | kTau] = 4;
  return a;
}

int lefschetz_trace(int fixed_points) {
  if (fixed_points < 0) throw Inconsistent("negative fixed-point count");
  return 2 - fixed_points;
}

Subgroup make_subgroup(const std::vector<Element>& generators) {
  std::vector<Element> span{0};
  for (Element g : generators) {
    if (g > 7) throw std::invalid_argument("not an element of Z2^3");
    if (std::find(span.begin(), span.end(), g) != span.end()) continue;
    const std::size_t n = span.size();
    for (std::size_t i = 0; i < n; ++i) span.push_back(span[i] ^ g);
  }
  std::sort(span.begin(), span.end());
  return {span};
}

std::vector<Subgroup> all_subgroups() {
  std::vector<Subgroup> out;
  for (unsigned set = 1; set < 256; set += 2) {  // must contain the identity (bit 0)
    std::vector<Element> el;
    for (Element a = 0; a < 8; ++a)
      if (set >> a & 1u) el.push_back(a);
    bool closed = true;
    for (Element x : el)
      for (Element y : el)
        if (!(set >> (x ^ y) & 1u)) closed = false;
    if (closed) out.push_back({el});
  }
  std::stable_sort(out.begin(), out.end(),
                   [](const Subgroup& a, const Subgroup& b) { return a.order() < b.order(); });
  return out;
}

bool Subgroup::contains(Element a) const {
  return std::find(elements.begin(), elements.end(), a) != elements.end();
}

std::string Subgroup::name() const {
  std::vector<Element> gens, span{0};
  for (Element a : elements) {
    if (std::find(span.begin(), span.end(), a) != span.end()) continue;
    gens.push_back(a);
    const std::size_t n = span.size();
    for (std::size_t i = 0; i < n; ++i) span.push_back(span[i] ^ a);
  }
  if (gens.empty()) return "1";
  std::vector<std::string> names;
  for (Element g : gens) names.push_back(element_name(g));
  return fmt::format("<{}>", fmt::join(names, ","));
}

void ActionData::validate() const {
  if (genus < 0) throw Inconsistent("negative genus");
  for (Element a = 1; a < 8; ++a) {
    if (fixed_counts[a] < 0) throw Inconsistent(fmt::format("Fix({}) is negative", element_name(a)));
    if (fixed_counts[a] % 2)
      throw Inconsistent(fmt::format("Fix({}) = {} is odd", element_name(a), fixed_counts[a]));
  }
  for (const auto& K : all_subgroups()) {
    int total = 0;
    for (Element a : K.elements)
      if (a) total += fixed_counts[a];
    if (total % 2) throw Inconsistent(fmt::format("odd branch total over {}", K.name()));
  }
}

std::array<int, 8> isotypic_multiplicities(const ActionData& a) {
  a.validate();
  std::array<int, 8> m{};
  for (const auto& chi : all_characters()) {
    int s = 2 * a.genus;
    for (Element e = 1; e < 8; ++e) s += lefschetz_trace(a.fixed_counts[e]) * chi(e);
    if (s % 8 != 0) throw Inconsistent(fmt::format("m{} = {}/8 is not an integer", chi.str(), s));
    const int mult = s / 8;
    if (mult < 0 || mult % 2)
      throw Inconsistent(fmt::format("m{} = {} is negative or odd", chi.str(), mult));
    m[chi.mask] = mult;
  }
  return m;
}

int quotient_genus(const ActionData& a, const Subgroup& K) {
  int branch = 0;
  for (Element e : K.elements)
    if (e) branch += a.fixed_counts[e];
  // 2 g_K - 2 = (2g - 2 - branch) / |K|
  const int num = 2 * a.genus - 2 - branch;
  if (num % K.order() != 0)
    throw NonIntegerGenus(fmt::format("Riemann-Hurwitz fails to divide for {}", K.name()));
  const int twice = num / K.order() + 2;
  if (twice % 2 != 0 || twice < 0)
    throw NonIntegerGenus(fmt::format("Riemann-Hurwitz gives 2g = {} for {}", twice, K.name()));
  return twice / 2;
}

int character_sum_genus(const std::array<int, 8>& m, const Subgroup& K) {
  int total = 0;
  for (const auto& chi : all_characters()) {
    bool trivial = std::all_of(K.elements.begin(), K.elements.end(),
                               [&](Element e) { return chi(e) == 1; });
    if (trivial) total += m[chi.mask];
  }
  return total / 2;
}

}  // namespace thetalab::decomp
