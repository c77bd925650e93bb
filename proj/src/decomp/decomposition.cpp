#include "thetalab/decomp/decomposition.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>

#include "thetalab/lattice/polarization.hpp"

namespace thetalab::decomp {

namespace {

using Q = boost::rational<std::int64_t>;

bool equal(const GroupAlgebra& a, const GroupAlgebra& b) {
  for (int i = 0; i < 8; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool is_zero(const GroupAlgebra& a) {
  return std::all_of(a.begin(), a.end(), [](const Q& q) { return q.numerator() == 0; });
}

// Isotypic component of each named factor: trivial exactly on the subgroup
// it is the quotient by (A = im JH with H = C~/<s,t>; E_k = C~/<k, i l>).
const std::map<std::string, CharacterLabel>& factor_characters() {
  static const std::map<std::string, CharacterLabel> table{
      {"A", CharacterLabel::from_signs(-1, +1, +1)},
      {"E_s", CharacterLabel::from_signs(-1, +1, -1)},
      {"E_t", CharacterLabel::from_signs(-1, -1, +1)},
      {"E_st", CharacterLabel::from_signs(-1, -1, -1)},
  };
  return table;
}

struct SlotSpec {
  const char* label;
  const char* factor;
  int dim;
  std::vector<int> type;
};

struct PresentationSpec {
  const char* variety;
  std::vector<Element> generators;
  std::vector<SlotSpec> slots;
};

const std::vector<PresentationSpec>& transcribed() {
  static const std::vector<PresentationSpec> specs{
      {"J C~", {}, {{"A", "A", 2, {1, 4}}, {"E_s", "E_s", 1, {4}}, {"E_t", "E_t", 1, {4}},
                    {"E_st", "E_st", 1, {4}}}},
      {"J C_is", {kIota | kSigma}, {{"E_t", "E_t", 1, {2}}, {"E_st", "E_st", 1, {2}}}},
      {"J C_it", {kIota | kTau}, {{"E_s", "E_s", 1, {2}}, {"E_st", "E_st", 1, {2}}}},
      {"J C_ist", {kIota | kSigma | kTau}, {{"E_s", "E_s", 1, {2}}, {"E_t", "E_t", 1, {2}}}},
      {"J C_s", {kSigma}, {{"A_s", "A", 2, {1, 2}}, {"E_s", "E_s", 1, {2}}}},
      {"J C_t", {kTau}, {{"A_t", "A", 2, {1, 2}}, {"E_t", "E_t", 1, {2}}}},
      {"J C_st", {kSigma | kTau}, {{"A_st", "A", 2, {1, 2}}, {"E_st", "E_st", 1, {2}}}},
  };
  return specs;
}

DecompositionPresentation build(const PresentationSpec& spec, const ActionData& a) {
  DecompositionPresentation p;
  p.variety = spec.variety;
  p.quotient_by = make_subgroup(spec.generators);
  p.total_dim = quotient_genus(a, p.quotient_by);
  for (const auto& s : spec.slots)
    p.slots.push_back({s.label, s.dim, s.type, factor_characters().at(s.factor)});
  return p;
}

std::string dims_str(const DecompositionPresentation& p) {
  std::vector<int> d;
  for (const auto& s : p.slots) d.push_back(s.dim);
  return fmt::format("({})", fmt::join(d, ","));
}

}  // namespace

GroupAlgebra ga_unit() {
  GroupAlgebra u{};
  u[0] = 1;
  return u;
}

GroupAlgebra ga_multiply(const GroupAlgebra& a, const GroupAlgebra& b) {
  GroupAlgebra p{};
  for (Element x = 0; x < 8; ++x)
    for (Element y = 0; y < 8; ++y) p[x ^ y] += a[x] * b[y];
  return p;
}

GroupAlgebra projector(const CharacterLabel& chi) {
  GroupAlgebra p{};
  for (Element a = 0; a < 8; ++a) p[a] = Q(chi(a), 8);
  return p;
}

std::string Slot::type_str() const { return fmt::format("({})", fmt::join(restricted_type, ",")); }

Decomposition assemble_decomposition(const ActionData& a) {
  Decomposition d;
  d.multiplicities = isotypic_multiplicities(a);
  const auto& specs = transcribed();
  d.jacobian = build(specs.front(), a);
  for (std::size_t i = 1; i < specs.size(); ++i) d.quotients.push_back(build(specs[i], a));
  return d;
}

bool ValidationReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ValidationCheck& c) { return c.passed; });
}

ValidationReport validate_presentation(const Decomposition& d, const ActionData& a) {
  ValidationReport r;
  auto add = [&](std::string name, bool ok, std::string detail) {
    r.checks.push_back({std::move(name), ok, std::move(detail)});
  };

  // (i) projectors: orthogonal idempotents summing to 1.
  {
    GroupAlgebra sum{};
    bool orth = true;
    for (const auto& chi : all_characters()) {
      const auto p = projector(chi);
      for (int i = 0; i < 8; ++i) sum[i] += p[i];
      for (const auto& psi : all_characters()) {
        const auto pq = ga_multiply(p, projector(psi));
        orth = orth && (chi == psi ? equal(pq, p) : is_zero(pq));
      }
    }
    add("projectors sum to 1", equal(sum, ga_unit()), "");
    add("projectors orthogonal idempotents", orth, "");
  }

  // (ii) every presentation against isotypic dimensions.
  std::vector<const DecompositionPresentation*> all{&d.jacobian};
  for (const auto& q : d.quotients) all.push_back(&q);
  for (const auto* p : all) {
    int sum = 0;
    bool slots_ok = true;
    std::vector<unsigned> used;
    for (const auto& s : p->slots) {
      sum += s.dim;
      slots_ok = slots_ok && s.dim >= 1 && 2 * s.dim == d.multiplicities[s.character.mask];
      slots_ok = slots_ok && std::all_of(p->quotient_by.elements.begin(),
                                         p->quotient_by.elements.end(),
                                         [&](Element e) { return s.character(e) == 1; });
      used.push_back(s.character.mask);
    }
    // The slots must cover exactly the nonzero isotypic parts invariant under K.
    std::vector<unsigned> expected;
    for (const auto& chi : all_characters()) {
      bool inv = std::all_of(p->quotient_by.elements.begin(), p->quotient_by.elements.end(),
                             [&](Element e) { return chi(e) == 1; });
      if (inv && d.multiplicities[chi.mask] > 0) expected.push_back(chi.mask);
    }
    std::sort(used.begin(), used.end());
    add(fmt::format("{} dims {} sum to genus {}", p->variety, dims_str(*p), p->total_dim),
        sum == p->total_dim, fmt::format("sum {}", sum));
    add(fmt::format("{} slots match isotypic parts", p->variety), slots_ok && used == expected, "");
  }

  // Riemann-Hurwitz against character sums, all 16 subgroups.
  {
    bool ok = true;
    std::string bad;
    for (const auto& K : all_subgroups()) {
      const int rh = quotient_genus(a, K);
      const int cs = character_sum_genus(d.multiplicities, K);
      if (rh != cs) {
        ok = false;
        bad += fmt::format("{}:{}!={} ", K.name(), rh, cs);
      }
    }
    add("Riemann-Hurwitz genus equals character-sum genus on all subgroups", ok, bad);
  }

  // Prym dimensions: g(C~) - g(C_k) = g(C_ik).
  for (Element k : {kSigma, kTau, kSigma | kTau}) {
    const int prym = a.genus - quotient_genus(a, make_subgroup({k}));
    const int other = quotient_genus(a, make_subgroup({kIota | k}));
    add(fmt::format("dim P(C~/C_{}) = g(C_i{})", element_name(k), element_name(k)), prym == other,
        fmt::format("{} vs {}", prym, other));
  }

  // (iii) recorded types against the lattice computation.
  {
    using namespace thetalab::lattice;
    const auto E = AlternatingForm::standard();
    // e1/2 and f1/2 pair to 1: a non-isotropic Klein group.
    const auto klein = quotient_polarization_type(HalfTorsionSubgroup::from_masks({0b0001, 0b0100}), E);
    const auto single = quotient_polarization_type(HalfTorsionSubgroup::from_masks({0b0001}), E);
    auto slot_type = [](const DecompositionPresentation& p, const std::string& label) {
      for (const auto& s : p.slots)
        if (s.label == label) return s.restricted_type;
      return std::vector<int>{};
    };
    auto as_vec = [](const PolarizationType& t) { return std::vector<int>{int(t.d1), int(t.d2)}; };
    add("A type matches non-isotropic Klein quotient", slot_type(d.jacobian, "A") == as_vec(klein.type),
        klein.type.str());
    const DecompositionPresentation* js = nullptr;
    for (const auto& q : d.quotients)
      if (q.variety == "J C_s") js = &q;
    add("A_s type matches single-element quotient",
        js && slot_type(*js, "A_s") == as_vec(single.type), single.type.str());
  }
  return r;
}

}  // namespace thetalab::decomp
