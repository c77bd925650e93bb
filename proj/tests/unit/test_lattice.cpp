#include <doctest.h>

#include <numeric>
#include <random>

#include "thetalab/lattice/polarization.hpp"

using namespace thetalab::lattice;

namespace {

// gcd of all k x k minors, computed by brute force over row/column subsets.
std::vector<std::int64_t> determinantal_divisors(const IntMatrix& m) {
  const int n = m.rows();
  std::vector<std::int64_t> out;
  for (int k = 1; k <= n; ++k) {
    std::int64_t g = 0;
    for (unsigned rows = 0; rows < (1u << n); ++rows) {
      if (__builtin_popcount(rows) != k) continue;
      for (unsigned cols = 0; cols < (1u << n); ++cols) {
        if (__builtin_popcount(cols) != k) continue;
        IntMatrix sub(k, k);
        int r = 0;
        for (int i = 0; i < n; ++i) {
          if (!(rows >> i & 1u)) continue;
          int c = 0;
          for (int j = 0; j < n; ++j)
            if (cols >> j & 1u) sub(r, c++) = m(i, j);
          ++r;
        }
        g = std::gcd(g, std::llabs(determinant(sub)));
      }
    }
    out.push_back(g);
  }
  return out;
}

IntMatrix random_unimodular(std::mt19937_64& rng, int steps = 12) {
  IntMatrix u = IntMatrix::identity(4);
  std::uniform_int_distribution<int> idx(0, 3), coef(-2, 2), coin(0, 1);
  for (int s = 0; s < steps; ++s) {
    int a = idx(rng), b = idx(rng);
    if (a == b) continue;
    if (coin(rng)) {
      int q = coef(rng);
      for (int r = 0; r < 4; ++r) u(r, a) += q * u(r, b);
    } else {
      for (int r = 0; r < 4; ++r) std::swap(u(r, a), u(r, b));
    }
  }
  return u;
}

IntMatrix random_matrix(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) m(i, j) = d(rng);
  return m;
}

AlternatingForm random_form(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> d(-6, 6);
  for (;;) {
    RMat g{};
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j) {
        g[i][j] = d(rng);
        g[j][i] = -g[i][j];
      }
    IntMatrix m(4, 4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = g[i][j].numerator();
    if (determinant(m) != 0) return AlternatingForm(g);
  }
}

std::vector<unsigned> klein_pairs_of_masks() {
  std::vector<unsigned> out;
  for (unsigned a = 1; a < 16; ++a)
    for (unsigned b = a + 1; b < 16; ++b)
      if ((a ^ b) > b) out.push_back(a << 4 | b);
  return out;
}

}  // namespace

TEST_SUITE("smith") {
  TEST_CASE("elementary divisors match determinantal divisors") {
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
      IntMatrix m = random_matrix(rng, -9, 9);
      auto d = smith_diagonal(m);
      auto D = determinantal_divisors(m);
      std::int64_t prev = 1;
      for (int k = 0; k < 4; ++k) {
        if (D[k] == 0) {
          CHECK(d[k] == 0);
          continue;
        }
        CHECK(d[k] == D[k] / prev);
        prev = D[k];
      }
      for (int k = 0; k + 1 < 4; ++k)
        if (d[k] != 0 && d[k + 1] != 0) CHECK(d[k + 1] % d[k] == 0);
    }
  }

  TEST_CASE("rank-deficient and rectangular inputs") {
    IntMatrix m(3, 4);
    m(0, 0) = 2;
    m(1, 1) = 4;
    m(2, 0) = 2;  // duplicate row
    auto d = smith_diagonal(m);
    CHECK(d == std::vector<std::int64_t>{2, 4, 0});
  }

  TEST_CASE("Bareiss determinant") {
    IntMatrix m = IntMatrix::identity(4);
    m(0, 1) = 3;
    m(2, 3) = -2;
    m(3, 2) = 1;
    CHECK(determinant(m) == 3);
    std::mt19937_64 rng(2);
    for (int t = 0; t < 20; ++t) CHECK(std::llabs(determinant(random_unimodular(rng))) == 1);
  }

  TEST_CASE("column Hermite basis spans the generated lattice") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
      IntMatrix g(4, 6);
      std::uniform_int_distribution<int> d(-5, 5);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 6; ++j) g(i, j) = d(rng);
      IntMatrix b;
      try {
        b = column_hermite_basis(g);
      } catch (const std::invalid_argument&) {
        continue;  // not full rank
      }
      // Lower triangular with positive diagonal.
      for (int i = 0; i < 4; ++i) {
        CHECK(b(i, i) > 0);
        for (int j = i + 1; j < 4; ++j) CHECK(b(i, j) == 0);
      }
      // Covolume equals the gcd of the maximal minors of the generators.
      IntMatrix gt = g.transpose();
      std::int64_t gcd4 = 0;
      for (unsigned cols = 0; cols < 64; ++cols) {
        if (__builtin_popcount(cols) != 4) continue;
        IntMatrix sub(4, 4);
        int c = 0;
        for (int j = 0; j < 6; ++j)
          if (cols >> j & 1u) {
            for (int i = 0; i < 4; ++i) sub(i, c) = g(i, j);
            ++c;
          }
        gcd4 = std::gcd(gcd4, std::llabs(determinant(sub)));
      }
      CHECK(determinant(b) == gcd4);
    }
  }
}

TEST_SUITE("polarization types") {
  TEST_CASE("basic types") {
    const auto J = AlternatingForm::standard();
    const auto Z4 = RationalLattice::reference();
    CHECK(smith_type(J, Z4) == PolarizationType{1, 1});
    CHECK(smith_type(J.scaled(2), Z4) == PolarizationType{2, 2});
    RMat d{};
    d[0][2] = 1;
    d[1][3] = 4;
    d[2][0] = -1;
    d[3][1] = -4;
    CHECK(smith_type(AlternatingForm(d), Z4) == PolarizationType{1, 4});
    CHECK(smith_type(AlternatingForm(d), Z4).str() == "(1,4)");
  }

  TEST_CASE("errors") {
    const auto J = AlternatingForm::standard();
    RMat half = identity_rmat();
    half[0][0] = Rational(1, 2);
    CHECK_THROWS_AS(smith_type(J, RationalLattice(half)), NotIntegral);
    CHECK_THROWS_AS(smith_type(AlternatingForm(RMat{}), RationalLattice::reference()), Degenerate);
    CHECK_THROWS_AS(RationalLattice(RMat{}), Degenerate);
    RMat sym{};
    sym[0][1] = sym[1][0] = 1;
    CHECK_THROWS_AS(AlternatingForm{sym}, std::invalid_argument);
    CHECK_THROWS_AS(HalfTorsionSubgroup({RVec{Rational(1, 3), 0, 0, 0}}), NotHalfTorsion);
    CHECK_THROWS_AS(HalfTorsionSubgroup({RVec{1, 0, 0, 0}}), NotHalfTorsion);
    CHECK_THROWS_AS(lattice_weil_pairing(RVec{Rational(1, 4), 0, 0, 0}, half_vector(1), J), NotHalfTorsion);
    CHECK_THROWS_AS(quotient_polarization_type(HalfTorsionSubgroup::from_masks({1}), J.scaled(2)),
                    std::invalid_argument);
  }

  TEST_CASE("type is invariant under unimodular basis change") {
    std::mt19937_64 rng(4);
    for (int f = 0; f < 10; ++f) {
      AlternatingForm E = random_form(rng);
      const auto base = smith_type(E, RationalLattice::reference());
      for (int t = 0; t < 50; ++t) {
        RationalLattice L(to_rmat(random_unimodular(rng)));
        CHECK(smith_type(E, L) == base);
      }
    }
  }

  TEST_CASE("Klein quotients: isotropic (2,(1,1)), non-isotropic (4,(1,4))") {
    const auto J = AlternatingForm::standard();
    int iso = 0, non = 0;
    for (unsigned ab : klein_pairs_of_masks()) {
      const unsigned a = ab >> 4, b = ab & 15u;
      HalfTorsionSubgroup G = HalfTorsionSubgroup::from_masks({a, b});
      CHECK(G.order() == 4);
      const auto q = quotient_polarization_type(G, J);
      CHECK(q.index == 4);
      if (lattice_weil_pairing(half_vector(a), half_vector(b), J) == 0) {
        ++iso;
        CHECK(q.multiplier == 2);
        CHECK(q.type == PolarizationType{1, 1});
      } else {
        ++non;
        CHECK(q.multiplier == 4);
        CHECK(q.type == PolarizationType{1, 4});
        CHECK_FALSE(q.type == PolarizationType{2, 2});
      }
    }
    CHECK(iso == 15);
    CHECK(non == 20);
  }

  TEST_CASE("single 2-torsion quotient is (1,2), the n = 2 case of (1,n)") {
    const auto J = AlternatingForm::standard();
    for (unsigned a = 1; a < 16; ++a) {
      const auto q = quotient_polarization_type(HalfTorsionSubgroup::from_masks({a}), J);
      CHECK(q.multiplier == 2);
      CHECK(q.index == 2);
      CHECK(q.type == PolarizationType{1, 2});
    }
  }

  TEST_CASE("result does not depend on the lifts") {
    const auto J = AlternatingForm::standard();
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> shift(-3, 3);
    for (unsigned ab : klein_pairs_of_masks()) {
      const unsigned a = ab >> 4, b = ab & 15u;
      const auto base = quotient_polarization_type(HalfTorsionSubgroup::from_masks({a, b}), J);
      for (int t = 0; t < 5; ++t) {
        std::vector<RVec> gens;
        for (unsigned m : {a, b, a ^ b}) {  // also a redundant third generator
          RVec v = half_vector(m);
          for (auto& x : v) x += shift(rng);
          gens.push_back(v);
        }
        const auto q = quotient_polarization_type(HalfTorsionSubgroup(gens), J);
        CHECK(q.multiplier == base.multiplier);
        CHECK(q.type == base.type);
      }
    }
  }

  TEST_CASE("determinant identity det(cE on L') = c^4 det(E on L) / [L':L]^2") {
    const auto J = AlternatingForm::standard();
    std::mt19937_64 rng(6);
    std::uniform_int_distribution<unsigned> mask(1, 15);
    for (int t = 0; t < 40; ++t) {
      std::vector<unsigned> gens{mask(rng)};
      if (t % 2) gens.push_back(mask(rng));
      HalfTorsionSubgroup G = HalfTorsionSubgroup::from_masks(gens);
      const auto q = quotient_polarization_type(G, J);
      const auto L = overlattice(G);
      const Rational c = q.multiplier;
      const auto lhs = J.scaled(c).gram_in(L.basis());
      IntMatrix m(4, 4);
      for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m(i, j) = lhs[i][j].numerator();
      const Rational want = c * c * c * c / Rational(q.index * q.index);
      CHECK(Rational(determinant(m)) == want);
      CHECK(q.index == G.order());
    }
  }

  TEST_CASE("orthogonal complement of a non-isotropic Klein group is non-isotropic, type (1,4)") {
    const auto J = AlternatingForm::standard();
    for (unsigned ab : klein_pairs_of_masks()) {
      const unsigned a = ab >> 4, b = ab & 15u;
      HalfTorsionSubgroup G = HalfTorsionSubgroup::from_masks({a, b});
      const auto C = orthogonal_complement(G, J);
      CHECK(C.order() == 4);
      const auto back = orthogonal_complement(C, J);
      CHECK(back.element_masks() == G.element_masks());
      if (lattice_weil_pairing(half_vector(a), half_vector(b), J) == 1) {
        const auto g = C.generators();
        CHECK(lattice_weil_pairing(g[0], g[1], J) == 1);
        CHECK(quotient_polarization_type(C, J).type == PolarizationType{1, 4});
      }
    }
  }
}

TEST_SUITE("lattice Weil pairing") {
  TEST_CASE("bilinear, alternating, nondegenerate on (1/2)Z^4/Z^4") {
    const auto J = AlternatingForm::standard();
    for (unsigned x = 0; x < 16; ++x) {
      CHECK(lattice_weil_pairing(half_vector(x), half_vector(x), J) == 0);
      bool some = false;
      for (unsigned y = 0; y < 16; ++y) {
        const int e = lattice_weil_pairing(half_vector(x), half_vector(y), J);
        some = some || e;
        CHECK(e == lattice_weil_pairing(half_vector(y), half_vector(x), J));
        for (unsigned z = 0; z < 16; ++z) {
          CHECK(lattice_weil_pairing(half_vector(x), half_vector(y ^ z), J) ==
                (e ^ lattice_weil_pairing(half_vector(x), half_vector(z), J)));
        }
      }
      CHECK(some == (x != 0));
    }
  }

  TEST_CASE("symplectic dual basis") {
    const auto J = AlternatingForm::standard();
    // e1, e2, f1, f2 are masks 1, 2, 4, 8.
    CHECK(lattice_weil_pairing(half_vector(1), half_vector(4), J) == 1);
    CHECK(lattice_weil_pairing(half_vector(2), half_vector(8), J) == 1);
    CHECK(lattice_weil_pairing(half_vector(1), half_vector(8), J) == 0);
    CHECK(lattice_weil_pairing(half_vector(1), half_vector(2), J) == 0);
    CHECK(lattice_weil_pairing(half_vector(4), half_vector(8), J) == 0);
  }

  TEST_CASE("independent of lifts modulo Z^4") {
    const auto J = AlternatingForm::standard();
    RVec x = half_vector(5), y = half_vector(4);
    RVec x2 = x, y2 = y;
    x2[0] += 3;
    y2[3] -= 2;
    CHECK(lattice_weil_pairing(x, y, J) == lattice_weil_pairing(x2, y2, J));
  }
}

TEST_SUITE("genera and K(L)") {
  TEST_CASE("feasible genera up to 20") {
    const auto v = feasible_genera(20);
    REQUIRE(v.size() == 19);
    std::vector<std::pair<int, PolarizationType>> feasible;
    for (const auto& g : v)
      for (const auto& t : g.types)
        if (t.qualifies) feasible.push_back({g.genus, t.type});
    CHECK(feasible == std::vector<std::pair<int, PolarizationType>>{
                          {2, {1, 1}}, {3, {1, 2}}, {4, {1, 3}}, {5, {1, 4}}});
    CHECK(v[4].genus == 6);
    CHECK_FALSE(v[4].feasible);
    CHECK(v[4].reason == "14 not in {6,8,10} for (1,5) (s=2)");
    CHECK(v[5].genus == 7);
    REQUIRE(v[5].types.size() == 1);
    CHECK(v[5].types[0].type == PolarizationType{1, 6});
    CHECK(v[5].types[0].odd_count == 1);
    CHECK(v[5].reason == "16 not in {4,8,12} for (1,6) (s=1)");
    CHECK_THROWS_AS(feasible_genera(1), std::invalid_argument);
  }

  TEST_CASE("K(L) structure") {
    auto k = k_group_structure({1, 4});
    CHECK(k.cyclic_factors == std::vector<std::int64_t>{4, 4});
    CHECK(k.str() == "Z4 x Z4");
    CHECK(k.order == 16);
    CHECK(k.two_torsion_order == 4);
    CHECK(k.translate_orbits() == 4);
    auto one = k_group_structure({1, 1});
    CHECK(one.cyclic_factors.empty());
    CHECK(one.order == 1);
    CHECK(one.str() == "trivial");
    CHECK(k_group_structure({2, 2}).two_torsion_order == 16);
    CHECK_THROWS_AS(k_group_structure({2, 3}), std::invalid_argument);
  }
}
