#include <gtest/gtest.h>

#include "padicvol/invariants.hpp"
#include "padicvol/random.hpp"

using namespace padicvol;

namespace {
int eta_q(const Rational& v, long p) { return valuation(v, static_cast<unsigned long>(p)) % 2 == 0 ? 1 : -1; }

// For n = 1 the projection is explicit: with gamma = [[a,b],[c,d]] and
// det = ad - bc, s(gamma) = [[ad+bc, -2ab], [2cd, -(ad+bc)]] / det.
SymmetricSpacePoint rank_one(const Matrix& g, long p) {
  const Rational a = g(0, 0), b = g(0, 1), c = g(1, 0), d = g(1, 1);
  const Rational det = a * d - b * c;
  return {Matrix{{(a * d + b * c) / det}}, Matrix{{-2 * a * b / det}}, Matrix{{2 * c * d / det}},
          Matrix{{-(a * d + b * c) / det}}, p};
}

Matrix random_invertible(Rng& rng, int n) {
  for (;;) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = uniform_int(rng, -4, 4);
    if (m.det() != 0) return m;
  }
}
}  // namespace

TEST(Matrix, DeterminantInverseCharPoly) {
  const Matrix m{{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  EXPECT_EQ(m.det(), Rational(18));
  EXPECT_EQ(m * m.inverse(), Matrix::identity(3));
  EXPECT_EQ(m.char_poly(), (std::vector<Rational>{-18, 24, -9, 1}));
  EXPECT_EQ(Matrix({{1, 2}, {2, 4}}).rank(), 1);
  EXPECT_THROW(Matrix({{1, 2}, {2, 4}}).inverse(), DomainError);
}

TEST(ProjectSym, Example) {
  const SymmetricSpacePoint x = project_sym(Matrix{{1, 1}, {1, 2}}, 3);
  EXPECT_EQ(x.A, Matrix{{3}});
  EXPECT_EQ(x.B, Matrix{{-2}});
  EXPECT_EQ(x.C, Matrix{{4}});
  EXPECT_EQ(x.D, Matrix{{-3}});
  EXPECT_EQ(car_lin(x), std::vector<Rational>{-3});
  EXPECT_TRUE(is_strongly_regular(x, {1}));
}

TEST(ProjectSym, RankOneClosedForm) {
  Rng rng = substream(1, "rank-one");
  for (int s = 0; s < 40; ++s) {
    const Matrix g = random_invertible(rng, 2);
    EXPECT_EQ(project_sym(g, 5), rank_one(g, 5));
  }
}

TEST(ProjectSym, Involution) {
  Rng rng = substream(2, "involution");
  for (int n = 1; n <= 3; ++n) {
    const Matrix x = project_sym(random_invertible(rng, 2 * n), 3).full();
    EXPECT_EQ(x * x, Matrix::identity(2 * n));
  }
}

TEST(ProjectSym, RejectsBadInput) {
  EXPECT_THROW(project_sym(Matrix{{1, 2, 3}}, 3), DomainError);
  EXPECT_THROW(project_sym(Matrix{{1, 2}, {2, 4}}, 3), DomainError);
  EXPECT_THROW(project_sym(Matrix{{1, 1}, {1, 2}}, 4), DomainError);
}

TEST(TransferFactor, Examples) {
  const Matrix g{{1, 1}, {1, 2}};
  const TransferSigns all_q{CharacterKind::UnramifiedQuadratic, CharacterKind::UnramifiedQuadratic,
                            CharacterKind::UnramifiedQuadratic};
  EXPECT_EQ(transfer_factor(g, {1}, all_q, 3), 1);
  EXPECT_EQ(transfer_factor(g, {1}, all_q, 2), -1);
  EXPECT_EQ(transfer_factor(g, {1}, TransferSigns{}, 2), 1);
}

TEST(TransferFactor, RankOneByHand) {
  Rng rng = substream(3, "omega-rank-one");
  for (long p : {2L, 3L, 5L})
    for (int s = 0; s < 40; ++s) {
      const Matrix g = random_invertible(rng, 2);
      const SymmetricSpacePoint x = rank_one(g, p);
      const Rational w = uniform_int(rng, 1, 9);
      if (x.B(0, 0) == 0 || x.C(0, 0) == 0) {
        EXPECT_THROW(transfer_factor(g, {w}, {}, p), DegenerateInputError);
        continue;
      }
      const TransferSigns q{CharacterKind::UnramifiedQuadratic, CharacterKind::UnramifiedQuadratic,
                            CharacterKind::UnramifiedQuadratic};
      const int expected = eta_q(x.B(0, 0) * x.C(0, 0), p) * eta_q(x.C(0, 0), p) * eta_q(x.C(0, 0), p) *
                           eta_q(w, p) * eta_q(g.det(), p);
      EXPECT_EQ(transfer_factor(g, {w}, q, p), expected);
    }
}

TEST(TransferFactor, DegenerateInputs) {
  // Diagonal gamma gives B = C = 0.
  EXPECT_THROW(transfer_factor(Matrix{{1, 0}, {0, 2}}, {1}, {}, 3), DegenerateInputError);
  EXPECT_THROW(transfer_factor(Matrix{{1, 1}, {1, 2}}, {0}, {}, 3), DegenerateInputError);
}

TEST(TransferFactor, Example2Equivariance) {
  const Matrix g{{1, 1}, {1, 2}};
  const BlockPair h1{Matrix{{3}}, Matrix{{1}}}, h2{Matrix{{1}}, Matrix{{1}}};
  const TransferSigns q{CharacterKind::UnramifiedQuadratic, CharacterKind::UnramifiedQuadratic,
                        CharacterKind::UnramifiedQuadratic};
  EXPECT_TRUE(check_equivariance(g, {1}, h1, h2, q, 3));
}

TEST(TransferFactor, EquivarianceRandom) {
  Rng rng = substream(4, "equivariance");
  const std::vector<CharacterKind> kinds{CharacterKind::Trivial, CharacterKind::UnramifiedQuadratic};
  int checked = 0;
  for (long p : {2L, 3L, 5L})
    for (int n = 1; n <= 2; ++n)
      for (int s = 0; s < 15; ++s) {
        const Matrix g = random_invertible(rng, 2 * n);
        std::vector<Rational> w;
        for (int i = 0; i < n; ++i) w.emplace_back(uniform_int(rng, -5, 5));
        if (!is_strongly_regular(project_sym(g, p), w)) continue;
        const BlockPair h1{random_invertible(rng, n), random_invertible(rng, n)};
        const BlockPair h2{random_invertible(rng, n), random_invertible(rng, n)};
        const TransferSigns sg{kinds[uniform_int(rng, 0, 1)], kinds[uniform_int(rng, 0, 1)],
                               kinds[uniform_int(rng, 0, 1)]};
        const Matrix moved = h1.full().inverse() * g * h2.full();
        EXPECT_TRUE(check_equivariance(g, w, h1, h2, sg, p));
        EXPECT_EQ(car_lin(project_sym(moved, p)), car_lin(project_sym(g, p)));
        const int o = transfer_factor(g, w, sg, p);
        EXPECT_TRUE(o == 1 || o == -1);
        ++checked;
      }
  EXPECT_GE(checked, 40);
}

TEST(Characters, Parse) {
  EXPECT_EQ(parse_character("1"), CharacterKind::Trivial);
  EXPECT_EQ(parse_character("q"), CharacterKind::UnramifiedQuadratic);
  EXPECT_THROW(parse_character("x"), DomainError);
  EXPECT_EQ(PAdicScalar(Rational(9, 2), 3).eta(), 1);
  EXPECT_EQ(PAdicScalar(Rational(1, 3), 3).eta(), -1);
  EXPECT_EQ(PAdicScalar(Rational(12), 2).abs(), Rational(1, 4));
}
