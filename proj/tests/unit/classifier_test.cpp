#include <gtest/gtest.h>

#include "lindeg/classifier.hpp"
#include "lindeg/enumerator.hpp"
#include "lindeg/errors.hpp"
#include "lindeg/verify.hpp"
#include "oracles.hpp"

using namespace lindeg;

namespace {

const Field Q = Field::rationals();

RankSequence two_vertex(int m, int rk) {
  ExtendedRanks t(2);
  t.set(1, 1, m);
  t.set(2, 2, m);
  t.set(1, 2, rk);
  return RankSequence(m, t);
}

RankSequence of_projections(int m, std::vector<std::vector<std::size_t>> j) {
  return RankSequence::of(ProjectionTuple{m, std::move(j)}.matrices(Q));
}

std::vector<std::size_t> first_k(int k) {
  std::vector<std::size_t> out;
  for (int i = 1; i <= k; ++i) out.push_back(static_cast<std::size_t>(i));
  return out;
}

}  // namespace

TEST(Smooth, Examples) {
  EXPECT_TRUE(is_smooth(RankSequence::identity(3, 3)));
  EXPECT_FALSE(is_smooth(two_vertex(6, 5)));
  EXPECT_TRUE(is_smooth(RankSequence::zero(4, 3)));
  EXPECT_FALSE(is_smooth(of_projections(3, {{}, {1}})));
}

TEST(Irreducible, Examples) {
  const DimVector d(6, {1, 4});
  EXPECT_TRUE(is_irreducible(two_vertex(6, 3), d));
  EXPECT_FALSE(is_irreducible(two_vertex(6, 2), d));
  for (int m = 2; m <= 5; ++m)
    for (const DimVector& dv : all_dim_vectors(m, 2)) EXPECT_TRUE(is_irreducible(two_vertex(m, 0), dv));
}

TEST(Irreducible, TwoVertexInequality) {
  for (int m = 2; m <= 8; ++m)
    for (const DimVector& d : all_dim_vectors(m, 2))
      for (int rk = 0; rk <= m; ++rk)
        EXPECT_EQ(is_irreducible(two_vertex(m, rk), d), rk == 0 || d.at(2) - d.at(1) >= m - rk);
}

// m = 6, d = (1,4), rk f = 2 over F_2. The variety splits into the locally
// closed pieces {V_1 in ker f} and {V_1 not in ker f}. The first is a
// Gr(4,6)-bundle over P(ker f) = P^3, the second a Gr(3,5)-bundle over an open
// subset of P^5; both have dimension 11 = dim of the flat locus, so there are
// at least two top-dimensional components. The enumeration confirms the piece
// sizes, which pins down that decomposition.
TEST(Irreducible, RankTwoHasTwoTopDimensionalPieces) {
  const Field f2 = Field::prime(2);
  const RepMatrices m = ProjectionTuple{6, {first_k(4)}}.matrices(f2);
  ASSERT_EQ(rank(m.arrow(1)), 2u);
  const Subspace ker = kernel(m.arrow(1));
  std::uint64_t in_ker = 0, outside = 0;
  const std::vector<int> d = {1, 4};
  for_each_subrep(m, d, [&](const SubrepPoint& p) {
    if (contains(ker, p.spaces[0]))
      ++in_ker;
    else
      ++outside;
  });
  EXPECT_EQ(in_ker, oracle::gaussian(4, 1, 2) * oracle::gaussian(6, 4, 2));
  EXPECT_EQ(outside, (oracle::gaussian(6, 1, 2) - oracle::gaussian(4, 1, 2)) * oracle::gaussian(5, 3, 2));
  // Dimensions of the two pieces: dim P^3 + dim Gr(4,6) and dim P^5 + dim Gr(3,5).
  EXPECT_EQ(3 + 4 * 2, 11);
  EXPECT_EQ(5 + 3 * 2, 11);
  EXPECT_FALSE(is_irreducible(two_vertex(6, 2), DimVector(6, {1, 4})));
}

TEST(FlatFlags, Examples) {
  const DimVector d(3, {1, 2});
  const FlatFlags wb = flat_flags(two_vertex(3, 2), d);
  EXPECT_TRUE(wb.flat_in_stratum && wb.flat_irr_in_stratum && wb.in_U_irr);
  const FlatFlags one = flat_flags(two_vertex(3, 1), d);
  EXPECT_TRUE(one.flat_in_stratum);
  EXPECT_FALSE(one.flat_irr_in_stratum);
  EXPECT_FALSE(one.in_U_irr);
  for (int m = 2; m <= 5; ++m)
    for (const DimVector& dv : all_dim_vectors(m, 3)) EXPECT_TRUE(flat_flags(RankSequence::zero(m, 3), dv).in_U_irr);
}

TEST(FlatFlags, IrreducibleIffInUIrrSweep) {
  for (int m = 1; m <= 4; ++m)
    for (int n = 2; n <= 3; ++n)
      for (const RankSequence& r : enumerate_orbits(m, n))
        for (const DimVector& d : all_dim_vectors(m, n)) {
          const FlatFlags f = flat_flags(r, d);
          EXPECT_EQ(is_irreducible(r, d), f.in_U_irr) << dot_node_name(r);
          if (is_smooth(r)) EXPECT_TRUE(is_irreducible(r, d));
          if (f.flat_irr_in_stratum) EXPECT_TRUE(f.flat_in_stratum);
        }
}

TEST(SplitProduct, Examples) {
  const DimVector d3(4, {1, 2, 3});
  EXPECT_EQ(split_product(RankSequence::identity(4, 3), d3).size(), 1u);
  const std::vector<Segment> zero = split_product(RankSequence::zero(4, 3), d3);
  ASSERT_EQ(zero.size(), 3u);
  for (int k = 0; k < 3; ++k) {
    EXPECT_EQ(zero[static_cast<std::size_t>(k)].first, k + 1);
    EXPECT_EQ(zero[static_cast<std::size_t>(k)].last, k + 1);
    EXPECT_EQ(zero[static_cast<std::size_t>(k)].d.values(), (std::vector<int>{k + 1}));
  }
  const std::vector<Segment> cut = split_product(of_projections(4, {{1}, {1, 2, 3, 4}}), d3);
  ASSERT_EQ(cut.size(), 2u);
  EXPECT_EQ(cut[0].d.values(), (std::vector<int>{1, 2}));
  EXPECT_EQ(cut[0].ranks.map_rank(1), 3);
  EXPECT_EQ(cut[1].d.values(), (std::vector<int>{3}));
  EXPECT_THROW(split_product(RankSequence::identity(4, 2), d3), ValidationError);
}

TEST(Dimension, Examples) {
  const DimVector d(6, {1, 4});
  for (int rk = 3; rk <= 6; ++rk) EXPECT_EQ(dimension(two_vertex(6, rk), d), 11);
  const DimVector flag(3, {1, 2});
  EXPECT_EQ(dimension(RankSequence::identity(3, 2), flag), 3);
  EXPECT_EQ(dimension(RankSequence::zero(3, 2), flag), 4);
  EXPECT_THROW(dimension(two_vertex(6, 1), d), NotFlat);
}

TEST(Dimension, MatchesProductSegments) {
  const DimVector d(4, {1, 2, 3});
  const RankSequence cut = of_projections(4, {{1}, {1, 2, 3, 4}});
  // Fl_{(1,2)}(degenerate k^4) x Gr(3,4).
  EXPECT_EQ(dimension(cut, d), euler_form(std::vector<int>{1, 2}, std::vector<int>{3, 2}) + 3);
}

TEST(WellBehaved, Examples) {
  const DimVector d(6, {1, 4});
  EXPECT_TRUE(is_well_behaved(RankSequence::of(well_behaved_rep(d)), d));
  EXPECT_FALSE(is_well_behaved(two_vertex(6, 4), d));
  EXPECT_TRUE(is_well_behaved(two_vertex(6, 3), d));

  const DimVector steps(4, {1, 2, 3});
  const RepMatrices same = ProjectionTuple{4, {{1}, {1}}}.matrices(Q);
  EXPECT_FALSE(is_well_behaved_matrices(same, steps));
  const RepMatrices apart = ProjectionTuple{4, {{1}, {2}}}.matrices(Q);
  EXPECT_TRUE(is_well_behaved_matrices(apart, steps));
  EXPECT_TRUE(is_well_behaved(RankSequence::of(apart), steps));
}

TEST(WellBehaved, RankAndMatrixTestsAgreeOnRepresentatives) {
  for (int m = 2; m <= 4; ++m)
    for (int n = 2; n <= 3; ++n)
      for (const RankSequence& r : enumerate_orbits(m, n))
        for (const DimVector& d : all_dim_vectors(m, n))
          EXPECT_EQ(is_well_behaved(r, d), is_well_behaved_matrices(representative(r).matrices(Q), d));
}

TEST(SingularModel, ExampleRankFive) {
  const SingularInfo s = singular_model_Mh(6, DimVector(6, {1, 4}), 1);
  EXPECT_EQ(s.kind, SingularKind::exact);
  EXPECT_EQ(s.sing_dim, 4);
  EXPECT_EQ(s.sing_codim, 7);
  ASSERT_TRUE(s.model.has_value());
  EXPECT_EQ(s.model->module, Decomposition(2).add({1, 2}, 5));
  EXPECT_EQ(s.model->d, (std::vector<int>{0, 4}));
}

TEST(SingularModel, SmallExample) {
  const SingularInfo s = singular_model_Mh(4, DimVector(4, {1, 2}), 1);
  EXPECT_EQ(s.sing_codim, 3);
  EXPECT_EQ(s.sing_dim, 2);
}

TEST(SingularModel, ThreeVertexModule) {
  const SingularInfo s = singular_model_Mh(4, DimVector(4, {1, 2, 3}), 2);
  ASSERT_TRUE(s.model.has_value());
  EXPECT_EQ(s.model->module, Decomposition(3).add({1, 3}, 3).add({1, 1}));
  EXPECT_EQ(s.model->d, (std::vector<int>{1, 1, 3}));
  EXPECT_EQ(s.sing_codim, 3);
  EXPECT_THROW(singular_model_Mh(4, DimVector(4, {1, 2, 3}), 3), ValidationError);
  EXPECT_THROW(singular_model_Mh(4, DimVector(4, {1, 2, 3}), 0), ValidationError);
}

TEST(SingularModel, CodimensionAddsUpToDimension) {
  for (int m = 2; m <= 8; ++m)
    for (int n = 2; n <= std::min(m - 1, 4); ++n)
      for (const DimVector& d : all_dim_vectors(m, n))
        for (int h = 1; h < n; ++h) {
          const SingularInfo s = singular_model_Mh(m, d, h);
          std::vector<int> rest;
          for (int v : d.values()) rest.push_back(m - v);
          EXPECT_EQ(*s.sing_dim + 2 * d.step(h) + 1, euler_form(d.values(), rest));
          EXPECT_EQ(*s.sing_dim + *s.sing_codim, euler_form(d.values(), rest));
        }
}

TEST(SingularSummary, Examples) {
  EXPECT_EQ(singular_summary(RankSequence::identity(3, 2), DimVector(3, {1, 2})).kind, SingularKind::empty);

  const DimVector d(6, {1, 4});
  const SingularInfo rk5 = singular_summary(two_vertex(6, 5), d);
  EXPECT_EQ(rk5.kind, SingularKind::exact);
  EXPECT_EQ(rk5.sing_dim, 4);

  const SingularInfo rk4 = singular_summary(two_vertex(6, 4), d);
  EXPECT_EQ(rk4.kind, SingularKind::bounded);
  EXPECT_EQ(rk4.codim_lower, 3);
  EXPECT_EQ(rk4.codim_upper, 7);
  const long long rk4_codim = 11 - kExampleSingularDims[1].sing_dim;
  EXPECT_LE(*rk4.codim_lower, rk4_codim);
  EXPECT_GE(*rk4.codim_upper, rk4_codim);

  const SingularInfo rk3 = singular_summary(two_vertex(6, 3), d);
  EXPECT_EQ(rk3.kind, SingularKind::bounded);
  const long long rk3_codim = 11 - kExampleSingularDims[2].sing_dim;
  EXPECT_LE(*rk3.codim_lower, rk3_codim);
  EXPECT_GE(*rk3.codim_upper, rk3_codim);

  EXPECT_THROW(singular_summary(two_vertex(6, 2), d), NotIrreducible);
}

TEST(SingularSummary, UnitStepsGiveCodimThree) {
  for (int m = 2; m <= 6; ++m) {
    const int n = m - 1;
    std::vector<int> dv;
    for (int i = 1; i <= n; ++i) dv.push_back(i);
    const DimVector unit(m, dv);
    for (const RankSequence& r : enumerate_orbits(m, n)) {
      if (!flat_flags(r, unit).in_U_irr || is_smooth(r)) continue;
      const SingularInfo s = singular_summary(r, unit);
      EXPECT_EQ(s.kind, SingularKind::exact);
      EXPECT_EQ(s.sing_codim, 3);
    }
  }
}

TEST(SingularSummary, ProductTakesMinimum) {
  // Segment 1: M^1 on (1,2) in k^4, codim 3; segment 2: a Grassmannian.
  const SingularInfo s = singular_summary(of_projections(4, {{1}, {1, 2, 3, 4}}), DimVector(4, {1, 2, 3}));
  EXPECT_EQ(s.kind, SingularKind::exact);
  EXPECT_EQ(s.sing_codim, 3);
  EXPECT_FALSE(s.model.has_value());
}

TEST(SingularSummary, MonotoneOnExactFamily) {
  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= 3; ++n)
      for (const DimVector& d : all_dim_vectors(m, n)) {
        std::vector<std::pair<RankSequence, long long>> exact;
        for (const RankSequence& r : enumerate_orbits(m, n)) {
          if (!flat_flags(r, d).in_U_irr || is_smooth(r)) continue;
          const SingularInfo s = singular_summary(r, d);
          if (s.kind == SingularKind::exact) exact.emplace_back(r, *s.sing_dim);
        }
        for (const auto& [r, dr] : exact)
          for (const auto& [s, ds] : exact)
            if (degenerates_to(s, r)) EXPECT_GE(dr, ds);
      }
}

TEST(Witness, Examples) {
  const CoordinatePoint w3 = construct_singular_witness(ProjectionTuple{3, {{1}}}, DimVector(3, {1, 2}));
  EXPECT_EQ(w3.sets, (std::vector<std::vector<std::size_t>>{{1}, {2, 3}}));
  const CoordinatePoint w4 = construct_singular_witness(ProjectionTuple{4, {{1}}}, DimVector(4, {1, 2}));
  EXPECT_EQ(w4.sets, (std::vector<std::vector<std::size_t>>{{1}, {2, 4}}));
  EXPECT_THROW(construct_singular_witness(ProjectionTuple{3, {{}}}, DimVector(3, {1, 2})), PreconditionError);
  EXPECT_THROW(construct_singular_witness(ProjectionTuple{6, {first_k(4)}}, DimVector(6, {1, 4})), PreconditionError);
}

TEST(Witness, HasExtOnEveryFlatIrreducibleRepresentative) {
  const Field f2 = Field::prime(2);
  for (int m = 2; m <= 5; ++m)
    for (int n = 2; n <= 3; ++n)
      for (const RankSequence& r : enumerate_orbits(m, n))
        for (const DimVector& d : all_dim_vectors(m, n)) {
          if (is_smooth(r) || stratum_of(r).arrows.size() > 0 || !flat_flags(r, d).flat_irr_in_stratum) continue;
          const ProjectionTuple j = representative(r);
          const CoordinatePoint w = construct_singular_witness(j, d);
          const RepMatrices rep = j.matrices(f2);
          const SubrepPoint l = w.to_subrep(f2, m);
          ASSERT_TRUE(is_subrep(rep, l)) << dot_node_name(r);
          EXPECT_EQ(l.dims(), d.values());
          EXPECT_GE(analyze_point(rep, l).ext, 1) << dot_node_name(r);
        }
}

TEST(Classify, IdentityReport) {
  const DegenerationReport rep = classify(RankSequence::identity(3, 2), DimVector(3, {1, 2}));
  EXPECT_TRUE(rep.smooth && rep.irreducible && rep.flat.flat_in_stratum && rep.flat.flat_irr_in_stratum &&
              rep.flat.in_U_irr);
  EXPECT_FALSE(rep.well_behaved);
  EXPECT_EQ(rep.normal, true);
  EXPECT_EQ(rep.regular_codim2, true);
  EXPECT_EQ(rep.dimension, 3);
  ASSERT_TRUE(rep.singular.has_value());
  EXPECT_EQ(rep.singular->kind, SingularKind::empty);
}

TEST(Classify, NonIrreducibleOmitsTheoremFlags) {
  const DegenerationReport rep = classify(two_vertex(6, 2), DimVector(6, {1, 4}));
  EXPECT_FALSE(rep.irreducible);
  EXPECT_FALSE(rep.normal.has_value());
  EXPECT_FALSE(rep.regular_codim2.has_value());
  EXPECT_FALSE(rep.singular.has_value());
}

TEST(Classify, RejectsUnrealizableAndMismatch) {
  ExtendedRanks t(3);
  for (int v = 1; v <= 3; ++v) t.set(v, v, 4);
  t.set(1, 2, 1);
  t.set(2, 3, 1);
  t.set(1, 3, 2);
  EXPECT_THROW(classify(RankSequence(4, t), DimVector(4, {1, 2, 3})), NotRealizable);
  EXPECT_THROW(classify(RankSequence::identity(3, 3), DimVector(3, {1, 2})), ValidationError);
}

TEST(Classify, MatrixInputUsesKernelTest) {
  const RepMatrices rep = ProjectionTuple{4, {{1}, {1}}}.matrices(Q);
  const DimVector d(4, {1, 2, 3});
  EXPECT_FALSE(classify(rep, d).well_behaved);
  EXPECT_TRUE(classify(ProjectionTuple{4, {{1}, {2}}}.matrices(Q), d).well_behaved);
}
