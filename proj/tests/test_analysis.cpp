#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cumsub/cumsub.hpp"

using namespace cumsub;

namespace {

bool contains_set(const std::vector<ScanPoint>& pts, const SubtractionSet& s) {
  return std::any_of(pts.begin(), pts.end(), [&](const ScanPoint& p) { return p.set == s; });
}

}  // namespace

// --- discrepancies ---------------------------------------------------------

TEST(DiscrepancyTable, ThreeFiveFriendlyVsAntagonistic) {
  const auto recs = discrepancy_table({3, 5}, Convention::FvF, Convention::AvA, 14);
  ASSERT_EQ(recs.size(), 15u);
  for (Heap h = 0; h <= 13; ++h) EXPECT_EQ(recs[h], (DiscrepancyRecord{h, 0, 0, 0}));
  EXPECT_EQ(recs[14], (DiscrepancyRecord{14, 0, -1, 1}));
}

TEST(DiscrepancyTable, FourFiveNineFvA) {
  const auto recs = discrepancy_table({4, 5, 9}, Convention::FvF, Convention::FvA, 61);
  EXPECT_EQ(recs[61].d1, -1);
  EXPECT_EQ(recs[61].d2, 1);
}

TEST(DiscrepancyTable, DiffOfDiffConsistent) {
  for (const SubtractionSet& s : {SubtractionSet{3, 5}, SubtractionSet{4, 5, 9}, SubtractionSet{3, 8, 11, 13}})
    for (Convention b : kAllConventions)
      for (Convention o : kAllConventions)
        for (const auto& r : discrepancy_table(s, b, o, 150)) ASSERT_EQ(r.diff_of_diff, r.d1 - r.d2);
}

TEST(FirstDiscrepancy, Examples) {
  EXPECT_EQ(first_discrepancy({3, 5}, Convention::FvF, Convention::AvA, 300, Criterion::diff_of_diff), 14u);
  EXPECT_EQ(first_discrepancy({3, 5}, Convention::FvF, Convention::AvA, 300, Criterion::componentwise), 14u);
  for (auto c : {Criterion::diff_of_diff, Criterion::componentwise})
    EXPECT_FALSE(first_discrepancy({2, 5}, Convention::FvF, Convention::AvA, 300, c));
  EXPECT_FALSE(first_discrepancy({4, 6}, Convention::FvF, Convention::AvA, 300, Criterion::diff_of_diff));
  EXPECT_FALSE(first_discrepancy({3, 5}, Convention::FvF, Convention::AvA, 13, Criterion::diff_of_diff));
}

TEST(FirstDiscrepancy, IsMinimalAndAbsenceMeansAllZero) {
  for (const auto& s : all_sets(2, 14)) {
    const auto t = solve(s, 200);
    for (auto c : {Criterion::diff_of_diff, Criterion::componentwise}) {
      const auto first = first_discrepancy(t, Convention::FvF, Convention::AvA, c);
      const auto recs = discrepancy_table(t, Convention::FvF, Convention::AvA);
      const Heap limit = first ? *first : t.hmax() + 1;
      for (Heap h = 0; h < limit; ++h) ASSERT_FALSE(meets(recs[h], c)) << s.to_string();
      if (first) {
        EXPECT_TRUE(meets(recs[*first], c));
      }
    }
  }
}

TEST(FirstDiscrepancy, ZeroSumCriterion) {
  const Convention ava[] = {Convention::AvA};
  EXPECT_FALSE(first_discrepancy(solve({3, 5}, 300, ava), Convention::FvF, Convention::AvA, Criterion::zs_vs_ava));
}

// --- scans -----------------------------------------------------------------

TEST(AllSets, LexicographicAndComplete) {
  const auto pairs = all_sets(2, 5);
  ASSERT_EQ(pairs.size(), 10u);
  EXPECT_EQ(pairs.front(), (SubtractionSet{1, 2}));
  EXPECT_EQ(pairs.back(), (SubtractionSet{4, 5}));
  EXPECT_TRUE(std::is_sorted(pairs.begin(), pairs.end()));
  EXPECT_EQ(all_sets(3, 25).size(), 2300u);
  EXPECT_TRUE(all_sets(4, 3).empty());
}

TEST(ScanTwoAction, SmallSweep) {
  const auto pts = scan_two_action(5, Criterion::diff_of_diff);
  ASSERT_TRUE(contains_set(pts, {3, 5}));
  for (const auto& p : pts) {
    if (p.set == SubtractionSet{3, 5}) {
      EXPECT_EQ(p.first_heap, 14u);
    }
    EXPECT_GT(2 * p.set.s2(), p.set.s1());
  }
}

TEST(ScanTwoAction, ExcludesDominantAndConsecutiveRatios) {
  const auto pts = scan_two_action(25, Criterion::diff_of_diff);
  for (const auto& p : pts) {
    EXPECT_FALSE(classify_regime(p.set).is_dominant()) << p.set.to_string();
    EXPECT_FALSE(is_consecutive_ratio(p.set)) << p.set.to_string();
    ASSERT_TRUE(p.first_heap);
  }
}

TEST(ScanTwoAction, IndependentOfWorkerCount) {
  const auto one = scan_two_action(20, Criterion::componentwise, {300, 1});
  const auto many = scan_two_action(20, Criterion::componentwise, {300, 6});
  EXPECT_EQ(one, many);
}

TEST(ScanThreeAction, ConjecturedStructure) {
  const auto pts = scan_three_action(14, Criterion::diff_of_diff, {300, 4});
  const auto it = std::find_if(pts.begin(), pts.end(), [](const ScanPoint& p) { return p.set == SubtractionSet{4, 5, 9}; });
  ASSERT_NE(it, pts.end());
  EXPECT_LE(*it->first_heap, 99u);
  EXPECT_EQ(*it->first_heap, 24u);

  std::set<SubtractionSet> free_pairs;
  for (const auto& s : all_sets(2, 14))
    if (!first_discrepancy(s, Convention::FvF, Convention::AvA, 300, Criterion::diff_of_diff)) free_pairs.insert(s);

  for (const auto& p : pts) {
    const auto& s = p.set;
    if (s.s1() == s.s2() + s.s3()) {
      EXPECT_NE(s.s2() % s.s3(), 0u) << s.to_string();
    }
    if (s.s1() >= 2 * s.s2()) {
      EXPECT_FALSE(free_pairs.count(SubtractionSet{s.s3(), s.s2()})) << s.to_string();
    }
  }
}

TEST(ScanZeroSum, TwoActionIsEmpty) { EXPECT_TRUE(scan_ava_vs_zero_sum(2, 25, {300, 4}).empty()); }

TEST(ScanZeroSum, ThreeActionRespectsBounds) {
  const auto pts = scan_ava_vs_zero_sum(3, 16, {300, 4});
  EXPECT_FALSE(contains_set(pts, {4, 5, 9}));
  for (const auto& p : pts) EXPECT_FALSE(zs_coincidence_expected(p.set)) << p.set.to_string();
}

TEST(Scan, RejectsBadArguments) {
  EXPECT_THROW(scan_two_action(1, Criterion::diff_of_diff), PreconditionError);
  EXPECT_THROW(scan_ava_vs_zero_sum(4, 10), PreconditionError);
}

// --- checkers --------------------------------------------------------------

TEST(FirstPlayerAdvantage, Examples) {
  EXPECT_TRUE(check_first_player_advantage({3, 5}, Convention::FvF, 300).empty());
  const auto fva = check_first_player_advantage({4, 5, 9}, Convention::FvA, 99);
  EXPECT_NE(std::find(fva.begin(), fva.end(), 75u), fva.end());
  EXPECT_EQ(solve({4, 5, 9}, 75).outcome(Convention::FvA, 75), (OutcomePair{37, 38}));
  EXPECT_TRUE(check_first_player_advantage({4, 5, 9}, Convention::FvF, 99).empty());
}

TEST(Monotonicity, Examples) {
  EXPECT_TRUE(check_tiebreak_monotonicity({3, 5}, 300).empty());
  const auto v459 = check_tiebreak_monotonicity({4, 5, 9}, 99);
  EXPECT_NE(std::find(v459.begin(), v459.end(), MonotonicityViolation{61, Relation::fvf_o2_eq_fva}), v459.end());
  const auto v3 = check_tiebreak_monotonicity({3, 8, 11, 13}, 49);
  EXPECT_NE(std::find(v3.begin(), v3.end(), MonotonicityViolation{36, Relation::fvf_o2_eq_fva}), v3.end());
}

TEST(MainTheorem, Examples) {
  EXPECT_TRUE(check_main_theorem({3, 5}, 300).empty());
  EXPECT_TRUE(check_main_theorem({4, 5, 9}, 99).empty());
}

TEST(TwoActionLemmas, FriendlySideHoldsOnRandomPairs) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<Action> d(1, 25);
  for (int trial = 0; trial < 60; ++trial) {
    Action a = d(rng), b = d(rng);
    if (a == b) continue;
    const SubtractionSet s{a, b};
    const auto t = solve(s, 300);
    for (Heap h = 0; h <= 300; ++h)
      for (Relation r : {Relation::fvf_o1_ge_fva, Relation::fvf_o2_eq_fva, Relation::fvf_o1_eq_avf,
                         Relation::fvf_o2_ge_avf, Relation::ava_o2_le_fva, Relation::ava_o1_le_avf})
        ASSERT_TRUE(holds(r, t, h)) << s.to_string() << " h=" << h << " " << to_string(r);
    EXPECT_TRUE(check_main_theorem(t).empty()) << s.to_string();
    for (Convention x : kAllConventions) EXPECT_TRUE(check_first_player_advantage(t, x).empty()) << s.to_string();
  }
}

// The two AvA equalities fail: a friendly deviation from AvA can strictly
// help the deviator. Only the weak inequality survives.
TEST(TwoActionLemmas, AntagonisticEqualitiesFail) {
  const auto t = solve({4, 7}, 34);
  EXPECT_EQ(t.outcome(Convention::AvA, 34), (OutcomePair{18, 14}));
  EXPECT_EQ(t.outcome(Convention::AvF, 34), (OutcomePair{19, 15}));
  const auto v = check_tiebreak_monotonicity(t);
  EXPECT_EQ(v, (std::vector<MonotonicityViolation>{{34, Relation::ava_o2_eq_avf}}));

  for (const auto& s : all_sets(2, 25)) {
    const auto full = solve(s, 300);
    for (Heap h = 0; h <= 300; ++h) {
      ASSERT_LE(full.outcome(Convention::AvA, h).o1, full.outcome(Convention::FvA, h).o1) << s.to_string();
      ASSERT_LE(full.outcome(Convention::AvA, h).o2, full.outcome(Convention::AvF, h).o2) << s.to_string();
    }
  }
}

TEST(DominantEquality, Examples) {
  EXPECT_TRUE(check_dominant_equality({2, 5}, 500).empty());
  EXPECT_TRUE(check_dominant_equality({2, 4}, 500).empty());
  EXPECT_THROW(check_dominant_equality({3, 5}, 100), PreconditionError);
  EXPECT_THROW(check_dominant_equality({2, 5, 11}, 100), PreconditionError);
}

// --- formulas --------------------------------------------------------------

TEST(TwoActionFormula, Examples) {
  const auto p = predicted_first_discrepancy_2action({3, 5});
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, (FormulaPrediction{14, 1, 1}));
  EXPECT_THROW(predicted_first_discrepancy_2action({2, 4}), PreconditionError);
  EXPECT_THROW(predicted_first_discrepancy_2action({4, 6}), PreconditionError);
  EXPECT_THROW(predicted_first_discrepancy_2action({2, 5}), PreconditionError);
}

TEST(TwoActionFormula, PredictionSatisfiesInequalities) {
  for (const auto& s : all_sets(2, 30)) {
    if (classify_regime(s).is_dominant() || is_consecutive_ratio(s)) continue;
    const auto p = predicted_first_discrepancy_2action(s);
    ASSERT_TRUE(p) << s.to_string();
    const auto big = s.s1(), small = s.s2();
    EXPECT_GT((p->i + 1) * small, p->i * big);
    EXPECT_GT(big * (p->k + p->i), (p->i + 2) * small);
    EXPECT_EQ(p->heap, (p->i + 2) * small + p->i * p->k * big);
  }
}

TEST(TwoActionFormula, AgreesWithScanWhereReachable) {
  for (const auto& s : all_sets(2, 16)) {
    if (classify_regime(s).is_dominant() || is_consecutive_ratio(s)) continue;
    const auto c = check_first_formula(s, 300);
    EXPECT_NE(c.status, FormulaStatus::mismatch) << s.to_string();
  }
}

TEST(AdditiveFormula, Examples) {
  const auto p = predicted_first_discrepancy_additive({2, 5, 7});
  EXPECT_EQ(p.i, 2u);
  EXPECT_EQ(p.heap, 34u);
  EXPECT_EQ(first_discrepancy({2, 5, 7}, Convention::FvF, Convention::AvA, 300, Criterion::diff_of_diff), 34u);
  EXPECT_EQ(check_additive_formula({2, 5, 7}, 300).status, FormulaStatus::agree);
  EXPECT_THROW(predicted_first_discrepancy_additive({2, 4, 6}), PreconditionError);
  EXPECT_THROW(predicted_first_discrepancy_additive({3, 5, 9}), PreconditionError);
}

TEST(RatioConjecture, ConsecutiveRatiosHaveNoDiscrepancy) {
  EXPECT_TRUE(is_consecutive_ratio({4, 6}));
  EXPECT_TRUE(is_consecutive_ratio({10, 12}));
  EXPECT_FALSE(is_consecutive_ratio({3, 5}));
  EXPECT_FALSE(check_ratio_conjecture({4, 6}, 300));
  EXPECT_FALSE(check_ratio_conjecture({12, 15}, 300));
  EXPECT_THROW(check_ratio_conjecture({3, 5}, 300), PreconditionError);
}

// --- periodicity -----------------------------------------------------------

TEST(Periodicity, ConstantSequence) {
  const std::vector<std::int64_t> f(50, 7);
  const auto r = detect_periodicity(f, 5, PeriodicityMode::pure);
  ASSERT_TRUE(r);
  EXPECT_EQ(*r, (PeriodicityReport{0, 1, 0, 49}));
}

TEST(Periodicity, ZeroSumThreeFive) {
  const auto z = zero_sum_solve({3, 5}, 300);
  const auto r = detect_periodicity(z, 10, PeriodicityMode::pure);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->period, 10u);
  EXPECT_EQ(r->additive_constant, 0);
  EXPECT_LE(r->preperiod, 10u);
  EXPECT_TRUE(verify_periodicity(z, *r));
}

TEST(Periodicity, DiscrepancySequenceThreeFive) {
  std::vector<std::int64_t> d2;
  for (const auto& r : discrepancy_table({3, 5}, Convention::FvF, Convention::AvA, 300)) d2.push_back(r.d2);
  const auto r = detect_periodicity(d2, 10, PeriodicityMode::pure);
  ASSERT_TRUE(r);
  EXPECT_EQ(10 % r->period, 0u);
}

TEST(Periodicity, AdditiveMode) {
  std::vector<std::int64_t> f;
  for (int h = 0; h < 60; ++h) f.push_back(h < 7 ? 100 - h : 3 * (h / 4) + (h % 4 == 1));
  const auto r = detect_periodicity(f, 8, PeriodicityMode::additive);
  ASSERT_TRUE(r);
  EXPECT_EQ(r->period, 4u);
  EXPECT_EQ(r->additive_constant, 3);
  EXPECT_FALSE(detect_periodicity(f, 8, PeriodicityMode::pure));
}

TEST(Periodicity, RecoversPlantedPeriods) {
  std::mt19937_64 rng(2);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t p = 1 + rng() % 12, pre = rng() % 30;
    std::vector<std::int64_t> cycle(p);
    for (auto& c : cycle) c = static_cast<std::int64_t>(rng() % 5);
    std::vector<std::int64_t> f;
    for (std::size_t h = 0; h < pre; ++h) f.push_back(10 + static_cast<std::int64_t>(rng() % 5));
    for (std::size_t h = 0; h < 120; ++h) f.push_back(cycle[h % p]);
    const auto r = detect_periodicity(f, 12, PeriodicityMode::pure);
    ASSERT_TRUE(r);
    EXPECT_TRUE(verify_periodicity(f, *r));
    EXPECT_EQ(p % r->period, 0u);  // the planted cycle may itself be periodic
    EXPECT_LE(r->preperiod, pre);
  }
}

TEST(Periodicity, Preconditions) {
  const std::vector<std::int64_t> f(10, 0);
  EXPECT_THROW(detect_periodicity(f, 5, PeriodicityMode::pure), PreconditionError);
  EXPECT_THROW(detect_periodicity(f, 0, PeriodicityMode::pure), PreconditionError);
}

// --- sampling --------------------------------------------------------------

TEST(Sampling, DrawsDistinctValidSets) {
  const auto sets = sample_random_sets(3, 25, 200, 7);
  ASSERT_EQ(sets.size(), 200u);
  EXPECT_EQ(std::set<SubtractionSet>(sets.begin(), sets.end()).size(), 200u);
  EXPECT_TRUE(std::is_sorted(sets.begin(), sets.end()));
  for (const auto& s : sets) {
    EXPECT_EQ(s.size(), 3u);
    EXPECT_LE(s.max_action(), 25u);
  }
}

TEST(Sampling, Deterministic) {
  EXPECT_EQ(sample_random_sets(4, 25, 50, 123), sample_random_sets(4, 25, 50, 123));
  EXPECT_NE(sample_random_sets(4, 25, 50, 123), sample_random_sets(4, 25, 50, 124));
}

TEST(Sampling, EdgeCases) {
  EXPECT_EQ(sample_random_sets(3, 3, 1, 1), (std::vector<SubtractionSet>{{1, 2, 3}}));
  EXPECT_EQ(sample_random_sets(2, 5, 10, 9), all_sets(2, 5));
  EXPECT_THROW(sample_random_sets(3, 3, 2, 1), PreconditionError);
  EXPECT_THROW(sample_random_sets(4, 3, 1, 1), PreconditionError);
}

TEST(Sampling, RoughlyUniformOverSingletons) {
  std::vector<int> hits(11, 0);
  for (std::uint64_t seed = 0; seed < 2000; ++seed) hits[sample_random_sets(1, 10, 1, seed).front().min_action()]++;
  for (int v = 1; v <= 10; ++v) {
    EXPECT_GT(hits[v], 130) << v;
    EXPECT_LT(hits[v], 270) << v;
  }
}

TEST(SampleSpec, Parse) {
  const auto spec = parse_sample_spec("sizes=3..10,count=200,max=25");
  EXPECT_EQ(spec.min_size, 3u);
  EXPECT_EQ(spec.max_size, 10u);
  EXPECT_EQ(spec.count, 200u);
  EXPECT_EQ(spec.max_val, 25u);
  EXPECT_EQ(sample_sets(parse_sample_spec("sizes=2..3,count=4,max=9"), 1).size(), 8u);
  EXPECT_THROW(parse_sample_spec("sizes=3..x"), std::invalid_argument);
  EXPECT_THROW(parse_sample_spec("colour=red"), std::invalid_argument);
}

// --- parallel map ----------------------------------------------------------

TEST(ParallelMap, KeepsOrderAndPropagatesErrors) {
  std::vector<int> xs(1000);
  for (int i = 0; i < 1000; ++i) xs[i] = i;
  const auto sq = parallel_map(std::span<const int>(xs), 8, [](int x) { return x * x; });
  for (int i = 0; i < 1000; ++i) ASSERT_EQ(sq[i], i * i);
  EXPECT_THROW(parallel_map(std::span<const int>(xs), 4,
                            [](int x) {
                              if (x == 500) throw std::runtime_error("boom");
                              return x;
                            }),
               std::runtime_error);
}
