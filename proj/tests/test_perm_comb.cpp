#include "nutrans/perm_comb.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace nutrans;

namespace {

Permutation P(std::vector<int> v) { return Permutation(std::move(v)); }

std::vector<Permutation> brute_shuffles(Composition const &c)
{
	std::vector<Permutation> out;
	auto const ends = c.block_ends();
	for (auto const &s : all_permutations(c.total()))
	{
		bool ok = true;
		int start = 1;
		for (int e : ends)
		{
			for (int p = start; p < e; ++p)
				ok = ok && s(p) < s(p + 1);
			start = e + 1;
		}
		if (ok)
			out.push_back(s);
	}
	return out;
}

long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

} // namespace

TEST(Permutation, RejectsNonBijection)
{
	EXPECT_THROW(P({1, 1}), std::invalid_argument);
	EXPECT_THROW(P({0, 1}), std::invalid_argument);
}

TEST(Epsilon, Examples)
{
	EXPECT_EQ(epsilon(Permutation::identity(4)), 1);
	EXPECT_EQ(epsilon(P({2, 1})), -1);
	auto const c = Permutation::cycle(3);
	EXPECT_EQ(c, P({2, 3, 1}));
	EXPECT_EQ(epsilon(c), 1);
	// (-1)^{n-1} for the n-cycle
	for (int n = 1; n <= 7; ++n)
		EXPECT_EQ(epsilon(Permutation::cycle(n)), n % 2 == 1 ? 1 : -1) << n;
}

TEST(InversionsAt, Examples)
{
	for (int i = 1; i <= 4; ++i)
		EXPECT_TRUE(inversions_at(Permutation::identity(4), i).empty());
	EXPECT_EQ(inversions_at(P({2, 3, 1}), 1), (std::vector<int>{3}));
	EXPECT_EQ(inversions_at(P({2, 3, 1}), 3), (std::vector<int>{1, 2}));
	EXPECT_THROW(inversions_at(P({2, 3, 1}), 0), std::out_of_range);
	EXPECT_THROW(inversions_at(P({2, 3, 1}), 4), std::out_of_range);
}

TEST(InversionsAt, ParityProperty)
{
	for (int m = 1; m <= 6; ++m)
		for (auto const &tau : all_permutations(m))
			for (int i = 1; i <= m; ++i)
			{
				int const card = static_cast<int>(inversions_at(tau, i).size());
				EXPECT_EQ(((card - (tau(i) - i)) % 2 + 2) % 2, 0) << tau.str() << " " << i;
			}
}

TEST(FacePerm, Examples)
{
	EXPECT_EQ(face_perm(Permutation::identity(2), 1), Permutation::identity(3));
	EXPECT_EQ(face_perm(P({2, 1}), 1), P({2, 3, 1}));
	EXPECT_EQ(face_perm(P({2, 1}), 0), P({1, 3, 2}));
	EXPECT_THROW(face_perm(P({2, 1}), 4), std::out_of_range);
	EXPECT_THROW(face_perm(P({2, 1}), -1), std::out_of_range);
}

TEST(FacePerm, BoundaryCasesFixEnds)
{
	for (int m = 0; m <= 4; ++m)
		for (auto const &tau : all_permutations(m))
		{
			auto const t0 = face_perm(tau, 0);
			auto const tn = face_perm(tau, m + 1);
			EXPECT_EQ(t0(1), 1);
			EXPECT_EQ(tn(m + 1), m + 1);
			for (int x = 2; x <= m + 1; ++x)
				EXPECT_EQ(t0(x), tau(x - 1) + 1);
			for (int x = 1; x <= m; ++x)
				EXPECT_EQ(tn(x), tau(x));
		}
}

TEST(FacePerm, SignAndCollapseProperty)
{
	for (int m = 1; m <= 5; ++m)
		for (auto const &tau : all_permutations(m))
			for (int i = 1; i <= m; ++i)
			{
				auto const ext = face_perm(tau, i);
				int const expected = epsilon(tau) * ((tau(i) - i) % 2 == 0 ? 1 : -1);
				EXPECT_EQ(epsilon(ext), expected);
				for (int x = 1; x <= m + 1; ++x)
					EXPECT_EQ(collapse_after(tau(i), ext(x)), tau(collapse_after(i, x)));
			}
}

TEST(Pullback, Contravariance)
{
	oracle::Gen gen(7);
	for (int t = 0; t < 200; ++t)
	{
		int const n = gen.uniform(1, 6);
		auto const s = gen.permutation(n), u = gen.permutation(n);
		std::vector<int> x;
		for (int i = 0; i < n; ++i)
			x.push_back(gen.uniform(-9, 9));
		EXPECT_EQ((s * u).pullback(x), u.pullback(s.pullback(x)));
	}
}

TEST(Invol, Examples)
{
	EXPECT_EQ(invol({{0, 1}, Permutation::identity(2), 1}), (InvolPoint{{0, 1}, P({2, 1}), 1}));
	EXPECT_EQ(invol({{0, 0}, Permutation::identity(2), 2}), (InvolPoint{{0, 1}, P({2, 1}), 0}));
}

TEST(Invol, SampledProperties)
{
	oracle::Gen gen(11);
	for (int t = 0; t < 2000; ++t)
	{
		int const n = gen.uniform(1, 5);
		IntVec v;
		for (int i = 0; i < n; ++i)
			v.push_back(gen.uniform(-5, 5));
		InvolPoint const x{v, gen.permutation(n), gen.uniform(0, n)};
		auto const y = invol(x);
		EXPECT_EQ(invol(y), x);
		EXPECT_NE(y, x);
		EXPECT_EQ(sgn(y), -sgn(x));
	}
}

TEST(Bij, Examples)
{
	auto const id1 = Permutation::identity(1), id2 = Permutation::identity(2);
	EXPECT_EQ(bij({0}, id1, 1, 2), (InvolPoint{{0, 0}, id2, 1}));
	EXPECT_EQ(bij({0}, id1, 0, 2), (InvolPoint{{0, 0}, id2, 0}));
	EXPECT_EQ(bij({0}, id1, 2, 2), (InvolPoint{{0, 1}, id2, 2}));
}

TEST(Bij, LandsOnUnpairedPoints)
{
	for (int n = 1; n <= 3; ++n)
		for (int k = 1; k <= 3; ++k)
		{
			std::set<InvolPoint> target, image;
			for (auto const &e : enumerate_ens(n, k))
				for (int i = 0; i <= n; ++i)
					if (InvolPoint x{e.v, e.sigma, i}; !in_ens(invol(x), k))
						target.insert(x);
			for (auto const &e : enumerate_ens(n - 1, k))
				for (int i = 0; i <= n; ++i)
					EXPECT_TRUE(image.insert(bij(e.v, e.sigma, i, k)).second);
			EXPECT_EQ(image, target) << n << " " << k;
		}
}

TEST(Shuffles, Examples)
{
	EXPECT_EQ(enumerate_shuffles({{1, 1}}), (std::vector<Permutation>{P({1, 2}), P({2, 1})}));
	EXPECT_EQ(enumerate_shuffles({{2, 0}}), (std::vector<Permutation>{Permutation::identity(2)}));
	EXPECT_EQ(enumerate_shuffles({{2, 1}}).size(), brute_shuffles({{2, 1}}).size());
	EXPECT_EQ(enumerate_shuffles({{2, 1}}).size(), 3u);
}

TEST(Shuffles, MatchBruteForceAndMultinomial)
{
	for (int n = 0; n <= 5; ++n)
		for (int k = 1; k <= 3; ++k)
			for (auto const &c : compositions(n, k))
			{
				auto const s = enumerate_shuffles(c);
				EXPECT_EQ(s, brute_shuffles(c));
				long denom = 1;
				for (int p : c.parts)
					denom *= factorial(p);
				EXPECT_EQ(static_cast<long>(s.size()), factorial(n) / denom);
			}
}

TEST(ShuffleTransposition, Examples)
{
	EXPECT_FALSE(shuffle_transposition_test({{1, 1}}, Permutation::identity(2), 1));
	EXPECT_TRUE(shuffle_transposition_test({{2, 0}}, Permutation::identity(2), 1));
	EXPECT_THROW(shuffle_transposition_test({{2, 0}}, P({2, 1}), 1), std::invalid_argument);
	EXPECT_THROW(shuffle_transposition_test({{1, 1}}, Permutation::identity(2), 2), std::out_of_range);
}

TEST(ShuffleTransposition, AgreesWithMembership)
{
	for (int n = 2; n <= 5; ++n)
		for (int k = 1; k <= n; ++k)
			for (auto const &c : compositions(n, k))
				for (auto const &s : brute_shuffles(c))
					for (int i = 1; i < n; ++i)
					{
						bool const leaves = !is_shuffle(c, Permutation::transposition(n, i) * s);
						EXPECT_EQ(shuffle_transposition_test(c, s, i), leaves);
					}
}

TEST(Ens, Examples)
{
	EXPECT_EQ(enumerate_ens(2, 2).size(), 4u);
	for (int k = 1; k <= 4; ++k)
	{
		auto const e = enumerate_ens(1, k);
		ASSERT_EQ(static_cast<int>(e.size()), k);
		for (int j = 0; j < k; ++j)
			EXPECT_EQ(e[static_cast<std::size_t>(j)], (EnsElement{{j}, Permutation::identity(1)}));
	}
	for (int n = 0; n <= 4; ++n)
	{
		auto const e = enumerate_ens(n, 1);
		ASSERT_EQ(e.size(), 1u);
		EXPECT_EQ(e[0], (EnsElement{IntVec(static_cast<std::size_t>(n), 0), Permutation::identity(n)}));
	}
}

TEST(Ens, CountAndMembership)
{
	for (int n = 0; n <= 5; ++n)
		for (int k = 1; k <= 4; ++k)
		{
			auto const e = enumerate_ens(n, k);
			long expected = 1;
			for (int i = 0; i < n; ++i)
				expected *= k;
			EXPECT_EQ(static_cast<long>(e.size()), expected);
			EXPECT_TRUE(std::is_sorted(e.begin(), e.end()));
			for (auto const &x : e)
				EXPECT_TRUE(in_ens(x.v, x.sigma, k));
		}
}

TEST(Compositions, LevelsRoundTrip)
{
	for (int n = 0; n <= 5; ++n)
		for (int k = 1; k <= 4; ++k)
			for (auto const &c : compositions(n, k))
				EXPECT_EQ(level_composition(composition_levels(c), k), c);
}
