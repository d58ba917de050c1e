#include "nutrans/simplicial_pair.hpp"
#include "nutrans/zlinalg.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <numeric>

using namespace nutrans;

namespace {

IntMatrix M(std::vector<std::vector<long>> const &rows) { return IntMatrix::from_rows(rows); }
IntMatrix zeros(std::size_t r, std::size_t c) { return IntMatrix(r, c); }

void expect_smith_contract(IntMatrix const &a)
{
	auto const s = smith_normal_form(a);
	EXPECT_EQ(s.U * a * s.V, s.D) << a.str();
	EXPECT_EQ(s.U * s.U_inv, IntMatrix::identity(a.rows()));
	EXPECT_EQ(s.V * s.V_inv, IntMatrix::identity(a.cols()));
	EXPECT_EQ(abs(determinant(s.U)), 1);
	EXPECT_EQ(abs(determinant(s.V)), 1);
	EXPECT_TRUE(s.D.is_diagonal());
	EXPECT_EQ(s.rank, oracle::rational_rank(a));
	auto const inv = s.invariants();
	ASSERT_EQ(inv.size(), s.rank);
	for (std::size_t i = 0; i < inv.size(); ++i)
	{
		EXPECT_GT(inv[i], 0);
		EXPECT_EQ(s.D(i, i), inv[i]);
		if (i + 1 < inv.size())
		{
			EXPECT_TRUE(mpz_divisible_p(inv[i + 1].get_mpz_t(), inv[i].get_mpz_t()));
		}
	}
	// the first invariant is the gcd of all entries
	if (s.rank > 0)
	{
		mpz_class g = 0;
		for (std::size_t r = 0; r < a.rows(); ++r)
			for (std::size_t c = 0; c < a.cols(); ++c)
				mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a(r, c).get_mpz_t());
		EXPECT_EQ(inv[0], g);
	}
}

IntVector add(IntVector a, IntVector const &b)
{
	for (std::size_t i = 0; i < a.size(); ++i)
		a[i] += b[i];
	return a;
}

IntVector scale(IntVector a, long c)
{
	for (auto &x : a)
		x *= c;
	return a;
}

} // namespace

TEST(Smith, Examples)
{
	auto const id = smith_normal_form(IntMatrix::identity(3));
	EXPECT_EQ(id.D, IntMatrix::identity(3));
	EXPECT_EQ(id.rank, 3u);

	auto const z = smith_normal_form(zeros(2, 3));
	EXPECT_EQ(z.rank, 0u);
	EXPECT_TRUE(z.D.is_zero());

	// gcd 2, |det| 8
	auto const s = smith_normal_form(M({{2, 4}, {6, 8}}));
	EXPECT_EQ(s.invariants(), (IntVector{2, 4}));
	EXPECT_EQ(determinant(M({{2, 4}, {6, 8}})), -8);

	EXPECT_EQ(smith_normal_form(M({{2, 0}, {0, 3}})).invariants(), (IntVector{1, 6}));
	EXPECT_EQ(smith_normal_form(M({{-5}})).invariants(), (IntVector{5}));
	for (auto const &a : {M({{2, 4}, {6, 8}}), M({{0, 0, 7}, {0, 0, 0}}), M({{2, 0}, {0, 3}}), M({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})})
		expect_smith_contract(a);
}

TEST(Smith, EmptyShapes)
{
	for (auto const &[r, c] : {std::pair<std::size_t, std::size_t>{0, 0}, {0, 3}, {3, 0}})
	{
		auto const s = smith_normal_form(zeros(r, c));
		EXPECT_EQ(s.rank, 0u);
		EXPECT_EQ(s.U, IntMatrix::identity(r));
		EXPECT_EQ(s.V, IntMatrix::identity(c));
		EXPECT_EQ(s.D.rows(), r);
		EXPECT_EQ(s.D.cols(), c);
	}
	EXPECT_EQ(determinant(zeros(0, 0)), 1);
}

TEST(Smith, RandomContract)
{
	oracle::Gen gen(41);
	for (int t = 0; t < 150; ++t)
	{
		auto const r = static_cast<std::size_t>(gen.uniform(1, 8));
		auto const c = static_cast<std::size_t>(gen.uniform(1, 8));
		auto a = gen.matrix(r, c, gen.uniform(1, 20));
		if (t % 3 == 0)
			for (std::size_t i = 0; i < r; ++i)
				for (std::size_t j = 0; j < c; ++j)
					if (gen.uniform(0, 9) < 7)
						a(i, j) = 0;
		if (t % 5 == 0 && r >= 2)
			for (std::size_t j = 0; j < c; ++j)
				a(1, j) = 3 * a(0, j);
		expect_smith_contract(a);
	}
}

TEST(Smith, Deterministic)
{
	oracle::Gen gen(42);
	auto const a = gen.matrix(6, 5, 9);
	auto const s1 = smith_normal_form(a), s2 = smith_normal_form(a);
	EXPECT_EQ(s1.U, s2.U);
	EXPECT_EQ(s1.V, s2.V);
}

TEST(Determinant, MatchesLeibniz)
{
	oracle::Gen gen(43);
	for (int t = 0; t < 200; ++t)
	{
		auto const n = static_cast<std::size_t>(gen.uniform(1, 6));
		auto a = gen.matrix(n, n, 6);
		if (t % 4 == 0 && n >= 2)
			for (std::size_t j = 0; j < n; ++j)
				a(n - 1, j) = a(0, j) - 2 * a(1, j);
		EXPECT_EQ(determinant(a), oracle::leibniz_det(a)) << a.str();
	}
	EXPECT_THROW(determinant(zeros(2, 3)), std::invalid_argument);
}

// cell complexes with one vertex: boundary matrices are given directly
TEST(Homology, Circle)
{
	auto const h1 = homology(zeros(1, 1), zeros(1, 0), 1);
	EXPECT_EQ(h1.rank, 1u);
	EXPECT_TRUE(h1.torsion.empty());
	auto const h0 = homology(zeros(0, 1), zeros(1, 1), 0);
	EXPECT_EQ(h0.rank, 1u);
}

TEST(Homology, Torus)
{
	auto const d1 = zeros(1, 2), d2 = zeros(2, 1), d3 = zeros(1, 0);
	EXPECT_EQ(homology(d1, d2, 1).rank, 2u);
	EXPECT_EQ(homology(d2, d3, 2).rank, 1u);
}

TEST(Homology, ProjectivePlaneAndKleinBottle)
{
	auto const rp1 = homology(zeros(1, 1), M({{2}}), 1);
	EXPECT_EQ(rp1.rank, 0u);
	EXPECT_EQ(rp1.torsion, (IntVector{2}));
	EXPECT_EQ(rp1.project({IntVector{1}}), (IntVector{1}));
	EXPECT_EQ(rp1.project({IntVector{2}}), (IntVector{0}));
	EXPECT_EQ(rp1.project({IntVector{-1}}), (IntVector{1}));
	EXPECT_EQ(homology(M({{2}}), zeros(1, 0), 2).rank, 0u);

	// Klein bottle: d(face) = 2a
	auto const k1 = homology(zeros(1, 2), M({{2}, {0}}), 1);
	EXPECT_EQ(k1.rank, 1u);
	EXPECT_EQ(k1.torsion, (IntVector{2}));
	EXPECT_EQ(k1.coordinate_count(), 2u);
	for (std::size_t i = 0; i < k1.representatives.size(); ++i)
	{
		IntVector e(2, 0);
		e[i] = 1;
		EXPECT_EQ(k1.project(k1.representatives[i]), e);
	}
}

TEST(Homology, TriangleBoundary)
{
	// vertices 0,1,2; edges 01, 12, 02
	auto const d1 = M({{-1, 0, -1}, {1, -1, 0}, {0, 1, 1}});
	auto const h1 = homology(d1, zeros(3, 0), 1);
	EXPECT_EQ(h1.rank, 1u);
	EXPECT_EQ(abs(h1.project({1, 1, -1})[0]), 1);
	EXPECT_EQ(homology(zeros(0, 3), d1, 0).rank, 1u);
}

TEST(Homology, RejectsNonComplex)
{
	EXPECT_THROW(homology(M({{1}}), M({{1}}), 1), std::invalid_argument);
	EXPECT_THROW(homology(zeros(1, 2), zeros(3, 1), 1), std::invalid_argument);
}

TEST(PairHomology, RanksForOneGenerator)
{
	for (int n = 1; n <= 3; ++n)
	{
		PairComplex const c(n, 1, n + 1);
		auto const h = homology(c, n);
		EXPECT_EQ(h.rank, static_cast<std::size_t>(n));
		EXPECT_TRUE(h.torsion.empty());
		EXPECT_EQ(h.rank, c.rank(n) - oracle::rational_rank(c.boundary(n)) - oracle::rational_rank(c.boundary(n + 1)));
	}
	PairComplex const c(2, 1, 3);
	EXPECT_THROW(homology(c, 4), std::out_of_range);
}

TEST(CycleCoordinates, Examples)
{
	PairComplex const c(2, 1, 3);
	EXPECT_EQ(cycle_coordinates(c, 2, {0, 0}), (IntVector{0, 0}));
	EXPECT_EQ(cycle_coordinates(c, 2, {1, 0}), (IntVector{1, 0}));
	EXPECT_EQ(cycle_coordinates(c, 2, {3, -1}), (IntVector{3, -1}));
	auto const h = homology(c, 2);
	EXPECT_EQ(cycle_coordinates(c, h, {1, 0}), cycle_coordinates(c, 2, {1, 0}));

	PairComplex const c2(2, 2, 3);
	// a 2-chain with nonzero boundary
	std::size_t j = 0;
	while (c2.boundary(2).column(j) == IntVector(c2.rank(1), 0))
		++j;
	IntVector z(c2.rank(2), 0);
	z[j] = 1;
	EXPECT_THROW(cycle_coordinates(c2, 2, z), std::invalid_argument);
}

TEST(CycleCoordinates, LinearAndKillsBoundaries)
{
	oracle::Gen gen(44);
	for (int n = 1; n <= 3; ++n)
		for (int g = 1; g <= 2; ++g)
		{
			PairComplex const c(n, g, n + 1);
			auto const h = homology(c, n);
			ASSERT_EQ(h.representatives.size(), h.coordinate_count());
			for (std::size_t i = 0; i < h.representatives.size(); ++i)
			{
				IntVector e(h.coordinate_count(), 0);
				e[i] = 1;
				EXPECT_EQ(cycle_coordinates(c, h, h.representatives[i]), e);
			}
			for (int t = 0; t < 10; ++t)
			{
				IntVector z(c.rank(n), 0), want(h.coordinate_count(), 0);
				for (std::size_t i = 0; i < h.representatives.size(); ++i)
				{
					long const k = gen.uniform(-3, 3);
					z = add(z, scale(h.representatives[i], k));
					want[i] = k;
				}
				IntVector u(c.rank(n + 1));
				for (auto &x : u)
					x = gen.uniform(-2, 2);
				z = add(z, c.boundary(n + 1) * u);
				EXPECT_EQ(cycle_coordinates(c, h, z), want);
			}
		}
}

TEST(ToString, Examples)
{
	EXPECT_EQ(to_string(IntVector{3, -1}), "(3,-1)");
	EXPECT_EQ(to_string(IntVector{}), "()");
}
