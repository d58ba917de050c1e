#include "nutrans/affine_simplex.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <unordered_set>

using namespace nutrans;

namespace {

RationalPoint pt(std::vector<mpq_class> v) { return v; }
mpq_class q(long a, long b = 1)
{
	mpq_class r(a, b);
	r.canonicalize();
	return r;
}

// pointwise face: s_j = t_j for j <= i, s_j = t_{j-1} otherwise, t_0 = 0, t_n = 1
RationalPoint pointwise_face(int n, int i, RationalPoint const &t)
{
	auto at = [&](int j) { return j == 0 ? q(0) : (j == n ? q(1) : t[static_cast<std::size_t>(j - 1)]); };
	RationalPoint out;
	for (int j = 1; j <= n; ++j)
		out.push_back(j <= i ? at(j) : at(j - 1));
	return out;
}

} // namespace

TEST(VertexE, Examples)
{
	EXPECT_EQ(vertex_E(3, 0), pt({0, 0, 0}));
	EXPECT_EQ(vertex_E(3, 1), pt({0, 0, 1}));
	EXPECT_EQ(vertex_E(3, 3), pt({1, 1, 1}));
	EXPECT_THROW(vertex_E(3, 4), std::out_of_range);
	EXPECT_THROW(vertex_E(3, -1), std::out_of_range);
}

TEST(FaceMap, Examples)
{
	EXPECT_EQ(face_map(1, 0).vertices(), (std::vector<RationalPoint>{pt({0})}));
	EXPECT_EQ(face_map(1, 1).vertices(), (std::vector<RationalPoint>{pt({1})}));
	EXPECT_EQ(face_map(2, 1)(pt({q(1, 3)})), pt({q(1, 3), q(1, 3)}));
	EXPECT_THROW(face_map(2, 3), std::out_of_range);
}

// the vertex-list definition agrees with the pointwise formula
TEST(FaceMap, PointwiseFormula)
{
	oracle::Gen gen(3);
	for (int n = 1; n <= 5; ++n)
		for (int i = 0; i <= n; ++i)
			for (int t = 0; t < 20; ++t)
			{
				RationalPoint x;
				for (int j = 0; j < n - 1; ++j)
					x.push_back(q(gen.uniform(0, 12), 12));
				std::sort(x.begin(), x.end());
				EXPECT_EQ(face_map(n, i)(x), pointwise_face(n, i, x)) << n << " " << i;
			}
}

TEST(Compose, Examples)
{
	auto const f = subdivision_piece({1, 0}, Permutation({2, 1}), 3);
	EXPECT_EQ(compose(identity_map(2), f), f);
	EXPECT_EQ(compose(f, identity_map(2)), f);
	// both constant at the origin
	auto const a = compose(face_map(2, 0), face_map(1, 0));
	auto const b = compose(face_map(2, 1), face_map(1, 0));
	EXPECT_EQ(a.vertices(), (std::vector<RationalPoint>{pt({0, 0})}));
	EXPECT_EQ(a, b);
	auto const c = compose(subdivision_piece({1}, Permutation::identity(1), 2), face_map(1, 0));
	EXPECT_EQ(c.vertices(), (std::vector<RationalPoint>{pt({q(1, 2)})}));
	EXPECT_THROW(compose(face_map(2, 0), identity_map(2)), std::invalid_argument);
}

TEST(Compose, AssociativeOnSamples)
{
	oracle::Gen gen(9);
	for (int t = 0; t < 100; ++t)
	{
		int const n = gen.uniform(1, 4);
		auto rnd = [&] {
			IntVec v;
			for (int i = 0; i < n; ++i)
				v.push_back(gen.uniform(-2, 3));
			return subdivision_piece(v, gen.permutation(n), gen.uniform(1, 4));
		};
		auto const f = rnd(), g = rnd(), h = rnd();
		EXPECT_EQ(compose(h, compose(g, f)), compose(compose(h, g), f));
		// pointwise too
		RationalPoint x;
		for (int i = 0; i < n; ++i)
			x.push_back(q(gen.uniform(-5, 5), gen.uniform(1, 7)));
		EXPECT_EQ(compose(g, f)(x), g(f(x)));
	}
}

TEST(SubdivisionPiece, Examples)
{
	EXPECT_EQ(subdivision_piece({0, 0, 0}, Permutation::identity(3), 1), identity_map(3));
	auto const m = subdivision_piece({1}, Permutation::identity(1), 2);
	for (int a = 0; a <= 6; ++a)
		EXPECT_EQ(m(pt({q(a, 6)})), pt({(1 + q(a, 6)) / 2}));
	auto const s = subdivision_piece({0, 1}, Permutation({2, 1}), 2);
	EXPECT_EQ(s.vertices(),
	          (std::vector<RationalPoint>{pt({0, q(1, 2)}), pt({q(1, 2), q(1, 2)}), pt({q(1, 2), 1})}));
}

TEST(SubdivisionPiece, EnsPiecesStayInSimplex)
{
	for (int n = 0; n <= 4; ++n)
		for (int k = 1; k <= 4; ++k)
			for (auto const &e : enumerate_ens(n, k))
				EXPECT_TRUE(subdivision_piece(e.v, e.sigma, k).maps_into_simplex());
}

TEST(FMap, Examples)
{
	for (int n = 1; n <= 4; ++n)
	{
		auto const f = f_map({IntVec(static_cast<std::size_t>(n), 0), Permutation::identity(n), 0}, 1);
		EXPECT_EQ(f.map, face_map(n, 0));
		EXPECT_EQ(f.sign, 1);
	}
	auto const f = f_map({{0, 0}, Permutation::identity(2), 1}, 2);
	EXPECT_EQ(f.map.vertices(), (std::vector<RationalPoint>{pt({0, 0}), pt({q(1, 2), q(1, 2)})}));
	EXPECT_EQ(f.sign, -1);
}

TEST(FMap, InvolutionInvariance)
{
	for (int n = 1; n <= 3; ++n)
		for (int k = 1; k <= 3; ++k)
			for (auto const &s : all_permutations(n))
			{
				IntVec v(static_cast<std::size_t>(n), -1);
				for (;;)
				{
					for (int i = 0; i <= n; ++i)
					{
						InvolPoint const x{v, s, i};
						auto const a = f_map(x, k), b = f_map(invol(x), k);
						EXPECT_EQ(a.map, b.map);
						EXPECT_EQ(a.sign, -b.sign);
					}
					std::size_t p = 0;
					while (p < v.size() && ++v[p] > k)
						v[p++] = -1;
					if (p == v.size())
						break;
				}
			}
}

TEST(FTildeMap, Examples)
{
	for (int n = 1; n <= 4; ++n)
	{
		auto const f = ftilde_map(IntVec(static_cast<std::size_t>(n - 1), 0), Permutation::identity(n - 1), 0, 1);
		EXPECT_EQ(f.map, face_map(n, 0));
		EXPECT_EQ(f.sign, 1);
	}
	auto const id1 = Permutation::identity(1);
	EXPECT_EQ(ftilde_map({0}, id1, 1, 2).map, f_map(bij({0}, id1, 1, 2), 2).map);
	for (auto const &tau : all_permutations(1))
		EXPECT_EQ(ftilde_map({0}, tau, 2, 2).sign, epsilon(tau));
	EXPECT_EQ(ftilde_map({0, 1}, Permutation({2, 1}), 2, 2).sign, -1);
}

TEST(FTildeMap, DiagramWithBij)
{
	for (int n = 1; n <= 4; ++n)
		for (int k = 1; k <= 3; ++k)
		{
			// every w in [0,k-1]^{n-1}, every tau
			IntVec w(static_cast<std::size_t>(n - 1), 0);
			for (;;)
			{
				for (auto const &tau : all_permutations(n - 1))
					for (int i = 0; i <= n; ++i)
					{
						auto const ft = ftilde_map(w, tau, i, k);
						auto const x = bij(w, tau, i, k);
						EXPECT_EQ(f_map(x, k).map, ft.map);
						EXPECT_EQ(sgn(x), ft.sign);
					}
				std::size_t p = 0;
				while (p < w.size() && ++w[p] == k)
					w[p++] = 0;
				if (p == w.size())
					break;
			}
		}
}

TEST(AffineSimplexMap, HashAndEquality)
{
	std::unordered_set<AffineSimplexMap> seen;
	for (int k = 1; k <= 3; ++k)
		for (auto const &e : enumerate_ens(2, k))
			seen.insert(subdivision_piece(e.v, e.sigma, k));
	EXPECT_EQ(seen.size(), 1u + 4u + 9u); // pieces of different k differ in size
	EXPECT_TRUE(seen.count(identity_map(2)));
	EXPECT_THROW(AffineSimplexMap(1, 1, {pt({0})}), std::invalid_argument);
}
