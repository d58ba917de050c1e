#include "nutrans/affine_simplex.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nutrans {

RationalPoint vertex_E(int n, int i)
{
	if (i < 0 || i > n)
		throw std::out_of_range("vertex_E: index out of range");
	RationalPoint p(static_cast<std::size_t>(n), Rational(0));
	for (int j = n - i + 1; j <= n; ++j)
		p[static_cast<std::size_t>(j - 1)] = 1;
	return p;
}

bool in_standard_simplex(RationalPoint const &t)
{
	Rational prev = 0;
	for (auto const &x : t)
	{
		if (x < prev)
			return false;
		prev = x;
	}
	return prev <= 1;
}

AffineSimplexMap::AffineSimplexMap(int domain_dim, int codomain_dim,
                                   std::vector<RationalPoint> vertex_images)
    : domain_dim_(domain_dim), codomain_dim_(codomain_dim), vertices_(std::move(vertex_images))
{
	if (domain_dim_ < 0 || codomain_dim_ < 0 ||
	    vertices_.size() != static_cast<std::size_t>(domain_dim_ + 1))
		throw std::invalid_argument("AffineSimplexMap: wrong number of vertex images");
	for (auto const &p : vertices_)
		if (p.size() != static_cast<std::size_t>(codomain_dim_))
			throw std::invalid_argument("AffineSimplexMap: vertex image of wrong dimension");
}

RationalPoint AffineSimplexMap::operator()(RationalPoint const &x) const
{
	if (x.size() != static_cast<std::size_t>(domain_dim_))
		throw std::invalid_argument("AffineSimplexMap: point of wrong dimension");
	// barycentric weight of E_j^q is t_{q-j+1} - t_{q-j}, with t_0 = 0, t_{q+1} = 1
	int const q = domain_dim_;
	auto coord = [&](int m) -> Rational {
		if (m <= 0)
			return 0;
		if (m > q)
			return 1;
		return x[static_cast<std::size_t>(m - 1)];
	};
	RationalPoint out(static_cast<std::size_t>(codomain_dim_), Rational(0));
	for (int j = 0; j <= q; ++j)
	{
		Rational const w = coord(q - j + 1) - coord(q - j);
		if (w == 0)
			continue;
		auto const &P = vertices_[static_cast<std::size_t>(j)];
		for (std::size_t c = 0; c < out.size(); ++c)
			out[c] += w * P[c];
	}
	return out;
}

bool AffineSimplexMap::maps_into_simplex() const
{
	return std::all_of(vertices_.begin(), vertices_.end(),
	                   [](RationalPoint const &p) { return in_standard_simplex(p); });
}

std::string AffineSimplexMap::str() const
{
	std::ostringstream os;
	os << '[';
	for (std::size_t j = 0; j < vertices_.size(); ++j)
	{
		os << (j ? "," : "") << '(';
		for (std::size_t c = 0; c < vertices_[j].size(); ++c)
			os << (c ? "," : "") << vertices_[j][c].get_str();
		os << ')';
	}
	os << ']';
	return os.str();
}

bool operator<(AffineSimplexMap const &a, AffineSimplexMap const &b)
{
	if (a.domain_dim_ != b.domain_dim_)
		return a.domain_dim_ < b.domain_dim_;
	if (a.codomain_dim_ != b.codomain_dim_)
		return a.codomain_dim_ < b.codomain_dim_;
	return a.vertices_ < b.vertices_;
}

std::size_t hash_value(AffineSimplexMap const &m)
{
	std::size_t h = std::hash<int>{}(m.domain_dim()) * 31u + std::hash<int>{}(m.codomain_dim());
	auto mix = [&h](std::size_t x) { h ^= x + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
	for (auto const &p : m.vertices())
		for (auto const &x : p)
		{
			mix(std::hash<std::string>{}(x.get_num().get_str(16)));
			mix(std::hash<std::string>{}(x.get_den().get_str(16)));
		}
	return h;
}

AffineSimplexMap identity_map(int n)
{
	std::vector<RationalPoint> v;
	for (int i = 0; i <= n; ++i)
		v.push_back(vertex_E(n, i));
	return AffineSimplexMap(n, n, std::move(v));
}

AffineSimplexMap face_map(int n, int i)
{
	if (n < 1 || i < 0 || i > n)
		throw std::out_of_range("face_map: index out of range");
	std::vector<RationalPoint> v;
	for (int j = 0; j <= n; ++j)
		if (j != n - i)
			v.push_back(vertex_E(n, j));
	return AffineSimplexMap(n - 1, n, std::move(v));
}

AffineSimplexMap compose(AffineSimplexMap const &g, AffineSimplexMap const &f)
{
	if (f.codomain_dim() != g.domain_dim())
		throw std::invalid_argument("compose: dimension mismatch");
	std::vector<RationalPoint> v;
	v.reserve(f.vertices().size());
	for (auto const &P : f.vertices())
		v.push_back(g(P));
	return AffineSimplexMap(f.domain_dim(), g.codomain_dim(), std::move(v));
}

AffineSimplexMap subdivision_piece(IntVec const &v, Permutation const &sigma, int k)
{
	int const n = sigma.degree();
	if (k < 1)
		throw std::invalid_argument("subdivision_piece: arity must be >= 1");
	if (static_cast<int>(v.size()) != n)
		throw std::invalid_argument("subdivision_piece: v and sigma have different lengths");
	std::vector<RationalPoint> verts;
	for (int j = 0; j <= n; ++j)
	{
		auto const moved = sigma.pullback(vertex_E(n, j));
		RationalPoint P(static_cast<std::size_t>(n));
		for (std::size_t c = 0; c < P.size(); ++c)
			P[c] = Rational(Rational(static_cast<long>(v[c])) + moved[c]) / k;
		verts.push_back(std::move(P));
	}
	return AffineSimplexMap(n, n, std::move(verts));
}

SignedMap f_map(InvolPoint const &x, int k)
{
	int const n = x.dimension();
	return SignedMap{compose(subdivision_piece(x.v, x.sigma, k), face_map(n, x.i)), sgn(x)};
}

SignedMap ftilde_map(IntVec const &w, Permutation const &tau, int i, int k)
{
	int const n = tau.degree() + 1;
	int const sign = (i % 2 == 0 ? 1 : -1) * epsilon(tau);
	return SignedMap{compose(face_map(n, i), subdivision_piece(w, tau, k)), sign};
}

} // namespace nutrans
