#pragma once

// Exact-rational affine maps between standard simplices
//   Delta^n = {0 <= t_1 <= ... <= t_n <= 1} in R^n.
//
// The affine basis of R^n is E_0^n, ..., E_n^n with E_i^n = e_n + ... + e_{n-i+1}
// (so E_0^n = 0 and E_n^n = (1,...,1)). An affine map R^q -> R^p is stored as
// the list of images of E_0^q, ..., E_q^q; this list is its canonical form and
// map equality is list equality.

#include "nutrans/perm_comb.hpp"

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace nutrans {

using Rational = mpq_class;
using RationalPoint = std::vector<Rational>;

/// E_i^n. Throws std::out_of_range unless 0 <= i <= n.
RationalPoint vertex_E(int n, int i);

bool in_standard_simplex(RationalPoint const &t);

class AffineSimplexMap
{
public:
	AffineSimplexMap() = default;
	/// vertex_images.size() must be domain_dim + 1 and every image must have
	/// codomain_dim coordinates.
	AffineSimplexMap(int domain_dim, int codomain_dim, std::vector<RationalPoint> vertex_images);

	int domain_dim() const { return domain_dim_; }
	int codomain_dim() const { return codomain_dim_; }
	std::vector<RationalPoint> const &vertices() const { return vertices_; }

	/// Evaluate at an arbitrary point of R^q.
	RationalPoint operator()(RationalPoint const &x) const;

	/// Every vertex image lies in Delta^p, hence the whole simplex does.
	bool maps_into_simplex() const;

	std::string str() const;

	friend bool operator==(AffineSimplexMap const &a, AffineSimplexMap const &b)
	{
		return a.domain_dim_ == b.domain_dim_ && a.codomain_dim_ == b.codomain_dim_ &&
		       a.vertices_ == b.vertices_;
	}
	friend bool operator<(AffineSimplexMap const &a, AffineSimplexMap const &b);

private:
	int domain_dim_ = 0;
	int codomain_dim_ = 0;
	std::vector<RationalPoint> vertices_;
};

std::size_t hash_value(AffineSimplexMap const &m);

AffineSimplexMap identity_map(int n);

/// The face inclusion Delta^{n-1} -> Delta^n omitting vertex E_{n-i}^n, i in [0,n].
/// Pointwise it sends (t_1..t_{n-1}) to (t_1..t_i, t_i, ..., t_{n-1}) with
/// t_0 = 0 and t_n = 1.
AffineSimplexMap face_map(int n, int i);

/// g o f. Throws std::invalid_argument on a dimension mismatch.
AffineSimplexMap compose(AffineSimplexMap const &g, AffineSimplexMap const &f);

/// c_k(v, sigma): x -> (v + sigma^* x) / k on R^n.
AffineSimplexMap subdivision_piece(IntVec const &v, Permutation const &sigma, int k);

struct SignedMap
{
	AffineSimplexMap map;
	int sign = 1;

	friend bool operator==(SignedMap const &, SignedMap const &) = default;
};

/// (c_k(v,sigma) o face_i, (-1)^i eps(sigma)).
SignedMap f_map(InvolPoint const &x, int k);

/// (face_i o c_k(w,tau), (-1)^i eps(tau)) with face_i : Delta^{n-1} -> Delta^n,
/// n = deg(tau) + 1.
SignedMap ftilde_map(IntVec const &w, Permutation const &tau, int i, int k);

} // namespace nutrans

template <> struct std::hash<nutrans::AffineSimplexMap>
{
	std::size_t operator()(nutrans::AffineSimplexMap const &m) const noexcept
	{
		return nutrans::hash_value(m);
	}
};
