#pragma once

// Formal integer chains of affine simplex maps Delta^q -> Delta^p, i.e. the
// affine part of the linearised category with objects the standard simplices.
// Composition is the bilinear extension of map composition.

#include "nutrans/affine_simplex.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nutrans {

class FormalChain
{
public:
	using Coeff = std::int64_t;
	using Terms = std::map<AffineSimplexMap, Coeff>;

	FormalChain(int domain_dim, int codomain_dim) : q_(domain_dim), p_(codomain_dim) {}
	static FormalChain single(AffineSimplexMap m, Coeff c = 1);

	int domain_dim() const { return q_; }
	int codomain_dim() const { return p_; }
	Terms const &terms() const { return terms_; }
	std::size_t size() const { return terms_.size(); }
	bool is_zero() const { return terms_.empty(); }
	Coeff coefficient(AffineSimplexMap const &m) const;

	/// Adds c * m, dropping the entry if the coefficient cancels.
	void add(AffineSimplexMap const &m, Coeff c);

	FormalChain &operator+=(FormalChain const &other);
	FormalChain &operator-=(FormalChain const &other);
	FormalChain operator-() const;
	FormalChain &operator*=(Coeff c);

	/// Sum of the coefficients.
	Coeff augmentation() const;

	std::string str() const;

	friend bool operator==(FormalChain const &, FormalChain const &) = default;

private:
	void check_compatible(FormalChain const &other) const;

	int q_;
	int p_;
	Terms terms_;
};

FormalChain operator+(FormalChain a, FormalChain const &b);
FormalChain operator-(FormalChain a, FormalChain const &b);
FormalChain operator*(FormalChain::Coeff c, FormalChain a);

FormalChain identity_chain(int n);

/// sum_{i=0}^n (-1)^i face_i : Delta^{n-1} -> Delta^n, n >= 1.
FormalChain boundary_chain(int n);

/// sum over (v,sigma) in Ens_n^k of eps(sigma) c_k(v,sigma).
FormalChain div_chain(int n, int k);

/// g o f, extended bilinearly. Throws std::invalid_argument on mismatch.
FormalChain chain_compose(FormalChain const &g, FormalChain const &f);

/// Cone on the vertex E_apex^p: [P_0..P_q] -> [P_0..P_q, E_apex^p].
/// For q >= 1, cone(x) o d = x - cone(x o d); for q = 0 the correction is
/// the augmentation of x times the constant map at the apex.
FormalChain cone_homotopy(FormalChain const &x, int apex_index = 0);

/// L[m] = L^k_{m+1,m} for m = 0..n_max, built by
/// L^k_{1,0} = 0 and L^k_{m+1,m} = cone(id - div_m^k - d o L^k_{m,m-1}).
std::vector<FormalChain> build_homotopy_L(int k, int n_max, int apex_index = 0);

/// id_m - div_m^k == L^k_{m+1,m} o d_{m,m+1} + d_{m-1,m} o L^k_{m,m-1}.
bool homotopy_identity_holds(std::vector<FormalChain> const &L, int k, int m);

/// div_n^k o d computed termwise as sum over Ens_n^k x [0,n] of sgn(x) f(x).
FormalChain div_after_boundary_by_points(int n, int k);

/// Sum of sgn(x) f(x) over x in Ens_n^k x [0,n] with invol(x) still in Ens.
FormalChain involution_paired_sum(int n, int k);

} // namespace nutrans
