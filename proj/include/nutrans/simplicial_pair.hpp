#pragma once

// Simplicial model of the wedge X of g circles (one vertex, one
// nondegenerate edge per generator), its n-fold product X^n, the partial
// diagonal subcomplex
//   Y = {x_1 = *} u {x_i = x_{i+1}, 1 <= i < n} u {x_n = *},
// and the normalized relative chain complex C(X^n) / C(Y).
//
// A d-simplex of a circle is a monotone map [d] -> [1]. It is either the
// constant simplex or has a jump j in [1,d]: vertices 0..j-1 go to 0 and
// vertices j..d go to 1.

#include "nutrans/zlinalg.hpp"

#include <nlohmann/json.hpp>

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace nutrans {

struct WedgeSimplex
{
	int gen = 0;  ///< 0 for the constant simplex, else generator in [1,g]
	int jump = 0; ///< in [1,d] for an edge, 0 for the constant simplex

	static WedgeSimplex constant() { return {}; }
	static WedgeSimplex edge(int gen, int jump) { return {gen, jump}; }
	bool is_constant() const { return gen == 0; }

	friend bool operator==(WedgeSimplex const &, WedgeSimplex const &) = default;
};

class ProductSimplex
{
public:
	ProductSimplex() = default;
	/// Throws std::invalid_argument if a jump lies outside [1,dim].
	ProductSimplex(int dim, std::vector<WedgeSimplex> components);

	int dim() const { return dim_; }
	int factors() const { return static_cast<int>(components_.size()); }
	std::vector<WedgeSimplex> const &components() const { return components_; }
	WedgeSimplex const &operator[](int p) const { return components_[static_cast<std::size_t>(p)]; }

	/// Degenerate at slot i in [0,d-1] when no component jumps at i+1.
	bool is_degenerate_at(int slot) const;
	bool is_degenerate() const;

	/// Face d_i, i in [0,d], applied componentwise.
	ProductSimplex face(int i) const;

	/// Components written as "a2" (generator a, jump 2) or "*" (constant).
	std::string str() const;
	static ProductSimplex parse(int dim, std::vector<std::string> const &components);

	friend bool operator==(ProductSimplex const &, ProductSimplex const &) = default;
	/// Canonical order: lexicographic on the generator vector, then on the
	/// jump vector in descending order.
	friend std::strong_ordering operator<=>(ProductSimplex const &a, ProductSimplex const &b);

private:
	int dim_ = 0;
	std::vector<WedgeSimplex> components_;
};

/// Face d_i of a single circle simplex of dimension d.
WedgeSimplex wedge_face(WedgeSimplex s, int d, int i);

/// Lies in Y: first or last component constant, or two neighbours equal.
bool in_Y(ProductSimplex const &s);

/// Nondegenerate d-simplices of X^n (n factors, g generators), in canonical order.
std::vector<ProductSimplex> enumerate_nondegenerate(int n, int g, int d);

/// Nondegenerate d-simplices of X^n not lying in Y, in canonical order.
std::vector<ProductSimplex> enumerate_basis(int n, int g, int d);

using SimplexChain = std::map<ProductSimplex, std::int64_t>;

void add_term(SimplexChain &c, ProductSimplex const &s, std::int64_t coeff);

/// Image of a chain of X^n in the relative chains: degenerate simplices and
/// simplices of Y are dropped.
SimplexChain relative_part(SimplexChain const &c);

/// Relative boundary of a chain.
SimplexChain relative_boundary(SimplexChain const &c);

class PairComplex
{
public:
	PairComplex(int n, int g, int d_max);

	int n() const { return n_; }
	int genus() const { return g_; }
	int d_max() const { return d_max_; }

	/// Basis of C_d, empty for d < 0 or d > d_max.
	std::vector<ProductSimplex> const &basis(int d) const;
	std::size_t rank(int d) const { return basis(d).size(); }
	/// Index of s in basis(d), or -1.
	int index_of(ProductSimplex const &s) const;

	/// Boundary C_d -> C_{d-1} as a (rank(d-1) x rank(d)) matrix. For d = 0
	/// and d = d_max + 1 this is a matrix with zero rows or zero columns.
	IntMatrix const &boundary(int d) const;

	/// Coordinate vector of a chain all of whose simplices are basis
	/// elements of C_d (degenerate or Y simplices are ignored).
	IntVector to_vector(SimplexChain const &c, int d) const;
	SimplexChain to_chain(IntVector const &v, int d) const;

	nlohmann::json to_json() const;
	static PairComplex from_json(nlohmann::json const &j);

private:
	PairComplex() = default;
	void build_boundaries();

	int n_ = 0;
	int g_ = 0;
	int d_max_ = 0;
	std::vector<std::vector<ProductSimplex>> bases_;
	std::vector<std::map<ProductSimplex, int>> index_;
	std::vector<IntMatrix> boundaries_; ///< boundaries_[d] for d in [0, d_max+1]
};

} // namespace nutrans
