#pragma once

// Permutations, compositions and the sign-reversing involution used by the
// edgewise subdivision operator.
//
// All permutations are 1-indexed: a Permutation of degree n acts on [1,n] and
// perm(i) is the image of i. Index arguments documented as "in [a,b]" follow
// the same convention.

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace nutrans {

using IntVec = std::vector<std::int64_t>;

class Permutation
{
public:
	Permutation() = default;
	/// Throws std::invalid_argument unless images is a bijection of [1,n].
	explicit Permutation(std::vector<int> images);

	static Permutation identity(int n);
	/// s_{i,i+1}, i in [1,n-1].
	static Permutation transposition(int n, int i);
	/// The n-cycle c with c(i) = i+1 for i != n and c(n) = 1.
	static Permutation cycle(int n);

	int degree() const { return static_cast<int>(images_.size()); }
	int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }
	std::vector<int> const &images() const { return images_; }

	Permutation inverse() const;

	/// Pull back a coordinate vector: (sigma^* x)_i = x_{sigma(i)}.
	/// Note (sigma tau)^* = tau^* o sigma^*.
	template <class T> std::vector<T> pullback(std::vector<T> const &x) const
	{
		std::vector<T> out;
		out.reserve(x.size());
		for (int img : images_)
			out.push_back(x[static_cast<std::size_t>(img - 1)]);
		return out;
	}

	std::string str() const;

	friend bool operator==(Permutation const &, Permutation const &) = default;
	friend auto operator<=>(Permutation const &, Permutation const &) = default;

private:
	std::vector<int> images_;
};

/// Composition (sigma o tau)(x) = sigma(tau(x)).
Permutation operator*(Permutation const &sigma, Permutation const &tau);

int inversion_count(Permutation const &p);
/// (-1)^{number of inversions}.
int epsilon(Permutation const &p);

/// All permutations of [1,n] in lexicographic order of their image lists.
std::vector<Permutation> all_permutations(int n);

/// {j in [1,n] : (j-i)(tau(j)-tau(i)) < 0}, sorted. Throws std::out_of_range.
std::vector<int> inversions_at(Permutation const &tau, int i);

/// p_i : [1,n] -> [1,n-1], x for x <= i and x-1 for x >= i+1.
inline int collapse_after(int i, int x) { return x <= i ? x : x - 1; }
/// st_i : [1,n-1] -> [1,n], x for x <= i and x+1 for x >= i+1.
inline int skip_after(int i, int x) { return x <= i ? x : x + 1; }

/// The extension tau^{(i)} of tau in S_{n-1} to S_n, i in [0,n].
/// For 1 <= i <= n-1 it is the unique permutation with
/// p_{tau(i)} o tau^{(i)} = tau o p_i, tau^{(i)}(i) = tau(i) and
/// tau^{(i)}(i+1) = tau(i)+1. For i = 0 it fixes 1 and shifts tau up, for
/// i = n it fixes n.
Permutation face_perm(Permutation const &tau, int i);

/// Integer composition (n_1,...,n_k) of n; zero parts are allowed.
struct Composition
{
	std::vector<int> parts;

	int total() const;
	int length() const { return static_cast<int>(parts.size()); }
	/// Partial sums n_1, n_1+n_2, ..., n_1+...+n_k.
	std::vector<int> block_ends() const;
	/// Block index b in [0,length) containing position p in [1,total].
	int block_of(int p) const;

	friend bool operator==(Composition const &, Composition const &) = default;
	friend auto operator<=>(Composition const &, Composition const &) = default;
};

/// All compositions of n into exactly k non-negative parts, lexicographic.
std::vector<Composition> compositions(int n, int k);

/// sigma restricted to every block of c is increasing.
bool is_shuffle(Composition const &c, Permutation const &sigma);

/// The shuffles S_{n_1,...,n_k}, lexicographic by image list.
std::vector<Permutation> enumerate_shuffles(Composition const &c);

/// Whether s_{i,i+1} o sigma leaves S_c, decided by the block-adjacency
/// criterion: sigma^{-1}(i) is not a block end and
/// sigma^{-1}(i+1) = sigma^{-1}(i)+1.
/// Throws std::invalid_argument if sigma is not a shuffle of c and
/// std::out_of_range unless i in [1,n-1].
bool shuffle_transposition_test(Composition const &c, Permutation const &sigma, int i);

/// Level-set vector of c: v is constant equal to b on block b (0-based).
IntVec composition_levels(Composition const &c);
/// Inverse of composition_levels for v nondecreasing in [0,k-1]^n.
Composition level_composition(IntVec const &v, int k);

/// A pair (v, sigma) with v nondecreasing in [0,k-1]^n and sigma increasing
/// on each level set of v.
struct EnsElement
{
	IntVec v;
	Permutation sigma;

	friend bool operator==(EnsElement const &, EnsElement const &) = default;
	friend auto operator<=>(EnsElement const &, EnsElement const &) = default;
};

bool in_ens(IntVec const &v, Permutation const &sigma, int k);

/// All of Ens_n^k (exactly k^n elements), lexicographic by v then sigma.
std::vector<EnsElement> enumerate_ens(int n, int k);

/// A point (v, sigma, i) of Z^n x S_n x [0,n]. v is unbounded.
struct InvolPoint
{
	IntVec v;
	Permutation sigma;
	int i = 0;

	int dimension() const { return sigma.degree(); }

	friend bool operator==(InvolPoint const &, InvolPoint const &) = default;
	friend auto operator<=>(InvolPoint const &, InvolPoint const &) = default;
};

/// (-1)^i epsilon(sigma).
int sgn(InvolPoint const &x);

/// The fixed-point-free involution of Z^n x S_n x [0,n]. Requires n >= 1.
InvolPoint invol(InvolPoint const &x);

/// (w, tau, i) -> (w o p_i, tau^{(i)}, tau(i)) for 1 <= i <= n-1,
/// ((0,w), tau^{(0)}, 0) for i = 0 and ((w,k-1), tau^{(n)}, n) for i = n,
/// where n = deg(tau) + 1.
InvolPoint bij(IntVec const &w, Permutation const &tau, int i, int k);

/// x lies in Ens_n^k x [0,n].
bool in_ens(InvolPoint const &x, int k);

std::string to_string(IntVec const &v);

} // namespace nutrans
