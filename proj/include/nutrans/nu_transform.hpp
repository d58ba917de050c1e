#pragma once

// The transformation nu_n from words in the free group to classes in
// H_n(X^n, Y), evaluated through the shuffle decomposition of a subdivided
// concatenated path, together with the checks built on it.

#include "nutrans/affine_simplex.hpp"
#include "nutrans/group_words.hpp"
#include "nutrans/perm_comb.hpp"
#include "nutrans/simplicial_pair.hpp"
#include "nutrans/zlinalg.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace nutrans {

/// eps(sigma) (path_1^{(n_1)} x ... x path_l^{(n_l)}) o sigma^*
struct ShuffleTerm
{
	Word word;
	Composition parts;
	Permutation sigma;
	int sign = 1;

	friend bool operator==(ShuffleTerm const &, ShuffleTerm const &) = default;
};

/// All l^n terms, by composition (lexicographic) then shuffle. Throws
/// std::invalid_argument for an empty or non-positive word or n < 1.
std::vector<ShuffleTerm> shuffle_expand(Word const &w, int n);

/// Position p of block b becomes Edge(letter_b, n - sigma(p) + 1).
ProductSimplex term_to_simplex(ShuffleTerm const &t);

/// Signed sum of the simplices of the expansion of a combination of
/// positive words; the empty word contributes nothing.
SimplexChain nu_chain(WordCombination const &c, int n);

/// Pair complex in degrees <= n+1 together with its H_n.
struct NuContext
{
	PairComplex complex;
	HomologySummary h;

	NuContext(int n, int g);
	int n() const { return complex.n(); }
	int genus() const { return complex.genus(); }
};

/// Homology coordinates of nu_n of a combination (positivized first).
IntVector nu_eval(WordCombination const &c, NuContext const &ctx);
IntVector nu_eval(Word const &w, NuContext const &ctx);

struct SubsetSumResult
{
	bool zero = false;
	IntVector total;
	/// (subset bitmask over alpha indices, its evaluated word, coordinates)
	std::vector<std::tuple<unsigned, Word, IntVector>> contributions;
};

/// The word for a subset I: gamma followed by alpha_i for i in I, increasing.
Word subset_word(Word const &gamma, std::vector<Word> const &alphas, unsigned mask);

/// sum_I (-1)^{|I|} nu_n(gamma prod_{i in I} alpha_i) over I in [0,n].
/// Requires alphas.size() == n+1 (std::invalid_argument otherwise).
SubsetSumResult subset_sum_check(Word const &gamma, std::vector<Word> const &alphas, NuContext const &ctx);
SubsetSumResult subset_sum_check(Word const &gamma, std::vector<Word> const &alphas, int n, int g);

/// Formal path symbols: 0 is gamma, i+1 is alpha_i.
using PathSymbol = int;
std::string symbol_name(PathSymbol s);

/// Per output position: (path symbol, source coordinate sigma(p)).
using SymbolicMapTerm = std::vector<std::pair<PathSymbol, int>>;
using SymbolicChain = std::map<SymbolicMapTerm, std::int64_t>;

struct CancellationResult
{
	SymbolicChain sum;          ///< after cancellation; zero when the identity holds
	std::size_t raw_terms = 0;  ///< terms generated before cancellation
	std::size_t subsets = 0;
};

/// Sum over subsets I of [0,n] of (-1)^{|I|} times the shuffle expansion of
/// the path alpha_{i_1} * ... * alpha_{i_r} * gamma subdivided into |I|+1
/// pieces. Zero-length blocks drop out of the symbolic form.
CancellationResult cancellation_expand(int n);

/// Signed count sum_{I containing supp} (-1)^{|I|} for a profile over the
/// slots alpha_0..alpha_n (gamma excluded).
std::int64_t profile_coefficient(int n, std::vector<int> const &alpha_profile);

/// A point on a wedge of circles: generator (0 at the basepoint) and
/// parameter in (0,1). Endpoints are canonicalized to the basepoint.
struct WedgePoint
{
	int gen = 0;
	Rational t = 0;

	friend bool operator==(WedgePoint const &a, WedgePoint const &b) { return a.gen == b.gen && a.t == b.t; }
};

WedgePoint basepoint_or(int gen, Rational const &t);

/// Concatenation of the letters of w (each on a time interval of length 1/|w|)
/// evaluated at t in [0,1]. The empty word is the constant path.
WedgePoint evaluate_path(Word const &w, Rational const &t);

/// Realization of a product simplex at a point of Delta^n.
std::vector<WedgePoint> realize(ProductSimplex const &s, RationalPoint const &x);

struct OracleResult
{
	bool equal = true;
	std::size_t points = 0;
	std::optional<RationalPoint> witness;
};

/// Compares, at every point x, the concatenated path applied to
/// c_k(v, sigma)(x) (k = |w|, v the levels of parts) with the block form
/// (letter_b at x_{sigma(p)}) and with the realization of term_to_simplex.
/// Throws std::invalid_argument for a point outside Delta^n.
OracleResult sample_eval_oracle(ShuffleTerm const &t, std::vector<RationalPoint> const &points);
/// Constant path: both sides are the basepoint.
OracleResult sample_eval_oracle_constant(int n, std::vector<RationalPoint> const &points);

/// Random point of Delta^n with denominators up to max_den.
RationalPoint random_simplex_point(int n, std::mt19937_64 &rng, int max_den = 12);

/// Pointed map of wedges: map_spec[i] is the image of generator i+1, either
/// a generator of the target or 0 for the basepoint.
Word apply_wedge_map(std::vector<int> const &map_spec, Word const &w);
SimplexChain apply_wedge_map(std::vector<int> const &map_spec, SimplexChain const &c);

struct NaturalityResult
{
	bool equal = false;
	IntVector pushed;  ///< phi_* of nu_n(w)
	IntVector direct;  ///< nu_n(phi(w))
};

/// Throws std::invalid_argument if map_spec has the wrong size or an image
/// outside [0, g_tgt].
NaturalityResult naturality_check(std::vector<int> const &map_spec, Word const &w, NuContext const &src,
                                  NuContext const &tgt);
NaturalityResult naturality_check(std::vector<int> const &map_spec, Word const &w, int n, int g_src,
                                  int g_tgt);

} // namespace nutrans
