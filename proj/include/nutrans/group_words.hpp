#pragma once

// Words in the free group on g generators (the fundamental group of a wedge
// of g circles) and the truncated Magnus expansion
//   Z[F_g] / I^{n+1}  ~=  Z<X_1..X_g> / (degree > n),   x_i -> 1 + X_i,
// which gives the quotient by the (n+1)-st power of the augmentation ideal a
// free Z-basis: the noncommutative monomials of degree <= n.
//
// Word syntax: a..z are generators 1..26, A..Z their inverses, read left to
// right in order of traversal. Concatenation of words is the group product.

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace nutrans {

struct Letter
{
	int gen = 1;      ///< generator index in [1,26]
	int exponent = 1; ///< +1 or -1

	friend bool operator==(Letter const &, Letter const &) = default;
	friend auto operator<=>(Letter const &, Letter const &) = default;
};

class Word
{
public:
	Word() = default;
	explicit Word(std::vector<Letter> letters);

	/// Throws std::invalid_argument on characters outside [a-zA-Z].
	static Word parse(std::string_view text);
	static Word generator(int gen, int exponent = 1);

	std::vector<Letter> const &letters() const { return letters_; }
	std::size_t length() const { return letters_.size(); }
	bool empty() const { return letters_.empty(); }
	bool is_positive() const;
	bool is_reduced() const;
	/// Largest generator index used (0 for the empty word).
	int max_generator() const;

	Word inverse() const;
	std::string str() const;

	friend bool operator==(Word const &, Word const &) = default;
	friend auto operator<=>(Word const &, Word const &) = default;

private:
	std::vector<Letter> letters_;
};

/// Concatenation.
Word operator*(Word const &u, Word const &v);

Word reduce(Word const &w);

/// Finite integer combination of words.
using WordCombination = std::map<Word, std::int64_t>;

void add_term(WordCombination &c, Word const &w, std::int64_t coeff);
WordCombination combination_product(WordCombination const &a, WordCombination const &b);

/// Element of Z<X_1..X_g> truncated above degree n. Monomials are sequences
/// of generator indices.
class TruncatedTensor
{
public:
	using Monomial = std::vector<int>;
	using Coeffs = std::map<Monomial, std::int64_t>;

	TruncatedTensor(int degree, int rank) : degree_(degree), rank_(rank) {}
	static TruncatedTensor one(int degree, int rank);

	int degree() const { return degree_; }
	int rank() const { return rank_; }
	Coeffs const &coeffs() const { return coeffs_; }
	std::int64_t coefficient(Monomial const &m) const;

	/// Adds c * m; monomials of degree > n are discarded.
	void add(Monomial const &m, std::int64_t c);

	TruncatedTensor &operator+=(TruncatedTensor const &o);
	TruncatedTensor &operator-=(TruncatedTensor const &o);
	TruncatedTensor &operator*=(std::int64_t c);
	/// Truncated product.
	friend TruncatedTensor operator*(TruncatedTensor const &a, TruncatedTensor const &b);

	std::string str() const;

	friend bool operator==(TruncatedTensor const &, TruncatedTensor const &) = default;

private:
	void check_compatible(TruncatedTensor const &o) const;

	int degree_;
	int rank_;
	Coeffs coeffs_;
};

/// Magnus expansion x_i -> 1 + X_i, x_i^{-1} -> sum_{j=0}^n (-1)^j X_i^j.
/// Throws std::invalid_argument if the word uses a generator above rank.
TruncatedTensor magnus(Word const &w, int n, int rank);
TruncatedTensor magnus(WordCombination const &c, int n, int rank);

/// Rewrite w modulo Z[F] I^{n+1} as a combination of positive words, using
/// x^{-1} = sum_{j=0}^n (1-x)^j. The result has the same Magnus expansion in
/// degree <= n as w (checked; std::logic_error otherwise).
WordCombination positivize(Word const &w, int n);
WordCombination positivize(WordCombination const &c, int n);

/// Basis of monomials of degree <= n over g generators: by degree, then
/// lexicographic.
std::vector<TruncatedTensor::Monomial> monomial_basis(int n, int rank);

/// Coordinates of the class of c in Z[F_g] / Z[F_g] I^{n+1} over monomial_basis.
std::vector<std::int64_t> fn_basis_coords(WordCombination const &c, int n, int rank);

} // namespace nutrans
