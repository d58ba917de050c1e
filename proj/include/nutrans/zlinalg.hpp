#pragma once

// Exact integer linear algebra: Smith normal form and the homology of a
// chain complex of free Z-modules given by boundary matrices.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <tuple>
#include <vector>

namespace nutrans {

using Integer = mpz_class;
using IntVector = std::vector<Integer>;

class IntMatrix
{
public:
	IntMatrix() = default;
	IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
	/// Row-major nested initializer; all rows must have equal length.
	static IntMatrix from_rows(std::vector<std::vector<long>> const &rows);
	static IntMatrix identity(std::size_t n);

	std::size_t rows() const { return rows_; }
	std::size_t cols() const { return cols_; }

	Integer &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
	Integer const &operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

	IntVector column(std::size_t c) const;
	IntVector operator*(IntVector const &x) const;
	friend IntMatrix operator*(IntMatrix const &a, IntMatrix const &b);

	bool is_zero() const;
	bool is_diagonal() const;

	/// Nonzero entries as (row, col, value).
	std::vector<std::tuple<std::size_t, std::size_t, Integer>> triplets() const;

	std::string str() const;

	friend bool operator==(IntMatrix const &, IntMatrix const &) = default;

	void swap_rows(std::size_t a, std::size_t b);
	void swap_cols(std::size_t a, std::size_t b);
	/// row[dst] += f * row[src]
	void add_row_multiple(std::size_t dst, std::size_t src, Integer const &f);
	/// col[dst] += f * col[src]
	void add_col_multiple(std::size_t dst, std::size_t src, Integer const &f);
	void negate_row(std::size_t r);
	void negate_col(std::size_t c);

private:
	std::size_t rows_ = 0;
	std::size_t cols_ = 0;
	std::vector<Integer> data_;
};

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(IntMatrix const &a);

struct SmithForm
{
	IntMatrix U, D, V;    ///< U * A * V = D
	IntMatrix U_inv, V_inv;
	std::size_t rank = 0; ///< number of nonzero diagonal entries
	/// Nonzero diagonal entries d_1 | d_2 | ... (all positive).
	IntVector invariants() const;
};

/// Smith normal form by elementary row and column operations, choosing the
/// pivot of least absolute value. Deterministic for a fixed input.
SmithForm smith_normal_form(IntMatrix const &a);

/// H_d = ker(boundary_d) / im(boundary_{d+1}) together with a projection of
/// cycles onto coordinates. Coordinates are the free part first, then one
/// coordinate per torsion invariant reduced into [0, t).
struct HomologySummary
{
	int degree = 0;
	std::size_t rank = 0;
	IntVector torsion;

	std::size_t chain_rank = 0;
	std::size_t boundary_rank = 0; ///< rank of boundary_d
	IntMatrix cycle_coords;        ///< rows of V^{-1} of boundary_d beyond its rank
	IntMatrix reduce;              ///< U of the SNF of the boundaries in cycle coordinates
	IntVector reduce_diag;         ///< its nonzero diagonal entries
	/// One representative cycle per output coordinate.
	std::vector<IntVector> representatives;

	std::size_t coordinate_count() const { return rank + torsion.size(); }
	/// Coordinates of a cycle (caller guarantees boundary_d * z = 0).
	IntVector project(IntVector const &z) const;
};

/// Throws std::invalid_argument if boundary_d * boundary_{d+1} != 0 or the
/// shapes disagree.
HomologySummary homology(IntMatrix const &boundary_d, IntMatrix const &boundary_d1, int degree);

class PairComplex;

HomologySummary homology(PairComplex const &c, int d);

/// Throws std::invalid_argument if z is not a relative cycle.
IntVector cycle_coordinates(PairComplex const &c, int d, IntVector const &z);
IntVector cycle_coordinates(PairComplex const &c, HomologySummary const &h, IntVector const &z);

std::string to_string(IntVector const &v);

} // namespace nutrans
