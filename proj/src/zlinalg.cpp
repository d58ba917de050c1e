#include "nutrans/zlinalg.hpp"

#include "nutrans/simplicial_pair.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nutrans {

IntMatrix IntMatrix::from_rows(std::vector<std::vector<long>> const &rows)
{
	std::size_t const r = rows.size();
	std::size_t const c = r ? rows.front().size() : 0;
	IntMatrix m(r, c);
	for (std::size_t i = 0; i < r; ++i)
	{
		if (rows[i].size() != c)
			throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
		for (std::size_t j = 0; j < c; ++j)
			m(i, j) = rows[i][j];
	}
	return m;
}

IntMatrix IntMatrix::identity(std::size_t n)
{
	IntMatrix m(n, n);
	for (std::size_t i = 0; i < n; ++i)
		m(i, i) = 1;
	return m;
}

IntVector IntMatrix::column(std::size_t c) const
{
	IntVector v(rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		v[r] = (*this)(r, c);
	return v;
}

IntVector IntMatrix::operator*(IntVector const &x) const
{
	if (x.size() != cols_)
		throw std::invalid_argument("IntMatrix * vector: size mismatch");
	IntVector y(rows_);
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t c = 0; c < cols_; ++c)
			if (sgn((*this)(r, c)) != 0)
				y[r] += (*this)(r, c) * x[c];
	return y;
}

IntMatrix operator*(IntMatrix const &a, IntMatrix const &b)
{
	if (a.cols_ != b.rows_)
		throw std::invalid_argument("IntMatrix product: size mismatch");
	IntMatrix out(a.rows_, b.cols_);
	for (std::size_t i = 0; i < a.rows_; ++i)
		for (std::size_t k = 0; k < a.cols_; ++k)
		{
			auto const &aik = a(i, k);
			if (sgn(aik) == 0)
				continue;
			for (std::size_t j = 0; j < b.cols_; ++j)
				out(i, j) += aik * b(k, j);
		}
	return out;
}

bool IntMatrix::is_zero() const
{
	return std::all_of(data_.begin(), data_.end(), [](Integer const &x) { return sgn(x) == 0; });
}

bool IntMatrix::is_diagonal() const
{
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t c = 0; c < cols_; ++c)
			if (r != c && sgn((*this)(r, c)) != 0)
				return false;
	return true;
}

std::vector<std::tuple<std::size_t, std::size_t, Integer>> IntMatrix::triplets() const
{
	std::vector<std::tuple<std::size_t, std::size_t, Integer>> out;
	for (std::size_t r = 0; r < rows_; ++r)
		for (std::size_t c = 0; c < cols_; ++c)
			if (sgn((*this)(r, c)) != 0)
				out.emplace_back(r, c, (*this)(r, c));
	return out;
}

std::string IntMatrix::str() const
{
	std::ostringstream os;
	os << '[';
	for (std::size_t r = 0; r < rows_; ++r)
	{
		os << (r ? "," : "") << '[';
		for (std::size_t c = 0; c < cols_; ++c)
			os << (c ? "," : "") << (*this)(r, c).get_str();
		os << ']';
	}
	os << ']';
	return os.str();
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b)
{
	if (a == b)
		return;
	for (std::size_t c = 0; c < cols_; ++c)
		std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b)
{
	if (a == b)
		return;
	for (std::size_t r = 0; r < rows_; ++r)
		std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, Integer const &f)
{
	if (sgn(f) == 0)
		return;
	for (std::size_t c = 0; c < cols_; ++c)
		if (sgn((*this)(src, c)) != 0)
			(*this)(dst, c) += f * (*this)(src, c);
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, Integer const &f)
{
	if (sgn(f) == 0)
		return;
	for (std::size_t r = 0; r < rows_; ++r)
		if (sgn((*this)(r, src)) != 0)
			(*this)(r, dst) += f * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r)
{
	for (std::size_t c = 0; c < cols_; ++c)
		(*this)(r, c) = -(*this)(r, c);
}

void IntMatrix::negate_col(std::size_t c)
{
	for (std::size_t r = 0; r < rows_; ++r)
		(*this)(r, c) = -(*this)(r, c);
}

Integer determinant(IntMatrix const &a)
{
	if (a.rows() != a.cols())
		throw std::invalid_argument("determinant of a non-square matrix");
	std::size_t const n = a.rows();
	if (n == 0)
		return 1;
	IntMatrix m = a;
	Integer prev = 1;
	int sign = 1;
	for (std::size_t k = 0; k + 1 < n; ++k)
	{
		if (sgn(m(k, k)) == 0)
		{
			std::size_t p = k + 1;
			while (p < n && sgn(m(p, k)) == 0)
				++p;
			if (p == n)
				return 0;
			m.swap_rows(k, p);
			sign = -sign;
		}
		for (std::size_t i = k + 1; i < n; ++i)
			for (std::size_t j = k + 1; j < n; ++j)
			{
				Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
				mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
				m(i, j) = t;
			}
		prev = m(k, k);
	}
	return sign * m(n - 1, n - 1);
}

IntVector SmithForm::invariants() const
{
	IntVector out;
	for (std::size_t i = 0; i < rank; ++i)
		out.push_back(D(i, i));
	return out;
}

namespace {

// Elementary operations applied to the working matrix and mirrored in the
// transforms: U accumulates row operations (U_inv their inverses as column
// operations), V accumulates column operations (V_inv as row operations).
struct SmithWork
{
	IntMatrix A, U, V, U_inv, V_inv;

	void swap_rows(std::size_t a, std::size_t b)
	{
		A.swap_rows(a, b);
		U.swap_rows(a, b);
		U_inv.swap_cols(a, b);
	}
	void swap_cols(std::size_t a, std::size_t b)
	{
		A.swap_cols(a, b);
		V.swap_cols(a, b);
		V_inv.swap_rows(a, b);
	}
	void add_row(std::size_t dst, std::size_t src, Integer const &f)
	{
		A.add_row_multiple(dst, src, f);
		U.add_row_multiple(dst, src, f);
		U_inv.add_col_multiple(src, dst, -f);
	}
	void add_col(std::size_t dst, std::size_t src, Integer const &f)
	{
		A.add_col_multiple(dst, src, f);
		V.add_col_multiple(dst, src, f);
		V_inv.add_row_multiple(src, dst, -f);
	}
	void negate_row(std::size_t r)
	{
		A.negate_row(r);
		U.negate_row(r);
		U_inv.negate_col(r);
	}
};

bool abs_less(Integer const &a, Integer const &b) { return mpz_cmpabs(a.get_mpz_t(), b.get_mpz_t()) < 0; }

} // namespace

SmithForm smith_normal_form(IntMatrix const &a)
{
	std::size_t const m = a.rows(), n = a.cols();
	SmithWork w{a, IntMatrix::identity(m), IntMatrix::identity(n), IntMatrix::identity(m),
	            IntMatrix::identity(n)};
	std::size_t t = 0;
	for (; t < std::min(m, n); ++t)
	{
		// pivot of least absolute value in the trailing block
		bool found = false;
		std::size_t pr = t, pc = t;
		for (std::size_t r = t; r < m; ++r)
			for (std::size_t c = t; c < n; ++c)
				if (sgn(w.A(r, c)) != 0 && (!found || abs_less(w.A(r, c), w.A(pr, pc))))
				{
					found = true;
					pr = r;
					pc = c;
				}
		if (!found)
			break;
		w.swap_rows(t, pr);
		w.swap_cols(t, pc);

		for (;;)
		{
			bool clean = true;
			for (std::size_t r = t + 1; r < m; ++r)
				if (sgn(w.A(r, t)) != 0)
				{
					Integer q = w.A(r, t) / w.A(t, t);
					w.add_row(r, t, -q);
					if (sgn(w.A(r, t)) != 0)
						clean = false;
				}
			for (std::size_t c = t + 1; c < n; ++c)
				if (sgn(w.A(t, c)) != 0)
				{
					Integer q = w.A(t, c) / w.A(t, t);
					w.add_col(c, t, -q);
					if (sgn(w.A(t, c)) != 0)
						clean = false;
				}
			if (!clean)
			{
				// a remainder smaller than the pivot survived; move it to (t,t)
				std::size_t br = t, bc = t;
				for (std::size_t r = t + 1; r < m; ++r)
					if (sgn(w.A(r, t)) != 0 && abs_less(w.A(r, t), w.A(br, bc)))
					{
						br = r;
						bc = t;
					}
				for (std::size_t c = t + 1; c < n; ++c)
					if (sgn(w.A(t, c)) != 0 && abs_less(w.A(t, c), w.A(br, bc)))
					{
						br = t;
						bc = c;
					}
				w.swap_rows(t, br);
				w.swap_cols(t, bc);
				continue;
			}
			// divisibility: the pivot must divide the whole trailing block
			bool divides = true;
			for (std::size_t r = t + 1; r < m && divides; ++r)
				for (std::size_t c = t + 1; c < n; ++c)
					if (!mpz_divisible_p(w.A(r, c).get_mpz_t(), w.A(t, t).get_mpz_t()))
					{
						w.add_row(t, r, 1);
						divides = false;
						break;
					}
			if (divides)
				break;
		}
		if (sgn(w.A(t, t)) < 0)
			w.negate_row(t);
	}
	SmithForm out;
	out.rank = t;
	out.D = std::move(w.A);
	out.U = std::move(w.U);
	out.V = std::move(w.V);
	out.U_inv = std::move(w.U_inv);
	out.V_inv = std::move(w.V_inv);
	return out;
}

IntVector HomologySummary::project(IntVector const &z) const
{
	if (z.size() != chain_rank)
		throw std::invalid_argument("HomologySummary::project: vector of wrong size");
	auto const y = reduce * (cycle_coords * z);
	IntVector out;
	for (std::size_t i = reduce_diag.size(); i < y.size(); ++i)
		out.push_back(y[i]);
	for (std::size_t i = 0; i < reduce_diag.size(); ++i)
		if (reduce_diag[i] > 1)
		{
			Integer r;
			mpz_fdiv_r(r.get_mpz_t(), y[i].get_mpz_t(), reduce_diag[i].get_mpz_t());
			out.push_back(r);
		}
	return out;
}

HomologySummary homology(IntMatrix const &boundary_d, IntMatrix const &boundary_d1, int degree)
{
	std::size_t const chain_rank = boundary_d.cols();
	if (boundary_d1.rows() != chain_rank)
		throw std::invalid_argument("homology: boundary matrices do not compose");
	if (!(boundary_d * boundary_d1).is_zero())
		throw std::invalid_argument("homology: not a chain complex (boundary squared is nonzero)");

	HomologySummary h;
	h.degree = degree;
	h.chain_rank = chain_rank;

	auto const s1 = smith_normal_form(boundary_d);
	h.boundary_rank = s1.rank;
	std::size_t const kdim = chain_rank - s1.rank;
	h.cycle_coords = IntMatrix(kdim, chain_rank);
	IntMatrix kernel(chain_rank, kdim);
	for (std::size_t i = 0; i < kdim; ++i)
		for (std::size_t c = 0; c < chain_rank; ++c)
		{
			h.cycle_coords(i, c) = s1.V_inv(s1.rank + i, c);
			kernel(c, i) = s1.V(c, s1.rank + i);
		}

	auto const s2 = smith_normal_form(h.cycle_coords * boundary_d1);
	h.reduce = s2.U;
	h.reduce_diag = s2.invariants();
	h.rank = kdim - s2.rank;
	for (auto const &d : h.reduce_diag)
		if (d > 1)
			h.torsion.push_back(d);

	auto const reps = kernel * s2.U_inv;
	for (std::size_t i = s2.rank; i < kdim; ++i)
		h.representatives.push_back(reps.column(i));
	for (std::size_t i = 0; i < s2.rank; ++i)
		if (h.reduce_diag[i] > 1)
			h.representatives.push_back(reps.column(i));
	return h;
}

HomologySummary homology(PairComplex const &c, int d)
{
	if (d < 0 || d > c.d_max())
		throw std::out_of_range("homology: degree outside the built complex");
	return homology(c.boundary(d), c.boundary(d + 1), d);
}

IntVector cycle_coordinates(PairComplex const &c, HomologySummary const &h, IntVector const &z)
{
	if (z.size() != c.rank(h.degree))
		throw std::invalid_argument("cycle_coordinates: vector of wrong size");
	auto const bz = c.boundary(h.degree) * z;
	if (std::any_of(bz.begin(), bz.end(), [](Integer const &x) { return sgn(x) != 0; }))
		throw std::invalid_argument("cycle_coordinates: not a relative cycle");
	return h.project(z);
}

IntVector cycle_coordinates(PairComplex const &c, int d, IntVector const &z)
{
	return cycle_coordinates(c, homology(c, d), z);
}

std::string to_string(IntVector const &v)
{
	std::ostringstream os;
	os << '(';
	for (std::size_t i = 0; i < v.size(); ++i)
		os << (i ? "," : "") << v[i].get_str();
	os << ')';
	return os.str();
}

} // namespace nutrans
