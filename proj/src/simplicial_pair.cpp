#include "nutrans/simplicial_pair.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nutrans {

ProductSimplex::ProductSimplex(int dim, std::vector<WedgeSimplex> components)
    : dim_(dim), components_(std::move(components))
{
	if (dim < 0)
		throw std::invalid_argument("ProductSimplex: negative dimension");
	for (auto const &c : components_)
	{
		if (c.is_constant() ? c.jump != 0 : (c.gen < 0 || c.jump < 1 || c.jump > dim))
			throw std::invalid_argument("ProductSimplex: jump outside [1,dim]");
	}
}

bool ProductSimplex::is_degenerate_at(int slot) const
{
	if (slot < 0 || slot >= dim_)
		throw std::out_of_range("ProductSimplex::is_degenerate_at: slot out of range");
	return std::none_of(components_.begin(), components_.end(),
	                    [slot](WedgeSimplex const &c) { return !c.is_constant() && c.jump == slot + 1; });
}

bool ProductSimplex::is_degenerate() const
{
	for (int s = 0; s < dim_; ++s)
		if (is_degenerate_at(s))
			return true;
	return false;
}

WedgeSimplex wedge_face(WedgeSimplex s, int d, int i)
{
	if (d < 1 || i < 0 || i > d)
		throw std::out_of_range("wedge_face: face index out of range");
	if (s.is_constant())
		return s;
	int const j = i < s.jump ? s.jump - 1 : s.jump;
	if (j == 0 || j == d)
		return WedgeSimplex::constant();
	return WedgeSimplex::edge(s.gen, j);
}

ProductSimplex ProductSimplex::face(int i) const
{
	if (dim_ < 1 || i < 0 || i > dim_)
		throw std::out_of_range("ProductSimplex::face: index out of range");
	std::vector<WedgeSimplex> out;
	out.reserve(components_.size());
	for (auto const &c : components_)
		out.push_back(wedge_face(c, dim_, i));
	return ProductSimplex(dim_ - 1, std::move(out));
}

std::string ProductSimplex::str() const
{
	std::string s = "(";
	for (std::size_t p = 0; p < components_.size(); ++p)
	{
		if (p)
			s += ',';
		auto const &c = components_[p];
		if (c.is_constant())
			s += '*';
		else
		{
			s += static_cast<char>('a' + c.gen - 1);
			s += std::to_string(c.jump);
		}
	}
	return s + ')';
}

ProductSimplex ProductSimplex::parse(int dim, std::vector<std::string> const &components)
{
	std::vector<WedgeSimplex> out;
	for (auto const &text : components)
	{
		if (text == "*")
		{
			out.push_back(WedgeSimplex::constant());
			continue;
		}
		if (text.size() < 2 || text[0] < 'a' || text[0] > 'z' ||
		    !std::all_of(text.begin() + 1, text.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
			throw std::invalid_argument("ProductSimplex::parse: bad component '" + text + "'");
		out.push_back(WedgeSimplex::edge(text[0] - 'a' + 1, std::stoi(text.substr(1))));
	}
	return ProductSimplex(dim, std::move(out));
}

std::strong_ordering operator<=>(ProductSimplex const &a, ProductSimplex const &b)
{
	if (auto c = a.dim_ <=> b.dim_; c != 0)
		return c;
	if (auto c = a.components_.size() <=> b.components_.size(); c != 0)
		return c;
	for (std::size_t p = 0; p < a.components_.size(); ++p)
		if (auto c = a.components_[p].gen <=> b.components_[p].gen; c != 0)
			return c;
	// jumps descending
	for (std::size_t p = 0; p < a.components_.size(); ++p)
		if (auto c = b.components_[p].jump <=> a.components_[p].jump; c != 0)
			return c;
	return std::strong_ordering::equal;
}

bool in_Y(ProductSimplex const &s)
{
	auto const &c = s.components();
	if (c.empty())
		return false;
	if (c.front().is_constant() || c.back().is_constant())
		return true;
	for (std::size_t i = 0; i + 1 < c.size(); ++i)
		if (c[i] == c[i + 1])
			return true;
	return false;
}

std::vector<ProductSimplex> enumerate_nondegenerate(int n, int g, int d)
{
	if (n < 1 || g < 0 || d < 0)
		throw std::invalid_argument("enumerate_nondegenerate: bad arguments");
	std::vector<ProductSimplex> out;
	if (d > n)
		return out;
	std::vector<WedgeSimplex> choices{WedgeSimplex::constant()};
	for (int gen = 1; gen <= g; ++gen)
		for (int j = 1; j <= d; ++j)
			choices.push_back(WedgeSimplex::edge(gen, j));

	std::vector<std::size_t> idx(static_cast<std::size_t>(n), 0);
	for (;;)
	{
		std::vector<WedgeSimplex> comps;
		for (auto i : idx)
			comps.push_back(choices[i]);
		ProductSimplex s(d, std::move(comps));
		if (!s.is_degenerate())
			out.push_back(std::move(s));
		std::size_t p = 0;
		while (p < idx.size() && ++idx[p] == choices.size())
			idx[p++] = 0;
		if (p == idx.size())
			break;
	}
	std::sort(out.begin(), out.end());
	return out;
}

std::vector<ProductSimplex> enumerate_basis(int n, int g, int d)
{
	auto all = enumerate_nondegenerate(n, g, d);
	std::erase_if(all, [](ProductSimplex const &s) { return in_Y(s); });
	return all;
}

void add_term(SimplexChain &c, ProductSimplex const &s, std::int64_t coeff)
{
	if (coeff == 0)
		return;
	auto [it, inserted] = c.try_emplace(s, coeff);
	if (!inserted && (it->second += coeff) == 0)
		c.erase(it);
}

SimplexChain relative_part(SimplexChain const &c)
{
	SimplexChain out;
	for (auto const &[s, x] : c)
		if (!s.is_degenerate() && !in_Y(s))
			add_term(out, s, x);
	return out;
}

SimplexChain relative_boundary(SimplexChain const &c)
{
	SimplexChain out;
	for (auto const &[s, x] : c)
	{
		if (s.dim() == 0)
			continue;
		for (int i = 0; i <= s.dim(); ++i)
		{
			auto f = s.face(i);
			if (!f.is_degenerate() && !in_Y(f))
				add_term(out, f, i % 2 == 0 ? x : -x);
		}
	}
	return out;
}

PairComplex::PairComplex(int n, int g, int d_max) : n_(n), g_(g), d_max_(d_max)
{
	if (n < 1 || g < 0 || d_max < 0)
		throw std::invalid_argument("PairComplex: bad arguments");
	for (int d = 0; d <= d_max; ++d)
		bases_.push_back(enumerate_basis(n, g, d));
	build_boundaries();
}

void PairComplex::build_boundaries()
{
	index_.assign(bases_.size(), {});
	for (std::size_t d = 0; d < bases_.size(); ++d)
		for (std::size_t i = 0; i < bases_[d].size(); ++i)
			index_[d].emplace(bases_[d][i], static_cast<int>(i));

	boundaries_.clear();
	for (int d = 0; d <= d_max_ + 1; ++d)
	{
		IntMatrix m(rank(d - 1), rank(d));
		auto const &b = basis(d);
		for (std::size_t c = 0; c < b.size(); ++c)
			for (auto const &[f, x] : relative_boundary(SimplexChain{{b[c], 1}}))
			{
				int r = index_of(f);
				if (r < 0)
					throw std::logic_error("PairComplex: face missing from basis: " + f.str());
				m(static_cast<std::size_t>(r), c) = x;
			}
		boundaries_.push_back(std::move(m));
	}
}

std::vector<ProductSimplex> const &PairComplex::basis(int d) const
{
	static std::vector<ProductSimplex> const empty;
	if (d < 0 || d > d_max_)
		return empty;
	return bases_[static_cast<std::size_t>(d)];
}

int PairComplex::index_of(ProductSimplex const &s) const
{
	int const d = s.dim();
	if (d < 0 || d > d_max_)
		return -1;
	auto const &idx = index_[static_cast<std::size_t>(d)];
	auto it = idx.find(s);
	return it == idx.end() ? -1 : it->second;
}

IntMatrix const &PairComplex::boundary(int d) const
{
	if (d < 0 || d > d_max_ + 1)
		throw std::out_of_range("PairComplex::boundary: degree out of range");
	return boundaries_[static_cast<std::size_t>(d)];
}

IntVector PairComplex::to_vector(SimplexChain const &c, int d) const
{
	IntVector v(rank(d));
	for (auto const &[s, x] : c)
	{
		if (s.dim() != d)
			throw std::invalid_argument("PairComplex::to_vector: simplex of wrong dimension");
		if (s.is_degenerate() || in_Y(s))
			continue;
		int i = index_of(s);
		if (i < 0)
			throw std::invalid_argument("PairComplex::to_vector: simplex outside the complex: " + s.str());
		v[static_cast<std::size_t>(i)] += x;
	}
	return v;
}

SimplexChain PairComplex::to_chain(IntVector const &v, int d) const
{
	if (v.size() != rank(d))
		throw std::invalid_argument("PairComplex::to_chain: vector of wrong size");
	SimplexChain out;
	for (std::size_t i = 0; i < v.size(); ++i)
		if (sgn(v[i]) != 0)
		{
			if (!v[i].fits_slong_p())
				throw std::overflow_error("PairComplex::to_chain: coefficient too large");
			add_term(out, basis(d)[i], v[i].get_si());
		}
	return out;
}

nlohmann::json PairComplex::to_json() const
{
	nlohmann::json dims = nlohmann::json::array();
	for (int d = 0; d <= d_max_; ++d)
	{
		nlohmann::json basis_j = nlohmann::json::array();
		for (auto const &s : basis(d))
		{
			std::vector<std::string> comps;
			auto const text = s.str();
			// strip parentheses, split on commas
			std::stringstream ss(text.substr(1, text.size() - 2));
			for (std::string part; std::getline(ss, part, ',');)
				comps.push_back(part);
			basis_j.push_back(comps);
		}
		nlohmann::json trip = nlohmann::json::array();
		for (auto const &[r, c, x] : boundary(d).triplets())
			trip.push_back({r, c, x.get_si()});
		dims.push_back({{"d", d}, {"basis", basis_j}, {"boundary", trip}});
	}
	return {{"n", n_}, {"g", g_}, {"d_max", d_max_}, {"dims", dims}};
}

PairComplex PairComplex::from_json(nlohmann::json const &j)
{
	PairComplex c;
	c.n_ = j.at("n").get<int>();
	c.g_ = j.at("g").get<int>();
	c.d_max_ = j.at("d_max").get<int>();
	c.bases_.assign(static_cast<std::size_t>(c.d_max_ + 1), {});
	for (auto const &dj : j.at("dims"))
	{
		int const d = dj.at("d").get<int>();
		if (d < 0 || d > c.d_max_)
			throw std::invalid_argument("PairComplex::from_json: degree out of range");
		for (auto const &sj : dj.at("basis"))
		{
			auto s = ProductSimplex::parse(d, sj.get<std::vector<std::string>>());
			if (s.factors() != c.n_)
				throw std::invalid_argument("PairComplex::from_json: wrong number of factors");
			c.bases_[static_cast<std::size_t>(d)].push_back(std::move(s));
		}
	}
	c.build_boundaries();
	// the stored matrices must agree with the recomputed ones
	for (auto const &dj : j.at("dims"))
	{
		int const d = dj.at("d").get<int>();
		IntMatrix m(c.rank(d - 1), c.rank(d));
		for (auto const &t : dj.at("boundary"))
		{
			if (t.at(0).get<std::size_t>() >= m.rows() || t.at(1).get<std::size_t>() >= m.cols())
				throw std::invalid_argument("PairComplex::from_json: triplet out of range");
			m(t.at(0).get<std::size_t>(), t.at(1).get<std::size_t>()) = t.at(2).get<long>();
		}
		if (!(m == c.boundary(d)))
			throw std::invalid_argument("PairComplex::from_json: boundary does not match basis");
	}
	return c;
}

} // namespace nutrans
