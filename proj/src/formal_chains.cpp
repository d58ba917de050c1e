#include "nutrans/formal_chains.hpp"

#include <sstream>
#include <stdexcept>

namespace nutrans {

FormalChain FormalChain::single(AffineSimplexMap m, Coeff c)
{
	FormalChain out(m.domain_dim(), m.codomain_dim());
	out.add(m, c);
	return out;
}

FormalChain::Coeff FormalChain::coefficient(AffineSimplexMap const &m) const
{
	auto it = terms_.find(m);
	return it == terms_.end() ? 0 : it->second;
}

void FormalChain::add(AffineSimplexMap const &m, Coeff c)
{
	if (m.domain_dim() != q_ || m.codomain_dim() != p_)
		throw std::invalid_argument("FormalChain::add: generator of wrong shape");
	if (c == 0)
		return;
	auto [it, inserted] = terms_.try_emplace(m, c);
	if (!inserted && (it->second += c) == 0)
		terms_.erase(it);
}

void FormalChain::check_compatible(FormalChain const &other) const
{
	if (other.q_ != q_ || other.p_ != p_)
		throw std::invalid_argument("FormalChain: adding chains of different shape");
}

FormalChain &FormalChain::operator+=(FormalChain const &other)
{
	check_compatible(other);
	for (auto const &[m, c] : other.terms_)
		add(m, c);
	return *this;
}

FormalChain &FormalChain::operator-=(FormalChain const &other)
{
	check_compatible(other);
	for (auto const &[m, c] : other.terms_)
		add(m, -c);
	return *this;
}

FormalChain FormalChain::operator-() const
{
	FormalChain out = *this;
	for (auto &[m, c] : out.terms_)
		c = -c;
	return out;
}

FormalChain &FormalChain::operator*=(Coeff c)
{
	if (c == 0)
		terms_.clear();
	for (auto &[m, x] : terms_)
		x *= c;
	return *this;
}

FormalChain::Coeff FormalChain::augmentation() const
{
	Coeff s = 0;
	for (auto const &[m, c] : terms_)
		s += c;
	return s;
}

std::string FormalChain::str() const
{
	if (terms_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (auto const &[m, c] : terms_)
	{
		os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
		if (c != 1 && c != -1)
			os << (c < 0 ? -c : c) << '*';
		os << m.str();
		first = false;
	}
	return os.str();
}

FormalChain operator+(FormalChain a, FormalChain const &b) { return a += b; }
FormalChain operator-(FormalChain a, FormalChain const &b) { return a -= b; }
FormalChain operator*(FormalChain::Coeff c, FormalChain a) { return a *= c; }

FormalChain identity_chain(int n) { return FormalChain::single(identity_map(n)); }

FormalChain boundary_chain(int n)
{
	if (n < 1)
		throw std::invalid_argument("boundary_chain needs n >= 1");
	FormalChain out(n - 1, n);
	for (int i = 0; i <= n; ++i)
		out.add(face_map(n, i), i % 2 == 0 ? 1 : -1);
	return out;
}

FormalChain div_chain(int n, int k)
{
	FormalChain out(n, n);
	for (auto const &e : enumerate_ens(n, k))
		out.add(subdivision_piece(e.v, e.sigma, k), epsilon(e.sigma));
	return out;
}

FormalChain chain_compose(FormalChain const &g, FormalChain const &f)
{
	if (f.codomain_dim() != g.domain_dim())
		throw std::invalid_argument("chain_compose: dimension mismatch");
	FormalChain out(f.domain_dim(), g.codomain_dim());
	for (auto const &[gm, gc] : g.terms())
		for (auto const &[fm, fc] : f.terms())
			out.add(compose(gm, fm), gc * fc);
	return out;
}

FormalChain cone_homotopy(FormalChain const &x, int apex_index)
{
	int const p = x.codomain_dim();
	if (apex_index < 0 || apex_index > p)
		throw std::out_of_range("cone_homotopy: apex out of range");
	auto const apex = vertex_E(p, apex_index);
	FormalChain out(x.domain_dim() + 1, p);
	for (auto const &[m, c] : x.terms())
	{
		auto verts = m.vertices();
		verts.push_back(apex);
		out.add(AffineSimplexMap(m.domain_dim() + 1, p, std::move(verts)), c);
	}
	return out;
}

std::vector<FormalChain> build_homotopy_L(int k, int n_max, int apex_index)
{
	if (k < 1)
		throw std::invalid_argument("build_homotopy_L needs k >= 1");
	std::vector<FormalChain> L;
	L.emplace_back(1, 0); // L^k_{1,0} = 0
	for (int m = 1; m <= n_max; ++m)
	{
		auto target = identity_chain(m) - div_chain(m, k);
		target -= chain_compose(boundary_chain(m), L.back());
		L.push_back(cone_homotopy(target, apex_index));
	}
	return L;
}

bool homotopy_identity_holds(std::vector<FormalChain> const &L, int k, int m)
{
	if (m < 0 || static_cast<std::size_t>(m) >= L.size())
		throw std::out_of_range("homotopy_identity_holds: degree not built");
	auto const lhs = identity_chain(m) - div_chain(m, k);
	auto rhs = chain_compose(L[static_cast<std::size_t>(m)], boundary_chain(m + 1));
	if (m >= 1)
		rhs += chain_compose(boundary_chain(m), L[static_cast<std::size_t>(m - 1)]);
	return lhs == rhs;
}

FormalChain div_after_boundary_by_points(int n, int k)
{
	FormalChain out(n - 1, n);
	for (auto const &e : enumerate_ens(n, k))
		for (int i = 0; i <= n; ++i)
		{
			auto const sm = f_map(InvolPoint{e.v, e.sigma, i}, k);
			out.add(sm.map, sm.sign);
		}
	return out;
}

FormalChain involution_paired_sum(int n, int k)
{
	FormalChain out(n - 1, n);
	for (auto const &e : enumerate_ens(n, k))
		for (int i = 0; i <= n; ++i)
		{
			InvolPoint const x{e.v, e.sigma, i};
			if (!in_ens(invol(x), k))
				continue;
			auto const sm = f_map(x, k);
			out.add(sm.map, sm.sign);
		}
	return out;
}

} // namespace nutrans
