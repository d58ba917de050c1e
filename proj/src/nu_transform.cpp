#include "nutrans/nu_transform.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace nutrans {

std::vector<ShuffleTerm> shuffle_expand(Word const &w, int n)
{
	if (n < 1)
		throw std::invalid_argument("shuffle_expand: n must be positive");
	if (w.empty() || !w.is_positive())
		throw std::invalid_argument("shuffle_expand: word must be positive and nonempty");
	std::vector<ShuffleTerm> out;
	for (auto const &c : compositions(n, static_cast<int>(w.length())))
		for (auto const &s : enumerate_shuffles(c))
			out.push_back({w, c, s, epsilon(s)});
	return out;
}

ProductSimplex term_to_simplex(ShuffleTerm const &t)
{
	int const n = t.parts.total();
	if (t.sigma.degree() != n || t.parts.length() != static_cast<int>(t.word.length()) ||
	    !is_shuffle(t.parts, t.sigma))
		throw std::invalid_argument("term_to_simplex: malformed term");
	std::vector<WedgeSimplex> comps;
	for (int p = 1; p <= n; ++p)
	{
		auto const &letter = t.word.letters()[static_cast<std::size_t>(t.parts.block_of(p))];
		if (letter.exponent != 1)
			throw std::invalid_argument("term_to_simplex: inverse letter");
		comps.push_back(WedgeSimplex::edge(letter.gen, n - t.sigma(p) + 1));
	}
	return ProductSimplex(n, std::move(comps));
}

SimplexChain nu_chain(WordCombination const &c, int n)
{
	SimplexChain out;
	for (auto const &[w, coeff] : c)
	{
		if (w.empty())
			continue;
		for (auto const &t : shuffle_expand(w, n))
			add_term(out, term_to_simplex(t), coeff * t.sign);
	}
	return relative_part(out);
}

NuContext::NuContext(int n, int g) : complex(n, g, n + 1), h(homology(complex, n)) {}

IntVector nu_eval(WordCombination const &c, NuContext const &ctx)
{
	auto const chain = nu_chain(positivize(c, ctx.n()), ctx.n());
	return cycle_coordinates(ctx.complex, ctx.h, ctx.complex.to_vector(chain, ctx.n()));
}

IntVector nu_eval(Word const &w, NuContext const &ctx) { return nu_eval(WordCombination{{w, 1}}, ctx); }

Word subset_word(Word const &gamma, std::vector<Word> const &alphas, unsigned mask)
{
	Word out = gamma;
	for (std::size_t i = 0; i < alphas.size(); ++i)
		if (mask & (1u << i))
			out = out * alphas[i];
	return out;
}

SubsetSumResult subset_sum_check(Word const &gamma, std::vector<Word> const &alphas, NuContext const &ctx)
{
	int const n = ctx.n();
	if (alphas.size() != static_cast<std::size_t>(n + 1))
		throw std::invalid_argument("subset_sum_check: need n+1 alpha words");
	SubsetSumResult r;
	r.total.assign(ctx.h.coordinate_count(), 0);
	for (unsigned mask = 0; mask < (1u << (n + 1)); ++mask)
	{
		auto w = subset_word(gamma, alphas, mask);
		auto coords = nu_eval(w, ctx);
		bool const odd = std::popcount(mask) % 2 != 0;
		for (std::size_t i = 0; i < coords.size(); ++i)
			r.total[i] += odd ? -coords[i] : coords[i];
		r.contributions.emplace_back(mask, std::move(w), std::move(coords));
	}
	// torsion coordinates live in Z/t
	for (std::size_t i = 0; i < ctx.h.torsion.size(); ++i)
	{
		auto &x = r.total[ctx.h.rank + i];
		mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), ctx.h.torsion[i].get_mpz_t());
	}
	r.zero = std::all_of(r.total.begin(), r.total.end(), [](Integer const &x) { return sgn(x) == 0; });
	return r;
}

SubsetSumResult subset_sum_check(Word const &gamma, std::vector<Word> const &alphas, int n, int g)
{
	return subset_sum_check(gamma, alphas, NuContext(n, g));
}

std::string symbol_name(PathSymbol s)
{
	return s == 0 ? "gamma" : "alpha" + std::to_string(s - 1);
}

CancellationResult cancellation_expand(int n)
{
	if (n < 1)
		throw std::invalid_argument("cancellation_expand: n must be positive");
	CancellationResult r;
	for (unsigned mask = 0; mask < (1u << (n + 1)); ++mask)
	{
		std::vector<PathSymbol> symbols;
		for (int i = 0; i <= n; ++i)
			if (mask & (1u << i))
				symbols.push_back(i + 1);
		symbols.push_back(0);
		std::int64_t const sign = std::popcount(mask) % 2 == 0 ? 1 : -1;
		++r.subsets;
		for (auto const &c : compositions(n, static_cast<int>(symbols.size())))
			for (auto const &s : enumerate_shuffles(c))
			{
				SymbolicMapTerm term;
				for (int p = 1; p <= n; ++p)
					term.emplace_back(symbols[static_cast<std::size_t>(c.block_of(p))], s(p));
				++r.raw_terms;
				auto [it, inserted] = r.sum.try_emplace(term, sign * epsilon(s));
				if (!inserted && (it->second += sign * epsilon(s)) == 0)
					r.sum.erase(it);
			}
	}
	return r;
}

std::int64_t profile_coefficient(int n, std::vector<int> const &alpha_profile)
{
	if (alpha_profile.size() != static_cast<std::size_t>(n + 1))
		throw std::invalid_argument("profile_coefficient: need n+1 entries");
	unsigned supp = 0;
	for (int i = 0; i <= n; ++i)
		if (alpha_profile[static_cast<std::size_t>(i)] > 0)
			supp |= 1u << i;
	std::int64_t total = 0;
	for (unsigned mask = 0; mask < (1u << (n + 1)); ++mask)
		if ((mask & supp) == supp)
			total += std::popcount(mask) % 2 == 0 ? 1 : -1;
	return total;
}

WedgePoint basepoint_or(int gen, Rational const &t)
{
	if (gen == 0 || t == 0 || t == 1)
		return {};
	return {gen, t};
}

WedgePoint evaluate_path(Word const &w, Rational const &t)
{
	if (t < 0 || t > 1)
		throw std::invalid_argument("evaluate_path: parameter outside [0,1]");
	if (w.empty() || t == 0)
		return {};
	auto const k = static_cast<long>(w.length());
	Rational const kt = k * t;
	Integer seg;
	mpz_cdiv_q(seg.get_mpz_t(), kt.get_num_mpz_t(), kt.get_den_mpz_t());
	Rational const local = kt - Rational(seg - 1);
	auto const &letter = w.letters()[seg.get_ui() - 1];
	return basepoint_or(letter.gen, letter.exponent == 1 ? local : Rational(1 - local));
}

std::vector<WedgePoint> realize(ProductSimplex const &s, RationalPoint const &x)
{
	int const q = s.dim();
	if (x.size() != static_cast<std::size_t>(q))
		throw std::invalid_argument("realize: point of wrong dimension");
	auto coord = [&](int m) -> Rational {
		if (m <= 0)
			return 0;
		if (m > q)
			return 1;
		return x[static_cast<std::size_t>(m - 1)];
	};
	std::vector<WedgePoint> out;
	for (auto const &c : s.components())
	{
		if (c.is_constant())
		{
			out.push_back({});
			continue;
		}
		// the edge sends vertices E_i with i >= jump to 1
		Rational param = 0;
		for (int i = c.jump; i <= q; ++i)
			param += coord(q - i + 1) - coord(q - i);
		out.push_back(basepoint_or(c.gen, param));
	}
	return out;
}

namespace {

void check_point(RationalPoint const &x, int n)
{
	if (x.size() != static_cast<std::size_t>(n) || !in_standard_simplex(x))
		throw std::invalid_argument("sample_eval_oracle: point outside the standard simplex");
}

} // namespace

OracleResult sample_eval_oracle(ShuffleTerm const &t, std::vector<RationalPoint> const &points)
{
	int const n = t.parts.total();
	int const k = static_cast<int>(t.word.length());
	auto const piece = subdivision_piece(composition_levels(t.parts), t.sigma, k);
	auto const simplex = term_to_simplex(t);
	OracleResult r;
	for (auto const &x : points)
	{
		check_point(x, n);
		++r.points;
		auto const y = piece(x);
		std::vector<WedgePoint> lhs, blocks;
		for (int p = 1; p <= n; ++p)
		{
			lhs.push_back(evaluate_path(t.word, y[static_cast<std::size_t>(p - 1)]));
			auto const &letter = t.word.letters()[static_cast<std::size_t>(t.parts.block_of(p))];
			blocks.push_back(basepoint_or(letter.gen, x[static_cast<std::size_t>(t.sigma(p) - 1)]));
		}
		if (lhs != blocks || realize(simplex, x) != blocks)
		{
			r.equal = false;
			if (!r.witness)
				r.witness = x;
		}
	}
	return r;
}

OracleResult sample_eval_oracle_constant(int n, std::vector<RationalPoint> const &points)
{
	OracleResult r;
	for (auto const &x : points)
	{
		check_point(x, n);
		++r.points;
		for (auto const &xi : x)
			if (!(evaluate_path(Word{}, xi) == WedgePoint{}))
			{
				r.equal = false;
				if (!r.witness)
					r.witness = x;
			}
	}
	return r;
}

RationalPoint random_simplex_point(int n, std::mt19937_64 &rng, int max_den)
{
	std::uniform_int_distribution<int> den_dist(1, max_den);
	RationalPoint x;
	for (int i = 0; i < n; ++i)
	{
		int const den = den_dist(rng);
		std::uniform_int_distribution<int> num_dist(0, den);
		Rational r(num_dist(rng), den);
		r.canonicalize();
		x.push_back(r);
	}
	std::sort(x.begin(), x.end());
	return x;
}

Word apply_wedge_map(std::vector<int> const &map_spec, Word const &w)
{
	std::vector<Letter> out;
	for (auto const &l : w.letters())
	{
		if (l.gen > static_cast<int>(map_spec.size()))
			throw std::invalid_argument("apply_wedge_map: generator outside the map");
		int const img = map_spec[static_cast<std::size_t>(l.gen - 1)];
		if (img != 0)
			out.push_back({img, l.exponent});
	}
	return Word(std::move(out));
}

SimplexChain apply_wedge_map(std::vector<int> const &map_spec, SimplexChain const &c)
{
	SimplexChain out;
	for (auto const &[s, x] : c)
	{
		std::vector<WedgeSimplex> comps;
		for (auto const &w : s.components())
		{
			if (w.is_constant())
			{
				comps.push_back(w);
				continue;
			}
			if (w.gen > static_cast<int>(map_spec.size()))
				throw std::invalid_argument("apply_wedge_map: generator outside the map");
			int const img = map_spec[static_cast<std::size_t>(w.gen - 1)];
			comps.push_back(img == 0 ? WedgeSimplex::constant() : WedgeSimplex::edge(img, w.jump));
		}
		add_term(out, ProductSimplex(s.dim(), std::move(comps)), x);
	}
	return relative_part(out);
}

NaturalityResult naturality_check(std::vector<int> const &map_spec, Word const &w, NuContext const &src,
                                  NuContext const &tgt)
{
	if (map_spec.size() != static_cast<std::size_t>(src.genus()))
		throw std::invalid_argument("naturality_check: map must give an image for every generator");
	for (int img : map_spec)
		if (img < 0 || img > tgt.genus())
			throw std::invalid_argument("naturality_check: image outside the target wedge");
	if (src.n() != tgt.n())
		throw std::invalid_argument("naturality_check: degree mismatch");
	int const n = src.n();

	auto const coords = nu_eval(w, src);
	IntVector z(src.complex.rank(n));
	for (std::size_t i = 0; i < coords.size(); ++i)
		for (std::size_t j = 0; j < z.size(); ++j)
			z[j] += coords[i] * src.h.representatives[i][j];
	auto const image = apply_wedge_map(map_spec, src.complex.to_chain(z, n));

	NaturalityResult r;
	r.pushed = cycle_coordinates(tgt.complex, tgt.h, tgt.complex.to_vector(image, n));
	r.direct = nu_eval(apply_wedge_map(map_spec, w), tgt);
	r.equal = r.pushed == r.direct;
	return r;
}

NaturalityResult naturality_check(std::vector<int> const &map_spec, Word const &w, int n, int g_src,
                                  int g_tgt)
{
	return naturality_check(map_spec, w, NuContext(n, g_src), NuContext(n, g_tgt));
}

} // namespace nutrans
