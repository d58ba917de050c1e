#include "nutrans/reports.hpp"

#include "nutrans/affine_simplex.hpp"
#include "nutrans/formal_chains.hpp"
#include "nutrans/nu_transform.hpp"
#include "nutrans/perm_comb.hpp"
#include "nutrans/simplicial_pair.hpp"

#include <map>
#include <random>
#include <set>
#include <sstream>

namespace nutrans {

using nlohmann::json;

void Report::check(bool ok, json const &case_description)
{
	++cases;
	if (!ok)
	{
		++failures;
		if (!witness)
			witness = case_description;
	}
}

void Report::absorb(Report const &sub)
{
	cases += sub.cases;
	failures += sub.failures;
	if (!witness && sub.witness)
		witness = json{{"suite", sub.command}, {"case", *sub.witness}};
}

json Report::to_json(bool with_timing) const
{
	json j = {{"command", command}, {"params", params}, {"status", status()},
	          {"cases", cases},     {"failures", failures}};
	if (witness)
		j["witness"] = *witness;
	if (!result.is_null())
		j["result"] = result;
	if (with_timing)
		j["ms"] = ms;
	return j;
}

std::string Report::to_text(bool with_timing) const
{
	std::ostringstream os;
	os << "command   " << command << '\n';
	os << "params    " << params.dump() << '\n';
	os << "status    " << status() << '\n';
	os << "cases     " << cases << '\n';
	os << "failures  " << failures << '\n';
	if (witness)
		os << "witness   " << witness->dump() << '\n';
	if (with_timing)
		os << "ms        " << ms << '\n';
	if (!result.is_null())
		os << "result\n" << result.dump(2) << '\n';
	return os.str();
}

json to_json(Integer const &x)
{
	if (x.fits_slong_p())
		return x.get_si();
	return x.get_str();
}

json to_json(IntVector const &v)
{
	json j = json::array();
	for (auto const &x : v)
		j.push_back(to_json(x));
	return j;
}

namespace {

json perm_json(Permutation const &p) { return p.images(); }

std::string chain_str(SimplexChain const &c)
{
	if (c.empty())
		return "0";
	std::string s;
	for (auto const &[simplex, x] : c)
	{
		if (!s.empty())
			s += x < 0 ? " - " : " + ";
		else if (x < 0)
			s += "-";
		auto const a = x < 0 ? -x : x;
		if (a != 1)
			s += std::to_string(a) + "*";
		s += simplex.str();
	}
	return s;
}

// all positive words of length in [min_len, max_len] over generators 1..g
std::vector<Word> positive_words(int g, int min_len, int max_len)
{
	std::vector<Word> out;
	std::vector<std::vector<Letter>> layer{{}};
	for (int len = 0; len <= max_len; ++len)
	{
		if (len >= min_len)
			for (auto const &l : layer)
				out.emplace_back(l);
		std::vector<std::vector<Letter>> next;
		for (auto const &l : layer)
			for (int gen = 1; gen <= g; ++gen)
			{
				auto e = l;
				e.push_back({gen, 1});
				next.push_back(std::move(e));
			}
		layer = std::move(next);
	}
	return out;
}

// all words (with inverse letters) of length <= max_len over generators 1..g
std::vector<Word> all_words(int g, int max_len)
{
	std::vector<Word> out;
	std::vector<std::vector<Letter>> layer{{}};
	for (int len = 0; len <= max_len; ++len)
	{
		for (auto const &l : layer)
			out.emplace_back(l);
		std::vector<std::vector<Letter>> next;
		for (auto const &l : layer)
			for (int gen = 1; gen <= g; ++gen)
				for (int e : {1, -1})
				{
					auto x = l;
					x.push_back({gen, e});
					next.push_back(std::move(x));
				}
		layer = std::move(next);
	}
	return out;
}

std::int64_t power(std::int64_t b, int e)
{
	std::int64_t r = 1;
	while (e-- > 0)
		r *= b;
	return r;
}

} // namespace

Report subdivision_suite(SubdivisionBounds b)
{
	Report r;
	r.command = "verify subdivision";
	r.params = {{"max_n", b.max_n}, {"max_k", b.max_k}};
	for (int n = 1; n <= b.max_n; ++n)
		for (int k = 1; k <= b.max_k; ++k)
		{
			auto const lhs = chain_compose(div_chain(n, k), boundary_chain(n));
			auto const rhs = chain_compose(boundary_chain(n), div_chain(n - 1, k));
			r.check(lhs == rhs, {{"n", n}, {"k", k}, {"check", "div o d == d o div"}});
			r.check(div_after_boundary_by_points(n, k) == lhs,
			        {{"n", n}, {"k", k}, {"check", "termwise sum matches composition"}});
			r.check(involution_paired_sum(n, k).is_zero(),
			        {{"n", n}, {"k", k}, {"check", "paired terms cancel"}});
		}
	return r;
}

Report homotopy_suite(HomotopyBounds b)
{
	Report r;
	r.command = "verify homotopy";
	r.params = {{"max_n", b.max_n}, {"max_k", b.max_k}};
	for (int k = 1; k <= b.max_k; ++k)
	{
		auto const L = build_homotopy_L(k, b.max_n);
		for (int m = 0; m <= b.max_n; ++m)
			r.check(homotopy_identity_holds(L, k, m), {{"k", k}, {"m", m}});
	}
	return r;
}

Report involution_suite(int max_n, int max_k)
{
	Report r;
	r.command = "involution";
	r.params = {{"max_n", max_n}, {"max_k", max_k}};
	for (int n = 1; n <= max_n; ++n)
	{
		auto const perms = all_permutations(n);
		for (int k = 1; k <= max_k; ++k)
		{
			// v ranges over [-1,k]^n
			IntVec v(static_cast<std::size_t>(n), -1);
			for (;;)
			{
				for (auto const &s : perms)
					for (int i = 0; i <= n; ++i)
					{
						InvolPoint const x{v, s, i};
						auto const y = invol(x);
						bool const ok = invol(y) == x && !(y == x) && sgn(y) == -sgn(x) &&
						                f_map(y, k).map == f_map(x, k).map;
						r.check(ok, {{"k", k}, {"v", v}, {"sigma", perm_json(s)}, {"i", i}});
					}
				std::size_t p = 0;
				while (p < v.size() && ++v[p] > k)
					v[p++] = -1;
				if (p == v.size())
					break;
			}
		}
	}
	return r;
}

Report bijection_suite(int max_n, int max_k)
{
	Report r;
	r.command = "bijection";
	r.params = {{"max_n", max_n}, {"max_k", max_k}};
	for (int n = 1; n <= max_n; ++n)
		for (int k = 1; k <= max_k; ++k)
		{
			std::set<InvolPoint> target;
			for (auto const &e : enumerate_ens(n, k))
				for (int i = 0; i <= n; ++i)
				{
					InvolPoint const x{e.v, e.sigma, i};
					if (!in_ens(invol(x), k))
						target.insert(x);
				}
			std::set<InvolPoint> image;
			bool injective = true;
			for (auto const &e : enumerate_ens(n - 1, k))
				for (int i = 0; i <= n; ++i)
				{
					auto const x = bij(e.v, e.sigma, i, k);
					auto const ft = ftilde_map(e.v, e.sigma, i, k);
					int const sgn_tilde = (i % 2 == 0 ? 1 : -1) * epsilon(e.sigma);
					bool const ok = target.count(x) == 1 && f_map(x, k).map == ft.map &&
					                sgn(x) == sgn_tilde && ft.sign == sgn_tilde;
					r.check(ok, {{"n", n}, {"k", k}, {"w", e.v}, {"tau", perm_json(e.sigma)}, {"i", i}});
					if (!image.insert(x).second)
						injective = false;
				}
			r.check(injective && image == target,
			        {{"n", n}, {"k", k}, {"check", "bijective onto unpaired points"},
			         {"image", image.size()}, {"target", target.size()}});
		}
	return r;
}

Report permutation_suite(int max_m, int max_composition_n)
{
	Report r;
	r.command = "permutation identities";
	r.params = {{"max_m", max_m}, {"max_composition_n", max_composition_n}};
	for (int m = 1; m <= max_m; ++m)
		for (auto const &tau : all_permutations(m))
			for (int i = 1; i <= m; ++i)
			{
				auto const inv = static_cast<int>(inversions_at(tau, i).size());
				int const diff = tau(i) - i;
				r.check(((inv - diff) % 2 + 2) % 2 == 0,
				        {{"tau", perm_json(tau)}, {"i", i}, {"check", "inversion parity"}});

				auto const ext = face_perm(tau, i);
				bool ok = epsilon(ext) == epsilon(tau) * (diff % 2 == 0 ? 1 : -1) && ext(i) == tau(i) &&
				          ext(i + 1) == tau(i) + 1;
				for (int x = 1; x <= m + 1; ++x)
					ok = ok && collapse_after(tau(i), ext(x)) == tau(collapse_after(i, x));
				r.check(ok, {{"tau", perm_json(tau)}, {"i", i}, {"check", "face permutation"}});
			}

	for (int n = 1; n <= max_composition_n; ++n)
	{
		auto const perms = all_permutations(n);
		for (int k = 1; k <= n; ++k)
			for (auto const &c : compositions(n, k))
			{
				std::vector<Permutation> brute;
				for (auto const &s : perms)
					if (is_shuffle(c, s))
						brute.push_back(s);
				r.check(brute == enumerate_shuffles(c),
				        {{"parts", c.parts}, {"check", "shuffle enumeration"}});
				for (auto const &s : brute)
					for (int i = 1; i < n; ++i)
					{
						bool const leaves = !is_shuffle(c, Permutation::transposition(n, i) * s);
						r.check(leaves == shuffle_transposition_test(c, s, i),
						        {{"parts", c.parts}, {"sigma", perm_json(s)}, {"i", i},
						         {"check", "shuffle transposition"}});
					}
			}
	}
	return r;
}

Report ens_count_suite(int max_n, int max_k)
{
	Report r;
	r.command = "ens count";
	r.params = {{"max_n", max_n}, {"max_k", max_k}};
	for (int n = 0; n <= max_n; ++n)
	{
		auto const perms = all_permutations(n);
		for (int k = 1; k <= max_k; ++k)
		{
			// brute force over all of [0,k-1]^n x S_n
			std::set<EnsElement> brute;
			IntVec v(static_cast<std::size_t>(n), 0);
			for (;;)
			{
				for (auto const &s : perms)
					if (in_ens(v, s, k))
						brute.insert({v, s});
				std::size_t p = 0;
				while (p < v.size() && ++v[p] == k)
					v[p++] = 0;
				if (p == v.size())
					break;
			}
			auto const listed = enumerate_ens(n, k);
			bool const ok = static_cast<std::int64_t>(listed.size()) == power(k, n) &&
			                static_cast<std::int64_t>(brute.size()) == power(k, n) &&
			                std::set<EnsElement>(listed.begin(), listed.end()) == brute;
			r.check(ok, {{"n", n}, {"k", k}, {"size", listed.size()}, {"brute", brute.size()}});
		}
	}
	return r;
}

Report combinatorics_suite(CombinatoricsBounds b)
{
	Report r;
	r.command = "verify combinatorics";
	r.params = {{"invol_max_n", b.invol_max_n},   {"invol_max_k", b.invol_max_k},
	            {"ens_max_n", b.ens_max_n},       {"ens_max_k", b.ens_max_k},
	            {"perm_max_m", b.perm_max_m},     {"composition_max_n", b.composition_max_n}};
	r.absorb(involution_suite(b.invol_max_n, b.invol_max_k));
	r.absorb(bijection_suite(b.invol_max_n, b.invol_max_k));
	r.absorb(permutation_suite(b.perm_max_m, b.composition_max_n));
	r.absorb(ens_count_suite(b.ens_max_n, b.ens_max_k));
	return r;
}

Report cancellation_suite(int max_n)
{
	Report r;
	r.command = "verify cancellation";
	r.params = {{"max_n", max_n}};
	json sizes = json::array();
	for (int n = 1; n <= max_n; ++n)
	{
		auto const e = cancellation_expand(n);
		json leftover = json::array();
		for (auto const &[term, c] : e.sum)
		{
			if (leftover.size() >= 4)
				break;
			json t = json::array();
			for (auto const &[sym, src] : term)
				t.push_back({symbol_name(sym), src});
			leftover.push_back({{"term", t}, {"coeff", c}});
		}
		r.check(e.sum.empty(), {{"n", n}, {"leftover", leftover}});
		sizes.push_back({{"n", n}, {"subsets", e.subsets}, {"raw_terms", e.raw_terms}});

		// profiles over alpha_0..alpha_n, gamma
		for (auto const &c : compositions(n, n + 2))
		{
			std::vector<int> alpha(c.parts.begin(), c.parts.end() - 1);
			r.check(profile_coefficient(n, alpha) == 0, {{"n", n}, {"profile", c.parts}});
		}
	}
	r.result = {{"expansions", sizes}};
	return r;
}

Report oracle_suite(int max_n, int max_len, int genus, std::uint64_t seed, int points)
{
	Report r;
	r.command = "verify oracle";
	r.params = {{"max_n", max_n}, {"max_len", max_len}, {"genus", genus}, {"seed", seed}, {"points", points}};
	std::mt19937_64 rng(seed);
	auto sample = [&](int n) {
		std::vector<RationalPoint> pts;
		for (int i = 0; i < points; ++i)
			pts.push_back(random_simplex_point(n, rng));
		return pts;
	};
	for (int n = 1; n <= max_n; ++n)
	{
		auto const c = sample_eval_oracle_constant(n, sample(n));
		r.check(c.equal, {{"n", n}, {"word", ""}});
		for (auto const &w : positive_words(genus, 1, max_len))
			for (auto const &t : shuffle_expand(w, n))
			{
				auto const res = sample_eval_oracle(t, sample(n));
				json desc = {{"n", n}, {"word", w.str()}, {"parts", t.parts.parts}, {"sigma", perm_json(t.sigma)}};
				if (res.witness)
				{
					json pt = json::array();
					for (auto const &x : *res.witness)
						pt.push_back(x.get_str());
					desc["point"] = pt;
				}
				r.check(res.equal && res.points == static_cast<std::size_t>(points), desc);
			}
	}
	return r;
}

Report subset_sum_single(Word const &gamma, std::vector<Word> const &alphas, int n, int genus)
{
	Report r;
	r.command = "verify theorem-b";
	json a = json::array();
	for (auto const &w : alphas)
		a.push_back(w.str());
	r.params = {{"n", n}, {"genus", genus}, {"gamma", gamma.str()}, {"alphas", a}};
	auto const res = subset_sum_check(gamma, alphas, n, genus);
	json contrib = json::array();
	for (auto const &[mask, w, coords] : res.contributions)
		contrib.push_back({{"subset", mask}, {"word", w.str()}, {"coordinates", to_json(coords)}});
	r.check(res.zero, {{"total", to_json(res.total)}});
	r.result = {{"total", to_json(res.total)}, {"terms", contrib}};
	return r;
}

Report subset_sum_suite(int max_n, int max_genus, int max_gamma_len)
{
	Report r;
	r.command = "verify theorem-b";
	r.params = {{"max_n", max_n}, {"max_genus", max_genus}, {"max_gamma_len", max_gamma_len}};
	for (int g = 1; g <= max_genus; ++g)
		for (int n = 1; n <= max_n; ++n)
		{
			NuContext const ctx(n, g);
			auto const letters = positive_words(g, 1, 1);
			for (auto const &gamma : positive_words(g, 0, max_gamma_len))
			{
				std::vector<std::size_t> idx(static_cast<std::size_t>(n + 1), 0);
				for (;;)
				{
					std::vector<Word> alphas;
					json a = json::array();
					for (auto i : idx)
					{
						alphas.push_back(letters[i]);
						a.push_back(letters[i].str());
					}
					auto const res = subset_sum_check(gamma, alphas, ctx);
					r.check(res.zero, {{"genus", g}, {"n", n}, {"gamma", gamma.str()}, {"alphas", a},
					                   {"total", to_json(res.total)}});
					std::size_t p = 0;
					while (p < idx.size() && ++idx[p] == letters.size())
						idx[p++] = 0;
					if (p == idx.size())
						break;
				}
			}
		}
	return r;
}

Report naturality_suite(int max_n, int max_genus, int max_len)
{
	Report r;
	r.command = "verify naturality";
	r.params = {{"max_n", max_n}, {"max_genus", max_genus}, {"max_len", max_len}};
	for (int n = 1; n <= max_n; ++n)
	{
		std::vector<NuContext> ctx;
		for (int g = 1; g <= max_genus; ++g)
			ctx.emplace_back(n, g);
		for (int gs = 1; gs <= max_genus; ++gs)
			for (int gt = 1; gt <= max_genus; ++gt)
			{
				std::vector<int> spec(static_cast<std::size_t>(gs), 0);
				for (;;)
				{
					for (auto const &w : all_words(gs, max_len))
					{
						auto const res = naturality_check(spec, w, ctx[static_cast<std::size_t>(gs - 1)],
						                                  ctx[static_cast<std::size_t>(gt - 1)]);
						r.check(res.equal, {{"n", n}, {"source_genus", gs}, {"target_genus", gt}, {"map", spec},
						                    {"word", w.str()}, {"pushed", to_json(res.pushed)},
						                    {"direct", to_json(res.direct)}});
					}
					std::size_t p = 0;
					while (p < spec.size() && ++spec[p] > gt)
						spec[p++] = 0;
					if (p == spec.size())
						break;
				}
			}
	}
	return r;
}

Report rank_suite(int max_n)
{
	Report r;
	r.command = "rank";
	r.params = {{"max_n", max_n}, {"genus", 1}};
	json rows = json::array();
	for (int n = 1; n <= max_n; ++n)
	{
		NuContext const ctx(n, 1);
		r.check(ctx.h.rank == static_cast<std::size_t>(n) && ctx.h.torsion.empty(),
		        {{"n", n}, {"rank", ctx.h.rank}, {"torsion", to_json(ctx.h.torsion)}});

		// columns: nu_n((x - 1)^j), the preimage of the Magnus monomial X^j
		WordCombination x_minus_1;
		add_term(x_minus_1, Word::generator(1), 1);
		add_term(x_minus_1, Word{}, -1);
		WordCombination p{{Word{}, 1}};
		IntMatrix m(ctx.h.coordinate_count(), static_cast<std::size_t>(n + 1));
		json cols = json::array();
		for (int j = 0; j <= n; ++j)
		{
			auto const col = nu_eval(p, ctx);
			for (std::size_t i = 0; i < col.size(); ++i)
				m(i, static_cast<std::size_t>(j)) = col[i];
			cols.push_back(to_json(col));
			p = combination_product(p, x_minus_1);
		}
		auto const s = smith_normal_form(m);
		bool const kernel_is_constants = std::all_of(cols[0].begin(), cols[0].end(), [](json const &x) { return x == 0; });
		r.check(s.rank == static_cast<std::size_t>(n) && kernel_is_constants,
		        {{"n", n}, {"matrix_rank", s.rank}, {"columns", cols}});
		rows.push_back({{"n", n}, {"homology_rank", ctx.h.rank}, {"nu_rank", s.rank}, {"columns", cols}});
	}
	r.result = rows;
	return r;
}

Report snf_suite(int count, int max_dim, int max_entry, std::uint64_t seed)
{
	Report r;
	r.command = "snf";
	r.params = {{"count", count}, {"max_dim", max_dim}, {"max_entry", max_entry}, {"seed", seed}};
	std::mt19937_64 rng(seed);
	std::uniform_int_distribution<int> dim(1, max_dim);
	std::uniform_int_distribution<int> entry(-max_entry, max_entry);
	std::uniform_int_distribution<int> percent(0, 99);
	for (int t = 0; t < count; ++t)
	{
		std::size_t rows = static_cast<std::size_t>(dim(rng)), cols = static_cast<std::size_t>(dim(rng));
		if (t == count - 1) // always reach the size bound once
			rows = cols = static_cast<std::size_t>(max_dim);
		int const sparsity = t % 3 == 0 ? 0 : (t % 3 == 1 ? 50 : 85);
		IntMatrix a(rows, cols);
		for (std::size_t i = 0; i < rows; ++i)
			for (std::size_t j = 0; j < cols; ++j)
				if (percent(rng) >= sparsity)
					a(i, j) = entry(rng);
		if (t % 4 == 3 && rows > 2)
			for (std::size_t j = 0; j < cols; ++j)
				a(rows - 1, j) = a(0, j); // force a repeated row
		auto const s = smith_normal_form(a);
		bool ok = s.U * a * s.V == s.D && s.D.is_diagonal();
		ok = ok && abs(determinant(s.U)) == 1 && abs(determinant(s.V)) == 1;
		ok = ok && s.U * s.U_inv == IntMatrix::identity(rows) && s.V * s.V_inv == IntMatrix::identity(cols);
		for (std::size_t i = 0; i < std::min(rows, cols) && ok; ++i)
		{
			if (i < s.rank)
				ok = s.D(i, i) > 0 && (i == 0 || mpz_divisible_p(s.D(i, i).get_mpz_t(), s.D(i - 1, i - 1).get_mpz_t()));
			else
				ok = sgn(s.D(i, i)) == 0;
		}
		r.check(ok, {{"index", t}, {"rows", rows}, {"cols", cols}});
	}
	return r;
}

Report homology_report(int n, int genus)
{
	Report r;
	r.command = "homology";
	r.params = {{"n", n}, {"genus", genus}};
	PairComplex const c(n, genus, n + 1);
	json degrees = json::array();
	for (int d = 0; d <= n + 1; ++d)
	{
		r.check((c.boundary(d) * c.boundary(d + 1)).is_zero(), {{"d", d}, {"check", "boundary squared"}});
		auto const h = homology(c, d);
		degrees.push_back({{"d", d}, {"chain_rank", h.chain_rank}, {"rank", h.rank}, {"torsion", to_json(h.torsion)}});
	}
	r.result = {{"degrees", degrees}};
	return r;
}

Report nu_report(Word const &w, int n, int genus)
{
	Report r;
	r.command = "nu";
	r.params = {{"n", n}, {"genus", genus}, {"word", w.str()}};
	NuContext const ctx(n, genus);
	auto const coords = nu_eval(w, ctx);
	json basis = json::array();
	for (auto const &rep : ctx.h.representatives)
		basis.push_back(chain_str(ctx.complex.to_chain(rep, n)));
	json positive = json::object();
	for (auto const &[pw, c] : positivize(w, n))
		positive[pw.str()] = c;
	r.check(coords.size() == ctx.h.coordinate_count(), {{"check", "coordinate count"}});
	r.result = {{"coordinates", to_json(coords)}, {"basis", basis}, {"homology_rank", ctx.h.rank},
	            {"torsion", to_json(ctx.h.torsion)}, {"positivized", positive}};
	return r;
}

} // namespace nutrans
