#include "nutrans/perm_comb.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace nutrans {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images))
{
	std::vector<bool> seen(images_.size() + 1, false);
	for (int img : images_)
	{
		if (img < 1 || img > degree() || seen[static_cast<std::size_t>(img)])
			throw std::invalid_argument("not a permutation: " + str());
		seen[static_cast<std::size_t>(img)] = true;
	}
}

Permutation Permutation::identity(int n)
{
	std::vector<int> img(static_cast<std::size_t>(n));
	std::iota(img.begin(), img.end(), 1);
	return Permutation(std::move(img));
}

Permutation Permutation::transposition(int n, int i)
{
	if (i < 1 || i >= n)
		throw std::out_of_range("transposition index out of range");
	auto img = identity(n).images_;
	std::swap(img[static_cast<std::size_t>(i - 1)], img[static_cast<std::size_t>(i)]);
	return Permutation(std::move(img));
}

Permutation Permutation::cycle(int n)
{
	std::vector<int> img(static_cast<std::size_t>(n));
	for (int i = 1; i <= n; ++i)
		img[static_cast<std::size_t>(i - 1)] = i == n ? 1 : i + 1;
	return Permutation(std::move(img));
}

Permutation Permutation::inverse() const
{
	std::vector<int> inv(images_.size());
	for (int i = 1; i <= degree(); ++i)
		inv[static_cast<std::size_t>((*this)(i) - 1)] = i;
	return Permutation(std::move(inv));
}

std::string Permutation::str() const
{
	std::ostringstream os;
	os << '[';
	for (std::size_t i = 0; i < images_.size(); ++i)
		os << (i ? "," : "") << images_[i];
	os << ']';
	return os.str();
}

Permutation operator*(Permutation const &sigma, Permutation const &tau)
{
	if (sigma.degree() != tau.degree())
		throw std::invalid_argument("composing permutations of different degree");
	std::vector<int> img;
	img.reserve(static_cast<std::size_t>(tau.degree()));
	for (int x : tau.images())
		img.push_back(sigma(x));
	return Permutation(std::move(img));
}

int inversion_count(Permutation const &p)
{
	int count = 0;
	for (int a = 1; a <= p.degree(); ++a)
		for (int b = a + 1; b <= p.degree(); ++b)
			if (p(a) > p(b))
				++count;
	return count;
}

int epsilon(Permutation const &p) { return inversion_count(p) % 2 == 0 ? 1 : -1; }

std::vector<Permutation> all_permutations(int n)
{
	std::vector<Permutation> out;
	auto img = Permutation::identity(n).images();
	do
		out.emplace_back(img);
	while (std::next_permutation(img.begin(), img.end()));
	return out;
}

std::vector<int> inversions_at(Permutation const &tau, int i)
{
	if (i < 1 || i > tau.degree())
		throw std::out_of_range("inversions_at: index out of range");
	std::vector<int> out;
	for (int j = 1; j <= tau.degree(); ++j)
		if ((j - i) * (tau(j) - tau(i)) < 0)
			out.push_back(j);
	return out;
}

Permutation face_perm(Permutation const &tau, int i)
{
	int const n = tau.degree() + 1;
	if (i < 0 || i > n)
		throw std::out_of_range("face_perm: index out of range");
	std::vector<int> img(static_cast<std::size_t>(n));
	if (i == 0)
	{
		img[0] = 1;
		for (int x = 2; x <= n; ++x)
			img[static_cast<std::size_t>(x - 1)] = tau(x - 1) + 1;
	}
	else if (i == n)
	{
		for (int x = 1; x < n; ++x)
			img[static_cast<std::size_t>(x - 1)] = tau(x);
		img[static_cast<std::size_t>(n - 1)] = n;
	}
	else
	{
		int const ti = tau(i);
		for (int x = 1; x <= n; ++x)
			img[static_cast<std::size_t>(x - 1)] =
			    x == i + 1 ? ti + 1 : skip_after(ti, tau(collapse_after(i, x)));
	}
	return Permutation(std::move(img));
}

int Composition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<int> Composition::block_ends() const
{
	std::vector<int> ends;
	int acc = 0;
	for (int p : parts)
		ends.push_back(acc += p);
	return ends;
}

int Composition::block_of(int p) const
{
	int acc = 0;
	for (int b = 0; b < length(); ++b)
	{
		acc += parts[static_cast<std::size_t>(b)];
		if (p <= acc)
			return b;
	}
	throw std::out_of_range("position beyond composition total");
}

namespace {

void compositions_rec(int remaining, int slots, std::vector<int> &cur,
                      std::vector<Composition> &out)
{
	if (slots == 1)
	{
		cur.push_back(remaining);
		out.push_back(Composition{cur});
		cur.pop_back();
		return;
	}
	for (int first = 0; first <= remaining; ++first)
	{
		cur.push_back(first);
		compositions_rec(remaining - first, slots - 1, cur, out);
		cur.pop_back();
	}
}

} // namespace

std::vector<Composition> compositions(int n, int k)
{
	std::vector<Composition> out;
	if (k <= 0)
	{
		if (n == 0)
			out.push_back(Composition{});
		return out;
	}
	std::vector<int> cur;
	compositions_rec(n, k, cur, out);
	return out;
}

bool is_shuffle(Composition const &c, Permutation const &sigma)
{
	if (c.total() != sigma.degree())
		return false;
	int start = 1;
	for (int part : c.parts)
	{
		for (int p = start; p + 1 < start + part; ++p)
			if (sigma(p) > sigma(p + 1))
				return false;
		start += part;
	}
	return true;
}

namespace {

// Assign each value 1..n to a block, keeping the values inside a block
// increasing. Lexicographic order of the resulting image lists is obtained by
// choosing, for each value in turn, the block whose next free slot comes first.
void shuffles_rec(Composition const &c, std::vector<int> &next_slot,
                  std::vector<int> const &block_end, int value, std::vector<int> &img,
                  std::vector<Permutation> &out)
{
	int const n = c.total();
	if (value > n)
	{
		out.emplace_back(img);
		return;
	}
	for (std::size_t b = 0; b < next_slot.size(); ++b)
	{
		if (next_slot[b] > block_end[b])
			continue;
		int const slot = next_slot[b]++;
		img[static_cast<std::size_t>(slot - 1)] = value;
		shuffles_rec(c, next_slot, block_end, value + 1, img, out);
		--next_slot[b];
	}
}

} // namespace

std::vector<Permutation> enumerate_shuffles(Composition const &c)
{
	std::vector<int> next_slot, block_end;
	int acc = 0;
	for (int part : c.parts)
	{
		next_slot.push_back(acc + 1);
		acc += part;
		block_end.push_back(acc);
	}
	std::vector<int> img(static_cast<std::size_t>(acc));
	std::vector<Permutation> out;
	shuffles_rec(c, next_slot, block_end, 1, img, out);
	std::sort(out.begin(), out.end());
	return out;
}

bool shuffle_transposition_test(Composition const &c, Permutation const &sigma, int i)
{
	if (!is_shuffle(c, sigma))
		throw std::invalid_argument("shuffle_transposition_test: " + sigma.str() +
		                            " is not a shuffle of the composition");
	if (i < 1 || i >= sigma.degree())
		throw std::out_of_range("shuffle_transposition_test: index out of range");
	auto const inv = sigma.inverse();
	auto const ends = c.block_ends();
	bool const at_block_end = std::find(ends.begin(), ends.end(), inv(i)) != ends.end();
	return !at_block_end && inv(i + 1) == inv(i) + 1;
}

IntVec composition_levels(Composition const &c)
{
	IntVec v;
	for (std::size_t b = 0; b < c.parts.size(); ++b)
		v.insert(v.end(), static_cast<std::size_t>(c.parts[b]), static_cast<std::int64_t>(b));
	return v;
}

Composition level_composition(IntVec const &v, int k)
{
	Composition c{std::vector<int>(static_cast<std::size_t>(k), 0)};
	for (auto x : v)
	{
		if (x < 0 || x >= k)
			throw std::out_of_range("level out of range");
		++c.parts[static_cast<std::size_t>(x)];
	}
	return c;
}

bool in_ens(IntVec const &v, Permutation const &sigma, int k)
{
	if (static_cast<int>(v.size()) != sigma.degree())
		return false;
	for (std::size_t j = 0; j < v.size(); ++j)
	{
		if (v[j] < 0 || v[j] > k - 1)
			return false;
		if (j > 0 && v[j - 1] > v[j])
			return false;
	}
	// sigma must increase wherever consecutive levels coincide
	for (int j = 1; j < sigma.degree(); ++j)
		if (v[static_cast<std::size_t>(j - 1)] == v[static_cast<std::size_t>(j)] &&
		    sigma(j) > sigma(j + 1))
			return false;
	return true;
}

std::vector<EnsElement> enumerate_ens(int n, int k)
{
	if (n < 0 || k < 1)
		throw std::invalid_argument("enumerate_ens needs n >= 0, k >= 1");
	std::vector<EnsElement> out;
	// compositions(n,k) in lex order yields levels in reverse lex order of v,
	// so collect and sort
	for (auto const &c : compositions(n, k))
	{
		auto v = composition_levels(c);
		for (auto &sigma : enumerate_shuffles(c))
			out.push_back(EnsElement{v, std::move(sigma)});
	}
	std::sort(out.begin(), out.end());
	return out;
}

int sgn(InvolPoint const &x) { return (x.i % 2 == 0 ? 1 : -1) * epsilon(x.sigma); }

InvolPoint invol(InvolPoint const &x)
{
	int const n = x.dimension();
	if (n < 1)
		throw std::invalid_argument("invol needs n >= 1");
	if (static_cast<int>(x.v.size()) != n || x.i < 0 || x.i > n)
		throw std::invalid_argument("malformed InvolPoint");
	if (x.i >= 1 && x.i <= n - 1)
		return InvolPoint{x.v, Permutation::transposition(n, x.i) * x.sigma, x.i};
	auto const c = Permutation::cycle(n);
	if (x.i == n)
	{
		// v + sigma^*(e_n) = v + e_{sigma^{-1}(n)}
		IntVec v = x.v;
		++v[static_cast<std::size_t>(x.sigma.inverse()(n) - 1)];
		return InvolPoint{std::move(v), c * x.sigma, 0};
	}
	IntVec v = x.v;
	--v[static_cast<std::size_t>(x.sigma.inverse()(1) - 1)];
	return InvolPoint{std::move(v), c.inverse() * x.sigma, n};
}

InvolPoint bij(IntVec const &w, Permutation const &tau, int i, int k)
{
	int const n = tau.degree() + 1;
	if (static_cast<int>(w.size()) != n - 1)
		throw std::invalid_argument("bij: w and tau have different lengths");
	if (i < 0 || i > n)
		throw std::out_of_range("bij: index out of range");
	if (i == 0)
	{
		IntVec v{0};
		v.insert(v.end(), w.begin(), w.end());
		return InvolPoint{std::move(v), face_perm(tau, 0), 0};
	}
	if (i == n)
	{
		IntVec v = w;
		v.push_back(k - 1);
		return InvolPoint{std::move(v), face_perm(tau, n), n};
	}
	IntVec v(static_cast<std::size_t>(n));
	for (int j = 1; j <= n; ++j)
		v[static_cast<std::size_t>(j - 1)] = w[static_cast<std::size_t>(collapse_after(i, j) - 1)];
	return InvolPoint{std::move(v), face_perm(tau, i), tau(i)};
}

bool in_ens(InvolPoint const &x, int k)
{
	return x.i >= 0 && x.i <= x.dimension() && in_ens(x.v, x.sigma, k);
}

std::string to_string(IntVec const &v)
{
	std::ostringstream os;
	os << '(';
	for (std::size_t i = 0; i < v.size(); ++i)
		os << (i ? "," : "") << v[i];
	os << ')';
	return os.str();
}

} // namespace nutrans
