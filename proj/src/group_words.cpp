#include "nutrans/group_words.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace nutrans {

Word::Word(std::vector<Letter> letters) : letters_(std::move(letters))
{
	for (auto const &l : letters_)
		if (l.gen < 1 || l.gen > 26 || (l.exponent != 1 && l.exponent != -1))
			throw std::invalid_argument("Word: malformed letter");
}

Word Word::parse(std::string_view text)
{
	std::vector<Letter> letters;
	for (char ch : text)
	{
		if (ch >= 'a' && ch <= 'z')
			letters.push_back({ch - 'a' + 1, 1});
		else if (ch >= 'A' && ch <= 'Z')
			letters.push_back({ch - 'A' + 1, -1});
		else
			throw std::invalid_argument("invalid character in word: '" + std::string(1, ch) + "'");
	}
	return Word(std::move(letters));
}

Word Word::generator(int gen, int exponent) { return Word({Letter{gen, exponent}}); }

bool Word::is_positive() const
{
	return std::all_of(letters_.begin(), letters_.end(),
	                   [](Letter const &l) { return l.exponent == 1; });
}

bool Word::is_reduced() const
{
	for (std::size_t i = 1; i < letters_.size(); ++i)
		if (letters_[i].gen == letters_[i - 1].gen &&
		    letters_[i].exponent == -letters_[i - 1].exponent)
			return false;
	return true;
}

int Word::max_generator() const
{
	int m = 0;
	for (auto const &l : letters_)
		m = std::max(m, l.gen);
	return m;
}

Word Word::inverse() const
{
	std::vector<Letter> inv(letters_.rbegin(), letters_.rend());
	for (auto &l : inv)
		l.exponent = -l.exponent;
	return Word(std::move(inv));
}

std::string Word::str() const
{
	std::string s;
	for (auto const &l : letters_)
		s.push_back(static_cast<char>((l.exponent == 1 ? 'a' : 'A') + l.gen - 1));
	return s;
}

Word operator*(Word const &u, Word const &v)
{
	auto letters = u.letters();
	letters.insert(letters.end(), v.letters().begin(), v.letters().end());
	return Word(std::move(letters));
}

Word reduce(Word const &w)
{
	std::vector<Letter> stack;
	for (auto const &l : w.letters())
	{
		if (!stack.empty() && stack.back().gen == l.gen && stack.back().exponent == -l.exponent)
			stack.pop_back();
		else
			stack.push_back(l);
	}
	return Word(std::move(stack));
}

void add_term(WordCombination &c, Word const &w, std::int64_t coeff)
{
	if (coeff == 0)
		return;
	auto [it, inserted] = c.try_emplace(w, coeff);
	if (!inserted && (it->second += coeff) == 0)
		c.erase(it);
}

WordCombination combination_product(WordCombination const &a, WordCombination const &b)
{
	WordCombination out;
	for (auto const &[u, cu] : a)
		for (auto const &[v, cv] : b)
			add_term(out, u * v, cu * cv);
	return out;
}

TruncatedTensor TruncatedTensor::one(int degree, int rank)
{
	TruncatedTensor t(degree, rank);
	t.add({}, 1);
	return t;
}

std::int64_t TruncatedTensor::coefficient(Monomial const &m) const
{
	auto it = coeffs_.find(m);
	return it == coeffs_.end() ? 0 : it->second;
}

void TruncatedTensor::add(Monomial const &m, std::int64_t c)
{
	if (c == 0 || static_cast<int>(m.size()) > degree_)
		return;
	auto [it, inserted] = coeffs_.try_emplace(m, c);
	if (!inserted && (it->second += c) == 0)
		coeffs_.erase(it);
}

void TruncatedTensor::check_compatible(TruncatedTensor const &o) const
{
	if (o.degree_ != degree_ || o.rank_ != rank_)
		throw std::invalid_argument("TruncatedTensor: incompatible truncation");
}

TruncatedTensor &TruncatedTensor::operator+=(TruncatedTensor const &o)
{
	check_compatible(o);
	for (auto const &[m, c] : o.coeffs_)
		add(m, c);
	return *this;
}

TruncatedTensor &TruncatedTensor::operator-=(TruncatedTensor const &o)
{
	check_compatible(o);
	for (auto const &[m, c] : o.coeffs_)
		add(m, -c);
	return *this;
}

TruncatedTensor &TruncatedTensor::operator*=(std::int64_t c)
{
	if (c == 0)
		coeffs_.clear();
	for (auto &[m, x] : coeffs_)
		x *= c;
	return *this;
}

TruncatedTensor operator*(TruncatedTensor const &a, TruncatedTensor const &b)
{
	a.check_compatible(b);
	TruncatedTensor out(a.degree_, a.rank_);
	for (auto const &[ma, ca] : a.coeffs_)
		for (auto const &[mb, cb] : b.coeffs_)
		{
			if (static_cast<int>(ma.size() + mb.size()) > a.degree_)
				continue;
			auto m = ma;
			m.insert(m.end(), mb.begin(), mb.end());
			out.add(m, ca * cb);
		}
	return out;
}

std::string TruncatedTensor::str() const
{
	if (coeffs_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (auto const &[m, c] : coeffs_)
	{
		os << (c < 0 ? (first ? "-" : " - ") : (first ? "" : " + "));
		auto const a = c < 0 ? -c : c;
		if (m.empty())
			os << a;
		else
		{
			if (a != 1)
				os << a << '*';
			for (int g : m)
				os << 'X' << g;
		}
		first = false;
	}
	return os.str();
}

TruncatedTensor magnus(Word const &w, int n, int rank)
{
	if (w.max_generator() > rank)
		throw std::invalid_argument("magnus: word uses a generator beyond the rank");
	auto out = TruncatedTensor::one(n, rank);
	for (auto const &l : w.letters())
	{
		TruncatedTensor factor(n, rank);
		if (l.exponent == 1)
		{
			factor.add({}, 1);
			factor.add({l.gen}, 1);
		}
		else
		{
			for (int j = 0; j <= n; ++j)
				factor.add(TruncatedTensor::Monomial(static_cast<std::size_t>(j), l.gen),
				           j % 2 == 0 ? 1 : -1);
		}
		out = out * factor;
	}
	return out;
}

TruncatedTensor magnus(WordCombination const &c, int n, int rank)
{
	TruncatedTensor out(n, rank);
	for (auto const &[w, coeff] : c)
	{
		auto t = magnus(w, n, rank);
		t *= coeff;
		out += t;
	}
	return out;
}

namespace {

// sum_{j=0}^n (1-x)^j = sum_i (-1)^i (sum_{j>=i} binom(j,i)) x^i
WordCombination positive_inverse(int gen, int n)
{
	WordCombination out;
	for (int i = 0; i <= n; ++i)
	{
		std::int64_t s = 0;
		for (int j = i; j <= n; ++j)
		{
			std::int64_t b = 1;
			for (int t = 0; t < i; ++t)
				b = b * (j - t) / (t + 1);
			s += b;
		}
		std::vector<Letter> letters(static_cast<std::size_t>(i), Letter{gen, 1});
		add_term(out, Word(std::move(letters)), i % 2 == 0 ? s : -s);
	}
	return out;
}

} // namespace

WordCombination positivize(Word const &w, int n)
{
	WordCombination acc;
	add_term(acc, Word{}, 1);
	for (auto const &l : w.letters())
	{
		WordCombination factor;
		if (l.exponent == 1)
			add_term(factor, Word::generator(l.gen), 1);
		else
			factor = positive_inverse(l.gen, n);
		acc = combination_product(acc, factor);
	}
	int const rank = std::max(1, w.max_generator());
	if (magnus(acc, n, rank) != magnus(w, n, rank))
		throw std::logic_error("positivize: Magnus expansion changed for " + w.str());
	return acc;
}

WordCombination positivize(WordCombination const &c, int n)
{
	WordCombination out;
	for (auto const &[w, coeff] : c)
		for (auto const &[p, pc] : positivize(w, n))
			add_term(out, p, coeff * pc);
	return out;
}

std::vector<TruncatedTensor::Monomial> monomial_basis(int n, int rank)
{
	std::vector<TruncatedTensor::Monomial> basis{{}};
	std::vector<TruncatedTensor::Monomial> layer{{}};
	for (int d = 1; d <= n; ++d)
	{
		std::vector<TruncatedTensor::Monomial> next;
		for (auto const &m : layer)
			for (int g = 1; g <= rank; ++g)
			{
				auto e = m;
				e.push_back(g);
				next.push_back(std::move(e));
			}
		basis.insert(basis.end(), next.begin(), next.end());
		layer = std::move(next);
	}
	return basis;
}

std::vector<std::int64_t> fn_basis_coords(WordCombination const &c, int n, int rank)
{
	auto const t = magnus(c, n, rank);
	auto const basis = monomial_basis(n, rank);
	std::vector<std::int64_t> out;
	out.reserve(basis.size());
	for (auto const &m : basis)
		out.push_back(t.coefficient(m));
	return out;
}

} // namespace nutrans
