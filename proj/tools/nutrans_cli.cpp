// Command-line driver: verification suites, homology and nu coordinates of the
// wedge models, and complex export.

#include "nutrans/group_words.hpp"
#include "nutrans/reports.hpp"
#include "nutrans/simplicial_pair.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

using namespace nutrans;

namespace {

struct UsageError : std::runtime_error
{
	using std::runtime_error::runtime_error;
};

struct Output
{
	bool json = false;
	bool timing = false;
	std::string out;
};

void emit(std::string const &text, Output const &o)
{
	if (o.out.empty())
	{
		std::cout << text;
		return;
	}
	std::ofstream f(o.out);
	if (!f)
		throw UsageError("cannot write " + o.out);
	f << text;
}

int finish(Report r, Output const &o, std::chrono::steady_clock::time_point start)
{
	r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
	emit(o.json ? r.to_json(o.timing).dump(2) + "\n" : r.to_text(o.timing), o);
	return r.pass() ? 0 : 1;
}

Word parse_word(std::string const &text)
{
	try
	{
		return Word::parse(text);
	}
	catch (std::invalid_argument const &e)
	{
		throw UsageError(e.what());
	}
}

// Words naming letters beyond the genus (e.g. "x" with genus 1) are read with
// their distinct letters renumbered alphabetically onto a, b, ...
nlohmann::json fit_letters(std::vector<Word *> const &words, int genus)
{
	std::set<int> used;
	for (auto const *w : words)
		for (auto const &l : w->letters())
			used.insert(l.gen);
	if (used.empty() || *used.rbegin() <= genus)
		return nullptr;
	if (static_cast<int>(used.size()) > genus)
		throw UsageError("words use " + std::to_string(used.size()) + " distinct letters but the genus is " +
		                 std::to_string(genus));
	std::map<int, int> relabel;
	nlohmann::json mapping = nlohmann::json::object();
	for (int g : used)
	{
		int const target = static_cast<int>(relabel.size()) + 1;
		relabel[g] = target;
		mapping[std::string(1, static_cast<char>('a' + g - 1))] = std::string(1, static_cast<char>('a' + target - 1));
	}
	for (auto *w : words)
	{
		std::vector<Letter> letters;
		for (auto l : w->letters())
		{
			l.gen = relabel.at(l.gen);
			letters.push_back(l);
		}
		*w = Word(std::move(letters));
	}
	return mapping;
}

std::vector<std::string> split_commas(std::string const &text)
{
	std::vector<std::string> out;
	std::string cur;
	for (char ch : text)
	{
		if (ch == ',')
		{
			out.push_back(cur);
			cur.clear();
		}
		else
			cur.push_back(ch);
	}
	out.push_back(cur);
	return out;
}

void require(bool ok, std::string const &msg)
{
	if (!ok)
		throw UsageError(msg);
}

} // namespace

// CLI11 writes defaults when an option is registered, so every subcommand
// owns its own values.
struct Params
{
	int max_n = 0, max_k = 0, max_len = 0, genus = 0, n = 0, points = 100;
	std::uint64_t seed = 1;
	std::string word, gamma, alphas;
};

int main(int argc, char **argv)
{
	CLI::App app{"nutrans: exact checks of the nu_n construction on wedges of circles"};
	app.require_subcommand(1);

	Output out;
	auto add_output = [&out](CLI::App *sub) {
		sub->add_flag("--json", out.json, "emit a JSON report");
		sub->add_flag("--timing", out.timing, "include elapsed milliseconds in the report");
		sub->add_option("--out", out.out, "write the report to FILE")->type_name("FILE");
	};

	std::map<std::string, Params> params;
	std::function<int()> action;
	auto now = [] { return std::chrono::steady_clock::now(); };

	auto *verify = app.add_subcommand("verify", "run a verification suite");
	verify->require_subcommand(1);

	{
		auto &p = params["subdivision"];
		auto *sub = verify->add_subcommand("subdivision", "subdivision commutes with the boundary");
		sub->add_option("--max-n", p.max_n)->default_val(4);
		sub->add_option("--max-k", p.max_k)->default_val(4);
		add_output(sub);
		sub->callback([&, pp = &p] {
			action = [&, pp] {
				require(pp->max_n >= 1 && pp->max_k >= 1, "--max-n and --max-k must be positive");
				return finish(subdivision_suite({pp->max_n, pp->max_k}), out, now());
			};
		});
	}
	{
		auto &p = params["homotopy"];
		auto *sub = verify->add_subcommand("homotopy", "chain homotopy between id and div");
		sub->add_option("--max-n", p.max_n)->default_val(3);
		sub->add_option("--max-k", p.max_k)->default_val(3);
		add_output(sub);
		sub->callback([&, pp = &p] {
			action = [&, pp] {
				require(pp->max_n >= 0 && pp->max_k >= 1, "--max-n must be >= 0 and --max-k positive");
				return finish(homotopy_suite({pp->max_n, pp->max_k}), out, now());
			};
		});
	}
	{
		auto &p = params["combinatorics"];
		auto *sub = verify->add_subcommand("combinatorics", "involution, bijection and permutation identities");
		sub->add_option("--max-n", p.max_n, "dimension bound for the involution and bijection")->default_val(4);
		sub->add_option("--max-k", p.max_k, "arity bound for the involution and bijection")->default_val(3);
		add_output(sub);
		sub->callback([&, pp = &p] {
			action = [&, pp] {
				require(pp->max_n >= 1 && pp->max_k >= 1, "--max-n and --max-k must be positive");
				// permutations up to m = n+2, Ens and compositions one step further
				CombinatoricsBounds b{pp->max_n, pp->max_k, pp->max_n + 1, pp->max_k + 1, pp->max_n + 2, pp->max_n + 1};
				return finish(combinatorics_suite(b), out, now());
			};
		});
	}
	{
		auto &p = params["cancellation"];
		auto *sub = verify->add_subcommand("cancellation", "symbolic subset cancellation");
		sub->add_option("--max-n", p.max_n)->default_val(3);
		add_output(sub);
		sub->callback([&, pp = &p] {
			action = [&, pp] {
				require(pp->max_n >= 1, "--max-n must be positive");
				return finish(cancellation_suite(pp->max_n), out, now());
			};
		});
	}
	{
		auto &p = params["theorem-b"];
		auto *sub = verify->add_subcommand("theorem-b", "alternating subset sums vanish in homology");
		sub->add_option("--max-n", p.max_n, "sweep bound on n")->default_val(3);
		sub->add_option("--max-len", p.max_len, "sweep bound on the length of gamma")->default_val(2);
		auto *o_genus = sub->add_option("--genus", p.genus, "genus (sweep: upper bound, default 2; single: default 1)");
		auto *o_n = sub->add_option("--n", p.n, "degree (default: number of alphas minus one)");
		auto *o_gamma = sub->add_option("--gamma", p.gamma, "base word");
		auto *o_alphas = sub->add_option("--alphas", p.alphas, "comma-separated list of n+1 loops");
		add_output(sub);
		sub->callback([&, pp = &p, o_genus, o_n, o_gamma, o_alphas] {
			action = [&, pp, o_genus, o_n, o_gamma, o_alphas] {
				auto const start = now();
				if (o_alphas->count() == 0)
				{
					require(o_gamma->count() == 0 && o_n->count() == 0, "--gamma and --n need --alphas");
					int const g = o_genus->count() ? pp->genus : 2;
					require(pp->max_n >= 1 && g >= 1 && pp->max_len >= 0, "bounds must be positive");
					return finish(subset_sum_suite(pp->max_n, g, pp->max_len), out, start);
				}
				Word gw = parse_word(pp->gamma);
				std::vector<Word> aw;
				for (auto const &s : split_commas(pp->alphas))
					aw.push_back(parse_word(s));
				int const nn = o_n->count() ? pp->n : static_cast<int>(aw.size()) - 1;
				require(nn >= 1, "--n must be positive");
				require(aw.size() == static_cast<std::size_t>(nn + 1), "--alphas must list n+1 words");
				int const g = o_genus->count() ? pp->genus : 1;
				require(g >= 1, "--genus must be positive");
				bool positive = gw.is_positive();
				for (auto const &w : aw)
					positive = positive && w.is_positive();
				require(positive, "theorem-b takes positive words");
				std::vector<Word *> ptrs{&gw};
				for (auto &w : aw)
					ptrs.push_back(&w);
				auto const letters = fit_letters(ptrs, g);
				auto r = subset_sum_single(gw, aw, nn, g);
				if (!letters.is_null())
				{
					r.params["letters"] = letters;
					r.params["gamma"] = pp->gamma;
					r.params["alphas"] = split_commas(pp->alphas);
				}
				return finish(std::move(r), out, start);
			};
		});
	}
	{
		auto &p = params["naturality"];
		auto *sub = verify->add_subcommand("naturality", "nu commutes with maps of wedges");
		sub->add_option("--max-n", p.max_n)->default_val(2);
		sub->add_option("--genus", p.genus, "largest wedge rank")->default_val(2);
		sub->add_option("--max-len", p.max_len, "longest word")->default_val(2);
		add_output(sub);
		sub->callback([&, pp = &p] {
			action = [&, pp] {
				require(pp->max_n >= 1 && pp->genus >= 1 && pp->max_len >= 0, "bounds must be positive");
				return finish(naturality_suite(pp->max_n, pp->genus, pp->max_len), out, now());
			};
		});
	}
	{
		auto &p = params["oracle"];
		auto *sub = verify->add_subcommand("oracle", "pointwise check of the shuffle decomposition");
		sub->add_option("--max-n", p.max_n)->default_val(3);
		sub->add_option("--max-len", p.max_len, "longest word; the arity k is its length")->default_val(3);
		sub->add_option("--genus", p.genus)->default_val(2);
		sub->add_option("--seed", p.seed)->default_val(1);
		sub->add_option("--points", p.points, "random points per term")->default_val(100);
		add_output(sub);
		sub->callback([&, pp = &p] {
			action = [&, pp] {
				require(pp->max_n >= 1 && pp->max_len >= 1 && pp->genus >= 1 && pp->points >= 1,
				        "bounds must be positive");
				return finish(oracle_suite(pp->max_n, pp->max_len, pp->genus, pp->seed, pp->points), out, now());
			};
		});
	}
	{
		auto &p = params["homology"];
		auto *sub = app.add_subcommand("homology", "ranks and torsion of the pair complex");
		sub->add_option("--genus", p.genus)->default_val(1);
		sub->add_option("--n", p.n)->default_val(2);
		add_output(sub);
		sub->callback([&, pp = &p] {
			action = [&, pp] {
				require(pp->n >= 1 && pp->genus >= 0, "--n must be positive");
				return finish(homology_report(pp->n, pp->genus), out, now());
			};
		});
	}
	{
		auto &p = params["nu"];
		auto *sub = app.add_subcommand("nu", "homology coordinates of nu_n(word)");
		sub->add_option("--genus", p.genus)->default_val(1);
		sub->add_option("--n", p.n)->default_val(2);
		sub->add_option("--word", p.word, "word in a..z, A..Z")->required();
		add_output(sub);
		sub->callback([&, pp = &p] {
			action = [&, pp] {
				require(pp->n >= 1 && pp->genus >= 1, "--n and --genus must be positive");
				auto const start = now();
				Word w = parse_word(pp->word);
				auto const letters = fit_letters({&w}, pp->genus);
				auto r = nu_report(w, pp->n, pp->genus);
				if (!letters.is_null())
				{
					r.params["letters"] = letters;
					r.params["word"] = pp->word;
				}
				return finish(std::move(r), out, start);
			};
		});
	}
	{
		auto &p = params["export-complex"];
		auto *sub = app.add_subcommand("export-complex", "write the pair complex as JSON");
		sub->add_option("--genus", p.genus)->default_val(1);
		sub->add_option("--n", p.n)->default_val(2);
		sub->add_flag("--json", out.json, "accepted for symmetry; the export is always JSON");
		sub->add_option("--out", out.out, "write to FILE")->type_name("FILE");
		sub->callback([&, pp = &p] {
			action = [&, pp] {
				require(pp->n >= 1 && pp->genus >= 0, "--n must be positive");
				emit(PairComplex(pp->n, pp->genus, pp->n + 1).to_json().dump(2) + "\n", out);
				return 0;
			};
		});
	}

	try
	{
		app.parse(argc, argv);
	}
	catch (CLI::CallForHelp const &e)
	{
		return app.exit(e);
	}
	catch (CLI::CallForAllHelp const &e)
	{
		return app.exit(e);
	}
	catch (CLI::ParseError const &e)
	{
		std::cerr << "error: " << e.what() << "\n\n" << app.help();
		return 2;
	}

	try
	{
		return action();
	}
	catch (UsageError const &e)
	{
		std::cerr << "error: " << e.what() << '\n';
		return 2;
	}
	catch (std::exception const &e)
	{
		std::cerr << "internal error: " << e.what() << '\n';
		return 1;
	}
}
