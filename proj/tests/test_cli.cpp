#include "nutrans/simplicial_pair.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

using nlohmann::json;

namespace {

struct Run
{
	int code = -1;
	std::string out;
};

Run run(std::string const &args)
{
	std::string const cmd = std::string(NUTRANS_CLI) + " " + args + " 2>/dev/null";
	Run r;
	FILE *p = popen(cmd.c_str(), "r");
	if (!p)
		return r;
	char buf[4096];
	std::size_t got;
	while ((got = fread(buf, 1, sizeof buf, p)) > 0)
		r.out.append(buf, got);
	int const status = pclose(p);
	r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
	return r;
}

std::filesystem::path temp_file(std::string const &name)
{
	return std::filesystem::temp_directory_path() / ("nutrans_cli_" + std::to_string(::getpid()) + "_" + name);
}

} // namespace

TEST(Cli, NuPowerOfOneLetter)
{
	auto const r = run("nu --genus 1 --n 2 --word xx --json");
	ASSERT_EQ(r.code, 0);
	auto const j = json::parse(r.out);
	EXPECT_EQ(j["status"], "pass");
	EXPECT_EQ(j["result"]["coordinates"], json({3, -1}));
	EXPECT_EQ(j["result"]["basis"], json({"(a2,a1)", "(a1,a2)"}));
	EXPECT_EQ(j["params"]["letters"]["x"], "a");
	EXPECT_EQ(j["params"]["word"], "xx");
	EXPECT_FALSE(j.contains("ms"));
}

TEST(Cli, NuTextMode)
{
	auto const r = run("nu --word aaa");
	ASSERT_EQ(r.code, 0);
	EXPECT_NE(r.out.find("status    pass"), std::string::npos);
	EXPECT_NE(r.out.find("\"coordinates\""), std::string::npos);
}

TEST(Cli, SubsetSumSingle)
{
	auto const r = run("verify theorem-b --gamma a --alphas a,a,a --json");
	ASSERT_EQ(r.code, 0);
	auto const j = json::parse(r.out);
	EXPECT_EQ(j["status"], "pass");
	EXPECT_EQ(j["result"]["total"], json({0, 0}));
	EXPECT_EQ(j["result"]["terms"].size(), 8u);
	EXPECT_EQ(j["result"]["terms"][7]["word"], "aaaa");

	// empty gamma, letters renamed onto a..
	auto const e = run("verify theorem-b --genus 1 --n 2 --gamma \"\" --alphas x,x,x --json");
	ASSERT_EQ(e.code, 0);
	auto const je = json::parse(e.out);
	EXPECT_EQ(je["status"], "pass");
	EXPECT_EQ(je["params"]["gamma"], "");
	EXPECT_EQ(je["params"]["letters"]["x"], "a");
	EXPECT_EQ(je["result"]["total"], json({0, 0}));
}

TEST(Cli, SubdivisionDefaultsAreFullBounds)
{
	auto const r = run("verify subdivision --json");
	ASSERT_EQ(r.code, 0);
	auto const j = json::parse(r.out);
	EXPECT_EQ(j["params"]["max_n"], 4);
	EXPECT_EQ(j["params"]["max_k"], 4);
	EXPECT_EQ(j["cases"], 48);
}

TEST(Cli, HomologyRanks)
{
	auto const r = run("homology --genus 1 --n 3 --json");
	ASSERT_EQ(r.code, 0);
	auto const j = json::parse(r.out);
	EXPECT_EQ(j["status"], "pass");
	bool found = false;
	for (auto const &d : j["result"]["degrees"])
		if (d["d"] == 3)
		{
			EXPECT_EQ(d["rank"], 3);
			found = true;
		}
	EXPECT_TRUE(found) << r.out;
}

TEST(Cli, SmallSuitesPass)
{
	for (auto const *args : {"verify subdivision --max-n 2 --max-k 2", "verify homotopy --max-n 2 --max-k 2",
	                         "verify combinatorics --max-n 2 --max-k 2", "verify cancellation --max-n 2",
	                         "verify theorem-b --max-n 1 --max-len 1", "verify naturality --max-n 1",
	                         "verify oracle --max-n 2 --max-len 2 --points 5"})
	{
		auto const r = run(std::string(args) + " --json");
		EXPECT_EQ(r.code, 0) << args;
		auto const j = json::parse(r.out);
		EXPECT_EQ(j["status"], "pass") << args;
		EXPECT_GT(j["cases"].get<long>(), 0) << args;
	}
}

TEST(Cli, DeterministicOutput)
{
	for (auto const *args : {"verify oracle --max-n 2 --max-len 2 --seed 7 --json", "nu --word abA --genus 2 --json",
	                         "verify cancellation"})
	{
		auto const a = run(args), b = run(args);
		EXPECT_EQ(a.code, 0);
		EXPECT_EQ(a.out, b.out) << args;
	}
}

TEST(Cli, TimingAddsMs)
{
	auto const j = json::parse(run("verify cancellation --max-n 1 --json --timing").out);
	EXPECT_TRUE(j.contains("ms"));
	EXPECT_GE(j["ms"].get<double>(), 0.0);
}

TEST(Cli, UsageErrors)
{
	EXPECT_EQ(run("").code, 2);
	EXPECT_EQ(run("bogus").code, 2);
	EXPECT_EQ(run("verify bogus").code, 2);
	EXPECT_EQ(run("nu --word xx --bad").code, 2);
	EXPECT_EQ(run("nu --word x1").code, 2);
	EXPECT_EQ(run("nu").code, 2);
	EXPECT_EQ(run("verify theorem-b --gamma a --alphas A,a,a").code, 2);
	EXPECT_EQ(run("nu --word xx --n abc").code, 2);
}

TEST(Cli, ExportComplexRoundTrip)
{
	auto const path = temp_file("complex.json");
	auto const r = run("export-complex --genus 2 --n 2 --out " + path.string());
	ASSERT_EQ(r.code, 0);
	std::ifstream in(path);
	auto const j = json::parse(in);
	std::filesystem::remove(path);
	auto const c = nutrans::PairComplex::from_json(j);
	nutrans::PairComplex const direct(2, 2, c.d_max());
	for (int d = 0; d <= c.d_max() + 1; ++d)
	{
		EXPECT_EQ(c.basis(d), direct.basis(d));
		EXPECT_EQ(c.boundary(d), direct.boundary(d));
	}
	EXPECT_EQ(run("export-complex --genus 2 --n 2").out, j.dump(2) + "\n");
}

TEST(Cli, OutFileMatchesStdout)
{
	auto const path = temp_file("nu.json");
	ASSERT_EQ(run("nu --word ab --genus 2 --json --out " + path.string()).code, 0);
	std::ifstream in(path);
	std::string const file((std::istreambuf_iterator<char>(in)), {});
	std::filesystem::remove(path);
	EXPECT_EQ(file, run("nu --word ab --genus 2 --json").out);
}
