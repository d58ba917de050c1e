#pragma once

// Verification suites and their reports. Every suite is a pure function of its
// bounds (and seed), so reports are reproducible byte for byte.

#include "nutrans/group_words.hpp"
#include "nutrans/zlinalg.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace nutrans {

struct Report
{
	std::string command;
	nlohmann::json params = nlohmann::json::object();
	std::size_t cases = 0;
	std::size_t failures = 0;
	std::optional<nlohmann::json> witness; ///< first failing case
	nlohmann::json result;                 ///< command output, null for pure checks
	double ms = 0;

	bool pass() const { return failures == 0; }
	std::string status() const { return pass() ? "pass" : "fail"; }

	/// Counts one case; on failure keeps the first witness.
	void check(bool ok, nlohmann::json const &case_description);
	/// Adds the counters of a sub-suite and keeps its witness if none yet.
	void absorb(Report const &sub);

	/// Keys are sorted; ms is included only when with_timing is set.
	nlohmann::json to_json(bool with_timing = false) const;
	std::string to_text(bool with_timing = false) const;
};

nlohmann::json to_json(Integer const &x);
nlohmann::json to_json(IntVector const &v);

struct SubdivisionBounds { int max_n = 4; int max_k = 4; };
struct HomotopyBounds { int max_n = 3; int max_k = 3; };
struct CombinatoricsBounds
{
	int invol_max_n = 4, invol_max_k = 3;   ///< involution and bijection suites
	int ens_max_n = 5, ens_max_k = 4;
	int perm_max_m = 6;
	int composition_max_n = 5;
};

/// div_n^k o d == d o div_{n-1}^k as formal chains, also recomputed
/// termwise through the involution pairing.
Report subdivision_suite(SubdivisionBounds b);
/// id - div == L o d + d o L with the cone-built L.
Report homotopy_suite(HomotopyBounds b);

Report involution_suite(int max_n, int max_k);
Report bijection_suite(int max_n, int max_k);
Report permutation_suite(int max_m, int max_composition_n);
Report ens_count_suite(int max_n, int max_k);
Report combinatorics_suite(CombinatoricsBounds b);

/// Symbolic subset cancellation for n <= max_n.
Report cancellation_suite(int max_n);

/// Pointwise shuffle decomposition: every term of every positive word of
/// length <= max_len over `genus` letters, n <= max_n, with `points` seeded
/// random points per term.
Report oracle_suite(int max_n, int max_len, int genus, std::uint64_t seed, int points = 100);

/// One alternating subset sum.
Report subset_sum_single(Word const &gamma, std::vector<Word> const &alphas, int n, int genus);
/// All gamma with |gamma| <= max_gamma_len and single-letter alphas, g <= max_genus, n <= max_n.
Report subset_sum_suite(int max_n, int max_genus, int max_gamma_len);

/// All generator relabel/collapse maps between wedges of rank <= max_genus,
/// words (with inverses) of length <= max_len, n <= max_n.
Report naturality_suite(int max_n, int max_genus, int max_len);

/// H_n has rank n for g = 1 and nu_n on (1, X, ..., X^n) has rank n with the
/// constant word spanning the kernel.
Report rank_suite(int max_n);

/// U A V = D with unimodular U, V and a divisibility chain, on seeded random
/// matrices.
Report snf_suite(int count, int max_dim, int max_entry, std::uint64_t seed);

/// Ranks and torsion of the pair complex for (n, g) in degrees 0..n+1.
Report homology_report(int n, int genus);
/// Coordinates of nu_n(word) over the SNF basis of H_n.
Report nu_report(Word const &w, int n, int genus);

} // namespace nutrans
