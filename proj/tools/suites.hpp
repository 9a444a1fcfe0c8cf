#pragma once

#include <symplaw/serialize.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace symplaw::cli {

struct SuiteConfig
{
	std::string suite = "all";
	unsigned d = 2;
	unsigned trials = 20;
	std::uint64_t seed = 1;
	std::vector<std::string> input_paths;
};

inline const std::vector<std::string> &suite_names()
{
	static const std::vector<std::string> names{"pfaffian", "det-law", "invariants", "gma", "pseudochar", "all"};
	return names;
}

enum ExitCode : int
{
	kOk = 0,
	kCheckFailed = 1,
	kBadInput = 2,
};

struct SuiteResult
{
	int exit_code = kOk;
	json report;
};

/// Upper bound on 2d, from SYMPLAW_MAX_DIM (default 12).
unsigned max_dim();

/// Runs a property suite. Input errors yield exit code 2 and an "error"
/// report; failed checks yield exit code 1.
SuiteResult run_suite(const SuiteConfig &cfg);

inline const std::vector<std::string> &eval_commands()
{
	static const std::vector<std::string> names{"pfaffian", "detlaw", "invariant", "theta"};
	return names;
}

/// Evaluates one JSON input and returns the printed lines. Throws
/// symplaw::Error on schema mismatch.
std::string eval_json(const std::string &command, const json &input);
std::string eval_file(const std::string &command, const std::string &path);

json read_json_file(const std::string &path);

} // namespace symplaw::cli
