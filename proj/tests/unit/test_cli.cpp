#include <suites.hpp>

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

using namespace symplaw;
using namespace symplaw::cli;

namespace {

const std::string kData = SYMPLAW_TEST_DATA_DIR;

struct CliRun
{
	int status = -1;
	std::string out;
};

CliRun run_cli(const std::string &args)
{
	const std::string cmd = std::string(SYMPLAW_CLI_PATH) + " " + args + " 2>/dev/null";
	CliRun r;
	FILE *pipe = popen(cmd.c_str(), "r");
	if (!pipe)
		return r;
	std::array<char, 4096> buf{};
	while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe))
		r.out.append(buf.data(), n);
	const int raw = pclose(pipe);
	r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
	return r;
}

SuiteConfig config(const std::string &suite, unsigned d = 1, unsigned trials = 3)
{
	SuiteConfig c;
	c.suite = suite;
	c.d = d;
	c.trials = trials;
	c.seed = 5;
	return c;
}

} // namespace

TEST(Suites, EachSuitePasses)
{
	for (const auto &s : suite_names())
	{
		if (s == "all")
			continue;
		SuiteResult r = run_suite(config(s));
		EXPECT_EQ(r.exit_code, kOk) << s << ": " << r.report.dump();
		EXPECT_TRUE(r.report["passed"].get<bool>());
	}
}

TEST(Suites, Deterministic)
{
	for (const char *s : {"pfaffian", "det-law", "pseudochar"})
		EXPECT_EQ(run_suite(config(s, 2, 2)).report.dump(), run_suite(config(s, 2, 2)).report.dump());
}

TEST(Suites, BadInputs)
{
	EXPECT_EQ(run_suite(config("nope")).exit_code, kBadInput);
	EXPECT_EQ(run_suite(config("pfaffian", 0)).exit_code, kBadInput);
	EXPECT_EQ(run_suite(config("pfaffian", 7)).exit_code, kBadInput);
	EXPECT_EQ(run_suite(config("pfaffian", 1, 0)).exit_code, kBadInput);
	SuiteConfig c = config("gma");
	c.input_paths = {kData + "/malformed.json"};
	SuiteResult r = run_suite(c);
	EXPECT_EQ(r.exit_code, kBadInput);
	EXPECT_TRUE(r.report.contains("error"));
	c.input_paths = {kData + "/missing.json"};
	EXPECT_EQ(run_suite(c).exit_code, kBadInput);
}

TEST(Suites, CounterexampleSpec)
{
	SuiteConfig c = config("gma");
	c.input_paths = {kData + "/gma_counterexample.json"};
	SuiteResult r = run_suite(c);
	EXPECT_EQ(r.exit_code, kOk) << r.report.dump(2);
	EXPECT_FALSE(r.report["sch_condition"].get<bool>());
	ASSERT_TRUE(r.report.contains("chi_witness"));
}

TEST(Suites, StandardSpec)
{
	SuiteConfig c = config("gma");
	c.input_paths = {kData + "/gma_standard.json"};
	SuiteResult r = run_suite(c);
	EXPECT_EQ(r.exit_code, kOk) << r.report.dump(2);
	EXPECT_TRUE(r.report["sch_condition"].get<bool>());
	EXPECT_FALSE(r.report.contains("chi_witness"));
}

TEST(Suites, InvalidSpecFailsCheck)
{
	SuiteConfig c = config("gma");
	c.input_paths = {kData + "/gma_not_closed.json"};
	EXPECT_EQ(run_suite(c).exit_code, kCheckFailed);
}

TEST(Eval, Examples)
{
	EXPECT_EQ(eval_file("pfaffian", kData + "/pfaffian_2x2.json"), "1\n");
	EXPECT_EQ(eval_file("detlaw", kData + "/detlaw_scalar.json"), "D = c^4\nP = c^2\n");
	EXPECT_EQ(eval_file("theta", kData + "/theta_trivial.json"), "4\n");
	EXPECT_EQ(eval_file("invariant", kData + "/invariant_xxj.json"), "-4\n");
	EXPECT_THROW(eval_json("bogus", json::object()), Error);
	EXPECT_THROW(eval_json("detlaw", json::object()), ParseError);
}

TEST(Binary, ExitCodes)
{
	EXPECT_EQ(run_cli("pfaffian --d 1 --trials 2").status, 0);
	EXPECT_EQ(run_cli("gma --trials 2 --input " + kData + "/gma_not_closed.json").status, 1);
	EXPECT_EQ(run_cli("gma --input " + kData + "/malformed.json").status, 2);
	EXPECT_EQ(run_cli("pfaffian --d 0").status, 2);
	EXPECT_EQ(run_cli("frobnicate").status, 2);
	EXPECT_EQ(run_cli("").status, 2);
	EXPECT_EQ(run_cli("eval pfaffian --input " + kData + "/malformed.json").status, 2);
}

TEST(Binary, ReportIsJson)
{
	CliRun r = run_cli("det-law --d 2 --trials 2 --seed 9");
	ASSERT_EQ(r.status, 0);
	json j = json::parse(r.out);
	EXPECT_EQ(j["suite"], "det-law");
	EXPECT_TRUE(j["passed"].get<bool>());
	EXPECT_EQ(run_cli("det-law --d 2 --trials 2 --seed 9").out, r.out);
}

TEST(Binary, Eval)
{
	CliRun r = run_cli("eval pfaffian --input " + kData + "/pfaffian_2x2.json");
	EXPECT_EQ(r.status, 0);
	EXPECT_EQ(r.out, "1\n");
	EXPECT_EQ(run_cli("eval theta --input " + kData + "/theta_trivial.json").out, "4\n");
}
