#include "suites.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

int write_report(const symplaw::json &report, const std::string &out_path)
{
	const std::string text = report.dump(2) + "\n";
	if (out_path.empty())
	{
		std::cout << text;
		return 0;
	}
	std::ofstream out(out_path);
	if (!out)
	{
		std::cerr << "symplaw: cannot write '" << out_path << "'\n";
		return symplaw::cli::kBadInput;
	}
	out << text;
	return 0;
}

} // namespace

int main(int argc, char **argv)
{
	using namespace symplaw::cli;

	CLI::App app{"Exact checks for symplectic determinant laws, Pfaffians and pseudocharacters"};
	app.require_subcommand(1);

	SuiteConfig cfg;
	std::string out_path;
	for (const auto &name : suite_names())
	{
		auto *sub = app.add_subcommand(name, "Run the '" + name + "' property suite");
		sub->add_option("--d", cfg.d, "Half-dimension d (matrices are 2d x 2d)")->check(CLI::PositiveNumber);
		sub->add_option("--trials", cfg.trials, "Random trials per check")->check(CLI::PositiveNumber);
		sub->add_option("--seed", cfg.seed, "Seed for std::mt19937_64");
		sub->add_option("--input", cfg.input_paths, "JSON input (representation or GMA spec)");
		sub->add_option("--out", out_path, "Write the JSON report here instead of stdout");
		sub->callback([&cfg, name] { cfg.suite = name; });
	}

	std::string eval_cmd, eval_input;
	auto *eval = app.add_subcommand("eval", "Evaluate a single JSON input and print exact values");
	eval->add_option("command", eval_cmd, "pfaffian | detlaw | invariant | theta")
		->required()
		->check(CLI::IsMember(eval_commands()));
	eval->add_option("--input", eval_input, "JSON input file")->required();

	try
	{
		app.parse(argc, argv);
	}
	catch (const CLI::ParseError &e)
	{
		const int rc = app.exit(e);
		return rc == 0 ? 0 : kBadInput;
	}

	if (eval->parsed())
	{
		try
		{
			std::cout << eval_file(eval_cmd, eval_input);
			return kOk;
		}
		catch (const std::exception &e)
		{
			std::cerr << "symplaw: " << e.what() << "\n";
			return kBadInput;
		}
	}

	SuiteResult result = run_suite(cfg);
	if (result.report.contains("error"))
		std::cerr << "symplaw: " << result.report["error"].get<std::string>() << "\n";
	if (int rc = write_report(result.report, out_path))
		return rc;
	return result.exit_code;
}
