#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "lindiff/cli/commands.hpp"

namespace {

bool read_input(const std::string& path, std::string& out) {
  if (path == "-") {
    out.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
    return true;
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream buf;
  buf << in.rdbuf();
  out = buf.str();
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace lindiff::cli;

  CLI::App app{"Exact linear differential algebra: characteristic sets, dimension polynomials, tangent spaces"};
  std::string command;
  std::string path;
  std::string format = "text";
  std::string ranking;
  std::optional<std::uint32_t> order_bound;

  app.add_option("command", command, "charset | dimpoly | decompose | tangent | reduce | count")
      ->required()
      ->check(CLI::IsMember({"charset", "dimpoly", "decompose", "tangent", "reduce", "count"}));
  app.add_option("file", path, "problem file, or - for standard input")->required();
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--ranking", ranking, "override the ranking of the input")
      ->check(CLI::IsMember({"orderly", "elim"}));
  app.add_option("--order-bound", order_bound, "also list a basis of M_k (count: the value at k)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_codes::parse_error;
  }

  Options opts;
  opts.format = format == "json" ? Format::json : Format::text;
  if (ranking == "orderly") opts.ranking = lindiff::RankingKind::orderly;
  if (ranking == "elim") opts.ranking = lindiff::RankingKind::elimination;
  opts.order_bound = order_bound;

  std::string text;
  if (!read_input(path, text)) {
    std::cerr << "error: cannot read '" << path << "'\n";
    return exit_codes::failure;
  }
  const CommandResult result = run_command(*command_from_name(command), std::string_view(text), opts);
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
