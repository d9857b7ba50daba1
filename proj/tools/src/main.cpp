#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "evpoly_cli/jobs.hpp"

namespace {

struct Flags {
  std::string input = "-";
  std::string output = "-";
  bool pretty = false;
  std::optional<unsigned> box;
  std::optional<std::size_t> cap;
  std::optional<std::uint32_t> seed;
};

void add_flags(CLI::App& app, Flags& f) {
  app.add_option("--input", f.input, "Job document (JSON); '-' reads stdin")->capture_default_str();
  app.add_option("--output", f.output, "Output path; '-' writes stdout")->capture_default_str();
  app.add_flag("--pretty", f.pretty, "Render a plain-text view instead of JSON");
  app.add_option("--box", f.box, "Box bound for stabilization and classification");
  app.add_option("--cap", f.cap, "Inclusion-exclusion / enumeration cap");
  app.add_option("--seed", f.seed, "Seed for randomized verification corpora");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting functions: Ehrhart, sumsets, colorings, generating functions"};
  app.require_subcommand(0, 1);
  Flags flags;
  add_flags(app, flags);
  for (const auto& name : evpoly::cli::commands()) add_flags(*app.add_subcommand(name, "run a " + name + " job"), flags);
  CLI11_PARSE(app, argc, argv);

  std::string command;
  if (!app.get_subcommands().empty()) command = app.get_subcommands().front()->get_name();

  std::string text;
  if (flags.input == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>());
  } else {
    std::ifstream in(flags.input, std::ios::binary);
    if (!in) {
      std::cerr << "evpoly: cannot read " << flags.input << '\n';
      return evpoly::cli::kSchema;
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }

  auto result = evpoly::cli::run_text(text, command, {flags.box, flags.cap, flags.seed});
  const std::string rendered =
      flags.pretty ? evpoly::cli::render_pretty(result.document) : evpoly::cli::render_canonical(result.document);
  if (flags.output == "-") {
    std::cout << rendered;
  } else {
    std::ofstream out(flags.output, std::ios::binary);
    if (!out) {
      std::cerr << "evpoly: cannot write " << flags.output << '\n';
      return evpoly::cli::kSchema;
    }
    out << rendered;
  }
  if (result.exit_code != evpoly::cli::kOk && result.document.contains("error"))
    std::cerr << "evpoly: " << result.document["error"].value("message", std::string()) << '\n';
  return result.exit_code;
}
