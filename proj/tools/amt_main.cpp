#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "amt/cli.hpp"

int main(int argc, char** argv) {
  using amt::cli::Command;
  using amt::cli::Format;

  CLI::App app{"Barcode invariants of functions on finite simplicial complexes"};
  app.require_subcommand(1);

  amt::cli::RunConfig config;
  std::string format = "json";

  const std::map<std::string, Command> commands{{"barcodes", Command::Barcodes},
                                                {"complex", Command::Complex},
                                                {"verify", Command::Verify},
                                                {"oracle", Command::Oracle}};
  const std::map<std::string, const char*> help{
      {"barcodes", "compute the invariants and the classified bar list"},
      {"complex", "build the chain complex and its filtration stages"},
      {"verify", "check the homology decompositions and the dimension-level chain complex match"},
      {"oracle", "cross-check against standard persistence"}};

  for (const auto& [name, cmd] : commands) {
    auto* sub = app.add_subcommand(name, help.at(name));
    sub->add_option("input", config.input, "filtered complex (JSON)")->required();
    sub->add_option("--field", config.field, "override the field characteristic");
    sub->add_option("--max-degree", config.max_degree, "highest homology degree to report");
    sub->add_option("--format", format, "json or svg (svg: barcodes only)")
        ->check(CLI::IsMember({"json", "svg"}));
    sub->add_flag("--witness", config.witness, "emit representative classes for each support point");
    if (cmd == Command::Complex) sub->add_option("--at", config.thresholds, "filtration thresholds (repeatable)");
    sub->callback([&config, cmd = cmd] { config.command = cmd; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : amt::cli::kExitInput;
  }

  config.format = format == "svg" ? Format::Svg : Format::Json;
  return amt::cli::run(config, std::cout, std::cerr);
}
