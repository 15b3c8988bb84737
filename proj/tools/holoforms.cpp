// Command-line front end.  Subcommands are filled in as the corresponding
// kernel modules land.
#include <CLI11.hpp>

#include <cstdio>

int main(int argc, char** argv) {
  CLI::App app{"exact derivation-bracket kernel for metric form algebras"};
  app.require_subcommand(0);
  CLI11_PARSE(app, argc, argv);
  std::puts("no subcommand given; try --help");
  return 2;
}
