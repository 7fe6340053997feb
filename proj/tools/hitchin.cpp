#include <iostream>

#include "CLI11.hpp"
#include "hitchin/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app;
  hitchin::CommandLine cmd;
  hitchin::configure_app(app, cmd);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    const hitchin::RunSpec spec = hitchin::to_run_spec(cmd);
    if (cmd.sweep.empty()) {
      std::cout << hitchin::render(hitchin::run(spec));
      return 0;
    }
    for (const auto& s : hitchin::sweep_preset(cmd.sweep, spec)) std::cout << hitchin::render(hitchin::run(s));
    return 0;
  } catch (const hitchin::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return hitchin::exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
