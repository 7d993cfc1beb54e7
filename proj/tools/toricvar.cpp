#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "toricvar/cli.hpp"

namespace {

bool write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  f << content;
  return static_cast<bool>(f);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact toric and hyperkahler variation engine"};
  std::string command, input, out, svg, format = "json";
  std::size_t cap = 0;
  app.add_option("command", command, "quotient | arrangement | chambers | locate | variation | flip | fibred | "
                                     "hk-walls | hk-core | hk-variation | mukai-flop | plot")
      ->required();
  app.add_option("--input", input, "problem file (JSON)")->required();
  app.add_option("--out", out, "write the report here instead of standard output");
  app.add_option("--svg", svg, "write the figure here");
  auto* cap_opt = app.add_option("--cap", cap, "largest d for orientation sweeps");
  app.add_option("--format", format, "json or text");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (format != "json" && format != "text") {
    std::cerr << "toricvar: error InvalidInput: --format must be json or text\n";
    return 2;
  }
  std::ifstream in(input, std::ios::binary);
  if (!in) {
    std::cerr << "toricvar: error InvalidInput: cannot read " << input << "\n";
    return 2;
  }
  std::ostringstream text;
  text << in.rdbuf();

  toricvar::cli::Options opt;
  if (*cap_opt) opt.cap = cap;
  opt.text = format == "text";
  const toricvar::cli::Outcome result = toricvar::cli::run(command, text.str(), opt);

  // A plot without --svg goes to the report destination.
  std::string report = result.report;
  if (command == "plot" && result.svg && svg.empty()) report = *result.svg;
  if (!out.empty()) {
    if (!write_file(out, report)) {
      std::cerr << "toricvar: cannot write " << out << "\n";
      return 2;
    }
  } else {
    std::cout << report;
  }
  if (!svg.empty() && result.svg && !write_file(svg, *result.svg)) {
    std::cerr << "toricvar: cannot write " << svg << "\n";
    return 2;
  }
  if (result.exit_code != 0) std::cerr << result.diagnostic << "\n";
  return result.exit_code;
}
