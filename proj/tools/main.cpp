#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "cli/commands.hpp"

namespace fs = std::filesystem;
using namespace pgalois::cli;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << text;
}

int write_fixtures(const std::string& dir) {
  fs::create_directories(dir);
  ReportDocument rep;
  rep.command = "fixtures";
  for (const auto& [name, text] : fixture_files()) {
    std::ofstream f(fs::path(dir) / name, std::ios::binary);
    f << text;
    rep.verdicts[name] = static_cast<bool>(f);
  }
  std::cout << emit_report(rep);
  return exit_code(rep);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Partial Galois theory checker over prime fields"};
  std::string command;
  std::string target;
  std::string subring;
  std::string out;
  bool timing = false;
  app.add_option("command", command,
                 "validate | galois | dual | frobenius | morita | dashboard | generate | fixtures")
      ->required();
  app.add_option("instance", target, "instance file (output directory for fixtures)")->required();
  app.add_option("--subring", subring, "file holding {\"basis\": [...]} for the base ring B");
  app.add_option("--out", out, "write the output here instead of standard output");
  app.add_flag("--timing", timing, "add wall-clock timing to the report");
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (command == "fixtures") return write_fixtures(target);
    if (command != "generate" && !is_report_command(command)) throw UsageError("unknown command: " + command);
    InstanceDocument doc = parse_instance(read_file(target));
    if (command == "generate") {
      write_output(generate(doc), out);
      return 0;
    }
    CommandOptions options;
    if (!subring.empty()) options.subring_text = read_file(subring);
    options.timing = timing;
    ReportDocument rep = run(command, doc, options);
    write_output(emit_report(rep), out);
    int code = exit_code(rep);
    if (code == 2) std::cerr << "error: dashboard inconsistency\n";
    return code;
  } catch (const InstanceError& e) {
    std::cerr << (e.kind == InstanceError::Kind::syntax ? "syntax error: " : "semantic error: ") << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 2;
}
