// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>

#include "CLI11.hpp"
#include "credal/credal.h"

namespace {

struct ModelDeleter {
  void operator()(credal_model* m) const { credal_model_free(m); }
};
struct OptionsDeleter {
  void operator()(credal_options* o) const { credal_options_free(o); }
};

int report_failure(credal_status status) {
  std::string message = credal_last_error();
  if (message.rfind("error:", 0) != 0) message = "error: " + message;
  if (message.empty() || message.back() != '\n') message += '\n';
  std::cerr << message;
  return static_cast<int>(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact coherent lower previsions, exchangeability and Bernstein representations"};
  app.set_help_flag();

  std::string command, model_path, gamble, poly, h, theta, ns;
  unsigned n = 0;
  std::uint64_t cap = 0;
  bool json = false, csv = false, help = false;

  app.add_option("command", command);
  app.add_option("--model", model_path);
  app.add_option("--gamble", gamble);
  app.add_option("--poly", poly);
  app.add_option("--h", h);
  app.add_option("--theta", theta);
  auto* n_opt = app.add_option("--n", n);
  app.add_option("--ns", ns);
  auto* cap_opt = app.add_option("--cap", cap);
  auto* json_flag = app.add_flag("--json", json);
  app.add_flag("--csv", csv)->excludes(json_flag);
  // "--h" names the frequency expression, so help has no short form.
  app.add_flag("--help", help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n" << credal_usage();
    return CREDAL_ERROR_USAGE;
  }
  if (help) {
    std::cout << credal_usage();
    return CREDAL_OK;
  }
  if (command.empty() || !credal_is_command(command.c_str())) {
    if (!command.empty()) std::cerr << "error: unknown command '" << command << "'\n";
    std::cerr << credal_usage();
    return CREDAL_ERROR_USAGE;
  }
  if (model_path.empty()) {
    std::cerr << "error: missing required flag --model\n" << credal_usage();
    return CREDAL_ERROR_USAGE;
  }

  credal_model* raw_model = nullptr;
  if (auto status = credal_model_load_file(model_path.c_str(), cap, &raw_model); status != CREDAL_OK)
    return report_failure(status);
  std::unique_ptr<credal_model, ModelDeleter> model(raw_model);

  credal_options* raw_options = nullptr;
  if (auto status = credal_options_create(&raw_options); status != CREDAL_OK) return report_failure(status);
  std::unique_ptr<credal_options, OptionsDeleter> options(raw_options);

  auto set = [&](const char* key, const std::string& value) {
    return value.empty() ? CREDAL_OK : credal_options_set(options.get(), key, value.c_str());
  };
  for (auto status : {set("gamble", gamble), set("poly", poly), set("h", h), set("theta", theta),
                      set("ns", ns), set("n", *n_opt ? std::to_string(n) : std::string()),
                      set("cap", *cap_opt ? std::to_string(cap) : std::string())})
    if (status != CREDAL_OK) return report_failure(status);
  credal_options_set_format(options.get(), json ? CREDAL_FORMAT_JSON
                                           : csv ? CREDAL_FORMAT_CSV
                                                 : CREDAL_FORMAT_TEXT);

  char* output = nullptr;
  if (auto status = credal_run(model.get(), command.c_str(), options.get(), &output); status != CREDAL_OK)
    return report_failure(status);
  std::fputs(output, stdout);
  credal_string_free(output);
  return CREDAL_OK;
}
