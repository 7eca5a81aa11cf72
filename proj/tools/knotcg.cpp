// knotcg: command-line front end over the knotcg C API. JSON reports go to
// stdout, diagnostics to stderr; the exit code is the library status.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "knotcg/knotcg.h"

namespace {

using SeifertHandle = std::unique_ptr<kcg_seifert, decltype(&kcg_seifert_free)>;

int report_failure(kcg_status status) {
  std::cerr << "knotcg: " << kcg_status_name(status) << ": " << kcg_last_error() << "\n";
  return static_cast<int>(status);
}

// Prints the JSON (if any), then the diagnostic on failure.
int finish(kcg_status status, char* json) {
  if (json) {
    std::cout << json << "\n";
    kcg_string_free(json);
  }
  return status == KCG_OK ? 0 : report_failure(status);
}

// A readable file is parsed as JSON; anything else is tried as a corpus name.
kcg_status load(const std::string& input, SeifertHandle& out) {
  kcg_seifert* raw = nullptr;
  kcg_status status;
  std::error_code ec;
  if (std::filesystem::is_regular_file(input, ec)) {
    std::ifstream in(input);
    std::stringstream buf;
    buf << in.rdbuf();
    status = kcg_seifert_from_json(buf.str().c_str(), &raw);
  } else {
    status = kcg_seifert_from_name(input.c_str(), &raw);
    if (status == KCG_INVALID_ARGUMENT) {
      std::cerr << "knotcg: '" << input << "' is neither a readable file nor a corpus knot\n";
      return KCG_USAGE;
    }
  }
  if (status == KCG_OK) out.reset(raw);
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact knot concordance obstructions from Seifert matrices"};
  app.require_subcommand(1);
  bool json_flag = true;
  app.add_flag("--json", json_flag, "JSON output (the only format)");

  std::string input;
  long bound = 2;
  auto* analyze = app.add_subcommand("analyze", "Alexander polynomial, determinant, metabolizer search");
  analyze->add_option("input", input, "Seifert JSON file or corpus name")->required();
  analyze->add_option("--bound", bound, "coefficient bound for the metabolizer search")
      ->check(CLI::PositiveNumber);

  std::string angle;
  auto* signature = app.add_subcommand("signature", "Tristram-Levine signature at k/p");
  signature->add_option("input", input, "Seifert JSON file or corpus name")->required();
  signature->add_option("angle", angle, "angle k/p, 0 < k < p")->required();

  bool with_metabolizers = false;
  auto* cover = app.add_subcommand("cover", "homology and linking form of the double branched cover");
  cover->add_option("input", input, "Seifert JSON file or corpus name")->required();
  cover->add_flag("--metabolizers", with_metabolizers, "enumerate linking-form metabolizers");

  std::string companion, suggest_for;
  std::vector<std::string> sample_c;
  auto* verify = app.add_subcommand("verify-paper", "check the genus-two infection argument");
  auto* companion_opt =
      verify->add_option("--companion", companion, "companion knot J (file or corpus name)");
  auto* suggest_opt = verify->add_option(
      "--suggest-for", suggest_for, "generate J with sigma_1/3(J) > C/2 for this bound C");
  companion_opt->excludes(suggest_opt);
  verify->add_option("--sample-c", sample_c, "bounds C at which to evaluate the witness inequality");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : KCG_USAGE;
  }

  SeifertHandle knot(nullptr, &kcg_seifert_free);
  char* json = nullptr;

  if (analyze->parsed() || signature->parsed() || cover->parsed()) {
    if (kcg_status s = load(input, knot); s != KCG_OK)
      return s == KCG_USAGE ? s : report_failure(s);
    kcg_status status;
    if (analyze->parsed())
      status = kcg_analyze(knot.get(), bound, &json);
    else if (signature->parsed())
      status = kcg_signature_report(knot.get(), angle.c_str(), &json);
    else
      status = kcg_cover_report(knot.get(), with_metabolizers ? 1 : 0, &json);
    return finish(status, json);
  }

  // verify-paper
  if (companion.empty() == suggest_for.empty()) {
    std::cerr << "knotcg: verify-paper needs exactly one of --companion or --suggest-for\n";
    return KCG_USAGE;
  }
  const bool suggested = !suggest_for.empty();
  if (suggested) {
    kcg_seifert* raw = nullptr;
    if (kcg_status s = kcg_seifert_suggest(suggest_for.c_str(), &raw); s != KCG_OK)
      return report_failure(s);
    knot.reset(raw);
    sample_c.insert(sample_c.begin(), suggest_for);
  } else if (kcg_status s = load(companion, knot); s != KCG_OK) {
    return s == KCG_USAGE ? s : report_failure(s);
  }
  std::vector<const char*> bounds;
  for (const auto& c : sample_c) bounds.push_back(c.c_str());
  const kcg_status status =
      kcg_verify_paper(knot.get(), bounds.data(), bounds.size(), suggested ? 1 : 0, &json);
  return finish(status, json);
}
