// Command-line front end: ingestion, structural analysis, classification,
// batch verification, enumeration, and quotient construction.
//
// Exit codes: 0 success, 1 verification counterexamples, 2 input error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semiclose/classifier.hpp"
#include "semiclose/invariants.hpp"
#include "semiclose/io.hpp"
#include "semiclose/kernel.hpp"
#include "semiclose/oracle.hpp"
#include "semiclose/symbolic.hpp"

namespace {

using namespace semiclose;

constexpr int kExitOk = 0;
constexpr int kExitCounterexamples = 1;
constexpr int kExitInputError = 2;

struct InputFlags {
  std::string table_path;
  std::string expr;
};

void add_input_flags(CLI::App* cmd, InputFlags& in) {
  auto* table = cmd->add_option("--table", in.table_path,
                                "path to a Cayley table (JSON or text)");
  auto* expr =
      cmd->add_option("--expr", in.expr, "constructor expression (DSL)");
  table->excludes(expr);
  expr->excludes(table);
}

SymPtr load_input(const InputFlags& in) {
  if (in.table_path.empty() == in.expr.empty())
    throw InvalidArgument("exactly one of --table / --expr is required");
  if (!in.table_path.empty())
    return sym_table(load_semigroup(in.table_path), in.table_path);
  return parse_dsl(in.expr);
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(output_path);
  if (!out) throw InvalidArgument("cannot open output file " + output_path);
  out << text << "\n";
}

std::string render_json_markdown(const std::string& title,
                                 const nlohmann::json& j) {
  std::ostringstream out;
  out << "# " << title << "\n\n";
  for (const auto& [key, value] : j.items())
    out << "- **" << key << "**: " << value.dump() << "\n";
  return out.str();
}

int cmd_analyze(const InputFlags& in, const std::string& format,
                const std::string& output_path) {
  const SymPtr node = load_input(in);
  if (!is_finite_tree(node)) {
    std::cerr << "error: analysis requires a finite semigroup; " << describe(node)
              << " denotes an infinite one (classify handles those)\n";
    return kExitInputError;
  }
  const FiniteSemigroup s = expand(node);
  nlohmann::json report = invariant_report(s);
  report["input"] = describe(node);
  if (format == "markdown")
    emit(render_json_markdown("Analysis: " + describe(node), report),
         output_path);
  else
    emit(report.dump(2), output_path);
  return kExitOk;
}

int cmd_classify(const InputFlags& in, const std::string& format,
                 const std::string& output_path) {
  const ClassificationReport report = classify(load_input(in));
  if (format == "markdown")
    emit(classification_to_markdown(report), output_path);
  else
    emit(classification_to_json(report).dump(2), output_path);
  return kExitOk;
}

int cmd_verify(const EnumerationSpec& spec, const std::string& output_path) {
  const SuiteReport report = run_lemma_suite(spec);
  emit(suite_report_to_json(report).dump(2), output_path);
  return report.ok() ? kExitOk : kExitCounterexamples;
}

int cmd_enumerate(const EnumerationSpec& spec, bool dump,
                  const std::string& output_path) {
  const std::vector<FiniteSemigroup> semis = enumerate_semigroups(spec);
  nlohmann::json j;
  j["spec"] = {{"order", spec.order},
               {"commutative_only", spec.commutative_only},
               {"up_to_isomorphism", spec.up_to_isomorphism}};
  j["count"] = semis.size();
  if (dump) {
    nlohmann::json tables = nlohmann::json::array();
    for (const FiniteSemigroup& s : semis) tables.push_back(semigroup_to_json(s));
    j["tables"] = std::move(tables);
  }
  emit(j.dump(2), output_path);
  return kExitOk;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    const int v = std::stoi(item, &used);
    while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
      ++used;
    if (used != item.size()) throw InvalidArgument("bad element id: " + item);
    out.push_back(v);
  }
  return out;
}

std::vector<std::pair<int, int>> parse_pair_list(const std::string& text) {
  std::vector<std::pair<int, int>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::size_t eq = item.find('=');
    if (eq == std::string::npos)
      throw InvalidArgument("pairs look like a=b: " + item);
    const std::vector<int> lhs = parse_int_list(item.substr(0, eq));
    const std::vector<int> rhs = parse_int_list(item.substr(eq + 1));
    if (lhs.size() != 1 || rhs.size() != 1)
      throw InvalidArgument("pairs look like a=b: " + item);
    out.emplace_back(lhs[0], rhs[0]);
  }
  return out;
}

int cmd_quotient(const InputFlags& in, const std::string& ideal_csv,
                 const std::string& pairs_csv, const std::string& output_path) {
  if (ideal_csv.empty() == pairs_csv.empty())
    throw InvalidArgument("exactly one of --ideal / --pairs is required");
  const SymPtr node = load_input(in);
  if (!is_finite_tree(node))
    throw InvalidArgument("quotients need a finite semigroup");
  const FiniteSemigroup s = expand(node);

  QuotientResult result = [&] {
    if (!ideal_csv.empty()) {
      ElementSet ideal = ElementSet::empty(s.order());
      for (int x : parse_int_list(ideal_csv)) {
        if (x < 0 || x >= s.order())
          throw InvalidArgument("element out of range: " + std::to_string(x));
        ideal.insert(x);
      }
      return rees_quotient(s, ideal);
    }
    const Congruence cong = generated_congruence(s, parse_pair_list(pairs_csv));
    return quotient(s, cong);
  }();

  nlohmann::json j;
  j["input"] = describe(node);
  j["quotient"] = semigroup_to_json(result.semigroup);
  j["projection"] = result.projection;
  emit(j.dump(2), output_path);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite and symbolic commutative semigroup toolkit"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string output_path;
  InputFlags analyze_in, classify_in, quotient_in;
  EnumerationSpec verify_spec, enum_spec;
  bool dump_tables = false;
  std::string ideal_csv, pairs_csv;

  CLI::App* analyze = app.add_subcommand("analyze", "structural invariants");
  add_input_flags(analyze, analyze_in);
  analyze->add_option("--format", format)->check(CLI::IsMember({"json", "markdown"}));
  analyze->add_option("--output", output_path);

  CLI::App* classify_cmd =
      app.add_subcommand("classify", "closedness classification");
  add_input_flags(classify_cmd, classify_in);
  classify_cmd->add_option("--format", format)
      ->check(CLI::IsMember({"json", "markdown"}));
  classify_cmd->add_option("--output", output_path);

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  verify->add_option("--order", verify_spec.order)->required();
  verify->add_flag("--commutative", verify_spec.commutative_only);
  verify->add_flag("--up-to-iso", verify_spec.up_to_isomorphism);
  verify->add_option("--output", output_path);

  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate small tables");
  enumerate->add_option("--order", enum_spec.order)->required();
  enumerate->add_flag("--commutative", enum_spec.commutative_only);
  enumerate->add_flag("--up-to-iso", enum_spec.up_to_isomorphism);
  enumerate->add_flag("--dump", dump_tables, "include the tables, not just the count");
  enumerate->add_option("--output", output_path);

  CLI::App* quotient_cmd =
      app.add_subcommand("quotient", "Rees or congruence quotient");
  add_input_flags(quotient_cmd, quotient_in);
  quotient_cmd->add_option("--ideal", ideal_csv, "comma-separated ideal elements");
  quotient_cmd->add_option("--pairs", pairs_csv, "congruence seed pairs a=b,...");
  quotient_cmd->add_option("--output", output_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(analyze_in, format, output_path);
    if (classify_cmd->parsed())
      return cmd_classify(classify_in, format, output_path);
    if (verify->parsed()) return cmd_verify(verify_spec, output_path);
    if (enumerate->parsed())
      return cmd_enumerate(enum_spec, dump_tables, output_path);
    if (quotient_cmd->parsed())
      return cmd_quotient(quotient_in, ideal_csv, pairs_csv, output_path);
  } catch (const SemigroupError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitOk;
}
