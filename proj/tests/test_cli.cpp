#include <gtest/gtest.h>

#include <fstream>
#include <functional>
#include <sstream>

#include "cli/commands.hpp"
#include "json.hpp"
#include "pgalois/fixtures.hpp"

using namespace pgalois;
using namespace pgalois::cli;

namespace {

std::string fixture_text(const std::string& name) {
  for (const auto& [file, text] : fixture_files())
    if (file == name + ".json") return text;
  throw std::runtime_error("no fixture " + name);
}

std::string data_file(const std::string& name) {
  std::ifstream in(std::string(PGALOIS_TEST_DATA) + "/" + name);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

InstanceError::Kind error_kind(const std::string& text, std::string* pointer = nullptr) {
  try {
    parse_instance(text);
  } catch (const InstanceError& e) {
    if (pointer) *pointer = e.pointer;
    return e.kind;
  }
  ADD_FAILURE() << "parse succeeded";
  return InstanceError::Kind::syntax;
}

std::string edit(const std::string& text, const std::function<void(nlohmann::json&)>& change) {
  nlohmann::json j = nlohmann::json::parse(text);
  change(j);
  return j.dump();
}

}  // namespace

TEST(Instance, ShiftFixtureRoundTrip) {
  std::string text = fixture_text("FIX-SHIFT");
  InstanceDocument doc = parse_instance(text);
  PartialAction pa = resolve_action(doc);
  EXPECT_TRUE(validate_partial_action(pa).ok());
  EXPECT_EQ(pa.maps, fixture_shift().maps);
  EXPECT_EQ(emit_instance(doc), text);
  EXPECT_EQ(emit_instance(parse_instance(emit_instance(doc))), emit_instance(doc));
}

TEST(Instance, ModulesAndSubringRoundTrip) {
  std::string text = edit(fixture_text("FIX-SWAP"), [](nlohmann::json& j) {
    j["subring"] = {{"basis", {{1, 1}}}};
    j["modules"] = {{{"dim", 2},
                     {"side", "right"},
                     {"action_matrices", {{{1, 0}, {0, 0}}, {{0, 0}, {0, 1}}}},
                     {"descent_matrices", {{{1, 0}, {0, 1}}, {{0, 1}, {1, 0}}}}}};
  });
  InstanceDocument doc = parse_instance(text);
  ASSERT_TRUE(doc.subring);
  ASSERT_EQ(doc.modules.size(), 1u);
  std::string once = emit_instance(doc);
  EXPECT_EQ(emit_instance(parse_instance(once)), once);
  ReportDocument rep = run("validate", doc);
  EXPECT_TRUE(rep.verdicts.at("module_0.descent_valid"));
  EXPECT_TRUE(rep.verdicts.at("module_0.round_trip"));
  EXPECT_EQ(exit_code(rep), 0);
}

TEST(Instance, CompositePrimeRejected) {
  std::string pointer;
  std::string text = edit(fixture_text("FIX-SHIFT"), [](nlohmann::json& j) { j["prime"] = 4; });
  EXPECT_EQ(error_kind(text, &pointer), InstanceError::Kind::semantic);
  EXPECT_EQ(pointer, "/prime");
  try {
    parse_instance(text);
  } catch (const InstanceError& e) {
    EXPECT_NE(std::string(e.what()).find("modulus not prime"), std::string::npos);
  }
}

TEST(Instance, BothActionsRejected) {
  std::string text = edit(data_file("shift_global.json"), [](nlohmann::json& j) {
    j["partial_action"] = nlohmann::json::parse(fixture_text("FIX-SHIFT"))["partial_action"];
  });
  EXPECT_EQ(error_kind(text), InstanceError::Kind::semantic);
}

TEST(Instance, StrictFields) {
  std::string pointer;
  std::string text = edit(fixture_text("FIX-SHIFT"), [](nlohmann::json& j) { j["algebra"]["extra"] = 1; });
  EXPECT_EQ(error_kind(text, &pointer), InstanceError::Kind::semantic);
  EXPECT_EQ(pointer, "/algebra/extra");
  text = edit(fixture_text("FIX-SHIFT"), [](nlohmann::json& j) { j["partial_action"]["idempotents"][1][0] = 2; });
  EXPECT_EQ(error_kind(text, &pointer), InstanceError::Kind::semantic);
  EXPECT_EQ(pointer, "/partial_action/idempotents/1/0");
  text = edit(fixture_text("FIX-SHIFT"), [](nlohmann::json& j) { j["group"].erase("table"); });
  EXPECT_EQ(error_kind(text, &pointer), InstanceError::Kind::semantic);
  EXPECT_EQ(pointer, "/group/table");
  EXPECT_EQ(error_kind("{\"prime\": 2,"), InstanceError::Kind::syntax);
}

TEST(Run, GaloisOnShift) {
  ReportDocument rep = run("galois", parse_instance(fixture_text("FIX-SHIFT")));
  EXPECT_TRUE(rep.verdicts.at("can_bijective"));
  EXPECT_EQ(exit_code(rep), 0);
}

TEST(Run, MoritaOnTrivact) {
  ReportDocument rep = run("morita", parse_instance(fixture_text("FIX-TRIVACT")));
  EXPECT_FALSE(rep.verdicts.at("tau_surjective"));
  EXPECT_FALSE(rep.verdicts.at("strict"));
  EXPECT_EQ(exit_code(rep), 1);
}

TEST(Run, ShiftTauWitness) {
  ReportDocument rep = run("morita", parse_instance(fixture_text("FIX-SHIFT")));
  EXPECT_EQ(rep.witnesses.at("tau_witness"), (std::vector<std::int64_t>{1, 0}));
}

TEST(Run, SubringOutsideInvariants) {
  CommandOptions options;
  options.subring_text = "{\"basis\": [[1, 0], [0, 1]]}";
  ReportDocument rep = run("galois", parse_instance(fixture_text("FIX-SHIFT")), options);
  EXPECT_FALSE(rep.verdicts.at("base_in_invariants"));
  EXPECT_EQ(rep.witnesses.at("moved_basis_element").size(), 2u);
  EXPECT_EQ(exit_code(rep), 1);
}

TEST(Run, InvalidActionReported) {
  std::string text = edit(fixture_text("FIX-SHIFT"), [](nlohmann::json& j) {
    std::swap(j["partial_action"]["alpha_matrices"][1], j["partial_action"]["alpha_matrices"][2]);
  });
  ReportDocument rep = run("validate", parse_instance(text));
  EXPECT_FALSE(rep.verdicts.at("partial_action_valid"));
  EXPECT_FALSE(rep.witnesses.empty());
  EXPECT_EQ(exit_code(rep), 1);
}

TEST(Run, UnknownCommand) {
  EXPECT_THROW(run("frob", parse_instance(fixture_text("FIX-TRIV"))), UsageError);
}

TEST(Run, GenerateShift) {
  EXPECT_EQ(generate(parse_instance(data_file("shift_global.json"))), fixture_text("FIX-SHIFT"));
}

TEST(Report, Deterministic) {
  InstanceDocument doc = parse_instance(fixture_text("FIX-SWAP"));
  for (const char* cmd : {"validate", "galois", "dual", "frobenius", "morita", "dashboard"})
    EXPECT_EQ(emit_report(run(cmd, doc)), emit_report(run(cmd, doc))) << cmd;
}

TEST(Report, WitnessSerialized) {
  ReportDocument rep;
  rep.command = "galois";
  rep.verdicts["base_in_invariants"] = false;
  rep.witnesses["moved_basis_element"] = {0, 1};
  nlohmann::json j = nlohmann::json::parse(emit_report(rep));
  EXPECT_EQ(j["witnesses"]["moved_basis_element"], nlohmann::json::array({0, 1}));
  EXPECT_EQ(emit_report(rep).back(), '\n');
}

TEST(Report, EmptyVerdictsRejected) {
  ReportDocument rep;
  rep.command = "validate";
  EXPECT_THROW(emit_report(rep), StructuralError);
}
