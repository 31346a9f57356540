#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "vactab/serialize.hpp"

namespace {

using namespace vactab;

struct CliConfig {
  int enumeration_bound = kDefaultWalkEnumBound;
  std::string output_format = "text";
  long time_budget_ms = 10000;
};

// Optional config file at ./vactab.json; VT_ENUM_BOUND wins over both.
CliConfig load_config() {
  CliConfig cfg;
  std::ifstream in("vactab.json");
  if (in) {
    try {
      json j;
      in >> j;
      cfg.enumeration_bound = j.value("enumeration_bound", cfg.enumeration_bound);
      cfg.output_format = j.value("output_format", cfg.output_format);
      cfg.time_budget_ms = j.value("time_budget_ms", cfg.time_budget_ms);
    } catch (const std::exception& e) {
      throw std::invalid_argument(std::string("bad vactab.json: ") + e.what());
    }
  }
  if (const char* env = std::getenv("VT_ENUM_BOUND")) cfg.enumeration_bound = std::atoi(env);
  return cfg;
}

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open input file: " + path);
  json j;
  in >> j;
  return j;
}

constexpr int kExitPass = 0;
constexpr int kExitSemantic = 1;
constexpr int kExitUsage = 2;

int cmd_count(const CliConfig& cfg, const std::string& variant_tag_str, int k, bool half,
              int n, const std::string& shape_str, bool shape_given, std::string method,
              bool cross, const std::string& format) {
  const WalkVariant variant = variant_from_tag(variant_tag_str);
  if (variant == WalkVariant::NVac && n < 1) {
    std::cerr << "count: --variant nvac requires --n\n";
    return kExitUsage;
  }
  if (method.empty())
    method = variant == WalkVariant::NVac ? "dp" : "formula";
  if (variant == WalkVariant::NVac && method == "formula") {
    std::cerr << "count: no closed form for nvac walks; use --method dp or enumerate\n";
    return kExitUsage;
  }
  std::vector<std::string> methods = cross ? std::vector<std::string>{"formula", "dp", "enumerate"}
                                           : std::vector<std::string>{method};
  if (cross && variant == WalkVariant::NVac) methods = {"dp", "enumerate"};

  const auto dp = count_dp(variant, k, half, n);
  auto value_for = [&](const std::string& how,
                       const IntegerPartition& shape) -> Int {
    if (how == "formula") return count_formula(variant, k, half, shape);
    if (how == "dp") {
      auto it = dp.find(shape);
      return it == dp.end() ? Int(0) : it->second;
    }
    if (how == "enumerate")
      return Int(enumerate_walks(variant, k, half, shape, n, cfg.enumeration_bound).size());
    throw std::invalid_argument("unknown method: " + how);
  };

  std::vector<IntegerPartition> shapes;
  if (shape_given)
    shapes.push_back(parse_shape(shape_str));
  else
    for (const auto& [shape, cnt] : dp) shapes.push_back(shape);

  bool disagree = false;
  json out = json::array();
  for (const auto& shape : shapes) {
    json row;
    row["shape"] = to_json(shape);
    Int first;
    bool first_set = false;
    for (const auto& how : methods) {
      const Int v = value_for(how, shape);
      row[how] = to_string(v);
      if (!first_set) {
        first = v;
        first_set = true;
      } else if (v != first) {
        disagree = true;
      }
    }
    out.push_back(row);
  }
  if (format == "json") {
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& row : out) {
      std::string line;
      if (!shape_given) line += to_text(partition_from_json(row["shape"])) + ": ";
      bool first = true;
      for (const auto& how : methods) {
        if (!first) line += "  ";
        if (methods.size() > 1) line += how + "=";
        line += row[how].get<std::string>();
        first = false;
      }
      std::cout << line << "\n";
    }
  }
  if (disagree) {
    std::cerr << "count: methods disagree\n";
    return kExitSemantic;
  }
  return kExitPass;
}

int cmd_biject(const CliConfig& cfg, const std::string& map, const std::string& input,
               bool round_trip, bool with_trace, const std::string& format) {
  (void)cfg;
  const json in = read_input(input);
  json out;
  if (map == "psi") {
    const auto walk = walk_from_json(in);
    PsiTrace trace;
    const auto img = psi_forward(walk, with_trace ? &trace : nullptr);
    out = to_json(img);
    if (with_trace) out["trace"] = to_json(trace);
    if (round_trip &&
        psi_backward(walk.k(), img, walk.variant(), walk.half()) != walk)
      throw std::invalid_argument("psi round trip failed");
  } else if (map == "psi-inv") {
    const auto img = psi_image_from_json(in.at("image"));
    const auto variant = variant_from_tag(in.at("variant").get<std::string>());
    const bool half = in.at("half").get<bool>();
    const int k =
        static_cast<int>(img.marked.partition().ground().size()) - (half ? 1 : 0);
    const auto walk = psi_backward(k, img, variant, half);
    out = to_json(walk);
    if (round_trip && !(psi_forward(walk) == img))
      throw std::invalid_argument("psi-inv round trip failed");
  } else if (map == "di") {
    const int n = in.at("n").get<int>();
    const auto seq = in.at("seq").get<std::vector<int>>();
    const auto img = di_forward(n, seq);
    out = to_json(img);
    if (round_trip && di_backward(n, img) != seq)
      throw std::invalid_argument("di round trip failed");
  } else if (map == "di-inv") {
    const auto img = di_image_from_json(in);
    const int n = img.walk.n();
    const auto seq = di_backward(n, img);
    out = {{"n", n}, {"seq", seq}};
    if (round_trip && !(di_forward(n, seq) == img))
      throw std::invalid_argument("di-inv round trip failed");
  } else if (map == "glue-symmetric-even") {
    out = to_json(glue_symmetric_even(psi_image_from_json(in)));
  } else if (map == "glue-symmetric-odd") {
    out = to_json(glue_symmetric_odd(psi_image_from_json(in)));
  } else if (map == "glue-odd-pair") {
    out = to_json(glue_odd_pair(psi_image_from_json(in.at("first")),
                                psi_image_from_json(in.at("second"))));
  } else if (map == "glue-connecting") {
    out = to_json(glue_connecting(set_partition_from_json(in.at("first").at("partition")),
                                  tableau_from_json(in.at("first").at("tableau")),
                                  set_partition_from_json(in.at("second").at("partition")),
                                  tableau_from_json(in.at("second").at("tableau"))));
  } else if (map == "type-b") {
    out = to_json(type_b_from(set_partition_from_json(in.at("partition")),
                              in.at("sigma").get<std::vector<int>>()));
  } else if (map == "collapse-block") {
    auto [part, sigma] = collapse_block(set_partition_from_json(in.at("partition")),
                                        in.at("sigma").get<std::vector<int>>());
    out = {{"partition", to_json(part)}, {"sigma", sigma}};
  } else {
    std::cerr << "biject: unknown map " << map << "\n";
    return kExitUsage;
  }
  if (round_trip && map != "psi" && map != "psi-inv" && map != "di" && map != "di-inv") {
    std::cerr << "biject: --round-trip is only available for psi/di maps\n";
    return kExitUsage;
  }
  if (format == "json")
    std::cout << out.dump(2) << "\n";
  else
    std::cout << out.dump() << "\n";
  return kExitPass;
}

int cmd_verify(const CliConfig& cfg, const std::string& identity, bool all,
               const Params& overrides, const std::string& format) {
  std::vector<VerificationReport> reports;
  if (all) {
    reports = run_all(cfg.time_budget_ms);
  } else {
    try {
      reports.push_back(run_identity(identity, overrides));
    } catch (const std::invalid_argument& e) {
      std::cerr << "verify: " << e.what() << "\n";
      return kExitUsage;
    }
  }
  bool ok = true;
  json out = json::array();
  for (const auto& r : reports) {
    ok = ok && r.passed();
    out.push_back(to_json(r));
    if (format != "json") {
      std::cout << (r.passed() ? "PASS" : "FAIL") << " " << r.id << " [" << r.params << "]";
      if (!r.lhs.empty()) std::cout << " lhs=" << r.lhs << " rhs=" << r.rhs;
      std::cout << " (" << r.elapsed_ms << " ms)\n";
    }
  }
  if (format == "json") std::cout << out.dump(2) << "\n";
  return ok ? kExitPass : kExitSemantic;
}

int cmd_sequence(const std::string& name, int terms, bool all, const std::string& format) {
  std::vector<SequenceTable> tables;
  if (all) {
    for (auto s : {SeqName::g, SeqName::g_half, SeqName::a, SeqName::a_half, SeqName::u,
                   SeqName::u_half, SeqName::v, SeqName::v_half})
      tables.push_back(generate_sequence(s, terms));
  } else {
    tables.push_back(generate_sequence(seq_from_tag(name), terms));
  }
  if (format == "json") {
    json out = json::array();
    for (const auto& t : tables) out.push_back(to_json(t));
    std::cout << (tables.size() == 1 ? to_json(tables[0]) : out).dump(2) << "\n";
    return kExitPass;
  }
  for (const auto& t : tables) {
    std::string line;
    if (all) {
      line = seq_tag(t.name);
      line.resize(7, ' ');
      line += "(" + seq_oeis_label(t.name) + "): ";
    }
    for (std::size_t i = 0; i < t.terms.size(); ++i) {
      if (i) line += " ";
      line += to_string(t.terms[i]);
    }
    std::cout << line << "\n";
  }
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact counting, bijections, and identity checks for vacillating tableaux"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  int enum_bound = 0;
  app.add_option("--enum-bound", enum_bound, "Override the walk enumeration bound")
      ->check(CLI::PositiveNumber);

  auto* count = app.add_subcommand("count", "Count walks by final shape");
  std::string variant, shape, method;
  int k = 0, n = 0, terms = 6;
  bool half = false, cross = false;
  count->add_option("--variant", variant, "Walk variant")
      ->required()
      ->check(CLI::IsMember({"nvac", "svt", "lvt"}));
  count->add_option("--k", k, "Number of full step pairs")->required();
  count->add_flag("--half", half, "Count walks of odd length 2k+1");
  count->add_option("--n", n, "Parameter n for nvac walks");
  auto* shape_opt = count->add_option("--shape", shape, "Final shape, e.g. 2,1 (empty: '')");
  count->add_option("--method", method, "Counting method")
      ->check(CLI::IsMember({"formula", "dp", "enumerate"}));
  count->add_flag("--cross", cross, "Run all applicable methods and compare");

  auto* biject = app.add_subcommand("biject", "Apply a bijection to a JSON input file");
  std::string map, input;
  bool round_trip = false, with_trace = false;
  biject->add_option("--map", map, "Which map to apply")->required();
  biject->add_option("--input", input, "Input JSON file")->required();
  biject->add_flag("--round-trip", round_trip, "Apply the inverse and check identity");
  biject->add_flag("--trace", with_trace, "Include the step log (psi only)");

  auto* verify = app.add_subcommand("verify", "Check identities from the catalog");
  std::string identity;
  bool all = false;
  verify->add_option("--identity", identity, "Catalog id, e.g. thm7.1");
  verify->add_flag("--all", all, "Run the whole catalog");
  int vn = -1, vk = -1, vk1 = -1, vk2 = -1, vm = -1, vmaxk = -1;
  std::string vshape;
  verify->add_option("--n", vn, "Pin parameter n");
  verify->add_option("--k", vk, "Pin parameter k");
  verify->add_option("--k1", vk1, "Pin parameter k1");
  verify->add_option("--k2", vk2, "Pin parameter k2");
  verify->add_option("--m", vm, "Pin the variable count m");
  verify->add_option("--max-k", vmaxk, "Upper bound for term relations");
  auto* vshape_opt = verify->add_option("--shape", vshape, "Pin a shape");

  auto* sequence = app.add_subcommand("sequence", "Print a counting sequence");
  std::string seq_name;
  bool seq_all = false;
  sequence->add_option("name", seq_name, "g|g-half|a|a-half|u|u-half|v|v-half");
  sequence->add_flag("--all", seq_all, "Print all eight sequences with OEIS labels");
  sequence->add_option("--terms", terms, "Number of terms");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    CliConfig cfg = load_config();
    if (enum_bound > 0) cfg.enumeration_bound = enum_bound;
    if (count->parsed())
      return cmd_count(cfg, variant, k, half, n, shape, shape_opt->count() > 0, method,
                       cross, format);
    if (biject->parsed()) return cmd_biject(cfg, map, input, round_trip, with_trace, format);
    if (verify->parsed()) {
      if (!all && identity.empty()) {
        std::cerr << "verify: need --identity or --all\n";
        return kExitUsage;
      }
      Params overrides;
      if (vn >= 0) overrides["n"] = std::to_string(vn);
      if (vk >= 0) overrides["k"] = std::to_string(vk);
      if (vk1 >= 0) overrides["k1"] = std::to_string(vk1);
      if (vk2 >= 0) overrides["k2"] = std::to_string(vk2);
      if (vm >= 0) overrides["m"] = std::to_string(vm);
      if (vmaxk >= 0) overrides["max-k"] = std::to_string(vmaxk);
      if (vshape_opt->count() > 0) overrides["shape"] = vshape;
      return cmd_verify(cfg, identity, all, overrides, format);
    }
    if (sequence->parsed()) {
      if (!seq_all && seq_name.empty()) {
        std::cerr << "sequence: need a name or --all\n";
        return kExitUsage;
      }
      return cmd_sequence(seq_name, terms, seq_all, format);
    }
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSemantic;
  }
  return kExitUsage;
}
