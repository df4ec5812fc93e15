// charvanish: exact character tables, vanishing-class analysis, and
// verification of non-vanishing properties for small permutation groups.
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "charvanish/chartable.hpp"
#include "charvanish/errors.hpp"
#include "charvanish/groupspec.hpp"
#include "charvanish/nonvanish.hpp"
#include "charvanish/rootsum.hpp"
#include "charvanish/runner.hpp"

namespace {

using namespace charvanish;

// The desk-scale order bound, overridable via CHARVANISH_MAX_ORDER.
std::uint64_t effective_max_order(std::uint64_t fallback) {
  const char* raw = std::getenv("CHARVANISH_MAX_ORDER");
  if (raw == nullptr || *raw == '\0') return fallback;
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(raw, raw + std::strlen(raw), value);
  if (ec != std::errc() || *ptr != '\0' || value == 0) {
    throw Error(std::string("CHARVANISH_MAX_ORDER must be a positive "
                            "integer, got '") +
                raw + "'");
  }
  return value;
}

bool max_order_overridden() {
  const char* raw = std::getenv("CHARVANISH_MAX_ORDER");
  return raw != nullptr && *raw != '\0';
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in.good()) throw Error("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// A group argument is a spec file when the path exists, otherwise the name
// of a built-in corpus group.
GroupSpec load_spec(const std::string& arg) {
  if (std::filesystem::exists(arg)) return parse_group_spec(read_file(arg));
  for (GroupSpec& spec : builtin_corpus()) {
    if (spec.name == arg) return std::move(spec);
  }
  throw Error("no such file or built-in group: " + arg);
}

void write_output(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << text;
  if (!out.good()) throw Error("cannot write " + out_path);
}

nlohmann::ordered_json integer_json(const Integer& n) {
  if (n.fits_slong_p()) return nlohmann::ordered_json(n.get_si());
  return nlohmann::ordered_json(n.get_str());
}

int cmd_table(const std::string& spec_arg, bool json, const std::string& out,
              std::uint64_t seed) {
  const GroupSpec spec = load_spec(spec_arg);
  const std::uint64_t bound = effective_max_order(kDefaultTableOrderBound);
  const PermutationGroup g = realize(spec, bound);
  const CharacterTable t = character_table(g, bound, seed);
  write_output(json ? render_json(t) : render_text(t), out);
  return 0;
}

int cmd_nonvanishing(const std::string& spec_arg, bool json,
                     const std::string& out, std::uint64_t seed) {
  const GroupSpec spec = load_spec(spec_arg);
  const std::uint64_t bound = effective_max_order(kDefaultTableOrderBound);
  const PermutationGroup g = realize(spec, bound);
  const CharacterTable t = character_table(g, bound, seed);
  const VanishingClassification c = classify(t);

  std::size_t vanishing = 0;
  for (std::size_t j = 0; j < t.class_count(); ++j) {
    if (c.is_vanishing(j)) ++vanishing;
  }
  const std::size_t nonvanishing = t.class_count() - vanishing;

  if (json) {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["group"] = spec.name;
    doc["order"] = integer_json(t.order);
    doc["classes"] = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < t.class_count(); ++j) {
      nlohmann::ordered_json cj;
      cj["index"] = j;
      cj["element_order"] = t.classes[j].element_order;
      cj["size"] = integer_json(t.classes[j].size);
      cj["representative"] = t.classes[j].representative.to_cycle_string();
      cj["vanishing"] = c.is_vanishing(j);
      cj["witnesses"] = c.witnesses[j];
      doc["classes"].push_back(std::move(cj));
    }
    doc["vanishing_classes"] = vanishing;
    doc["nonvanishing_classes"] = nonvanishing;
    write_output(doc.dump(2) + "\n", out);
    return 0;
  }

  std::ostringstream text;
  text << "group " << spec.name << " | order " << t.order.get_str()
       << " | classes " << t.class_count() << "\n";
  for (std::size_t j = 0; j < t.class_count(); ++j) {
    text << "class " << j << " | order " << t.classes[j].element_order
         << " | size " << t.classes[j].size << " | rep "
         << t.classes[j].representative.to_cycle_string() << " | ";
    if (c.is_vanishing(j)) {
      text << "vanishing | witnesses";
      for (std::size_t r : c.witnesses[j]) text << " " << r;
    } else {
      text << "nonvanishing";
    }
    text << "\n";
  }
  text << "vanishing " << vanishing << " | nonvanishing " << nonvanishing
       << "\n";
  write_output(text.str(), out);
  return 0;
}

int cmd_verify(const std::string& manifest_arg, bool json,
               const std::string& out_dir, int jobs, bool exhaustive,
               std::uint64_t seed) {
  CorpusManifest manifest;
  if (manifest_arg.empty()) {
    manifest.groups = builtin_corpus();
  } else {
    manifest = parse_manifest(read_file(manifest_arg));
  }
  if (max_order_overridden()) {
    manifest.max_order = effective_max_order(manifest.max_order);
  }
  if (!out_dir.empty()) manifest.out_dir = out_dir;

  VerifyOptions options;
  options.exhaustive = exhaustive;
  options.max_order = manifest.max_order;
  options.seed = seed;

  const RunResult result = run_verification(manifest, options, jobs);
  std::cout << (json ? run_json(result) : run_text(result));
  return result.all_pass() ? 0 : 1;
}

int cmd_decompose(std::uint64_t p, int n, std::vector<std::uint64_t> exponents,
                  bool json, bool randomized, std::uint64_t seed) {
  const RootMultiset s = RootMultiset::make(p, n, std::move(exponents));
  try {
    const BlockDecomposition d =
        randomized ? decompose(s, SelectionPolicy::kRandomized, seed)
                   : decompose(s);
    if (json) {
      nlohmann::ordered_json doc;
      doc["schema"] = 1;
      doc["p"] = s.p;
      doc["n"] = s.n;
      doc["modulus"] = s.modulus();
      doc["exponents"] = s.exponents;
      doc["vanishing"] = true;
      doc["blocks"] = nlohmann::ordered_json::array();
      for (const Block& b : d.blocks) {
        nlohmann::ordered_json bj;
        bj["level"] = b.level;
        bj["base"] = b.base;
        bj["members"] = b.members;
        doc["blocks"].push_back(std::move(bj));
      }
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "vanishing yes | p " << s.p << " | n " << s.n
                << " | entries " << s.size() << " | blocks " << d.blocks.size()
                << "\n";
      for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        const Block& b = d.blocks[i];
        std::cout << "block " << i << " | level " << b.level << " | base "
                  << b.base << " | members";
        for (std::uint64_t m : b.members) std::cout << " " << m;
        std::cout << "\n";
      }
    }
    return 0;
  } catch (const NotVanishing& e) {
    if (json) {
      nlohmann::ordered_json doc;
      doc["schema"] = 1;
      doc["p"] = s.p;
      doc["n"] = s.n;
      doc["modulus"] = s.modulus();
      doc["exponents"] = s.exponents;
      doc["vanishing"] = false;
      doc["sum"] = e.sum;
      std::cout << doc.dump(2) << "\n";
    } else {
      std::cout << "vanishing no | p " << s.p << " | n " << s.n
                << " | entries " << s.size() << " | sum " << e.sum << "\n";
    }
    return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "charvanish: exact character tables, vanishing-class analysis, and "
      "verification of non-vanishing properties for small permutation "
      "groups."};
  app.require_subcommand(1);

  CLI::App* table =
      app.add_subcommand("table", "Print the character table of one group");
  std::string table_spec;
  bool table_json = false;
  std::string table_out;
  std::uint64_t table_seed = 0;
  table->add_option("spec", table_spec,
                    "group-spec file or built-in group name")
      ->required();
  table->add_flag("--json", table_json, "emit JSON instead of text");
  table->add_option("--out", table_out, "write to this file instead of stdout");
  table->add_option("--seed", table_seed, "seed for the eigenspace splitting");

  CLI::App* nonvan = app.add_subcommand(
      "nonvanishing", "Classify the conjugacy classes of one group");
  std::string nonvan_spec;
  bool nonvan_json = false;
  std::string nonvan_out;
  std::uint64_t nonvan_seed = 0;
  nonvan->add_option("spec", nonvan_spec,
                     "group-spec file or built-in group name")
      ->required();
  nonvan->add_flag("--json", nonvan_json, "emit JSON instead of text");
  nonvan->add_option("--out", nonvan_out,
                     "write to this file instead of stdout");
  nonvan->add_option("--seed", nonvan_seed,
                     "seed for the eigenspace splitting");

  CLI::App* verify = app.add_subcommand(
      "verify",
      "Run the verification suite over a manifest (default: built-in corpus)");
  std::string verify_manifest;
  bool verify_json = false;
  std::string verify_out;
  int verify_jobs = 1;
  bool verify_exhaustive = false;
  std::uint64_t verify_seed = 0;
  verify->add_option("manifest", verify_manifest,
                     "manifest file (omit for the built-in corpus)");
  verify->add_flag("--json", verify_json, "emit the whole-run JSON document");
  verify->add_option("--out", verify_out,
                     "directory for per-group JSON reports");
  verify->add_option("--jobs", verify_jobs, "worker count (default 1)");
  verify->add_flag("--exhaustive", verify_exhaustive,
                   "sweep every normal-subgroup witness for groups of order "
                   "at most 100");
  verify->add_option("--seed", verify_seed,
                     "seed for the eigenspace splitting");

  CLI::App* dec = app.add_subcommand(
      "decompose",
      "Split a vanishing sum of p^n-th roots of unity into p-term blocks");
  std::uint64_t dec_p = 2;
  int dec_n = 1;
  std::vector<std::uint64_t> dec_exp;
  bool dec_json = false;
  bool dec_randomized = false;
  std::uint64_t dec_seed = 0;
  dec->add_option("--p", dec_p, "prime p")->required();
  dec->add_option("--n", dec_n, "exponent n of the modulus p^n")->required();
  dec->add_option("--exp", dec_exp,
                  "comma-separated exponents e of the roots zeta_{p^n}^e")
      ->required()
      ->delimiter(',');
  dec->add_flag("--json", dec_json, "emit JSON instead of text");
  dec->add_flag("--randomized", dec_randomized,
                "randomize the extraction order (same block multiset)");
  dec->add_option("--seed", dec_seed, "seed for --randomized");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (table->parsed()) {
      return cmd_table(table_spec, table_json, table_out, table_seed);
    }
    if (nonvan->parsed()) {
      return cmd_nonvanishing(nonvan_spec, nonvan_json, nonvan_out,
                              nonvan_seed);
    }
    if (verify->parsed()) {
      return cmd_verify(verify_manifest, verify_json, verify_out, verify_jobs,
                        verify_exhaustive, verify_seed);
    }
    if (dec->parsed()) {
      return cmd_decompose(dec_p, dec_n, std::move(dec_exp), dec_json,
                           dec_randomized, dec_seed);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
