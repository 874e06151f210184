// combistat: batch front end for enumeration, verification, and series dumps.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "combistat/bijections.hpp"
#include "combistat/core.hpp"
#include "combistat/genfunc.hpp"
#include "combistat/ncseries.hpp"
#include "combistat/oracle.hpp"
#include "combistat/statistics.hpp"
#include "combistat/version.hpp"

namespace {

using combistat::Filling;
using combistat::IndexSet;
using combistat::Matching;
using combistat::PartitionShape;
using combistat::Permutation;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitCounterexample = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitCap = 4;
constexpr int kSizeCap = 9;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct CapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void require_cap(int value, const std::string& flag) {
  if (value > kSizeCap)
    throw CapError(flag + " exceeds the hard cap of " +
                   std::to_string(kSizeCap));
  if (value < 1) throw UsageError(flag + " must be at least 1");
}

// Empty path means stdout.
void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    if (!std::cout) throw IoError("failed writing to stdout");
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open output file: " + path);
  out << content;
  if (!out) throw IoError("failed writing output file: " + path);
}

std::string fnv1a64_hex(const std::string& data) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : data) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

// ---------------------------------------------------------------------------
// JSON object encodings
// ---------------------------------------------------------------------------

json encode_perm(const Permutation& p) { return json{{"word", p.word()}}; }

json encode_matching(const Matching& m) {
  json arcs = json::array();
  for (const auto& a : m.arcs()) arcs.push_back({a.opener, a.closer});
  return json{{"arcs", arcs}};
}

json encode_filling(const Filling& f) {
  json dots = json::array();
  for (const auto& [col, row] : f.cells()) dots.push_back({col, row});
  return json{{"columns", f.shape().column_heights()}, {"dots", dots}};
}

std::vector<int> decode_int_list(const json& doc, const std::string& field) {
  if (!doc.contains(field) || !doc[field].is_array())
    throw UsageError("input object needs an integer array field \"" + field +
                     "\"");
  return doc[field].get<std::vector<int>>();
}

Permutation decode_perm(const json& doc) {
  return Permutation(decode_int_list(doc, "word"));
}

IndexSet decode_set(const json& doc, const std::string& field) {
  if (!doc.contains(field)) return {};
  return combistat::make_set(doc[field].get<std::vector<int>>());
}

Matching decode_matching(const json& doc) {
  if (!doc.contains("arcs") || !doc["arcs"].is_array())
    throw UsageError("input object needs an \"arcs\" array of [opener,closer]");
  std::vector<std::pair<int, int>> pairs;
  for (const auto& entry : doc["arcs"]) {
    if (!entry.is_array() || entry.size() != 2)
      throw UsageError("each arc must be a two-element array");
    pairs.emplace_back(entry[0].get<int>(), entry[1].get<int>());
  }
  return Matching::from_pairs(pairs);
}

Filling decode_filling(const json& doc) {
  PartitionShape shape(decode_int_list(doc, "columns"));
  std::vector<std::pair<int, int>> cells;
  if (doc.contains("dots")) {
    for (const auto& entry : doc["dots"]) {
      if (!entry.is_array() || entry.size() != 2)
        throw UsageError("each dot must be a two-element array [column,row]");
      cells.emplace_back(entry[0].get<int>(), entry[1].get<int>());
    }
  }
  return Filling::from_cells(std::move(shape), std::move(cells));
}

// ---------------------------------------------------------------------------
// enumerate
// ---------------------------------------------------------------------------

struct EnumerateConfig {
  std::string family = "perms";
  int n = 0;
  std::string stats;
  std::string format = "csv";
  std::string out;
  bool objects = false;
  std::string generator = "fast";
  std::string cache_dir;
  int jobs = 0;
};

std::vector<std::string> split_schema(const std::string& stats) {
  std::vector<std::string> schema;
  std::string item;
  std::istringstream in(stats);
  while (std::getline(in, item, ','))
    if (!item.empty()) schema.push_back(item);
  return schema;
}

std::string object_line(const Permutation& p) {
  std::string s;
  for (int j = 1; j <= p.size(); ++j) {
    if (j > 1) s += ' ';
    s += std::to_string(p.value_at(j));
  }
  return s;
}

std::string object_line(const Matching& m) {
  std::string s;
  for (int i = 1; i <= m.size(); ++i) {
    if (i > 1) s += ' ';
    s += '(' + std::to_string(m.arc(i).opener) + ',' +
         std::to_string(m.arc(i).closer) + ')';
  }
  return s;
}

std::string enumerate_content(const EnumerateConfig& cfg) {
  const combistat::Family family = combistat::family_from_name(cfg.family);
  const bool filtered = cfg.generator == "filter";
  if (cfg.generator != "fast" && cfg.generator != "filter")
    throw UsageError("--generator must be fast or filter");
  if (filtered && family != combistat::Family::nlm_matchings)
    throw UsageError("--generator filter applies to the nlm family only");
  if (cfg.format != "csv" && cfg.format != "json")
    throw UsageError("--format must be csv or json");

  if (cfg.objects) {
    std::string csv = "n,object\n";
    json rows = json::array();
    if (family == combistat::Family::perms) {
      for (const auto& p : combistat::all_permutations(cfg.n)) {
        csv += std::to_string(cfg.n) + ",\"" + object_line(p) + "\"\n";
        rows.push_back(encode_perm(p));
      }
    } else {
      const auto objs =
          family == combistat::Family::all_matchings
              ? combistat::all_matchings(cfg.n)
              : (filtered
                     ? combistat::all_left_nesting_free_matchings_by_filtering(
                           cfg.n)
                     : combistat::all_left_nesting_free_matchings(cfg.n));
      for (const auto& m : objs) {
        csv += std::to_string(cfg.n) + ",\"" + object_line(m) + "\"\n";
        rows.push_back(encode_matching(m));
      }
    }
    if (cfg.format == "csv") return csv;
    json doc = {{"family", cfg.family}, {"n", cfg.n}, {"objects", rows}};
    return doc.dump(2) + "\n";
  }

  const std::vector<std::string> schema = split_schema(cfg.stats);
  if (schema.empty())
    throw UsageError("--stats is required unless --objects is given");
  const auto& known = family == combistat::Family::perms
                          ? combistat::perm_stat_names()
                          : combistat::match_stat_names();
  for (const auto& name : schema)
    if (std::find(known.begin(), known.end(), name) == known.end())
      throw UsageError("unknown statistic for family " + cfg.family + ": " +
                       name);

  combistat::Distribution dist;
  if (filtered) {
    dist.n = cfg.n;
    dist.key_schema = schema;
    for (const auto& m :
         combistat::all_left_nesting_free_matchings_by_filtering(cfg.n)) {
      const combistat::MatchStats st = combistat::match_stats(m);
      std::vector<std::string> key;
      for (const auto& name : schema)
        key.push_back(combistat::match_stat_value(st, name));
      ++dist.counts[key];
    }
  } else {
    dist = combistat::make_distribution(family, cfg.n, schema, cfg.jobs);
  }
  return cfg.format == "csv" ? dist.to_csv() : dist.to_json();
}

int run_enumerate(const EnumerateConfig& cfg) {
  require_cap(cfg.n, "--n");

  std::string cache_dir = cfg.cache_dir;
  if (cache_dir.empty())
    if (const char* env = std::getenv("COMBISTAT_CACHE_DIR")) cache_dir = env;

  std::filesystem::path cache_file;
  if (!cache_dir.empty()) {
    const std::string key = "enumerate|" + cfg.family + '|' +
                            std::to_string(cfg.n) + '|' + cfg.stats + '|' +
                            cfg.format + '|' +
                            (cfg.objects ? "objects" : "dist") + '|' +
                            cfg.generator + '|' +
                            std::string(combistat::kCodeVersion);
    cache_file =
        std::filesystem::path(cache_dir) / (fnv1a64_hex(key) + ".cache");
    std::error_code ec;
    if (std::filesystem::exists(cache_file, ec)) {
      std::ifstream in(cache_file, std::ios::binary);
      if (!in) throw IoError("cannot read cache file: " + cache_file.string());
      std::ostringstream buffer;
      buffer << in.rdbuf();
      write_output(cfg.out, buffer.str());
      return kExitOk;
    }
  }

  const std::string content = enumerate_content(cfg);
  if (!cache_file.empty()) {
    std::error_code ec;
    std::filesystem::create_directories(cache_file.parent_path(), ec);
    std::ofstream out(cache_file, std::ios::binary);
    if (!out) throw IoError("cannot write cache file: " + cache_file.string());
    out << content;
    if (!out) throw IoError("failed writing cache file: " + cache_file.string());
  }
  write_output(cfg.out, content);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyConfig {
  std::string theorem;
  int conjecture = 0;
  int n_max = 0;
  std::string report;
  int jobs = 0;
};

int run_verify(const VerifyConfig& cfg) {
  require_cap(cfg.n_max, "--n-max");
  if (cfg.theorem.empty() == (cfg.conjecture == 0))
    throw UsageError("give exactly one of --theorem or --conjecture");
  combistat::CheckReport report;
  try {
    report = cfg.theorem.empty()
                 ? combistat::check_conjecture(cfg.conjecture, cfg.n_max,
                                               cfg.jobs)
                 : combistat::check_theorem(cfg.theorem, cfg.n_max, cfg.jobs);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  write_output(cfg.report, report.to_json());
  std::cerr << report.check_id << ": "
            << (report.verified ? "verified" : "counterexample") << " in "
            << report.elapsed_seconds << " s\n";
  return report.verified ? kExitOk : kExitCounterexample;
}

// ---------------------------------------------------------------------------
// series
// ---------------------------------------------------------------------------

struct SeriesConfig {
  std::string formula;
  std::string variant;
  int n_max = 0;
  int max_degree = 0;
  std::string format;
  std::string out;
};

combistat::NCSeries brute_nc(const std::string& formula,
                             const std::string& variant, int max_degree) {
  using combistat::Letter;
  const bool silly = variant == "silly-s";
  const bool perms = formula == "nc-brute-perms";
  std::vector<Letter> raw_alphabet =
      silly ? std::vector<Letter>{Letter::x, Letter::y, Letter::t}
            : std::vector<Letter>{Letter::x, Letter::y, Letter::z, Letter::t};
  combistat::NCSeries raw =
      perms
          ? combistat::brute_series_perms(
                max_degree, raw_alphabet,
                [silly](const Permutation& p) {
                  const combistat::PermStats st = combistat::perm_stats(p);
                  combistat::WordAssignment a;
                  if (silly) {
                    a.marked = {{combistat::set_shifted(st.p_silly, 1),
                                 Letter::x},
                                {combistat::set_shifted(st.q_silly, 1),
                                 Letter::y}};
                    a.coeff = combistat::Poly::variable(combistat::Var::s)
                                  .pow(st.rmin_count());
                  } else {
                    a.marked = {{st.p, Letter::x},
                                {st.q, Letter::y},
                                {st.adjasc, Letter::z}};
                  }
                  return a;
                })
          : combistat::brute_series_matchings(
                max_degree, raw_alphabet,
                [silly](const Matching& m) {
                  const combistat::MatchStats st = combistat::match_stats(m);
                  combistat::WordAssignment a;
                  if (silly) {
                    a.marked = {{st.rne, Letter::x}, {st.rcr, Letter::y}};
                    a.coeff = combistat::Poly::variable(combistat::Var::s)
                                  .pow(st.min_count());
                  } else {
                    a.marked = {{st.rne, Letter::x},
                                {st.rcr_single, Letter::y},
                                {st.lrcr, Letter::z}};
                  }
                  return a;
                });
  if (!silly) return combistat::apply_pattern_substitution(raw);
  return combistat::substitute_letters(
      raw,
      {{Letter::x, {Letter::u, Letter::v, Letter::t}},
       {Letter::y, {Letter::v, Letter::t}}},
      combistat::main_alphabet());
}

int run_series(const SeriesConfig& cfg) {
  const bool has_n = cfg.n_max > 0 || cfg.max_degree > 0;
  if (!has_n) throw UsageError("give --n-max or --max-degree");
  if (cfg.n_max > 0 && cfg.max_degree > 0)
    throw UsageError("give only one of --n-max and --max-degree");
  const int depth = cfg.n_max > 0 ? cfg.n_max : cfg.max_degree;
  require_cap(depth, cfg.n_max > 0 ? "--n-max" : "--max-degree");

  const bool is_nc = cfg.formula.rfind("nc-", 0) == 0;
  if (!cfg.format.empty()) {
    if (is_nc && cfg.format != "ncs-text")
      throw UsageError("noncommutative formulas use --format ncs-text");
    if (!is_nc && cfg.format != "csv")
      throw UsageError("commutative formulas use --format csv");
  }

  std::string content;
  if (cfg.formula == "fishburn") {
    if (!cfg.variant.empty())
      throw UsageError("fishburn takes no --variant");
    const std::vector<combistat::Int> values = combistat::eval_fishburn(depth);
    for (int i = 0; i < depth; ++i) {
      if (i > 0) content += ',';
      content += values[static_cast<std::size_t>(i)].str();
    }
    content += '\n';
  } else if (cfg.formula == "main-xyz") {
    if (!cfg.variant.empty()) throw UsageError("main-xyz takes no --variant");
    content = combistat::eval_theorem_main_xyz(depth).to_csv();
  } else if (cfg.formula == "main-sxy") {
    if (!cfg.variant.empty()) throw UsageError("main-sxy takes no --variant");
    content = combistat::eval_theorem_main_sxy(depth).to_csv();
  } else if (cfg.formula == "conj20") {
    if (!cfg.variant.empty()) throw UsageError("conj20 takes no --variant");
    content = combistat::eval_conj20_formula(depth).to_csv();
  } else if (cfg.formula == "leftcross") {
    combistat::LeftCrossVariant variant =
        combistat::LeftCrossVariant::xyz_upsilon;
    if (cfg.variant == "sxy")
      variant = combistat::LeftCrossVariant::sxy_upsilon;
    else if (!cfg.variant.empty() && cfg.variant != "xyz")
      throw UsageError("leftcross --variant must be xyz or sxy");
    content = combistat::eval_leftcrossing(depth, variant).to_csv();
  } else if (cfg.formula == "conj21") {
    if (!cfg.variant.empty()) throw UsageError("conj21 takes no --variant");
    content = "n,side,monomial,coefficient\n";
    for (int n = 1; n <= depth; ++n) {
      const auto [perm_side, match_side] =
          combistat::eval_conj21_identity(n);
      for (const auto& [mono, coeff] : perm_side.terms())
        content += std::to_string(n) + ",perms," + mono.to_string() + ',' +
                   coeff.str() + '\n';
      for (const auto& [mono, coeff] : match_side.terms())
        content += std::to_string(n) + ",matchings," + mono.to_string() +
                   ',' + coeff.str() + '\n';
    }
  } else if (cfg.formula == "nc-main") {
    combistat::MainVariant variant = combistat::MainVariant::general_w;
    if (cfg.variant == "silly-s")
      variant = combistat::MainVariant::silly_s;
    else if (cfg.variant == "full")
      variant = combistat::MainVariant::full;
    else if (!cfg.variant.empty() && cfg.variant != "general-w")
      throw UsageError("nc-main --variant must be general-w, silly-s, or full");
    content =
        combistat::eval_main(depth, variant, combistat::ExtremeSide::max_side)
            .to_text();
  } else if (cfg.formula == "nc-ascbottom") {
    if (!cfg.variant.empty())
      throw UsageError("nc-ascbottom takes no --variant");
    content = combistat::eval_ascentbottom_nc(depth).to_text();
  } else if (cfg.formula == "nc-brute-perms" ||
             cfg.formula == "nc-brute-matchings") {
    if (!cfg.variant.empty() && cfg.variant != "general-w" &&
        cfg.variant != "silly-s")
      throw UsageError("brute formulas take --variant general-w or silly-s");
    content = brute_nc(cfg.formula,
                       cfg.variant.empty() ? "general-w" : cfg.variant, depth)
                  .to_text();
  } else {
    throw UsageError("unknown formula: " + cfg.formula);
  }
  write_output(cfg.out, content);
  return kExitOk;
}

// ---------------------------------------------------------------------------
// bijection
// ---------------------------------------------------------------------------

struct BijectionConfig {
  std::string map;
};

int run_bijection(const BijectionConfig& cfg) {
  json doc;
  try {
    doc = json::parse(std::cin);
  } catch (const json::exception& e) {
    throw UsageError(std::string("stdin is not valid JSON: ") + e.what());
  }

  json out;
  const std::string& name = cfg.map;
  if (name == "phi") {
    const combistat::BarredPermutation image =
        combistat::flat_to_barred(decode_filling(doc));
    out = encode_perm(image.base());
    out["bars"] = image.bars();
  } else if (name == "phi_inv") {
    out = encode_filling(combistat::barred_to_flat(
        combistat::BarredPermutation(decode_perm(doc),
                                     decode_set(doc, "bars"))));
  } else if (name == "phi_silly") {
    const combistat::HattedPermutation image =
        combistat::flat_to_hatted(decode_filling(doc));
    out = encode_perm(image.base());
    out["hats"] = image.hats();
  } else if (name == "phi_silly_inv") {
    out = encode_filling(combistat::hatted_to_flat(
        combistat::HattedPermutation(decode_perm(doc),
                                     decode_set(doc, "hats"))));
  } else if (name == "psi") {
    out = encode_filling(combistat::matching_to_flat(decode_matching(doc)));
  } else if (name == "psi_inv") {
    out = encode_matching(combistat::flat_to_matching(decode_filling(doc)));
  } else if (name == "f") {
    const combistat::MarkedMatching image =
        combistat::flat_to_marked(decode_filling(doc));
    out = encode_matching(image.base());
    out["marks"] = image.marks();
  } else if (name == "f_inv") {
    out = encode_filling(combistat::marked_to_flat(combistat::MarkedMatching(
        decode_matching(doc), decode_set(doc, "marks"))));
  } else if (name == "steepen") {
    out = encode_filling(combistat::steepen(decode_filling(doc)));
  } else if (name == "flatten") {
    out = encode_filling(combistat::flatten(decode_filling(doc)));
  } else if (name == "g") {
    out = encode_filling(combistat::staircase_to_enriched(decode_filling(doc)));
  } else if (name == "g_inv") {
    out = encode_filling(combistat::enriched_to_staircase(decode_filling(doc)));
  } else if (name == "transpose") {
    out = encode_filling(combistat::transpose_square(decode_filling(doc)));
  } else if (name == "iota") {
    out = encode_filling(combistat::staircase_involution(decode_filling(doc)));
  } else if (name == "leftcross_to_perm") {
    out = encode_perm(combistat::left_crossing_permutation(decode_matching(doc)));
  } else {
    throw UsageError("unknown map: " + name);
  }
  std::cout << out.dump() << '\n';
  if (!std::cout) throw IoError("failed writing to stdout");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exhaustive statistics engine for matchings and permutations"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(combistat::kCodeVersion));

  EnumerateConfig ecfg;
  CLI::App* enumerate = app.add_subcommand(
      "enumerate", "write a statistic distribution or raw object list");
  enumerate->add_option("--family", ecfg.family,
                        "object family: perms, nlm, matchings");
  enumerate->add_option("--n", ecfg.n, "object size")->required();
  enumerate->add_option("--stats", ecfg.stats,
                        "comma-separated statistic schema");
  enumerate->add_option("--format", ecfg.format, "csv or json");
  enumerate->add_option("--out", ecfg.out, "output file (default stdout)");
  enumerate->add_flag("--objects", ecfg.objects,
                      "list the objects themselves instead of a distribution");
  enumerate->add_option("--generator", ecfg.generator,
                        "nlm route: fast (insertion tables) or filter");
  enumerate->add_option("--cache-dir", ecfg.cache_dir,
                        "cache directory (default $COMBISTAT_CACHE_DIR)");
  enumerate->add_option("--jobs", ecfg.jobs, "worker threads (0 = cores)");

  VerifyConfig vcfg;
  CLI::App* verify =
      app.add_subcommand("verify", "run an oracle check and write its report");
  verify->add_option("--theorem", vcfg.theorem, "theorem check id");
  verify->add_option("--conjecture", vcfg.conjecture, "conjecture id (1 or 2)");
  verify->add_option("--n-max", vcfg.n_max, "largest size to check")
      ->required();
  verify->add_option("--report", vcfg.report, "report file (default stdout)");
  verify->add_option("--jobs", vcfg.jobs, "worker threads (0 = cores)");

  SeriesConfig scfg;
  CLI::App* series =
      app.add_subcommand("series", "evaluate a closed form or brute series");
  series->add_option("--formula", scfg.formula,
                     "fishburn, main-xyz, main-sxy, conj20, conj21, leftcross,"
                     " nc-main, nc-ascbottom, nc-brute-perms,"
                     " nc-brute-matchings")
      ->required();
  series->add_option("--variant", scfg.variant, "formula variant");
  series->add_option("--n-max", scfg.n_max, "truncation order");
  series->add_option("--max-degree", scfg.max_degree,
                     "truncation order (alias for noncommutative formulas)");
  series->add_option("--format", scfg.format, "csv or ncs-text");
  series->add_option("--out", scfg.out, "output file (default stdout)");

  BijectionConfig bcfg;
  CLI::App* bijection = app.add_subcommand(
      "bijection", "apply a named map to a JSON object read from stdin");
  bijection
      ->add_option("--map", bcfg.map,
                   "phi, phi_inv, phi_silly, phi_silly_inv, psi, psi_inv, f,"
                   " f_inv, steepen, flatten, g, g_inv, transpose, iota,"
                   " leftcross_to_perm")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(enumerate)) return run_enumerate(ecfg);
    if (app.got_subcommand(verify)) return run_verify(vcfg);
    if (app.got_subcommand(series)) return run_series(scfg);
    if (app.got_subcommand(bijection)) return run_bijection(bcfg);
    throw UsageError("no subcommand given");
  } catch (const CapError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCap;
  } catch (const IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitIo;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
