// Command-line front end: batch analysis, re-evaluation of emitted tables,
// and small diagnostic subcommands (map, align, inspect-inventory).
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "phoncontrast/eval.hpp"
#include "phoncontrast/mapping.hpp"
#include "phoncontrast/pipeline.hpp"
#include "phoncontrast/tokenize.hpp"

namespace fs = std::filesystem;
using namespace phoncontrast;

namespace {

struct GlobalOpts {
  std::string feature_table;
  std::string diacritic_rules;
  std::vector<std::string> inventory_paths;
  std::string out_dir = "out";
  double w_nc = 0.0;
  double theta = 0.0;
  bool theta_set = false;
  uint64_t seed = 0;
  int bootstrap_iterations = 10000;
  std::vector<std::string> setting_names;
  bool strict = false;
  bool strict_equality = false;
  bool serial = false;
};

std::string data_root() {
  if (const char* env = std::getenv("PHONCONTRAST_DATA")) return env;
  return "data";
}

FeatureTable load_table(const GlobalOpts& g) {
  fs::path csv = g.feature_table.empty()
                     ? fs::path(data_root()) / "feature_table.csv"
                     : fs::path(g.feature_table);
  fs::path rules = g.diacritic_rules.empty()
                       ? csv.parent_path() / "diacritic_rules.csv"
                       : fs::path(g.diacritic_rules);
  if (g.diacritic_rules.empty() && !fs::exists(rules)) rules.clear();
  return FeatureTable::load(csv.string(), rules.string());
}

std::map<std::string, PhonemeInventory> load_inventories(const GlobalOpts& g) {
  std::vector<std::string> paths = g.inventory_paths;
  if (paths.empty()) {
    const fs::path dir = fs::path(data_root()) / "inventories";
    if (fs::is_directory(dir))
      for (const auto& e : fs::directory_iterator(dir))
        if (e.path().extension() == ".json") paths.push_back(e.path().string());
    std::sort(paths.begin(), paths.end());
  }
  if (paths.empty())
    throw ConfigError("no inventories found; pass --inventory or set "
                      "PHONCONTRAST_DATA");
  std::map<std::string, PhonemeInventory> out;
  for (const std::string& p : paths) {
    PhonemeInventory inv = load_inventory(p);
    if (!out.emplace(inv.language, std::move(inv)).second)
      throw ConfigError("duplicate inventory for language '" + inv.language +
                        "' (" + p + ")");
  }
  return out;
}

const PhonemeInventory& pick_language(
    const std::map<std::string, PhonemeInventory>& invs,
    const std::string& language) {
  auto it = invs.find(language);
  if (it == invs.end())
    throw ConfigError("no inventory configured for language '" + language +
                      "'");
  return it->second;
}

RunConfig make_run_config(const GlobalOpts& g) {
  RunConfig cfg;
  if (!g.setting_names.empty()) {
    cfg.settings.clear();
    for (const std::string& name : g.setting_names)
      cfg.settings.push_back(setting_from_string(name));
  }
  cfg.w_nc = g.w_nc;
  if (g.theta_set) cfg.theta_override = g.theta;
  cfg.seed = g.seed;
  cfg.bootstrap_iterations = g.bootstrap_iterations;
  cfg.strict = g.strict;
  cfg.strict_equality = g.strict_equality;
  cfg.exec = g.serial ? ExecMode::serial : ExecMode::parallel;
  return cfg;
}

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

SegmentSequence tokenize_for(const std::string& raw,
                             const PhonemeInventory& inv,
                             const FeatureTable& table) {
  const TokenizeResult tr = tokenize(raw, inv.cluster_whitelist());
  return split_diphthongs(tr.tokens, table.vowel_bases());
}

std::vector<std::string> feature_names_of(const std::vector<int>& idx,
                                          const FeatureTable& table) {
  std::vector<std::string> names;
  for (int i : idx) names.push_back(table.feature_names()[i]);
  return names;
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

// ---------------------------------------------------------------------------
// evaluate: rebuild the evaluation block from previously emitted tables.

std::vector<std::vector<std::string>> read_tsv(const std::string& path,
                                               const std::string& header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot open " + path);
  std::string line;
  if (!std::getline(in, line) || line != header)
    throw DataError(path + ": unexpected header");
  std::vector<std::vector<std::string>> rows;
  size_t lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::vector<std::string> cells;
    size_t start = 0;
    while (true) {
      const size_t tab = line.find('\t', start);
      if (tab == std::string::npos) {
        cells.push_back(line.substr(start));
        break;
      }
      cells.push_back(line.substr(start, tab - start));
      start = tab + 1;
    }
    const size_t want = 1 + std::count(header.begin(), header.end(), '\t');
    if (cells.size() < want)
      throw DataError(path + " line " + std::to_string(lineno) +
                      ": expected " + std::to_string(want) + " columns");
    rows.push_back(std::move(cells));
  }
  return rows;
}

std::optional<double> parse_opt(const std::string& s) {
  if (s == "NA") return std::nullopt;
  return std::stod(s);
}

struct SpeakerEntry {
  std::string language;
  Setting setting = Setting::raw;
  std::string speaker;
  int severity = 0;
  std::optional<double> per, pfer, phoncov;
};

struct UttEntry {
  std::string language;
  Setting setting = Setting::raw;
  int severity = 0;
  MetricCounts counts;
  std::optional<double> pfer_consonant, pfer_vowel;
};

struct CovEntry {
  std::string language;
  Setting setting = Setting::raw;
  int severity = 0;
  std::string phoneme;
  long covered = 0;
  long opportunities = 0;
};

constexpr const char* kSpeakerHeader =
    "language\tsetting\tspeaker_id\tseverity\tn_utterances\tn_excluded\t"
    "per_undefined\tpfer_undefined\tphoncov_undefined\tper\tpfer\tphoncov";
constexpr const char* kUtteranceHeader =
    "utterance_id\tspeaker_id\tlanguage\tseverity\tsetting\tn_ref\t"
    "n_aligned\tcorrect\tsubstitutions\tdeletions\tinsertions\tper\tpfer\t"
    "pfer_consonant\tpfer_vowel\tphoncov\texcluded\terror";
constexpr const char* kCoverageHeader =
    "language\tsetting\tseverity\tphoneme\tcovered\topportunities\t"
    "coverage_pct";

std::vector<SpeakerEntry> read_speakers(const std::string& path) {
  std::vector<SpeakerEntry> out;
  for (const auto& c : read_tsv(path, kSpeakerHeader)) {
    SpeakerEntry e;
    e.language = c[0];
    e.setting = setting_from_string(c[1]);
    e.speaker = c[2];
    e.severity = std::stoi(c[3]);
    e.per = parse_opt(c[9]);
    e.pfer = parse_opt(c[10]);
    e.phoncov = parse_opt(c[11]);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<UttEntry> read_utterances(const std::string& path) {
  std::vector<UttEntry> out;
  for (const auto& c : read_tsv(path, kUtteranceHeader)) {
    if (c[16] == "1") continue;  // excluded rows carry no metrics
    UttEntry e;
    e.language = c[2];
    e.severity = std::stoi(c[3]);
    e.setting = setting_from_string(c[4]);
    e.counts.n_ref = std::stol(c[5]);
    e.counts.n_aligned = std::stol(c[6]);
    e.counts.matches = std::stol(c[7]);
    e.counts.substitutions = std::stol(c[8]);
    e.counts.deletions = std::stol(c[9]);
    e.counts.insertions = std::stol(c[10]);
    e.pfer_consonant = parse_opt(c[13]);
    e.pfer_vowel = parse_opt(c[14]);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CovEntry> read_coverage(const std::string& path) {
  std::vector<CovEntry> out;
  for (const auto& c : read_tsv(path, kCoverageHeader)) {
    CovEntry e;
    e.language = c[0];
    e.setting = setting_from_string(c[1]);
    e.severity = std::stoi(c[2]);
    e.phoneme = c[3];
    e.covered = std::stol(c[4]);
    e.opportunities = std::stol(c[5]);
    out.push_back(std::move(e));
  }
  return out;
}

nlohmann::ordered_json tau_entry(const std::string& metric, Setting setting,
                                 const std::vector<double>& values,
                                 const std::vector<double>& sev) {
  nlohmann::ordered_json e;
  e["metric"] = metric;
  e["setting"] = to_string(setting);
  e["n"] = values.size();
  if (values.size() < 2) {
    e["tau"] = nullptr;
    e["note"] = "fewer than two speakers with a defined value";
    return e;
  }
  try {
    e["tau"] = kendall_tau(values, sev);
  } catch (const DataError& ex) {
    e["tau"] = nullptr;
    e["note"] = ex.what();
  }
  return e;
}

int run_evaluate(const GlobalOpts& g, const std::string& speakers_path,
                 const std::string& utterances_path,
                 const std::string& coverage_path, double healthy_floor) {
  const std::vector<SpeakerEntry> speakers = read_speakers(speakers_path);
  if (speakers.empty()) throw DataError(speakers_path + ": no speaker rows");
  std::vector<UttEntry> utts;
  if (!utterances_path.empty()) utts = read_utterances(utterances_path);
  std::vector<CovEntry> cov;
  if (!coverage_path.empty()) cov = read_coverage(coverage_path);

  std::set<std::string> languages;
  for (const SpeakerEntry& e : speakers) languages.insert(e.language);

  const char* metric_names[3] = {"per", "pfer", "phoncov"};
  auto metric_of = [&](const SpeakerEntry& e, int m) {
    return m == 0 ? e.per : m == 1 ? e.pfer : e.phoncov;
  };

  nlohmann::ordered_json report;
  nlohmann::ordered_json jin;
  jin["speakers"] = speakers_path;
  jin["utterances"] =
      utterances_path.empty() ? nlohmann::ordered_json(nullptr)
                              : nlohmann::ordered_json(utterances_path);
  jin["coverage"] = coverage_path.empty()
                        ? nlohmann::ordered_json(nullptr)
                        : nlohmann::ordered_json(coverage_path);
  report["inputs"] = jin;
  nlohmann::ordered_json jcfg;
  jcfg["seed"] = g.seed;
  jcfg["bootstrap_iterations"] = g.bootstrap_iterations;
  jcfg["healthy_floor"] = healthy_floor;
  report["config"] = jcfg;

  nlohmann::ordered_json jlangs = nlohmann::ordered_json::array();
  for (const std::string& language : languages) {
    nlohmann::ordered_json jl;
    jl["language"] = language;

    std::map<Setting, std::vector<SpeakerEntry>> by_setting;
    for (const SpeakerEntry& e : speakers)
      if (e.language == language) by_setting[e.setting].push_back(e);
    for (auto& [s, rows] : by_setting)
      std::sort(rows.begin(), rows.end(),
                [](const SpeakerEntry& a, const SpeakerEntry& b) {
                  return a.speaker < b.speaker;
                });

    nlohmann::ordered_json jcorr = nlohmann::ordered_json::array();
    for (const auto& [s, rows] : by_setting)
      for (int m = 0; m < 3; ++m) {
        std::vector<double> vals, sevs;
        for (const SpeakerEntry& e : rows)
          if (auto v = metric_of(e, m)) {
            vals.push_back(*v);
            sevs.push_back(static_cast<double>(e.severity));
          }
        jcorr.push_back(tau_entry(metric_names[m], s, vals, sevs));
      }
    jl["correlations"] = jcorr;

    nlohmann::ordered_json jboot = nlohmann::ordered_json::array();
    const auto raw_it = by_setting.find(Setting::raw);
    for (const auto& [s, rows] : by_setting) {
      if (s == Setting::raw || raw_it == by_setting.end()) continue;
      for (int m = 0; m < 3; ++m) {
        nlohmann::ordered_json e;
        e["metric"] = metric_names[m];
        e["setting"] = to_string(s);
        e["baseline"] = "raw";
        std::vector<double> a, b, sev;
        size_t ia = 0, ib = 0;
        const auto& ra = rows;
        const auto& rb = raw_it->second;
        while (ia < ra.size() && ib < rb.size()) {
          if (ra[ia].speaker < rb[ib].speaker) {
            ++ia;
          } else if (rb[ib].speaker < ra[ia].speaker) {
            ++ib;
          } else {
            const auto xa = metric_of(ra[ia], m);
            const auto xb = metric_of(rb[ib], m);
            if (xa && xb) {
              a.push_back(*xa);
              b.push_back(*xb);
              sev.push_back(static_cast<double>(ra[ia].severity));
            }
            ++ia;
            ++ib;
          }
        }
        try {
          const BootstrapResult br = bootstrap_tau_diff(
              a, b, sev, g.bootstrap_iterations, g.seed,
              g.serial ? ExecMode::serial : ExecMode::parallel);
          e["delta_tau"] = br.delta_tau_point;
          e["ci_low"] = br.ci_low;
          e["ci_high"] = br.ci_high;
          e["iterations"] = br.iterations;
          e["seed"] = br.seed;
          e["significant"] = br.significant;
        } catch (const Error& ex) {
          e["delta_tau"] = nullptr;
          e["note"] = ex.what();
        }
        jboot.push_back(e);
      }
    }
    jl["bootstrap"] = jboot;

    if (!utts.empty()) {
      auto jprofile = nlohmann::ordered_json::object();
      auto jpfer = nlohmann::ordered_json::object();
      std::map<Setting, std::vector<std::pair<int, MetricCounts>>> counts;
      std::map<Setting, std::vector<std::tuple<int, SegClass, double>>> pv;
      for (const UttEntry& u : utts) {
        if (u.language != language) continue;
        counts[u.setting].emplace_back(u.severity, u.counts);
        if (u.pfer_consonant)
          pv[u.setting].emplace_back(u.severity, SegClass::consonant,
                                     *u.pfer_consonant);
        if (u.pfer_vowel)
          pv[u.setting].emplace_back(u.severity, SegClass::vowel,
                                     *u.pfer_vowel);
      }
      for (const auto& [s, rows] : counts) {
        nlohmann::ordered_json jrows = nlohmann::ordered_json::array();
        for (const ErrorTypeRow& r : error_type_profile(rows)) {
          nlohmann::ordered_json jr;
          jr["severity"] = r.severity;
          jr["n_ref"] = r.n_ref_total;
          jr["correct_pct"] = r.correct_pct;
          jr["sub_pct"] = r.sub_pct;
          jr["del_pct"] = r.del_pct;
          jr["ins_pct"] = r.ins_pct;
          jrows.push_back(jr);
        }
        jprofile[to_string(s)] = jrows;
        nlohmann::ordered_json jcells = nlohmann::ordered_json::array();
        for (const PferCell& c : pfer_distribution_stats(pv[s])) {
          nlohmann::ordered_json jc;
          jc["severity"] = c.severity;
          jc["class"] = c.cls == SegClass::vowel ? "vowel" : "consonant";
          jc["n"] = c.n;
          jc["mean"] = c.mean;
          jc["median"] = c.median;
          jc["p10"] = c.p10;
          jc["p90"] = c.p90;
          jcells.push_back(jc);
        }
        jpfer[to_string(s)] = jcells;
      }
      jl["error_type_profile"] = jprofile;
      jl["pfer_distribution"] = jpfer;
    }

    if (!cov.empty()) {
      auto jslopes = nlohmann::ordered_json::object();
      std::map<Setting, std::map<std::string, std::map<int, double>>> pct;
      for (const CovEntry& c : cov) {
        if (c.language != language || c.opportunities == 0) continue;
        pct[c.setting][c.phoneme][c.severity] =
            100.0 * static_cast<double>(c.covered) /
            static_cast<double>(c.opportunities);
      }
      for (const auto& [s, table_pct] : pct) {
        std::map<int, double> speakers_per_severity;
        auto it = by_setting.find(s);
        if (it != by_setting.end())
          for (const SpeakerEntry& e : it->second)
            speakers_per_severity[e.severity] += 1.0;
        nlohmann::ordered_json jsl = nlohmann::ordered_json::array();
        for (const CoverageSlope& cs :
             coverage_slopes(table_pct, speakers_per_severity, healthy_floor)) {
          nlohmann::ordered_json jc;
          jc["phoneme"] = cs.phoneme;
          jc["slope"] = cs.slope;
          jc["coverage_first"] = cs.coverage_first;
          jc["coverage_last"] = cs.coverage_last;
          jsl.push_back(jc);
        }
        jslopes[to_string(s)] = jsl;
      }
      jl["coverage_slopes"] = jslopes;
    }

    jlangs.push_back(jl);
  }
  report["languages"] = jlangs;

  std::error_code ec;
  fs::create_directories(g.out_dir, ec);
  if (ec) throw ConfigError("cannot create output directory: " + g.out_dir);
  const fs::path out = fs::path(g.out_dir) / "evaluation.json";
  std::ofstream f(out, std::ios::binary);
  if (!f) throw ConfigError("cannot write " + out.string());
  f << report.dump(2) << "\n";
  std::cout << "wrote " << out.string() << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"phoncontrast: phoneme-level intelligibility metrics over "
               "IPA transcriptions"};
  app.require_subcommand(1);
  app.fallthrough();

  GlobalOpts g;
  app.add_option("--feature-table", g.feature_table,
                 "Feature table CSV (default: $PHONCONTRAST_DATA/"
                 "feature_table.csv)");
  app.add_option("--diacritic-rules", g.diacritic_rules,
                 "Diacritic rules CSV (default: alongside the feature table)");
  app.add_option("--inventory", g.inventory_paths,
                 "Inventory JSON, repeatable (default: "
                 "$PHONCONTRAST_DATA/inventories/*.json)");
  app.add_option("--out-dir", g.out_dir, "Output directory (default: out)");
  app.add_option("--w-nc", g.w_nc,
                 "Weight for non-contrastive features, in [0,1]");
  auto* theta_opt =
      app.add_option("--theta", g.theta,
                     "Substitution cutoff override, in (0,1] (default: the "
                     "90th-percentile rule)");
  app.add_option("--seed", g.seed, "Bootstrap seed");
  app.add_option("--bootstrap-iterations", g.bootstrap_iterations,
                 "Bootstrap resamples (default: 10000)");
  app.add_option("--setting", g.setting_names,
                 "Analysis setting, repeatable: raw, mapping, alignment, "
                 "mapping_alignment (default: all four)");
  auto* strict_flag =
      app.add_flag("--strict", g.strict, "Abort on the first utterance error");
  app.add_flag("--lenient{false}", g.strict,
               "Exclude failing utterances and continue (default)")
      ->excludes(strict_flag);
  app.add_flag("--strict-equality", g.strict_equality,
               "Classify substitutions by string equality instead of "
               "zero feature distance");
  app.add_flag("--serial", g.serial, "Disable parallel execution");

  std::string corpus_path;
  CLI::App* analyze =
      app.add_subcommand("analyze", "Score a corpus under the requested "
                                    "settings and write the report");
  analyze->add_option("corpus", corpus_path, "JSON-lines corpus")->required();

  std::string speakers_path, utterances_path, coverage_path;
  double healthy_floor = 80.0;
  CLI::App* evaluate = app.add_subcommand(
      "evaluate", "Recompute correlations, bootstrap comparisons, and "
                  "analysis tables from emitted TSVs");
  evaluate->add_option("--speakers", speakers_path, "per_speaker.tsv")
      ->required();
  evaluate->add_option("--utterances", utterances_path, "per_utterance.tsv");
  evaluate->add_option("--coverage", coverage_path, "phoneme_coverage.tsv");
  evaluate->add_option("--healthy-floor", healthy_floor,
                       "Minimum severity-0 coverage pct for slope inclusion");

  std::string language;
  std::vector<std::string> phrases;
  CLI::App* map_cmd = app.add_subcommand(
      "map", "Map IPA input onto a language's phoneme inventory");
  map_cmd->add_option("language", language, "Inventory language code")
      ->required();
  map_cmd->add_option("input", phrases, "IPA strings")->required();

  std::string ref_raw, hyp_raw;
  bool uniform = false;
  CLI::App* align_cmd =
      app.add_subcommand("align", "Align two IPA strings and print the ops");
  align_cmd->add_option("language", language, "Inventory language code")
      ->required();
  align_cmd->add_option("reference", ref_raw, "Reference IPA")->required();
  align_cmd->add_option("hypothesis", hyp_raw, "Hypothesis IPA")->required();
  align_cmd->add_flag("--uniform", uniform, "Use 0/1 costs instead of "
                                            "feature distances");

  bool audit = false;
  CLI::App* inspect = app.add_subcommand(
      "inspect-inventory", "Print contrastive sets, weights, and theta");
  inspect->add_option("language", language, "Inventory language code")
      ->required();
  inspect->add_flag("--audit", audit,
                    "Fail when the configured contrastive sets disagree "
                    "with a fresh scan");

  analyze->callback([&]() {
    const FeatureTable table = load_table(g);
    const auto invs = load_inventories(g);
    const RunConfig cfg = make_run_config(g);
    const auto records = ingest_corpus(corpus_path);
    const PipelineResult result = run_pipeline(cfg, records, table, invs);
    write_outputs(result, g.out_dir);
    for (const char* name : {"per_utterance.tsv", "per_speaker.tsv",
                             "phoneme_coverage.tsv", "report.json"})
      std::cout << "wrote " << (fs::path(g.out_dir) / name).string() << "\n";
  });

  evaluate->callback([&]() {
    run_evaluate(g, speakers_path, utterances_path, coverage_path,
                 healthy_floor);
  });

  map_cmd->callback([&]() {
    const FeatureTable table = load_table(g);
    const auto invs = load_inventories(g);
    const PhonemeInventory& inv = pick_language(invs, language);
    const LanguageWeights lw = make_language_weights(
        inv, table, g.w_nc,
        g.theta_set ? std::optional<double>(g.theta) : std::nullopt);
    std::cout << "input\tmapped\tdistance\trule\ttie_set\n";
    for (const std::string& phrase : phrases)
      for (const std::string& tok : tokenize_for(phrase, inv, table)) {
        const MappingTrace t = map_phone(tok, inv, table, lw);
        std::cout << t.input << '\t' << t.winner << '\t' << fmt6(t.distance)
                  << '\t' << to_string(t.rule) << '\t'
                  << join(t.tie_set, ",") << '\n';
      }
  });

  align_cmd->callback([&]() {
    const FeatureTable table = load_table(g);
    const auto invs = load_inventories(g);
    const PhonemeInventory& inv = pick_language(invs, language);
    const LanguageWeights lw = make_language_weights(
        inv, table, g.w_nc,
        g.theta_set ? std::optional<double>(g.theta) : std::nullopt);
    const SegmentSequence ref = tokenize_for(ref_raw, inv, table);
    const SegmentSequence hyp = tokenize_for(hyp_raw, inv, table);
    const ClassAwareDistance dist{&table, &lw};
    Alignment al = uniform ? align_uniform(ref, hyp)
                           : align_weighted(ref, hyp, dist, lw.theta);
    rescore(al, ref, hyp, dist, g.strict_equality);
    std::cout << "op\tref\thyp\tdistance\n";
    for (const AlignOp& op : al.ops) {
      const bool has_ref =
          op.kind != OpKind::ins && op.ref_index >= 0;
      const bool has_hyp =
          op.kind != OpKind::del && op.hyp_index >= 0;
      std::cout << to_string(op.kind) << '\t'
                << (has_ref ? ref[op.ref_index] : std::string("·")) << '\t'
                << (has_hyp ? hyp[op.hyp_index] : std::string("·")) << '\t'
                << fmt6(op.pair_distance) << '\n';
    }
    std::cout << "# total_cost=" << fmt6(al.total_cost)
              << " theta=" << fmt6(lw.theta) << " ops=" << al.ops.size()
              << "\n";
  });

  inspect->callback([&]() {
    const FeatureTable table = load_table(g);
    const auto invs = load_inventories(g);
    const PhonemeInventory& inv = pick_language(invs, language);
    const LanguageWeights lw = make_language_weights(
        inv, table, g.w_nc,
        g.theta_set ? std::optional<double>(g.theta) : std::nullopt);
    const auto cons_names = feature_names_of(lw.consonant_set, table);
    const auto vowel_names = feature_names_of(lw.vowel_set, table);
    const auto union_names = feature_names_of(lw.union_set, table);
    std::cout << "language: " << inv.language << "\n";
    std::cout << "consonants (" << inv.consonants.size()
              << "): " << join(inv.consonants, " ") << "\n";
    std::cout << "vowels (" << inv.vowels.size()
              << "): " << join(inv.vowels, " ") << "\n";
    std::cout << "contrastive consonant features (" << cons_names.size()
              << "): " << join(cons_names, " ") << "\n";
    std::cout << "contrastive vowel features (" << vowel_names.size()
              << "): " << join(vowel_names, " ") << "\n";
    std::cout << "union features (" << union_names.size()
              << "): " << join(union_names, " ") << "\n";
    std::cout << "w_nc: " << fmt6(lw.w_nc) << "\n";
    std::cout << "theta: " << fmt6(lw.theta) << "\n";
    if (audit) {
      const auto scan_c = identify_contrastive(inv, table, SegClass::consonant);
      const auto scan_v = identify_contrastive(inv, table, SegClass::vowel);
      bool ok = true;
      if (scan_c != cons_names) {
        ok = false;
        std::cout << "audit: consonant scan (" << scan_c.size()
                  << "): " << join(scan_c, " ") << "\n";
      }
      if (scan_v != vowel_names) {
        ok = false;
        std::cout << "audit: vowel scan (" << scan_v.size()
                  << "): " << join(scan_v, " ") << "\n";
      }
      if (!ok)
        throw DataError("configured contrastive sets disagree with the scan "
                        "for '" + inv.language + "'");
      std::cout << "audit: configured sets match the scan\n";
    }
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
