#include "phoncontrast/pipeline.hpp"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#include "phoncontrast/alignment.hpp"
#include "phoncontrast/mapping.hpp"
#include "phoncontrast/tokenize.hpp"

namespace phoncontrast {

const char* to_string(Setting s) {
  switch (s) {
    case Setting::raw:
      return "raw";
    case Setting::mapping:
      return "mapping";
    case Setting::alignment:
      return "alignment";
    case Setting::mapping_alignment:
      return "mapping_alignment";
  }
  return "?";
}

Setting setting_from_string(const std::string& s) {
  if (s == "raw") return Setting::raw;
  if (s == "mapping") return Setting::mapping;
  if (s == "alignment") return Setting::alignment;
  if (s == "mapping_alignment") return Setting::mapping_alignment;
  throw ConfigError("unknown setting '" + s + "'");
}

std::vector<UtteranceRecord> ingest_corpus(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open corpus: " + path);

  std::vector<UtteranceRecord> out;
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw DataError("corpus line " + std::to_string(lineno) +
                      ": invalid JSON: " + e.what());
    }
    auto need_string = [&](const char* key) {
      if (!j.contains(key) || !j[key].is_string())
        throw DataError("corpus line " + std::to_string(lineno) +
                        ": missing string field '" + key + "'");
      return j[key].get<std::string>();
    };
    UtteranceRecord r;
    r.utterance_id = need_string("utterance_id");
    r.speaker_id = need_string("speaker_id");
    r.language = need_string("language");
    if (r.utterance_id.empty() || r.speaker_id.empty() || r.language.empty())
      throw DataError("corpus line " + std::to_string(lineno) +
                      ": empty identifier field");
    if (!j.contains("severity") || !j["severity"].is_number_integer() ||
        j["severity"].get<int>() < 0)
      throw DataError("corpus line " + std::to_string(lineno) +
                      ": 'severity' must be a nonnegative integer");
    r.severity = j["severity"].get<int>();
    r.reference_ipa = need_string("reference_ipa");
    r.hypothesis_ipa = need_string("hypothesis_ipa");
    out.push_back(std::move(r));
  }
  return out;
}

namespace {

struct LanguageContext {
  const PhonemeInventory* inv = nullptr;
  LanguageWeights weights;
  std::vector<std::string> whitelist;
  std::unordered_set<char32_t> vowel_bases;
};

struct TokenizedRecord {
  SegmentSequence ref, hyp;
  long discarded = 0;
  std::string error;
};

struct WorkOut {
  UtteranceRow row;
  std::vector<std::string> ref_unique, hyp_unique;
};

bool uses_mapping(Setting s) {
  return s == Setting::mapping || s == Setting::mapping_alignment;
}

bool uses_weighted(Setting s) {
  return s == Setting::alignment || s == Setting::mapping_alignment;
}

std::string sanitize(std::string s) {
  for (char& c : s)
    if (c == '\t' || c == '\n' || c == '\r') c = ' ';
  return s;
}

std::string fmt6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

std::string fmt6(const std::optional<double>& v) {
  return v ? fmt6(*v) : std::string("NA");
}

const char* class_name(SegClass c) {
  return c == SegClass::vowel ? "vowel" : "consonant";
}

std::vector<std::string> unique_sorted(const SegmentSequence& seq) {
  std::set<std::string> s(seq.begin(), seq.end());
  return {s.begin(), s.end()};
}

struct SpeakerKey {
  std::string language;
  Setting setting;
  std::string speaker_id;
  bool operator<(const SpeakerKey& o) const {
    return std::tie(language, setting, speaker_id) <
           std::tie(o.language, o.setting, o.speaker_id);
  }
};

struct CoverageKey {
  std::string language;
  Setting setting;
  int severity;
  std::string phoneme;
  bool operator<(const CoverageKey& o) const {
    return std::tie(language, setting, severity, phoneme) <
           std::tie(o.language, o.setting, o.severity, o.phoneme);
  }
};

nlohmann::ordered_json correlation_entry(
    const std::string& metric, Setting setting,
    const std::vector<double>& values, const std::vector<double>& sev) {
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

}  // namespace

PipelineResult run_pipeline(const RunConfig& cfg,
                            const std::vector<UtteranceRecord>& records,
                            const FeatureTable& table,
                            const std::map<std::string, PhonemeInventory>& invs) {
  if (records.empty()) throw DataError("no utterances to process");
  std::vector<Setting> settings = cfg.settings;
  std::sort(settings.begin(), settings.end());
  settings.erase(std::unique(settings.begin(), settings.end()),
                 settings.end());
  if (settings.empty()) throw ConfigError("no settings requested");

  // Language contexts.
  std::map<std::string, LanguageContext> contexts;
  for (const auto& r : records) {
    if (contexts.count(r.language)) continue;
    auto it = invs.find(r.language);
    if (it == invs.end())
      throw ConfigError("no inventory configured for language '" +
                        r.language + "'");
    LanguageContext ctx;
    ctx.inv = &it->second;
    ctx.weights =
        make_language_weights(it->second, table, cfg.w_nc, cfg.theta_override);
    ctx.whitelist = it->second.cluster_whitelist();
    ctx.vowel_bases = table.vowel_bases();
    contexts.emplace(r.language, std::move(ctx));
  }

  // One severity per speaker.
  std::map<std::pair<std::string, std::string>, int> speaker_severity;
  for (const auto& r : records) {
    auto key = std::make_pair(r.language, r.speaker_id);
    auto [it, inserted] = speaker_severity.emplace(key, r.severity);
    if (!inserted && it->second != r.severity)
      throw DataError("speaker '" + r.speaker_id +
                      "' appears with severities " +
                      std::to_string(it->second) + " and " +
                      std::to_string(r.severity));
  }

  const bool parallel = cfg.exec == ExecMode::parallel;
  const int n_rec = static_cast<int>(records.size());

  // Tokenization pass, shared across settings.
  std::vector<TokenizedRecord> toks(records.size());
#ifdef PHONCONTRAST_OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (int i = 0; i < n_rec; ++i) {
    const UtteranceRecord& r = records[i];
    const LanguageContext& ctx = contexts.at(r.language);
    TokenizedRecord& t = toks[i];
    try {
      TokenizeResult tr = tokenize(r.reference_ipa, ctx.whitelist);
      TokenizeResult th = tokenize(r.hypothesis_ipa, ctx.whitelist);
      t.ref = split_diphthongs(tr.tokens, ctx.vowel_bases);
      t.hyp = split_diphthongs(th.tokens, ctx.vowel_bases);
      t.discarded =
          static_cast<long>(tr.discarded.size() + th.discarded.size());
    } catch (const DataError& e) {
      t.error = e.what();
    }
  }

  // Scoring pass over (setting, record) pairs.
  const int n_work = n_rec * static_cast<int>(settings.size());
  std::vector<WorkOut> work(n_work);
#ifdef PHONCONTRAST_OPENMP
#pragma omp parallel for schedule(static) if (parallel)
#endif
  for (int widx = 0; widx < n_work; ++widx) {
    const Setting setting = settings[widx / n_rec];
    const int ridx = widx % n_rec;
    const UtteranceRecord& r = records[ridx];
    const LanguageContext& ctx = contexts.at(r.language);
    WorkOut& out = work[widx];
    UtteranceRow& row = out.row;
    row.utterance_id = r.utterance_id;
    row.speaker_id = r.speaker_id;
    row.language = r.language;
    row.severity = r.severity;
    row.setting = setting;

    const TokenizedRecord& t = toks[ridx];
    if (!t.error.empty()) {
      row.excluded = true;
      row.error = t.error;
      continue;
    }
    try {
      const ClassAwareDistance dist{&table, &ctx.weights};
      SegmentSequence hyp_used = t.hyp;
      if (uses_mapping(setting))
        hyp_used =
            map_sequence(t.hyp, *ctx.inv, table, ctx.weights, true).mapped;

      Alignment al =
          uses_weighted(setting)
              ? align_weighted(t.ref, hyp_used, dist, ctx.weights.theta)
              : align_uniform(t.ref, hyp_used);
      rescore(al, t.ref, hyp_used, dist, cfg.strict_equality);

      row.counts = count_ops(al, static_cast<long>(t.ref.size()));
      row.per = per(al, row.counts.n_ref);
      row.pfer = pfer(al);
      row.pfer_consonant =
          pfer_class(al, t.ref, hyp_used, SegClass::consonant, table);
      row.pfer_vowel = pfer_class(al, t.ref, hyp_used, SegClass::vowel, table);
      row.phoncov = phoncov(t.ref, hyp_used);
      out.ref_unique = unique_sorted(t.ref);
      out.hyp_unique = unique_sorted(hyp_used);
    } catch (const DataError& e) {
      row = UtteranceRow{};
      row.utterance_id = r.utterance_id;
      row.speaker_id = r.speaker_id;
      row.language = r.language;
      row.severity = r.severity;
      row.setting = setting;
      row.excluded = true;
      row.error = e.what();
    }
  }

  if (cfg.strict) {
    for (int ridx = 0; ridx < n_rec; ++ridx)
      for (size_t sidx = 0; sidx < settings.size(); ++sidx) {
        const UtteranceRow& row = work[sidx * records.size() + ridx].row;
        if (row.excluded)
          throw DataError("utterance '" + row.utterance_id +
                          "': " + row.error);
      }
  }

  // Phoneme coverage per severity. Runs before the rows are moved out of
  // the work slots.
  std::map<CoverageKey, std::pair<long, long>> cov;  // covered, opportunities
  for (const WorkOut& w : work) {
    if (w.row.excluded) continue;
    std::unordered_set<std::string> hyp_set(w.hyp_unique.begin(),
                                            w.hyp_unique.end());
    for (const std::string& p : w.ref_unique) {
      auto& cell =
          cov[CoverageKey{w.row.language, w.row.setting, w.row.severity, p}];
      ++cell.second;
      if (hyp_set.count(p)) ++cell.first;
    }
  }

  PipelineResult result;
  for (const auto& [key, cell] : cov) {
    CoverageRow crow;
    crow.language = key.language;
    crow.setting = key.setting;
    crow.severity = key.severity;
    crow.phoneme = key.phoneme;
    crow.covered = cell.first;
    crow.opportunities = cell.second;
    result.coverage.push_back(std::move(crow));
  }

  result.utterances.reserve(work.size());
  for (WorkOut& w : work) result.utterances.push_back(std::move(w.row));
  std::sort(result.utterances.begin(), result.utterances.end(),
            [](const UtteranceRow& a, const UtteranceRow& b) {
              return std::tie(a.language, a.setting, a.speaker_id,
                              a.utterance_id) <
                     std::tie(b.language, b.setting, b.speaker_id,
                              b.utterance_id);
            });

  // Speaker aggregation.
  std::map<SpeakerKey, std::vector<UtteranceMetrics>> by_speaker;
  std::map<SpeakerKey, int> excluded_of;
  for (const UtteranceRow& row : result.utterances) {
    const SpeakerKey key{row.language, row.setting, row.speaker_id};
    if (row.excluded) {
      ++excluded_of[key];
      by_speaker[key];
      continue;
    }
    UtteranceMetrics m;
    m.utterance_id = row.utterance_id;
    m.counts = row.counts;
    m.per = row.per;
    m.pfer = row.pfer;
    m.pfer_consonant = row.pfer_consonant;
    m.pfer_vowel = row.pfer_vowel;
    m.phoncov = row.phoncov;
    by_speaker[key].push_back(std::move(m));
  }
  std::map<std::string, std::map<Setting, int>> dropped_speakers;
  for (const auto& [key, metrics] : by_speaker) {
    const int severity =
        speaker_severity.at(std::make_pair(key.language, key.speaker_id));
    auto rep = aggregate_speaker(metrics, key.speaker_id, severity);
    if (!rep) {
      ++dropped_speakers[key.language][key.setting];
      continue;
    }
    SpeakerRow srow;
    srow.language = key.language;
    srow.setting = key.setting;
    srow.report = std::move(*rep);
    auto ex = excluded_of.find(key);
    srow.n_excluded = ex == excluded_of.end() ? 0 : ex->second;
    result.speakers.push_back(std::move(srow));
  }

  // Report.
  nlohmann::ordered_json report;
  nlohmann::ordered_json jcfg;
  nlohmann::ordered_json jsettings = nlohmann::ordered_json::array();
  for (Setting s : settings) jsettings.push_back(to_string(s));
  jcfg["settings"] = jsettings;
  jcfg["w_nc"] = cfg.w_nc;
  if (cfg.theta_override)
    jcfg["theta_override"] = *cfg.theta_override;
  else
    jcfg["theta_override"] = nullptr;
  jcfg["seed"] = cfg.seed;
  jcfg["bootstrap_iterations"] = cfg.bootstrap_iterations;
  jcfg["strict"] = cfg.strict;
  jcfg["strict_equality"] = cfg.strict_equality;
  report["config"] = jcfg;

  nlohmann::ordered_json jlangs = nlohmann::ordered_json::array();
  for (const auto& [language, ctx] : contexts) {
    nlohmann::ordered_json jl;
    jl["language"] = language;
    jl["theta"] = ctx.weights.theta;

    std::vector<std::string> speakers;
    long n_utt = 0, discarded = 0;
    for (size_t i = 0; i < records.size(); ++i) {
      if (records[i].language != language) continue;
      ++n_utt;
      discarded += toks[i].discarded;
      speakers.push_back(records[i].speaker_id);
    }
    std::sort(speakers.begin(), speakers.end());
    speakers.erase(std::unique(speakers.begin(), speakers.end()),
                   speakers.end());
    jl["n_speakers"] = speakers.size();
    jl["n_utterances"] = n_utt;
    jl["discarded_marks"] = discarded;

    nlohmann::ordered_json jexcl;
    for (Setting s : settings) {
      int n = 0;
      for (const UtteranceRow& row : result.utterances)
        if (row.language == language && row.setting == s && row.excluded) ++n;
      jexcl[to_string(s)] = n;
    }
    jl["excluded_utterances"] = jexcl;
    nlohmann::ordered_json jdropped;
    for (Setting s : settings) {
      auto li = dropped_speakers.find(language);
      int n = 0;
      if (li != dropped_speakers.end()) {
        auto si = li->second.find(s);
        if (si != li->second.end()) n = si->second;
      }
      jdropped[to_string(s)] = n;
    }
    jl["dropped_speakers"] = jdropped;

    // Per-setting speaker vectors, ordered by speaker id.
    struct SpeakerVectors {
      std::vector<std::string> ids;
      std::vector<double> per, pfer, phoncov, severity;
      std::vector<bool> per_ok, pfer_ok, phoncov_ok;
    };
    std::map<Setting, SpeakerVectors> vectors;
    for (Setting s : settings) {
      SpeakerVectors v;
      for (const SpeakerRow& srow : result.speakers) {
        if (srow.language != language || srow.setting != s) continue;
        v.ids.push_back(srow.report.speaker_id);
        v.severity.push_back(static_cast<double>(srow.report.severity));
        v.per.push_back(srow.report.per.value_or(0.0));
        v.per_ok.push_back(srow.report.per.has_value());
        v.pfer.push_back(srow.report.pfer.value_or(0.0));
        v.pfer_ok.push_back(srow.report.pfer.has_value());
        v.phoncov.push_back(srow.report.phoncov.value_or(0.0));
        v.phoncov_ok.push_back(srow.report.phoncov.has_value());
      }
      vectors.emplace(s, std::move(v));
    }

    const char* metric_names[3] = {"per", "pfer", "phoncov"};
    auto metric_of = [](const SpeakerVectors& v, int m, size_t i,
                        bool* ok) -> double {
      switch (m) {
        case 0:
          *ok = v.per_ok[i];
          return v.per[i];
        case 1:
          *ok = v.pfer_ok[i];
          return v.pfer[i];
        default:
          *ok = v.phoncov_ok[i];
          return v.phoncov[i];
      }
    };

    nlohmann::ordered_json jcorr = nlohmann::ordered_json::array();
    for (Setting s : settings) {
      const SpeakerVectors& v = vectors.at(s);
      for (int m = 0; m < 3; ++m) {
        std::vector<double> vals, sevs;
        for (size_t i = 0; i < v.ids.size(); ++i) {
          bool ok = false;
          const double value = metric_of(v, m, i, &ok);
          if (!ok) continue;
          vals.push_back(value);
          sevs.push_back(v.severity[i]);
        }
        jcorr.push_back(correlation_entry(metric_names[m], s, vals, sevs));
      }
    }
    jl["correlations"] = jcorr;

    nlohmann::ordered_json jboot = nlohmann::ordered_json::array();
    const bool have_raw = vectors.count(Setting::raw) > 0;
    for (Setting s : settings) {
      if (s == Setting::raw || !have_raw) continue;
      const SpeakerVectors& va = vectors.at(s);
      const SpeakerVectors& vb = vectors.at(Setting::raw);
      for (int m = 0; m < 3; ++m) {
        nlohmann::ordered_json e;
        e["metric"] = metric_names[m];
        e["setting"] = to_string(s);
        e["baseline"] = "raw";
        std::vector<double> a, b, sev;
        size_t ia = 0, ib = 0;
        while (ia < va.ids.size() && ib < vb.ids.size()) {
          if (va.ids[ia] < vb.ids[ib]) {
            ++ia;
          } else if (vb.ids[ib] < va.ids[ia]) {
            ++ib;
          } else {
            bool oka = false, okb = false;
            const double xa = metric_of(va, m, ia, &oka);
            const double xb = metric_of(vb, m, ib, &okb);
            if (oka && okb) {
              a.push_back(xa);
              b.push_back(xb);
              sev.push_back(va.severity[ia]);
            }
            ++ia;
            ++ib;
          }
        }
        try {
          const BootstrapResult br = bootstrap_tau_diff(
              a, b, sev, cfg.bootstrap_iterations, cfg.seed, cfg.exec);
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

    nlohmann::ordered_json jprofile, jpfer, jslopes;
    for (Setting s : settings) {
      std::vector<std::pair<int, MetricCounts>> counts;
      std::vector<std::tuple<int, SegClass, double>> pfer_values;
      for (const UtteranceRow& row : result.utterances) {
        if (row.language != language || row.setting != s || row.excluded)
          continue;
        counts.emplace_back(row.severity, row.counts);
        if (row.pfer_consonant)
          pfer_values.emplace_back(row.severity, SegClass::consonant,
                                   *row.pfer_consonant);
        if (row.pfer_vowel)
          pfer_values.emplace_back(row.severity, SegClass::vowel,
                                   *row.pfer_vowel);
      }
      nlohmann::ordered_json jrows = nlohmann::ordered_json::array();
      for (const ErrorTypeRow& r : error_type_profile(counts)) {
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
      for (const PferCell& c : pfer_distribution_stats(pfer_values)) {
        nlohmann::ordered_json jc;
        jc["severity"] = c.severity;
        jc["class"] = class_name(c.cls);
        jc["n"] = c.n;
        jc["mean"] = c.mean;
        jc["median"] = c.median;
        jc["p10"] = c.p10;
        jc["p90"] = c.p90;
        jcells.push_back(jc);
      }
      jpfer[to_string(s)] = jcells;

      std::map<std::string, std::map<int, double>> coverage_pct;
      for (const CoverageRow& crow : result.coverage) {
        if (crow.language != language || crow.setting != s) continue;
        if (crow.opportunities == 0) continue;
        coverage_pct[crow.phoneme][crow.severity] =
            100.0 * static_cast<double>(crow.covered) /
            static_cast<double>(crow.opportunities);
      }
      std::map<int, double> speakers_per_severity;
      for (const SpeakerRow& srow : result.speakers)
        if (srow.language == language && srow.setting == s)
          speakers_per_severity[srow.report.severity] += 1.0;
      nlohmann::ordered_json jsl = nlohmann::ordered_json::array();
      for (const CoverageSlope& cs :
           coverage_slopes(coverage_pct, speakers_per_severity)) {
        nlohmann::ordered_json jc;
        jc["phoneme"] = cs.phoneme;
        jc["slope"] = cs.slope;
        jc["coverage_first"] = cs.coverage_first;
        jc["coverage_last"] = cs.coverage_last;
        jsl.push_back(jc);
      }
      jslopes[to_string(s)] = jsl;
    }
    jl["error_type_profile"] = jprofile;
    jl["pfer_distribution"] = jpfer;
    jl["coverage_slopes"] = jslopes;
    jlangs.push_back(jl);
  }
  report["languages"] = jlangs;
  result.report_json = report.dump(2) + "\n";
  return result;
}

std::string render_per_utterance_tsv(const PipelineResult& r) {
  std::ostringstream out;
  out << "utterance_id\tspeaker_id\tlanguage\tseverity\tsetting\tn_ref\t"
         "n_aligned\tcorrect\tsubstitutions\tdeletions\tinsertions\tper\t"
         "pfer\tpfer_consonant\tpfer_vowel\tphoncov\texcluded\terror\n";
  for (const UtteranceRow& u : r.utterances) {
    out << u.utterance_id << '\t' << u.speaker_id << '\t' << u.language << '\t'
        << u.severity << '\t' << to_string(u.setting) << '\t' << u.counts.n_ref
        << '\t' << u.counts.n_aligned << '\t' << u.counts.matches << '\t'
        << u.counts.substitutions << '\t' << u.counts.deletions << '\t'
        << u.counts.insertions << '\t' << fmt6(u.per) << '\t' << fmt6(u.pfer)
        << '\t' << fmt6(u.pfer_consonant) << '\t' << fmt6(u.pfer_vowel) << '\t'
        << fmt6(u.phoncov) << '\t' << (u.excluded ? 1 : 0) << '\t'
        << sanitize(u.error) << '\n';
  }
  return out.str();
}

std::string render_per_speaker_tsv(const PipelineResult& r) {
  std::ostringstream out;
  out << "language\tsetting\tspeaker_id\tseverity\tn_utterances\tn_excluded\t"
         "per_undefined\tpfer_undefined\tphoncov_undefined\tper\tpfer\t"
         "phoncov\n";
  for (const SpeakerRow& s : r.speakers) {
    out << s.language << '\t' << to_string(s.setting) << '\t'
        << s.report.speaker_id << '\t' << s.report.severity << '\t'
        << s.report.n_utterances << '\t' << s.n_excluded << '\t'
        << s.report.per_undefined << '\t' << s.report.pfer_undefined << '\t'
        << s.report.phoncov_undefined << '\t' << fmt6(s.report.per) << '\t'
        << fmt6(s.report.pfer) << '\t' << fmt6(s.report.phoncov) << '\n';
  }
  return out.str();
}

std::string render_coverage_tsv(const PipelineResult& r) {
  std::ostringstream out;
  out << "language\tsetting\tseverity\tphoneme\tcovered\topportunities\t"
         "coverage_pct\n";
  for (const CoverageRow& c : r.coverage) {
    const double pct = c.opportunities == 0
                           ? 0.0
                           : 100.0 * static_cast<double>(c.covered) /
                                 static_cast<double>(c.opportunities);
    out << c.language << '\t' << to_string(c.setting) << '\t' << c.severity
        << '\t' << c.phoneme << '\t' << c.covered << '\t' << c.opportunities
        << '\t' << fmt6(pct) << '\n';
  }
  return out.str();
}

void write_outputs(const PipelineResult& r, const std::string& out_dir) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  if (ec) throw ConfigError("cannot create output directory: " + out_dir);

  auto write_file = [&](const std::string& name, const std::string& content) {
    const fs::path p = fs::path(out_dir) / name;
    std::ofstream f(p, std::ios::binary);
    if (!f) throw ConfigError("cannot write " + p.string());
    f << content;
  };
  write_file("per_utterance.tsv", render_per_utterance_tsv(r));
  write_file("per_speaker.tsv", render_per_speaker_tsv(r));
  write_file("phoneme_coverage.tsv", render_coverage_tsv(r));
  write_file("report.json", r.report_json);
}

}  // namespace phoncontrast
