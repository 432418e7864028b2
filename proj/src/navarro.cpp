#include "cgt/navarro.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "cgt/errors.hpp"
#include "cgt/sylow.hpp"

namespace cgt {

namespace {

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

}  // namespace

std::vector<Witness> sigma_witnesses(const CharacterTable& t) {
  std::vector<Witness> out;
  for (std::size_t i : odd_degree_rows(t)) {
    for (std::size_t c = 0; c < t.classes().size(); ++c) {
      const Cyclotomic s = t.value(i, c).apply_sigma();
      if (s == t.value(i, c)) continue;
      out.push_back({i, t.degree(i), c, t.value(i, c).to_string(), s.to_string()});
      break;
    }
  }
  return out;
}

bool table_side_verdict(const CharacterTable& t) {
  for (std::size_t i : odd_degree_rows(t))
    if (sigma_on_character(t, i) != i) return false;
  return true;
}

bool group_side_verdict(const PermGroup& g) { return is_self_normalizing_sylow2(g); }

Verdict check_group(const PermGroup& g, const std::string& name, const CheckOptions& opts) {
  const auto t0 = Clock::now();
  Verdict v;
  v.name = name;
  v.order = g.order();

  const auto tg = Clock::now();
  const PermGroup p = sylow2(g);
  v.sylow2_order = p.order();
  v.group_side = normalizer(g, p).order() == p.order();
  v.group_ms = ms_since(tg);

  const auto tt = Clock::now();
  const CharacterTable table = character_table(g, opts.table);
  v.num_classes = table.size();
  v.table_side = table_side_verdict(table);
  v.witnesses = sigma_witnesses(table);
  if (v.witnesses.empty() != v.table_side)
    throw ConsistencyError("witness list disagrees with the table verdict");
  if (opts.verify_table) v.table_check = verify_table(table);
  v.table_ms = ms_since(tt);
  v.elapsed_ms = ms_since(t0);
  return v;
}

std::size_t CorpusReport::agreements() const {
  std::size_t n = 0;
  for (const auto& e : entries) n += e.verdict && e.verdict->agree();
  return n;
}

int CorpusReport::exit_code() const {
  int code = 0;
  for (const auto& e : entries) {
    if (e.error_code == 1) return 1;
    if (e.error_code == 2) code = 2;
  }
  return code;
}

CorpusReport run_corpus(const std::vector<GroupSpec>& corpus, unsigned threads,
                        std::uint64_t max_order, const CheckOptions& opts) {
  const auto t0 = Clock::now();
  CorpusReport report;
  report.entries.resize(corpus.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < corpus.size(); i = next++) {
      CorpusEntry& e = report.entries[i];
      e.index = i;
      e.name = corpus[i].name;
      try {
        const PermGroup g = corpus[i].build(max_order);
        e.verdict = check_group(g, corpus[i].name, opts);
        if (!e.verdict->agree()) {
          e.error = "group side and table side disagree";
          e.error_code = 1;
        } else if (e.verdict->table_check && !e.verdict->table_check->ok()) {
          e.error = "character table failed its exact checks";
          e.error_code = 1;
        }
      } catch (const ConsistencyError& ex) {
        e.error = ex.what();
        e.error_code = 1;
      } catch (const std::exception& ex) {
        e.error = ex.what();
        e.error_code = 2;
      }
    }
  };
  threads = std::max(1u, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  report.elapsed_ms = ms_since(t0);
  return report;
}

nlohmann::json verdict_to_json(const Verdict& v) {
  nlohmann::json w = nlohmann::json::array();
  for (const Witness& x : v.witnesses)
    w.push_back({{"row", x.row},
                 {"degree", x.degree},
                 {"class", x.class_index},
                 {"value", x.value},
                 {"sigma_value", x.sigma_value}});
  nlohmann::json j = {{"name", v.name},
                      {"order", v.order},
                      {"sylow2_order", v.sylow2_order},
                      {"num_classes", v.num_classes},
                      {"group_verdict", v.group_side},
                      {"table_verdict", v.table_side},
                      {"agree", v.agree()},
                      {"witnesses", w},
                      {"elapsed_ms", v.elapsed_ms}};
  if (v.table_check) j["table_checks_ok"] = v.table_check->ok();
  return j;
}

nlohmann::json report_to_json(const CorpusReport& r) {
  nlohmann::json groups = nlohmann::json::array();
  for (const auto& e : r.entries) {
    nlohmann::json j = e.verdict ? verdict_to_json(*e.verdict) : nlohmann::json{{"name", e.name}};
    j["index"] = e.index;
    if (!e.error.empty()) j["error"] = e.error;
    groups.push_back(std::move(j));
  }
  return {{"groups", groups},
          {"total", r.entries.size()},
          {"agreements", r.agreements()},
          {"elapsed_ms", r.elapsed_ms},
          {"exit_code", r.exit_code()}};
}

}  // namespace cgt
