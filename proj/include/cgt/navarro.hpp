#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cgt/char_table.hpp"
#include "cgt/group_spec.hpp"
#include "cgt/perm_group.hpp"

#include "json.hpp"

namespace cgt {

// An odd-degree row moved by sigma, with one class where it is visibly moved.
struct Witness {
  std::size_t row = 0;
  std::uint64_t degree = 0;
  std::size_t class_index = 0;
  std::string value;
  std::string sigma_value;
};

struct Verdict {
  std::string name;
  std::uint64_t order = 0;
  std::uint64_t sylow2_order = 0;
  std::size_t num_classes = 0;
  bool group_side = false;
  bool table_side = false;
  std::vector<Witness> witnesses;
  std::optional<TableCheck> table_check;
  double group_ms = 0, table_ms = 0, elapsed_ms = 0;

  bool agree() const { return group_side == table_side; }
};

std::vector<Witness> sigma_witnesses(const CharacterTable& t);
bool table_side_verdict(const CharacterTable& t);
bool group_side_verdict(const PermGroup& g);

struct CheckOptions {
  TableOptions table;
  bool verify_table = true;
};

Verdict check_group(const PermGroup& g, const std::string& name = "",
                        const CheckOptions& opts = {});

struct CorpusEntry {
  std::size_t index = 0;
  std::string name;
  std::optional<Verdict> verdict;
  std::string error;
  int error_code = 0;  // 1 disagreement or failed check, 2 input/resource
};

struct CorpusReport {
  std::vector<CorpusEntry> entries;
  double elapsed_ms = 0;
  std::size_t agreements() const;
  int exit_code() const;
};

CorpusReport run_corpus(const std::vector<GroupSpec>& corpus, unsigned threads = 1,
                        std::uint64_t max_order = kDefaultMaxOrder, const CheckOptions& opts = {});

nlohmann::json verdict_to_json(const Verdict& v);
nlohmann::json report_to_json(const CorpusReport& r);

}  // namespace cgt
