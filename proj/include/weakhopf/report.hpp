#pragma once

#include <string>
#include <vector>

#include "weakhopf/exactla.hpp"

namespace weakhopf {

// One named verdict. `locus` is filled on failure with where the two sides differ.
struct Check {
  std::string id;
  std::string anchor;
  bool pass = false;
  std::string locus;
};

class Report {
 public:
  void add(Check c) { checks_.push_back(std::move(c)); }
  void add(const std::string& id, const std::string& anchor, bool pass, const std::string& locus = "");
  // Records whether lhs == rhs; on failure the locus names the first differing entry.
  void add_equal(const std::string& id, const std::string& anchor, const Mat& lhs, const Mat& rhs);
  void append(const Report& other, const std::string& prefix = "");

  const std::vector<Check>& checks() const { return checks_; }
  bool all_pass() const;
  std::size_t failures() const;
  // Throws std::out_of_range if no check has this id.
  const Check& get(const std::string& id) const;
  bool has(const std::string& id) const;
  bool passed(const std::string& id) const { return get(id).pass; }

 private:
  std::vector<Check> checks_;
};

}  // namespace weakhopf
