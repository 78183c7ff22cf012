#include "weakhopf/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace weakhopf {

void Report::add(const std::string& id, const std::string& anchor, bool pass, const std::string& locus) {
  std::string l = locus;
  if (!pass && l.empty()) l = "condition not satisfied";
  checks_.push_back({id, anchor, pass, l});
}

void Report::add_equal(const std::string& id, const std::string& anchor, const Mat& lhs, const Mat& rhs) {
  if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols()) {
    add(id, anchor, false,
        "shape " + std::to_string(lhs.rows()) + "x" + std::to_string(lhs.cols()) + " vs " +
            std::to_string(rhs.rows()) + "x" + std::to_string(rhs.cols()));
    return;
  }
  auto d = first_difference(lhs, rhs);
  add(id, anchor, !d.has_value(), d ? describe(*d) : "");
}

void Report::append(const Report& other, const std::string& prefix) {
  for (auto c : other.checks_) {
    c.id = prefix + c.id;
    checks_.push_back(std::move(c));
  }
}

bool Report::all_pass() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.pass; });
}

std::size_t Report::failures() const {
  return std::count_if(checks_.begin(), checks_.end(), [](const Check& c) { return !c.pass; });
}

bool Report::has(const std::string& id) const {
  return std::any_of(checks_.begin(), checks_.end(), [&](const Check& c) { return c.id == id; });
}

const Check& Report::get(const std::string& id) const {
  for (const auto& c : checks_)
    if (c.id == id) return c;
  throw std::out_of_range("no check named '" + id + "'");
}

}  // namespace weakhopf
