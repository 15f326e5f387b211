#include "picard/report.hpp"

#include <sstream>

#include "picard/errors.hpp"

namespace picard {

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

Check& Report::add(std::string id, std::string anchor, Status status, Json witness) {
  if (find(id)) throw PreconditionError("duplicate check id '" + id + "' in suite " + suite_);
  checks_.push_back({std::move(id), std::move(anchor), status, std::move(witness)});
  return checks_.back();
}

const Check* Report::find(const std::string& id) const {
  for (const auto& c : checks_) {
    if (c.id == id) return &c;
  }
  return nullptr;
}

bool Report::failed() const {
  for (const auto& c : checks_) {
    if (c.status == Status::Fail) return true;
  }
  return false;
}

bool Report::inconclusive() const {
  for (const auto& c : checks_) {
    if (c.status == Status::Inconclusive) return true;
  }
  return false;
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks_) add(prefix + c.id, c.anchor, c.status, c.witness);
}

Json Report::to_json() const {
  Json checks = Json::array();
  for (const auto& c : checks_) {
    checks.push_back({{"id", c.id}, {"anchor", c.anchor}, {"status", status_name(c.status)}, {"witness", c.witness}});
  }
  return {{"suite", suite_}, {"checks", checks}};
}

std::string Report::table() const {
  std::ostringstream os;
  std::size_t width = 0;
  for (const auto& c : checks_) width = std::max(width, c.id.size());
  os << "suite " << suite_ << "\n";
  for (const auto& c : checks_) {
    std::string st = status_name(c.status);
    os << "  " << st << std::string(13 - st.size(), ' ') << c.id << std::string(width - c.id.size() + 2, ' ')
       << c.anchor << "\n";
  }
  std::size_t pass = 0, fail = 0, inc = 0;
  for (const auto& c : checks_) {
    if (c.status == Status::Pass) ++pass;
    if (c.status == Status::Fail) ++fail;
    if (c.status == Status::Inconclusive) ++inc;
  }
  os << "  " << pass << " passed, " << fail << " failed, " << inc << " inconclusive\n";
  return os.str();
}

}  // namespace picard
