#pragma once

#include <string>
#include <vector>

#include "picard/serialize.hpp"

namespace picard {

enum class Status { Pass, Fail, Inconclusive };
std::string status_name(Status s);

struct Check {
  std::string id;
  /// The identity or statement the check replays.
  std::string anchor;
  Status status = Status::Pass;
  Json witness;
};

class Report {
 public:
  explicit Report(std::string suite) : suite_(std::move(suite)) {}

  /// Throws PreconditionError on a duplicate id.
  Check& add(std::string id, std::string anchor, Status status, Json witness = Json::object());
  Check& check(std::string id, std::string anchor, bool ok, Json witness = Json::object()) {
    return add(std::move(id), std::move(anchor), ok ? Status::Pass : Status::Fail, std::move(witness));
  }
  /// Runs body; an exception turns into a failed check carrying its message.
  template <typename F>
  void guarded(const std::string& id, const std::string& anchor, F&& body);

  const std::string& suite() const { return suite_; }
  const std::vector<Check>& checks() const { return checks_; }
  const Check* find(const std::string& id) const;
  bool failed() const;
  bool inconclusive() const;
  void merge(const Report& other, const std::string& prefix = "");

  Json to_json() const;
  /// One line per check: status, id, anchor.
  std::string table() const;

 private:
  std::string suite_;
  std::vector<Check> checks_;
};

template <typename F>
void Report::guarded(const std::string& id, const std::string& anchor, F&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    add(id, anchor, Status::Fail, Json{{"error", e.what()}});
  }
}

}  // namespace picard
