#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace hopfrec {

/// One failing index tuple: which entry, and the two sides that disagree.
struct Failure {
  std::vector<long> indices;
  std::string lhs;
  std::string rhs;
};

/// Outcome of a single named identity, checked over all of its index tuples.
struct CheckRecord {
  // Failures beyond this many are counted but not stored.
  static constexpr std::size_t kMaxStored = 1000;

  std::string name;
  std::vector<Failure> failures{};
  std::size_t failure_count = 0;
  // Non-gating observations (e.g. whether S is an involution).
  std::string note{};
  bool informational = false;

  bool passed() const { return informational || failure_count == 0; }

  void fail(std::vector<long> indices, std::string lhs, std::string rhs) {
    ++failure_count;
    if (failures.size() < kMaxStored)
      failures.push_back({std::move(indices), std::move(lhs), std::move(rhs)});
  }
};

class Report {
 public:
  Report() = default;
  explicit Report(std::string command) : command_(std::move(command)) {}

  const std::string& command() const { return command_; }
  const std::vector<CheckRecord>& records() const { return records_; }

  CheckRecord& add(std::string name) {
    records_.push_back(CheckRecord{std::move(name), {}, 0, {}, false});
    return records_.back();
  }
  void add(CheckRecord rec) { records_.push_back(std::move(rec)); }
  void append(const Report& other) {
    records_.insert(records_.end(), other.records_.begin(), other.records_.end());
  }

  bool passed() const {
    for (const auto& r : records_)
      if (!r.passed()) return false;
    return true;
  }

  /// First gating record that failed, or nullptr.
  const CheckRecord* first_failure() const {
    for (const auto& r : records_)
      if (!r.passed()) return &r;
    return nullptr;
  }

  const CheckRecord* find(const std::string& name) const {
    for (const auto& r : records_)
      if (r.name == name) return &r;
    return nullptr;
  }

 private:
  std::string command_;
  std::vector<CheckRecord> records_;
};

}  // namespace hopfrec
