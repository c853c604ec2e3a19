#pragma once

#include <string>
#include <vector>

namespace braid {

struct ReportItem {
  std::string id;
  std::string kind;
  bool pass = false;
  std::string witness;  // normal forms of both sides, filled on failure
};

// Aggregated outcome of a verification sweep. The aggregation is
// order-independent: items carry their own ids and the counts are sums.
struct VerificationReport {
  std::string command;
  int ambient = 0;
  int total = 0;
  int passed = 0;
  int failed = 0;
  std::vector<ReportItem> items;

  void add(ReportItem item) {
    ++total;
    item.pass ? ++passed : ++failed;
    items.push_back(std::move(item));
  }

  void merge(const VerificationReport& other) {
    total += other.total;
    passed += other.passed;
    failed += other.failed;
    items.insert(items.end(), other.items.begin(), other.items.end());
  }

  bool ok() const { return failed == 0; }
};

}  // namespace braid
