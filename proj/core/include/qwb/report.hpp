#pragma once

#include <string>
#include <vector>

namespace qwb {

// Result document for one CLI command or suite run. Machine form is JSON;
// the text form is the human rendering of the same fields.
struct Report {
  std::string command;
  std::string structure;
  std::string suite;
  long cases_total = 0;
  long cases_failed = 0;
  std::vector<std::string> witnesses;
  long millis = 0;
  std::vector<std::string> lines;  // extra human-readable detail

  // Records one checked instance; failures keep at most 50 witnesses.
  void expect(bool ok, const std::string& witness);
  void note(const std::string& line) { lines.push_back(line); }
  void merge(const Report& sub);

  int exit_code() const { return cases_failed == 0 ? 0 : 1; }
  std::string to_json() const;
  std::string to_text() const;
};

}  // namespace qwb
