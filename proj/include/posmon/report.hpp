// Command reports: a structured record of one CLI invocation, rendered as
// JSON with words as token arrays.

#ifndef POSMON_REPORT_HPP_
#define POSMON_REPORT_HPP_

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "presentation.hpp"

namespace posmon::cli {

  using json = nlohmann::ordered_json;

  // Hex SHA-256 of to_text(p).
  std::string presentation_sha(Presentation const& p);

  json tokens(word_type const& w, Alphabet const& alphabet);
  json tokens(std::vector<word_type> const& ws, Alphabet const& alphabet);

  struct Report {
    std::string                command;
    std::string                presentation_sha;
    json                       result = nullptr;
    json                       bounds = json::object();
    bool                       truncated  = false;
    double                     elapsed_ms = 0;
    std::optional<std::string> error;

    json to_json() const;
  };

}  // namespace posmon::cli

#endif  // POSMON_REPORT_HPP_
