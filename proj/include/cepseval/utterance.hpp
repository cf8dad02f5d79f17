#pragma once

#include <optional>
#include <string>

namespace cepseval {

// One evaluation unit. duration_s is the spoken length in seconds as
// supplied upstream (e.g. by voice activity detection); it is consumed,
// never computed here. Must be > 0 for any utterance entering a CEPS
// estimate.
struct Utterance {
  std::string id;
  std::string reference;
  std::string hypothesis;
  double duration_s = 0.0;
  std::optional<std::string> language;
  std::optional<std::string> script;
};

}  // namespace cepseval
