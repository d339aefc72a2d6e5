#pragma once

#include <optional>
#include <string_view>

namespace ppattach {

enum class Attachment { kNoun, kVerb };

inline char to_char(Attachment a) { return a == Attachment::kNoun ? 'N' : 'V'; }

inline std::optional<Attachment> parse_attachment(std::string_view s) {
  if (s == "N") return Attachment::kNoun;
  if (s == "V") return Attachment::kVerb;
  return std::nullopt;
}

}  // namespace ppattach
