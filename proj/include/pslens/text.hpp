#pragma once

// Line-oriented text formats for finite i-posets and update spaces.
// See docs/formats.md.

#include <string>
#include <vector>

#include "pslens/iposet.hpp"

namespace pslens {

// Splits a line into whitespace-separated tokens. Double quotes group a token
// containing spaces; '#' outside quotes starts a comment.
std::vector<std::string> tokenize_line(const std::string& line, int line_no = 0);

// Quotes a token when it would not survive tokenize_line unchanged.
std::string quote_token(const std::string& token);

FiniteIPoset<std::string> parse_iposet(const std::string& text);
FiniteTable<std::string> parse_iposet_table(const std::string& text);
std::string format_iposet(const FiniteIPoset<std::string>& p);

}  // namespace pslens
