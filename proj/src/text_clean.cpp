#include "deid/text_clean.hpp"

#include <algorithm>
#include <cctype>

#include "deid/errors.hpp"

namespace deid::text {

namespace {

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

bool is_digit(char c) { return c >= '0' && c <= '9'; }

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

// Whole-word occurrences of `token` (already lowercased) in `haystack_lower`.
void find_token(std::string_view haystack_lower, const std::string& token,
                const char* rule_id, std::vector<Match>& out) {
  std::size_t pos = 0;
  while ((pos = haystack_lower.find(token, pos)) != std::string::npos) {
    bool left_ok = pos == 0 || !is_word_char(haystack_lower[pos - 1]);
    std::size_t end = pos + token.size();
    bool right_ok = end >= haystack_lower.size() || !is_word_char(haystack_lower[end]);
    if (left_ok && right_ok) out.push_back({rule_id, pos, end});
    ++pos;
  }
}

bool plausible_date(std::string_view run) {
  int month = (run[4] - '0') * 10 + (run[5] - '0');
  int day = (run[6] - '0') * 10 + (run[7] - '0');
  return month >= 1 && month <= 12 && day >= 1 && day <= 31;
}

}  // namespace

CleanContext make_clean_context(std::string_view patient_name,
                                std::string_view patient_id,
                                const std::vector<std::string>& extra,
                                std::vector<std::string>* rejected) {
  CleanContext ctx;
  auto add = [&](std::string_view raw, std::set<std::string>& into) {
    std::string token;
    auto flush = [&] {
      if (token.size() >= 2) {
        into.insert(lower(token));
      } else if (!token.empty() && rejected) {
        rejected->push_back(token);
      }
      token.clear();
    };
    for (char c : raw) {
      if (c == '^' || std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else {
        token += c;
      }
    }
    flush();
  };
  add(patient_name, ctx.name_tokens);
  add(patient_id, ctx.id_tokens);
  for (const std::string& t : extra) add(t, ctx.extra_tokens);
  return ctx;
}

std::vector<Match> rule_r1_tokens(std::string_view text, const CleanContext& ctx) {
  std::vector<Match> out;
  std::string haystack = lower(text);
  for (const auto* tokens : {&ctx.name_tokens, &ctx.id_tokens, &ctx.extra_tokens}) {
    for (const std::string& token : *tokens) {
      if (token.size() < 2) continue;
      find_token(haystack, token, "R1", out);
    }
  }
  return out;
}

std::vector<Match> rule_r2_triggers(std::string_view text,
                                    const std::set<std::string>& triggers) {
  std::vector<Match> out;
  std::string haystack = lower(text);
  for (const std::string& trigger : triggers) {
    std::vector<Match> hits;
    find_token(haystack, lower(trigger), "R2", hits);
    // The trigger and everything after it goes.
    for (Match& m : hits) {
      m.end = text.size();
      out.push_back(m);
    }
  }
  return out;
}

std::vector<Match> rule_r3_dates(std::string_view text) {
  std::vector<Match> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_digit(text[i])) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && is_digit(text[i])) ++i;
    std::size_t len = i - start;
    if (len == 8 && plausible_date(text.substr(start, 8))) {
      out.push_back({"R3", start, i});
    } else if (len == 4) {
      // Years must stand alone as a word; dates may abut letters.
      bool left_ok = start == 0 || !is_word_char(text[start - 1]);
      bool right_ok = i >= text.size() || !is_word_char(text[i]);
      int year = std::stoi(std::string(text.substr(start, 4)));
      if (left_ok && right_ok && year >= 1900 && year <= 2099) {
        out.push_back({"R3", start, i});
      }
    }
  }
  return out;
}

std::vector<Match> rule_r4_digit_runs(std::string_view text) {
  auto in_alphabet = [](char c) {
    return is_digit(c) || c == '(' || c == ')' || c == '-' || c == 'x' || c == 'X';
  };
  std::vector<Match> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!in_alphabet(text[i])) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < text.size() && in_alphabet(text[i])) ++i;
    if (i - start >= 9) out.push_back({"R4", start, i});
  }
  return out;
}

std::vector<ExtensionRule> load_extension_rules(std::string_view document) {
  std::vector<ExtensionRule> rules;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= document.size()) {
    auto nl = document.find('\n', start);
    std::string line(nl == std::string_view::npos
                         ? document.substr(start)
                         : document.substr(start, nl - start));
    start = nl == std::string_view::npos ? document.size() + 1 : nl + 1;
    ++line_no;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto first = line.find(';');
    auto last = line.rfind(';');
    if (first == std::string::npos || first == last) {
      throw TableParseError("expected RULEID;REGEX;DESCRIPTION", line_no);
    }
    ExtensionRule rule;
    rule.id = line.substr(0, first);
    std::string pattern = line.substr(first + 1, last - first - 1);
    rule.description = line.substr(last + 1);
    try {
      rule.pattern = std::regex(pattern, std::regex::icase);
    } catch (const std::regex_error& e) {
      throw TableParseError(std::string("bad regex: ") + e.what(), line_no);
    }
    rules.push_back(std::move(rule));
  }
  return rules;
}

namespace {

struct MergedSpan {
  std::size_t begin;
  std::size_t end;
  std::string rule_id;
};

std::vector<MergedSpan> merge(std::vector<Match> matches) {
  std::sort(matches.begin(), matches.end(), [](const Match& a, const Match& b) {
    return a.begin != b.begin ? a.begin < b.begin : a.end > b.end;
  });
  std::vector<MergedSpan> merged;
  for (const Match& m : matches) {
    if (m.begin >= m.end) continue;
    if (!merged.empty() && m.begin <= merged.back().end) {
      merged.back().end = std::max(merged.back().end, m.end);
    } else {
      merged.push_back({m.begin, m.end, m.rule_id});
    }
  }
  return merged;
}

// Renders the text with spans removed. An empty replacement collapses
// whitespace left hanging at the junction; when a removal would glue two
// word characters together a single space keeps them apart, so cleaning
// never fabricates a new token (this is what makes cleaning idempotent).
std::string render(std::string_view text, const std::vector<Redaction>& redactions) {
  std::string out;
  std::size_t pos = 0;
  for (const Redaction& r : redactions) {
    if (r.begin > pos) out.append(text.substr(pos, r.begin - pos));
    pos = std::max(pos, r.end);
    if (!r.replacement.empty()) {
      out += r.replacement;
      continue;
    }
    bool left_word = !out.empty() && is_word_char(out.back());
    bool right_word = pos < text.size() && is_word_char(text[pos]);
    if (left_word && right_word) {
      out += ' ';
    } else if (out.empty() ||
               std::isspace(static_cast<unsigned char>(out.back()))) {
      // Whitespace to the right of the cut is now leading or duplicated.
      while (pos < text.size() &&
             std::isspace(static_cast<unsigned char>(text[pos]))) {
        ++pos;
      }
    }
  }
  if (pos < text.size()) out.append(text.substr(pos));
  while (!out.empty() && std::isspace(static_cast<unsigned char>(out.back()))) {
    out.pop_back();
  }
  return out;
}

}  // namespace

std::pair<std::string, std::vector<Redaction>> clean_text(std::string_view text,
                                                          const CleanContext& ctx,
                                                          const RuleSet& rules) {
  std::vector<Match> matches = rule_r1_tokens(text, ctx);
  for (Match& m : rule_r2_triggers(text, rules.triggers)) matches.push_back(m);
  for (Match& m : rule_r3_dates(text)) matches.push_back(m);
  for (Match& m : rule_r4_digit_runs(text)) matches.push_back(m);
  if (!rules.gazetteer.empty()) {
    std::string haystack = lower(text);
    for (const std::string& word : rules.gazetteer) {
      if (word.size() >= 2) find_token(haystack, lower(word), "R5", matches);
    }
  }
  for (const ExtensionRule& rule : rules.extensions) {
    using It = std::regex_iterator<std::string_view::const_iterator>;
    for (It it(text.begin(), text.end(), rule.pattern), end; it != end; ++it) {
      if (it->length() == 0) continue;
      matches.push_back({rule.id,
                         static_cast<std::size_t>(it->position()),
                         static_cast<std::size_t>(it->position() + it->length())});
    }
  }

  std::vector<Redaction> redactions;
  for (const MergedSpan& span : merge(std::move(matches))) {
    redactions.push_back({span.rule_id, span.begin, span.end,
                          rules.replacement_token});
  }
  return {render(text, redactions), redactions};
}

std::string apply_redactions(std::string_view text,
                             const std::vector<Redaction>& redactions) {
  return render(text, redactions);
}

}  // namespace deid::text
