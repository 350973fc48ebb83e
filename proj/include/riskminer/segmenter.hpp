// Copyright 2026 The RiskMiner Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Rule-based paragraph segmentation of extracted page text.
//!
//! A paragraph is a maximal run of non-blank lines; blank (empty or
//! whitespace-only) lines separate paragraphs. Line breaks inside a block
//! become single spaces and whitespace runs collapse. Blocks with fewer than
//! `min_tokens` letter/digit runs are page furniture and are dropped.
//!
//! The exact splitting pattern used to build the original annotated data
//! is not known; this rule is a reconstruction. Paragraph ids are only
//! meaningful relative to a segmenter version, which is why the version is
//! persisted into model bundles.

#ifndef RISKMINER_SEGMENTER_HPP
#define RISKMINER_SEGMENTER_HPP

#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "riskminer/corpus.hpp"
#include "riskminer/error.hpp"
#include "riskminer/text.hpp"

namespace riskminer {

inline constexpr std::string_view kBlankLineRule = "blank-line";
inline constexpr std::string_view kSegmenterVersion = "blankline-v1";

struct SegmenterConfig {
  int min_tokens = 5;
  std::string blank_line_pattern{kBlankLineRule};
  std::string version{kSegmenterVersion};

  void validate() const {
    if (min_tokens < 1) throw ValidationError("segmenter min_tokens must be >= 1");
    if (version.empty()) throw ValidationError("segmenter version must be non-empty");
    if (blank_line_pattern != kBlankLineRule)
      throw ValidationError("unknown segmentation rule '" + blank_line_pattern + "'");
  }

  /// Identity string recorded in bundles; covers every knob that changes ids.
  std::string fingerprint() const { return version + "/min_tokens=" + std::to_string(min_tokens); }
};

namespace detail {

inline bool is_space_byte(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v';
}

inline bool is_blank_line(std::string_view line) {
  for (char c : line)
    if (!is_space_byte(c)) return false;
  return true;
}

inline std::string normalize_block(const std::vector<std::string_view>& lines) {
  std::string out;
  bool pending_space = false;
  for (std::string_view line : lines) {
    for (char c : line) {
      if (is_space_byte(c)) {
        pending_space = !out.empty();
      } else {
        if (pending_space) out.push_back(' ');
        pending_space = false;
        out.push_back(c);
      }
    }
    pending_space = !out.empty();
  }
  return out;
}

}  // namespace detail

inline std::vector<std::string> segment_page(std::string_view text, const SegmenterConfig& config = {}) {
  std::vector<std::string> paragraphs;
  std::vector<std::string_view> block;
  auto flush = [&] {
    if (block.empty()) return;
    std::string para = detail::normalize_block(block);
    block.clear();
    if (count_word_runs(para) >= static_cast<std::size_t>(config.min_tokens)) paragraphs.push_back(std::move(para));
  };
  for (std::string_view line : io::split_lines(text)) {
    if (detail::is_blank_line(line)) flush();
    else block.push_back(line);
  }
  flush();
  return paragraphs;
}

inline std::vector<Paragraph> segment_page_of(const Report& report, const Page& page, const SegmenterConfig& config) {
  std::vector<Paragraph> out;
  int index = 0;
  for (std::string& text : segment_page(page.text, config)) {
    Paragraph p;
    p.paragraph_id = make_paragraph_id(report.id(), page.number, index);
    p.report_id = report.id();
    p.page_number = page.number;
    p.index_on_page = index;
    p.text = std::move(text);
    out.push_back(std::move(p));
    ++index;
  }
  return out;
}

inline std::vector<Paragraph> segment_report(const Report& report, const SegmenterConfig& config = {}) {
  std::vector<Paragraph> out;
  for (const Page& page : report.pages) {
    auto paras = segment_page_of(report, page, config);
    out.insert(out.end(), std::make_move_iterator(paras.begin()), std::make_move_iterator(paras.end()));
  }
  return out;
}

/// All paragraphs of a corpus, addressable by id. Built once; read-only after.
class ParagraphIndex {
 public:
  ParagraphIndex() = default;
  ParagraphIndex(const Corpus& corpus, const SegmenterConfig& config) {
    for (const Report& r : corpus.reports()) add_all(segment_report(r, config));
  }

  void add_all(std::vector<Paragraph> paragraphs) {
    for (Paragraph& p : paragraphs) {
      by_id_.emplace(p.paragraph_id, paragraphs_.size());
      paragraphs_.push_back(std::move(p));
    }
  }

  const Paragraph* find(std::string_view id) const {
    auto it = by_id_.find(std::string(id));
    return it == by_id_.end() ? nullptr : &paragraphs_[it->second];
  }
  const std::vector<Paragraph>& all() const noexcept { return paragraphs_; }
  std::size_t size() const noexcept { return paragraphs_.size(); }

 private:
  std::vector<Paragraph> paragraphs_;
  std::unordered_map<std::string, std::size_t> by_id_;
};

}  // namespace riskminer

#endif  // RISKMINER_SEGMENTER_HPP
