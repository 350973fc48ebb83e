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

//! Porter (1980) suffix-stripping stemmer, following the behaviour of the
//! author's reference ANSI C implementation (including its two departures
//! from the original algorithm description: "bli" -> "ble" and "logi" -> "log").

#ifndef RISKMINER_PORTER_HPP
#define RISKMINER_PORTER_HPP

#include <string>
#include <string_view>

namespace riskminer {

inline constexpr std::string_view kStemmerVersion = "porter-1980-ref";

namespace detail {

class PorterStemmer {
 public:
  explicit PorterStemmer(std::string word) : b_(std::move(word)), k_(static_cast<int>(b_.size()) - 1) {}

  std::string run() {
    if (k_ <= 1) return b_;
    step1ab();
    if (k_ > 0) {
      step1c();
      step2();
      step3();
      step4();
      step5();
    }
    b_.resize(static_cast<std::size_t>(k_ + 1));
    return b_;
  }

 private:
  std::string b_;
  int k_;
  int j_ = 0;

  bool cons(int i) const {
    switch (b_[i]) {
      case 'a': case 'e': case 'i': case 'o': case 'u':
        return false;
      case 'y':
        return i == 0 ? true : !cons(i - 1);
      default:
        return true;
    }
  }

  // Number of VC sequences in b[0..j].
  int m() const {
    int n = 0;
    int i = 0;
    for (;;) {
      if (i > j_) return n;
      if (!cons(i)) break;
      ++i;
    }
    ++i;
    for (;;) {
      for (;;) {
        if (i > j_) return n;
        if (cons(i)) break;
        ++i;
      }
      ++i;
      ++n;
      for (;;) {
        if (i > j_) return n;
        if (!cons(i)) break;
        ++i;
      }
      ++i;
    }
  }

  bool vowel_in_stem() const {
    for (int i = 0; i <= j_; ++i)
      if (!cons(i)) return true;
    return false;
  }

  bool double_cons(int j) const { return j >= 1 && b_[j] == b_[j - 1] && cons(j); }

  // consonant-vowel-consonant ending at i, where the last consonant is not w, x or y
  bool cvc(int i) const {
    if (i < 2 || !cons(i) || cons(i - 1) || !cons(i - 2)) return false;
    char ch = b_[i];
    return !(ch == 'w' || ch == 'x' || ch == 'y');
  }

  bool ends(std::string_view s) {
    int len = static_cast<int>(s.size());
    if (len > k_ + 1) return false;
    if (std::string_view(b_).substr(static_cast<std::size_t>(k_ + 1 - len), s.size()) != s) return false;
    j_ = k_ - len;
    return true;
  }

  void set_to(std::string_view s) {
    b_.replace(static_cast<std::size_t>(j_ + 1), static_cast<std::size_t>(k_ - j_), s);
    k_ = j_ + static_cast<int>(s.size());
  }

  void replace_if_measured(std::string_view s) {
    if (m() > 0) set_to(s);
  }

  void step1ab() {
    if (b_[k_] == 's') {
      if (ends("sses")) k_ -= 2;
      else if (ends("ies")) set_to("i");
      else if (b_[k_ - 1] != 's') --k_;
    }
    if (ends("eed")) {
      if (m() > 0) --k_;
    } else if ((ends("ed") || ends("ing")) && vowel_in_stem()) {
      k_ = j_;
      if (ends("at")) set_to("ate");
      else if (ends("bl")) set_to("ble");
      else if (ends("iz")) set_to("ize");
      else if (double_cons(k_)) {
        --k_;
        char ch = b_[k_];
        if (ch == 'l' || ch == 's' || ch == 'z') ++k_;
      } else if (m() == 1 && cvc(k_)) {
        set_to("e");
      }
    }
  }

  void step1c() {
    if (ends("y") && vowel_in_stem()) b_[k_] = 'i';
  }

  struct Rule {
    std::string_view suffix;
    std::string_view replacement;
  };

  template <std::size_t N>
  void apply_first(const Rule (&rules)[N]) {
    for (const Rule& r : rules) {
      if (ends(r.suffix)) {
        replace_if_measured(r.replacement);
        return;
      }
    }
  }

  void step2() {
    if (k_ < 1) return;
    switch (b_[k_ - 1]) {
      case 'a': {
        static constexpr Rule r[] = {{"ational", "ate"}, {"tional", "tion"}};
        apply_first(r);
        break;
      }
      case 'c': {
        static constexpr Rule r[] = {{"enci", "ence"}, {"anci", "ance"}};
        apply_first(r);
        break;
      }
      case 'e': {
        static constexpr Rule r[] = {{"izer", "ize"}};
        apply_first(r);
        break;
      }
      case 'l': {
        static constexpr Rule r[] = {
            {"bli", "ble"}, {"alli", "al"}, {"entli", "ent"}, {"eli", "e"}, {"ousli", "ous"}};
        apply_first(r);
        break;
      }
      case 'o': {
        static constexpr Rule r[] = {{"ization", "ize"}, {"ation", "ate"}, {"ator", "ate"}};
        apply_first(r);
        break;
      }
      case 's': {
        static constexpr Rule r[] = {
            {"alism", "al"}, {"iveness", "ive"}, {"fulness", "ful"}, {"ousness", "ous"}};
        apply_first(r);
        break;
      }
      case 't': {
        static constexpr Rule r[] = {{"aliti", "al"}, {"iviti", "ive"}, {"biliti", "ble"}};
        apply_first(r);
        break;
      }
      case 'g': {
        static constexpr Rule r[] = {{"logi", "log"}};
        apply_first(r);
        break;
      }
      default:
        break;
    }
  }

  void step3() {
    switch (b_[k_]) {
      case 'e': {
        static constexpr Rule r[] = {{"icate", "ic"}, {"ative", ""}, {"alize", "al"}};
        apply_first(r);
        break;
      }
      case 'i': {
        static constexpr Rule r[] = {{"iciti", "ic"}};
        apply_first(r);
        break;
      }
      case 'l': {
        static constexpr Rule r[] = {{"ical", "ic"}, {"ful", ""}};
        apply_first(r);
        break;
      }
      case 's': {
        static constexpr Rule r[] = {{"ness", ""}};
        apply_first(r);
        break;
      }
      default:
        break;
    }
  }

  void step4() {
    if (k_ < 1) return;
    bool found = false;
    switch (b_[k_ - 1]) {
      case 'a': found = ends("al"); break;
      case 'c': found = ends("ance") || ends("ence"); break;
      case 'e': found = ends("er"); break;
      case 'i': found = ends("ic"); break;
      case 'l': found = ends("able") || ends("ible"); break;
      case 'n': found = ends("ant") || ends("ement") || ends("ment") || ends("ent"); break;
      case 'o':
        found = (ends("ion") && j_ >= 0 && (b_[j_] == 's' || b_[j_] == 't')) || ends("ou");
        break;
      case 's': found = ends("ism"); break;
      case 't': found = ends("ate") || ends("iti"); break;
      case 'u': found = ends("ous"); break;
      case 'v': found = ends("ive"); break;
      case 'z': found = ends("ize"); break;
      default: break;
    }
    if (found && m() > 1) k_ = j_;
  }

  void step5() {
    j_ = k_;
    if (b_[k_] == 'e') {
      int a = m();
      if (a > 1 || (a == 1 && !cvc(k_ - 1))) --k_;
    }
    if (b_[k_] == 'l' && double_cons(k_) && m() > 1) --k_;
  }
};

}  // namespace detail

/// Stems a lowercase token. Tokens containing anything other than ASCII
/// a-z (digits, non-ASCII letters) are returned unchanged.
inline std::string stem(std::string_view token) {
  for (char c : token)
    if (c < 'a' || c > 'z') return std::string(token);
  return detail::PorterStemmer(std::string(token)).run();
}

}  // namespace riskminer

#endif  // RISKMINER_PORTER_HPP
