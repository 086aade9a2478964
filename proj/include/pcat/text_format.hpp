#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "pcat/errors.hpp"
#include "pcat/partition.hpp"

namespace pcat {

// Text form: "<k>|<l> : [a,b,...][c,...]" with an optional "; colors=wb|bw"
// suffix. Points are the global 1-based numbering.

inline std::string color_word(const std::vector<Color>& w) {
  std::string s;
  for (Color c : w) s += c == Color::white ? 'w' : 'b';
  return s;
}

inline std::string serialize(const SetPartition& p) {
  std::string s = std::to_string(p.upper_count()) + "|" + std::to_string(p.lower_count()) + " :";
  if (p.block_count() > 0) s += ' ';
  for (const auto& b : p.blocks()) {
    s += '[';
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(b[i]);
    }
    s += ']';
  }
  if (p.colors())
    s += "; colors=" + color_word(p.colors()->upper) + "|" + color_word(p.colors()->lower);
  return s;
}

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      throw ParseError(std::string("expected '") + c + "'", pos_);
    ++pos_;
  }
  bool accept(std::string_view word) {
    skip_ws();
    if (text_.substr(pos_, word.size()) == word) {
      pos_ += word.size();
      return true;
    }
    return false;
  }
  int integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError("expected a non-negative integer", start);
    if (pos_ - start > 6) throw ParseError("integer too large", start);
    return std::stoi(std::string(text_.substr(start, pos_ - start)));
  }
  std::vector<Color> word() {
    std::vector<Color> w;
    while (pos_ < text_.size() && (text_[pos_] == 'w' || text_[pos_] == 'b'))
      w.push_back(text_[pos_++] == 'w' ? Color::white : Color::black);
    return w;
  }
  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline SetPartition parse_partition(std::string_view text) {
  detail::Cursor cur(text);
  const int k = cur.integer();
  cur.expect('|');
  const int l = cur.integer();
  cur.expect(':');
  std::vector<SetPartition::Block> blocks;
  while (cur.peek('[')) {
    cur.expect('[');
    SetPartition::Block b;
    b.push_back(cur.integer());
    while (cur.peek(',')) {
      cur.expect(',');
      b.push_back(cur.integer());
    }
    cur.expect(']');
    blocks.push_back(std::move(b));
  }
  const std::size_t blocks_end = cur.position();
  std::optional<Coloring> colors;
  if (cur.peek(';')) {
    cur.expect(';');
    if (!cur.accept("colors=")) throw ParseError("expected 'colors='", cur.position());
    Coloring c;
    c.upper = cur.word();
    cur.expect('|');
    c.lower = cur.word();
    colors = std::move(c);
  }
  if (!cur.done()) throw ParseError("unexpected trailing text", cur.position());
  SetPartition p;
  try {
    p = SetPartition::from_blocks(std::move(blocks), k, l);
  } catch (const ValidationError& e) {
    throw ParseError(e.what(), blocks_end);
  }
  if (colors) {
    try {
      p = p.with_colors(std::move(*colors));
    } catch (const ValidationError& e) {
      throw ParseError(e.what(), text.size());
    }
  }
  return p;
}

inline nlohmann::json to_json(const SetPartition& p) {
  nlohmann::json j;
  j["k"] = p.upper_count();
  j["l"] = p.lower_count();
  j["blocks"] = p.blocks();
  if (p.colors())
    j["colors"] = color_word(p.colors()->upper) + "|" + color_word(p.colors()->lower);
  else
    j["colors"] = nullptr;
  return j;
}

inline SetPartition partition_from_json(const nlohmann::json& j) {
  auto p = SetPartition::from_blocks(j.at("blocks").get<std::vector<SetPartition::Block>>(),
                                     j.at("k").get<int>(), j.at("l").get<int>());
  if (j.contains("colors") && !j["colors"].is_null()) {
    const auto text = j["colors"].get<std::string>();
    const auto bar = text.find('|');
    if (bar == std::string::npos) throw ParseError("colors need a '|' separator", 0);
    Coloring c;
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (i == bar) continue;
      const char ch = text[i];
      if (ch != 'w' && ch != 'b') throw ParseError("color must be 'w' or 'b'", i);
      (i < bar ? c.upper : c.lower).push_back(ch == 'w' ? Color::white : Color::black);
    }
    p = p.with_colors(std::move(c));
  }
  return p;
}

}  // namespace pcat
