#pragma once

#include <string>
#include <vector>

namespace systole {

struct Token {
  char base;  // 'x' or 'y'
  int exp;
  bool operator==(const Token&) const = default;
};

// Word in x, y with exponents reduced into the symmetric range mod the orders.
class Word {
 public:
  Word() = default;
  Word(int order_x, int order_y) : ox_(order_x), oy_(order_y) {}

  const std::vector<Token>& tokens() const { return t_; }
  bool empty() const { return t_.empty(); }
  int letters() const;
  int order_x() const { return ox_; }
  int order_y() const { return oy_; }

  void append(char base, int exp);
  void append(const Word& w);
  Word inverse() const;
  std::string to_string() const;  // "x y^-1 x y^2"; "1" for the empty word
  static Word parse(const std::string& s, int order_x, int order_y);
  bool operator==(const Word& o) const { return t_ == o.t_; }

 private:
  int reduce(char base, int e) const;
  int ox_ = 0, oy_ = 0;
  std::vector<Token> t_;
};

}  // namespace systole
