#include "systole/word.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace systole {

int Word::reduce(char base, int e) const {
  int n = base == 'x' ? ox_ : oy_;
  if (n <= 0) return e;
  e %= n;
  if (e < 0) e += n;
  if (2 * e > n) e -= n;
  return e;
}

int Word::letters() const {
  int n = 0;
  for (const auto& t : t_) n += std::abs(t.exp);
  return n;
}

void Word::append(char base, int exp) {
  if (base != 'x' && base != 'y') throw std::invalid_argument("Word: base must be x or y");
  if (!t_.empty() && t_.back().base == base) {
    int e = reduce(base, t_.back().exp + exp);
    if (e == 0)
      t_.pop_back();
    else
      t_.back().exp = e;
    return;
  }
  int e = reduce(base, exp);
  if (e != 0) t_.push_back({base, e});
}

void Word::append(const Word& w) {
  for (const auto& t : w.t_) append(t.base, t.exp);
}

Word Word::inverse() const {
  Word r(ox_, oy_);
  for (auto it = t_.rbegin(); it != t_.rend(); ++it) r.append(it->base, -it->exp);
  return r;
}

std::string Word::to_string() const {
  if (t_.empty()) return "1";
  std::string s;
  for (const auto& t : t_) {
    if (!s.empty()) s += " ";
    s += t.base;
    if (t.exp != 1) s += "^" + std::to_string(t.exp);
  }
  return s;
}

Word Word::parse(const std::string& s, int order_x, int order_y) {
  Word w(order_x, order_y);
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    if (tok == "1") continue;
    char b = tok[0];
    int e = 1;
    if (tok.size() > 1) {
      if (tok[1] != '^') throw std::invalid_argument("Word::parse: bad token " + tok);
      e = std::stoi(tok.substr(2));
    }
    w.append(b, e);
  }
  return w;
}

}  // namespace systole
