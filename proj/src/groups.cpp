#include "psts/groups.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace psts {

AbelianGroup::AbelianGroup(std::vector<int> moduli) : moduli_(std::move(moduli)) {
  if (moduli_.empty()) throw std::invalid_argument("group needs at least one cyclic factor");
  for (int m : moduli_)
    if (m < 1) throw std::invalid_argument("cyclic factor modulus must be >= 1");
}

AbelianGroup AbelianGroup::cyclic(int m) { return AbelianGroup(std::vector<int>{m}); }

AbelianGroup AbelianGroup::trivial() { return cyclic(1); }

AbelianGroup AbelianGroup::parse(const std::string& spec) {
  std::string s;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(static_cast<char>(std::tolower(c)));
  std::vector<int> moduli;
  size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] != 'c') throw std::invalid_argument("bad group spec: " + spec);
    ++pos;
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (start == pos) throw std::invalid_argument("bad group spec: " + spec);
    int m = std::stoi(s.substr(start, pos - start));
    int rep = 1;
    if (pos < s.size() && s[pos] == '^') {
      ++pos;
      start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (start == pos) throw std::invalid_argument("bad group spec: " + spec);
      rep = std::stoi(s.substr(start, pos - start));
    }
    for (int i = 0; i < rep; ++i) moduli.push_back(m);
    if (pos < s.size()) {
      if (s[pos] != 'x') throw std::invalid_argument("bad group spec: " + spec);
      ++pos;
    }
  }
  return AbelianGroup(std::move(moduli));
}

long AbelianGroup::order() const {
  long n = 1;
  for (int m : moduli_) n *= m;
  return n;
}

GroupElem AbelianGroup::zero() const { return GroupElem{std::vector<int>(moduli_.size(), 0)}; }

GroupElem AbelianGroup::reduce(std::vector<int> coords) const {
  if (coords.size() != moduli_.size()) throw std::invalid_argument("coordinate count mismatch");
  for (size_t i = 0; i < coords.size(); ++i) {
    coords[i] %= moduli_[i];
    if (coords[i] < 0) coords[i] += moduli_[i];
  }
  return GroupElem{std::move(coords)};
}

bool AbelianGroup::contains(const GroupElem& a) const {
  if (a.coords.size() != moduli_.size()) return false;
  for (size_t i = 0; i < moduli_.size(); ++i)
    if (a.coords[i] < 0 || a.coords[i] >= moduli_[i]) return false;
  return true;
}

static void check_member(const AbelianGroup& g, const GroupElem& a) {
  if (!g.contains(a)) throw std::invalid_argument("element does not belong to this group");
}

GroupElem AbelianGroup::add(const GroupElem& a, const GroupElem& b) const {
  check_member(*this, a);
  check_member(*this, b);
  std::vector<int> c(moduli_.size());
  for (size_t i = 0; i < moduli_.size(); ++i) c[i] = (a.coords[i] + b.coords[i]) % moduli_[i];
  return GroupElem{std::move(c)};
}

GroupElem AbelianGroup::neg(const GroupElem& a) const {
  check_member(*this, a);
  std::vector<int> c(moduli_.size());
  for (size_t i = 0; i < moduli_.size(); ++i) c[i] = a.coords[i] == 0 ? 0 : moduli_[i] - a.coords[i];
  return GroupElem{std::move(c)};
}

GroupElem AbelianGroup::scalar_mul(long k, const GroupElem& a) const {
  check_member(*this, a);
  std::vector<int> c(moduli_.size());
  for (size_t i = 0; i < moduli_.size(); ++i) {
    long v = (k % moduli_[i]) * a.coords[i] % moduli_[i];
    if (v < 0) v += moduli_[i];
    c[i] = static_cast<int>(v);
  }
  return GroupElem{std::move(c)};
}

int AbelianGroup::element_order(const GroupElem& a) const {
  check_member(*this, a);
  int n = 1;
  for (size_t i = 0; i < moduli_.size(); ++i) {
    int g = std::gcd(a.coords[i], moduli_[i]);
    n = std::lcm(n, moduli_[i] / g);
  }
  return n;
}

std::vector<GroupElem> AbelianGroup::elements() const {
  std::vector<GroupElem> out;
  std::vector<int> cur(moduli_.size(), 0);
  for (;;) {
    out.push_back(GroupElem{cur});
    int i = static_cast<int>(moduli_.size()) - 1;
    while (i >= 0) {
      if (++cur[i] < moduli_[i]) break;
      cur[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  return out;
}

std::string AbelianGroup::render(const GroupElem& a) const {
  check_member(*this, a);
  if (moduli_.size() == 1) return std::to_string(a.coords[0]);
  std::ostringstream os;
  os << '(';
  for (size_t i = 0; i < a.coords.size(); ++i) {
    if (i) os << ',';
    os << a.coords[i];
  }
  os << ')';
  return os.str();
}

GroupElem AbelianGroup::parse_elem(const std::string& text) const {
  std::vector<int> coords;
  if (!text.empty() && text.front() == '(') {
    if (text.back() != ')') throw std::invalid_argument("bad group element: " + text);
    std::string inner = text.substr(1, text.size() - 2);
    std::istringstream is(inner);
    std::string tok;
    while (std::getline(is, tok, ',')) coords.push_back(std::stoi(tok));
  } else {
    coords.push_back(std::stoi(text));
  }
  if (coords.size() != moduli_.size()) throw std::invalid_argument("bad group element: " + text);
  GroupElem e{std::move(coords)};
  if (!contains(e)) throw std::invalid_argument("group element out of range: " + text);
  return e;
}

std::vector<int> cyclic_units(int m) {
  if (m < 1) throw std::invalid_argument("modulus must be >= 1");
  if (m == 1) return {0};
  std::vector<int> units;
  for (int u = 1; u < m; ++u)
    if (std::gcd(u, m) == 1) units.push_back(u);
  return units;
}

}  // namespace psts
