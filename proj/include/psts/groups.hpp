#pragma once

#include <compare>
#include <string>
#include <vector>

namespace psts {

// Element of a direct product of cyclic groups; coords reduced mod each modulus.
struct GroupElem {
  std::vector<int> coords;

  bool operator==(const GroupElem&) const = default;
  auto operator<=>(const GroupElem&) const = default;
};

// Finite abelian group C_{m1} x ... x C_{mk}.
class AbelianGroup {
 public:
  explicit AbelianGroup(std::vector<int> moduli);

  static AbelianGroup cyclic(int m);
  static AbelianGroup trivial();
  // Accepts "c3", "c4", "c3^2", "c3xc4" (case-insensitive).
  static AbelianGroup parse(const std::string& spec);

  long order() const;
  int factors() const { return static_cast<int>(moduli_.size()); }
  const std::vector<int>& moduli() const { return moduli_; }

  GroupElem zero() const;
  GroupElem reduce(std::vector<int> coords) const;
  GroupElem add(const GroupElem& a, const GroupElem& b) const;
  GroupElem neg(const GroupElem& a) const;
  GroupElem scalar_mul(long k, const GroupElem& a) const;
  int element_order(const GroupElem& a) const;

  bool contains(const GroupElem& a) const;
  std::vector<GroupElem> elements() const;  // lexicographic order

  // "0" / "2" for a single cyclic factor, "(1,2)" for products.
  std::string render(const GroupElem& a) const;
  GroupElem parse_elem(const std::string& text) const;

  bool operator==(const AbelianGroup&) const = default;

 private:
  std::vector<int> moduli_;
};

// Units of Z_m as multipliers x -> u*x; the automorphisms of C_m.
// m = 1 yields {0} (the identity map on the trivial group).
std::vector<int> cyclic_units(int m);

}  // namespace psts
