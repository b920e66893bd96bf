#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <variant>
#include <vector>

namespace mtcm {

using Element = std::size_t;

inline constexpr std::size_t kDefaultOrderCap = 512;

struct GroupSpec;

struct TableSpec {
  std::vector<std::vector<Element>> table;
};

struct CyclicSpec {
  std::size_t n = 1;
};

struct ProductSpec {
  std::vector<GroupSpec> factors;
};

// Each generator is the image list [p(0), ..., p(m-1)] of a permutation of m points.
struct PermutationSpec {
  std::vector<std::vector<std::size_t>> generators;
};

struct GroupSpec {
  std::variant<TableSpec, CyclicSpec, ProductSpec, PermutationSpec> kind;
  std::string name;  // optional display name
};

GroupSpec cyclic(std::size_t n);
GroupSpec direct_product(std::vector<GroupSpec> factors);
GroupSpec permutations(std::vector<std::vector<std::size_t>> generators);
GroupSpec table(std::vector<std::vector<Element>> mul);
// Dihedral group of order 2n acting on the n-gon: r = (0 1 ... n-1), s = (i -> -i).
GroupSpec dihedral(std::size_t n);
// Dicyclic group of order 4n: <a, x | a^2n, x^2 = a^n, x a x^-1 = a^-1>. n = 2 gives Q8.
GroupSpec dicyclic(std::size_t n);

// A finite group stored as a full multiplication table.
//
// Element 0 need not be the identity for table inputs, but every other
// constructor places the identity at index 0. Instances are immutable.
class FiniteGroup {
 public:
  std::size_t order() const { return mul_.size(); }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return mul_[a][b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  std::size_t element_order(Element a) const;
  bool commutes(Element a, Element b) const { return mul_[a][b] == mul_[b][a]; }
  bool is_central(Element a) const;

  const std::vector<std::vector<Element>>& table() const { return mul_; }
  const std::string& label(Element a) const { return labels_[a]; }
  const std::string& description() const { return description_; }

  void check_index(Element a) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) {
    return a.mul_ == b.mul_ && a.identity_ == b.identity_;
  }

  // Validates closure, identity, inverses and associativity.
  static FiniteGroup from_table(std::vector<std::vector<Element>> mul,
                                std::vector<std::string> labels,
                                std::string description);

 private:
  FiniteGroup() = default;

  std::vector<std::vector<Element>> mul_;
  std::vector<Element> inverse_;
  Element identity_ = 0;
  std::vector<std::string> labels_;
  std::string description_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

GroupPtr make_group(const GroupSpec& spec, std::size_t order_cap = kDefaultOrderCap);

class Subgroup {
 public:
  // Validates that `elements` form a subgroup of `group`.
  Subgroup(GroupPtr group, std::vector<Element> elements);

  const GroupPtr& group() const { return group_; }
  const std::vector<Element>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(Element g) const;

  friend bool operator==(const Subgroup& a, const Subgroup& b) {
    return a.elements_ == b.elements_;
  }

 private:
  GroupPtr group_;
  std::vector<Element> elements_;
};

Subgroup subgroup_closure(const GroupPtr& group, const std::vector<Element>& seeds);

// Every subgroup of `group` containing `base`, sorted by (descending size, element list).
std::vector<Subgroup> overgroups(const Subgroup& base);

// Left cosets gH, indexed in ascending order of their minimal element.
class CosetSpace {
 public:
  explicit CosetSpace(Subgroup h);

  const GroupPtr& group() const { return h_.group(); }
  const Subgroup& subgroup() const { return h_; }
  std::size_t size() const { return rep_.size(); }
  Element rep(std::size_t coset) const { return rep_[coset]; }
  const std::vector<Element>& reps() const { return rep_; }
  std::size_t coset_of(Element g) const { return coset_of_[g]; }
  // Index of g * (coset j).
  std::size_t act(Element g, std::size_t coset) const {
    return coset_of_[group()->mul(g, rep_[coset])];
  }

 private:
  Subgroup h_;
  std::vector<Element> rep_;
  std::vector<std::size_t> coset_of_;
};

// (G, H, c) with c a central involution outside H; G/H models the embeddings of K.
struct CmFieldDatum {
  GroupPtr group;
  Subgroup h;
  Element c;
  CosetSpace sigma;
  std::size_t g_dim;

  std::size_t conjugate(std::size_t coset) const { return sigma.act(c, coset); }
};

CmFieldDatum validate_cm_datum(const GroupPtr& group, const Subgroup& h, Element c);

// Central involutions of `group` not lying in `h`, ascending.
std::vector<Element> central_involutions_outside(const Subgroup& h);

}  // namespace mtcm
