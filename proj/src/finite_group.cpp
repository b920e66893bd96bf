#include "mtcm/finite_group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>

#include "mtcm/error.hpp"

namespace mtcm {

GroupSpec cyclic(std::size_t n) { return GroupSpec{CyclicSpec{n}, {}}; }

GroupSpec direct_product(std::vector<GroupSpec> factors) {
  return GroupSpec{ProductSpec{std::move(factors)}, {}};
}

GroupSpec permutations(std::vector<std::vector<std::size_t>> generators) {
  return GroupSpec{PermutationSpec{std::move(generators)}, {}};
}

GroupSpec table(std::vector<std::vector<Element>> mul) {
  return GroupSpec{TableSpec{std::move(mul)}, {}};
}

GroupSpec dihedral(std::size_t n) {
  std::vector<std::size_t> r(n), s(n);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = (i + 1) % n;
    s[i] = (n - i) % n;
  }
  GroupSpec spec = permutations({r, s});
  spec.name = "D" + std::to_string(n);
  return spec;
}

GroupSpec dicyclic(std::size_t n) {
  // Element a^k x^e is stored at index e * 2n + k.
  const std::size_t m = 2 * n;
  const std::size_t order = 2 * m;
  std::vector<std::vector<Element>> mul(order, std::vector<Element>(order));
  for (std::size_t e1 = 0; e1 < 2; ++e1)
    for (std::size_t k1 = 0; k1 < m; ++k1)
      for (std::size_t e2 = 0; e2 < 2; ++e2)
        for (std::size_t k2 = 0; k2 < m; ++k2) {
          std::size_t k = 0, e = 0;
          if (e1 == 0) {
            k = (k1 + k2) % m;
            e = e2;
          } else if (e2 == 0) {
            k = (k1 + m - k2) % m;
            e = 1;
          } else {
            k = (k1 + m - k2 + n) % m;
            e = 0;
          }
          mul[e1 * m + k1][e2 * m + k2] = e * m + k;
        }
  GroupSpec spec = table(std::move(mul));
  spec.name = n == 2 ? "Q8" : "Dic" + std::to_string(order);
  return spec;
}

std::size_t FiniteGroup::element_order(Element a) const {
  check_index(a);
  std::size_t k = 1;
  for (Element x = a; x != identity_; x = mul_[x][a]) ++k;
  return k;
}

bool FiniteGroup::is_central(Element a) const {
  check_index(a);
  for (Element b = 0; b < order(); ++b)
    if (!commutes(a, b)) return false;
  return true;
}

void FiniteGroup::check_index(Element a) const {
  if (a >= order())
    fail(ErrorCode::InvalidIndex,
         "element " + std::to_string(a) + " out of range for group of order " +
             std::to_string(order()));
}

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<Element>> mul,
                                    std::vector<std::string> labels,
                                    std::string description) {
  const std::size_t n = mul.size();
  if (n == 0) fail(ErrorCode::InvalidTable, "empty multiplication table");
  for (const auto& row : mul) {
    if (row.size() != n) fail(ErrorCode::InvalidTable, "table is not square");
    for (Element x : row)
      if (x >= n)
        fail(ErrorCode::NotClosed, "table entry " + std::to_string(x) + " out of range");
  }

  std::optional<Element> identity;
  for (Element e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (Element x = 0; x < n && ok; ++x) ok = mul[e][x] == x && mul[x][e] == x;
    if (ok) identity = e;
  }
  if (!identity) fail(ErrorCode::InvalidTable, "no two-sided identity");

  std::vector<Element> inverse(n, n);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (mul[a][b] != *identity) continue;
      if (inverse[a] != n)
        fail(ErrorCode::InvalidTable, "element " + std::to_string(a) + " has two inverses");
      inverse[a] = b;
    }
    if (inverse[a] == n || mul[inverse[a]][a] != *identity)
      fail(ErrorCode::InvalidTable, "element " + std::to_string(a) + " has no inverse");
  }

  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) {
      const Element ab = mul[a][b];
      for (Element c = 0; c < n; ++c)
        if (mul[ab][c] != mul[a][mul[b][c]])
          fail(ErrorCode::NotAssociative,
               "(" + std::to_string(a) + "*" + std::to_string(b) + ")*" +
                   std::to_string(c) + " differs");
    }

  if (labels.size() != n) {
    labels.resize(n);
    for (Element a = 0; a < n; ++a) labels[a] = std::to_string(a);
  }

  FiniteGroup g;
  g.mul_ = std::move(mul);
  g.inverse_ = std::move(inverse);
  g.identity_ = *identity;
  g.labels_ = std::move(labels);
  g.description_ = std::move(description);
  return g;
}

namespace {

void check_cap(std::size_t order, std::size_t cap) {
  if (order > cap)
    fail(ErrorCode::OrderCapExceeded,
         "group order " + std::to_string(order) + " exceeds cap " + std::to_string(cap));
}

std::string cycle_notation(const std::vector<std::size_t>& p) {
  std::vector<bool> seen(p.size(), false);
  std::ostringstream out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out << '(';
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      if (j != i) out << ' ';
      out << j;
      seen[j] = true;
    }
    out << ')';
  }
  const std::string s = out.str();
  return s.empty() ? "()" : s;
}

FiniteGroup build(const GroupSpec& spec, std::size_t cap);

FiniteGroup build_cyclic(std::size_t n, std::size_t cap) {
  if (n == 0) fail(ErrorCode::InvalidTable, "cyclic group of order 0");
  check_cap(n, cap);
  std::vector<std::vector<Element>> mul(n, std::vector<Element>(n));
  std::vector<std::string> labels(n);
  for (Element a = 0; a < n; ++a) {
    labels[a] = std::to_string(a);
    for (Element b = 0; b < n; ++b) mul[a][b] = (a + b) % n;
  }
  return FiniteGroup::from_table(std::move(mul), std::move(labels), "C" + std::to_string(n));
}

FiniteGroup build_product(const ProductSpec& spec, std::size_t cap) {
  std::vector<FiniteGroup> factors;
  std::size_t order = 1;
  for (const auto& f : spec.factors) {
    factors.push_back(build(f, cap));
    order *= factors.back().order();
    check_cap(order, cap);
  }

  // Lexicographic tuples, first factor most significant.
  std::vector<std::vector<Element>> tuples(order);
  for (std::size_t idx = 0; idx < order; ++idx) {
    std::vector<Element> t(factors.size());
    std::size_t rest = idx;
    for (std::size_t k = factors.size(); k-- > 0;) {
      t[k] = rest % factors[k].order();
      rest /= factors[k].order();
    }
    tuples[idx] = std::move(t);
  }
  auto encode = [&](const std::vector<Element>& t) {
    std::size_t idx = 0;
    for (std::size_t k = 0; k < factors.size(); ++k) idx = idx * factors[k].order() + t[k];
    return idx;
  };

  std::vector<std::vector<Element>> mul(order, std::vector<Element>(order));
  std::vector<Element> prod(factors.size());
  for (std::size_t a = 0; a < order; ++a)
    for (std::size_t b = 0; b < order; ++b) {
      for (std::size_t k = 0; k < factors.size(); ++k)
        prod[k] = factors[k].mul(tuples[a][k], tuples[b][k]);
      mul[a][b] = encode(prod);
    }

  std::vector<std::string> labels(order);
  for (std::size_t a = 0; a < order; ++a) {
    std::string s = "(";
    for (std::size_t k = 0; k < factors.size(); ++k) {
      if (k) s += ',';
      s += factors[k].label(tuples[a][k]);
    }
    labels[a] = s + ")";
  }
  std::string description;
  for (std::size_t k = 0; k < factors.size(); ++k) {
    if (k) description += 'x';
    description += factors[k].description();
  }
  if (factors.empty()) description = "C1";
  return FiniteGroup::from_table(std::move(mul), std::move(labels), std::move(description));
}

FiniteGroup build_permutations(const PermutationSpec& spec, std::size_t cap) {
  const std::size_t degree = spec.generators.empty() ? 0 : spec.generators.front().size();
  for (const auto& g : spec.generators) {
    if (g.size() != degree)
      fail(ErrorCode::InvalidTable, "permutation generators have different degrees");
    std::vector<bool> hit(degree, false);
    for (std::size_t x : g) {
      if (x >= degree || hit[x])
        fail(ErrorCode::InvalidTable, "generator is not a permutation of 0.." +
                                          std::to_string(degree == 0 ? 0 : degree - 1));
      hit[x] = true;
    }
  }

  using Perm = std::vector<std::size_t>;
  auto compose = [](const Perm& p, const Perm& q) {  // p o q
    Perm r(q.size());
    for (std::size_t i = 0; i < q.size(); ++i) r[i] = p[q[i]];
    return r;
  };

  Perm id(degree);
  std::iota(id.begin(), id.end(), std::size_t{0});
  std::vector<Perm> elements{id};
  std::map<Perm, Element> index{{id, 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (const auto& g : spec.generators) {
      Perm y = compose(elements[head], g);
      if (index.contains(y)) continue;
      index.emplace(y, elements.size());
      elements.push_back(std::move(y));
      check_cap(elements.size(), cap);
    }
  }

  const std::size_t n = elements.size();
  std::vector<std::vector<Element>> mul(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) mul[a][b] = index.at(compose(elements[a], elements[b]));
  std::vector<std::string> labels(n);
  for (Element a = 0; a < n; ++a) labels[a] = cycle_notation(elements[a]);
  return FiniteGroup::from_table(std::move(mul), std::move(labels),
                                 "Perm" + std::to_string(n));
}

FiniteGroup build(const GroupSpec& spec, std::size_t cap) {
  FiniteGroup g = std::visit(
      [&](const auto& s) -> FiniteGroup {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, CyclicSpec>) {
          return build_cyclic(s.n, cap);
        } else if constexpr (std::is_same_v<T, ProductSpec>) {
          return build_product(s, cap);
        } else if constexpr (std::is_same_v<T, PermutationSpec>) {
          return build_permutations(s, cap);
        } else {
          check_cap(s.table.size(), cap);
          return FiniteGroup::from_table(s.table, {},
                                         "Table" + std::to_string(s.table.size()));
        }
      },
      spec.kind);
  if (!spec.name.empty()) {
    std::vector<std::string> labels;
    for (Element a = 0; a < g.order(); ++a) labels.push_back(g.label(a));
    g = FiniteGroup::from_table(g.table(), std::move(labels), spec.name);
  }
  return g;
}

}  // namespace

GroupPtr make_group(const GroupSpec& spec, std::size_t order_cap) {
  return std::make_shared<const FiniteGroup>(build(spec, order_cap));
}

Subgroup::Subgroup(GroupPtr group, std::vector<Element> elements)
    : group_(std::move(group)), elements_(std::move(elements)) {
  for (Element x : elements_) group_->check_index(x);
  if (!std::is_sorted(elements_.begin(), elements_.end()) ||
      std::adjacent_find(elements_.begin(), elements_.end()) != elements_.end())
    fail(ErrorCode::NotSubgroup, "subgroup elements must be strictly increasing");
  if (!contains(group_->identity()))
    fail(ErrorCode::NotSubgroup, "subgroup does not contain the identity");
  for (Element a : elements_)
    for (Element b : elements_)
      if (!contains(group_->mul(a, b)))
        fail(ErrorCode::NotSubgroup, "subgroup not closed: " + std::to_string(a) + "*" +
                                         std::to_string(b));
}

bool Subgroup::contains(Element g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

Subgroup subgroup_closure(const GroupPtr& group, const std::vector<Element>& seeds) {
  for (Element s : seeds) group->check_index(s);
  std::vector<bool> member(group->order(), false);
  std::vector<Element> found{group->identity()};
  member[group->identity()] = true;
  for (std::size_t head = 0; head < found.size(); ++head)
    for (Element s : seeds) {
      const Element y = group->mul(found[head], s);
      if (!member[y]) {
        member[y] = true;
        found.push_back(y);
      }
    }
  std::sort(found.begin(), found.end());
  return Subgroup(group, std::move(found));
}

std::vector<Subgroup> overgroups(const Subgroup& base) {
  const GroupPtr& group = base.group();
  std::set<std::vector<Element>> seen{base.elements()};
  std::vector<Subgroup> out{base};
  for (std::size_t head = 0; head < out.size(); ++head) {
    const std::vector<Element> current = out[head].elements();
    for (Element g = 0; g < group->order(); ++g) {
      if (out[head].contains(g)) continue;
      std::vector<Element> seeds = current;
      seeds.push_back(g);
      Subgroup next = subgroup_closure(group, seeds);
      if (seen.insert(next.elements()).second) out.push_back(std::move(next));
    }
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a.elements() < b.elements();
  });
  return out;
}

CosetSpace::CosetSpace(Subgroup h) : h_(std::move(h)) {
  const GroupPtr& g = h_.group();
  constexpr std::size_t unset = static_cast<std::size_t>(-1);
  coset_of_.assign(g->order(), unset);
  for (Element x = 0; x < g->order(); ++x) {
    if (coset_of_[x] != unset) continue;
    const std::size_t idx = rep_.size();
    rep_.push_back(x);
    for (Element y : h_.elements()) coset_of_[g->mul(x, y)] = idx;
  }
}

CmFieldDatum validate_cm_datum(const GroupPtr& group, const Subgroup& h, Element c) {
  group->check_index(c);
  if (*h.group() != *group)
    fail(ErrorCode::NotSubgroup, "H is not a subgroup of the given group");
  if (c == group->identity() || group->mul(c, c) != group->identity())
    fail(ErrorCode::NotInvolution, "element " + std::to_string(c) + " has order " +
                                       std::to_string(group->element_order(c)));
  if (!group->is_central(c))
    fail(ErrorCode::NotCentral, "element " + std::to_string(c) + " is not central");
  if (h.contains(c))
    fail(ErrorCode::ConjugationFixesField,
         "complex conjugation " + std::to_string(c) + " lies in H");
  CosetSpace sigma(h);
  if (sigma.size() % 2 != 0)
    fail(ErrorCode::OddCosetCount, std::to_string(sigma.size()) + " cosets");
  const std::size_t g_dim = sigma.size() / 2;
  return CmFieldDatum{group, h, c, std::move(sigma), g_dim};
}

std::vector<Element> central_involutions_outside(const Subgroup& h) {
  const GroupPtr& group = h.group();
  std::vector<Element> out;
  for (Element c = 0; c < group->order(); ++c)
    if (c != group->identity() && group->mul(c, c) == group->identity() &&
        group->is_central(c) && !h.contains(c))
      out.push_back(c);
  return out;
}

}  // namespace mtcm
