#include "mtcm/cm_structures.hpp"

#include <algorithm>

#include "mtcm/error.hpp"

namespace mtcm {

namespace {

std::vector<Element> sorted_unique(std::vector<Element> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

// Elements of G lying in the listed cosets of `space`.
std::vector<Element> lift(const CosetSpace& space, const std::vector<std::size_t>& cosets) {
  std::vector<bool> wanted(space.size(), false);
  for (std::size_t j : cosets) wanted[j] = true;
  std::vector<Element> out;
  for (Element g = 0; g < space.group()->order(); ++g)
    if (wanted[space.coset_of(g)]) out.push_back(g);
  return out;
}

std::vector<std::size_t> cosets_covered(const CosetSpace& space, const std::vector<Element>& s) {
  std::vector<std::size_t> out;
  for (Element g : s) out.push_back(space.coset_of(g));
  return sorted_unique(std::move(out));
}

CosetSpace trivial_cosets(const GroupPtr& group) {
  return CosetSpace(Subgroup(group, {group->identity()}));
}

}  // namespace

CmType validate_cm_type(const CmFieldDatum& datum, std::vector<std::size_t> phi) {
  std::sort(phi.begin(), phi.end());
  const std::size_t n = datum.sigma.size();
  for (std::size_t j : phi)
    if (j >= n)
      fail(ErrorCode::InvalidIndex, "coset index " + std::to_string(j) + " out of range (" +
                                        std::to_string(n) + " cosets)");
  if (std::adjacent_find(phi.begin(), phi.end()) != phi.end())
    fail(ErrorCode::InvalidIndex, "repeated coset index in phi");
  for (std::size_t j : phi) {
    const std::size_t cj = datum.conjugate(j);
    if (std::binary_search(phi.begin(), phi.end(), cj))
      fail(ErrorCode::NotDisjointFromConjugate,
           "cosets " + std::to_string(j) + " and " + std::to_string(cj) +
               " are complex conjugate and both lie in phi");
  }
  if (phi.size() != datum.g_dim)
    fail(ErrorCode::WrongCardinality, "phi has " + std::to_string(phi.size()) +
                                          " cosets, expected " + std::to_string(datum.g_dim));
  return CmType{datum, std::move(phi)};
}

IntVector hodge_cocharacter(const CmType& t) {
  IntVector mu(t.datum.sigma.size(), 0);
  for (std::size_t j : t.phi) mu[j] = 1;
  return mu;
}

IntVector galois_translate(const CosetSpace& space, Element tau, std::span<const Int> v) {
  space.group()->check_index(tau);
  if (v.size() != space.size())
    fail(ErrorCode::LengthMismatch, "cocharacter has " + std::to_string(v.size()) +
                                        " coordinates, expected " +
                                        std::to_string(space.size()));
  IntVector out(v.size(), 0);
  for (std::size_t j = 0; j < v.size(); ++j) out[space.act(tau, j)] = v[j];
  return out;
}

IntVector galois_translate(const CmType& t, Element tau, std::span<const Int> v) {
  return galois_translate(t.datum.sigma, tau, v);
}

Subgroup reflex_subgroup(const CmType& t) {
  const CosetSpace& sigma = t.datum.sigma;
  std::vector<Element> stab;
  for (Element g = 0; g < t.datum.group->order(); ++g) {
    const bool keeps = std::all_of(t.phi.begin(), t.phi.end(), [&](std::size_t j) {
      return std::binary_search(t.phi.begin(), t.phi.end(), sigma.act(g, j));
    });
    if (keeps) stab.push_back(g);
  }
  return Subgroup(t.datum.group, std::move(stab));
}

ReflexData reflex_type(const CmType& t) {
  const GroupPtr& group = t.datum.group;
  Subgroup h_e = reflex_subgroup(t);

  std::vector<Element> phi_k = lift(t.datum.sigma, t.phi);
  std::vector<Element> phi_k_inv;
  for (Element g : phi_k) phi_k_inv.push_back(group->inverse(g));
  phi_k_inv = sorted_unique(std::move(phi_k_inv));

  for (Element x : phi_k_inv)
    for (Element h : h_e.elements())
      if (!std::binary_search(phi_k_inv.begin(), phi_k_inv.end(), group->mul(x, h)))
        fail(ErrorCode::InternalStabilityViolation,
             "inverse lift of phi is not right stable under H_E (" + std::to_string(x) + "*" +
                 std::to_string(h) + ")");

  const std::size_t reflex_degree = group->order() / h_e.size();
  CmFieldDatum datum_e = validate_cm_datum(group, h_e, t.datum.c);
  std::vector<std::size_t> phi_e = cosets_covered(datum_e.sigma, phi_k_inv);
  if (lift(datum_e.sigma, phi_e) != phi_k_inv)
    fail(ErrorCode::InternalStabilityViolation, "inverse lift of phi is not a union of H_E-cosets");
  CmType type_e = validate_cm_type(datum_e, std::move(phi_e));
  return ReflexData{std::move(h_e), reflex_degree, std::move(type_e), std::move(phi_k),
                    std::move(phi_k_inv)};
}

LatticeMap norm_pushforward(const std::vector<Element>& s_in, const CosetSpace& source,
                            const CosetSpace& target) {
  const GroupPtr& group = source.group();
  if (*target.group() != *group)
    fail(ErrorCode::NotSubgroup, "source and target coset spaces live in different groups");
  for (Element x : s_in) group->check_index(x);
  const std::vector<Element> s = sorted_unique(s_in);
  auto in_s = [&](Element x) { return std::binary_search(s.begin(), s.end(), x); };

  for (Element x : s) {
    for (Element h : source.subgroup().elements())
      if (!in_s(group->mul(x, h)))
        fail(ErrorCode::NotUnionOfCosets,
             "S is not a union of right cosets of the source subgroup");
    for (Element h : target.subgroup().elements())
      if (!in_s(group->mul(h, x)))
        fail(ErrorCode::NotUnionOfCosets,
             "S is not stable under left multiplication by the target subgroup");
  }

  const std::size_t hs = source.subgroup().size();
  IntMatrix m(target.size(), source.size());
  std::vector<Int> weight(group->order());
  for (std::size_t j = 0; j < source.size(); ++j) {
    // Source basis vector j is the sum of tau^vee over tau in the coset; each maps to
    // the sum of (tau sigma^-1)^vee.
    std::fill(weight.begin(), weight.end(), 0);
    for (Element h : source.subgroup().elements()) {
      const Element tau = group->mul(source.rep(j), h);
      for (Element sigma : s) ++weight[group->mul(tau, group->inverse(sigma))];
    }
    for (Element x = 0; x < group->order(); ++x) {
      const std::size_t l = target.coset_of(x);
      if (weight[x] % static_cast<Int>(hs) != 0 ||
          weight[x] != weight[target.rep(l)])
        fail(ErrorCode::InternalStabilityViolation,
             "norm image is not a cocharacter of the target torus");
    }
    for (std::size_t l = 0; l < target.size(); ++l)
      m(l, j) = weight[target.rep(l)] / static_cast<Int>(hs);
  }
  return LatticeMap(source.size(), target.size(), std::move(m));
}

LatticeMap reflex_norm(const CmType& t, const ReflexData& reflex) {
  return norm_pushforward(reflex.phi_k_inverse, trivial_cosets(t.datum.group), t.datum.sigma);
}

LatticeMap norm_to_reflex_field(const CmType& t, const ReflexData& reflex) {
  return norm_pushforward(reflex.h_e.elements(), trivial_cosets(t.datum.group),
                          reflex.phi_e.datum.sigma);
}

LatticeMap reflex_type_norm(const CmType& t, const ReflexData& reflex) {
  const CosetSpace& reflex_cosets = reflex.phi_e.datum.sigma;
  return norm_pushforward(lift(reflex_cosets, reflex.phi_e.phi), reflex_cosets, t.datum.sigma);
}

std::optional<Descent> primitive_descent(const CmType& t) {
  const GroupPtr& group = t.datum.group;
  const std::vector<Element> phi_k = lift(t.datum.sigma, t.phi);
  for (const Subgroup& candidate : overgroups(t.datum.h)) {
    if (candidate.contains(t.datum.c)) continue;
    const bool stable = std::all_of(phi_k.begin(), phi_k.end(), [&](Element x) {
      return std::all_of(candidate.elements().begin(), candidate.elements().end(),
                         [&](Element h) {
                           return std::binary_search(phi_k.begin(), phi_k.end(),
                                                     group->mul(x, h));
                         });
    });
    if (!stable) continue;
    if (candidate.size() == t.datum.h.size()) return std::nullopt;
    CmFieldDatum coarse = validate_cm_datum(group, candidate, t.datum.c);
    std::vector<std::size_t> phi = cosets_covered(coarse.sigma, phi_k);
    CmType descended = validate_cm_type(coarse, std::move(phi));
    return Descent{candidate, std::move(descended)};
  }
  return std::nullopt;
}

LatticeMap fiber_inclusion(const CosetSpace& coarse, const CosetSpace& fine) {
  IntMatrix m(fine.size(), coarse.size());
  for (std::size_t j = 0; j < fine.size(); ++j) {
    const std::size_t parent = coarse.coset_of(fine.rep(j));
    for (Element h : fine.subgroup().elements())
      if (coarse.coset_of(fine.group()->mul(fine.rep(j), h)) != parent)
        fail(ErrorCode::NotSubgroup, "fine subgroup is not contained in the coarse subgroup");
    m(j, parent) = 1;
  }
  return LatticeMap(coarse.size(), fine.size(), std::move(m));
}

}  // namespace mtcm
