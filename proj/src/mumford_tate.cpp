#include "mtcm/mumford_tate.hpp"

#include "mtcm/error.hpp"

namespace mtcm {

namespace {

std::vector<IntVector> mu_orbit(const CmType& t) {
  const IntVector mu = hodge_cocharacter(t);
  std::vector<IntVector> orbit;
  for (Element s = 0; s < t.datum.group->order(); ++s)
    orbit.push_back(galois_translate(t, s, mu));
  return orbit;
}

std::string format_vector(const IntVector& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace

IntegerLattice mt_lattice(const CmType& t) {
  return saturate(hnf_canonical(mu_orbit(t), t.datum.sigma.size()));
}

LatticeMap reflex_route_map(const CmType& t, const ReflexData& reflex) {
  return compose(reflex_type_norm(t, reflex), norm_to_reflex_field(t, reflex));
}

IntegerLattice t0_lattice(const CmType& t, const ReflexData& reflex) {
  return saturate(reflex_route_map(t, reflex).image());
}

IntegerLattice t0_lattice(const CmType& t) { return t0_lattice(t, reflex_type(t)); }

MtReport check_main_theorem(const CmType& t) {
  ReflexData reflex = reflex_type(t);
  IntegerLattice mt = mt_lattice(t);
  const LatticeMap route = reflex_route_map(t, reflex);
  IntegerLattice t0 = saturate(route.image());
  const LatticeMap psi = reflex_norm(t, reflex);

  std::vector<std::string> violations;
  const bool theorem = lattice_equal(mt, t0);
  if (!theorem) violations.push_back("MT lattice differs from T0 lattice");
  const bool factorization = psi == route;
  if (!factorization)
    violations.push_back("reflex norm differs from N_PhiE o N_k/E as an integer matrix");

  bool columns = true;
  const IntVector mu = hodge_cocharacter(t);
  for (Element tau = 0; tau < t.datum.group->order(); ++tau) {
    const IntVector expected = galois_translate(t, tau, mu);
    const IntVector got = psi.matrix().column(tau);
    if (got != expected) {
      columns = false;
      violations.push_back("column " + std::to_string(tau) + ": psi gives " +
                           format_vector(got) + ", translate of mu gives " +
                           format_vector(expected));
    }
  }

  const std::size_t r = mt.rank();
  const bool degenerate = r < t.datum.g_dim + 1;
  return MtReport{t,          std::move(mt), std::move(t0), r,      degenerate, std::move(reflex),
                  theorem,    factorization, columns,       std::move(violations)};
}

std::uint64_t WeightMultiset::total() const {
  std::uint64_t s = 0;
  for (const auto& [w, mult] : entries) s += mult;
  return s;
}

WeightMultiset motive_weights(const CmType& t, std::size_t m, std::size_t n, Int r,
                              std::uint64_t cap) {
  const std::size_t dim = t.datum.sigma.size();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < m + n; ++i) {
    if (count > cap / dim)
      fail(ErrorCode::CapExceeded, "V(" + std::to_string(m) + "," + std::to_string(n) +
                                       ",r) has more than " + std::to_string(cap) + " weights");
    count *= dim;
  }
  if (count > cap) fail(ErrorCode::CapExceeded, "weight count exceeds cap");

  IntVector start(dim + 1, 0);
  start[dim] = r;
  std::map<IntVector, std::uint64_t> current{{start, 1}};
  auto tensor = [&](Int sign) {
    std::map<IntVector, std::uint64_t> next;
    for (const auto& [w, mult] : current)
      for (std::size_t j = 0; j < dim; ++j) {
        IntVector x = w;
        x[j] = checked_add(x[j], sign);
        next[std::move(x)] += mult;
      }
    current = std::move(next);
  };
  for (std::size_t i = 0; i < m; ++i) tensor(+1);
  for (std::size_t i = 0; i < n; ++i) tensor(-1);
  return WeightMultiset{m, n, r, std::move(current)};
}

IntegerLattice extended_lattice(const CmType& t, ClassRoute route) {
  std::vector<IntVector> gens;
  if (route == ClassRoute::Hodge) {
    gens = mu_orbit(t);
  } else {
    const LatticeMap map = reflex_route_map(t, reflex_type(t));
    for (std::size_t j = 0; j < map.source_rank(); ++j) gens.push_back(map.matrix().column(j));
  }
  for (auto& g : gens) g.push_back(1);
  return saturate(hnf_canonical(gens, t.datum.sigma.size() + 1));
}

std::uint64_t invariant_class_dimension(const CmType& t, std::size_t m, std::size_t n, Int r,
                                        ClassRoute route, std::uint64_t cap) {
  const WeightMultiset weights = motive_weights(t, m, n, r, cap);
  const IntegerLattice lattice = extended_lattice(t, route);
  std::uint64_t dim = 0;
  for (const auto& [w, mult] : weights.entries) {
    bool invariant = true;
    for (std::size_t i = 0; i < lattice.rank() && invariant; ++i)
      invariant = pair(w, lattice.basis().row(i)) == 0;
    if (invariant) dim += mult;
  }
  return dim;
}

}  // namespace mtcm
