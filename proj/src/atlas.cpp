#include "mtcm/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>
#include <tuple>

#include "mtcm/error.hpp"
#include "mtcm/mumford_tate.hpp"

namespace mtcm {

std::vector<CmType> enumerate_cm_types(const CmFieldDatum& datum, bool dedupe) {
  if (datum.g_dim > kMaxEnumerationGDim)
    fail(ErrorCode::CapExceeded, "g = " + std::to_string(datum.g_dim) + " exceeds enumeration cap " +
                                     std::to_string(kMaxEnumerationGDim));
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 0; j < datum.sigma.size(); ++j) {
    const std::size_t cj = datum.conjugate(j);
    if (j < cj) pairs.emplace_back(j, cj);
  }

  std::vector<std::vector<std::size_t>> phis;
  const std::size_t count = std::size_t{1} << pairs.size();
  phis.reserve(count);
  for (std::size_t mask = 0; mask < count; ++mask) {
    std::vector<std::size_t> phi;
    for (std::size_t k = 0; k < pairs.size(); ++k)
      phi.push_back((mask >> k) & 1 ? pairs[k].second : pairs[k].first);
    std::sort(phi.begin(), phi.end());
    phis.push_back(std::move(phi));
  }
  std::sort(phis.begin(), phis.end());

  std::vector<CmType> out;
  for (auto& phi : phis) {
    if (dedupe) {
      bool least = true;
      for (Element s = 0; s < datum.group->order() && least; ++s) {
        std::vector<std::size_t> moved;
        for (std::size_t j : phi) moved.push_back(datum.sigma.act(s, j));
        std::sort(moved.begin(), moved.end());
        least = !(moved < phi);
      }
      if (!least) continue;
    }
    out.push_back(CmType{datum, std::move(phi)});
  }
  return out;
}

Family parse_family(const std::string& name) {
  if (name == "cyclic") return Family::Cyclic;
  if (name == "abelian-products" || name == "abelian") return Family::AbelianProducts;
  if (name == "dihedral") return Family::Dihedral;
  if (name == "dicyclic") return Family::Dicyclic;
  fail(ErrorCode::ParseError, "unknown family '" + name + "'");
}

std::string family_name(Family family) {
  switch (family) {
    case Family::Cyclic: return "cyclic";
    case Family::AbelianProducts: return "abelian-products";
    case Family::Dihedral: return "dihedral";
    case Family::Dicyclic: return "dicyclic";
  }
  return "unknown";
}

namespace {

// Invariant-factor chains n1 | n2 | ... | nk with n1 >= 2 and k >= 2.
void divisor_chains(std::size_t bound, std::vector<std::size_t>& prefix, std::size_t product,
                    std::vector<std::vector<std::size_t>>& out) {
  if (prefix.size() >= 2) out.push_back(prefix);
  const std::size_t step = prefix.empty() ? 1 : prefix.back();
  for (std::size_t next = prefix.empty() ? 2 : step; product * next <= bound; next += step) {
    prefix.push_back(next);
    divisor_chains(bound, prefix, product * next, out);
    prefix.pop_back();
  }
}

}  // namespace

std::vector<GroupSpec> family_members(Family family, std::size_t order_bound) {
  std::vector<GroupSpec> out;
  switch (family) {
    case Family::Cyclic:
      for (std::size_t n = 1; n <= order_bound; ++n) out.push_back(cyclic(n));
      break;
    case Family::AbelianProducts: {
      std::vector<std::vector<std::size_t>> chains;
      std::vector<std::size_t> prefix;
      divisor_chains(order_bound, prefix, 1, chains);
      auto product = [](const std::vector<std::size_t>& c) {
        std::size_t p = 1;
        for (std::size_t x : c) p *= x;
        return p;
      };
      std::sort(chains.begin(), chains.end(), [&](const auto& a, const auto& b) {
        return std::pair(product(a), a) < std::pair(product(b), b);
      });
      for (const auto& chain : chains) {
        std::vector<GroupSpec> factors;
        for (std::size_t n : chain) factors.push_back(cyclic(n));
        out.push_back(direct_product(std::move(factors)));
      }
      break;
    }
    case Family::Dihedral:
      for (std::size_t n = 3; 2 * n <= order_bound; ++n) out.push_back(dihedral(n));
      break;
    case Family::Dicyclic:
      for (std::size_t n = 2; 4 * n <= order_bound; ++n) out.push_back(dicyclic(n));
      break;
  }
  return out;
}

std::vector<CmFieldDatum> admissible_data(const GroupPtr& group, bool all_subfields) {
  const Subgroup trivial(group, {group->identity()});
  std::vector<Subgroup> subgroups;
  if (all_subfields) {
    subgroups = overgroups(trivial);
    std::sort(subgroups.begin(), subgroups.end(), [](const Subgroup& a, const Subgroup& b) {
      return a.elements() < b.elements();
    });
  } else {
    subgroups.push_back(trivial);
  }
  std::vector<CmFieldDatum> out;
  for (const Subgroup& h : subgroups)
    for (Element c : central_involutions_outside(h)) out.push_back(validate_cm_datum(group, h, c));
  return out;
}

std::string encode_phi(const std::vector<std::size_t>& phi) {
  std::string s;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (i) s += '+';
    s += std::to_string(phi[i]);
  }
  return s;
}

std::string datum_description(const CmFieldDatum& datum) {
  return datum.group->description() + "|H=" + encode_phi(datum.h.elements()) +
         "|c=" + std::to_string(datum.c);
}

AtlasRecord atlas_record(const CmType& t) {
  AtlasRecord rec;
  rec.group = datum_description(t.datum);
  rec.order = t.datum.group->order();
  rec.g = t.datum.g_dim;
  rec.phi = t.phi;
  try {
    const MtReport report = check_main_theorem(t);
    rec.mt_rank = report.mt_rank;
    rec.degenerate = report.degenerate;
    rec.reflex_degree = report.reflex.reflex_degree;
    rec.primitive = !primitive_descent(t).has_value();
    rec.theorem = report.theorem_holds;
    rec.factorization = report.factorization_holds;
    std::string joined;
    for (const auto& v : report.violations) joined += (joined.empty() ? "" : "; ") + v;
    rec.error = joined;
  } catch (const Error& e) {
    rec.error = e.what();
  }
  return rec;
}

std::vector<AtlasRecord> tabulate_data(const std::vector<CmFieldDatum>& data,
                                       const AtlasOptions& options) {
  std::vector<CmType> jobs;
  for (const auto& datum : data)
    for (auto& t : enumerate_cm_types(datum, options.dedupe)) jobs.push_back(std::move(t));

  std::vector<AtlasRecord> records(jobs.size());
  std::size_t threads = options.threads ? options.threads : std::thread::hardware_concurrency();
  threads = std::clamp<std::size_t>(threads, 1, std::max<std::size_t>(jobs.size(), 1));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) records[i] = atlas_record(jobs[i]);
  };
  {
    std::vector<std::jthread> pool;
    for (std::size_t k = 1; k < threads; ++k) pool.emplace_back(worker);
    worker();
  }

  std::stable_sort(records.begin(), records.end(), [](const AtlasRecord& a, const AtlasRecord& b) {
    return std::tie(a.group, a.phi) < std::tie(b.group, b.phi);
  });
  return records;
}

std::vector<AtlasRecord> tabulate_family(Family family, std::size_t order_bound,
                                         const AtlasOptions& options) {
  if (order_bound > options.order_cap)
    fail(ErrorCode::OrderCapExceeded, "order bound " + std::to_string(order_bound) +
                                          " exceeds group cap " +
                                          std::to_string(options.order_cap));
  std::vector<CmFieldDatum> data;
  for (const GroupSpec& spec : family_members(family, order_bound)) {
    const GroupPtr group = make_group(spec, options.order_cap);
    for (auto& d : admissible_data(group, options.all_subfields)) data.push_back(std::move(d));
  }
  return tabulate_data(data, options);
}

std::string atlas_csv(const std::vector<AtlasRecord>& records) {
  std::ostringstream out;
  out << "group,order,g,phi,mt_rank,degenerate,reflex_degree,primitive,theorem,factorization,"
         "error\n";
  auto b = [](bool x) { return x ? "true" : "false"; };
  for (const auto& r : records) {
    std::string error = r.error;
    // Keep the CSV one-record-per-line without quoting rules.
    std::replace(error.begin(), error.end(), ',', ';');
    std::replace(error.begin(), error.end(), '\n', ' ');
    out << r.group << ',' << r.order << ',' << r.g << ',' << encode_phi(r.phi) << ','
        << r.mt_rank << ',' << b(r.degenerate) << ',' << r.reflex_degree << ','
        << b(r.primitive) << ',' << b(r.theorem) << ',' << b(r.factorization) << ',' << error
        << '\n';
  }
  return out.str();
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(ErrorCode::IoError, "cannot open " + tmp.string() + " for writing");
    out << content;
    out.flush();
    if (!out) fail(ErrorCode::IoError, "failed writing " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace mtcm
