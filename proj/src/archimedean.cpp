#include "zetaforge/archimedean.hpp"

#include <string>

#include "zetaforge/error.hpp"

namespace zetaforge {

namespace {

template <typename... Fs>
struct Overload : Fs... {
  using Fs::operator()...;
};
template <typename... Fs>
Overload(Fs...) -> Overload<Fs...>;

long alternating_sum(const std::map<long, long>& dims) {
  long chi = 0;
  for (const auto& [i, d] : dims) chi += (i % 2 == 0 ? d : -d);
  return chi;
}

ParityDims full(std::map<long, long> dims) {
  std::erase_if(dims, [](const auto& kv) { return kv.second == 0; });
  ParityDims p;
  p.euler = alternating_sum(dims);
  p.dims = std::move(dims);
  return p;
}

ParityDims euler_only(long chi) {
  ParityDims p;
  p.euler_only = true;
  p.euler = chi;
  return p;
}

ParityDims sum(const ParityDims& a, const ParityDims& b) {
  if (a.euler_only || b.euler_only) return euler_only(a.euler + b.euler);
  std::map<long, long> dims = a.dims;
  for (const auto& [i, d] : b.dims) dims[i] += d;
  return full(std::move(dims));
}

ParityDims reindexed(const ParityDims& p, long by) {
  if (p.euler_only) return p;
  std::map<long, long> dims;
  for (const auto& [i, d] : p.dims) dims[i + by] = d;
  return full(std::move(dims));
}

// A^r x X at parity `parity` (0 even, 1 odd): X at parity of n - r, degrees + 2r.
ParityDims affine_copy(const EquivariantBetti& base, long r, int parity) {
  const bool even = ((parity + r) % 2) == 0;
  return reindexed(even ? base.even : base.odd, 2 * r);
}

EquivariantBetti strata(const EquivariantBetti& base, const std::vector<long>& ranks) {
  EquivariantBetti out{full({}), full({})};
  for (long r : ranks) {
    out.even = sum(out.even, affine_copy(base, r, 0));
    out.odd = sum(out.odd, affine_copy(base, r, 1));
  }
  return out;
}

long parse_long(const std::string& s) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(s, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != s.size() || s.empty()) throw Error(ErrorCode::InvalidArgument, "bad Hodge index '" + s + "'");
  return v;
}

}  // namespace

EquivariantBetti equivariant_dims(const SchemeExpr& e) {
  return std::visit(
      Overload{
          [](const PointNode&) { return EquivariantBetti{full({}), full({})}; },
          [](const CurveNode&) { return EquivariantBetti{full({}), full({})}; },
          [](const NumberRingNode& x) {
            const long r1 = x.field.r1(), r2 = x.field.r2();
            return EquivariantBetti{full({{0, r1 + r2}}), full({{0, r2}})};
          },
          [](const DisjointNode& x) {
            EquivariantBetti out{full({}), full({})};
            for (const auto& c : x.children) {
              const EquivariantBetti d = equivariant_dims(c);
              out.even = sum(out.even, d.even);
              out.odd = sum(out.odd, d.odd);
            }
            return out;
          },
          [](const GlueNode& x) {
            const EquivariantBetti z = equivariant_dims(x.closed), u = equivariant_dims(x.open);
            return EquivariantBetti{euler_only(z.even.euler + u.even.euler),
                                    euler_only(z.odd.euler + u.odd.euler)};
          },
          [](const MinusNode& x) {
            const EquivariantBetti w = equivariant_dims(x.whole), z = equivariant_dims(x.closed);
            return EquivariantBetti{euler_only(w.even.euler - z.even.euler),
                                    euler_only(w.odd.euler - z.odd.euler)};
          },
          [](const AffineNode& x) { return strata(equivariant_dims(x.base), {x.r}); },
          [](const ProjNode& x) {
            std::vector<long> ranks;
            for (long j = 0; j <= x.r; ++j) ranks.push_back(j);
            return strata(equivariant_dims(x.base), ranks);
          },
          [](const CellularNode& x) { return strata(equivariant_dims(x.base), x.ranks); },
      },
      e->node);
}

long vanishing_order_conjectural(const SchemeExpr& e, long n) { return equivariant_dims(e).for_n(n).euler; }

long secondary_euler_vo(const SchemeExpr& e, long n) {
  const ParityDims p = equivariant_dims(e).for_n(n);
  if (p.euler_only) {
    throw Error(ErrorCode::EulerOnlyData, "per-degree dimensions are not determined below glue or minus nodes");
  }
  auto dim = [&p](long i) {
    const auto it = p.dims.find(i);
    return it == p.dims.end() ? 0L : it->second;
  };
  if (p.dims.empty()) return 0;
  const long lo = p.dims.begin()->first, hi = p.dims.rbegin()->first + 2;
  long total = 0;
  for (long i = lo; i <= hi; ++i) {
    const long rank_w = dim(i - 1) + dim(i - 2);
    total += (i % 2 == 0 ? 1 : -1) * i * rank_w;
  }
  return total;
}

void HodgeData::check() const {
  for (const auto& [pq, h] : hpq) {
    if (h < 0) throw Error(ErrorCode::InvalidArgument, "negative Hodge number");
    if (pq.first < 0 || pq.second < 0) throw Error(ErrorCode::InvalidArgument, "negative Hodge index");
    const auto mirror = hpq.find({pq.second, pq.first});
    if (mirror == hpq.end() || mirror->second != h) {
      throw Error(ErrorCode::InvalidArgument, "h^{p,q} != h^{q,p} at (" + std::to_string(pq.first) + "," +
                                                  std::to_string(pq.second) + ")");
    }
  }
  for (const auto& [p, split] : diag) {
    if (split.first < 0 || split.second < 0) throw Error(ErrorCode::InvalidArgument, "negative h^{p,+-}");
    const auto it = hpq.find({p, p});
    const long hpp = it == hpq.end() ? 0 : it->second;
    if (split.first + split.second != hpp) {
      throw Error(ErrorCode::InvalidArgument, "h^{p,+} + h^{p,-} != h^{p,p} at p = " + std::to_string(p));
    }
  }
  for (const auto& [pq, h] : hpq) {
    if (pq.first == pq.second && h != 0 && !diag.count(pq.first)) {
      throw Error(ErrorCode::InvalidArgument, "missing diagonal splitting at p = " + std::to_string(pq.first));
    }
  }
}

HodgeData HodgeData::from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw Error(ErrorCode::InvalidArgument, "Hodge data must be a JSON object");
  HodgeData h;
  try {
    const nlohmann::json hpq = j.value("hpq", nlohmann::json::object());
    const nlohmann::json diag = j.value("diag", nlohmann::json::object());
    for (const auto& [key, value] : hpq.items()) {
      const auto comma = key.find(',');
      if (comma == std::string::npos) throw Error(ErrorCode::InvalidArgument, "Hodge key '" + key + "' is not 'p,q'");
      h.hpq[{parse_long(key.substr(0, comma)), parse_long(key.substr(comma + 1))}] = value.get<long>();
    }
    for (const auto& [key, value] : diag.items()) {
      if (!value.is_array() || value.size() != 2) {
        throw Error(ErrorCode::InvalidArgument, "diag entries are [h^{p,+}, h^{p,-}]");
      }
      h.diag[parse_long(key)] = {value[0].get<long>(), value[1].get<long>()};
    }
  } catch (const nlohmann::json::exception& ex) {
    throw Error(ErrorCode::InvalidArgument, std::string("malformed Hodge data: ") + ex.what());
  }
  h.check();
  return h;
}

nlohmann::json HodgeData::to_json() const {
  nlohmann::json j;
  j["hpq"] = nlohmann::json::object();
  j["diag"] = nlohmann::json::object();
  for (const auto& [pq, v] : hpq) j["hpq"][std::to_string(pq.first) + "," + std::to_string(pq.second)] = v;
  for (const auto& [p, split] : diag) j["diag"][std::to_string(p)] = {split.first, split.second};
  return j;
}

// Conjugation acts on H^2 of a curve by -1; with the (-1)^{n-p} twist this
// puts the class in h^{1,+}.
HodgeData HodgeData::projective_line() {
  HodgeData h;
  h.hpq = {{{0, 0}, 1}, {{1, 1}, 1}};
  h.diag = {{0, {1, 0}}, {1, {1, 0}}};
  return h;
}

HodgeData HodgeData::elliptic_curve() {
  HodgeData h;
  h.hpq = {{{0, 0}, 1}, {{0, 1}, 1}, {{1, 0}, 1}, {{1, 1}, 1}};
  h.diag = {{0, {1, 0}}, {1, {1, 0}}};
  return h;
}

std::map<long, long> hodge_equivariant_dims(const HodgeData& h, long n) {
  h.check();
  long top = 0;
  for (const auto& [pq, v] : h.hpq) top = std::max(top, pq.first + pq.second);
  std::map<long, long> dims;
  for (long i = 0; i <= top; ++i) dims[i] = 0;
  for (const auto& [p, split] : h.diag) {
    const bool plus = ((n - p) % 2) == 0;
    dims[2 * p] += plus ? split.first : split.second;
  }
  for (const auto& [pq, v] : h.hpq)
    if (pq.first < pq.second) dims[pq.first + pq.second] += v;
  return dims;
}

long gamma_factor_order(const HodgeData& h, long n) {
  h.check();
  auto real_pole = [n](long shift) { return n + shift <= 0 && (n + shift) % 2 == 0; };
  long total = 0;
  for (const auto& [p, split] : h.diag) {
    // Gamma_R(s - p) for h^{p,+}, Gamma_R(s - p + 1) for h^{p,-}; degree 2p is even.
    if (real_pole(-p)) total += split.first;
    if (real_pole(1 - p)) total += split.second;
  }
  for (const auto& [pq, v] : h.hpq) {
    if (pq.first >= pq.second) continue;
    // Gamma_C(s - p) in degree p + q.
    if (n - pq.first <= 0) total += ((pq.first + pq.second) % 2 == 0 ? v : -v);
  }
  return total;
}

}  // namespace zetaforge
